//! Extra verification-layer examples: Sergeev generator families with their
//! restriction-surjectivity checks, centre conditions, and the module action
//! of the centre on ghost images.

use superhc::hc::PairContext;
use superhc::liealg::AlgFamily;
use superhc::poly::{univariate_from_roots, Polynomial};
use superhc::scalar::Gq;
use superhc::verify::{check_center_conditions, same_poly_span, sergeev_generators};

#[test]
fn sergeev_families() {
    // gl(2|1), k = 1: ε1 + ε2 - δ1
    let gens = sergeev_generators(AlgFamily::Gl, 2, 1, 4).unwrap();
    let vars = gens[0].vars.clone();
    let mut expected = Polynomial::zero(vars.clone());
    expected.add_term(vec![1, 0, 0], Gq::one());
    expected.add_term(vec![0, 1, 0], Gq::one());
    expected.add_term(vec![0, 0, 1], -Gq::one());
    assert_eq!(gens[0], expected);

    // osp(3|2), k = 2: ε1² - δ1²
    let gens = sergeev_generators(AlgFamily::Osp, 3, 2, 4).unwrap();
    let vars = gens[0].vars.clone();
    let mut expected = Polynomial::zero(vars.clone());
    expected.add_term(vec![2, 0], Gq::one());
    expected.add_term(vec![0, 2], -Gq::one());
    assert_eq!(gens[0], expected);

    // osp(2|2): the description includes the product term ε1·(ε1² - δ1²)
    let gens = sergeev_generators(AlgFamily::Osp, 2, 2, 4).unwrap();
    let vars = gens[0].vars.clone();
    let mut product = Polynomial::zero(vars.clone());
    product.add_term(vec![3, 0], Gq::one());
    product.add_term(vec![1, 2], -Gq::one());
    assert!(gens.contains(&product), "missing ε1(ε1²-δ1²) in {gens:?}");
}

/// Restrict to one variable block by sending the others to zero.
fn restrict(p: &Polynomial, keep: std::ops::Range<usize>) -> Polynomial {
    let n = p.nvars();
    let lin: Vec<Vec<Gq>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j && keep.contains(&i) { Gq::one() } else { Gq::zero() })
                .collect()
        })
        .collect();
    let off = vec![Gq::zero(); n];
    p.compose_affine(p.vars.clone(), &lin, &off)
}

#[test]
fn sergeev_restrictions_hit_power_sums() {
    let bound = 6usize;
    // gl(3|2): restriction to the ε-block spans the power sums p_1..p_6
    let gens = sergeev_generators(AlgFamily::Gl, 3, 2, bound).unwrap();
    let vars = gens[0].vars.clone();
    let eps_restr: Vec<Polynomial> = gens.iter().map(|g| restrict(g, 0..3)).collect();
    let power_sums: Vec<Polynomial> = (1..=bound as u32)
        .map(|k| {
            let mut p = Polynomial::zero(vars.clone());
            for i in 0..3 {
                p = p.add(&Polynomial::var(vars.clone(), i).pow(k));
            }
            p
        })
        .collect();
    assert!(same_poly_span(&eps_restr, &power_sums));

    // osp(5|4): even power sums on both blocks (surjective cases)
    let gens = sergeev_generators(AlgFamily::Osp, 5, 4, bound).unwrap();
    let vars = gens[0].vars.clone();
    let eps_restr: Vec<Polynomial> = gens.iter().map(|g| restrict(g, 0..2)).collect();
    let even_sums: Vec<Polynomial> = [2u32, 4, 6]
        .iter()
        .map(|&k| {
            let mut p = Polynomial::zero(vars.clone());
            for i in 0..2 {
                p = p.add(&Polynomial::var(vars.clone(), i).pow(k));
            }
            p
        })
        .collect();
    assert!(same_poly_span(&eps_restr, &even_sums));

    // osp(2|2): the so(2)-component generator ε1 itself is NOT hit
    let gens = sergeev_generators(AlgFamily::Osp, 2, 2, bound).unwrap();
    let vars = gens[0].vars.clone();
    let eps_restr: Vec<Polynomial> = gens
        .iter()
        .map(|g| restrict(g, 0..1))
        .filter(|p| !p.is_zero())
        .collect();
    let eps1 = Polynomial::var(vars.clone(), 0);
    let mut with_eps1 = eps_restr.clone();
    with_eps1.push(eps1);
    assert!(!same_poly_span(&eps_restr, &with_eps1), "ε1 should lie outside the restriction span");
}

#[test]
fn center_condition_examples() {
    // t(t-2n) on (osp(2|2n), osp(1|2n)) → true (n = 1, 2)
    let ctx1 = PairContext::from_slug("osp2-2.osp1-2").unwrap();
    assert!(check_center_conditions(&ctx1, &univariate_from_roots("t", &[0, 2])).unwrap());
    let ctx2 = PairContext::from_slug("osp2-4.osp1-4").unwrap();
    assert!(check_center_conditions(&ctx2, &univariate_from_roots("t", &[0, 4])).unwrap());
    // ((t-1)(t-3))² on (osp(2|4), osp(1|4)) → true
    let sq = univariate_from_roots("t", &[1, 3, 1, 3]);
    assert!(check_center_conditions(&ctx2, &sq).unwrap());
    // (t-1) alone → false (a degree-1 polynomial cannot satisfy the
    // even-symmetry condition about the shifted centre)
    assert!(!check_center_conditions(&ctx1, &univariate_from_roots("t", &[1])).unwrap());
    assert!(!check_center_conditions(&ctx2, &univariate_from_roots("t", &[3])).unwrap());
}

#[test]
fn center_acts_multiplicatively_on_ghost_images() {
    // HC(v·Ω^j) = HC(v)·HC(Ω)^j: the module action of Z on A under HC.
    // Ω is central in U(g), so right multiplication descends to classes.
    for slug in ["osp2-2.osp1-2", "gl2-1.gl1-1xgl1", "osp1-4.osp1-2xsp2"] {
        let ctx = PairContext::from_slug(slug).unwrap();
        let ghost = ctx.ghost_generator().unwrap();
        let omega = ctx.casimir().unwrap().reduce_mod_uk();
        let hc_omega = ctx.hc_project(&omega).unwrap();
        let rep1 = ghost.representative.multiply(&omega).unwrap().reduce_mod_uk();
        let hc1 = ctx.hc_project(&rep1).unwrap();
        assert_eq!(hc1, ghost.hc_image.mul(&hc_omega), "module action fails on {slug}");
        let rep2 = rep1.multiply(&omega).unwrap().reduce_mod_uk();
        let hc2 = ctx.hc_project(&rep2).unwrap();
        assert_eq!(hc2, ghost.hc_image.mul(&hc_omega.mul(&hc_omega)), "module action (j=2) fails on {slug}");
        // the product v·Ω is itself a ghost distribution: exactly k'-invariant
        for x in ctx.pair.k_prime_basis() {
            let xe = ctx.element_from_alg_coords(&x);
            assert!(xe.multiply(&rep1).unwrap().reduce_mod_uk().is_zero());
        }
    }
}
