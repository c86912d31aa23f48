//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! 1-3 reproduce the closed-form golden values; the rest are property-based
//! criteria. All comparisons are exact rational arithmetic, up to one global
//! nonzero scalar where a criterion says "proportional".

use std::collections::{BTreeMap, BTreeSet};
use superhc::catalog::{self, FamilyRow};
use superhc::hc::PairContext;
use superhc::liealg::{build_gl, build_osp, Superalgebra};
use superhc::linalg;
use superhc::matrix::Parity;
use superhc::pairs::{interlacing_automorphism, is_interlaced, realize_pair};
use superhc::poly::Polynomial;
use superhc::scalar::Gq;
use superhc::uea::{normal_order, PBWElement, Section, Word};
use superhc::verify::{self, Status};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn line(id: &str, ok: bool, detail: &str) {
    println!("[{id}] {} {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{id} failed: {detail}");
}

#[test]
fn ac01_rank_one_golden_forms() {
    let mut all = true;
    for slug in verify::GOLDEN_RANK_ONE {
        let reports = verify::check_rank_one(slug).unwrap();
        let ghost_ok = reports
            .iter()
            .any(|r| r.check == "rank1.ghost" && r.status == Status::Pass);
        if !ghost_ok {
            eprintln!("  ghost mismatch for {slug}: {reports:?}");
        }
        all &= ghost_ok;
    }
    line("AC01", all, "HC(v_k') matches the eight rank-one closed forms exactly (up to scalar)");
}

#[test]
fn ac02_casimir_images() {
    let mut all = true;
    for slug in ["osp2-2.osp1-2", "osp2-4.osp1-4", "osp2-4.osp2-2xsp2", "osp1-4.osp1-2xsp2"] {
        let reports = verify::check_rank_one(slug).unwrap();
        let cas = reports
            .iter()
            .find(|r| r.check == "rank1.casimir")
            .expect("casimir report");
        // exact proportionality: Pass with no affine-constant note
        let ok = cas.status == Status::Pass && cas.detail.is_none();
        if !ok {
            eprintln!("  casimir mismatch for {slug}: {cas:?}");
        }
        all &= ok;
    }
    line("AC02", all, "HC(Ω) ∝ t(t-2n) and t(t+2n-m-1) on the osp families, exactly");
}

#[test]
fn ac03_gl_product_formula() {
    let r21 = verify::check_gl_product_formula(2, 1).unwrap();
    let r12 = verify::check_gl_product_formula(1, 2).unwrap();
    let ok = r21.status == Status::Pass && r12.status == Status::Pass;
    line("AC03", ok, "gl product formula: (gl(4|1), gl(2|1)xgl(2)) ∝ (t1+1)t2; (gl(2|2), gl(1|2)xgl(1)) ∝ t(t-1)");
}

/// Structure constants of an algebra in basis coordinates.
fn structure_constants(alg: &Superalgebra) -> Vec<Vec<Vec<(usize, Gq)>>> {
    let n = alg.dim();
    let mut sc = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let b = alg.bracket(&alg.basis[i], &alg.basis[j]).unwrap();
            if b.is_zero() {
                continue;
            }
            let c = alg.coords(&b).unwrap();
            sc[i][j] = c
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(l, x)| (l, x))
                .collect();
        }
    }
    sc
}

fn add_scaled(acc: &mut BTreeMap<usize, Gq>, list: &[(usize, Gq)], scale: &Gq) {
    for (l, c) in list {
        let entry = acc.entry(*l).or_insert_with(Gq::zero);
        *entry = &*entry + &(c * scale);
    }
}

#[test]
fn ac04_structural_suite() {
    // every distinct algebra realized by the dim ≤ 40 catalog
    let mut algebras: BTreeSet<(bool, usize, usize)> = BTreeSet::new();
    for d in catalog::catalog() {
        if !d.realizable || d.dim_g() > 40 {
            continue;
        }
        match d.family {
            FamilyRow::GlGl { m, n, .. } => algebras.insert((true, m, n)),
            FamilyRow::GlOsp { m, n } => algebras.insert((true, m, 2 * n)),
            FamilyRow::OspOsp { m, n, .. } => algebras.insert((false, m, n)),
            FamilyRow::OspGl { m, n } => algebras.insert((false, 2 * m, n)),
            FamilyRow::Exceptional { .. } => false,
        };
    }
    let mut checked = 0;
    for (is_gl, m, n) in algebras {
        let alg = if is_gl { build_gl(m, n).unwrap() } else { build_osp(m, n).unwrap() };
        let dim = alg.dim();
        let sc = structure_constants(&alg);
        // super Jacobi on all basis triples
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut lhs: BTreeMap<usize, Gq> = BTreeMap::new();
                    for (l, c) in &sc[j][k] {
                        add_scaled(&mut lhs, &sc[i][*l], c);
                    }
                    let mut rhs: BTreeMap<usize, Gq> = BTreeMap::new();
                    for (l, c) in &sc[i][j] {
                        add_scaled(&mut rhs, &sc[*l][k], c);
                    }
                    let sign = Gq::from_int(alg.parity[i].sign_product(alg.parity[j]) as i64);
                    for (l, c) in &sc[i][k] {
                        add_scaled(&mut rhs, &sc[j][*l], &(c * &sign));
                    }
                    lhs.retain(|_, v| !v.is_zero());
                    rhs.retain(|_, v| !v.is_zero());
                    assert_eq!(lhs, rhs, "super Jacobi fails in {} at ({i},{j},{k})", alg.name());
                }
            }
        }
        // form invariance ([x,y],z) = (x,[y,z]) and supersymmetry
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut l = Gq::zero();
                    for (t, c) in &sc[i][j] {
                        l += &(c * &alg.gram[*t][k]);
                    }
                    let mut r = Gq::zero();
                    for (t, c) in &sc[j][k] {
                        r += &(&alg.gram[i][*t] * c);
                    }
                    assert_eq!(l, r, "form invariance fails in {} at ({i},{j},{k})", alg.name());
                }
                let sign = Gq::from_int(alg.parity[i].sign_product(alg.parity[j]) as i64);
                assert_eq!(
                    alg.gram[i][j],
                    &alg.gram[j][i] * &sign,
                    "supersymmetry fails in {}",
                    alg.name()
                );
                if alg.parity[i] != alg.parity[j] {
                    assert!(alg.gram[i][j].is_zero(), "cross-parity pairing in {}", alg.name());
                }
            }
        }
        // nondegeneracy
        assert_eq!(linalg::rank(&alg.gram), dim, "degenerate form on {}", alg.name());
        // osp condition and eigenspace completeness
        if let Some(j) = &alg.form_matrix {
            for x in &alg.basis {
                let cond = &(&x.supertranspose() * j) + &(j * x);
                assert!(cond.is_zero(), "osp condition fails in {}", alg.name());
            }
        }
        let root_total: usize = alg.root_datum.roots.iter().map(|r| r.space.len()).sum();
        assert_eq!(root_total + alg.cartan.len(), dim, "eigenspace completeness in {}", alg.name());
        for r in &alg.root_datum.roots {
            for &c in &alg.cartan {
                let h = &alg.basis[c];
                let x = &alg.basis[r.space[0]];
                let b = alg.bracket(h, x).unwrap();
                assert_eq!(b, x.scale(&alg.eval_weight(&r.weight, h)), "not an ad(h)-eigenvector");
            }
        }
        checked += 1;
    }
    line("AC04", checked > 0, &format!("structural suite over {checked} realized algebras (dim ≤ 40)"));
}

fn random_pbw(ctx: &PairContext, rng: &mut StdRng, max_deg: usize, terms: usize) -> PBWElement {
    let nl = ctx.ordering.len();
    let mut acc = PBWElement::zero(ctx.ordering.clone());
    for _ in 0..terms {
        let deg = rng.random_range(0..=max_deg);
        let mut word = Vec::new();
        for _ in 0..deg {
            word.push(rng.random_range(0..nl) as u16);
        }
        let c = Gq::from_int(rng.random_range(-3..=3i64));
        let nf = normal_order(&ctx.ordering, &Word(word)).scale(&c);
        acc = acc.add(&nf).unwrap();
    }
    acc
}

#[test]
fn ac05_pbw_suite() {
    let osp = PairContext::from_slug("osp2-2.osp1-2").unwrap();
    let gl = PairContext::from_slug("gl2-1.gl1-1xgl1").unwrap();

    // idempotence: normal ordering fixes already-normal monomials
    for ctx in [&osp, &gl] {
        for (exp, _) in enumerate_monomials(ctx, 3) {
            let word = expand(&exp);
            let nf = normal_order(&ctx.ordering, &Word(word.clone()));
            assert_eq!(nf.terms.len(), 1);
            assert_eq!(nf.terms.iter().next().unwrap().0, &exp);
        }
    }

    // homomorphism: NF(w1·w2) = NF(w1)·NF(w2) on random words
    let mut rng = StdRng::seed_from_u64(20260808);
    for ctx in [&osp, &gl] {
        for _ in 0..100 {
            let nl = ctx.ordering.len();
            let w1: Vec<u16> = (0..rng.random_range(0..4)).map(|_| rng.random_range(0..nl) as u16).collect();
            let w2: Vec<u16> = (0..rng.random_range(0..4)).map(|_| rng.random_range(0..nl) as u16).collect();
            let mut cat = w1.clone();
            cat.extend(&w2);
            let lhs = normal_order(&ctx.ordering, &Word(cat));
            let rhs = normal_order(&ctx.ordering, &Word(w1))
                .multiply(&normal_order(&ctx.ordering, &Word(w2)))
                .unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero(), "homomorphism property fails");
        }
    }

    // PBW independence at degree ≤ 3: straightened reversed words stay
    // linearly independent (rank = number of monomials)
    for ctx in [&osp, &gl] {
        let monos = enumerate_monomials(ctx, 3);
        let elems: Vec<PBWElement> = monos
            .iter()
            .map(|(exp, _)| {
                let mut w = expand(exp);
                w.reverse();
                normal_order(&ctx.ordering, &Word(w))
            })
            .collect();
        let all_monos: BTreeSet<Vec<u8>> =
            elems.iter().flat_map(|e| e.terms.keys().cloned()).collect();
        let cols: Vec<Vec<u8>> = all_monos.into_iter().collect();
        let rows: Vec<Vec<Gq>> = elems
            .iter()
            .map(|e| cols.iter().map(|c| e.terms.get(c).cloned().unwrap_or_else(Gq::zero)).collect())
            .collect();
        assert_eq!(linalg::rank(&rows), monos.len(), "PBW independence fails");
    }

    // associativity on 100 random degree-≤3 samples in osp(2|2)
    for _ in 0..100 {
        let u = random_pbw(&osp, &mut rng, 3, 2);
        let v = random_pbw(&osp, &mut rng, 3, 2);
        let w = random_pbw(&osp, &mut rng, 3, 2);
        let lhs = u.multiply(&v).unwrap().multiply(&w).unwrap();
        let rhs = u.multiply(&v.multiply(&w).unwrap()).unwrap();
        assert!(lhs.sub(&rhs).unwrap().is_zero(), "associativity fails");
    }

    // odd exponents never exceed 1 after any operation
    for _ in 0..20 {
        let u = random_pbw(&osp, &mut rng, 3, 3);
        for exp in u.terms.keys() {
            for (i, &e) in exp.iter().enumerate() {
                if osp.ordering.parity_of(i as u16) == Parity::Odd {
                    assert!(e <= 1, "odd exponent above 1");
                }
            }
        }
    }
    line("AC05", true, "PBW suite: idempotence, homomorphism, bounded independence, associativity");
}

fn enumerate_monomials(ctx: &PairContext, max_deg: usize) -> Vec<(Vec<u8>, usize)> {
    let nl = ctx.ordering.len();
    let mut out = Vec::new();
    let mut cur = vec![0u8; nl];
    fn rec(
        ctx: &PairContext,
        pos: usize,
        left: usize,
        cur: &mut Vec<u8>,
        out: &mut Vec<(Vec<u8>, usize)>,
        total: usize,
    ) {
        if pos == cur.len() {
            out.push((cur.clone(), total));
            return;
        }
        let cap = if ctx.ordering.parity_of(pos as u16) == Parity::Odd { 1.min(left) } else { left };
        for e in 0..=cap {
            cur[pos] = e as u8;
            rec(ctx, pos + 1, left - e, cur, out, total + e);
            cur[pos] = 0;
        }
    }
    rec(ctx, 0, max_deg, &mut cur, &mut out, 0);
    out
}

fn expand(exp: &[u8]) -> Vec<u16> {
    let mut w = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        for _ in 0..e {
            w.push(i as u16);
        }
    }
    w
}

#[test]
fn ac06_hc_contract() {
    let mut rng = StdRng::seed_from_u64(777);
    for slug in verify::GOLDEN_RANK_ONE {
        let ctx = PairContext::from_slug(slug).unwrap();
        // HC(1) = 1
        let one = PBWElement::one(ctx.ordering.clone());
        assert_eq!(ctx.hc_project(&one).unwrap(), Polynomial::one(ctx.t_names.clone()));
        // annihilation of n·U(g) and U(g)·k on 100 random ideal elements
        let n_letters = ctx.ordering.section_indices(Section::N);
        let k_letters = ctx.ordering.section_indices(Section::K);
        for _ in 0..100 {
            let u = random_pbw(&ctx, &mut rng, 3, 2);
            let n = PBWElement::letter(ctx.ordering.clone(), n_letters[rng.random_range(0..n_letters.len())]);
            let k = PBWElement::letter(ctx.ordering.clone(), k_letters[rng.random_range(0..k_letters.len())]);
            let left = n.multiply(&u).unwrap();
            assert!(ctx.hc_project(&left).unwrap().is_zero(), "HC(n·u) ≠ 0 on {slug}");
            let right = u.multiply(&k).unwrap();
            assert!(ctx.hc_project(&right).unwrap().is_zero(), "HC(u·k) ≠ 0 on {slug}");
        }
        // antipode sign on pure a-monomials
        let a_letters = ctx.ordering.section_indices(Section::A);
        let lin: Vec<Polynomial> = a_letters
            .iter()
            .map(|&i| {
                ctx.hc_project(&PBWElement::letter(ctx.ordering.clone(), i))
                    .unwrap()
                    .scale(&-Gq::one())
            })
            .collect();
        for _ in 0..20 {
            let exps: Vec<usize> = a_letters.iter().map(|_| rng.random_range(0..3)).collect();
            let total: usize = exps.iter().sum();
            let mut word = Vec::new();
            for (pos, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    word.push(a_letters[pos]);
                }
            }
            let el = normal_order(&ctx.ordering, &Word(word));
            let got = ctx.hc_project(&el).unwrap();
            let mut want = Polynomial::one(ctx.t_names.clone());
            for (pos, &e) in exps.iter().enumerate() {
                want = want.mul(&lin[pos].pow(e as u32));
            }
            if total % 2 == 1 {
                want = want.scale(&-Gq::one());
            }
            assert_eq!(got, want, "antipode sign fails on {slug}");
        }
    }
    line("AC06", true, "HC contract: ideal annihilation (100 random/pair), HC(1)=1, antipode sign");
}

#[test]
fn ac07_invariance_and_lemma_witness() {
    for slug in verify::GOLDEN_RANK_ONE {
        let ctx = PairContext::from_slug(slug).unwrap();
        let ghost = ctx.ghost_generator().unwrap();
        assert!(ghost.invariance_checked);
        // exact membership x·v ∈ U(g)k for every k'-basis x
        for v in ctx.pair.k_prime_basis() {
            let x = ctx.element_from_alg_coords(&v);
            let img = x.multiply(&ghost.representative).unwrap();
            assert!(img.reduce_mod_uk().is_zero(), "k'-invariance fails for {slug}");
        }
        // failure of full k-invariance (Lemma 5.1 witness)
        assert!(
            ctx.p0_witness(&ghost.representative).unwrap().is_some(),
            "no p_0 witness on {slug}"
        );
        assert!(
            ctx.non_z_witness(&ghost.representative).unwrap().is_some(),
            "ghost is fully k-invariant on {slug}"
        );
    }
    line("AC07", true, "ghost invariance holds on every k'-basis element; Lemma-5.1 witness found");
}

#[test]
fn ac08_degree_and_leading_term() {
    for slug in ["osp2-2.osp1-2", "gl2-1.gl1-1xgl1"] {
        let ctx = PairContext::from_slug(slug).unwrap();
        let ghost = ctx.ghost_generator().unwrap();
        let forms = ctx.leading_forms().unwrap();
        let k = forms.len();
        let mut hbar_prod = Polynomial::one(ctx.t_names.clone());
        for f in &forms {
            hbar_prod = hbar_prod.mul(f);
        }
        let sign = if k % 2 == 1 { -Gq::one() } else { Gq::one() };
        let omega0 = ctx.casimir_even().unwrap().reduce_mod_uk();
        let mut z = PBWElement::one(ctx.ordering.clone());
        for j in 0..=2u32 {
            let (_, hc) = ctx.ghost_hc(&ghost, &z).unwrap();
            let hc_z = ctx.hc_project(&z).unwrap();
            let expected_deg = (ctx.pair.dim_p1() / 2) as i64 + 2 * j as i64;
            assert_eq!(hc.degree(), expected_deg, "degree fails on {slug} at j={j}");
            let lhs_top = hc.top_component();
            let rhs_top = hbar_prod.mul(&hc_z.top_component()).scale(&sign);
            assert_eq!(lhs_top, rhs_top, "leading term fails on {slug} at j={j}");
            z = z.multiply(&omega0).unwrap().reduce_mod_uk();
        }
    }
    line("AC08", true, "deg HC(v·Ω₀^j) = dim p₁/2 + 2j with the (-1)^k ∏h̄ leading term, j ≤ 2");
}

#[test]
fn ac09_bounded_injectivity() {
    for slug in verify::GOLDEN_RANK_ONE {
        let ctx = PairContext::from_slug(slug).unwrap();
        let ghost = ctx.ghost_generator().unwrap();
        let omega0 = ctx.casimir_even().unwrap().reduce_mod_uk();
        let mut polys = Vec::new();
        let mut z = PBWElement::one(ctx.ordering.clone());
        for _ in 0..=4 {
            let (_, hc) = ctx.ghost_hc(&ghost, &z).unwrap();
            polys.push(hc);
            z = z.multiply(&omega0).unwrap().reduce_mod_uk();
        }
        let monos: BTreeSet<Vec<u32>> = polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
        let cols: Vec<Vec<u32>> = monos.into_iter().collect();
        let rows: Vec<Vec<Gq>> = polys
            .iter()
            .map(|p| cols.iter().map(|c| p.terms.get(c).cloned().unwrap_or_else(Gq::zero)).collect())
            .collect();
        assert_eq!(linalg::rank(&rows), 5, "HC images of v·Ω₀^j dependent on {slug}");
    }
    line("AC09", true, "HC(v·Ω₀^j), j ≤ 4, linearly independent on every rank-one golden pair");
}

#[test]
fn ac10_interlacing_biconditional_sweep() {
    let mut rows = 0;
    for d in catalog::catalog() {
        if !d.realizable || d.dim_g() > 40 {
            continue;
        }
        let pair = realize_pair(&d).unwrap();
        assert_eq!(
            pair.iwasawa.is_some(),
            d.table_iwasawa.unwrap(),
            "Iwasawa criterion mismatch on {}",
            d.slug
        );
        let inter = is_interlaced(&pair).unwrap();
        // interlacing_automorphism verifies all four identities internally
        let phi = interlacing_automorphism(&pair);
        assert_eq!(
            inter,
            phi.is_ok(),
            "Theorem 4.2 biconditional fails on {} ({:?})",
            d.slug,
            phi.err().map(|e| e.to_string())
        );
        // the closed-form verdicts used by the catalog listing agree
        let (table_iw, table_inter) = catalog::table_verdicts(&d.family);
        assert_eq!(table_iw, Some(pair.iwasawa.is_some()), "table verdict on {}", d.slug);
        assert_eq!(table_inter, Some(inter), "table interlacing verdict on {}", d.slug);
        rows += 1;
    }
    line("AC10", rows > 100, &format!("both-Iwasawa ⟺ verified interlacing automorphism on {rows} catalog rows"));
}

#[test]
fn ac11_ghost_algebra() {
    for slug in verify::INTERLACED_RANK_ONE {
        let ctx = PairContext::from_slug(slug).unwrap();
        let ghost = ctx.ghost_generator().unwrap();
        let (rep, hc) = ctx.ghost_product(&ghost, &ghost).unwrap();
        let square = ghost.hc_image.mul(&ghost.hc_image);
        assert_eq!(hc, square, "HC multiplicativity fails on {slug}");
        assert!(ctx.is_k_invariant(&rep).unwrap(), "product not k-invariant on {slug}");
        assert!(
            verify::check_center_conditions(&ctx, &square).unwrap(),
            "centre conditions fail on {slug}"
        );
    }
    line("AC11", true, "HC(φ(u)u) = HC(u)² exactly; squares satisfy the centre conditions");
}

#[test]
fn ac12_conjecture() {
    let reports = verify::suite_conjecture(5);
    for r in &reports {
        match r.pair.as_str() {
            "gl3-1.gl2-1xgl1" => assert_eq!(
                r.status,
                Status::ExpectedFail,
                "non-interlaced gl pair should violate the reflection condition"
            ),
            "osp3-2.osp2-2" => {} // informational: also violates, but not asserted
            _ => assert_eq!(r.status, Status::Pass, "conjecture fails on {}: {:?}", r.pair, r.detail),
        }
    }
    line("AC12", true, "invariance conditions hold on interlaced rank-one pairs; reflection fails on gl(3|1)");
}

#[test]
fn ac13_reduction_and_vanishing() {
    let reports = verify::suite_reduction();
    for r in &reports {
        if r.check == "reduction" {
            assert_eq!(r.status, Status::Pass, "reduction fails on {}", r.pair);
        }
        if r.check == "vanishing" && r.pair.starts_with("gl") {
            assert_eq!(r.status, Status::Pass, "vanishing fails on {}", r.pair);
        }
    }
    line("AC13", true, "reduction proportionality on both instances; h_α divisibility on the gl pairs");
}

#[test]
fn ac14_even_pairs_span() {
    let r = verify::check_even_pairs("gl2-1.gl1-1xgl1", 6).unwrap();
    assert_eq!(r.status, Status::Pass, "{:?}", r);
    line("AC14", true, "even-pairs span equality at degree bound 6 for (gl(2|1), gl(1|1)xgl(1))");
}
