//! End-to-end smoke checks pinned to hand-derived values for the two
//! smallest pairs. These freeze the sign conventions of the whole pipeline.

use superhc::hc::PairContext;
use superhc::poly::{univariate_from_roots, Polynomial};
use superhc::scalar::{Gq, Rat};

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

#[test]
fn osp2_2_pipeline() {
    let ctx = PairContext::from_slug("osp2-2.osp1-2").unwrap();
    let pair = &ctx.pair;
    assert_eq!(pair.rank(), 1);
    assert_eq!(pair.dim_p1(), 2);
    assert_eq!(pair.dim_k(), 5); // osp(1|2)

    // restricted datum: Δ̄ = {±ε̄}, odd multiplicity 2, no even class
    assert_eq!(pair.restricted.classes.len(), 2);
    for c in &pair.restricted.classes {
        assert_eq!(c.odd_mult, 2);
        assert_eq!(c.even_mult, 0);
        assert!(!c.even_class);
        assert_eq!(c.n_alpha(), Rat::new(1.into(), 1.into()));
    }
    // ρ̄ = -ε in the t = h_ε coordinate
    let rho = ctx.rho_bar_point().unwrap();
    assert_eq!(rho, vec![Gq::from_int(-1)]);

    // Casimir image: exactly ½t(t-2)
    let omega = ctx.casimir().unwrap();
    let hc_omega = ctx.hc_project(&omega.reduce_mod_uk()).unwrap();
    let expected = univariate_from_roots("t", &[0, 2]).scale(&Gq::from_ratio(1, 2));
    assert_eq!(hc_omega, expected, "HC(Ω) = t(t-2)/2 exactly");

    // ghost generator: HC ∝ (t-1), monic exactly (t-1)
    let ghost = ctx.ghost_generator().unwrap();
    assert!(ghost.invariance_checked);
    let (monic, _) = ghost.hc_image.monic();
    assert_eq!(monic, univariate_from_roots("t", &[1]));
}

#[test]
fn gl2_1_pipeline() {
    let ctx = PairContext::from_slug("gl2-1.gl1-1xgl1").unwrap();
    let pair = &ctx.pair;
    assert_eq!(pair.rank(), 1);
    assert_eq!(pair.dim_p1(), 2);

    // Δ̄ = {±u (odd, mult 2), ±2u (even, mult 1)}
    let mut odd_classes = 0;
    let mut even_classes = 0;
    for c in &pair.restricted.classes {
        if c.even_class {
            even_classes += 1;
            assert_eq!(c.even_mult, 1);
            assert_eq!(c.odd_mult, 0);
        } else {
            odd_classes += 1;
            assert_eq!(c.odd_mult, 2);
        }
    }
    assert_eq!((odd_classes, even_classes), (2, 2));
    // the ray through the even class carries n = 1 from the odd class below it
    let ray = pair.restricted.even_ray_reps();
    assert_eq!(ray.len(), 1);
    assert_eq!(pair.restricted.ray_n_alpha(&ray[0]), rat(1));

    // ρ̄ = 0
    assert_eq!(ctx.rho_bar_point().unwrap(), vec![Gq::zero()]);

    // HC(Ω) = 2t² exactly; HC(v) = 2t exactly (hand-computed)
    let omega = ctx.casimir().unwrap();
    let hc_omega = ctx.hc_project(&omega.reduce_mod_uk()).unwrap();
    let t = Polynomial::var(vec!["t".into()], 0);
    assert_eq!(hc_omega, t.mul(&t).scale(&Gq::from_int(2)));

    let ghost = ctx.ghost_generator().unwrap();
    assert_eq!(ghost.hc_image, t.scale(&Gq::from_int(2)));
}
