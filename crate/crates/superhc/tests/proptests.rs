//! Property tests for the exact-arithmetic layers.

use proptest::prelude::*;
use std::sync::OnceLock;
use superhc::hc::PairContext;
use superhc::poly::Polynomial;
use superhc::scalar::{Gq, Rat};
use superhc::uea::{normal_order, Word};

fn gq_strategy() -> impl Strategy<Value = Gq> {
    (any::<i32>(), 1..200i32, any::<i32>(), 1..200i32).prop_map(|(a, b, c, d)| {
        Gq::new(
            Rat::new((a as i64).into(), (b as i64).into()),
            Rat::new((c as i64).into(), (d as i64).into()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gq_field_axioms(a in gq_strategy(), b in gq_strategy(), c in gq_strategy()) {
        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        prop_assert_eq!(&ab_c, &a_bc);
        let dist = &a * &(&b + &c);
        let dist2 = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(&dist, &dist2);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
        // conjugation is multiplicative
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn gq_display_parse_round_trip(a in gq_strategy()) {
        let s = a.to_string();
        prop_assert_eq!(Gq::parse(&s).unwrap(), a);
    }

    #[test]
    fn poly_ring_axioms(coeffs in proptest::collection::vec((0u32..4, 0u32..4, -5i64..6), 1..6)) {
        let vars = vec!["x".to_string(), "y".to_string()];
        let mut p = Polynomial::zero(vars.clone());
        let mut q = Polynomial::zero(vars.clone());
        for (i, (e1, e2, c)) in coeffs.iter().enumerate() {
            let target = if i % 2 == 0 { &mut p } else { &mut q };
            target.add_term(vec![*e1, *e2], Gq::from_int(*c));
        }
        let r = p.add(&q);
        prop_assert_eq!(p.mul(&r).sub(&p.mul(&p)).sub(&p.mul(&q)), Polynomial::zero(vars.clone()));
        // monic round trip
        if !p.is_zero() {
            let (m, s) = p.monic();
            prop_assert_eq!(m.scale(&s), p.clone());
            prop_assert_eq!(p.proportional_to(&m), Some(s));
        }
        // identity affine substitution is the identity
        let id = vec![
            vec![Gq::one(), Gq::zero()],
            vec![Gq::zero(), Gq::one()],
        ];
        let off = vec![Gq::zero(), Gq::zero()];
        prop_assert_eq!(p.compose_affine(vars.clone(), &id, &off), p.clone());
    }
}

fn shared_ctx() -> &'static PairContext {
    static CTX: OnceLock<PairContext> = OnceLock::new();
    CTX.get_or_init(|| PairContext::from_slug("osp2-2.osp1-2").expect("realize osp(2|2)/osp(1|2)"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// normal_order is a ring homomorphism from free words and is idempotent
    /// on its own output.
    #[test]
    fn pbw_straightening_properties(raw in proptest::collection::vec(0usize..8, 0..5)) {
        let ctx = shared_ctx();
        let word: Vec<u16> = raw.iter().map(|&x| x as u16).collect();
        let nf = normal_order(&ctx.ordering, &Word(word.clone()));
        // homomorphism against a fixed right factor
        let right: Vec<u16> = vec![1, 6];
        let mut cat = word.clone();
        cat.extend(&right);
        let lhs = normal_order(&ctx.ordering, &Word(cat));
        let rhs = nf.multiply(&normal_order(&ctx.ordering, &Word(right))).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
        // idempotence: re-straighten every monomial of the normal form
        for (exp, c) in &nf.terms {
            let mut w = Vec::new();
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    w.push(i as u16);
                }
            }
            let again = normal_order(&ctx.ordering, &Word(w));
            prop_assert_eq!(again.terms.len(), 1);
            prop_assert!(again.terms.contains_key(exp));
            let _ = c;
        }
        // filtration degree respects products
        let f = nf.filtration_degree();
        let sq = nf.multiply(&nf).unwrap();
        prop_assert!(sq.filtration_degree() <= &f + &f);
    }
}
