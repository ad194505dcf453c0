mod common;

use common::*;
use proptest::prelude::*;
use zgkh::chain::{direct_sum, dual, tensor, FreeComplex, Grading};
use zgkh::pieces::{
    decompose, decompose_tensor, dual_staircase, lambda_bounds, staircase, torsion_order, u_g, PieceKind,
};
use zgkh::tqft::{build_reduced_complex, parse_braid, parse_pd, CubeOptions};
use zgkh::zring::GMonomial;

fn reduced(pd: &str) -> FreeComplex {
    build_reduced_complex(&parse_pd(pd).unwrap(), CubeOptions::default()).unwrap()
}

#[test]
fn trefoil_bounds() {
    let c = build_reduced_complex(&parse_braid("[1,1,1]").unwrap(), CubeOptions::default()).unwrap();
    let b = lambda_bounds(&c);
    assert_eq!((b.lower, b.upper, b.exact), (1, Some(1), true));
    assert!(b.certificate.as_ref().unwrap().verify());
    assert!(b.decomposition.verify());
    assert_eq!(b.to_json()["upper"], 1);
}

#[test]
fn t34_bounds() {
    let c = reduced(PD_8_19);
    let b = lambda_bounds(&c);
    assert_eq!((b.lower, b.upper), (2, Some(2)));
    assert!(b.certificate.unwrap().verify());
    let kinds: Vec<&PieceKind> = b.decomposition.summands.iter().map(|s| &s.kind).collect();
    assert_eq!(kinds.iter().filter(|k| matches!(k, PieceKind::Pawn)).count(), 1);
}

#[test]
fn small_knots_are_lambda_one() {
    for (name, pd) in small_knots() {
        let c = build_reduced_complex(&pd, CubeOptions::default()).unwrap();
        let b = lambda_bounds(&c);
        assert_eq!((b.lower, b.upper), (1, Some(1)), "{name}");
        assert!(b.certificate.unwrap().verify(), "{name}");
        let m = lambda_bounds(&build_reduced_complex(&pd.mirror(), CubeOptions::default()).unwrap());
        assert_eq!((m.lower, m.upper), (1, Some(1)), "{name} mirror");
    }
}

#[test]
fn staircase_torsion() {
    for n in 1..=6 {
        let s = staircase(n);
        assert_eq!(u_g(&s), n);
        assert_eq!(u_g(&dual_staircase(n)), 0);
        let b = lambda_bounds(&dual_staircase(n));
        assert_eq!((b.lower, b.upper), (n, Some(n)));
    }
}

#[test]
fn staircase_powers() {
    let s1 = decompose(&staircase(1));
    let mut c = staircase(1);
    let mut d = s1.clone();
    for n in 2..=4 {
        c = tensor(&c, &staircase(1));
        d = decompose_tensor(&d, &s1);
        assert!(d.verify());
        assert_eq!(d.reduced, c);
        let stairs: Vec<u32> = d
            .summands
            .iter()
            .filter_map(|s| match s.kind {
                PieceKind::Staircase { n } => Some(n),
                _ => None,
            })
            .collect();
        assert_eq!(stairs, vec![n]);
        assert_eq!(u_g(&c), n);
    }
}

#[test]
fn torsion_of_trefoil_knight() {
    let c = build_reduced_complex(&parse_braid("[1,1,1]").unwrap(), CubeOptions::default()).unwrap();
    let h = zgkh::chain::homology_at(&c, Grading::new(3, 8));
    let x = zgkh::chain::HomClass::new(c.clone(), Grading::new(3, 8), h.generators[0].clone()).unwrap();
    let t = torsion_order(&x);
    assert_eq!(t.order, Some(1));
    assert!(t.refutation.unwrap().verify());
}

fn piece() -> impl Strategy<Value = FreeComplex> {
    prop_oneof![
        (0i64..3, -2i64..3).prop_map(|(i, q)| FreeComplex::pawn(Grading::new(i, 2 * q))),
        (1u32..4, 0i64..3).prop_map(|(k, i)| FreeComplex::knight(GMonomial::g(k), Grading::new(i, 0))),
        (1u32..4).prop_map(staircase),
        (1u32..4).prop_map(dual_staircase),
        Just(FreeComplex::knight(GMonomial::new(3, 0), Grading::new(0, 0))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn u_g_of_sums(a in piece(), b in piece()) {
        prop_assert_eq!(u_g(&direct_sum(&a, &b)), u_g(&a).max(u_g(&b)));
    }

    #[test]
    fn lambda_subadditive(a in prop_oneof![(1u32..3).prop_map(staircase), (1u32..3).prop_map(dual_staircase)],
                          b in prop_oneof![(1u32..3).prop_map(staircase), (1u32..3).prop_map(dual_staircase)]) {
        let (la, lb) = (lambda_bounds(&a), lambda_bounds(&b));
        let lt = lambda_bounds(&tensor(&a, &b));
        if let (Some(x), Some(y), Some(z)) = (la.upper, lb.upper, lt.upper) {
            prop_assert!(z <= x + y);
        }
        prop_assert!(lt.lower <= lt.upper.unwrap_or(u32::MAX));
        let ld = lambda_bounds(&dual(&a));
        if la.exact && ld.exact {
            prop_assert_eq!(la.upper, ld.upper);
        }
    }
}

#[test]
fn identity_suite() {
    use zgkh::pieces::{verify_identity, Identity};
    for id in Identity::all() {
        let r = verify_identity(&id);
        assert!(r.passed(), "{id}: {:?}", r.checks);
        assert!(r.witness.is_some(), "{id} has no witness");
    }
}
