use zgkh::chain::{dual, gaussian_eliminate, ChainMap, FreeComplex};
use zgkh::pieces::u_g;
use zgkh::tqft::{build_reduced_complex, specialized_homology, CubeOptions, SpecializedTable};
use zgkh::zigzag::{
    closure, closure_map, edge_homotopy, fg_certificate, graph_to_complex, two_bridge_pd, zz, Rational,
};
use zgkh::{CoefficientSpec, GPolynomial};

type Fingerprint = (Vec<SpecializedTable>, u32, u32);

fn fingerprint(c: &FreeComplex) -> Fingerprint {
    let SpecializedTable::Integral(t) = specialized_homology(c, CoefficientSpec::IntegersGZero) else { unreachable!() };
    let k = *t.keys().next().unwrap();
    let specs = [
        CoefficientSpec::IntegersGZero,
        CoefficientSpec::FieldPGraded(0),
        CoefficientSpec::FieldPGraded(2),
        CoefficientSpec::FieldPGraded(3),
        CoefficientSpec::FieldGOne(0),
    ];
    let tables = specs.iter().map(|s| specialized_homology(c, *s).shifted(-k.i, -k.q)).collect();
    (tables, u_g(c), u_g(&dual(c)))
}

fn rationals(sum: i64) -> impl Iterator<Item = Rational> {
    (1..sum).flat_map(move |p| (1..=sum - p).map(move |q| (p, q))).filter_map(|(p, q)| {
        let x = Rational::new(p, q)?;
        (x.p() == p).then_some(x)
    })
}

#[test]
fn closures_match_diagrams() {
    let mut n = 0;
    for x in rationals(14) {
        let Ok(pd) = two_bridge_pd(x) else { continue };
        let tangle = gaussian_eliminate(&closure(&graph_to_complex(&zz(x).unwrap())));
        let knot = build_reduced_complex(&pd, CubeOptions::default()).unwrap();
        assert_eq!(fingerprint(&tangle), fingerprint(&knot), "{x}");
        n += 1;
    }
    assert_eq!(n, 43);
}

#[test]
fn certificates_for_odd_odd() {
    let mut n = 0;
    for x in rationals(20).filter(|x| x.p() % 2 != 0 && x.q() % 2 != 0) {
        let cert = fg_certificate(x).unwrap();
        assert!(cert.verify(), "{x}");
        n += 1;
    }
    assert_eq!(n, 45);
}

#[test]
fn every_edge_of_three_sevenths_has_a_homotopy() {
    let c = graph_to_complex(&zz(Rational::new(3, 7).unwrap()).unwrap());
    for e in 0..c.len() - 1 {
        let h = edge_homotopy(&c, e).unwrap();
        assert!(!h.entries().is_empty());
    }
}

// Closing a certificate up gives one between the knot and the unknot.
#[test]
fn closed_certificates() {
    for x in [Rational::new(1, 1).unwrap(), Rational::new(3, 7).unwrap(), Rational::new(5, 3).unwrap()] {
        let cert = fg_certificate(x).unwrap();
        let (c, u) = (closure(&cert.c), closure(&cert.c_prime));
        let f = closure_map(&cert.f, &cert.c, &cert.c_prime);
        let g = closure_map(&cert.g, &cert.c_prime, &cert.c);
        let h = closure_map(&cert.h, &cert.c, &cert.c);
        let hp = closure_map(&cert.h_prime, &cert.c_prime, &cert.c_prime);
        let gp = GPolynomial::g_pow(1);
        assert!(f.is_chain_map(&c, &u) && g.is_chain_map(&u, &c));
        assert!(g.after(&f).sub(&ChainMap::scalar(c.len(), &gp)).is_nullhomotopic_via(&c, &h));
        assert!(f.after(&g).sub(&ChainMap::scalar(u.len(), &gp)).is_nullhomotopic_via(&u, &hp));
    }
}
