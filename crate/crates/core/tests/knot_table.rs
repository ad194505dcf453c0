mod common;

use std::collections::BTreeMap;

use common::KNOT_TABLE;
use zgkh::chain::Grading;
use zgkh::pieces::lambda_bounds;
use zgkh::tqft::{build_reduced_complex, parse_pd, specialized_homology, CubeOptions, SpecializedTable};
use zgkh::{CoefficientSpec, Int};

fn expected(rows: &str, sign: i64) -> BTreeMap<Grading, (usize, Vec<Int>)> {
    let rows: Vec<[i64; 4]> = serde_json::from_str(rows).unwrap();
    let mut t: BTreeMap<Grading, (usize, Vec<Int>)> = BTreeMap::new();
    for [tor, n, i, q] in rows {
        let e = t.entry(Grading::new(sign * i, sign * q)).or_default();
        if tor == 0 {
            e.0 += n as usize;
        } else {
            e.1.extend(std::iter::repeat(Int::from(tor)).take(n as usize));
        }
    }
    t
}

#[test]
fn reduced_homology_and_lambda() {
    for (name, pd, kh, lambda) in KNOT_TABLE {
        let c = build_reduced_complex(&parse_pd(pd).unwrap(), CubeOptions::default()).unwrap();
        let SpecializedTable::Integral(got) = specialized_homology(&c, CoefficientSpec::IntegersGZero) else {
            unreachable!()
        };
        assert!(got == expected(kh, 1) || got == expected(kh, -1), "{name}: {got:?}");
        assert_eq!(specialized_homology(&c, CoefficientSpec::FieldGOne(0)).total_dimension(), 1, "{name}");
        let b = lambda_bounds(&c);
        assert_eq!((b.lower, b.upper), (*lambda, Some(*lambda)), "{name}");
        assert!(b.certificate.unwrap().verify(), "{name}");
    }
}
