//! Benchmark fixtures.

use zgkh::tqft::{build_reduced_complex, parse_braid, parse_pd, CubeOptions, PDCode};
use zgkh::FreeComplex;

pub const PD_8_19: &str =
    "[[4,2,5,1],[8,4,9,3],[9,15,10,14],[5,13,6,12],[13,7,14,6],[11,1,12,16],[15,11,16,10],[2,8,3,7]]";

/// `T(3,5)`, ten crossings.
pub const BRAID_10_124: &str = "[1,2,1,2,1,2,1,2,1,2]";

pub fn diagrams() -> Vec<(&'static str, PDCode)> {
    vec![
        ("3_1", parse_braid("[1,1,1]").unwrap()),
        ("8_19", parse_pd(PD_8_19).unwrap()),
        ("10_124", parse_braid(BRAID_10_124).unwrap()),
    ]
}

pub fn reduced(pd: &PDCode) -> FreeComplex {
    build_reduced_complex(pd, CubeOptions::default()).unwrap()
}
