#![allow(dead_code)]

use std::collections::BTreeMap;

mod knots;
#[allow(unused_imports)]
pub use knots::KNOT_TABLE;

use zgkh::chain::Grading;
use zgkh::tqft::{parse_pd, IntComplex, PDCode};
use zgkh::zring::Int;

pub const PD_3_1: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
pub const PD_4_1: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
pub const PD_5_1: &str = "[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]";
pub const PD_5_2: &str = "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]";
pub const PD_6_1: &str = "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]";
pub const PD_6_2: &str = "[[1,4,2,5],[5,10,6,11],[3,9,4,8],[9,3,10,2],[7,12,8,1],[11,6,12,7]]";
pub const PD_6_3: &str = "[[4,2,5,1],[8,4,9,3],[12,9,1,10],[10,5,11,6],[6,11,7,12],[2,8,3,7]]";
pub const PD_8_19: &str =
    "[[4,2,5,1],[8,4,9,3],[9,15,10,14],[5,13,6,12],[13,7,14,6],[11,1,12,16],[15,11,16,10],[2,8,3,7]]";

pub fn small_knots() -> Vec<(&'static str, PDCode)> {
    [
        ("3_1", PD_3_1),
        ("4_1", PD_4_1),
        ("5_1", PD_5_1),
        ("5_2", PD_5_2),
        ("6_1", PD_6_1),
        ("6_2", PD_6_2),
        ("6_3", PD_6_3),
    ]
    .into_iter()
    .map(|(n, t)| (n, parse_pd(t).unwrap()))
    .collect()
}

/// Unreduced integral Khovanov homology straight from the cube over Z[X]/(X^2).
pub fn unreduced_cube_oracle(pd: &PDCode) -> BTreeMap<Grading, (usize, Vec<Int>)> {
    let labels = pd.labels().to_vec();
    let xs: Vec<[usize; 4]> =
        pd.crossings().iter().map(|c| c.map(|l| labels.iter().position(|&x| x == l).unwrap())).collect();
    let n = xs.len();
    let e = labels.len();
    let (np, nm) = (pd.n_plus() as i64, pd.n_minus() as i64);
    let circles = |v: usize| -> Vec<usize> {
        let mut comp: Vec<usize> = (0..e).collect();
        let mut changed = true;
        let mut pairs = Vec::new();
        for (j, x) in xs.iter().enumerate() {
            if v >> j & 1 == 0 {
                pairs.push((x[0], x[1]));
                pairs.push((x[2], x[3]));
            } else {
                pairs.push((x[0], x[3]));
                pairs.push((x[1], x[2]));
            }
        }
        while changed {
            changed = false;
            for &(a, b) in &pairs {
                let m = comp[a].min(comp[b]);
                if comp[a] != m || comp[b] != m {
                    comp[a] = m;
                    comp[b] = m;
                    changed = true;
                }
            }
        }
        let mut ids: Vec<usize> = comp.clone();
        ids.sort();
        ids.dedup();
        comp.iter().map(|c| ids.binary_search(c).unwrap()).collect()
    };
    let ncirc = |v: usize| if e == 0 { 1 } else { circles(v).iter().max().unwrap() + 1 };
    let mut ic = IntComplex::default();
    let mut start = vec![0usize; 1 << n];
    for v in 0..1usize << n {
        start[v] = ic.gens.len();
        let c = ncirc(v);
        let r = v.count_ones() as i64;
        for x in 0..1usize << c {
            let xs_ = x.count_ones() as i64;
            ic.gens.push(Grading::new(r - nm, c as i64 - 2 * xs_ + r + np - 2 * nm));
        }
    }
    for v in 0..1usize << n {
        let cv = circles(v);
        let nc = ncirc(v);
        for j in 0..n {
            if v >> j & 1 == 1 {
                continue;
            }
            let w = v | 1 << j;
            let cw = circles(w);
            let sign: i64 = if (v & ((1 << j) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            let (a, b) = (cv[xs[j][0]], cv[xs[j][2]]);
            for x in 0..1usize << nc {
                let mut base = 0usize;
                for ed in 0..e {
                    let c = cv[ed];
                    if c != a && c != b && x >> c & 1 == 1 {
                        base |= 1 << cw[ed];
                    }
                }
                let mut terms: Vec<usize> = Vec::new();
                if a != b {
                    let t = cw[xs[j][0]];
                    match (x >> a & 1, x >> b & 1) {
                        (0, 0) => terms.push(base),
                        (1, 0) | (0, 1) => terms.push(base | 1 << t),
                        _ => {}
                    }
                } else {
                    let (t1, t2) = (cw[xs[j][0]], cw[xs[j][1]]);
                    if x >> a & 1 == 0 {
                        terms.push(base | 1 << t2);
                        terms.push(base | 1 << t1);
                    } else {
                        terms.push(base | 1 << t1 | 1 << t2);
                    }
                }
                for y in terms {
                    let key = (start[v] + x, start[w] + y);
                    let cur = ic.entries.get(&key).cloned().unwrap_or(Int::ZERO);
                    ic.entries.insert(key, cur + Int::from(sign));
                }
            }
        }
    }
    ic.entries.retain(|_, v| !v.is_zero());
    ic.homology()
}
