use crate::chain::lattice::{kernel, smith, solve, solve_with, IntMatrix};
use crate::chain::{diff_matrix, graded_basis, include, FreeComplex, HomClass, Infeasible};
use crate::zring::Int;

/// `ord_G` of a class, with evidence on both sides of the answer.
#[derive(Clone, Debug)]
pub struct TorsionOrder {
    /// `None` when no power of G makes the class a boundary.
    pub order: Option<u32>,
    /// A chain `y` with `d y = G^order x`, over the graded basis in degree `i - 1`.
    pub bounding: Option<Vec<Int>>,
    /// Proof that `G^(order - 1) x` (or `G^M x` for infinite order) is not a boundary.
    pub refutation: Option<Infeasible>,
}

/// Lowest quantum degree among generators in homological degrees `i-1..=i+1`.
fn q_floor(c: &FreeComplex, i: i64) -> Option<i64> {
    c.gens().iter().filter(|g| (g.i - i).abs() <= 1).map(|g| g.q).min()
}

/// `G^k x` as a vector over the graded basis of `(i, q - 2k)`, with the boundary matrix there.
fn shifted(c: &FreeComplex, i: i64, q: i64, x: &[Int], k: u32) -> (Vec<Int>, IntMatrix) {
    let from = graded_basis(c, i, q);
    let to = graded_basis(c, i, q - 2 * k as i64);
    let (d, _, tgt) = diff_matrix(c, i - 1, q - 2 * k as i64);
    debug_assert_eq!(tgt, to);
    (include(x, &from, &to), d)
}

pub fn torsion_order(x: &HomClass) -> TorsionOrder {
    let c = &x.ambient;
    let (i, q) = (x.grading.i, x.grading.q);
    let Some(floor) = q_floor(c, i) else {
        return TorsionOrder { order: Some(0), bounding: Some(Vec::new()), refutation: None };
    };
    let m = ((q - floor).max(0) / 2 + 1) as u32;
    let mut last = None;
    for k in 0..=m {
        let (v, d) = shifted(c, i, q, &x.coords, k);
        let s = smith(&d);
        match solve_with(&s, d.cols(), &v) {
            Ok(y) => return TorsionOrder { order: Some(k), bounding: Some(y), refutation: last },
            Err(cert) => last = Some(Infeasible { matrix: d, rhs: v, cert }),
        }
    }
    TorsionOrder { order: None, bounding: None, refutation: last }
}

/// Generators of `{x in C_i(q) : G^k x is a boundary}`, as columns.
fn preimage(c: &FreeComplex, i: i64, q: i64, k: u32) -> Vec<Vec<Int>> {
    let from = graded_basis(c, i, q);
    let to = graded_basis(c, i, q - 2 * k as i64);
    let (d, _, _) = diff_matrix(c, i - 1, q - 2 * k as i64);
    let n = from.len();
    // [E_k | -D] (x, y) = 0
    let mut a = IntMatrix::zeros(to.len(), n + d.cols());
    for (col, g) in from.iter().enumerate() {
        let r = to.binary_search(g).expect("basis inclusion");
        a[(r, col)] = Int::ONE;
    }
    for r in 0..d.rows() {
        for col in 0..d.cols() {
            a[(r, n + col)] = -&d[(r, col)];
        }
    }
    kernel(&a).into_iter().map(|v| v[..n].to_vec()).filter(|v| v.iter().any(|x| !x.is_zero())).collect()
}

fn contains(span: &[Vec<Int>], n: usize, vs: &[Vec<Int>]) -> bool {
    let m = IntMatrix::from_cols(n, span);
    let s = smith(&m);
    vs.iter().all(|v| solve_with(&s, span.len(), v).is_ok())
}

/// Largest G-torsion order in the homology of `c`, over all gradings.
pub fn u_g(c: &FreeComplex) -> u32 {
    let mut best = 0;
    for i in c.hom_degrees() {
        let Some(floor) = q_floor(c, i) else { continue };
        let Some(top) = c.gens().iter().filter(|g| g.i == i).map(|g| g.q).max() else { continue };
        for q in (floor - 2..=top).rev() {
            let n = graded_basis(c, i, q).len();
            if n == 0 {
                continue;
            }
            let m = ((q - floor).max(0) / 2 + 1) as u32;
            if m <= best {
                continue;
            }
            let full = preimage(c, i, q, m);
            let zero = preimage(c, i, q, 0);
            if contains(&zero, n, &full) {
                continue;
            }
            // T_k grows with k; find the first k where it reaches T_M.
            let (mut lo, mut hi) = (0u32, m);
            while hi - lo > 1 {
                let mid = (lo + hi) / 2;
                if contains(&preimage(c, i, q, mid), n, &full) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            best = best.max(hi);
        }
    }
    best
}

#[allow(dead_code)]
fn solve_exact(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    solve(a, b).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{direct_sum, dual, Grading};
    use crate::pieces::{dual_staircase, staircase};
    use crate::zring::{int, GMonomial};

    #[test]
    fn knights_and_pawns() {
        assert_eq!(u_g(&FreeComplex::pawn(Grading::new(0, 0))), 0);
        for k in 1..5 {
            let kn = FreeComplex::knight(GMonomial::g(k), Grading::new(0, 0));
            assert_eq!(u_g(&kn), k);
            let x = HomClass::new(kn.clone(), Grading::new(1, 2 * k as i64), vec![int(1)]).unwrap();
            let t = torsion_order(&x);
            assert_eq!(t.order, Some(k));
            assert!(t.refutation.unwrap().verify());
        }
        let p = FreeComplex::pawn(Grading::new(0, 0));
        let x = HomClass::new(p, Grading::new(0, 0), vec![int(1)]).unwrap();
        let t = torsion_order(&x);
        assert_eq!(t.order, None);
        assert!(t.refutation.unwrap().verify());
        assert_eq!(u_g(&FreeComplex::knight(GMonomial::new(2, 0), Grading::new(0, 0))), 0);
    }

    #[test]
    fn staircases() {
        for n in 1..=6 {
            let s = staircase(n);
            assert_eq!(u_g(&s), n);
            assert_eq!(u_g(&dual_staircase(n)), 0);
            // The class of b_0 sits at (1, 2n).
            let basis = graded_basis(&s, 1, 2 * n as i64);
            let coords: Vec<Int> = basis.iter().map(|&g| if g == n as usize + 1 { int(1) } else { int(0) }).collect();
            let x = HomClass::new(s.clone(), Grading::new(1, 2 * n as i64), coords).unwrap();
            assert_eq!(torsion_order(&x).order, Some(n));
        }
        let sum = direct_sum(&staircase(2), &FreeComplex::knight(GMonomial::g(3), Grading::new(4, 0)));
        assert_eq!(u_g(&sum), 3);
        assert_eq!(u_g(&dual(&FreeComplex::knight(GMonomial::g(2), Grading::new(0, 0)))), 2);
    }
}
