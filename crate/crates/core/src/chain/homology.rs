use super::complex::{FreeComplex, Grading};
use super::lattice::{smith, solve_with, IntMatrix, Smith};
use crate::zring::{floor_div, Int};

/// Generators spanning the degree-`q` part of `C_i`: those `e` with `q_e >= q`
/// and `q_e = q mod 2`, contributing `G^((q_e - q)/2) e`.
pub fn graded_basis(c: &FreeComplex, i: i64, q: i64) -> Vec<usize> {
    (0..c.len())
        .filter(|&g| {
            let x = c.grading(g);
            x.i == i && x.q >= q && (x.q - q).rem_euclid(2) == 0
        })
        .collect()
}

/// Integer matrix of `d: C_i -> C_{i+1}` in quantum degree `q`.
pub(crate) fn diff_matrix(c: &FreeComplex, i: i64, q: i64) -> (IntMatrix, Vec<usize>, Vec<usize>) {
    let src = graded_basis(c, i, q);
    let tgt = graded_basis(c, i + 1, q);
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (col, &a) in src.iter().enumerate() {
        for (row, &b) in tgt.iter().enumerate() {
            if let Some(e) = c.entries().get(&(a, b)) {
                m[(row, col)] = e.coeff().clone();
            }
        }
    }
    (m, src, tgt)
}

/// Coordinates of a vector in basis `from` re-expressed in the superset basis `to`.
pub(crate) fn include(v: &[Int], from: &[usize], to: &[usize]) -> Vec<Int> {
    let mut out = vec![Int::ZERO; to.len()];
    for (x, g) in v.iter().zip(from) {
        let pos = to.binary_search(g).expect("G multiplication includes bases");
        out[pos] = x.clone();
    }
    out
}

/// The group `H_{i}` in quantum degree `q` with explicit generators.
#[derive(Clone, Debug)]
pub struct GradedGroup {
    pub grading: Grading,
    pub free_rank: usize,
    /// Orders of the cyclic torsion summands, each > 1.
    pub torsion: Vec<Int>,
    /// Order of each generator (0 = infinite), torsion generators first.
    pub orders: Vec<Int>,
    /// Generators as coordinates over [`graded_basis`].
    pub generators: Vec<Vec<Int>>,
    /// Multiplication by G into `(i, q - 2)`: column `j` is the image of generator `j`.
    pub g_action: IntMatrix,
}

impl GradedGroup {
    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }
}

pub(crate) struct HData {
    basis: Vec<usize>,
    k: IntMatrix,
    cycles_smith: Smith,
    cycles: usize,
    rel_smith: Smith,
    orders: Vec<Int>,
    keep: Vec<usize>,
}

impl HData {
    pub(crate) fn new(c: &FreeComplex, i: i64, q: i64) -> HData {
        let (d, basis, _) = diff_matrix(c, i, q);
        let (din, _, _) = diff_matrix(c, i - 1, q);
        let n = basis.len();
        let ds = smith(&d);
        let kcols: Vec<Vec<Int>> = (ds.rank()..n).map(|j| ds.q.col(j)).collect();
        let k = IntMatrix::from_cols(n, &kcols);
        let cycles_smith = smith(&k);
        let z = kcols.len();
        // Boundaries in cycle coordinates.
        let mut rel = IntMatrix::zeros(z, din.cols());
        for col in 0..din.cols() {
            let y = solve_with(&cycles_smith, z, &din.col(col)).expect("boundaries are cycles");
            for (r, v) in y.into_iter().enumerate() {
                rel[(r, col)] = v;
            }
        }
        let rel_smith = smith(&rel);
        let mut orders = Vec::new();
        let mut keep = Vec::new();
        for j in 0..z {
            let o = if j < rel_smith.rank() { rel_smith.diag[j].clone() } else { Int::ZERO };
            if !o.is_one() {
                keep.push(j);
                orders.push(o);
            }
        }
        HData { basis, k, cycles_smith, cycles: z, rel_smith, orders, keep }
    }

    /// Coordinates in H of a cycle given over the graded basis.
    pub(crate) fn coords(&self, x: &[Int]) -> Vec<Int> {
        let y = solve_with(&self.cycles_smith, self.cycles, x).expect("argument is a cycle");
        let h = self.rel_smith.p.mul_vec(&y);
        self.keep
            .iter()
            .zip(&self.orders)
            .map(|(&j, o)| if o.is_zero() { h[j].clone() } else { &h[j] - floor_div(&h[j], o) * o })
            .collect()
    }

    fn generators(&self) -> Vec<Vec<Int>> {
        let g = self.k.mul(&self.rel_smith.p_inv);
        self.keep.iter().map(|&j| g.col(j)).collect()
    }
}

pub fn homology_at(c: &FreeComplex, g: Grading) -> GradedGroup {
    let h = HData::new(c, g.i, g.q);
    let below = HData::new(c, g.i, g.q - 2);
    let gens = h.generators();
    let mut act = IntMatrix::zeros(below.orders.len(), gens.len());
    for (j, x) in gens.iter().enumerate() {
        let y = below.coords(&include(x, &h.basis, &below.basis));
        for (r, v) in y.into_iter().enumerate() {
            act[(r, j)] = v;
        }
    }
    let free_rank = h.orders.iter().filter(|o| o.is_zero()).count();
    let torsion = h.orders.iter().filter(|o| !o.is_zero()).cloned().collect();
    GradedGroup { grading: g, free_rank, torsion, orders: h.orders.clone(), generators: gens, g_action: act }
}

/// A cycle of the degree-`q` part of `C_i`, in coordinates over [`graded_basis`].
#[derive(Clone, Debug)]
pub struct HomClass {
    pub ambient: FreeComplex,
    pub grading: Grading,
    pub coords: Vec<Int>,
}

impl HomClass {
    /// Fails unless `coords` has the right length and is a cycle.
    pub fn new(ambient: FreeComplex, grading: Grading, coords: Vec<Int>) -> Option<Self> {
        let (d, src, _) = diff_matrix(&ambient, grading.i, grading.q);
        if coords.len() != src.len() || d.mul_vec(&coords).iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(HomClass { ambient, grading, coords })
    }
}
