use std::collections::BTreeMap;

use super::TqftError;
use crate::chain::lattice::{smith, IntMatrix};
use crate::chain::{FreeComplex, Grading};
use crate::zring::{CoefficientSpec, FieldOps, GPolynomial, Int, PrimeField, Rationals};

/// A graded complex of free abelian groups with integer differential.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntComplex {
    pub gens: Vec<Grading>,
    pub entries: BTreeMap<(usize, usize), Int>,
}

impl IntComplex {
    /// Ranks and torsion of `H` at every grading carrying a generator.
    pub fn homology(&self) -> BTreeMap<Grading, (usize, Vec<Int>)> {
        let mut out = BTreeMap::new();
        let mut grads: Vec<Grading> = self.gens.clone();
        grads.sort();
        grads.dedup();
        for g in grads {
            let (d_out, n) = self.block(g);
            let (d_in, _) = self.block(Grading::new(g.i - 1, g.q));
            let r_out = smith(&d_out).rank();
            let s_in = smith(&d_in);
            let free = n - r_out - s_in.rank();
            let tors: Vec<Int> = s_in.diag.iter().filter(|d| !d.is_one()).cloned().collect();
            if free > 0 || !tors.is_empty() {
                out.insert(g, (free, tors));
            }
        }
        out
    }

    /// Matrix of `d` out of grading `g`, and the number of generators at `g`.
    fn block(&self, g: Grading) -> (IntMatrix, usize) {
        let src: Vec<usize> = (0..self.gens.len()).filter(|&x| self.gens[x] == g).collect();
        let tgt: Vec<usize> = (0..self.gens.len()).filter(|&x| self.gens[x] == Grading::new(g.i + 1, g.q)).collect();
        let mut m = IntMatrix::zeros(tgt.len(), src.len());
        for (c, a) in src.iter().enumerate() {
            for (r, b) in tgt.iter().enumerate() {
                if let Some(v) = self.entries.get(&(*a, *b)) {
                    m[(r, c)] = v.clone();
                }
            }
        }
        (m, src.len())
    }
}

/// Each `Z[G]{m}` becomes `Z{m-1} + Z{m+1}`; `G` acts as `[[0, 2], [0, 0]]`.
pub fn unreduced_from_reduced(c: &FreeComplex) -> IntComplex {
    let mut out = IntComplex::default();
    for g in c.gens() {
        out.gens.push(Grading::new(g.i, g.q - 1));
        out.gens.push(Grading::new(g.i, g.q + 1));
    }
    for (&(s, t), m) in c.entries() {
        let n = m.coeff().clone();
        match m.power() {
            0 => {
                out.entries.insert((2 * s, 2 * t), n.clone());
                out.entries.insert((2 * s + 1, 2 * t + 1), n);
            }
            1 => {
                out.entries.insert((2 * s + 1, 2 * t), n * Int::from(2));
            }
            _ => {}
        }
    }
    out
}

/// Decomposition of a complex over `F[G]`: pawns and knights `G^k`, `k >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedPid {
    pub pawns: Vec<Grading>,
    /// Source grading and power.
    pub knights: Vec<(Grading, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecializedTable {
    /// `G = 0`: `(free rank, torsion)` per grading.
    Integral(BTreeMap<Grading, (usize, Vec<Int>)>),
    /// `G = 1`: dimension per homological degree.
    Ungraded {
        p: u64,
        dims: BTreeMap<i64, usize>,
    },
    Pid {
        p: u64,
        decomposition: GradedPid,
    },
}

impl SpecializedTable {
    pub fn total_dimension(&self) -> usize {
        match self {
            SpecializedTable::Integral(t) => t.values().map(|(r, tor)| r + tor.len()).sum(),
            SpecializedTable::Ungraded { dims, .. } => dims.values().sum(),
            SpecializedTable::Pid { decomposition, .. } => decomposition.pawns.len() + 2 * decomposition.knights.len(),
        }
    }

    /// The same table with every grading moved by `(di, dq)`.
    pub fn shifted(&self, di: i64, dq: i64) -> SpecializedTable {
        match self {
            SpecializedTable::Integral(t) => {
                SpecializedTable::Integral(t.iter().map(|(g, v)| (g.shift(di, dq), v.clone())).collect())
            }
            SpecializedTable::Ungraded { p, dims } => {
                SpecializedTable::Ungraded { p: *p, dims: dims.iter().map(|(i, v)| (i + di, *v)).collect() }
            }
            SpecializedTable::Pid { p, decomposition } => {
                let mut d = GradedPid {
                    pawns: decomposition.pawns.iter().map(|g| g.shift(di, dq)).collect(),
                    knights: decomposition.knights.iter().map(|(g, k)| (g.shift(di, dq), *k)).collect(),
                };
                d.pawns.sort();
                d.knights.sort();
                SpecializedTable::Pid { p: *p, decomposition: d }
            }
        }
    }
}

pub fn specialized_homology(c: &FreeComplex, spec: CoefficientSpec) -> SpecializedTable {
    match spec {
        CoefficientSpec::IntegersGZero => {
            let mut ic = IntComplex { gens: c.gens().to_vec(), entries: BTreeMap::new() };
            for (&(s, t), m) in c.entries() {
                if m.power() == 0 {
                    ic.entries.insert((s, t), m.coeff().clone());
                }
            }
            SpecializedTable::Integral(ic.homology())
        }
        CoefficientSpec::FieldGOne(p) => {
            let dims = if p == 0 { g_one_dims(c, &Rationals) } else { g_one_dims(c, &PrimeField(p)) };
            SpecializedTable::Ungraded { p, dims }
        }
        CoefficientSpec::FieldPGraded(p) => {
            let decomposition = if p == 0 { pid_decompose(c, &Rationals) } else { pid_decompose(c, &PrimeField(p)) };
            SpecializedTable::Pid { p, decomposition }
        }
    }
}

fn rank<F: FieldOps>(f: &F, mut rows: Vec<Vec<F::E>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, piv);
        let inv = f.inv(&rows[r][c]);
        for i in r + 1..rows.len() {
            if f.is_zero(&rows[i][c]) {
                continue;
            }
            let k = f.mul(&rows[i][c], &inv);
            for j in c..cols {
                let v = f.sub(&rows[i][j], &f.mul(&k, &rows[r][j]));
                rows[i][j] = v;
            }
        }
        r += 1;
    }
    r
}

fn g_one_dims<F: FieldOps>(c: &FreeComplex, f: &F) -> BTreeMap<i64, usize> {
    let degs = c.hom_degrees();
    let idx: Vec<Vec<usize>> = degs.iter().map(|&i| (0..c.len()).filter(|&g| c.grading(g).i == i).collect()).collect();
    let mut ranks = BTreeMap::new();
    for (n, &i) in degs.iter().enumerate() {
        let src = &idx[n];
        let Some(tpos) = degs.iter().position(|&j| j == i + 1) else {
            ranks.insert(i, 0);
            continue;
        };
        let tgt = &idx[tpos];
        let rows: Vec<Vec<F::E>> = tgt
            .iter()
            .map(|&b| {
                src.iter()
                    .map(|&a| {
                        let m = c.entry(a, b);
                        f.from_int(m.coeff())
                    })
                    .collect()
            })
            .collect();
        ranks.insert(i, rank(f, rows));
    }
    let mut dims = BTreeMap::new();
    for (n, &i) in degs.iter().enumerate() {
        let dim = idx[n].len() - ranks[&i] - ranks.get(&(i - 1)).copied().unwrap_or(0);
        if dim > 0 {
            dims.insert(i, dim);
        }
    }
    dims
}

/// Splits a complex over `F[G]` by clearing around an entry of least power.
/// Powers are implied by the gradings, so only field coefficients are stored.
pub(crate) fn pid_decompose<F: FieldOps>(c: &FreeComplex, f: &F) -> GradedPid {
    let n = c.len();
    let gens = c.gens();
    let power = |s: usize, t: usize| ((gens[t].q - gens[s].q) / 2) as u32;
    let mut out: Vec<BTreeMap<usize, F::E>> = vec![BTreeMap::new(); n];
    let mut inn: Vec<BTreeMap<usize, F::E>> = vec![BTreeMap::new(); n];
    let set =
        |out: &mut Vec<BTreeMap<usize, F::E>>, inn: &mut Vec<BTreeMap<usize, F::E>>, s: usize, t: usize, v: F::E| {
            if f.is_zero(&v) {
                out[s].remove(&t);
                inn[t].remove(&s);
            } else {
                out[s].insert(t, v.clone());
                inn[t].insert(s, v);
            }
        };
    for (&(s, t), m) in c.entries() {
        set(&mut out, &mut inn, s, t, f.from_int(m.coeff()));
    }
    let get =
        |out: &Vec<BTreeMap<usize, F::E>>, s: usize, t: usize| out[s].get(&t).cloned().unwrap_or_else(|| f.zero());
    let mut alive = vec![true; n];
    let mut res = GradedPid::default();
    loop {
        let best = (0..n).flat_map(|s| out[s].keys().map(move |&t| (s, t))).min_by_key(|&(s, t)| (power(s, t), s, t));
        let Some((b, cc)) = best else { break };
        let einv = f.inv(&out[b][&cc]);
        // Column: x' = x - (D[x->c]/e) G^j b clears D[x->c]; entries into x move onto b.
        let xs: Vec<(usize, F::E)> = inn[cc].iter().filter(|(&x, _)| x != b).map(|(&x, v)| (x, v.clone())).collect();
        for (x, v) in xs {
            let m = f.mul(&v, &einv);
            let bout: Vec<(usize, F::E)> = out[b].iter().map(|(&y, w)| (y, w.clone())).collect();
            for (y, w) in bout {
                let nv = f.sub(&get(&out, x, y), &f.mul(&m, &w));
                set(&mut out, &mut inn, x, y, nv);
            }
            let ws: Vec<(usize, F::E)> = inn[x].iter().map(|(&w, v)| (w, v.clone())).collect();
            for (w, v) in ws {
                let nv = f.add(&get(&out, w, b), &f.mul(&v, &m));
                set(&mut out, &mut inn, w, b, nv);
            }
        }
        // Row: c' = c + (D[b->y]/e) G^j y clears D[b->y]; d(c') picks up d(y).
        let ys: Vec<(usize, F::E)> = out[b].iter().filter(|(&y, _)| y != cc).map(|(&y, v)| (y, v.clone())).collect();
        for (y, v) in ys {
            let m = f.mul(&v, &einv);
            set(&mut out, &mut inn, b, y, f.zero());
            let ws: Vec<(usize, F::E)> = inn[y].iter().filter(|(&w, _)| w != b).map(|(&w, v)| (w, v.clone())).collect();
            for (w, u) in ws {
                // d(w) = a c + u y = a c' + (u - a m) y, and c has no other inputs now.
                let a = get(&out, w, cc);
                let nv = f.sub(&u, &f.mul(&a, &m));
                set(&mut out, &mut inn, w, y, nv);
            }
            let yout: Vec<(usize, F::E)> = out[y].iter().map(|(&z, w)| (z, w.clone())).collect();
            for (z, w) in yout {
                let nv = f.add(&get(&out, cc, z), &f.mul(&m, &w));
                set(&mut out, &mut inn, cc, z, nv);
            }
        }
        debug_assert!(inn[b].is_empty() && out[cc].is_empty());
        for g in [b, cc] {
            for t in std::mem::take(&mut out[g]).into_keys() {
                inn[t].remove(&g);
            }
            for s in std::mem::take(&mut inn[g]).into_keys() {
                out[s].remove(&g);
            }
            alive[g] = false;
        }
        res.knights.push((gens[b], power(b, cc)));
    }
    res.pawns = (0..n).filter(|&g| alive[g]).map(|g| gens[g]).collect();
    res.pawns.sort();
    res.knights.sort();
    res
}

/// Quantum shift of the unique pawn of `c` over `F[G]`, `F = Q` when `p = 0`.
pub fn s_invariant(c: &FreeComplex, p: u64) -> Result<i64, TqftError> {
    let d = if p == 0 { pid_decompose(c, &Rationals) } else { pid_decompose(c, &PrimeField(p)) };
    match d.pawns.as_slice() {
        [g] => Ok(g.q),
        other => Err(TqftError::PawnCount(other.len())),
    }
}

/// Value of a closed connected surface of genus `g`: 0 for even genus, `2 G^(g-1)` for odd.
pub fn closed_surface_value(g: u32) -> GPolynomial {
    if g.is_multiple_of(2) {
        GPolynomial::zero()
    } else {
        GPolynomial::monomial(2, g - 1)
    }
}
