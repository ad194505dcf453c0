use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::complex::FreeComplex;
pub use super::lattice::NonMembership;
use super::lattice::{kernel, smith, solve_with, IntMatrix};
use crate::zring::{GMonomial, GPolynomial, Int};

/// A Z[G]-linear map between free complexes; `(a, b) -> p` means `f(e_a)` contains `p * e_b`.
///
/// Maps need not preserve either grading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainMap {
    pub src_len: usize,
    pub tgt_len: usize,
    entries: BTreeMap<(usize, usize), GPolynomial>,
}

impl ChainMap {
    pub fn zero(src_len: usize, tgt_len: usize) -> Self {
        ChainMap { src_len, tgt_len, entries: BTreeMap::new() }
    }

    pub fn scalar(n: usize, p: &GPolynomial) -> Self {
        let mut m = Self::zero(n, n);
        for g in 0..n {
            m.set(g, g, p.clone());
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &GPolynomial::one())
    }

    pub fn differential(c: &FreeComplex) -> Self {
        let mut m = Self::zero(c.len(), c.len());
        for (&(s, t), e) in c.entries() {
            m.set(s, t, e.to_poly());
        }
        m
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), GPolynomial> {
        &self.entries
    }

    pub fn get(&self, a: usize, b: usize) -> GPolynomial {
        self.entries.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, a: usize, b: usize, p: GPolynomial) {
        assert!(a < self.src_len && b < self.tgt_len, "map entry out of range");
        if p.is_zero() {
            self.entries.remove(&(a, b));
        } else {
            self.entries.insert((a, b), p);
        }
    }

    pub fn add_to(&mut self, a: usize, b: usize, p: &GPolynomial) {
        let v = &self.get(a, b) + p;
        self.set(a, b, v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self` after `first`: `(self . first)(e_a) = self(first(e_a))`.
    pub fn after(&self, first: &ChainMap) -> ChainMap {
        assert_eq!(first.tgt_len, self.src_len, "composition size mismatch");
        let mut rows: FxHashMap<usize, Vec<(usize, &GPolynomial)>> = FxHashMap::default();
        for ((b, c), p) in &self.entries {
            rows.entry(*b).or_default().push((*c, p));
        }
        let mut out = ChainMap::zero(first.src_len, self.tgt_len);
        for ((a, b), p) in &first.entries {
            if let Some(r) = rows.get(b) {
                for (c, q) in r {
                    out.add_to(*a, *c, &(p * *q));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!((self.src_len, self.tgt_len), (other.src_len, other.tgt_len));
        let mut out = self.clone();
        for ((a, b), p) in &other.entries {
            out.add_to(*a, *b, p);
        }
        out
    }

    pub fn neg(&self) -> ChainMap {
        let mut out = self.clone();
        for p in out.entries.values_mut() {
            *p = -&*p;
        }
        out
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    pub fn mul_poly(&self, p: &GPolynomial) -> ChainMap {
        let mut out = ChainMap::zero(self.src_len, self.tgt_len);
        for ((a, b), q) in &self.entries {
            out.set(*a, *b, q * p);
        }
        out
    }

    pub fn transpose(&self) -> ChainMap {
        let mut out = ChainMap::zero(self.tgt_len, self.src_len);
        for ((a, b), p) in &self.entries {
            out.set(*b, *a, p.clone());
        }
        out
    }

    /// Relabels source and target generators.
    pub fn reindex(&self, src: &[usize], tgt: &[usize], src_len: usize, tgt_len: usize) -> ChainMap {
        let mut out = ChainMap::zero(src_len, tgt_len);
        for ((a, b), p) in &self.entries {
            out.add_to(src[*a], tgt[*b], p);
        }
        out
    }

    /// `d_dst . self = self . d_src`.
    pub fn is_chain_map(&self, src: &FreeComplex, dst: &FreeComplex) -> bool {
        let (ds, dd) = (ChainMap::differential(src), ChainMap::differential(dst));
        dd.after(self) == self.after(&ds)
    }

    /// `h . d + d . h = self`, where `self` is an endomorphism of `c`.
    pub fn is_nullhomotopic_via(&self, c: &FreeComplex, h: &ChainMap) -> bool {
        let d = ChainMap::differential(c);
        h.after(&d).add(&d.after(h)) == *self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((a, b), p)| {
                let terms: Vec<GMonomial> = p.terms().collect();
                serde_json::json!([a, b, terms])
            })
            .collect();
        serde_json::json!({"src": self.src_len, "tgt": self.tgt_len, "entries": entries})
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapMode {
    /// Homological degree preserved.
    Graded,
    /// Any homological offset.
    Ungraded,
}

/// Sparse integer system: rows keyed by generator pairs, unknowns by index.
#[derive(Default)]
struct LinSystem {
    n: usize,
    rows: BTreeMap<(usize, usize), BTreeMap<usize, Int>>,
    rhs: BTreeMap<(usize, usize), Int>,
}

impl LinSystem {
    fn add(&mut self, row: (usize, usize), var: usize, c: &Int) {
        let r = self.rows.entry(row).or_default();
        let v = r.entry(var).or_insert(Int::ZERO);
        *v += c;
    }

    /// Connected blocks: (rows, unknowns); unknowns in no row come last, alone.
    fn blocks(&self) -> Vec<(Vec<(usize, usize)>, Vec<usize>)> {
        let keys: Vec<(usize, usize)> = self.rows.keys().chain(self.rhs.keys()).cloned().collect();
        let mut row_idx: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for k in keys {
            let n = row_idx.len();
            row_idx.entry(k).or_insert(n);
        }
        let total = self.n + row_idx.len();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (k, r) in &self.rows {
            let ri = self.n + row_idx[k];
            for v in r.keys() {
                let (a, b) = (find(&mut parent, ri), find(&mut parent, *v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, (Vec<(usize, usize)>, Vec<usize>)> = BTreeMap::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().1.push(v);
        }
        for (k, &i) in &row_idx {
            let r = find(&mut parent, self.n + i);
            groups.entry(r).or_default().0.push(*k);
        }
        groups.into_values().collect()
    }

    fn matrix(&self, rows: &[(usize, usize)], vars: &[usize]) -> (IntMatrix, Vec<Int>) {
        let pos: FxHashMap<usize, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut m = IntMatrix::zeros(rows.len(), vars.len());
        let mut b = vec![Int::ZERO; rows.len()];
        for (r, k) in rows.iter().enumerate() {
            if let Some(row) = self.rows.get(k) {
                for (v, c) in row {
                    m[(r, pos[v])] = c.clone();
                }
            }
            if let Some(x) = self.rhs.get(k) {
                b[r] = x.clone();
            }
        }
        (m, b)
    }

    fn kernel(&self) -> Vec<Vec<(usize, Int)>> {
        let mut out = Vec::new();
        for (rows, vars) in self.blocks() {
            if vars.is_empty() {
                continue;
            }
            let (m, _) = self.matrix(&rows, &vars);
            for k in kernel(&m) {
                out.push(vars.iter().cloned().zip(k).filter(|(_, x)| !x.is_zero()).collect());
            }
        }
        out
    }

    fn solve(&self) -> Result<Vec<Int>, Infeasible> {
        let mut x = vec![Int::ZERO; self.n];
        for (rows, vars) in self.blocks() {
            if rows.iter().all(|k| self.rhs.get(k).is_none_or(|v| v.is_zero())) {
                continue;
            }
            let (m, b) = self.matrix(&rows, &vars);
            let s = smith(&m);
            match solve_with(&s, vars.len(), &b) {
                Ok(y) => {
                    for (v, val) in vars.iter().zip(y) {
                        x[*v] = val;
                    }
                }
                Err(cert) => return Err(Infeasible { matrix: m, rhs: b, cert }),
            }
        }
        Ok(x)
    }
}

/// An unsolvable block `matrix * x = rhs` of a homotopy system with its certificate.
#[derive(Clone, Debug)]
pub struct Infeasible {
    pub matrix: IntMatrix,
    pub rhs: Vec<Int>,
    pub cert: NonMembership,
}

impl Infeasible {
    pub fn verify(&self) -> bool {
        self.cert.verify(&self.matrix, &self.rhs)
    }
}

fn forced_power(qa: i64, qb: i64, delta: i64) -> Option<u32> {
    let d = qb - qa - delta;
    (d >= 0 && d % 2 == 0).then_some((d / 2) as u32)
}

fn adjacency(c: &FreeComplex) -> (Vec<Vec<(usize, Int)>>, Vec<Vec<(usize, Int)>>) {
    let mut out = vec![Vec::new(); c.len()];
    let mut inn = vec![Vec::new(); c.len()];
    for (&(s, t), m) in c.entries() {
        out[s].push((t, m.coeff().clone()));
        inn[t].push((s, m.coeff().clone()));
    }
    (out, inn)
}

/// Unknown maps `src -> dst` of quantum degree `delta`: entry `(a, b)` is `x * G^k`
/// with `q_b = q_a + 2k + delta`. Returns `(unknowns, system)` for the given offsets.
fn map_unknowns(
    src: &FreeComplex,
    dst: &FreeComplex,
    delta: i64,
    offset: impl Fn(i64) -> bool,
) -> Vec<(usize, usize, u32)> {
    let mut vars = Vec::new();
    for (a, ga) in src.gens().iter().enumerate() {
        for (b, gb) in dst.gens().iter().enumerate() {
            if !offset(gb.i - ga.i) {
                continue;
            }
            if let Some(k) = forced_power(ga.q, gb.q, delta) {
                vars.push((a, b, k));
            }
        }
    }
    vars
}

fn assemble(vars: &[(usize, usize, u32)], v: &FreeComplex, w: &FreeComplex, sign_w: i64) -> LinSystem {
    // Rows (a, c): sum_b x(a,b) d_w(b,c) + sign_w * sum_x d_v(a,x) x(x,c).
    let (wout, _) = adjacency(w);
    let (_, vin) = adjacency(v);
    let s = Int::from(sign_w);
    let mut sys = LinSystem { n: vars.len(), ..Default::default() };
    for (n, &(a, b, _)) in vars.iter().enumerate() {
        for (c, coef) in &wout[b] {
            sys.add((a, *c), n, coef);
        }
        for (x, coef) in &vin[a] {
            sys.add((*x, b), n, &(coef * &s));
        }
    }
    sys
}

fn to_map(vars: &[(usize, usize, u32)], x: &[(usize, Int)], src: usize, tgt: usize) -> ChainMap {
    let mut m = ChainMap::zero(src, tgt);
    for (v, c) in x {
        let (a, b, k) = vars[*v];
        m.add_to(a, b, &GPolynomial::monomial(c.clone(), k));
    }
    m
}

/// Lattice basis of chain maps `src -> dst` of quantum degree `delta`.
pub fn solve_chain_map(src: &FreeComplex, dst: &FreeComplex, mode: MapMode, delta: i64) -> Vec<ChainMap> {
    let vars = map_unknowns(src, dst, delta, |t| mode == MapMode::Ungraded || t == 0);
    // d_dst f - f d_src = 0; with a in src and c in dst the row (a, c) collects both.
    let sys = assemble(&vars, src, dst, -1);
    sys.kernel().iter().map(|x| to_map(&vars, x, src.len(), dst.len())).collect()
}

#[derive(Clone, Debug)]
pub enum NullHomotopy {
    Found(ChainMap),
    None(Infeasible),
}

impl NullHomotopy {
    pub fn homotopy(&self) -> Option<&ChainMap> {
        match self {
            NullHomotopy::Found(h) => Some(h),
            NullHomotopy::None(_) => None,
        }
    }
}

/// Searches for `h` with `h . d + d . h = phi`, one homogeneous component of `phi` at a time.
pub fn solve_nullhomotopy(c: &FreeComplex, phi: &ChainMap) -> NullHomotopy {
    let mut parts: BTreeMap<(i64, i64), Vec<(usize, usize, Int)>> = BTreeMap::new();
    for ((a, b), p) in phi.entries() {
        let (ga, gb) = (c.grading(*a), c.grading(*b));
        for m in p.terms() {
            let key = (gb.i - ga.i, gb.q - ga.q - 2 * m.power() as i64);
            parts.entry(key).or_default().push((*a, *b, m.coeff().clone()));
        }
    }
    let mut h = ChainMap::zero(c.len(), c.len());
    for ((t, delta), rhs) in parts {
        let vars = map_unknowns(c, c, delta, |s| s == t - 1);
        let mut sys = assemble(&vars, c, c, 1);
        for (a, b, x) in rhs {
            sys.rhs.insert((a, b), x);
        }
        match sys.solve() {
            Ok(x) => {
                let x: Vec<(usize, Int)> = x.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
                h = h.add(&to_map(&vars, &x, c.len(), c.len()));
            }
            Err(e) => return NullHomotopy::None(e),
        }
    }
    NullHomotopy::Found(h)
}
