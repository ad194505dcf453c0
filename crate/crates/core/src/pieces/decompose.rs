use std::collections::BTreeMap;

use serde::Serialize;

use super::catalogue::PieceKind;
use crate::chain::{direct_sum, gaussian_eliminate, tensor, ChainMap, FreeComplex, Grading};
use crate::zring::{floor_div, is_negative, is_prime_power, GMonomial, GPolynomial, Int};

/// A piece placed in the block sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    #[serde(flatten)]
    pub kind: PieceKind,
    /// Grading offset from the standard position of the piece.
    pub at: Grading,
}

impl Summand {
    pub fn complex(&self) -> FreeComplex {
        self.kind.complex().shifted(self.at.i, self.at.q)
    }
}

/// `reduced` is the input after unit elimination; `witness` sends the block sum
/// isomorphically onto it, and `witness_inv` is its inverse.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub reduced: FreeComplex,
    pub summands: Vec<Summand>,
    pub block: FreeComplex,
    pub witness: ChainMap,
    pub witness_inv: ChainMap,
}

impl Decomposition {
    /// `d W = W d_block`, `W W^-1 = 1` and `W^-1 W = 1`, all exactly.
    pub fn verify(&self) -> bool {
        let (w, wi) = (&self.witness, &self.witness_inv);
        w.is_chain_map(&self.block, &self.reduced)
            && w.after(wi) == ChainMap::identity(self.reduced.len())
            && wi.after(w) == ChainMap::identity(self.block.len())
    }

    /// Block generator ranges, one per summand.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut at = 0;
        for s in &self.summands {
            let n = s.kind.complex().len();
            out.push(at..at + n);
            at += n;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pieces: Vec<serde_json::Value> = self
            .summands
            .iter()
            .map(|s| {
                let mut v = serde_json::to_value(&s.kind).expect("serializable");
                v["at"] = serde_json::json!([s.at.i, s.at.q]);
                v
            })
            .collect();
        serde_json::json!({"pieces": pieces, "witness": self.witness.to_json()})
    }
}

type Sparse = Vec<BTreeMap<usize, GMonomial>>;

/// The reduced complex under a running change of basis.
struct Work {
    gens: Vec<Grading>,
    out: Sparse,
    inn: Sparse,
    /// New basis element -> old coordinates.
    w: Sparse,
    /// Transpose of the inverse: new element -> coefficient in each old element.
    winv_t: Sparse,
    active: Vec<bool>,
}

fn put(m: &mut Sparse, a: usize, b: usize, v: GMonomial) {
    if v.is_zero() {
        m[a].remove(&b);
    } else {
        m[a].insert(b, v);
    }
}

fn get(m: &Sparse, a: usize, b: usize) -> GMonomial {
    m[a].get(&b).cloned().unwrap_or_else(GMonomial::zero)
}

fn abs(x: &Int) -> Int {
    if is_negative(x) {
        -x
    } else {
        x.clone()
    }
}

impl Work {
    fn new(c: &FreeComplex) -> Self {
        let n = c.len();
        let mut w = Work {
            gens: c.gens().to_vec(),
            out: vec![BTreeMap::new(); n],
            inn: vec![BTreeMap::new(); n],
            w: vec![BTreeMap::new(); n],
            winv_t: vec![BTreeMap::new(); n],
            active: vec![true; n],
        };
        for (&(s, t), m) in c.entries() {
            w.set(s, t, m.clone());
        }
        for g in 0..n {
            w.w[g].insert(g, GMonomial::one());
            w.winv_t[g].insert(g, GMonomial::one());
        }
        w
    }

    fn set(&mut self, s: usize, t: usize, v: GMonomial) {
        put(&mut self.out, s, t, v.clone());
        put(&mut self.inn, t, s, v);
    }

    /// Power of a monomial taking degree `q_y` generators to degree `q_x` ones.
    fn shift(&self, x: usize, y: usize) -> Option<u32> {
        let d = self.gens[y].q - self.gens[x].q;
        (self.gens[x].i == self.gens[y].i && d >= 0 && d % 2 == 0).then_some((d / 2) as u32)
    }

    /// Replaces basis element `x` by `x - m y`.
    fn op(&mut self, x: usize, y: usize, m: &GMonomial) {
        debug_assert_eq!(self.shift(x, y), Some(m.power()));
        let yout: Vec<(usize, GMonomial)> = self.out[y].iter().map(|(t, v)| (*t, v.clone())).collect();
        for (t, v) in yout {
            let nv = get(&self.out, x, t).add_same_power(&-m.mul(&v));
            self.set(x, t, nv);
        }
        let xin: Vec<(usize, GMonomial)> = self.inn[x].iter().map(|(s, v)| (*s, v.clone())).collect();
        for (s, v) in xin {
            let nv = get(&self.out, s, y).add_same_power(&v.mul(m));
            self.set(s, y, nv);
        }
        let wy: Vec<(usize, GMonomial)> = self.w[y].iter().map(|(o, v)| (*o, v.clone())).collect();
        for (o, v) in wy {
            let nv = get(&self.w, x, o).add_same_power(&-m.mul(&v));
            put(&mut self.w, x, o, nv);
        }
        let ix: Vec<(usize, GMonomial)> = self.winv_t[x].iter().map(|(o, v)| (*o, v.clone())).collect();
        for (o, v) in ix {
            let nv = get(&self.winv_t, y, o).add_same_power(&v.mul(m));
            put(&mut self.winv_t, y, o, nv);
        }
    }

    /// Replaces `x` by `-x`.
    fn flip(&mut self, x: usize) {
        let outs: Vec<usize> = self.out[x].keys().cloned().collect();
        for t in outs {
            let v = -get(&self.out, x, t);
            self.set(x, t, v);
        }
        let ins: Vec<usize> = self.inn[x].keys().cloned().collect();
        for s in ins {
            let v = -get(&self.out, s, x);
            self.set(s, x, v);
        }
        for v in self.w[x].values_mut() {
            *v = -&*v;
        }
        for v in self.winv_t[x].values_mut() {
            *v = -&*v;
        }
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, &GMonomial)> + '_ {
        (0..self.gens.len())
            .filter(|&s| self.active[s])
            .flat_map(move |s| self.out[s].iter().map(move |(t, v)| (s, *t, v)))
    }

    /// An entry dividing every entry in its row and column, least power first.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((u32, Int, usize, usize), (usize, usize))> = None;
        for (b, c, e) in self.entries() {
            let ok = self.inn[c].values().all(|x| e.divides(x)) && self.out[b].values().all(|x| e.divides(x));
            if ok {
                let key = (e.power(), abs(e.coeff()), b, c);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, (b, c)));
                }
            }
        }
        best.map(|(_, p)| p)
    }

    fn split_pair(&mut self, b: usize, c: usize) {
        let e = get(&self.out, b, c);
        let xs: Vec<(usize, GMonomial)> =
            self.inn[c].iter().filter(|(x, _)| **x != b).map(|(x, v)| (*x, v.clone())).collect();
        for (x, v) in xs {
            let m = e.div_exact(&v).expect("pivot divides its column");
            self.op(x, b, &m);
        }
        let ys: Vec<(usize, GMonomial)> =
            self.out[b].iter().filter(|(y, _)| **y != c).map(|(y, v)| (*y, v.clone())).collect();
        for (y, v) in ys {
            let m = e.div_exact(&v).expect("pivot divides its row");
            self.op(c, y, &-m);
        }
        debug_assert!(self.inn[b].is_empty() && self.out[c].is_empty());
        debug_assert_eq!(self.out[b].len(), 1);
        debug_assert_eq!(self.inn[c].len(), 1);
    }

    /// Change in (entry count, sum of |coefficients|) if `op(x, y, m)` were applied.
    fn delta(&self, x: usize, y: usize, m: &GMonomial) -> (i64, Int) {
        let mut dn = 0i64;
        let mut ds = Int::ZERO;
        let mut account = |old: GMonomial, new: GMonomial| {
            dn += (!new.is_zero()) as i64 - (!old.is_zero()) as i64;
            ds += abs(new.coeff()) - abs(old.coeff());
        };
        for (t, v) in &self.out[y] {
            let old = get(&self.out, x, *t);
            let new = old.add_same_power(&-m.mul(v));
            account(old, new);
        }
        for (s, v) in &self.inn[x] {
            let old = get(&self.out, *s, y);
            let new = old.add_same_power(&v.mul(m));
            account(old, new);
        }
        (dn, ds)
    }

    /// Best basis change that strictly shrinks the differential.
    fn sparsify(&self) -> Option<(usize, usize, GMonomial)> {
        let mut cands: Vec<(usize, usize, GMonomial)> = Vec::new();
        let quotients = |a: &GMonomial, b: &GMonomial| -> Vec<Int> {
            // Integers k with |b - k a| small.
            let f = floor_div(b.coeff(), a.coeff());
            [f.clone(), f + Int::ONE].into_iter().filter(|k| !k.is_zero()).collect()
        };
        for c in 0..self.gens.len() {
            if !self.active[c] {
                continue;
            }
            // Column c: reduce D[x2 -> c] by D[x -> c] via x2' = x2 - m x.
            let col: Vec<(usize, &GMonomial)> = self.inn[c].iter().map(|(x, v)| (*x, v)).collect();
            for &(x, a) in &col {
                for &(x2, b) in &col {
                    if x == x2 || b.power() < a.power() {
                        continue;
                    }
                    for k in quotients(a, b) {
                        cands.push((x2, x, GMonomial::new(k, b.power() - a.power())));
                    }
                }
            }
            // Row c: reduce D[c -> y] by D[c -> y2] via y2' = y2 - m y, adding b m to D[c -> y].
            let row: Vec<(usize, &GMonomial)> = self.out[c].iter().map(|(y, v)| (*y, v)).collect();
            for &(y, a) in &row {
                for &(y2, b) in &row {
                    if y == y2 || a.power() < b.power() {
                        continue;
                    }
                    for k in quotients(b, a) {
                        cands.push((y2, y, GMonomial::new(-k, a.power() - b.power())));
                    }
                }
            }
        }
        let mut best: Option<((i64, Int), (usize, usize, GMonomial))> = None;
        for (x, y, m) in cands {
            if self.shift(x, y) != Some(m.power()) {
                continue;
            }
            let d = self.delta(x, y, &m);
            let improves = d.0 < 0 || (d.0 == 0 && is_negative(&d.1));
            if improves && best.as_ref().is_none_or(|(k, _)| d < *k) {
                best = Some((d, (x, y, m)));
            }
        }
        best.map(|(_, op)| op)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.gens.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if !self.active[g] || seen[g] {
                continue;
            }
            let mut comp = vec![g];
            seen[g] = true;
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                k += 1;
                for y in self.out[x].keys().chain(self.inn[x].keys()) {
                    if !seen[*y] {
                        seen[*y] = true;
                        comp.push(*y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Matches a component to a catalogue piece, flipping signs as needed.
    /// Returns the piece, its offset, and the generators in catalogue order.
    fn identify(&mut self, comp: &[usize]) -> (PieceKind, Grading, Vec<usize>) {
        if let Some(r) = self.identify_known(comp) {
            return r;
        }
        let mut sub = FreeComplex::new(comp.iter().map(|&g| self.gens[g]).collect());
        for (a, &s) in comp.iter().enumerate() {
            for (b, &t) in comp.iter().enumerate() {
                let v = get(&self.out, s, t);
                if !v.is_zero() {
                    sub.set(a, b, v);
                }
            }
        }
        (PieceKind::Opaque { complex: sub }, Grading::new(0, 0), comp.to_vec())
    }

    fn identify_known(&mut self, comp: &[usize]) -> Option<(PieceKind, Grading, Vec<usize>)> {
        let edges: usize = comp.iter().map(|&g| self.out[g].len()).sum();
        match comp.len() {
            1 => return Some((PieceKind::Pawn, self.gens[comp[0]], comp.to_vec())),
            2 if edges == 1 => {
                let (s, t) = if self.out[comp[0]].is_empty() { (comp[1], comp[0]) } else { (comp[0], comp[1]) };
                if is_negative(get(&self.out, s, t).coeff()) {
                    self.flip(t);
                }
                let z = get(&self.out, s, t);
                let prime = (z.power() >= 1 && z.coeff().is_one()) || (z.power() == 0 && is_prime_power(z.coeff()));
                return prime.then(|| (PieceKind::Knight { z }, self.gens[s], vec![s, t]));
            }
            4 if edges == 4 => return self.identify_square(comp),
            _ => {}
        }
        self.identify_staircase(comp)
    }

    fn identify_square(&mut self, comp: &[usize]) -> Option<(PieceKind, Grading, Vec<usize>)> {
        let lo = comp.iter().map(|&g| self.gens[g].i).min()?;
        let at = |i: i64| comp.iter().cloned().filter(|&g| self.gens[g].i == i).collect::<Vec<_>>();
        let (s, mid, t) = (at(lo), at(lo + 1), at(lo + 2));
        if s.len() != 1 || mid.len() != 2 || t.len() != 1 {
            return None;
        }
        let (s, t) = (s[0], t[0]);
        // m_ts carries z1 out of s, m_st carries z2, with z1 of larger power.
        let (mut ts, mut st) = (mid[0], mid[1]);
        let key = |w: &Work, m: usize| {
            let v = get(&w.out, s, m);
            (v.power(), abs(v.coeff()))
        };
        if key(self, st) > key(self, ts) {
            std::mem::swap(&mut ts, &mut st);
        }
        if is_negative(get(&self.out, s, ts).coeff()) {
            self.flip(ts);
        }
        if is_negative(get(&self.out, s, st).coeff()) {
            self.flip(st);
        }
        let (z1, z2) = (get(&self.out, s, ts), get(&self.out, s, st));
        if get(&self.out, st, t).coeff() == &-z1.coeff() {
            self.flip(t);
        }
        let prime =
            |z: &GMonomial| (z.power() >= 1 && z.coeff().is_one()) || (z.power() == 0 && is_prime_power(z.coeff()));
        let ok = get(&self.out, st, t) == z1 && get(&self.out, ts, t) == -z2.clone() && prime(&z1) && prime(&z2);
        ok.then(|| (PieceKind::KnightTensor { z1, z2 }, self.gens[s], vec![s, st, ts, t]))
    }

    fn identify_staircase(&mut self, comp: &[usize]) -> Option<(PieceKind, Grading, Vec<usize>)> {
        let n2 = comp.len();
        if n2 < 3 || n2.is_multiple_of(2) {
            return None;
        }
        let nb = |w: &Work, g: usize| w.out[g].len() + w.inn[g].len();
        if comp.iter().any(|&g| nb(self, g) > 2) {
            return None;
        }
        let edges: usize = comp.iter().map(|&g| self.out[g].len()).sum();
        if edges != n2 - 1 {
            return None;
        }
        let ends: Vec<usize> = comp.iter().cloned().filter(|&g| nb(self, g) == 1).collect();
        if ends.len() != 2 {
            return None;
        }
        let entry = |w: &Work, a: usize, b: usize| {
            let v = get(&w.out, a, b);
            if v.is_zero() {
                get(&w.out, b, a)
            } else {
                v
            }
        };
        let neighbor = |w: &Work, g: usize, prev: Option<usize>| {
            w.out[g].keys().chain(w.inn[g].keys()).cloned().find(|&x| Some(x) != prev)
        };
        let two = |v: &GMonomial| v.power() == 0 && abs(v.coeff()) == Int::from(2);
        let start = ends.into_iter().find(|&e| {
            let x = neighbor(self, e, None).expect("end has a neighbour");
            two(&entry(self, e, x))
        })?;
        let mut path = vec![start];
        let mut prev = None;
        let mut cur = start;
        while let Some(x) = neighbor(self, cur, prev) {
            path.push(x);
            prev = Some(cur);
            cur = x;
        }
        if path.len() != n2 {
            return None;
        }
        // Entries along the path alternate 2, G, 2, G, ...
        for k in 0..n2 - 1 {
            let v = entry(self, path[k], path[k + 1]);
            let want_two = k % 2 == 0;
            let good = if want_two { two(&v) } else { v.power() == 1 && abs(v.coeff()).is_one() };
            if !good {
                return None;
            }
        }
        for k in 0..n2 - 1 {
            if is_negative(entry(self, path[k], path[k + 1]).coeff()) {
                self.flip(path[k + 1]);
            }
        }
        let n = (n2 / 2) as u32;
        let a: Vec<usize> = path.iter().step_by(2).cloned().collect();
        let b: Vec<usize> = path.iter().skip(1).step_by(2).cloned().collect();
        let mut order = a.clone();
        order.extend(&b);
        let ga = self.gens[a[0]];
        if self.gens[b[0]].i == ga.i + 1 {
            Some((PieceKind::Staircase { n }, ga.shift(0, -2 * n as i64), order))
        } else if self.gens[b[0]].i == ga.i - 1 {
            Some((PieceKind::DualStaircase { n }, ga.shift(0, 2 * n as i64), order))
        } else {
            None
        }
    }
}

/// Eliminates units, then splits the rest into catalogue pieces by unimodular basis changes.
pub fn decompose(c: &FreeComplex) -> Decomposition {
    let reduced = gaussian_eliminate(c);
    let mut w = Work::new(&reduced);
    let mut found: Vec<Vec<usize>> = Vec::new();
    loop {
        if let Some((b, cc)) = w.pivot() {
            w.split_pair(b, cc);
            w.active[b] = false;
            w.active[cc] = false;
            found.push(vec![b, cc]);
            continue;
        }
        if let Some((x, y, m)) = w.sparsify() {
            w.op(x, y, &m);
            continue;
        }
        break;
    }
    for g in found.iter().flatten() {
        w.active[*g] = true;
    }
    let mut comps = w.components();
    comps.sort_by_key(|comp| {
        let g = w.gens[comp[0]];
        (comp.iter().map(|&x| w.gens[x].i).min(), g.q, comp[0])
    });
    let mut summands = Vec::new();
    let mut order = Vec::new();
    let mut block = FreeComplex::empty();
    for comp in comps {
        let (kind, at, gens) = w.identify(&comp);
        let s = Summand { kind, at };
        block = direct_sum(&block, &s.complex());
        summands.push(s);
        order.extend(gens);
    }
    let n = reduced.len();
    let mut witness = ChainMap::zero(n, n);
    let mut witness_inv = ChainMap::zero(n, n);
    for (pos, &g) in order.iter().enumerate() {
        for (o, v) in &w.w[g] {
            witness.set(pos, *o, v.to_poly());
        }
        for (o, v) in &w.winv_t[g] {
            witness_inv.set(*o, pos, v.to_poly());
        }
    }
    Decomposition { reduced, summands, block, witness, witness_inv }
}

fn tensor_maps(f: &ChainMap, g: &ChainMap) -> ChainMap {
    let mut out = ChainMap::zero(f.src_len * g.src_len, f.tgt_len * g.tgt_len);
    for ((a, b), p) in f.entries() {
        for ((c, d), q) in g.entries() {
            out.add_to(a * g.src_len + c, b * g.tgt_len + d, &(p * q));
        }
    }
    out
}

/// Decomposes `A (x) B` piece by piece from decompositions of the factors.
///
/// The result is relative to `reduced = A' (x) B'` for the factors' reduced complexes,
/// which is homotopy equivalent to `A (x) B`.
pub fn decompose_tensor(a: &Decomposition, b: &Decomposition) -> Decomposition {
    let reduced = tensor(&a.reduced, &b.reduced);
    let (ra, rb) = (a.ranges(), b.ranges());
    let nb = b.block.len();
    let n = reduced.len();
    let mut summands = Vec::new();
    let mut block = FreeComplex::empty();
    // perm sends the new block sum into a.block (x) b.block.
    let mut perm = ChainMap::zero(n, n);
    let mut local_w = ChainMap::zero(n, n);
    let mut local_wi = ChainMap::zero(n, n);
    let mut at = 0;
    for (sa, ja) in a.summands.iter().zip(&ra) {
        for (sb, jb) in b.summands.iter().zip(&rb) {
            let piece = tensor(&sa.complex(), &sb.complex());
            let d = decompose(&piece);
            let m = piece.len();
            let (w, wi, bl, ss) = if d.reduced == piece {
                (d.witness, d.witness_inv, d.block, d.summands)
            } else {
                let opaque = Summand { kind: PieceKind::Opaque { complex: piece.clone() }, at: Grading::new(0, 0) };
                (ChainMap::identity(m), ChainMap::identity(m), piece, vec![opaque])
            };
            for x in 0..ja.len() {
                for y in 0..jb.len() {
                    perm.set(at + x * jb.len() + y, (ja.start + x) * nb + jb.start + y, GPolynomial::one());
                }
            }
            let shift: Vec<usize> = (at..at + m).collect();
            local_w = local_w.add(&w.reindex(&shift, &shift, n, n));
            local_wi = local_wi.add(&wi.reindex(&shift, &shift, n, n));
            block = direct_sum(&block, &bl);
            summands.extend(ss);
            at += m;
        }
    }
    let outer = tensor_maps(&a.witness, &b.witness);
    let outer_inv = tensor_maps(&a.witness_inv, &b.witness_inv);
    let witness = outer.after(&perm.after(&local_w));
    let witness_inv = local_wi.after(&perm.transpose().after(&outer_inv));
    Decomposition { reduced, summands, block, witness, witness_inv }
}
