use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::zring::{int, GMonomial, Int};

/// Homological and quantum degree of a free summand `Z[G]{q}` sitting in degree `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Grading {
    pub i: i64,
    pub q: i64,
}

impl Grading {
    pub const fn new(i: i64, q: i64) -> Self {
        Grading { i, q }
    }

    pub fn shift(self, di: i64, dq: i64) -> Self {
        Grading::new(self.i + di, self.q + dq)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{{{}}})", self.i, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("entry ({src},{tgt}) refers to a generator out of range (n = {n})")]
    IndexRange { src: usize, tgt: usize, n: usize },
    #[error("entry ({src},{tgt}) goes from degree {from} to degree {to}")]
    Homological { src: usize, tgt: usize, from: i64, to: i64 },
    #[error("entry ({src},{tgt}) = {entry} is not homogeneous: q {from} -> {to}")]
    Homogeneity { src: usize, tgt: usize, entry: GMonomial, from: i64, to: i64 },
    #[error("d^2 is nonzero from generator {src} to generator {tgt}: {value}")]
    DSquared { src: usize, tgt: usize, value: GMonomial },
}

/// A finite complex of free modules `Z[G]{q}` with a sparse monomial differential.
///
/// An entry `(src, tgt) -> c*G^k` means `d(e_src)` has `c*G^k*e_tgt` as a summand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeComplex {
    gens: Vec<Grading>,
    entries: BTreeMap<(usize, usize), GMonomial>,
}

impl FreeComplex {
    pub fn new(gens: Vec<Grading>) -> Self {
        FreeComplex { gens, entries: BTreeMap::new() }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// One copy of `Z[G]{q}` in degree `i`.
    pub fn pawn(at: Grading) -> Self {
        Self::new(vec![at])
    }

    /// `Z[G]{q} -> Z[G]{q + 2k}` with entry `z = c*G^k`, source at `at`.
    pub fn knight(z: GMonomial, at: Grading) -> Self {
        let tgt = at.shift(1, 2 * z.power() as i64);
        let mut c = Self::new(vec![at, tgt]);
        c.set(0, 1, z);
        c
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Grading] {
        &self.gens
    }

    pub fn grading(&self, g: usize) -> Grading {
        self.gens[g]
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), GMonomial> {
        &self.entries
    }

    pub fn entry(&self, src: usize, tgt: usize) -> GMonomial {
        self.entries.get(&(src, tgt)).cloned().unwrap_or_else(GMonomial::zero)
    }

    pub fn push_gen(&mut self, g: Grading) -> usize {
        self.gens.push(g);
        self.gens.len() - 1
    }

    /// Sets an entry; a zero monomial removes it.
    pub fn set(&mut self, src: usize, tgt: usize, m: GMonomial) {
        if m.is_zero() {
            self.entries.remove(&(src, tgt));
        } else {
            self.entries.insert((src, tgt), m);
        }
    }

    /// Sets the entry whose power is forced by the gradings.
    pub fn set_coeff(&mut self, src: usize, tgt: usize, c: impl Into<Int>) {
        let k = (self.gens[tgt].q - self.gens[src].q) / 2;
        assert!(k >= 0, "negative forced power");
        self.set(src, tgt, GMonomial::new(c, k as u32));
    }

    pub fn shifted(&self, di: i64, dq: i64) -> Self {
        FreeComplex { gens: self.gens.iter().map(|g| g.shift(di, dq)).collect(), entries: self.entries.clone() }
    }

    pub fn out_lists(&self) -> Vec<Vec<(usize, GMonomial)>> {
        let mut out = vec![Vec::new(); self.len()];
        for (&(s, t), m) in &self.entries {
            out[s].push((t, m.clone()));
        }
        out
    }

    pub fn hom_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.gens.iter().map(|g| g.i).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.len();
        for (&(src, tgt), e) in &self.entries {
            if src >= n || tgt >= n {
                return Err(Violation::IndexRange { src, tgt, n });
            }
            let (a, b) = (self.gens[src], self.gens[tgt]);
            if b.i != a.i + 1 {
                return Err(Violation::Homological { src, tgt, from: a.i, to: b.i });
            }
            if b.q != a.q + 2 * e.power() as i64 {
                return Err(Violation::Homogeneity { src, tgt, entry: e.clone(), from: a.q, to: b.q });
            }
        }
        let out = self.out_lists();
        for a in 0..n {
            let mut acc: BTreeMap<usize, GMonomial> = BTreeMap::new();
            for (b, x) in &out[a] {
                for (c, y) in &out[*b] {
                    let v = acc.entry(*c).or_insert_with(GMonomial::zero);
                    *v = v.add_same_power(&x.mul(y));
                }
            }
            if let Some((&c, v)) = acc.iter().find(|(_, v)| !v.is_zero()) {
                return Err(Violation::DSquared { src: a, tgt: c, value: v.clone() });
            }
        }
        Ok(())
    }

    /// Removes generators not in `keep` and renumbers the rest in order.
    pub fn restrict(&self, keep: &[usize]) -> FreeComplex {
        let mut idx = FxHashMap::default();
        for (n, &g) in keep.iter().enumerate() {
            idx.insert(g, n);
        }
        let mut out = FreeComplex::new(keep.iter().map(|&g| self.gens[g]).collect());
        for (&(s, t), m) in &self.entries {
            if let (Some(&s), Some(&t)) = (idx.get(&s), idx.get(&t)) {
                out.entries.insert((s, t), m.clone());
            }
        }
        out
    }

    /// Connected components of the generator graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(s, t) in self.entries.keys() {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for g in 0..n {
            let r = find(&mut parent, g);
            groups.entry(r).or_default().push(g);
        }
        groups.into_values().collect()
    }

    /// `(min, max)` quantum degree among generators, if any.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let min = self.gens.iter().map(|g| g.q).min()?;
        let max = self.gens.iter().map(|g| g.q).max()?;
        Some((min, max))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ComplexRepr::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, serde_json::Error> {
        let r: ComplexRepr = serde_json::from_value(v.clone())?;
        Ok(r.into())
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    gens: Vec<(i64, i64)>,
    entries: Vec<EntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr(usize, usize, #[serde(with = "crate::zring::serde_int")] Int, u32);

impl From<&FreeComplex> for ComplexRepr {
    fn from(c: &FreeComplex) -> Self {
        ComplexRepr {
            gens: c.gens.iter().map(|g| (g.i, g.q)).collect(),
            entries: c.entries.iter().map(|(&(s, t), m)| EntryRepr(s, t, m.coeff().clone(), m.power())).collect(),
        }
    }
}

impl From<ComplexRepr> for FreeComplex {
    fn from(r: ComplexRepr) -> Self {
        let mut c = FreeComplex::new(r.gens.into_iter().map(|(i, q)| Grading::new(i, q)).collect());
        for EntryRepr(s, t, coeff, k) in r.entries {
            c.set(s, t, GMonomial::new(coeff, k));
        }
        c
    }
}

impl Serialize for FreeComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ComplexRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(ComplexRepr::deserialize(d)?.into())
    }
}

/// Arrow rendering, one entry per line, isolated generators listed on their own.
impl fmt::Display for FreeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "0");
        }
        let mut touched = vec![false; self.len()];
        for (&(s, t), m) in &self.entries {
            touched[s] = true;
            touched[t] = true;
            let g = (self.gens[s], self.gens[t]);
            writeln!(f, "{}_{} Z[G]{{{}}} --{}--> {}_{} Z[G]{{{}}}", g.0.i, s, g.0.q, m, g.1.i, t, g.1.q)?;
        }
        for (n, g) in self.gens.iter().enumerate() {
            if !touched[n] {
                writeln!(f, "{}_{} Z[G]{{{}}}", g.i, n, g.q)?;
            }
        }
        Ok(())
    }
}

pub fn direct_sum(a: &FreeComplex, b: &FreeComplex) -> FreeComplex {
    let off = a.len();
    let mut gens = a.gens.clone();
    gens.extend_from_slice(&b.gens);
    let mut out = FreeComplex::new(gens);
    out.entries = a.entries.clone();
    for (&(s, t), m) in &b.entries {
        out.entries.insert((s + off, t + off), m.clone());
    }
    out
}

/// Generator `(x, y)` of the product has index `x * b.len() + y`.
pub fn tensor(a: &FreeComplex, b: &FreeComplex) -> FreeComplex {
    let nb = b.len();
    let mut gens = Vec::with_capacity(a.len() * nb);
    for ga in &a.gens {
        for gb in &b.gens {
            gens.push(Grading::new(ga.i + gb.i, ga.q + gb.q));
        }
    }
    let mut out = FreeComplex::new(gens);
    for (&(s, t), m) in &a.entries {
        for y in 0..nb {
            out.entries.insert((s * nb + y, t * nb + y), m.clone());
        }
    }
    for (x, ga) in a.gens.iter().enumerate() {
        let sign = if ga.i.rem_euclid(2) == 1 { int(-1) } else { int(1) };
        for (&(s, t), m) in &b.entries {
            out.entries.insert((x * nb + s, x * nb + t), m.scale(&sign));
        }
    }
    out
}

/// Gradings negated, entries transposed, generator order kept.
pub fn dual(c: &FreeComplex) -> FreeComplex {
    let mut out = FreeComplex::new(c.gens.iter().map(|g| Grading::new(-g.i, -g.q)).collect());
    for (&(s, t), m) in &c.entries {
        out.entries.insert((t, s), m.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: i64, q: i64) -> Grading {
        Grading::new(i, q)
    }

    #[test]
    fn validate_examples() {
        assert!(FreeComplex::pawn(g(0, 0)).validate().is_ok());
        let k = FreeComplex::knight(GMonomial::g(1), g(0, 6));
        assert_eq!(k.gens(), &[g(0, 6), g(1, 8)]);
        assert!(k.validate().is_ok());
        let mut bad = k.clone();
        bad.set(0, 1, GMonomial::g(2));
        assert!(matches!(bad.validate(), Err(Violation::Homogeneity { .. })));
        let mut bad = FreeComplex::new(vec![g(0, 0), g(2, 0)]);
        bad.set(0, 1, GMonomial::one());
        assert!(matches!(bad.validate(), Err(Violation::Homological { .. })));
        let mut bad = FreeComplex::new(vec![g(0, 0), g(1, 0), g(2, 0)]);
        bad.set(0, 1, GMonomial::one());
        bad.set(1, 2, GMonomial::one());
        assert!(matches!(bad.validate(), Err(Violation::DSquared { src: 0, tgt: 2, .. })));
    }

    #[test]
    fn sums_and_tensors() {
        let p = FreeComplex::pawn(g(0, 0));
        let kg = FreeComplex::knight(GMonomial::g(1), g(0, 0));
        let k2 = FreeComplex::knight(GMonomial::new(2, 0), g(0, 0));
        assert_eq!(direct_sum(&kg, &FreeComplex::empty()), kg);
        assert_eq!(tensor(&p, &kg), kg);
        assert_eq!(tensor(&kg, &p), kg);

        let t = tensor(&kg, &k2);
        assert_eq!(t.len(), 4);
        t.validate().unwrap();
        // (s,s) -> (s,t) by 2, (s,s) -> (t,s) by G, (s,t) -> (t,t) by G, (t,s) -> (t,t) by -2
        assert_eq!(t.entry(0, 1), GMonomial::new(2, 0));
        assert_eq!(t.entry(0, 2), GMonomial::g(1));
        assert_eq!(t.entry(1, 3), GMonomial::g(1));
        assert_eq!(t.entry(2, 3), GMonomial::new(-2, 0));
        assert_eq!(t.entries().len(), 4);
    }

    #[test]
    fn duals() {
        let p = FreeComplex::pawn(g(0, 0));
        assert_eq!(dual(&p), p);
        let kg = FreeComplex::knight(GMonomial::g(1), g(0, 0));
        let d = dual(&kg);
        assert_eq!(d.gens(), &[g(0, 0), g(-1, -2)]);
        assert_eq!(d.entry(1, 0), GMonomial::g(1));
        d.validate().unwrap();
        assert_eq!(dual(&d), kg);
    }

    #[test]
    fn json_roundtrip() {
        let mut c = FreeComplex::knight(GMonomial::new(-3, 1), g(2, 6));
        c.push_gen(g(0, 2));
        let v = c.to_json();
        assert_eq!(v, serde_json::json!({"gens": [[2,6],[3,8],[0,2]], "entries": [[0,1,-3,1]]}));
        assert_eq!(FreeComplex::from_json(&v).unwrap(), c);
    }
}
