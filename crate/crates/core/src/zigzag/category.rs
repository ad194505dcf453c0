use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::chain::Grading;
use crate::zring::{GMonomial, GPolynomial};

/// The two crossingless four-ended tangles: `Zero` joins the ends horizontally, `Inf` vertically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Obj {
    Zero,
    Inf,
}

/// `id * I + s * S^2` between equal objects, `s * S` between different ones.
///
/// Normal form uses `S^3 = G S`; `D = S^2 - G` is `(-G, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub src: Obj,
    pub tgt: Obj,
    pub id: GPolynomial,
    pub s: GPolynomial,
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = GPolynomial::one();
        if self.src != self.tgt {
            return if self.s == one { write!(f, "S") } else { write!(f, "({})S", self.s) };
        }
        if *self == Mor::d(self.src) {
            return write!(f, "D");
        }
        match (self.id.is_zero(), self.s.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.id),
            (true, false) if self.s == one => write!(f, "S^2"),
            (true, false) => write!(f, "({})S^2", self.s),
            (false, false) => write!(f, "{} + ({})S^2", self.id, self.s),
        }
    }
}

impl Mor {
    pub fn zero(src: Obj, tgt: Obj) -> Self {
        Mor { src, tgt, id: GPolynomial::zero(), s: GPolynomial::zero() }
    }

    pub fn scalar(o: Obj, p: GPolynomial) -> Self {
        Mor { src: o, tgt: o, id: p, s: GPolynomial::zero() }
    }

    pub fn identity(o: Obj) -> Self {
        Mor::scalar(o, GPolynomial::one())
    }

    /// `S` between different objects, `S^2` on one object.
    pub fn saddle(src: Obj, tgt: Obj) -> Self {
        Mor { src, tgt, id: GPolynomial::zero(), s: GPolynomial::one() }
    }

    pub fn d(o: Obj) -> Self {
        Mor { src: o, tgt: o, id: -GPolynomial::g_pow(1), s: GPolynomial::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.id.is_zero() && self.s.is_zero()
    }

    /// Quantum degree of the basis element carrying `s`.
    pub fn s_degree(&self) -> u32 {
        if self.src == self.tgt {
            2
        } else {
            1
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Mor) -> Mor {
        assert_eq!(first.tgt, self.src, "composing mismatched morphisms");
        let g = GPolynomial::g_pow(1);
        let (x, y, z) = (first.src, first.tgt, self.tgt);
        let (a1, b1, a2, b2) = (&first.id, &first.s, &self.id, &self.s);
        match (x == y, y == z) {
            // (a1 + b1 S^2)(a2 + b2 S^2), with S^4 = G S^2.
            (true, true) => Mor { src: x, tgt: z, id: a1 * a2, s: &(&(a1 * b2) + &(a2 * b1)) + &(&(b1 * b2) * &g) },
            (true, false) => Mor { src: x, tgt: z, id: GPolynomial::zero(), s: b2 * &(a1 + &(b1 * &g)) },
            (false, true) => Mor { src: x, tgt: z, id: GPolynomial::zero(), s: b1 * &(a2 + &(b2 * &g)) },
            (false, false) => Mor { src: x, tgt: z, id: GPolynomial::zero(), s: b1 * b2 },
        }
    }

    pub fn add(&self, other: &Mor) -> Mor {
        assert_eq!((self.src, self.tgt), (other.src, other.tgt));
        Mor { src: self.src, tgt: self.tgt, id: &self.id + &other.id, s: &self.s + &other.s }
    }

    pub fn neg(&self) -> Mor {
        Mor { src: self.src, tgt: self.tgt, id: -&self.id, s: -&self.s }
    }

    pub fn mul_poly(&self, p: &GPolynomial) -> Mor {
        Mor { src: self.src, tgt: self.tgt, id: &self.id * p, s: &self.s * p }
    }

    /// Matrix after closing both tangles into circles, indexed by generators of
    /// the closed objects: `Inf` has one (the marked circle), `Zero` has `1` then `X`.
    pub fn closed(&self) -> Vec<(usize, usize, GPolynomial)> {
        let g = GPolynomial::g_pow(1);
        let mut out: Vec<(usize, usize, GPolynomial)> = Vec::new();
        match (self.src, self.tgt) {
            (Obj::Inf, Obj::Inf) => out.push((0, 0, &self.id + &(&self.s * &g))),
            (Obj::Zero, Obj::Zero) => {
                out.push((0, 0, &self.id + &(&self.s * &g)));
                out.push((0, 1, self.s.clone()));
                out.push((1, 1, self.id.clone()));
            }
            (Obj::Inf, Obj::Zero) => {
                out.push((0, 0, &self.s * &g));
                out.push((0, 1, self.s.clone()));
            }
            (Obj::Zero, Obj::Inf) => out.push((0, 0, self.s.clone())),
        }
        out.retain(|e| !e.2.is_zero());
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms = |p: &GPolynomial| p.terms().collect::<Vec<GMonomial>>();
        json!({"from": self.src, "to": self.tgt, "I": terms(&self.id), "S": terms(&self.s)})
    }
}

/// A complex of shifted copies of the two objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleComplex {
    pub objects: Vec<(Obj, Grading)>,
    /// `(src, tgt) -> d`, the component of the differential from `src` to `tgt`.
    pub diff: BTreeMap<(usize, usize), Mor>,
}

impl TangleComplex {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn types(&self) -> Vec<Obj> {
        self.objects.iter().map(|o| o.0).collect()
    }

    pub fn differential(&self) -> TangleMap {
        let mut m = TangleMap::zero(self.types(), self.types());
        for ((a, b), d) in &self.diff {
            m.set(*a, *b, d.clone());
        }
        m
    }

    pub fn d_squared_is_zero(&self) -> bool {
        let d = self.differential();
        d.after(&d).is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "objects": self.objects.iter().map(|(o, g)| json!([o, g.i, g.q])).collect::<Vec<_>>(),
            "diff": self.diff.iter().map(|((a, b), m)| json!([a, b, m.to_json()])).collect::<Vec<_>>(),
        })
    }
}

/// A matrix of morphisms between direct sums of objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleMap {
    pub src: Vec<Obj>,
    pub tgt: Vec<Obj>,
    entries: BTreeMap<(usize, usize), Mor>,
}

impl TangleMap {
    pub fn zero(src: Vec<Obj>, tgt: Vec<Obj>) -> Self {
        TangleMap { src, tgt, entries: BTreeMap::new() }
    }

    pub fn scalar(objs: Vec<Obj>, p: &GPolynomial) -> Self {
        let mut m = TangleMap::zero(objs.clone(), objs.clone());
        for (k, o) in objs.iter().enumerate() {
            m.set(k, k, Mor::scalar(*o, p.clone()));
        }
        m
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Mor> {
        &self.entries
    }

    pub fn get(&self, a: usize, b: usize) -> Mor {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(|| Mor::zero(self.src[a], self.tgt[b]))
    }

    pub fn set(&mut self, a: usize, b: usize, m: Mor) {
        assert_eq!((m.src, m.tgt), (self.src[a], self.tgt[b]), "morphism type mismatch");
        if m.is_zero() {
            self.entries.remove(&(a, b));
        } else {
            self.entries.insert((a, b), m);
        }
    }

    pub fn add_to(&mut self, a: usize, b: usize, m: &Mor) {
        let v = self.get(a, b).add(m);
        self.set(a, b, v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self` after `first`.
    pub fn after(&self, first: &TangleMap) -> TangleMap {
        assert_eq!(first.tgt, self.src, "composition size mismatch");
        let mut out = TangleMap::zero(first.src.clone(), self.tgt.clone());
        for ((a, b), m1) in &first.entries {
            for ((_, c), m2) in self.entries.range((*b, 0)..(*b + 1, 0)) {
                out.add_to(*a, *c, &m2.after(m1));
            }
        }
        out
    }

    pub fn add(&self, other: &TangleMap) -> TangleMap {
        let mut out = self.clone();
        for ((a, b), m) in &other.entries {
            out.add_to(*a, *b, m);
        }
        out
    }

    pub fn neg(&self) -> TangleMap {
        let mut out = self.clone();
        for m in out.entries.values_mut() {
            *m = m.neg();
        }
        out
    }

    pub fn sub(&self, other: &TangleMap) -> TangleMap {
        self.add(&other.neg())
    }

    pub fn is_chain_map(&self, src: &TangleComplex, tgt: &TangleComplex) -> bool {
        tgt.differential().after(self) == self.after(&src.differential())
    }

    /// `h d + d h == self` on `c`.
    pub fn is_nullhomotopic_via(&self, c: &TangleComplex, h: &TangleMap) -> bool {
        let d = c.differential();
        h.after(&d).add(&d.after(h)) == *self
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "src": self.src.len(),
            "tgt": self.tgt.len(),
            "entries": self.entries.iter().map(|((a, b), m)| json!([a, b, m.to_json()])).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        let (z, i) = (Obj::Zero, Obj::Inf);
        let s = Mor::saddle(i, z);
        let t = Mor::saddle(z, i);
        let g = GPolynomial::g_pow(1);
        // S^3 = G S
        assert_eq!(t.after(&s).after(&t), t.mul_poly(&g));
        for o in [z, i] {
            let d = Mor::d(o);
            assert_eq!(d.after(&d), d.mul_poly(&-g.clone()));
            let s2 = Mor::saddle(o, o);
            assert_eq!(s2.after(&s2), s2.mul_poly(&g));
        }
        assert!(Mor::d(z).after(&s).is_zero());
        assert!(s.after(&Mor::d(i)).is_zero());
        assert!(t.after(&Mor::d(z)).is_zero());
        assert!(Mor::d(i).after(&t).is_zero());
    }
}
