use std::collections::BTreeMap;

use serde_json::json;

use super::category::{Mor, Obj, TangleComplex, TangleMap};
use super::complex::graph_to_complex;
use super::graph::{connectivity_parity, zz, Parity, VertexType};
use super::{Rational, ZigzagError};
use crate::chain::lattice::{solve, IntMatrix};
use crate::zring::{GPolynomial, Int};

/// Which coefficient of a morphism, and which power of G.
type Slot = (bool, u32);

fn terms(m: &Mor) -> Vec<(Slot, Int)> {
    let mut out = Vec::new();
    for t in m.id.terms() {
        out.push(((false, t.power()), t.coeff().clone()));
    }
    for t in m.s.terms() {
        out.push(((true, t.power()), t.coeff().clone()));
    }
    out
}

/// Solves `h d + d h = rhs` for `h` of homological degree -1, where `rhs` has
/// homological degree 0 and raises quantum degree by `deg`.
fn solve_homotopy(c: &TangleComplex, rhs: &TangleMap, deg: i64) -> Option<TangleMap> {
    let types = c.types();
    // Unknowns: a basis morphism for each admissible (a, b).
    let mut vars: Vec<(usize, usize, Mor)> = Vec::new();
    for (a, (oa, ga)) in c.objects.iter().enumerate() {
        for (b, (ob, gb)) in c.objects.iter().enumerate() {
            if gb.i != ga.i - 1 {
                continue;
            }
            let k = gb.q - ga.q + deg;
            if k < 0 {
                continue;
            }
            if oa == ob && k % 2 == 0 {
                vars.push((a, b, Mor::scalar(*oa, GPolynomial::g_pow((k / 2) as u32))));
                if k >= 2 {
                    vars.push((a, b, Mor::saddle(*oa, *oa).mul_poly(&GPolynomial::g_pow(((k - 2) / 2) as u32))));
                }
            } else if oa != ob && k % 2 == 1 {
                vars.push((a, b, Mor::saddle(*oa, *ob).mul_poly(&GPolynomial::g_pow(((k - 1) / 2) as u32))));
            }
        }
    }
    let mut rows: BTreeMap<(usize, usize, Slot), BTreeMap<usize, Int>> = BTreeMap::new();
    let mut outs: Vec<Vec<(usize, &Mor)>> = vec![Vec::new(); c.len()];
    let mut ins: Vec<Vec<(usize, &Mor)>> = vec![Vec::new(); c.len()];
    for ((s, t), m) in &c.diff {
        outs[*s].push((*t, m));
        ins[*t].push((*s, m));
    }
    for (v, (a, b, m)) in vars.iter().enumerate() {
        let mut add = |row: (usize, usize), mor: Mor| {
            for (slot, x) in terms(&mor) {
                *rows.entry((row.0, row.1, slot)).or_default().entry(v).or_insert(Int::ZERO) += x;
            }
        };
        // d after h: a -> b -> t.
        for (t, d) in &outs[*b] {
            add((*a, *t), d.after(m));
        }
        // h after d: s -> a -> b.
        for (s, d) in &ins[*a] {
            add((*s, *b), m.after(d));
        }
    }
    let mut rhs_rows: BTreeMap<(usize, usize, Slot), Int> = BTreeMap::new();
    for ((a, b), m) in rhs.entries() {
        for (slot, x) in terms(m) {
            rhs_rows.insert((*a, *b, slot), x);
        }
    }
    let keys: Vec<(usize, usize, Slot)> =
        rows.keys().chain(rhs_rows.keys()).cloned().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let mut mat = IntMatrix::zeros(keys.len(), vars.len());
    let mut vec = vec![Int::ZERO; keys.len()];
    for (r, k) in keys.iter().enumerate() {
        if let Some(row) = rows.get(k) {
            for (v, x) in row {
                mat[(r, *v)] = x.clone();
            }
        }
        if let Some(x) = rhs_rows.get(k) {
            vec[r] = x.clone();
        }
    }
    let x = solve(&mat, &vec).ok()?;
    let mut h = TangleMap::zero(types.clone(), types);
    for (v, (a, b, m)) in vars.iter().enumerate() {
        if !x[v].is_zero() {
            h.add_to(*a, *b, &m.mul_poly(&GPolynomial::constant(x[v].clone())));
        }
    }
    Some(h)
}

/// `h` with `h d + d h = u (id_{A_e} + id_{A_{e+1}})`, where `u` is `S^2` for an odd
/// edge `e` and `D` for an even one.
pub fn edge_homotopy(c: &TangleComplex, e: usize) -> Result<TangleMap, ZigzagError> {
    let (a, b) = (e, e + 1);
    let m = c.diff.get(&(a, b)).or_else(|| c.diff.get(&(b, a))).ok_or(ZigzagError::NoHomotopy(e))?;
    let odd = m.src != m.tgt || m.id.is_zero();
    let types = c.types();
    let mut rhs = TangleMap::zero(types.clone(), types);
    for v in [a, b] {
        let o = c.objects[v].0;
        rhs.set(v, v, if odd { Mor::saddle(o, o) } else { Mor::d(o) });
    }
    let h = solve_homotopy(c, &rhs, 2).ok_or(ZigzagError::NoHomotopy(e))?;
    debug_assert!(rhs.is_nullhomotopic_via(c, &h));
    Ok(h)
}

/// Maps between the complex of `x` and the one-crossing complex `C'`, with
/// both round trips homotopic to `G`.
#[derive(Clone, Debug)]
pub struct FGCertificate {
    pub x: Rational,
    pub c: TangleComplex,
    pub c_prime: TangleComplex,
    pub f: TangleMap,
    pub g: TangleMap,
    /// `g f - G = h d + d h`.
    pub h: TangleMap,
    /// `f g - G = h' d' + d' h'`.
    pub h_prime: TangleMap,
}

impl FGCertificate {
    pub fn verify(&self) -> bool {
        let gpoly = GPolynomial::g_pow(1);
        let (c, cp) = (&self.c, &self.c_prime);
        self.f.is_chain_map(c, cp)
            && self.g.is_chain_map(cp, c)
            && self.g.after(&self.f).sub(&TangleMap::scalar(c.types(), &gpoly)).is_nullhomotopic_via(c, &self.h)
            && self.f.after(&self.g).sub(&TangleMap::scalar(cp.types(), &gpoly)).is_nullhomotopic_via(cp, &self.h_prime)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": 1,
            "x": self.x,
            "complex": self.c.to_json(),
            "c_prime": self.c_prime.to_json(),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "h": self.h.to_json(),
            "h_prime": self.h_prime.to_json(),
        })
    }
}

/// `Zero -S-> Inf`, the complex of a single crossing.
fn one_crossing() -> TangleComplex {
    use crate::chain::Grading;
    let mut diff = BTreeMap::new();
    diff.insert((0, 1), Mor::saddle(Obj::Zero, Obj::Inf));
    TangleComplex { objects: vec![(Obj::Zero, Grading::new(0, 0)), (Obj::Inf, Grading::new(1, 1))], diff }
}

pub fn fg_certificate(x: Rational) -> Result<FGCertificate, ZigzagError> {
    if !x.is_positive() {
        return Err(ZigzagError::NotPositive(x));
    }
    if connectivity_parity(x) != (Parity::Odd, Parity::Odd) {
        return Err(ZigzagError::NotOddOdd(x));
    }
    let mut graph = zz(x)?;
    if graph.vertices[0] != VertexType::Circle {
        graph = graph.reversed();
    }
    let c = graph_to_complex(&graph);
    let cp = one_crossing();
    let n = c.len() - 1;
    debug_assert_eq!(c.objects[n].0, Obj::Zero);
    let (zero, inf) = (Obj::Zero, Obj::Inf);
    let mut f = TangleMap::zero(c.types(), cp.types());
    f.set(0, 1, Mor::identity(inf));
    f.set(n, 0, Mor::d(zero).neg());
    let mut g = TangleMap::zero(cp.types(), c.types());
    g.set(1, 0, Mor::d(inf).neg());
    g.set(0, n, Mor::identity(zero));
    // Alternating sum of edge homotopies, negated to match `g f - G`.
    let mut h = TangleMap::zero(c.types(), c.types());
    for e in 0..n {
        let he = edge_homotopy(&c, e)?;
        h = if e % 2 == 0 { h.sub(&he) } else { h.add(&he) };
    }
    let mut h_prime = TangleMap::zero(cp.types(), cp.types());
    h_prime.set(1, 0, Mor::saddle(inf, zero).neg());
    let cert = FGCertificate { x, c, c_prime: cp, f, g, h, h_prime };
    if !cert.verify() {
        return Err(ZigzagError::NoHomotopy(n));
    }
    Ok(cert)
}

#[derive(Clone, Debug)]
pub struct LambdaDistance {
    pub value: u32,
    /// `z` with the pair moved to `(-1, z)`.
    pub z: Option<Rational>,
    pub certificate: Option<FGCertificate>,
}

impl LambdaDistance {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lower": self.value,
            "upper": self.value,
            "exact": true,
            "z": self.z,
            "certificate": self.certificate.as_ref().map(|c| c.to_json()),
        })
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.signum() * a, a.signum(), 0)
    } else {
        let (g, u, v) = ext_gcd(b, a.rem_euclid(b));
        (g, v, u - a.div_euclid(b) * v)
    }
}

/// Distance between the rational tangles of `x` and `y`, which is 0 or 1.
pub fn lambda_distance_rational(x: Rational, y: Rational) -> Result<LambdaDistance, ZigzagError> {
    if x == y {
        return Ok(LambdaDistance { value: 0, z: None, certificate: None });
    }
    if connectivity_parity(x) != connectivity_parity(y) {
        return Err(ZigzagError::ParityMismatch { x, y });
    }
    // Send x to infinity: (s -r; -q p) with p s - q r = 1.
    let (p, q) = (x.p(), x.q());
    let (_, s, v) = ext_gcd(p, q);
    let r = -v;
    let y1 = y.mobius(s, -r, -q, p);
    // Twist y1 into (0, 1], then send w to 1/w - 1.
    let y2 = y1.add_int(1 - y1.ceil().expect("y differs from x"));
    let z = y2.recip().add_int(-1);
    let cert = fg_certificate(z)?;
    Ok(LambdaDistance { value: 1, z: Some(z), certificate: Some(cert) })
}
