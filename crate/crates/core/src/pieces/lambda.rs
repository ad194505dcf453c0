use serde_json::json;

use super::catalogue::{staircase_maps, PieceKind};
use super::decompose::{decompose, Decomposition};
use super::torsion::u_g;
use crate::chain::{dual, solve_nullhomotopy, ChainMap, FreeComplex, Grading, Infeasible, NullHomotopy};
use crate::tqft::specialized_homology;
use crate::zring::{CoefficientSpec, GPolynomial};

/// `(q_max - q_min)/2 + 1`; past this power `G^k` is zero on every graded piece map.
pub fn default_kmax(c: &FreeComplex) -> u32 {
    c.q_range().map_or(0, |(lo, hi)| ((hi - lo) / 2 + 1) as u32)
}

/// Outcome of searching for the least `k` with `G^k id` nullhomotopic.
#[derive(Clone, Debug)]
pub enum ZeroBound {
    Found {
        k: u32,
        homotopy: ChainMap,
    },
    /// No `k <= kmax` works; the certificate refutes `k = kmax`.
    None {
        kmax: u32,
        refutation: Infeasible,
    },
}

impl ZeroBound {
    pub fn k(&self) -> Option<u32> {
        match self {
            ZeroBound::Found { k, .. } => Some(*k),
            ZeroBound::None { .. } => None,
        }
    }
}

pub fn lambda_zero_upper(c: &FreeComplex, kmax: u32) -> ZeroBound {
    let mut last = None;
    for k in 0..=kmax {
        let phi = ChainMap::scalar(c.len(), &GPolynomial::g_pow(k));
        match solve_nullhomotopy(c, &phi) {
            NullHomotopy::Found(h) => return ZeroBound::Found { k, homotopy: h },
            NullHomotopy::None(e) => last = Some(e),
        }
    }
    // An empty complex has G^0 id = 0, so `last` is set whenever we get here.
    ZeroBound::None { kmax, refutation: last.expect("nonempty complex") }
}

/// Maps `f: C -> U`, `g: U -> C` with both round trips homotopic to `G^k`.
#[derive(Clone, Debug)]
pub struct LambdaCertificate {
    pub k: u32,
    pub complex: FreeComplex,
    pub unknot: FreeComplex,
    pub f: ChainMap,
    pub g: ChainMap,
    /// `g f - G^k = h d + d h` on `complex`.
    pub h: ChainMap,
    /// `f g - G^k = h' d + d h'` on `unknot`.
    pub h_prime: ChainMap,
}

impl LambdaCertificate {
    pub fn verify(&self) -> bool {
        let (c, u) = (&self.complex, &self.unknot);
        let gk = GPolynomial::g_pow(self.k);
        self.f.is_chain_map(c, u)
            && self.g.is_chain_map(u, c)
            && self.g.after(&self.f).sub(&ChainMap::scalar(c.len(), &gk)).is_nullhomotopic_via(c, &self.h)
            && self.f.after(&self.g).sub(&ChainMap::scalar(u.len(), &gk)).is_nullhomotopic_via(u, &self.h_prime)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "complex": self.complex.to_json(),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "h": self.h.to_json(),
            "h_prime": self.h_prime.to_json(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct LambdaBounds {
    pub lower: u32,
    pub upper: Option<u32>,
    pub exact: bool,
    pub certificate: Option<LambdaCertificate>,
    pub decomposition: Decomposition,
    /// Why there is no upper bound, when there is none.
    pub note: Option<String>,
}

impl LambdaBounds {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "certificate": self.certificate.as_ref().map(|c| c.to_json()),
        });
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        v
    }
}

/// `(l, f, g, h)` for pieces homotopy equivalent to the unknot up to `G^l`.
fn unknot_maps(kind: &PieceKind) -> Option<(u32, ChainMap, ChainMap, ChainMap)> {
    match kind {
        PieceKind::Pawn => Some((0, ChainMap::identity(1), ChainMap::identity(1), ChainMap::zero(1, 1))),
        PieceKind::Staircase { n } => {
            let (f, g, h) = staircase_maps(*n);
            Some((*n, f, g, h))
        }
        PieceKind::DualStaircase { n } => {
            let (f, g, h) = staircase_maps(*n);
            Some((*n, g.transpose(), f.transpose(), h.transpose()))
        }
        _ => None,
    }
}

/// Certified bounds for `lambda(C, U)`.
pub fn lambda_bounds(c: &FreeComplex) -> LambdaBounds {
    let d = decompose(c);
    let ranges = d.ranges();
    let blocks: Vec<FreeComplex> = d.summands.iter().map(|s| s.complex()).collect();

    let ug = blocks.iter().map(u_g).max().unwrap_or(0);
    let ug_dual = blocks.iter().map(|b| u_g(&dual(b))).max().unwrap_or(0);
    let rank = specialized_homology(&d.reduced, CoefficientSpec::IntegersGZero).total_dimension();
    let lower = ug.max(ug_dual).max(u32::from(rank > 1));

    let (certificate, note) = match certify(&d, &ranges, &blocks) {
        Ok(cert) => (Some(cert), None),
        Err(note) => (None, Some(note)),
    };
    let upper = certificate.as_ref().map(|c| c.k);
    LambdaBounds { lower, upper, exact: upper == Some(lower), certificate, decomposition: d, note }
}

fn certify(
    d: &Decomposition,
    ranges: &[std::ops::Range<usize>],
    blocks: &[FreeComplex],
) -> Result<LambdaCertificate, String> {
    let candidates: Vec<(usize, (u32, ChainMap, ChainMap, ChainMap))> =
        d.summands.iter().enumerate().filter_map(|(j, s)| unknot_maps(&s.kind).map(|m| (j, m))).collect();
    let Some((p, (l, fp, gp, hp))) = candidates.into_iter().min_by_key(|(_, m)| m.0) else {
        return Err("decomposition has no pawn or staircase summand".into());
    };
    let mut others = Vec::new();
    for (j, b) in blocks.iter().enumerate() {
        if j == p {
            continue;
        }
        match lambda_zero_upper(b, default_kmax(b)) {
            ZeroBound::Found { k, homotopy } => others.push((j, k, homotopy)),
            ZeroBound::None { .. } => {
                return Err(format!("summand {} has no power of G nullhomotopic", d.summands[j].kind.label()))
            }
        }
    }
    let m = others.iter().map(|o| o.1).max().unwrap_or(0).max(l);

    let n = d.block.len();
    let idx = |j: usize| -> Vec<usize> { ranges[j].clone().collect() };
    let f = fp.mul_poly(&GPolynomial::g_pow(m - l)).reindex(&idx(p), &[0], n, 1);
    let g = gp.reindex(&[0], &idx(p), 1, n);
    let mut h = hp.mul_poly(&GPolynomial::g_pow(m - l)).reindex(&idx(p), &idx(p), n, n);
    for (j, k, hj) in &others {
        h = h.sub(&hj.mul_poly(&GPolynomial::g_pow(m - k)).reindex(&idx(*j), &idx(*j), n, n));
    }

    let (w, wi) = (&d.witness, &d.witness_inv);
    let cert = LambdaCertificate {
        k: m,
        complex: d.reduced.clone(),
        unknot: FreeComplex::pawn(Grading::new(0, 0)),
        f: f.after(wi),
        g: w.after(&g),
        h: w.after(&h.after(wi)),
        h_prime: ChainMap::zero(1, 1),
    };
    debug_assert!(cert.verify());
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::tensor;
    use crate::pieces::{dual_staircase, staircase};
    use crate::zring::GMonomial;

    fn knight(c: i64, k: u32) -> FreeComplex {
        FreeComplex::knight(GMonomial::new(c, k), Grading::new(0, 0))
    }

    #[test]
    fn zero_bounds() {
        for k in 1..5 {
            assert_eq!(lambda_zero_upper(&knight(1, k), 6).k(), Some(k));
        }
        assert_eq!(lambda_zero_upper(&tensor(&knight(1, 1), &knight(2, 0)), 4).k(), Some(1));
        for kmax in 0..5 {
            match lambda_zero_upper(&knight(2, 0), kmax) {
                ZeroBound::None { refutation, .. } => assert!(refutation.verify()),
                ZeroBound::Found { .. } => panic!("kappa(2) is not G-contractible"),
            }
        }
    }

    #[test]
    fn staircase_bounds() {
        for n in 1..=4 {
            for c in [staircase(n), dual_staircase(n)] {
                let b = lambda_bounds(&c);
                assert_eq!((b.lower, b.upper), (n, Some(n)));
                assert!(b.certificate.unwrap().verify());
            }
        }
        let b = lambda_bounds(&FreeComplex::pawn(Grading::new(0, 0)));
        assert_eq!((b.lower, b.upper), (0, Some(0)));
    }

    #[test]
    fn missing_bound() {
        let c = crate::chain::direct_sum(&FreeComplex::pawn(Grading::new(0, 0)), &knight(2, 0));
        let b = lambda_bounds(&c);
        assert_eq!(b.upper, None);
        assert!(b.note.is_some());
    }
}
