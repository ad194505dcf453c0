use serde::{Deserialize, Serialize};

use crate::chain::{dual, tensor, ChainMap, FreeComplex, Grading};
use crate::zring::{GMonomial, GPolynomial, Int};

/// Catalogued pieces in standard position; [`PieceKind::complex`] builds them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params")]
pub enum PieceKind {
    /// One copy of `Z[G]` at `(0, 0)`.
    Pawn,
    /// `Z[G]{0} -> Z[G]{2k}` by `z = c*G^k`, source at `(0, 0)`.
    Knight {
        z: GMonomial,
    },
    /// `knight(z1) (x) knight(z2)`, first generator at `(0, 0)`.
    KnightTensor {
        z1: GMonomial,
        z2: GMonomial,
    },
    Staircase {
        n: u32,
    },
    DualStaircase {
        n: u32,
    },
    /// An unidentified block, kept verbatim at its own gradings.
    Opaque {
        complex: FreeComplex,
    },
}

impl PieceKind {
    pub fn name(&self) -> &'static str {
        match self {
            PieceKind::Pawn => "pawn",
            PieceKind::Knight { .. } => "knight",
            PieceKind::KnightTensor { .. } => "knight_tensor",
            PieceKind::Staircase { .. } => "staircase",
            PieceKind::DualStaircase { .. } => "dual_staircase",
            PieceKind::Opaque { .. } => "opaque",
        }
    }

    pub fn complex(&self) -> FreeComplex {
        let o = Grading::new(0, 0);
        match self {
            PieceKind::Pawn => FreeComplex::pawn(o),
            PieceKind::Knight { z } => FreeComplex::knight(z.clone(), o),
            PieceKind::KnightTensor { z1, z2 } => {
                tensor(&FreeComplex::knight(z1.clone(), o), &FreeComplex::knight(z2.clone(), o))
            }
            PieceKind::Staircase { n } => staircase(*n),
            PieceKind::DualStaircase { n } => dual_staircase(*n),
            PieceKind::Opaque { complex } => complex.clone(),
        }
    }

    /// Short text such as `knight(1*G^1)`.
    pub fn label(&self) -> String {
        match self {
            PieceKind::Pawn => "pawn".into(),
            PieceKind::Knight { z } => format!("knight({z})"),
            PieceKind::KnightTensor { z1, z2 } => format!("knight({z1}) (x) knight({z2})"),
            PieceKind::Staircase { n } => format!("S_{n}"),
            PieceKind::DualStaircase { n } => format!("dual S_{n}"),
            PieceKind::Opaque { complex } => format!("opaque[{} gens]", complex.len()),
        }
    }
}

/// `a_0..a_n` in degree 0 at `q = 2(n - j)`, then `b_0..b_{n-1}` in degree 1 at `q = 2(n - j)`,
/// with `d(a_j) = 2 b_j + G b_{j-1}`.
pub fn staircase(n: u32) -> FreeComplex {
    assert!(n >= 1, "staircase needs n >= 1");
    let n = n as usize;
    let mut gens: Vec<Grading> = (0..=n).map(|j| Grading::new(0, 2 * (n - j) as i64)).collect();
    gens.extend((0..n).map(|j| Grading::new(1, 2 * (n - j) as i64)));
    let mut c = FreeComplex::new(gens);
    let b = |j: usize| n + 1 + j;
    for j in 0..=n {
        if j < n {
            c.set(j, b(j), GMonomial::new(2, 0));
        }
        if j > 0 {
            c.set(j, b(j - 1), GMonomial::g(1));
        }
    }
    c
}

pub fn dual_staircase(n: u32) -> FreeComplex {
    dual(&staircase(n))
}

/// Maps `f: S_n -> U`, `g: U -> S_n` and `h` with `g f - G^n = h d + d h` and `f g = G^n`,
/// where `U` is a pawn at `(0, 0)`.
pub fn staircase_maps(n: u32) -> (ChainMap, ChainMap, ChainMap) {
    let len = 2 * n as usize + 1;
    let nn = n as usize;
    let mut f = ChainMap::zero(len, 1);
    f.set(0, 0, GPolynomial::one());
    let mut g = ChainMap::zero(1, len);
    let pow2 = |e: usize| -> Int { Int::from(-2).pow(e) };
    for j in 0..=nn {
        g.set(0, j, GPolynomial::monomial(pow2(j), (nn - j) as u32));
    }
    let mut h = ChainMap::zero(len, len);
    for j in 0..nn {
        for i in j + 1..=nn {
            let e = i - j - 1;
            h.set(nn + 1 + j, i, GPolynomial::monomial(-pow2(e), (nn - 1 - e) as u32));
        }
    }
    (f, g, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_shapes() {
        let s = staircase(1);
        assert_eq!(s.len(), 3);
        assert_eq!(s.entry(0, 2), GMonomial::new(2, 0));
        assert_eq!(s.entry(1, 2), GMonomial::g(1));
        for n in 1..7 {
            staircase(n).validate().unwrap();
            dual_staircase(n).validate().unwrap();
        }
        assert_eq!(dual_staircase(1), dual(&staircase(1)));
    }

    #[test]
    fn staircase_maps_are_certificates() {
        for n in 1..7 {
            let s = staircase(n);
            let u = FreeComplex::pawn(Grading::new(0, 0));
            let (f, g, h) = staircase_maps(n);
            assert!(f.is_chain_map(&s, &u));
            assert!(g.is_chain_map(&u, &s));
            let gn = GPolynomial::g_pow(n);
            let lhs = g.after(&f).sub(&ChainMap::scalar(s.len(), &gn));
            assert!(lhs.is_nullhomotopic_via(&s, &h), "n = {n}");
            assert_eq!(f.after(&g), ChainMap::scalar(1, &gn));
        }
    }
}
