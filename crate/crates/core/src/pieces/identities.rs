use std::fmt;

use super::catalogue::{dual_staircase, staircase, PieceKind};
use super::decompose::{decompose, decompose_tensor, Decomposition, Summand};
use super::torsion::u_g;
use crate::chain::{direct_sum, dual, tensor, FreeComplex, Grading};
use crate::tqft::specialized_homology;
use crate::zring::{CoefficientSpec, GMonomial, Int};

/// A tensor identity between catalogue pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `S_1 (x) S_n = S_{n+1} + n copies of kappa(G) (x) kappa(2)`.
    S1TensorSn(u32),
    /// `kappa(z) (x) S_n` for `z` either `G` or `2`.
    KnightTensorStaircase { z: GMonomial, n: u32 },
    /// `kappa(z^a) (x) kappa(z^b) = kappa(z^a) + kappa(z^a)` for `a <= b`.
    KnightTensorKnight { z: GMonomial, a: u32, b: u32 },
    /// `S_1 (x) dual S_1 = two copies of kappa(G) (x) kappa(2) + pawn`.
    S1TensorDualS1,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::S1TensorSn(n) => write!(f, "S1_tensor_Sn:{n}"),
            Identity::KnightTensorStaircase { z, n } => write!(f, "knight_tensor_staircase:{}:{n}", zname(z)),
            Identity::KnightTensorKnight { z, a, b } => write!(f, "knight_tensor_knight:{}:{a}:{b}", zname(z)),
            Identity::S1TensorDualS1 => write!(f, "S1_tensor_dualS1"),
        }
    }
}

fn zname(z: &GMonomial) -> String {
    if z.power() == 1 {
        "G".into()
    } else {
        z.coeff().to_string()
    }
}

fn zparse(s: &str) -> Option<GMonomial> {
    if s == "G" {
        return Some(GMonomial::g(1));
    }
    let p: u64 = s.parse().ok()?;
    crate::zring::is_prime_power(&Int::from(p)).then(|| GMonomial::new(p as i64, 0))
}

impl Identity {
    /// The full suite: `n <= 5`, `n <= 4` with `z` in `{G, 2}`, `a <= b <= 3` with `z` in `{G, 2, 3}`.
    pub fn all() -> Vec<Identity> {
        let mut out: Vec<Identity> = (1..=5).map(Identity::S1TensorSn).collect();
        for z in [GMonomial::g(1), GMonomial::new(2, 0)] {
            for n in 1..=4 {
                out.push(Identity::KnightTensorStaircase { z: z.clone(), n });
            }
        }
        for z in [GMonomial::g(1), GMonomial::new(2, 0), GMonomial::new(3, 0)] {
            for a in 1..=3 {
                for b in a..=3 {
                    out.push(Identity::KnightTensorKnight { z: z.clone(), a, b });
                }
            }
        }
        out.push(Identity::S1TensorDualS1);
        out
    }

    /// Parses the `Display` form; a bare family name expands to the whole family.
    pub fn parse(s: &str) -> Option<Vec<Identity>> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<u32>().ok().filter(|&n| n >= 1);
        let family = |pred: fn(&Identity) -> bool| Some(Identity::all().into_iter().filter(pred).collect());
        match parts.as_slice() {
            ["S1_tensor_Sn"] => family(|i| matches!(i, Identity::S1TensorSn(_))),
            ["S1_tensor_Sn", n] => Some(vec![Identity::S1TensorSn(num(n)?)]),
            ["knight_tensor_staircase"] => family(|i| matches!(i, Identity::KnightTensorStaircase { .. })),
            ["knight_tensor_staircase", z, n] => {
                Some(vec![Identity::KnightTensorStaircase { z: zparse(z)?, n: num(n)? }])
            }
            ["knight_tensor_knight"] => family(|i| matches!(i, Identity::KnightTensorKnight { .. })),
            ["knight_tensor_knight", z, a, b] => {
                let (a, b) = (num(a)?, num(b)?);
                (a <= b).then_some(())?;
                Some(vec![Identity::KnightTensorKnight { z: zparse(z)?, a, b }])
            }
            ["S1_tensor_dualS1"] => Some(vec![Identity::S1TensorDualS1]),
            ["all"] => Some(Identity::all()),
            _ => None,
        }
    }

    /// The two tensor factors.
    pub fn factors(&self) -> (FreeComplex, FreeComplex) {
        let o = Grading::new(0, 0);
        match self {
            Identity::S1TensorSn(n) => (staircase(1), staircase(*n)),
            Identity::KnightTensorStaircase { z, n } => (FreeComplex::knight(z.clone(), o), staircase(*n)),
            Identity::KnightTensorKnight { z, a, b } => {
                (FreeComplex::knight(z.pow(*a), o), FreeComplex::knight(z.pow(*b), o))
            }
            Identity::S1TensorDualS1 => (staircase(1), dual_staircase(1)),
        }
    }

    /// The claimed right-hand side, placed in the gradings the tensor product has.
    pub fn rhs(&self) -> Vec<Summand> {
        let kk = || PieceKind::KnightTensor { z1: GMonomial::g(1), z2: GMonomial::new(2, 0) };
        let at = |i: i64, q: i64| Grading::new(i, q);
        let s = |kind: PieceKind, g: Grading| Summand { kind, at: g };
        match self {
            Identity::S1TensorSn(n) => {
                let mut v = vec![s(PieceKind::Staircase { n: n + 1 }, at(0, 0))];
                v.extend((1..=*n as i64).map(|j| s(kk(), at(0, 2 * j))));
                v
            }
            Identity::KnightTensorStaircase { z, n } if z.power() == 1 => {
                let mut v = vec![s(PieceKind::Knight { z: z.clone() }, at(0, 0))];
                v.extend((1..=*n as i64).map(|j| s(kk(), at(0, 2 * j))));
                v
            }
            Identity::KnightTensorStaircase { z, n } => {
                let mut v: Vec<Summand> = (0..*n as i64).map(|j| s(kk(), at(0, 2 * j))).collect();
                v.push(s(PieceKind::Knight { z: z.clone() }, at(0, 2 * *n as i64)));
                v
            }
            Identity::KnightTensorKnight { z, a, b } => {
                let k = PieceKind::Knight { z: z.pow(*a) };
                let lift = 2 * z.pow(*b).power() as i64;
                vec![s(k.clone(), at(0, 0)), s(k, at(1, lift))]
            }
            Identity::S1TensorDualS1 => {
                vec![s(kk(), at(-1, -2)), s(kk(), at(-1, 0)), s(PieceKind::Pawn, at(0, 0))]
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    /// A verified decomposition of the left side into exactly the claimed pieces.
    pub witness: Option<Decomposition>,
    /// Named invariant comparisons between the two sides.
    pub checks: Vec<(String, bool)>,
}

impl IdentityReport {
    pub fn invariants_agree(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn passed(&self) -> bool {
        self.invariants_agree()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity.to_string(),
            "witness": self.witness.as_ref().map(|d| d.to_json()),
            "checks": self.checks.iter().map(|(n, ok)| serde_json::json!({"name": n, "ok": ok})).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

fn sorted(mut v: Vec<Summand>) -> Vec<(String, Grading)> {
    let mut out: Vec<(String, Grading)> = v.drain(..).map(|s| (s.kind.label(), s.at)).collect();
    out.sort();
    out
}

fn matches(d: &Decomposition, lhs: &FreeComplex, want: &[(String, Grading)]) -> bool {
    d.reduced == *lhs && sorted(d.summands.clone()) == want && d.verify()
}

/// Builds both sides, looks for an explicit witness and compares invariants.
pub fn verify_identity(id: &Identity) -> IdentityReport {
    let (a, b) = id.factors();
    let lhs = tensor(&a, &b);
    let rhs_pieces = id.rhs();
    let rhs = rhs_pieces.iter().fold(FreeComplex::empty(), |acc, s| direct_sum(&acc, &s.complex()));
    let want = sorted(rhs_pieces);

    let mut witness = Some(decompose(&lhs)).filter(|d| matches(d, &lhs, &want));
    if witness.is_none() {
        witness = Some(decompose_tensor(&decompose(&a), &decompose(&b))).filter(|d| matches(d, &lhs, &want));
    }

    let mut checks = Vec::new();
    for spec in [CoefficientSpec::FieldPGraded(2), CoefficientSpec::FieldPGraded(3), CoefficientSpec::FieldPGraded(0)] {
        let ok = specialized_homology(&lhs, spec) == specialized_homology(&rhs, spec);
        checks.push((format!("{spec:?}"), ok));
    }
    checks.push(("IntegersGZero".into(), {
        let s = CoefficientSpec::IntegersGZero;
        specialized_homology(&lhs, s) == specialized_homology(&rhs, s)
    }));
    checks.push(("u_G".into(), u_g(&lhs) == u_g(&rhs)));
    checks.push(("u_G dual".into(), u_g(&dual(&lhs)) == u_g(&dual(&rhs))));
    IdentityReport { identity: id.clone(), witness, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::all() {
            assert_eq!(Identity::parse(&id.to_string()), Some(vec![id.clone()]));
        }
        assert_eq!(Identity::parse("S1_tensor_Sn").unwrap().len(), 5);
        assert!(Identity::parse("knight_tensor_knight:G:3:1").is_none());
        assert!(Identity::parse("knight_tensor_knight:6:1:1").is_none());
    }

    #[test]
    fn small_identities() {
        for id in [
            Identity::S1TensorSn(1),
            Identity::KnightTensorKnight { z: GMonomial::g(1), a: 1, b: 2 },
            Identity::S1TensorDualS1,
        ] {
            let r = verify_identity(&id);
            assert!(r.passed(), "{id}: {:?}", r.checks);
            assert!(r.witness.is_some(), "{id}");
        }
    }
}
