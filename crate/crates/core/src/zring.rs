//! Exact arithmetic in the graded ring Z[G] (deg G = -2) and its specializations.

mod field;
mod int;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use field::{FieldOps, PrimeField, Rationals};
pub use int::serde_int;
pub use int::{ext_gcd, floor_div, int, is_negative, is_prime_power, rem_u64, to_i64, Int};

/// `coeff * G^power`. The zero monomial is always `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GMonomial {
    coeff: Int,
    power: u32,
}

impl GMonomial {
    pub fn new(coeff: impl Into<Int>, power: u32) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            Self::zero()
        } else {
            GMonomial { coeff, power }
        }
    }

    pub fn zero() -> Self {
        GMonomial { coeff: Int::ZERO, power: 0 }
    }

    pub fn one() -> Self {
        GMonomial { coeff: Int::ONE, power: 0 }
    }

    /// `G^k`.
    pub fn g(k: u32) -> Self {
        GMonomial { coeff: Int::ONE, power: k }
    }

    pub fn coeff(&self) -> &Int {
        &self.coeff
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.power == 0 && (self.coeff.is_one() || self.coeff == Int::NEG_ONE)
    }

    pub fn degree(&self) -> i64 {
        -2 * self.power as i64
    }

    pub fn mul(&self, other: &GMonomial) -> GMonomial {
        GMonomial::new(&self.coeff * &other.coeff, self.power + other.power)
    }

    pub fn pow(&self, e: u32) -> GMonomial {
        GMonomial::new(self.coeff.pow(e as usize), self.power * e)
    }

    pub fn scale(&self, c: &Int) -> GMonomial {
        GMonomial::new(&self.coeff * c, self.power)
    }

    /// True iff `x = self * m` for some monomial `m`.
    pub fn divides(&self, x: &GMonomial) -> bool {
        assert!(!self.is_zero(), "division by the zero monomial");
        if x.is_zero() {
            return true;
        }
        x.power >= self.power && (&x.coeff % &self.coeff).is_zero()
    }

    pub fn div_exact(&self, x: &GMonomial) -> Option<GMonomial> {
        if !self.divides(x) {
            return None;
        }
        if x.is_zero() {
            return Some(GMonomial::zero());
        }
        Some(GMonomial::new(&x.coeff / &self.coeff, x.power - self.power))
    }

    /// Sum of two monomials of the same power (zero is compatible with anything).
    pub fn add_same_power(&self, other: &GMonomial) -> GMonomial {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.power, other.power, "adding monomials of different degree");
        GMonomial::new(&self.coeff + &other.coeff, self.power)
    }

    pub fn to_poly(&self) -> GPolynomial {
        GPolynomial::monomial(self.coeff.clone(), self.power)
    }
}

impl Neg for &GMonomial {
    type Output = GMonomial;
    fn neg(self) -> GMonomial {
        GMonomial::new(-&self.coeff, self.power)
    }
}

impl Neg for GMonomial {
    type Output = GMonomial;
    fn neg(self) -> GMonomial {
        -&self
    }
}

/// Free function form of monomial multiplication.
pub fn mono_mul(a: &GMonomial, b: &GMonomial) -> GMonomial {
    a.mul(b)
}

/// True iff `x = d * m` for a monomial `m`; `d` must be nonzero.
pub fn poly_divides_monomial(d: &GMonomial, x: &GMonomial) -> bool {
    d.divides(x)
}

impl fmt::Display for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*G^{}", self.coeff, self.power)
    }
}

#[derive(Serialize, Deserialize)]
struct MonoRepr {
    #[serde(with = "int::serde_int")]
    c: Int,
    k: u32,
}

impl Serialize for GMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MonoRepr { c: self.coeff.clone(), k: self.power }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = MonoRepr::deserialize(d)?;
        Ok(GMonomial::new(r.c, r.k))
    }
}

/// Polynomial in G with integer coefficients, indexed by power, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GPolynomial {
    coeffs: Vec<Int>,
}

impl GPolynomial {
    pub fn zero() -> Self {
        GPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<Int>, k: u32) -> Self {
        let mut coeffs = vec![Int::ZERO; k as usize];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    pub fn g_pow(k: u32) -> Self {
        Self::monomial(Int::ONE, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        GPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or(Int::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_in_g(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero terms as monomials, increasing power.
    pub fn terms(&self) -> impl Iterator<Item = GMonomial> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| GMonomial::new(c.clone(), k as u32))
    }

    /// The single term if the polynomial is a monomial (zero counts).
    pub fn as_monomial(&self) -> Option<GMonomial> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (None, _) => Some(GMonomial::zero()),
            (Some(m), None) => Some(m),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Int) -> GPolynomial {
        GPolynomial::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul_mono(&self, m: &GMonomial) -> GPolynomial {
        if m.is_zero() {
            return GPolynomial::zero();
        }
        let mut coeffs = vec![Int::ZERO; m.power() as usize];
        coeffs.extend(self.coeffs.iter().map(|x| x * m.coeff()));
        GPolynomial::from_coeffs(coeffs)
    }

    pub fn eval(&self, g: &Int) -> Int {
        let mut acc = Int::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * g + c;
        }
        acc
    }

    pub fn add_assign_ref(&mut self, other: &GPolynomial) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Int::ZERO);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        *self = GPolynomial::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl From<GMonomial> for GPolynomial {
    fn from(m: GMonomial) -> Self {
        m.to_poly()
    }
}

impl From<&GMonomial> for GPolynomial {
    fn from(m: &GMonomial) -> Self {
        m.to_poly()
    }
}

impl Add for &GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: GPolynomial) -> GPolynomial {
        &self + &rhs
    }
}

impl Neg for &GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        GPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        -&self
    }
}

impl Sub for &GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: &GPolynomial) -> GPolynomial {
        self + &(-rhs)
    }
}

impl Sub for GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: GPolynomial) -> GPolynomial {
        &self - &rhs
    }
}

impl Mul for &GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: &GPolynomial) -> GPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return GPolynomial::zero();
        }
        let mut coeffs = vec![Int::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        GPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: GPolynomial) -> GPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Target of a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientSpec {
    /// G = 0 over the integers.
    IntegersGZero,
    /// Coefficients reduced mod p (p = 0 means Q), G kept.
    FieldPGraded(u64),
    /// G = 1, then reduced mod p (p = 0 means Q).
    FieldGOne(u64),
}

/// Image of a polynomial under [`specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    /// An integer, or a rational integer when the target is Q.
    Integer(Int),
    Residue {
        value: u64,
        p: u64,
    },
    /// Polynomial in G with coefficients in Z/p, or Q when `p == 0`.
    Polynomial {
        coeffs: Vec<Int>,
        p: u64,
    },
}

pub fn specialize(poly: &GPolynomial, spec: CoefficientSpec) -> Specialized {
    match spec {
        CoefficientSpec::IntegersGZero => Specialized::Integer(poly.coeff(0)),
        CoefficientSpec::FieldGOne(0) => Specialized::Integer(poly.eval(&Int::ONE)),
        CoefficientSpec::FieldGOne(p) => Specialized::Residue { value: int::rem_u64(&poly.eval(&Int::ONE), p), p },
        CoefficientSpec::FieldPGraded(p) => {
            let coeffs = if p == 0 {
                poly.coeffs().to_vec()
            } else {
                poly.coeffs().iter().map(|c| Int::from(int::rem_u64(c, p))).collect()
            };
            let reduced = GPolynomial::from_coeffs(coeffs);
            Specialized::Polynomial { coeffs: reduced.coeffs, p }
        }
    }
}
