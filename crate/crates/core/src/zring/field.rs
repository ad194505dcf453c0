use std::fmt::Debug;

use dashu_ratio::RBig;

use super::int::{rem_u64, Int};

/// Arithmetic of a coefficient field, with the field chosen at runtime.
pub trait FieldOps {
    type E: Clone + PartialEq + Debug;
    fn from_int(&self, x: &Int) -> Self::E;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

/// Z/p for a prime p.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField(pub u64);

impl FieldOps for PrimeField {
    type E = u64;
    fn from_int(&self, x: &Int) -> u64 {
        rem_u64(x, self.0)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (*a, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug)]
pub struct Rationals;

impl FieldOps for Rationals {
    type E = RBig;
    fn from_int(&self, x: &Int) -> RBig {
        RBig::from(x.clone())
    }
    fn zero(&self) -> RBig {
        RBig::ZERO
    }
    fn one(&self) -> RBig {
        RBig::ONE
    }
    fn is_zero(&self, a: &RBig) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RBig, b: &RBig) -> RBig {
        a + b
    }
    fn mul(&self, a: &RBig, b: &RBig) -> RBig {
        a * b
    }
    fn neg(&self, a: &RBig) -> RBig {
        -a
    }
    fn inv(&self, a: &RBig) -> RBig {
        assert!(!a.is_zero(), "inverse of zero");
        RBig::ONE / a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField(7);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        let q = Rationals;
        let x = q.from_int(&Int::from(3));
        assert_eq!(q.mul(&x, &q.inv(&x)), q.one());
    }
}
