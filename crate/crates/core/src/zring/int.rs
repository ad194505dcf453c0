use dashu_int::ops::{DivEuclid, ExtendedGcd, RemEuclid, UnsignedAbs};
pub use dashu_int::IBig as Int;
use dashu_int::Sign;

pub fn int(x: i64) -> Int {
    Int::from(x)
}

pub fn to_i64(x: &Int) -> Option<i64> {
    i64::try_from(x).ok()
}

/// Non-negative residue of `x` modulo `p > 0`.
pub fn rem_u64(x: &Int, p: u64) -> u64 {
    let r = x.rem_euclid(&Int::from(p));
    u64::try_from(r).expect("residue fits")
}

pub fn floor_div(a: &Int, b: &Int) -> Int {
    if is_negative(b) {
        (-a).div_euclid(-b)
    } else {
        a.div_euclid(b)
    }
}

pub fn is_negative(x: &Int) -> bool {
    x.sign() == Sign::Negative && !x.is_zero()
}

/// `(g, s, t)` with `g = gcd(a, b) = s*a + t*b`, `g >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    if a.is_zero() && b.is_zero() {
        return (Int::ZERO, Int::ZERO, Int::ZERO);
    }
    let (g, s, t) = a.clone().gcd_ext(b.clone());
    (Int::from(g), s, t)
}

/// `|x| = p^m` with `p` prime and `m >= 1`.
pub fn is_prime_power(x: &Int) -> bool {
    let n = match u64::try_from(x.clone().unsigned_abs()) {
        Ok(n) => n,
        // Large scalars only arise from pathological inputs; report them as composite.
        Err(_) => return false,
    };
    if n < 2 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    true
}

/// JSON integers: plain numbers when they fit in i64, decimal strings otherwise.
pub mod serde_int {
    use super::Int;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Int, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(x) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&x.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Int::from(v)),
            Repr::Str(s) => s.parse().map_err(de::Error::custom),
        }
    }
}
