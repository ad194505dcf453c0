use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::ZigzagError;

/// `p/q` in lowest terms with `q >= 0`; `1/0` is infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const INFINITY: Rational = Rational { p: 1, q: 0 };

    /// `None` for `0/0`.
    pub fn new(p: i64, q: i64) -> Option<Self> {
        let g = gcd(p, q);
        if g == 0 {
            return None;
        }
        let s = if q < 0 || (q == 0 && p < 0) { -1 } else { 1 };
        Some(Rational { p: s * p / g, q: s * q / g })
    }

    pub fn integer(n: i64) -> Self {
        Rational { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_positive(&self) -> bool {
        self.q > 0 && self.p > 0
    }

    pub fn recip(&self) -> Self {
        Rational::new(self.q, self.p).expect("nonzero")
    }

    pub fn add_int(&self, k: i64) -> Self {
        Rational::new(self.p + k * self.q, self.q).expect("nonzero")
    }

    /// Smallest integer `>= self`; infinity has none.
    pub fn ceil(&self) -> Option<i64> {
        (self.q != 0).then(|| self.p.div_euclid(self.q) + i64::from(self.p.rem_euclid(self.q) != 0))
    }

    /// Moves from 1 to `self` through `y -> y + 1` (`true`) and `y -> 1/y` (`false`).
    pub(crate) fn moves(&self) -> Result<Vec<bool>, ZigzagError> {
        if !self.is_positive() {
            return Err(ZigzagError::NotPositive(*self));
        }
        let (mut p, mut q) = (self.p, self.q);
        let mut out = Vec::new();
        while (p, q) != (1, 1) {
            if p > q {
                // p/q = (p - q)/q + 1, applied k times at once.
                let k = if q == 1 { p - 1 } else { p / q };
                out.extend(std::iter::repeat_n(true, k as usize));
                p -= k * q;
            } else {
                out.push(false);
                (p, q) = (q, p);
            }
        }
        out.reverse();
        Ok(out)
    }

    /// Applies the Moebius map `(a b; c d)`.
    pub(crate) fn mobius(&self, a: i64, b: i64, c: i64, d: i64) -> Self {
        Rational::new(a * self.p + b * self.q, c * self.p + d * self.q).expect("invertible map")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl FromStr for Rational {
    type Err = ZigzagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if matches!(t, "inf" | "oo" | "∞" | "1/0") {
            return Ok(Rational::INFINITY);
        }
        let bad = || ZigzagError::Parse(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (t.parse().map_err(|_| bad())?, 1),
        };
        Rational::new(p, q).ok_or_else(bad)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalise() {
        let r: Rational = "6/-4".parse().unwrap();
        assert_eq!((r.p(), r.q()), (-3, 2));
        assert_eq!("inf".parse::<Rational>().unwrap(), Rational::INFINITY);
        assert_eq!("-1/0".parse::<Rational>().unwrap(), Rational::INFINITY);
        assert!("0/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(Rational::new(-1, 4).unwrap().ceil(), Some(0));
        assert_eq!(Rational::new(5, 4).unwrap().ceil(), Some(2));
        assert_eq!(Rational::new(-4, 2).unwrap().ceil(), Some(-2));
    }

    #[test]
    fn move_sequences() {
        for (p, q) in [(1, 1), (3, 7), (7, 3), (5, 1), (1, 5), (13, 8)] {
            let x = Rational::new(p, q).unwrap();
            let mut y = Rational::integer(1);
            for m in x.moves().unwrap() {
                y = if m { y.add_int(1) } else { y.recip() };
            }
            assert_eq!(y, x);
        }
        assert!(Rational::integer(0).moves().is_err());
    }
}
