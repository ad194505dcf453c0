use super::{Rational, ZigzagError};
use crate::tqft::PDCode;

/// Ends of a four-ended diagram, as indices into the slot table.
const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// A tangle diagram: crossings with four slots counter-clockwise from an under
/// strand, and labels pairing slots with each other or with the four ends.
#[derive(Clone, Debug)]
struct Tangle {
    crossings: Vec<[u32; 4]>,
    ends: [u32; 4],
    next: u32,
}

impl Tangle {
    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next
    }

    /// One crossing; the under strand runs SE to NW.
    fn one() -> Self {
        // Counter-clockwise from SE: SE, NE, NW, SW.
        Tangle { crossings: vec![[1, 2, 3, 4]], ends: [3, 2, 4, 1], next: 4 }
    }

    /// Adds a crossing on the east side.
    fn plus_one(&mut self) {
        let (w_top, w_bot) = (self.ends[NE], self.ends[SE]);
        let (ne, se) = (self.fresh(), self.fresh());
        self.crossings.push([se, ne, w_top, w_bot]);
        self.ends[NE] = ne;
        self.ends[SE] = se;
    }

    /// Reflection in the NW-SE diagonal.
    fn invert(&mut self) {
        for c in &mut self.crossings {
            *c = [c[0], c[3], c[2], c[1]];
        }
        self.ends.swap(NE, SW);
    }

    /// Joins NW to NE and SW to SE.
    fn numerator(mut self) -> Vec<[u32; 4]> {
        let ren = |l: u32, e: &[u32; 4]| {
            if l == e[NE] {
                e[NW]
            } else if l == e[SE] {
                e[SW]
            } else {
                l
            }
        };
        let e = self.ends;
        for c in &mut self.crossings {
            for l in c.iter_mut() {
                *l = ren(*l, &e);
            }
        }
        self.crossings
    }
}

/// Orients a closed diagram by walking it; `None` for a link.
fn orient(xs: &[[u32; 4]]) -> Option<Vec<[i64; 4]>> {
    let n = xs.len();
    let mut slots: std::collections::HashMap<u32, Vec<(usize, usize)>> = Default::default();
    for (c, x) in xs.iter().enumerate() {
        for (s, l) in x.iter().enumerate() {
            slots.entry(*l).or_default().push((c, s));
        }
    }
    let total = 2 * n as i64;
    let mut lab = vec![[0i64; 4]; n];
    let mut under_in = vec![0usize; n];
    let (mut c, mut s) = (0usize, 0usize);
    for step in 1..=total {
        if lab[c][s] != 0 {
            return None;
        }
        lab[c][s] = if step == 1 { total } else { step - 1 };
        if s % 2 == 0 {
            under_in[c] = s;
        }
        let out = (s + 2) % 4;
        lab[c][out] = step;
        let l = xs[c][out];
        (c, s) = *slots[&l].iter().find(|&&p| p != (c, out))?;
    }
    if (c, s) != (0, 0) || lab.iter().any(|x| x.contains(&0)) {
        return None;
    }
    Some(lab.iter().zip(&under_in).map(|(x, &r)| [0, 1, 2, 3].map(|k| x[(k + r) % 4])).collect())
}

/// PD code of the numerator closure of the rational tangle `x > 0`.
pub fn two_bridge_pd(x: Rational) -> Result<PDCode, ZigzagError> {
    let mut t = Tangle::one();
    for m in x.moves()? {
        if m {
            t.plus_one();
        } else {
            t.invert();
        }
    }
    let xs = orient(&t.numerator()).ok_or(ZigzagError::NotAKnot(x))?;
    PDCode::new(xs).map_err(|_| ZigzagError::NotAKnot(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_two_bridge_knots() {
        assert_eq!(two_bridge_pd(Rational::integer(1)).unwrap().len(), 1);
        assert_eq!(two_bridge_pd(Rational::integer(3)).unwrap().len(), 3);
        assert_eq!(two_bridge_pd(Rational::new(5, 2).unwrap()).unwrap().len(), 4);
        assert_eq!(two_bridge_pd(Rational::integer(2)).unwrap_err(), ZigzagError::NotAKnot(Rational::integer(2)));
        assert!(two_bridge_pd(Rational::new(1, 2).unwrap()).is_ok());
    }
}
