use std::collections::BTreeMap;

use super::category::{Mor, Obj, TangleComplex};
use super::graph::{Parity, VertexType, ZigzagGraph};
use crate::chain::{ChainMap, FreeComplex, Grading};

fn obj(v: VertexType) -> Obj {
    match v {
        VertexType::Dot => Obj::Zero,
        VertexType::Circle => Obj::Inf,
    }
}

/// Objects in vertex order, `A_0` at `(0, 0)`.
pub fn graph_to_complex(g: &ZigzagGraph) -> TangleComplex {
    let mut objects = vec![(obj(g.vertices[0]), Grading::new(0, 0))];
    let mut diff = BTreeMap::new();
    for (e, edge) in g.edges.iter().enumerate() {
        let (a, b) = (obj(g.vertices[e]), obj(g.vertices[e + 1]));
        let (s, t) = g.ends_of(e);
        let m = if a != b {
            Mor::saddle(obj(g.vertices[s]), obj(g.vertices[t]))
        } else if edge.parity == Parity::Odd {
            Mor::saddle(a, a)
        } else {
            Mor::d(a)
        };
        let deg = m.s_degree() as i64;
        let prev = objects[e].1;
        let next = if edge.forward { prev.shift(1, deg) } else { prev.shift(-1, -deg) };
        objects.push((b, next));
        diff.insert((s, t), m);
    }
    TangleComplex { objects, diff }
}

/// First closed generator of each object, and the closed gradings.
fn closed_layout(c: &TangleComplex) -> (Vec<usize>, Vec<Grading>) {
    let mut offs = Vec::new();
    let mut gens = Vec::new();
    for (o, g) in &c.objects {
        offs.push(gens.len());
        match o {
            Obj::Inf => gens.push(*g),
            Obj::Zero => {
                gens.push(g.shift(0, 1));
                gens.push(g.shift(0, -1));
            }
        }
    }
    (offs, gens)
}

/// Closes every object into circles and evaluates the reduced theory on the morphisms.
///
/// `Inf` closes to the marked circle alone; `Zero` to the marked circle and one more.
pub fn closure(c: &TangleComplex) -> FreeComplex {
    let (offs, gens) = closed_layout(c);
    let mut out = FreeComplex::new(gens);
    for ((a, b), m) in &c.diff {
        for (x, y, p) in m.closed() {
            let mono = p.as_monomial().expect("differentials close to monomials");
            out.set(offs[*a] + x, offs[*b] + y, mono);
        }
    }
    out
}

/// A map between tangle complexes, closed up.
pub fn closure_map(m: &super::TangleMap, src: &TangleComplex, tgt: &TangleComplex) -> ChainMap {
    let (so, sg) = closed_layout(src);
    let (to, tg) = closed_layout(tgt);
    let mut out = ChainMap::zero(sg.len(), tg.len());
    for ((a, b), mor) in m.entries() {
        for (x, y, p) in mor.closed() {
            out.add_to(so[*a] + x, to[*b] + y, &p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::gaussian_eliminate;
    use crate::zigzag::{zz, Rational};

    #[test]
    fn three_sevenths_complex() {
        let c = graph_to_complex(&zz(Rational::new(3, 7).unwrap()).unwrap());
        assert!(c.d_squared_is_zero());
        let got: Vec<(Obj, i64, i64)> = c.objects.iter().map(|(o, g)| (*o, g.i, g.q)).collect();
        use Obj::{Inf, Zero};
        // Normalised so that A_0 sits at (0, 0).
        let want = vec![
            (Inf, 0, 0),
            (Zero, 1, 1),
            (Zero, 2, 3),
            (Zero, 3, 5),
            (Zero, 2, 3),
            (Inf, 1, 2),
            (Inf, 2, 4),
            (Zero, 3, 5),
            (Zero, 4, 7),
            (Zero, 5, 9),
        ];
        assert_eq!(got, want);
        let kinds: Vec<(usize, usize, &str)> = c
            .diff
            .iter()
            .map(|((a, b), m)| {
                let k = if m.src != m.tgt {
                    "S"
                } else if m.id.is_zero() {
                    "S2"
                } else {
                    "D"
                };
                (*a, *b, k)
            })
            .collect();
        assert_eq!(
            kinds,
            vec![
                (0, 1, "S"),
                (1, 2, "D"),
                (2, 3, "S2"),
                (4, 3, "D"),
                (5, 4, "S"),
                (5, 6, "D"),
                (6, 7, "S"),
                (7, 8, "D"),
                (8, 9, "S2"),
            ]
        );
    }

    #[test]
    fn closures_of_small_tangles() {
        let one = closure(&graph_to_complex(&zz(Rational::integer(1)).unwrap()));
        one.validate().unwrap();
        assert_eq!(gaussian_eliminate(&one).len(), 1);
        let three = gaussian_eliminate(&closure(&graph_to_complex(&zz(Rational::integer(3)).unwrap())));
        assert_eq!(three.len(), 3);
        assert_eq!(crate::pieces::u_g(&three), 1);
    }
}
