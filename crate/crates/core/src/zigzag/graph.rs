use std::fmt;

use serde::Serialize;

use super::{Rational, ZigzagError};

/// `Dot` is the object with horizontal arcs, `Circle` the one with vertical arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VertexType {
    Dot,
    Circle,
}

impl VertexType {
    pub fn switch(self) -> Self {
        match self {
            VertexType::Dot => VertexType::Circle,
            VertexType::Circle => VertexType::Dot,
        }
    }

    fn symbol(self) -> char {
        match self {
            VertexType::Dot => '•',
            VertexType::Circle => '∘',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Odd,
    Even,
}

/// Edge between vertices `k` and `k + 1`; `forward` means it points from `k` to `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZEdge {
    pub forward: bool,
    pub parity: Parity,
}

/// A line-shaped graph, stored in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZigzagGraph {
    pub vertices: Vec<VertexType>,
    pub edges: Vec<ZEdge>,
}

impl fmt::Display for ZigzagGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            write!(f, "{}", v.symbol())?;
            if let Some(e) = self.edges.get(k) {
                write!(f, "{}", if e.forward { '→' } else { '←' })?;
            }
        }
        Ok(())
    }
}

impl ZigzagGraph {
    pub fn is_saddle(&self, e: usize) -> bool {
        self.vertices[e] != self.vertices[e + 1]
    }

    /// Source and target vertex of edge `e`.
    pub fn ends_of(&self, e: usize) -> (usize, usize) {
        if self.edges[e].forward {
            (e, e + 1)
        } else {
            (e + 1, e)
        }
    }

    fn is_end(&self, v: usize) -> bool {
        v == 0 || v + 1 == self.vertices.len()
    }

    /// Checks the defining conditions; the line shape holds by construction.
    pub fn validate(&self) -> Result<(), String> {
        if self.edges.len() + 1 != self.vertices.len() {
            return Err("edge count must be one less than vertex count".into());
        }
        let mut saddles = 0;
        for e in 0..self.edges.len() {
            if self.is_saddle(e) {
                saddles += 1;
                if self.edges[e].parity != Parity::Odd {
                    return Err(format!("saddle edge {e} is even"));
                }
                let (s, _) = self.ends_of(e);
                if self.vertices[s] != VertexType::Circle {
                    return Err(format!("saddle edge {e} points the wrong way"));
                }
            }
            if e > 0 && self.edges[e].parity == self.edges[e - 1].parity {
                return Err(format!("edges {} and {e} have the same parity", e - 1));
            }
        }
        if saddles == 0 {
            return Err("no saddle edge".into());
        }
        Ok(())
    }

    /// Switches vertex types and reverses every edge.
    pub fn inverted(&self) -> Self {
        ZigzagGraph {
            vertices: self.vertices.iter().map(|v| v.switch()).collect(),
            edges: self.edges.iter().map(|e| ZEdge { forward: !e.forward, parity: e.parity }).collect(),
        }
    }

    /// The same graph read from the other end.
    pub fn reversed(&self) -> Self {
        ZigzagGraph {
            vertices: self.vertices.iter().rev().cloned().collect(),
            edges: self.edges.iter().rev().map(|e| ZEdge { forward: !e.forward, parity: e.parity }).collect(),
        }
    }

    /// Parities are forced by the saddles; recompute them after a rewrite.
    fn with_parities(vertices: Vec<VertexType>, forward: Vec<bool>) -> Self {
        let first_saddle = (0..forward.len()).find(|&e| vertices[e] != vertices[e + 1]).expect("a saddle edge");
        let edges = forward
            .iter()
            .enumerate()
            .map(|(e, &f)| {
                let odd = (e + first_saddle) % 2 == 0;
                ZEdge { forward: f, parity: if odd { Parity::Odd } else { Parity::Even } }
            })
            .collect();
        ZigzagGraph { vertices, edges }
    }

    /// The graph of `x + 1` from the graph of `x`.
    pub fn plus_one(&self) -> Self {
        use VertexType::{Circle as C, Dot as B};
        let mut vertices: Vec<VertexType> = Vec::new();
        let mut forward: Vec<bool> = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            let (s, t) = self.ends_of(e);
            // Replacement from source to target: vertex types and edge directions.
            let (vs, fs): (Vec<VertexType>, Vec<bool>) = match (self.vertices[s], self.vertices[t], edge.parity) {
                (B, B, Parity::Odd) => (vec![B, C, C, B], vec![false, true, true]),
                (B, B, Parity::Even) => match (self.is_end(s), self.is_end(t)) {
                    (false, false) => (vec![B, B], vec![true]),
                    (false, true) => (vec![B, B, C], vec![true, false]),
                    (true, false) => (vec![C, B, B], vec![true, true]),
                    (true, true) => unreachable!("a line of two dots has no saddle"),
                },
                (C, B, _) => (vec![C, C, B], vec![true, true]),
                (C, C, _) => (vec![C, C], vec![true]),
                (B, C, _) => unreachable!("saddles point from circle to dot"),
            };
            let (vs, fs) = if edge.forward {
                (vs, fs)
            } else {
                (vs.into_iter().rev().collect(), fs.into_iter().rev().map(|f| !f).collect())
            };
            match vertices.last() {
                None => vertices.extend(&vs),
                Some(&last) => {
                    assert_eq!(last, vs[0], "glued vertices must agree");
                    vertices.extend(&vs[1..]);
                }
            }
            forward.extend(fs);
        }
        ZigzagGraph::with_parities(vertices, forward)
    }
}

/// The zigzag graph of a positive rational.
pub fn zz(x: Rational) -> Result<ZigzagGraph, ZigzagError> {
    let mut g = ZigzagGraph {
        vertices: vec![VertexType::Circle, VertexType::Dot],
        edges: vec![ZEdge { forward: true, parity: Parity::Odd }],
    };
    for m in x.moves()? {
        g = if m { g.plus_one() } else { g.inverted() };
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EndsParity {
    pub even_end: bool,
    pub odd_circle_end: bool,
    pub odd_dot_end: bool,
}

pub fn ends_parity(g: &ZigzagGraph) -> EndsParity {
    let n = g.vertices.len();
    let ends = [(g.vertices[0], g.edges[0].parity), (g.vertices[n - 1], g.edges[n - 2].parity)];
    EndsParity {
        even_end: ends.iter().any(|e| e.1 == Parity::Even),
        odd_circle_end: ends.contains(&(VertexType::Circle, Parity::Odd)),
        odd_dot_end: ends.contains(&(VertexType::Dot, Parity::Odd)),
    }
}

/// Which ends of `zz(x)` carry odd or even edges, as predicted by the parities of `p` and `q`;
/// also checks the vertex count `p + q`.
pub fn parity_lemma_holds(x: Rational) -> Result<bool, ZigzagError> {
    let g = zz(x)?;
    let e = ends_parity(&g);
    let (p, q) = connectivity_parity(x);
    Ok(g.vertices.len() as i64 == x.p() + x.q()
        && e.even_end == (p == Parity::Even || q == Parity::Even)
        && e.odd_circle_end == (p == Parity::Odd)
        && e.odd_dot_end == (q == Parity::Odd))
}

/// `(p mod 2, q mod 2)`, which determines how the tangle connects its ends.
pub fn connectivity_parity(x: Rational) -> (Parity, Parity) {
    let par = |n: i64| if n.rem_euclid(2) == 1 { Parity::Odd } else { Parity::Even };
    (par(x.p()), par(x.q()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(zz(r(1, 1)).unwrap().to_string(), "∘→•");
        assert_eq!(zz(r(2, 1)).unwrap().to_string(), "∘→∘→•");
        assert_eq!(zz(r(3, 7)).unwrap().to_string(), "∘→•→•→•←•←∘→∘→•→•→•");
        assert_eq!(
            ends_parity(&zz(r(1, 1)).unwrap()),
            EndsParity { even_end: false, odd_circle_end: true, odd_dot_end: true }
        );
        assert_eq!(
            ends_parity(&zz(r(2, 1)).unwrap()),
            EndsParity { even_end: true, odd_circle_end: false, odd_dot_end: true }
        );
    }

    #[test]
    fn parity_lemma_and_sizes() {
        for p in 1..=30i64 {
            for q in 1..=30i64 {
                let Some(x) = Rational::new(p, q).filter(|x| x.p() == p) else { continue };
                let g = zz(x).unwrap();
                g.validate().unwrap();
                assert_eq!(g.vertices.len() as i64, p + q);
                let e = ends_parity(&g);
                assert_eq!(e.even_end, p % 2 == 0 || q % 2 == 0, "{x}");
                assert_eq!(e.odd_circle_end, p % 2 == 1, "{x}");
                assert_eq!(e.odd_dot_end, q % 2 == 1, "{x}");
                assert!(parity_lemma_holds(x).unwrap());
                let inv = zz(x.recip()).unwrap();
                assert!(inv == g.inverted() || inv == g.inverted().reversed(), "{x}");
            }
        }
    }
}
