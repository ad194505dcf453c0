use rustc_hash::FxHashMap;

use super::pd::{BasePoint, PDCode};
use super::TqftError;
use crate::chain::{FreeComplex, Grading, Reducer};
use crate::zring::GMonomial;

pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug)]
pub struct CubeOptions {
    pub base_point: Option<BasePoint>,
    /// Maximum number of live generators.
    pub cap: usize,
}

impl Default for CubeOptions {
    fn default() -> Self {
        CubeOptions { base_point: None, cap: DEFAULT_CAP }
    }
}

/// One smoothing of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionState {
    pub vertex: Vec<bool>,
    /// Circles as sets of edge labels.
    pub circles: Vec<Vec<i64>>,
    pub marked: usize,
}

/// Slot pairs joined by the 0- and 1-smoothings.
const SMOOTH: [[(usize, usize); 2]; 2] = [[(0, 1), (2, 3)], [(0, 3), (1, 2)]];

struct Diagram {
    /// Crossings over compact edge indices.
    xs: Vec<[usize; 4]>,
    edges: usize,
    base: usize,
}

impl Diagram {
    fn new(pd: &PDCode, bp: BasePoint) -> Self {
        let labels = pd.labels();
        let idx = |l: i64| labels.binary_search(&l).expect("label present");
        Diagram {
            xs: pd.crossings().iter().map(|c| c.map(idx)).collect(),
            edges: labels.len(),
            base: if labels.is_empty() { 0 } else { idx(bp.0) },
        }
    }

    /// Circle index of each edge, numbered by first appearance.
    fn circles(&self, v: u64) -> (Vec<u32>, u32) {
        let mut parent: Vec<usize> = (0..self.edges).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (j, x) in self.xs.iter().enumerate() {
            for &(a, b) in &SMOOTH[(v >> j & 1) as usize] {
                let (ra, rb) = (find(&mut parent, x[a]), find(&mut parent, x[b]));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let mut id: FxHashMap<usize, u32> = FxHashMap::default();
        let mut out = Vec::with_capacity(self.edges);
        for e in 0..self.edges {
            let r = find(&mut parent, e);
            let n = id.len() as u32;
            out.push(*id.entry(r).or_insert(n));
        }
        (out, id.len() as u32)
    }
}

/// Circles of a vertex with the marked one removed; `bit[c]` is the label bit of circle `c`.
struct State {
    circle: Vec<u32>,
    marked: u32,
    bit: Vec<Option<u32>>,
    unmarked: u32,
}

impl State {
    fn new(d: &Diagram, v: u64) -> Self {
        let (circle, n) = if d.edges == 0 { (Vec::new(), 1) } else { d.circles(v) };
        let marked = if d.edges == 0 { 0 } else { circle[d.base] };
        let mut bit = vec![None; n as usize];
        let mut k = 0;
        for (c, b) in bit.iter_mut().enumerate() {
            if c as u32 != marked {
                *b = Some(k);
                k += 1;
            }
        }
        State { circle, marked, bit, unmarked: k }
    }
}

pub fn resolve(pd: &PDCode, vertex: &[bool], bp: Option<BasePoint>) -> ResolutionState {
    assert_eq!(vertex.len(), pd.len(), "vertex length");
    let bp = bp.unwrap_or_else(|| pd.default_base_point());
    let d = Diagram::new(pd, bp);
    let v = vertex.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j));
    let s = State::new(&d, v);
    let mut circles = vec![Vec::new(); s.bit.len()];
    for (e, c) in s.circle.iter().enumerate() {
        circles[*c as usize].push(pd.labels()[e]);
    }
    ResolutionState { vertex: vertex.to_vec(), circles, marked: s.marked as usize }
}

/// Image of a generator of `src` along the edge flipping crossing `j`, as `(target mask, coeff, power)`.
fn edge_terms(d: &Diagram, src: &State, dst: &State, j: usize, x: u64) -> Vec<(u64, i64, u32)> {
    let cross = d.xs[j];
    let (a, b) = (src.circle[cross[0]], src.circle[cross[2]]);
    // Label of a source circle: None = marked, Some(true) = X.
    let label = |c: u32| src.bit[c as usize].map(|k| x >> k & 1 == 1);
    // Copy labels of untouched circles.
    let mut base = 0u64;
    for (e, &c) in src.circle.iter().enumerate() {
        if c == a || c == b {
            continue;
        }
        if let Some(k) = src.bit[c as usize] {
            if x >> k & 1 == 1 {
                let t = dst.circle[e];
                base |= 1 << dst.bit[t as usize].expect("untouched circle stays unmarked");
            }
        }
    }
    let set = |m: u64, c: u32, xlab: bool| -> u64 {
        match dst.bit[c as usize] {
            Some(k) if xlab => m | 1 << k,
            _ => m,
        }
    };
    if a != b {
        // Merge into the circle through the crossing in the target.
        let c = dst.circle[cross[0]];
        match (label(a), label(b)) {
            (Some(false), Some(false)) => vec![(base, 1, 0)],
            (Some(true), Some(false)) | (Some(false), Some(true)) => vec![(set(base, c, true), 1, 0)],
            (Some(true), Some(true)) => vec![(set(base, c, true), -1, 1)],
            (None, Some(false)) | (Some(false), None) => vec![(base, 1, 0)],
            _ => Vec::new(),
        }
    } else {
        // Split: slots 0 and 1 end up on different target circles.
        let (c1, c2) = (dst.circle[cross[0]], dst.circle[cross[1]]);
        match label(a) {
            Some(false) => vec![
                (set(set(base, c1, false), c2, true), 1, 0),
                (set(set(base, c1, true), c2, false), 1, 0),
                (base, 1, 1),
            ],
            Some(true) => vec![(set(set(base, c1, true), c2, true), 1, 0)],
            None => {
                let free = if c1 == dst.marked { c2 } else { c1 };
                vec![(set(base, free, true), 1, 0), (base, 1, 1)]
            }
        }
    }
}

/// Reduced complex of a knot diagram, simplified column by column.
pub fn build_reduced_complex(pd: &PDCode, opts: CubeOptions) -> Result<FreeComplex, TqftError> {
    let bp = opts.base_point.unwrap_or_else(|| pd.default_base_point());
    pd.check_base_point(bp)?;
    let d = Diagram::new(pd, bp);
    let n = pd.len();
    assert!(n < 64, "too many crossings for the cube");
    let (np, nm) = (pd.n_plus() as i64, pd.n_minus() as i64);
    let grading = |r: u32, s: &State, x: u64| {
        let xs = x.count_ones() as i64;
        let ones = s.unmarked as i64 - xs;
        Grading::new(r as i64 - nm, ones - xs + r as i64 + np - 2 * nm)
    };

    let mut red = Reducer::new();
    let mut prev: Vec<(u64, State, usize)> = Vec::new();
    for r in 0..=n as u32 {
        let verts: Vec<u64> = column(n, r);
        let states: Vec<(u64, State)> = verts.iter().map(|&v| (v, State::new(&d, v))).collect();
        let adding: usize = states.iter().map(|(_, s)| 1usize << s.unmarked).sum();
        if red.live() + adding > opts.cap {
            return Err(TqftError::CapExceeded { needed: red.live() + adding, cap: opts.cap });
        }
        let mut cur = Vec::with_capacity(states.len());
        let mut index: FxHashMap<u64, usize> = FxHashMap::default();
        for (v, s) in states {
            let start = red.allocated();
            for x in 0..1u64 << s.unmarked {
                red.add_generator(grading(r, &s, x));
            }
            index.insert(v, cur.len());
            cur.push((v, s, start));
        }
        for (v, s, start) in &prev {
            for x in 0..1u64 << s.unmarked {
                let g = start + x as usize;
                if !red.is_alive(g) {
                    continue;
                }
                for j in 0..n {
                    if v >> j & 1 == 1 {
                        continue;
                    }
                    let w = v | 1 << j;
                    let (_, ts, tstart) = &cur[index[&w]];
                    let sign = if (v & ((1 << j) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    for (y, c, k) in edge_terms(&d, s, ts, j, x) {
                        red.add_to_entry(g, tstart + y as usize, &GMonomial::new(sign * c, k));
                    }
                }
            }
        }
        if r > 0 {
            red.eliminate_degree(r as i64 - 1 - nm);
        }
        prev = cur;
    }
    red.eliminate_degree(n as i64 - nm);
    let (_, c) = red.finish();
    Ok(c)
}

/// Vertices of weight `r` in increasing order.
fn column(n: usize, r: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if r == 0 {
        return vec![0];
    }
    if r as usize > n {
        return out;
    }
    // Gosper's hack.
    let mut v: u64 = (1 << r) - 1;
    let limit = 1u64 << n;
    while v < limit {
        out.push(v);
        let c = v & v.wrapping_neg();
        let s = v + c;
        v = (((v ^ s) >> 2) / c) | s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tqft::pd::{parse_braid, parse_pd};

    #[test]
    fn resolutions() {
        let t = parse_braid("[1,1,1]").unwrap();
        assert_eq!(resolve(&t, &[false; 3], None).circles.len(), 2);
        assert_eq!(resolve(&t, &[true; 3], None).circles.len(), 3);
        let u = PDCode::unknot();
        let s = resolve(&u, &[], None);
        assert_eq!((s.circles.len(), s.marked), (1, 0));
    }

    #[test]
    fn unknots() {
        for pd in [PDCode::unknot(), parse_pd("[[0,0,1,1]]").unwrap(), parse_pd("[[0,1,1,0]]").unwrap()] {
            let c = build_reduced_complex(&pd, CubeOptions::default()).unwrap();
            assert_eq!(c.gens(), &[Grading::new(0, 0)], "{pd}");
        }
    }

    #[test]
    fn right_trefoil() {
        let t = parse_braid("[1,1,1]").unwrap();
        let c = build_reduced_complex(&t, CubeOptions::default()).unwrap();
        c.validate().unwrap();
        let mut gens = c.gens().to_vec();
        gens.sort();
        assert_eq!(gens, vec![Grading::new(0, 2), Grading::new(2, 6), Grading::new(3, 8)]);
        assert_eq!(c.entries().len(), 1);
        let m = c.entries().values().next().unwrap();
        assert_eq!(m.power(), 1);
        assert!(m.coeff() == &crate::zring::int(1) || m.coeff() == &crate::zring::int(-1));
    }

    #[test]
    fn cap_is_reported() {
        let t = parse_braid("[1,1,1]").unwrap();
        let err = build_reduced_complex(&t, CubeOptions { base_point: None, cap: 3 }).unwrap_err();
        assert!(matches!(err, TqftError::CapExceeded { .. }));
    }
}
