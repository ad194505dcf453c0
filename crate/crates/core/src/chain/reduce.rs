use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use rustc_hash::FxHashMap;

use super::complex::{FreeComplex, Grading};
use crate::zring::GMonomial;

/// Mutable sparse complex supporting Gaussian elimination of unit entries.
///
/// Eliminating `b -> c` with `b` in degree `i` only rewrites the map from
/// degree `i` to `i + 1`, so one ascending sweep over degrees removes every
/// unit entry.
#[derive(Default)]
pub struct Reducer {
    gens: Vec<Grading>,
    alive: Vec<bool>,
    out: Vec<FxHashMap<usize, GMonomial>>,
    inn: Vec<FxHashMap<usize, GMonomial>>,
    by_degree: BTreeMap<i64, Vec<usize>>,
    live: usize,
}

impl Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_complex(c: &FreeComplex) -> Self {
        let mut r = Reducer::new();
        for &g in c.gens() {
            r.add_generator(g);
        }
        for (&(s, t), m) in c.entries() {
            r.set_entry(s, t, m.clone());
        }
        r
    }

    pub fn live(&self) -> usize {
        self.live
    }

    /// Generators ever added, dead or alive.
    pub fn allocated(&self) -> usize {
        self.gens.len()
    }

    pub fn is_alive(&self, g: usize) -> bool {
        self.alive[g]
    }

    pub fn add_generator(&mut self, g: Grading) -> usize {
        let n = self.gens.len();
        self.gens.push(g);
        self.alive.push(true);
        self.out.push(FxHashMap::default());
        self.inn.push(FxHashMap::default());
        self.by_degree.entry(g.i).or_default().push(n);
        self.live += 1;
        n
    }

    pub fn set_entry(&mut self, s: usize, t: usize, m: GMonomial) {
        if m.is_zero() {
            self.out[s].remove(&t);
            self.inn[t].remove(&s);
        } else {
            self.out[s].insert(t, m.clone());
            self.inn[t].insert(s, m);
        }
    }

    pub fn add_to_entry(&mut self, s: usize, t: usize, m: &GMonomial) {
        let cur = self.out[s].get(&t).cloned().unwrap_or_else(GMonomial::zero);
        self.set_entry(s, t, cur.add_same_power(m));
    }

    fn kill(&mut self, g: usize) {
        for t in std::mem::take(&mut self.out[g]).into_keys() {
            self.inn[t].remove(&g);
        }
        for s in std::mem::take(&mut self.inn[g]).into_keys() {
            self.out[s].remove(&g);
        }
        self.alive[g] = false;
        self.live -= 1;
    }

    /// Eliminates unit entries from degree `i` to `i + 1` until none remain.
    /// Returns the number of pairs removed.
    pub fn eliminate_degree(&mut self, i: i64) -> usize {
        let Some(list) = self.by_degree.get(&i) else { return 0 };
        let mut heap = BinaryHeap::new();
        for &b in list {
            if !self.alive[b] {
                continue;
            }
            for (&c, m) in &self.out[b] {
                if m.is_unit() {
                    heap.push(Reverse((self.gens[b].q, b, c)));
                }
            }
        }
        let mut removed = 0;
        while let Some(Reverse((_, b, c))) = heap.pop() {
            if !self.alive[b] || !self.alive[c] {
                continue;
            }
            let e = match self.out[b].get(&c) {
                Some(e) if e.is_unit() => e.clone(),
                _ => continue,
            };
            let xs: Vec<(usize, GMonomial)> =
                self.inn[c].iter().filter(|(&x, _)| x != b).map(|(&x, m)| (x, m.clone())).collect();
            let ys: Vec<(usize, GMonomial)> =
                self.out[b].iter().filter(|(&y, _)| y != c).map(|(&y, m)| (y, m.clone())).collect();
            // D(x -> y) -= D(x -> c) e^-1 D(b -> y), and e^-1 = e for units.
            for (x, xc) in &xs {
                let f = -xc.mul(&e);
                for (y, by) in &ys {
                    self.add_to_entry(*x, *y, &f.mul(by));
                    if self.out[*x].get(y).is_some_and(|m| m.is_unit()) {
                        heap.push(Reverse((self.gens[*x].q, *x, *y)));
                    }
                }
            }
            self.kill(b);
            self.kill(c);
            removed += 1;
        }
        if let Some(list) = self.by_degree.get_mut(&i) {
            let alive = &self.alive;
            list.retain(|&g| alive[g]);
        }
        removed
    }

    /// Live generators in index order and the complex they span.
    pub fn finish(&self) -> (Vec<usize>, FreeComplex) {
        let keep: Vec<usize> = (0..self.gens.len()).filter(|&g| self.alive[g]).collect();
        let mut idx = FxHashMap::default();
        for (n, &g) in keep.iter().enumerate() {
            idx.insert(g, n);
        }
        let mut c = FreeComplex::new(keep.iter().map(|&g| self.gens[g]).collect());
        for &g in &keep {
            for (t, m) in &self.out[g] {
                c.set(idx[&g], idx[t], m.clone());
            }
        }
        (keep, c)
    }
}

/// Removes unit entries, lowest homological degree first, then lowest quantum degree.
pub fn gaussian_eliminate(c: &FreeComplex) -> FreeComplex {
    let mut r = Reducer::from_complex(c);
    for i in c.hom_degrees() {
        r.eliminate_degree(i);
    }
    r.finish().1
}
