//! Exact chromatic number, clique number and girth for small graphs.
//!
//! Both colouring and clique search are branch-and-bound over bitsets. They
//! are exact and exponential in the worst case; a [`Budget`] bounds the
//! number of search nodes.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{ColourPartition, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    /// A maximum clique.
    #[serde(serialize_with = "serialize_set")]
    pub clique: BitSet,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.clique.len()
    }
}

#[derive(Debug, Clone)]
pub struct ChromaticResult {
    pub chi: usize,
    /// An optimal colouring as a partition into `chi` independent sets.
    pub partition: ColourPartition,
}

pub(crate) fn serialize_set<S: serde::Serializer>(set: &BitSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

/// Maximum clique without a node limit.
pub fn clique_number(g: &Graph) -> CliqueResult {
    clique_number_with_budget(g, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn clique_number_with_budget(g: &Graph, budget: &mut Budget) -> Result<CliqueResult> {
    let mut best = BitSet::new();
    expand_clique(g, BitSet::new(), g.vertices(), &mut best, budget)?;
    Ok(CliqueResult { clique: best })
}

/// Greedy sequential colouring of `p`: vertices in colouring order with the
/// number of colours used up to and including each one.
fn colour_sort(g: &Graph, p: BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncoloured = p;
    let mut k = 0;
    while !uncoloured.is_empty() {
        k += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.difference(&g.neighbours(v));
            uncoloured.remove(v);
            order.push(v);
            bounds.push(k);
        }
    }
    (order, bounds)
}

fn expand_clique(
    g: &Graph,
    current: BitSet,
    mut candidates: BitSet,
    best: &mut BitSet,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return Ok(());
    }
    let (order, bounds) = colour_sort(g, candidates);
    let size = current.len();
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= best.len() {
            return Ok(());
        }
        let v = order[idx];
        let next = candidates.intersection(&g.neighbours(v));
        expand_clique(g, current.with(v), next, best, budget)?;
        candidates.remove(v);
    }
    Ok(())
}

/// Exact chromatic number without a node limit.
pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    chromatic_number_with_budget(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Exact chromatic number by DSATUR branch-and-bound, seeded with a maximum
/// clique (lower bound) and a greedy DSATUR colouring (upper bound).
pub fn chromatic_number_with_budget(g: &Graph, budget: &mut Budget) -> Result<ChromaticResult> {
    let n = g.n();
    if n == 0 {
        let partition = ColourPartition::new(g, Vec::new())?;
        return Ok(ChromaticResult { chi: 0, partition });
    }
    let clique = clique_number_with_budget(g, budget)?.clique;
    let lower = clique.len();

    let mut search = Dsatur {
        g,
        classes: Vec::new(),
        uncoloured: g.vertices(),
        best: Vec::new(),
        best_count: usize::MAX,
        lower,
    };
    // Greedy pass fixes the initial upper bound.
    search.greedy();
    if search.best_count > lower {
        search.classes.clear();
        search.uncoloured = g.vertices();
        for v in clique.iter() {
            search.classes.push(BitSet::singleton(v));
            search.uncoloured.remove(v);
        }
        search.branch(budget)?;
    }
    let chi = search.best_count;
    let partition = ColourPartition::new(g, search.best)?;
    debug_assert_eq!(partition.num_blocks(), chi);
    Ok(ChromaticResult { chi, partition })
}

struct Dsatur<'a> {
    g: &'a Graph,
    classes: Vec<BitSet>,
    uncoloured: BitSet,
    best: Vec<BitSet>,
    best_count: usize,
    lower: usize,
}

impl Dsatur<'_> {
    /// Uncoloured vertex of maximum saturation, then maximum uncoloured
    /// degree, then lowest index.
    fn select(&self) -> usize {
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in self.uncoloured.iter() {
            let nb = self.g.neighbours(v);
            let sat = self.classes.iter().filter(|c| c.intersects(&nb)).count();
            let deg = nb.intersection(&self.uncoloured).len();
            if pick == usize::MAX || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        pick
    }

    fn greedy(&mut self) {
        while !self.uncoloured.is_empty() {
            let v = self.select();
            let nb = self.g.neighbours(v);
            match self.classes.iter().position(|c| !c.intersects(&nb)) {
                Some(k) => self.classes[k].insert(v),
                None => self.classes.push(BitSet::singleton(v)),
            }
            self.uncoloured.remove(v);
        }
        self.best_count = self.classes.len();
        self.best = self.classes.clone();
    }

    fn branch(&mut self, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        if self.uncoloured.is_empty() {
            if self.classes.len() < self.best_count {
                self.best_count = self.classes.len();
                self.best = self.classes.clone();
            }
            return Ok(());
        }
        let v = self.select();
        let nb = self.g.neighbours(v);
        self.uncoloured.remove(v);
        for k in 0..self.classes.len() {
            if self.best_count <= self.lower {
                break;
            }
            if !self.classes[k].intersects(&nb) {
                self.classes[k].insert(v);
                self.branch(budget)?;
                self.classes[k].remove(v);
            }
        }
        if self.classes.len() + 1 < self.best_count && self.best_count > self.lower {
            self.classes.push(BitSet::singleton(v));
            self.branch(budget)?;
            self.classes.pop();
        }
        self.uncoloured.insert(v);
        Ok(())
    }
}

/// Length of a shortest cycle, or `None` for a forest. BFS from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
