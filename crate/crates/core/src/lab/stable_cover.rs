//! Induced paths with private sets from a cover by independent sets, the
//! generalisation of rainbowness to overlapping colour classes.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::PathWitness;

/// Independent sets, not necessarily disjoint, whose union is `V(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCover {
    sets: Vec<BitSet>,
}

impl StableCover {
    pub fn new(g: &Graph, sets: Vec<BitSet>) -> Result<Self> {
        let mut union = BitSet::new();
        for (i, x) in sets.iter().enumerate() {
            g.check_set(x)?;
            if !g.is_independent(x) {
                return Err(Error::InvalidCover(format!("set {i} is not independent")));
            }
            union = union.union(x);
        }
        if union != g.vertices() {
            return Err(Error::InvalidCover("sets do not cover every vertex".into()));
        }
        Ok(StableCover { sets })
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverPath {
    pub path: PathWitness,
    /// `private[i]` indexes a cover set meeting the path only in vertex `i`.
    pub private: Vec<usize>,
}

impl CoverPath {
    pub fn validate(&self, g: &Graph, cover: &StableCover) -> Result<()> {
        self.path.validate(g, None)?;
        let set = self.path.vertex_set();
        if self.private.len() != self.path.len() {
            return Err(Error::InvalidWitness("one private set per path vertex is required".into()));
        }
        for (&v, &i) in self.path.vertices.iter().zip(&self.private) {
            let x = cover.sets().get(i).ok_or_else(|| Error::InvalidWitness(format!("no cover set {i}")))?;
            if x.intersection(&set) != BitSet::singleton(v) {
                return Err(Error::InvalidWitness(format!("cover set {i} is not private to vertex {v}")));
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    g: &'a Graph,
    sets: &'a [BitSet],
    /// Cover sets containing each vertex.
    holders: Vec<Vec<usize>>,
    s: usize,
}

impl Search<'_> {
    fn has_private(&self, v: usize, set: &BitSet) -> bool {
        self.holders[v].iter().any(|&i| self.sets[i].intersection(set).len() == 1)
    }

    fn extend(&self, path: &mut Vec<usize>, set: BitSet, budget: &mut Budget) -> Result<bool> {
        if path.len() == self.s {
            return Ok(true);
        }
        let end = *path.last().unwrap();
        for x in self.g.neighbours(end).difference(&set).iter() {
            if self.g.neighbours(x).intersection(&set) != BitSet::singleton(end) {
                continue;
            }
            let next = set.with(x);
            // A set meeting the path in two vertices stays non-private as the path grows.
            if !next.iter().all(|v| self.has_private(v, &next)) {
                continue;
            }
            budget.tick()?;
            path.push(x);
            if self.extend(path, next, budget)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

/// First induced path on `s` vertices in which every vertex has a cover set
/// meeting the path only in that vertex. The lowest-indexed such set is named.
pub fn search_stable_cover_path(g: &Graph, cover: &StableCover, s: usize, budget: &mut Budget) -> Result<Option<CoverPath>> {
    if s < 1 {
        return Err(Error::InvalidParameter("path length s must be at least 1".into()));
    }
    let sets = cover.sets();
    let mut holders = vec![Vec::new(); g.n()];
    for (i, x) in sets.iter().enumerate() {
        g.check_set(x)?;
        for v in x.iter() {
            holders[v].push(i);
        }
    }
    let search = Search { g, sets, holders, s };
    let mut path = Vec::with_capacity(s);
    for v in 0..g.n() {
        budget.tick()?;
        path.push(v);
        if search.extend(&mut path, BitSet::singleton(v), budget)? {
            let set: BitSet = path.iter().collect();
            let private = path
                .iter()
                .map(|&v| *search.holders[v].iter().find(|&&i| sets[i].intersection(&set).len() == 1).unwrap())
                .collect();
            let out = CoverPath {
                path: PathWitness {
                    vertices: path,
                    induced: true,
                    rainbow: false,
                },
                private,
            };
            out.validate(g, cover)?;
            return Ok(Some(out));
        }
        path.pop();
    }
    Ok(None)
}
