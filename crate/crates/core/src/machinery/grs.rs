//! The long-induced-path / `K_{s,s}` dichotomy, as an exhaustive search.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{is_rainbow, Colouring, Graph};
use crate::paths::{InducedPathSearch, PathWitness};

/// Two disjoint `s`-sets with every cross pair adjacent: a `K_{s,s}` subgraph
/// (not necessarily induced).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicliqueWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub rainbow: bool,
}

impl BicliqueWitness {
    pub fn vertex_set(&self) -> BitSet {
        self.left.iter().chain(&self.right).collect()
    }

    pub fn validate(&self, g: &Graph, c: Option<&Colouring>) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWitness(m));
        let left: BitSet = self.left.iter().collect();
        let right: BitSet = self.right.iter().collect();
        g.check_set(&left)?;
        g.check_set(&right)?;
        if left.len() != self.left.len() || right.len() != self.right.len() || self.left.len() != self.right.len() {
            return bad(format!("biclique sides {:?} / {:?} malformed", self.left, self.right));
        }
        if left.intersects(&right) {
            return bad("biclique sides overlap".into());
        }
        for &u in &self.left {
            if !right.is_subset(&g.neighbours(u)) {
                return bad(format!("biclique vertex {u} misses part of the other side"));
            }
        }
        if self.rainbow {
            let Some(c) = c else {
                return bad("rainbow claim needs a colouring".into());
            };
            if !is_rainbow(c, &self.vertex_set())? {
                return bad("biclique repeats a colour".into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GrsOutcome {
    /// An induced path with exactly `s` vertices (so at least `s`).
    InducedPath(PathWitness),
    Biclique(BicliqueWitness),
    /// Exhaustive search found neither.
    Neither,
}

/// Searches `g` for an induced path on `s` vertices and, failing that, for a
/// `K_{s,s}` subgraph.
///
/// The side-`A` search grows `s`-sets in increasing vertex order and keeps the
/// common neighbourhood as a bitset, pruning as soon as fewer than `s`
/// candidates remain for side `B`.
pub fn grs_dichotomy(g: &Graph, s: usize, budget: &mut Budget) -> Result<GrsOutcome> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    if let Some(vertices) = InducedPathSearch::new(g, None, s).first(budget)? {
        return Ok(GrsOutcome::InducedPath(PathWitness {
            vertices,
            induced: true,
            rainbow: false,
        }));
    }
    match find_biclique(g, s, budget)? {
        Some(w) => Ok(GrsOutcome::Biclique(w)),
        None => Ok(GrsOutcome::Neither),
    }
}

/// First `K_{s,s}` subgraph in the order described on [`grs_dichotomy`].
pub fn find_biclique(g: &Graph, s: usize, budget: &mut Budget) -> Result<Option<BicliqueWitness>> {
    fn grow(
        g: &Graph,
        s: usize,
        side: &mut Vec<usize>,
        common: BitSet,
        from: usize,
        budget: &mut Budget,
    ) -> Result<Option<BicliqueWitness>> {
        if side.len() == s {
            let right: Vec<usize> = common.iter().take(s).collect();
            return Ok(Some(BicliqueWitness {
                left: side.clone(),
                right,
                rainbow: false,
            }));
        }
        for v in from..g.n() {
            // `v` may not lie in the common neighbourhood it helps define.
            let next = common.intersection(&g.neighbours(v)).without(v);
            if next.len() < s {
                continue;
            }
            budget.tick()?;
            side.push(v);
            if let Some(w) = grow(g, s, side, next, v + 1, budget)? {
                return Ok(Some(w));
            }
            side.pop();
        }
        Ok(None)
    }
    if 2 * s > g.n() {
        return Ok(None);
    }
    grow(g, s, &mut Vec::with_capacity(s), g.vertices(), 0, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, path};

    #[test]
    fn dichotomy_examples() {
        let k6 = complete(6).unwrap();
        match grs_dichotomy(&k6, 3, &mut Budget::unlimited()).unwrap() {
            GrsOutcome::Biclique(w) => {
                w.validate(&k6, None).unwrap();
                assert_eq!((w.left, w.right), (vec![0, 1, 2], vec![3, 4, 5]));
            }
            other => panic!("expected biclique, got {other:?}"),
        }
        let p10 = path(10).unwrap();
        match grs_dichotomy(&p10, 3, &mut Budget::unlimited()).unwrap() {
            GrsOutcome::InducedPath(p) => {
                assert!(p.len() >= 3);
                p.validate(&p10, None).unwrap();
            }
            other => panic!("expected induced path, got {other:?}"),
        }
        assert_eq!(grs_dichotomy(&complete(5).unwrap(), 3, &mut Budget::unlimited()).unwrap(), GrsOutcome::Neither);
        assert!(grs_dichotomy(&p10, 0, &mut Budget::unlimited()).is_err());
        assert!(matches!(
            find_biclique(&complete_bipartite(3, 3).unwrap(), 3, &mut Budget::unlimited()),
            Ok(Some(_))
        ));
    }

    #[test]
    fn biclique_validation() {
        let g = complete_bipartite(2, 2).unwrap();
        let good = BicliqueWitness { left: vec![0, 1], right: vec![2, 3], rainbow: false };
        good.validate(&g, None).unwrap();
        let bad = BicliqueWitness { left: vec![0, 2], right: vec![1, 3], rainbow: false };
        assert!(bad.validate(&g, None).is_err());
        let c = Colouring::new(vec![1, 1, 2, 3]).unwrap();
        let rb = BicliqueWitness { rainbow: true, ..good };
        assert!(rb.validate(&g, Some(&c)).is_err());
    }
}
