//! Endpoint sets of rainbow induced paths: `A(z)`, the one-step candidates
//! `V` of a path `Q`, and the extension endpoints `B(Q)`.

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};
use crate::paths::PathWitness;

/// Rainbow induced path walker shared by the set computations.
struct Walker<'a> {
    g: &'a Graph,
    ranks: Vec<usize>,
}

impl Walker<'_> {
    /// Visits every rainbow induced path extending `path` at its last vertex,
    /// adding each proper extension's far end to `ends`.
    fn collect(&self, path_set: BitSet, end: usize, used: BitSet, ends: &mut BitSet, budget: &mut Budget) -> Result<()> {
        let end_set = BitSet::singleton(end);
        for x in self.g.neighbours(end).difference(&path_set).iter() {
            if self.g.neighbours(x).intersection(&path_set) != end_set || used.contains(self.ranks[x]) {
                continue;
            }
            budget.tick()?;
            ends.insert(x);
            self.collect(path_set.with(x), x, used.with(self.ranks[x]), ends, budget)?;
        }
        Ok(())
    }
}

fn check_rainbow_induced(g: &Graph, c: &Colouring, q: &[usize]) -> Result<()> {
    if q.is_empty() {
        return Err(Error::InvalidWitness("path must have at least one vertex".into()));
    }
    PathWitness {
        vertices: q.to_vec(),
        induced: true,
        rainbow: true,
    }
    .validate(g, Some(c))
}

/// `A(z)`: every `v` joined to `z` by a rainbow induced path. Contains `z`
/// through the one-vertex path. Budget exhaustion is an error; partial sets
/// are never returned.
pub fn compute_a_set(g: &Graph, c: &Colouring, z: usize, budget: &mut Budget) -> Result<BitSet> {
    c.check_proper(g)?;
    g.check_vertex(z)?;
    let walker = Walker { g, ranks: c.ranks() };
    let mut ends = BitSet::singleton(z);
    walker.collect(BitSet::singleton(z), z, BitSet::singleton(walker.ranks[z]), &mut ends, budget)?;
    Ok(ends)
}

/// The vertices adjacent to the last vertex `y` of `q`, adjacent to no other
/// vertex of `q`, and coloured differently from every vertex of `q`.
pub fn extension_candidates(g: &Graph, c: &Colouring, q: &[usize]) -> Result<BitSet> {
    c.check_proper(g)?;
    check_rainbow_induced(g, c, q)?;
    let y = *q.last().unwrap();
    let q_set: BitSet = q.iter().collect();
    let rest = q_set.without(y);
    let colours: Vec<u32> = q.iter().map(|&v| c.colour(v)).collect();
    let out: BitSet = g
        .neighbours(y)
        .difference(&q_set)
        .iter()
        .filter(|&v| !g.neighbours(v).intersects(&rest) && !colours.contains(&c.colour(v)))
        .collect();
    if cfg!(debug_assertions) {
        for v in out.iter() {
            let mut ext = q.to_vec();
            ext.push(v);
            debug_assert!(check_rainbow_induced(g, c, &ext).is_ok());
        }
    }
    Ok(out)
}

/// `B(Q)`: far ends of every rainbow induced path that starts with `q` (at
/// `q`'s first vertex) and is strictly longer than `q`.
pub fn compute_b_set(g: &Graph, c: &Colouring, q: &[usize], budget: &mut Budget) -> Result<BitSet> {
    c.check_proper(g)?;
    check_rainbow_induced(g, c, q)?;
    let walker = Walker { g, ranks: c.ranks() };
    let q_set: BitSet = q.iter().collect();
    let used: BitSet = q.iter().map(|&v| walker.ranks[v]).collect();
    let mut ends = BitSet::new();
    walker.collect(q_set, *q.last().unwrap(), used, &mut ends, budget)?;
    Ok(ends)
}
