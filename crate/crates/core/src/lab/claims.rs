//! Checks of the concrete claims about the shift graph of triples under its
//! middle-element colouring, usable on any coloured graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::shift_graph_triples;
use crate::graph::{Colouring, Graph};

/// A vertex with `d + 1` neighbours whose colours are distinct from each
/// other and from the centre's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowStar {
    pub centre: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DegreeVerdict {
    Verified,
    Violation(RainbowStar),
}

/// Verifies that no rainbow subgraph has a vertex of degree above `d`, i.e.
/// no rainbow `K_{1,d+1}`. The first violating centre is reported, with the
/// lowest-numbered neighbour of each of its first `d + 1` new colours.
pub fn verify_rainbow_max_degree(g: &Graph, c: &Colouring, d: usize) -> Result<DegreeVerdict> {
    c.check_proper(g)?;
    for v in 0..g.n() {
        let mut colours = vec![c.colour(v)];
        let mut leaves = Vec::new();
        for u in g.neighbours(v).iter() {
            if !colours.contains(&c.colour(u)) {
                colours.push(c.colour(u));
                leaves.push(u);
                if leaves.len() == d + 1 {
                    return Ok(DegreeVerdict::Violation(RainbowStar { centre: v, leaves }));
                }
            }
        }
    }
    Ok(DegreeVerdict::Verified)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MonotoneVerdict {
    Verified,
    /// A 3-vertex path `[u, v, w]` with distinct but non-monotone colours.
    Counterexample { path: Vec<usize> },
}

/// Verifies that every 3-vertex path (not necessarily induced) with three
/// distinct colours has strictly monotone colours. Properness is not
/// required, so mutated colourings can be checked.
pub fn verify_monotone_rainbow_3paths_in(g: &Graph, c: &Colouring) -> Result<MonotoneVerdict> {
    c.check_graph(g)?;
    for v in 0..g.n() {
        let nv = g.neighbours(v);
        for u in nv.iter() {
            for w in nv.iter().filter(|&w| w > u) {
                let (a, b, x) = (c.colour(u), c.colour(v), c.colour(w));
                let rainbow = a != b && b != x && a != x;
                let monotone = (a < b && b < x) || (a > b && b > x);
                if rainbow && !monotone {
                    return Ok(MonotoneVerdict::Counterexample { path: vec![u, v, w] });
                }
            }
        }
    }
    Ok(MonotoneVerdict::Verified)
}

/// The monotone 3-path claim on the shift graph of triples of `[n]` with the
/// middle-element colouring.
pub fn verify_monotone_rainbow_3paths(n: u32) -> Result<MonotoneVerdict> {
    if n < 4 {
        return Err(Error::InvalidParameter("shift graph claim needs n >= 4".into()));
    }
    let sg = shift_graph_triples(n)?;
    verify_monotone_rainbow_3paths_in(&sg.graph, &sg.middle_element_colouring())
}
