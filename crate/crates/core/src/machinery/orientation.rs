//! Orientations of a graph, the colour orientation and longest directed paths.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};
use crate::paths::PathWitness;

/// Every edge of `base` directed exactly once.
#[derive(Debug, Clone)]
pub struct Orientation {
    base: Graph,
    out: Vec<BitSet>,
    /// Set when built by [`orient_by_colour`]; arcs then increase in colour.
    colouring: Option<Colouring>,
}

impl Orientation {
    /// Orientation from an explicit arc list. Each base edge must appear
    /// exactly once, in one direction.
    pub fn from_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![BitSet::new(); base.n()];
        for &(u, v) in arcs {
            if !base.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("arc {u}->{v} is not an edge")));
            }
            if out[u].contains(v) || out[v].contains(u) {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} directed twice")));
            }
            out[u].insert(v);
        }
        if arcs.len() != base.edge_count() {
            return Err(Error::InvalidParameter("some edge is not directed".into()));
        }
        Ok(Orientation {
            base: base.clone(),
            out,
            colouring: None,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn out_neighbours(&self, v: usize) -> BitSet {
        self.out[v]
    }

    /// Arcs `(u, v)` sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.base.n())
            .flat_map(|u| self.out[u].iter().map(move |v| (u, v)))
            .collect()
    }

    /// Kahn's algorithm, smallest available vertex first; `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.base.n();
        let mut indegree = vec![0usize; n];
        for u in 0..n {
            for v in self.out[u] {
                indegree[v] += 1;
            }
        }
        let mut ready: BitSet = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.first() {
            ready.remove(u);
            order.push(u);
            for v in self.out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

/// Directs every edge towards its endpoint of higher colour.
pub fn orient_by_colour(g: &Graph, c: &Colouring) -> Result<Orientation> {
    c.check_proper(g)?;
    let out = (0..g.n())
        .map(|u| g.neighbours(u).iter().filter(|&v| c.colour(u) < c.colour(v)).collect())
        .collect();
    Ok(Orientation {
        base: g.clone(),
        out,
        colouring: Some(c.clone()),
    })
}

/// A directed path with the most vertices, by dynamic programming over a
/// topological order. Ties go to the lowest-numbered start vertex, then to
/// the lowest-numbered successor.
///
/// For a colour orientation the colours strictly increase along the path, so
/// it is rainbow; it need not be induced.
pub fn longest_directed_path(o: &Orientation) -> Result<PathWitness> {
    let order = o.topological_order().ok_or(Error::CyclicOrientation)?;
    let n = order.len();
    // best[v]: vertices on a longest path starting at v; next[v]: its successor.
    let mut best = vec![1usize; n];
    let mut next = vec![usize::MAX; n];
    for &u in order.iter().rev() {
        for v in o.out[u] {
            if best[v] + 1 > best[u] {
                best[u] = best[v] + 1;
                next[u] = v;
            }
        }
    }
    let mut vertices = Vec::new();
    if let Some(&start) = order.iter().max_by(|&&a, &&b| best[a].cmp(&best[b]).then(b.cmp(&a))) {
        let mut v = start;
        while v != usize::MAX {
            vertices.push(v);
            v = next[v];
        }
    }
    Ok(PathWitness {
        vertices,
        induced: false,
        rainbow: o.colouring.is_some(),
    })
}
