//! Simple undirected graphs over `0..n`, colourings and colour partitions.

use serde::Serialize;

use crate::bitset::{BitSet, CAPACITY};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`, stored as
/// neighbour bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > CAPACITY {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![BitSet::new(); n],
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. `(u, v)` and `(v, u)` count as the same edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour sets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<BitSet>) -> Result<Self> {
        let n = adj.len();
        if n > CAPACITY {
            return Err(Error::TooManyVertices(n));
        }
        let all = BitSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            if let Some(u) = row.difference(&all).first() {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            for u in row {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> BitSet {
        BitSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// FNV-1a hash of the canonical edge list, as `fnv1a64:<hex>`. Identifies
    /// inputs in reports and checkpoints; not collision resistant.
    pub fn digest(&self) -> String {
        let words = self.edges().into_iter().flat_map(|(u, v)| [u as u64, v as u64]);
        fnv_digest(std::iter::once(self.n() as u64).chain(words))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> BitSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, xs: &BitSet) -> Result<()> {
        match xs.difference(&self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    pub fn is_independent(&self, xs: &BitSet) -> bool {
        xs.iter().all(|v| !self.adj[v].intersects(xs))
    }

    pub fn is_clique(&self, xs: &BitSet) -> bool {
        xs.iter().all(|v| xs.without(v).is_subset(&self.adj[v]))
    }

    /// `G[xs]`, with the map from new vertex indices to the original ones.
    /// New indices follow the increasing order of `xs`.
    pub fn induced_subgraph(&self, xs: &BitSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(xs)?;
        let map = xs.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(xs)
                    .iter()
                    .map(|u| position[u])
                    .collect::<BitSet>()
            })
            .collect();
        Ok((Graph { adj }, map))
    }

    /// The graph with vertex `order[i]` renamed to `i`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph> {
        if order.len() != self.n() || order.iter().collect::<BitSet>() != self.vertices() {
            return Err(Error::InvalidParameter(
                "relabelling must be a permutation of the vertices".into(),
            ));
        }
        let mut position = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].iter().map(|u| position[u]).collect())
            .collect();
        Ok(Graph { adj })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Assignment of a positive integer colour to every vertex.
///
/// A colouring is not tied to a graph; properness is checked with [`is_proper`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Colouring {
    colours: Vec<u32>,
}

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Result<Self> {
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(Error::NonPositiveColour(v));
        }
        Ok(Colouring { colours })
    }

    /// Builds a proper colouring from a partition: block `i` gets colour `i + 1`.
    pub fn from_partition(p: &ColourPartition) -> Self {
        let mut colours = vec![0; p.n()];
        for (i, block) in p.blocks().iter().enumerate() {
            for v in block {
                colours[v] = i as u32 + 1;
            }
        }
        Colouring { colours }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    #[inline]
    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    /// FNV-1a hash of the colour sequence, as `fnv1a64:<hex>`.
    pub fn digest(&self) -> String {
        fnv_digest(self.colours.iter().map(|&c| u64::from(c)))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colours
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::SizeMismatch {
                graph: g.n(),
                colouring: self.len(),
            });
        }
        Ok(())
    }

    /// Checks size and properness against `g`, naming the first bad edge.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        self.check_graph(g)?;
        match g.edges().into_iter().find(|&(u, v)| self.colours[u] == self.colours[v]) {
            Some((u, v)) => Err(Error::ImproperColouring(u, v)),
            None => Ok(()),
        }
    }

    /// Colours renumbered to `0..k` preserving order, so colour sets fit in a [`BitSet`].
    pub(crate) fn ranks(&self) -> Vec<usize> {
        let mut distinct = self.colours.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.colours
            .iter()
            .map(|c| distinct.binary_search(c).unwrap())
            .collect()
    }

    pub fn colour_classes(&self) -> Vec<BitSet> {
        let ranks = self.ranks();
        let k = ranks.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![BitSet::new(); k];
        for (v, &r) in ranks.iter().enumerate() {
            classes[r].insert(v);
        }
        classes
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    match c.check_proper(g) {
        Ok(()) => Ok(true),
        Err(Error::ImproperColouring(..)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// True iff the colours on `xs` are pairwise distinct.
pub fn is_rainbow(c: &Colouring, xs: &BitSet) -> Result<bool> {
    if let Some(v) = xs.iter().find(|&v| v >= c.len()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.len() });
    }
    let mut seen: Vec<u32> = xs.iter().map(|v| c.colour(v)).collect();
    seen.sort_unstable();
    Ok(seen.windows(2).all(|w| w[0] != w[1]))
}

fn fnv_digest(words: impl Iterator<Item = u64>) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for x in words {
        for b in x.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("fnv1a64:{h:016x}")
}

/// A partition of the vertex set into independent sets: a proper colouring
/// up to renaming of colours. Blocks are ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColourPartition {
    n: usize,
    blocks: Vec<BitSet>,
}

impl ColourPartition {
    /// Validates that `blocks` are non-empty, disjoint, independent in `g`
    /// and cover `V(g)`, then stores them in canonical order.
    pub fn new(g: &Graph, mut blocks: Vec<BitSet>) -> Result<Self> {
        let mut seen = BitSet::new();
        for b in &blocks {
            g.check_set(b)?;
            if b.is_empty() {
                return Err(Error::InvalidParameter("empty colour class".into()));
            }
            if b.intersects(&seen) {
                return Err(Error::InvalidParameter("colour classes overlap".into()));
            }
            if !g.is_independent(b) {
                return Err(Error::InvalidParameter("colour class is not independent".into()));
            }
            seen = seen.union(b);
        }
        if seen != g.vertices() {
            return Err(Error::InvalidParameter("colour classes do not cover the graph".into()));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(ColourPartition { n: g.n(), blocks })
    }

    /// From a restricted-growth string: `rgs[v]` is the block of vertex `v`.
    pub fn from_rgs(g: &Graph, rgs: &[usize]) -> Result<Self> {
        if rgs.len() != g.n() {
            return Err(Error::SizeMismatch {
                graph: g.n(),
                colouring: rgs.len(),
            });
        }
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![BitSet::new(); k];
        for (v, &b) in rgs.iter().enumerate() {
            blocks[b].insert(v);
        }
        ColourPartition::new(g, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[BitSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The canonical restricted-growth string of this partition.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b {
                out[v] = i;
            }
        }
        out
    }

    pub fn to_colouring(&self) -> Colouring {
        Colouring::from_partition(self)
    }
}

impl Serialize for ColourPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rgs: Vec<usize>,
            blocks: Vec<Vec<usize>>,
        }
        Repr {
            rgs: self.rgs(),
            blocks: self.blocks.iter().map(BitSet::to_vec).collect(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen, shift_graph_triples};

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(Graph::empty(CAPACITY + 1).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p3, map) = cycle(5).unwrap().induced_subgraph(&[0, 1, 2].iter().collect()).unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);

        let (e, map) = complete(4).unwrap().induced_subgraph(&BitSet::new()).unwrap();
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());

        let bad = complete(4).unwrap().induced_subgraph(&BitSet::singleton(4));
        assert_eq!(bad.unwrap_err(), Error::VertexOutOfRange { vertex: 4, n: 4 });
    }

    #[test]
    fn petersen_outer_cycle_is_c5() {
        let g = petersen();
        let (h, _) = g.induced_subgraph(&(0..5).collect()).unwrap();
        // Oracle: each vertex has exactly two neighbours and the 5 edges form one cycle.
        assert_eq!(h.edge_count(), 5);
        assert!((0..5).all(|v| h.degree(v) == 2));
        let mut seen = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        loop {
            let next = h.neighbours(cur).iter().find(|&u| u != prev).unwrap();
            if next == 0 {
                break;
            }
            seen.push(next);
            prev = cur;
            cur = next;
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn properness_examples() {
        let c3 = cycle(3).unwrap();
        assert!(is_proper(&c3, &Colouring::new(vec![1, 2, 3]).unwrap()).unwrap());
        assert!(!is_proper(&c3, &Colouring::new(vec![1, 1, 2]).unwrap()).unwrap());
        assert!(matches!(
            is_proper(&c3, &Colouring::new(vec![1, 2]).unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
        assert_eq!(Colouring::new(vec![1, 0]), Err(Error::NonPositiveColour(1)));

        let crate::generators::ShiftGraph { graph: g, triples } = shift_graph_triples(6).unwrap();
        let c = Colouring::new(triples.iter().map(|t| t.b).collect()).unwrap();
        // Enumeration oracle: every edge joins {a,b,c} and {b,c,d}, whose middles differ.
        for (u, v) in g.edges() {
            assert_ne!(c.colour(u), c.colour(v));
        }
        assert!(is_proper(&g, &c).unwrap());
    }

    #[test]
    fn rainbow_examples() {
        let set: BitSet = [0, 1, 2].iter().collect();
        assert!(is_rainbow(&Colouring::new(vec![1, 2, 3]).unwrap(), &set).unwrap());
        assert!(!is_rainbow(&Colouring::new(vec![1, 2, 1]).unwrap(), &set).unwrap());
        assert!(is_rainbow(&Colouring::new(vec![1, 1, 1]).unwrap(), &BitSet::singleton(2)).unwrap());
        assert!(is_rainbow(&Colouring::new(vec![1]).unwrap(), &BitSet::singleton(3)).is_err());
    }

    #[test]
    fn partition_round_trip() {
        let g = cycle(5).unwrap();
        let p = ColourPartition::from_rgs(&g, &[0, 1, 0, 1, 2]).unwrap();
        assert_eq!(p.rgs(), vec![0, 1, 0, 1, 2]);
        assert!(is_proper(&g, &p.to_colouring()).unwrap());
        assert!(ColourPartition::from_rgs(&g, &[0, 0, 1, 0, 1]).is_err());
    }

    #[test]
    fn relabel_preserves_edges() {
        let g = petersen();
        let order: Vec<usize> = (0..10).rev().collect();
        let h = g.relabel(&order).unwrap();
        assert_eq!(h.edge_count(), 15);
        for (u, v) in g.edges() {
            assert!(h.has_edge(9 - u, 9 - v));
        }
    }
}
