//! Graph families: Mycielski iterates, shift graphs of triples, and the
//! standard small graphs used as test fodder.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::{BitSet, CAPACITY};
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};

/// Mycielskian of `g`: originals `0..n`, shadows `n..2n` (shadow of `i` is
/// `n + i`, adjacent to `N(i)`), and the apex `2n` adjacent to every shadow.
pub fn mycielski(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges = g.edges();
    for i in 0..n {
        for j in g.neighbours(i) {
            edges.push((n + i, j));
        }
        edges.push((n + i, 2 * n));
    }
    Graph::from_edges(2 * n + 1, &edges)
}

/// `mycielski` applied `times` times.
pub fn mycielski_iterate(g: &Graph, times: usize) -> Result<Graph> {
    let mut out = g.clone();
    for _ in 0..times {
        out = mycielski(&out)?;
    }
    Ok(out)
}

/// The 11-vertex Grötzsch graph, `mycielski(C5)`.
pub fn grotzsch() -> Graph {
    mycielski(&cycle(5).unwrap()).unwrap()
}

/// A 3-subset `{a < b < c}` of `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TripleVertex {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl std::fmt::Display for TripleVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{},{}}}", self.a, self.b, self.c)
    }
}

impl TripleVertex {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || !(a < b && b < c) {
            return Err(Error::InvalidParameter(format!(
                "triple ({a}, {b}, {c}) is not strictly increasing in 1..n"
            )));
        }
        Ok(TripleVertex { a, b, c })
    }

    pub fn middle(&self) -> u32 {
        self.b
    }

    /// `{a,b,c} ~ {b,c,d}`: the lower pair of one is the upper pair of the other.
    pub fn shifts_to(&self, other: &TripleVertex) -> bool {
        self.b == other.a && self.c == other.b
    }
}

/// Shift graph of triples with its vertex labelling.
#[derive(Debug, Clone)]
pub struct ShiftGraph {
    pub graph: Graph,
    /// `triples[v]` is the triple at vertex `v`, in lexicographic order.
    pub triples: Vec<TripleVertex>,
}

impl ShiftGraph {
    /// Colour each triple by its middle element. Always proper.
    pub fn middle_element_colouring(&self) -> Colouring {
        let c = middle_element_colouring(&self.triples);
        debug_assert!(c.check_proper(&self.graph).is_ok());
        c
    }
}

/// Colour `{a,b,c}` with `b`.
pub fn middle_element_colouring(triples: &[TripleVertex]) -> Colouring {
    Colouring::new(triples.iter().map(TripleVertex::middle).collect())
        .expect("triple elements are positive")
}

/// The shift graph on `[n]^(3)`: `{a,b,c} ~ {b,c,d}` for `a < b < c < d`.
pub fn shift_graph_triples(n: u32) -> Result<ShiftGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("shift graph needs n >= 3, got {n}")));
    }
    let mut triples = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                triples.push(TripleVertex { a, b, c });
            }
        }
    }
    if triples.len() > CAPACITY {
        return Err(Error::TooManyVertices(triples.len()));
    }
    let index = |t: &TripleVertex| triples.binary_search(t).unwrap();
    let mut edges = Vec::new();
    for t in &triples {
        for d in t.c + 1..=n {
            edges.push((index(t), index(&TripleVertex { a: t.b, b: t.c, c: d })));
        }
    }
    let graph = Graph::from_edges(triples.len(), &edges)?;
    Ok(ShiftGraph { graph, triples })
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in s..s + t {
            edges.push((u, v));
        }
    }
    Graph::from_edges(s + t, &edges)
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Outer cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Kneser graph `KG(n, k)`: `k`-subsets of `{0..n}` in lexicographic order,
/// adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("kneser needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut subsets: Vec<BitSet> = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<BitSet>) {
        if cur.len() == k {
            out.push(cur.iter().collect());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if n > 64 {
        return Err(Error::InvalidParameter("kneser ground set too large".into()));
    }
    rec(0, n, k, &mut current, &mut subsets);
    if subsets.len() > CAPACITY {
        return Err(Error::TooManyVertices(subsets.len()));
    }
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if !subsets[i].intersects(&subsets[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(subsets.len(), &edges)
}

/// Maximal triangle-free graph from a seeded random edge order: every pair is
/// offered once and kept unless it would close a triangle.
pub fn random_triangle_free(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random_triangle_free needs n >= 1".into()));
    }
    if n > CAPACITY {
        return Err(Error::TooManyVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(&mut rng);
    let mut adj = vec![BitSet::new(); n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if !adj[u].intersects(&adj[v]) {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Seeded random proper colouring: vertices in a random order take a random
/// colour from `1..=palette` not used by a coloured neighbour, or the next
/// unused colour when the palette is exhausted.
pub fn random_proper_colouring(g: &Graph, palette: u32, seed: u64) -> Result<Colouring> {
    if palette == 0 {
        return Err(Error::InvalidParameter("palette must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rng);
    let mut colours = vec![0u32; g.n()];
    let mut extra = palette;
    for v in order {
        let taken: Vec<u32> = g.neighbours(v).iter().map(|u| colours[u]).collect();
        let free: Vec<u32> = (1..=palette).filter(|c| !taken.contains(c)).collect();
        colours[v] = match free.choose(&mut rng) {
            Some(&c) => c,
            None => {
                extra += 1;
                extra
            }
        };
    }
    Colouring::new(colours)
}

/// Named families with integer parameters, e.g. `("cycle", [5])`.
pub fn standard_family(name: &str, params: &[usize]) -> Result<Graph> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "family `{name}` takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "path" => {
            arity(1)?;
            path(params[0])
        }
        "cycle" => {
            arity(1)?;
            cycle(params[0])
        }
        "complete" => {
            arity(1)?;
            complete(params[0])
        }
        "complete-bipartite" | "kbip" => {
            arity(2)?;
            complete_bipartite(params[0], params[1])
        }
        "star" => {
            arity(1)?;
            star(params[0])
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        "grotzsch" => {
            arity(0)?;
            Ok(grotzsch())
        }
        "kneser" => {
            arity(2)?;
            kneser(params[0], params[1])
        }
        "empty" => {
            arity(1)?;
            Graph::empty(params[0])
        }
        _ => Err(Error::InvalidParameter(format!("unknown graph family `{name}`"))),
    }
}
