//! Brute-force oracles and small-graph generators shared by integration tests.
//! Nothing in this file calls the library's searches; `suites` runs them
//! against these oracles.

#![allow(dead_code)]

pub mod suites;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rainbow_core::{Colouring, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Index of pair `(i, j)`, `i < j`, in an upper-triangle bit code.
fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

fn code_of(n: usize, adj: &[Vec<bool>], perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]][perm[j]] {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

/// Least code over relabellings that list vertices by non-decreasing degree.
fn canonical(n: usize, adj: &[Vec<bool>]) -> u64 {
    let deg: Vec<usize> = (0..n).map(|v| adj[v].iter().filter(|&&b| b).count()).collect();
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by_key(|&v| deg[v]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_deg {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    fn rec(classes: &mut [Vec<usize>], ci: usize, k: usize, perm: &mut Vec<usize>, n: usize, adj: &[Vec<bool>], best: &mut u64) {
        if ci == classes.len() {
            *best = (*best).min(code_of(n, adj, perm));
            return;
        }
        let len = classes[ci].len();
        if k == len {
            rec(classes, ci + 1, 0, perm, n, adj, best);
            return;
        }
        for i in k..len {
            classes[ci].swap(k, i);
            perm.push(classes[ci][k]);
            rec(classes, ci, k + 1, perm, n, adj, best);
            perm.pop();
            classes[ci].swap(k, i);
        }
    }
    rec(&mut classes, 0, 0, &mut perm, n, adj, &mut best);
    best
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn codes(n: usize) -> &'static [u64] {
    static CACHE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let mut levels: Vec<Vec<u64>> = vec![vec![0], vec![0]];
        for m in 2..=8 {
            let mut next = BTreeSet::new();
            for &code in &levels[m - 1] {
                for mask in 0u32..(1 << (m - 1)) {
                    let mut adj = vec![vec![false; m]; m];
                    for j in 1..m - 1 {
                        for i in 0..j {
                            if code >> pair_bit(i, j) & 1 == 1 {
                                adj[i][j] = true;
                                adj[j][i] = true;
                            }
                        }
                    }
                    for i in 0..m - 1 {
                        if mask >> i & 1 == 1 {
                            adj[i][m - 1] = true;
                            adj[m - 1][i] = true;
                        }
                    }
                    next.insert(canonical(m, &adj));
                }
            }
            levels.push(next.into_iter().collect());
        }
        levels
    });
    &all[n]
}

/// All graphs on `n` vertices (`n <= 8`) up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8);
    codes(n).iter().map(|&c| from_code(n, c)).collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// A random proper colouring: vertices in random order take a random free
/// colour from a random palette, opening a new colour when none is free.
pub fn random_proper_colouring<R: Rng>(g: &Graph, rng: &mut R) -> Colouring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut palette = rng.random_range(1..=n.max(1)) as u32;
    let mut colours = vec![0u32; n];
    for &v in &order {
        let free: Vec<u32> = (1..=palette).filter(|&c| (0..n).all(|u| !g.has_edge(u, v) || colours[u] != c)).collect();
        colours[v] = if free.is_empty() {
            palette += 1;
            palette
        } else {
            free[rng.random_range(0..free.len())]
        };
    }
    Colouring::new(colours).unwrap()
}

/// Whether `seq` is an induced path of `adj` with no repeated vertex.
pub fn is_induced_path(adj: &[Vec<bool>], seq: &[usize]) -> bool {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] || adj[seq[i]][seq[j]] != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

pub fn is_rainbow_seq(colours: &[u32], seq: &[usize]) -> bool {
    let mut cs: Vec<u32> = seq.iter().map(|&v| colours[v]).collect();
    cs.sort_unstable();
    cs.windows(2).all(|w| w[0] != w[1])
}

/// Every induced path (rainbow under `colours` if given), as vertex
/// sequences in lexicographic order. Both directions of a path are listed.
pub fn all_paths(adj: &[Vec<bool>], colours: Option<&[u32]>) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    fn rec(adj: &[Vec<bool>], colours: Option<&[u32]>, n: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let ok = is_induced_path(adj, seq) && colours.is_none_or(|c| is_rainbow_seq(c, seq));
        if !ok {
            return;
        }
        out.push(seq.clone());
        for v in 0..n {
            seq.push(v);
            rec(adj, colours, n, seq, out);
            seq.pop();
        }
    }
    for v in 0..n {
        let mut seq = vec![v];
        rec(adj, colours, n, &mut seq, &mut out);
    }
    out
}

/// Whether some pair of disjoint `s`-sets is completely joined.
pub fn has_biclique(adj: &[Vec<bool>], s: usize) -> bool {
    let n = adj.len();
    let subsets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == s).collect();
    subsets.iter().any(|&a| {
        subsets.iter().any(|&b| {
            a & b == 0 && (0..n).all(|u| a >> u & 1 == 0 || (0..n).all(|v| b >> v & 1 == 0 || adj[u][v]))
        })
    })
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
