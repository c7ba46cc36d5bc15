//! Enumeration of proper colourings up to colour renaming.

use crate::bitset::BitSet;
use crate::graph::{ColourPartition, Graph};

/// Partitions of `V(G)` into independent sets, each exactly once, in
/// lexicographic order of their restricted-growth strings.
pub struct ColourPartitions<'a> {
    g: &'a Graph,
    rgs: Vec<usize>,
    blocks: Vec<BitSet>,
    started: bool,
    done: bool,
}

pub fn enumerate_colour_partitions(g: &Graph) -> ColourPartitions<'_> {
    ColourPartitions {
        g,
        rgs: Vec::with_capacity(g.n()),
        blocks: Vec::new(),
        started: false,
        done: false,
    }
}

impl ColourPartitions<'_> {
    fn fits(&self, v: usize, b: usize) -> bool {
        b == self.blocks.len() || !self.blocks[b].intersects(&self.g.neighbours(v))
    }

    fn place(&mut self, v: usize, b: usize) {
        if b == self.blocks.len() {
            self.blocks.push(BitSet::new());
        }
        self.blocks[b].insert(v);
        self.rgs.push(b);
    }

    fn unplace(&mut self) -> (usize, usize) {
        let v = self.rgs.len() - 1;
        let b = self.rgs.pop().unwrap();
        self.blocks[b].remove(v);
        if self.blocks[b].is_empty() {
            self.blocks.pop();
        }
        (v, b)
    }

    /// Completes the current prefix with the least feasible block per vertex.
    fn fill(&mut self) {
        for v in self.rgs.len()..self.g.n() {
            let b = (0..=self.blocks.len()).find(|&b| self.fits(v, b)).unwrap();
            self.place(v, b);
        }
    }

    fn advance(&mut self) -> bool {
        while !self.rgs.is_empty() {
            let (v, b) = self.unplace();
            if let Some(next) = (b + 1..=self.blocks.len()).find(|&nb| self.fits(v, nb)) {
                self.place(v, next);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for ColourPartitions<'_> {
    type Item = ColourPartition;

    fn next(&mut self) -> Option<ColourPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        if self.g.n() == 0 {
            self.done = true;
        }
        let p = ColourPartition::from_rgs(self.g, &self.rgs).expect("enumerated partition is proper");
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use std::collections::BTreeSet;

    /// Every restricted-growth string, filtered by independence.
    fn brute(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let ok = g.edges().iter().all(|&(u, v)| rgs[u] != rgs[v]);
            if ok {
                out.push(rgs.clone());
            }
            // next restricted-growth string
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let max_before = rgs[..i].iter().copied().max().unwrap();
                if rgs[i] <= max_before {
                    rgs[i] += 1;
                    for x in rgs.iter_mut().skip(i + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let c3 = cycle(3).unwrap();
        assert_eq!(enumerate_colour_partitions(&c3).count(), 1);
        let p3 = path(3).unwrap();
        let all: Vec<Vec<usize>> = enumerate_colour_partitions(&p3).map(|p| p.rgs()).collect();
        assert_eq!(all, vec![vec![0, 1, 0], vec![0, 1, 2]]);
    }

    #[test]
    fn matches_brute_force() {
        for g in [cycle(5).unwrap(), path(6).unwrap(), crate::generators::petersen()] {
            let got: Vec<Vec<usize>> = enumerate_colour_partitions(&g).map(|p| p.rgs()).collect();
            let distinct: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(distinct.len(), got.len());
            assert_eq!(got, brute(&g));
            for rgs in &got {
                assert!(g.edges().iter().all(|&(u, v)| rgs[u] != rgs[v]));
            }
        }
    }
}
