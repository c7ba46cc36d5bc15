//! Induced paths and holes, with and without rainbow constraints.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};

/// A path given by its vertex sequence, with the properties it was found to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub induced: bool,
    pub rainbow: bool,
}

impl PathWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> BitSet {
        self.vertices.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    /// Re-checks every claimed property against `g` and, for rainbow claims, `c`.
    pub fn validate(&self, g: &Graph, c: Option<&Colouring>) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWitness(msg));
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        let set = self.vertex_set();
        if set.len() != self.vertices.len() {
            return bad(format!("path {:?} repeats a vertex", self.vertices));
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return bad(format!("path {:?}: {} and {} not adjacent", self.vertices, w[0], w[1]));
            }
        }
        if self.induced {
            for (i, &v) in self.vertices.iter().enumerate() {
                for &u in self.vertices.iter().skip(i + 2) {
                    if g.has_edge(u, v) {
                        return bad(format!("path {:?} has chord {v}-{u}", self.vertices));
                    }
                }
            }
        }
        if self.rainbow {
            let c = match c {
                Some(c) => c,
                None => return bad("rainbow claim needs a colouring".into()),
            };
            c.check_graph(g)?;
            if !crate::graph::is_rainbow(c, &set)? {
                return bad(format!("path {:?} repeats a colour", self.vertices));
            }
        }
        Ok(())
    }
}

/// A chordless cycle of length at least 4, as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub vertices: Vec<usize>,
}

impl HoleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.vertices.len();
        let bad = |msg: String| Err(Error::InvalidWitness(msg));
        if k < 4 {
            return bad(format!("hole {:?} has fewer than 4 vertices", self.vertices));
        }
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        if self.vertices.iter().collect::<BitSet>().len() != k {
            return bad(format!("hole {:?} repeats a vertex", self.vertices));
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let (u, v) = (self.vertices[i], self.vertices[j]);
                if consecutive != g.has_edge(u, v) {
                    return bad(format!("hole {:?}: bad adjacency between {u} and {v}", self.vertices));
                }
            }
        }
        Ok(())
    }

    /// Whether the `s` cyclically consecutive vertices starting at `start`
    /// have pairwise distinct colours.
    pub fn run_is_rainbow(&self, c: &Colouring, start: usize, s: usize) -> bool {
        let k = self.vertices.len();
        if s > k {
            return false;
        }
        let mut seen: Vec<u32> = (0..s).map(|i| c.colour(self.vertices[(start + i) % k])).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// Depth-first search for induced paths with a fixed number of vertices,
/// optionally rainbow under a colouring.
///
/// Start vertices and extensions are tried lowest index first, so the first
/// path found is the lexicographically least one.
pub(crate) struct InducedPathSearch<'a> {
    g: &'a Graph,
    ranks: Option<Vec<usize>>,
    allowed: BitSet,
    target: usize,
}

impl<'a> InducedPathSearch<'a> {
    pub(crate) fn new(g: &'a Graph, c: Option<&Colouring>, target: usize) -> Self {
        InducedPathSearch {
            g,
            ranks: c.map(Colouring::ranks),
            allowed: g.vertices(),
            target,
        }
    }

    pub(crate) fn first(&self, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        if self.target == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut path = Vec::with_capacity(self.target);
        for v in self.allowed.iter() {
            budget.tick()?;
            path.push(v);
            let used = self.colour_set(v);
            if self.extend(&mut path, BitSet::singleton(v), used, budget)? {
                return Ok(Some(path));
            }
            path.pop();
        }
        Ok(None)
    }

    fn colour_set(&self, v: usize) -> BitSet {
        match &self.ranks {
            Some(r) => BitSet::singleton(r[v]),
            None => BitSet::new(),
        }
    }

    fn extend(&self, path: &mut Vec<usize>, set: BitSet, used: BitSet, budget: &mut Budget) -> Result<bool> {
        if path.len() == self.target {
            return Ok(true);
        }
        let end = *path.last().unwrap();
        let end_set = BitSet::singleton(end);
        let candidates = self.g.neighbours(end).intersection(&self.allowed).difference(&set);
        for x in candidates.iter() {
            if self.g.neighbours(x).intersection(&set) != end_set {
                continue;
            }
            let mut next_used = used;
            if let Some(r) = &self.ranks {
                if used.contains(r[x]) {
                    continue;
                }
                next_used.insert(r[x]);
            }
            budget.tick()?;
            path.push(x);
            if self.extend(path, set.with(x), next_used, budget)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

/// First induced path on exactly `s` vertices (any colours), if one exists.
pub fn find_induced_path(g: &Graph, s: usize, budget: &mut Budget) -> Result<Option<PathWitness>> {
    if s < 1 {
        return Err(Error::InvalidParameter("path length s must be at least 1".into()));
    }
    Ok(InducedPathSearch::new(g, None, s).first(budget)?.map(|vertices| PathWitness {
        vertices,
        induced: true,
        rainbow: false,
    }))
}

/// First rainbow induced path on exactly `s` vertices, if one exists.
///
/// A single vertex counts as a 1-vertex path.
pub fn find_rainbow_induced_path(
    g: &Graph,
    c: &Colouring,
    s: usize,
    budget: &mut Budget,
) -> Result<Option<PathWitness>> {
    if s < 1 {
        return Err(Error::InvalidParameter("path length s must be at least 1".into()));
    }
    c.check_proper(g)?;
    let found = InducedPathSearch::new(g, Some(c), s).first(budget)?;
    let witness = found.map(|vertices| PathWitness {
        vertices,
        induced: true,
        rainbow: true,
    });
    if let Some(w) = &witness {
        debug_assert!(w.validate(g, Some(c)).is_ok());
    }
    Ok(witness)
}

/// Enumerates holes, each exactly once, calling `visit` until it returns `true`.
///
/// A hole is rooted at its smallest vertex `v`; the search grows induced paths
/// through vertices above `v` and closes when the new end is adjacent to `v`.
/// Requiring the second vertex to be below the closing vertex fixes the
/// direction. With `ranks`, paths repeating a colour are pruned.
fn for_each_hole<F>(g: &Graph, ranks: Option<&[usize]>, budget: &mut Budget, mut visit: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> bool,
{
    struct Ctx<'a, F> {
        g: &'a Graph,
        ranks: Option<&'a [usize]>,
        root: usize,
        above: BitSet,
        visit: F,
    }

    fn grow<F: FnMut(&[usize]) -> bool>(
        ctx: &mut Ctx<'_, F>,
        path: &mut Vec<usize>,
        set: BitSet,
        used: BitSet,
        budget: &mut Budget,
    ) -> Result<bool> {
        let end = *path.last().unwrap();
        let candidates = ctx.g.neighbours(end).intersection(&ctx.above).difference(&set);
        for x in candidates.iter() {
            let touch = ctx.g.neighbours(x).intersection(&set);
            let closes = touch.contains(ctx.root);
            // Only `end` (and the root, when closing) may touch the new vertex.
            if !touch.without(ctx.root).is_subset(&BitSet::singleton(end)) || !touch.contains(end) {
                continue;
            }
            let mut next_used = used;
            if let Some(r) = ctx.ranks {
                if used.contains(r[x]) {
                    continue;
                }
                next_used.insert(r[x]);
            }
            budget.tick()?;
            path.push(x);
            if closes {
                if path.len() >= 4 && path[1] < x && (ctx.visit)(path) {
                    return Ok(true);
                }
            } else if grow(ctx, path, set.with(x), next_used, budget)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }

    for root in 0..g.n() {
        let above = g.vertices().difference(&BitSet::full(root + 1));
        let mut ctx = Ctx {
            g,
            ranks,
            root,
            above,
            visit: &mut visit,
        };
        let used = ranks.map_or(BitSet::new(), |r| BitSet::singleton(r[root]));
        for p1 in g.neighbours(root).intersection(&above).iter() {
            if let Some(r) = ranks {
                if used.contains(r[p1]) {
                    continue;
                }
            }
            budget.tick()?;
            let mut path = vec![root, p1];
            let next_used = ranks.map_or(used, |r| used.with(r[p1]));
            if grow(&mut ctx, &mut path, BitSet::singleton(root).with(p1), next_used, budget)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All holes of `g`, in enumeration order.
pub fn all_holes(g: &Graph, budget: &mut Budget) -> Result<Vec<HoleWitness>> {
    let mut out = Vec::new();
    for_each_hole(g, None, budget, |h| {
        out.push(HoleWitness { vertices: h.to_vec() });
        false
    })?;
    Ok(out)
}

/// First hole whose vertices all have distinct colours.
pub fn find_rainbow_hole(g: &Graph, c: &Colouring, budget: &mut Budget) -> Result<Option<HoleWitness>> {
    c.check_proper(g)?;
    let ranks = c.ranks();
    let mut found = None;
    for_each_hole(g, Some(&ranks), budget, |h| {
        found = Some(HoleWitness { vertices: h.to_vec() });
        true
    })?;
    Ok(found)
}

/// First hole together with a start index such that the `s` cyclically
/// consecutive vertices from there have distinct colours.
pub fn find_hole_with_rainbow_run(
    g: &Graph,
    c: &Colouring,
    s: usize,
    budget: &mut Budget,
) -> Result<Option<(HoleWitness, usize)>> {
    if s < 2 {
        return Err(Error::InvalidParameter("rainbow run length s must be at least 2".into()));
    }
    c.check_proper(g)?;
    let mut found = None;
    for_each_hole(g, None, budget, |h| {
        let hole = HoleWitness { vertices: h.to_vec() };
        match (0..h.len()).find(|&i| hole.run_is_rainbow(c, i, s)) {
            Some(start) => {
                found = Some((hole, start));
                true
            }
            None => false,
        }
    })?;
    Ok(found)
}

/// First hole in which every `s` cyclically consecutive vertices have
/// distinct colours. Holes shorter than `s` qualify only if fully rainbow.
pub fn find_hole_all_runs_rainbow(
    g: &Graph,
    c: &Colouring,
    s: usize,
    budget: &mut Budget,
) -> Result<Option<HoleWitness>> {
    if s < 2 {
        return Err(Error::InvalidParameter("rainbow run length s must be at least 2".into()));
    }
    c.check_proper(g)?;
    let mut found = None;
    for_each_hole(g, None, budget, |h| {
        let hole = HoleWitness { vertices: h.to_vec() };
        let run = s.min(h.len());
        if (0..h.len()).all(|i| hole.run_is_rainbow(c, i, run)) {
            found = Some(hole);
            true
        } else {
            false
        }
    })?;
    Ok(found)
}
