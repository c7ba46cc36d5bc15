//! Gradings and the search for a vertex with `s` distinctly coloured later
//! neighbours, both directly and by following the argument that guarantees one.

use serde::Serialize;

use super::grs::{grs_dichotomy, GrsOutcome};
use super::orientation::{longest_directed_path, orient_by_colour};
use super::{TraceStep, Tracer};
use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};
use crate::invariants::chromatic_number_with_budget;
use crate::paths::PathWitness;

/// An ordered sequence of disjoint vertex sets covering `V(G)`, each carrying
/// a proper colouring certificate with at most `w` classes. Blocks may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    blocks: Vec<BitSet>,
    w: usize,
    certificates: Vec<Vec<BitSet>>,
    block_of: Vec<usize>,
}

impl Grading {
    /// Certifies each block with an optimal colouring; `w` is the largest
    /// block chromatic number.
    pub fn new(g: &Graph, blocks: Vec<BitSet>) -> Result<Self> {
        Self::build(g, blocks, None, &mut Budget::unlimited())
    }

    /// Like [`Grading::new`] but rejects gradings that are not `w`-colourable.
    pub fn with_bound(g: &Graph, blocks: Vec<BitSet>, w: usize) -> Result<Self> {
        Self::build(g, blocks, Some(w), &mut Budget::unlimited())
    }

    /// `W_i = S_i \ (S_1 ∪ ... ∪ S_{i-1})`; the sets must cover `V(G)`.
    pub fn from_differences(g: &Graph, sets: &[BitSet], budget: &mut Budget) -> Result<Self> {
        let mut seen = BitSet::new();
        let blocks = sets
            .iter()
            .map(|s| {
                let w = s.difference(&seen);
                seen = seen.union(s);
                w
            })
            .collect();
        Self::build(g, blocks, None, budget)
    }

    fn build(g: &Graph, blocks: Vec<BitSet>, bound: Option<usize>, budget: &mut Budget) -> Result<Self> {
        let mut block_of = vec![usize::MAX; g.n()];
        for (i, b) in blocks.iter().enumerate() {
            g.check_set(b)?;
            for v in b.iter() {
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidGrading(format!("vertex {v} lies in blocks {} and {i}", block_of[v])));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidGrading(format!("vertex {v} is in no block")));
        }
        let mut certificates = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let (sub, map) = g.induced_subgraph(b)?;
            let chi = chromatic_number_with_budget(&sub, budget)?;
            certificates.push(
                chi.partition
                    .blocks()
                    .iter()
                    .map(|class| class.iter().map(|i| map[i]).collect())
                    .collect::<Vec<BitSet>>(),
            );
        }
        let w_needed = certificates.iter().map(Vec::len).max().unwrap_or(0);
        let w = match bound {
            Some(w) if w < w_needed => {
                return Err(Error::InvalidGrading(format!("a block needs {w_needed} colours, bound is {w}")))
            }
            Some(w) => w,
            None => w_needed,
        };
        Ok(Grading {
            blocks,
            w,
            certificates,
            block_of,
        })
    }

    pub fn blocks(&self) -> &[BitSet] {
        &self.blocks
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Colour classes certifying `χ(G[W_i]) ≤ w`.
    pub fn certificate(&self, i: usize) -> &[BitSet] {
        &self.certificates[i]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn is_later(&self, u: usize, v: usize) -> bool {
        self.block_of[u] > self.block_of[v]
    }

    /// Re-checks disjointness, cover, and every certificate against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.block_of.len() != g.n() {
            return Err(Error::InvalidGrading("grading belongs to a different graph".into()));
        }
        let mut seen = BitSet::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if b.intersects(&seen) {
                return Err(Error::InvalidGrading(format!("block {i} overlaps an earlier block")));
            }
            seen = seen.union(b);
            let cert = &self.certificates[i];
            if cert.len() > self.w {
                return Err(Error::InvalidGrading(format!("block {i} certificate uses more than {} classes", self.w)));
            }
            let cover = cert.iter().fold(BitSet::new(), |acc, c| acc.union(c));
            if cover != *b || cert.iter().any(|c| !g.is_independent(c)) {
                return Err(Error::InvalidGrading(format!("block {i} certificate is not a proper colouring")));
            }
        }
        if seen != g.vertices() {
            return Err(Error::InvalidGrading("blocks do not cover the graph".into()));
        }
        Ok(())
    }
}

/// A vertex `v` in block `i` and `s` neighbours of `v`, all in later blocks,
/// with pairwise distinct colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingWitness {
    pub block: usize,
    pub vertex: usize,
    pub later: Vec<usize>,
}

impl GradingWitness {
    pub fn validate(&self, g: &Graph, c: &Colouring, grading: &Grading, s: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWitness(m));
        g.check_vertex(self.vertex)?;
        if grading.block_of(self.vertex) != self.block {
            return bad(format!("vertex {} is not in block {}", self.vertex, self.block));
        }
        let set: BitSet = self.later.iter().collect();
        g.check_set(&set)?;
        if self.later.len() != s || set.len() != s {
            return bad(format!("expected {s} distinct later neighbours, got {:?}", self.later));
        }
        for &x in &self.later {
            if !g.has_edge(self.vertex, x) {
                return bad(format!("{x} is not adjacent to {}", self.vertex));
            }
            if !grading.is_later(x, self.vertex) {
                return bad(format!("{x} is not later than {}", self.vertex));
            }
        }
        if !crate::graph::is_rainbow(c, &set)? {
            return bad("later neighbours repeat a colour".into());
        }
        Ok(())
    }
}

fn check_inputs(g: &Graph, c: &Colouring, grading: &Grading) -> Result<()> {
    c.check_graph(g)?;
    grading.validate(g)
}

/// Direct search: vertices in block order (lowest index within a block); for
/// each, later neighbours are scanned in increasing order keeping the first of
/// each colour, until `s` are found.
pub fn grading_lemma_search(g: &Graph, c: &Colouring, grading: &Grading, s: usize) -> Result<Option<GradingWitness>> {
    check_inputs(g, c, grading)?;
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let mut after = g.vertices();
    for (i, block) in grading.blocks().iter().enumerate() {
        after = after.difference(block);
        for v in block.iter() {
            let mut colours = Vec::with_capacity(s);
            let mut later = Vec::with_capacity(s);
            for x in g.neighbours(v).intersection(&after).iter() {
                if !colours.contains(&c.colour(x)) {
                    colours.push(c.colour(x));
                    later.push(x);
                    if later.len() == s {
                        return Ok(Some(GradingWitness { block: i, vertex: v, later }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The step at which the proof-following construction stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailedStep {
    /// No refinement class `A_j` has chromatic number above `r`.
    HeavyClass,
    /// The dichotomy produced an induced `s`-path inside the monotone path:
    /// a rainbow induced `s`-path exists, so the hypothesis "no rainbow
    /// induced `s`-path" does not hold for this instance.
    RainbowInducedPath,
    /// Neither an induced `s`-path nor a `K_{s,s}` lies on the monotone path;
    /// the supplied `r` is below the true dichotomy threshold.
    Dichotomy,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructiveOutcome {
    pub witness: Option<GradingWitness>,
    pub failed_step: Option<FailedStep>,
    /// The rainbow induced path found when the hypothesis fails.
    pub induced_path: Option<PathWitness>,
    pub steps: Vec<TraceStep>,
}

/// Follows the argument step by step:
///
/// 1. merge the block certificates into classes `A_1..A_w` (class `j` of
///    every block), so each `W_i ∩ A_j` is stable;
/// 2. pick the first `j` with `χ(G[A_j]) > r`;
/// 3. orient `G[A_j]` by colour and take a longest directed path `P`, which is rainbow;
/// 4. run the dichotomy on `G[V(P)]`; a `K_{s,s}` there is rainbow;
/// 5. take the earliest block meeting the biclique, its lowest vertex `v`, and
///    the opposite side as the later neighbours.
///
/// Requires `χ(G) ≥ w·r`; a violation is an error, distinct from a failed step.
pub fn grading_lemma_constructive(
    g: &Graph,
    c: &Colouring,
    grading: &Grading,
    s: usize,
    r: u64,
    budget: &mut Budget,
) -> Result<ConstructiveOutcome> {
    check_inputs(g, c, grading)?;
    c.check_proper(g)?;
    if s == 0 || r == 0 {
        return Err(Error::InvalidParameter("s and r must be at least 1".into()));
    }
    let mut trace = Tracer::default();
    let chi = chromatic_number_with_budget(g, budget)?.chi as u64;
    let need = (grading.w() as u64).saturating_mul(r);
    if chi < need {
        return Err(Error::Precondition(format!("χ(G) = {chi} < w·r = {}·{r}", grading.w())));
    }
    trace.note("precondition", format!("χ(G) = {chi} ≥ w·r = {need}"));

    let mut classes = vec![BitSet::new(); grading.w()];
    for i in 0..grading.blocks().len() {
        for (j, class) in grading.certificate(i).iter().enumerate() {
            classes[j] = classes[j].union(class);
        }
    }
    for (j, a) in classes.iter().enumerate() {
        trace.vertices("refinement_class", format!("A_{}", j + 1), a.to_vec());
    }

    let mut heavy = None;
    for (j, a) in classes.iter().enumerate() {
        let (sub, map) = g.induced_subgraph(a)?;
        let chi_j = chromatic_number_with_budget(&sub, budget)?.chi as u64;
        if chi_j > r {
            trace.note("heavy_class", format!("χ(G[A_{}]) = {chi_j} > r = {r}", j + 1));
            heavy = Some((sub, map));
            break;
        }
    }
    let Some((sub, map)) = heavy else {
        trace.note("heavy_class", format!("no class has chromatic number above r = {r}"));
        return Ok(trace.fail(FailedStep::HeavyClass, None));
    };
    let sub_colours = Colouring::new(map.iter().map(|&v| c.colour(v)).collect())?;

    let orientation = orient_by_colour(&sub, &sub_colours)?;
    let monotone = longest_directed_path(&orientation)?;
    let path_vertices: Vec<usize> = monotone.vertices.iter().map(|&i| map[i]).collect();
    trace.vertices(
        "monotone_path",
        format!("{} vertices, colours increasing", path_vertices.len()),
        path_vertices.clone(),
    );

    let path_set: BitSet = path_vertices.iter().collect();
    let (on_path, path_map) = g.induced_subgraph(&path_set)?;
    match grs_dichotomy(&on_path, s, budget)? {
        GrsOutcome::InducedPath(p) => {
            let vertices: Vec<usize> = p.vertices.iter().map(|&i| path_map[i]).collect();
            trace.vertices("dichotomy", "induced path on the monotone path: rainbow induced s-path exists".into(), vertices.clone());
            let witness = PathWitness {
                vertices,
                induced: true,
                rainbow: true,
            };
            witness.validate(g, Some(c))?;
            Ok(trace.fail(FailedStep::RainbowInducedPath, Some(witness)))
        }
        GrsOutcome::Neither => {
            trace.note("dichotomy", format!("neither an induced {s}-path nor K_{{{s},{s}}} on {} vertices", path_set.len()));
            Ok(trace.fail(FailedStep::Dichotomy, None))
        }
        GrsOutcome::Biclique(b) => {
            let left: BitSet = b.left.iter().map(|&i| path_map[i]).collect();
            let right: BitSet = b.right.iter().map(|&i| path_map[i]).collect();
            trace.vertices("dichotomy", "rainbow K_{s,s}".into(), left.union(&right).to_vec());
            let both = left.union(&right);
            let (block, vertex) = grading
                .blocks()
                .iter()
                .enumerate()
                .find_map(|(i, w)| w.intersection(&both).first().map(|v| (i, v)))
                .expect("biclique is non-empty");
            let later = if left.contains(vertex) { right } else { left }.to_vec();
            let witness = GradingWitness { block, vertex, later };
            trace.vertices("earliest_vertex", format!("v = {vertex} in block {block}"), witness.later.clone());
            witness.validate(g, c, grading, s)?;
            Ok(ConstructiveOutcome {
                witness: Some(witness),
                failed_step: None,
                induced_path: None,
                steps: trace.steps,
            })
        }
    }
}

impl Tracer {
    fn fail(self, step: FailedStep, induced_path: Option<PathWitness>) -> ConstructiveOutcome {
        ConstructiveOutcome {
            witness: None,
            failed_step: Some(step),
            induced_path,
            steps: self.steps,
        }
    }
}
