//! Whole-suite runs shared by the core integration tests and the acceptance
//! target. Each returns counts so callers decide what to assert.

use super::*;
use rainbow_core::generators::random_triangle_free;
use rainbow_core::invariants::chromatic_number;
use rainbow_core::machinery::{
    compute_a_set, compute_b_set, extension_candidates, grading_lemma_constructive, grading_lemma_search, grs_dichotomy,
    longest_directed_path, orient_by_colour, FailedStep, Grading, GrsOutcome,
};
use rainbow_core::paths::find_rainbow_induced_path;
use rainbow_core::{BitSet, Budget, Colouring, Error, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const COLOURINGS_PER_GRAPH: usize = 100;

/// Violations of the orientation properties on one pair.
pub fn gallai_roy_violations(g: &Graph, c: &Colouring) -> usize {
    let o = orient_by_colour(g, c).unwrap();
    if !o.is_acyclic() {
        return 1;
    }
    let p = longest_directed_path(&o).unwrap();
    let colours: Vec<u32> = p.vertices.iter().map(|&v| c.colour(v)).collect();
    let increasing = colours.windows(2).all(|w| w[0] < w[1]);
    let mut bad = usize::from(!increasing) + usize::from(p.len() < chromatic_number(g).chi);
    bad += usize::from(p.vertices.windows(2).any(|w| !g.has_edge(w[0], w[1])));
    bad
}

/// `pairs` seeded (graph, proper colouring) pairs on at most 20 vertices.
/// Returns the total violation count.
pub fn gallai_roy_suite(seed: u64, pairs: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for i in 0..pairs {
        let n = rng.random_range(1..=20);
        let g = if i % 4 == 0 {
            random_triangle_free(n, i).unwrap()
        } else {
            random_graph(n, rng.random_range(0.1..0.7), &mut rng)
        };
        let c = random_proper_colouring(&g, &mut rng);
        bad += gallai_roy_violations(&g, &c);
    }
    bad
}

/// Random grading of `g`: each vertex goes to one of `k` blocks.
fn random_grading(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Grading {
    let mut blocks = vec![BitSet::new(); k];
    for v in 0..g.n() {
        blocks[rng.random_range(0..k)].insert(v);
    }
    Grading::new(g, blocks).unwrap()
}

#[derive(Default, Debug)]
pub struct GradingTally {
    pub instances: usize,
    pub both_witness: usize,
    pub failed_named: usize,
    pub violations: usize,
}

fn cross_validate(g: &Graph, c: &Colouring, grading: &Grading, s: usize, r: u64, tally: &mut GradingTally) {
    let out = match grading_lemma_constructive(g, c, grading, s, r, &mut Budget::unlimited()) {
        Err(Error::Precondition(_)) => return,
        other => other.unwrap(),
    };
    tally.instances += 1;
    let direct = grading_lemma_search(g, c, grading, s).unwrap();
    if let Some(w) = &direct {
        tally.violations += usize::from(w.validate(g, c, grading, s).is_err());
    }
    match (&out.witness, out.failed_step) {
        (Some(w), None) => {
            tally.violations += usize::from(w.validate(g, c, grading, s).is_err());
            tally.violations += usize::from(direct.is_none());
            tally.both_witness += 1;
        }
        (None, Some(step)) => {
            let name = match step {
                FailedStep::HeavyClass => "heavy_class",
                FailedStep::RainbowInducedPath | FailedStep::Dichotomy => "dichotomy",
            };
            tally.violations += usize::from(!out.steps.iter().any(|t| t.step == name));
            if step == FailedStep::RainbowInducedPath {
                let p = out.induced_path.as_ref();
                tally.violations += usize::from(p.is_none_or(|p| p.len() != s || p.validate(g, Some(c)).is_err()));
            }
            tally.failed_named += 1;
        }
        _ => tally.violations += 1,
    }
}

pub fn grading_cross_validation(seed: u64) -> GradingTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = GradingTally::default();
    // Complete bipartite graphs with all-distinct colours and stable blocks:
    // long monotone paths make K_{s,s} witnesses appear.
    for _ in 0..60 {
        let (a, b) = (rng.random_range(4..=7), rng.random_range(4..=7));
        let g = rainbow_core::generators::complete_bipartite(a, b).unwrap();
        let mut colours: Vec<u32> = (1..=(a + b) as u32).collect();
        colours.shuffle(&mut rng);
        let c = Colouring::new(colours).unwrap();
        let mut blocks: Vec<BitSet> = Vec::new();
        for side in [0..a, a..a + b] {
            let mut current = BitSet::new();
            for v in side {
                current.insert(v);
                if rng.random_bool(0.4) {
                    blocks.push(current);
                    current = BitSet::new();
                }
            }
            blocks.push(current);
        }
        blocks.shuffle(&mut rng);
        let grading = Grading::new(&g, blocks).unwrap();
        cross_validate(&g, &c, &grading, 4, 1, &mut tally);
    }
    // Random graphs, colourings and gradings.
    while tally.instances < 200 {
        let n = rng.random_range(4..=12);
        let g = random_graph(n, rng.random_range(0.2..0.8), &mut rng);
        let c = random_proper_colouring(&g, &mut rng);
        let grading = random_grading(&g, rng.random_range(1..=n), &mut rng);
        let s = rng.random_range(1..=4);
        let r = rng.random_range(1..=3);
        cross_validate(&g, &c, &grading, s, r, &mut tally);
    }
    tally
}

fn set(vs: impl IntoIterator<Item = usize>) -> BitSet {
    vs.into_iter().collect()
}

/// Checks every rainbow-path operation on one coloured graph against the
/// brute-force path list. Returns the number of disagreements.
fn check_instance(g: &Graph, c: &rainbow_core::Colouring, rng: &mut ChaCha8Rng) -> usize {
    let adj = adjacency(g);
    let paths = all_paths(&adj, Some(c.as_slice()));
    let mut bad = 0;
    let mut unlimited = Budget::unlimited();

    for s in 1..=g.n() {
        let expected = paths.iter().find(|p| p.len() == s);
        let got = find_rainbow_induced_path(g, c, s, &mut unlimited).unwrap();
        if expected.map(|p| p.clone()) != got.as_ref().map(|w| w.vertices.clone()) {
            bad += 1;
        }
        if let Some(w) = got {
            bad += usize::from(w.validate(g, Some(c)).is_err());
        }
    }

    for z in 0..g.n() {
        let expected = set(paths.iter().filter(|p| p[0] == z).map(|p| *p.last().unwrap()));
        bad += usize::from(compute_a_set(g, c, z, &mut unlimited).unwrap() != expected);
    }

    for _ in 0..3 {
        let q = &paths[rng.random_range(0..paths.len())];
        let longer = |prefix: &[usize]| set(paths.iter().filter(|p| p.len() > prefix.len() && p.starts_with(prefix)).map(|p| *p.last().unwrap()));
        let b = compute_b_set(g, c, q, &mut unlimited).unwrap();
        bad += usize::from(b != longer(q));
        let y = *q.last().unwrap();
        let cands = extension_candidates(g, c, q).unwrap();
        let one_step = set(paths.iter().filter(|p| p.len() == q.len() + 1 && p.starts_with(q)).map(|p| *p.last().unwrap()));
        bad += usize::from(cands != one_step);
        // B(Q) minus V is the union of the B(Q_v), which is B(Q) minus N(y).
        let mut union = BitSet::new();
        for v in cands.iter() {
            let mut qv = q.clone();
            qv.push(v);
            union = union.union(&compute_b_set(g, c, &qv, &mut unlimited).unwrap());
        }
        bad += usize::from(b.difference(&cands) != union);
        bad += usize::from(b.difference(&g.neighbours(y)) != union);
    }
    bad
}

fn grs_agrees(g: &Graph, s: usize) -> bool {
    let adj = adjacency(g);
    let has_path = all_paths(&adj, None).iter().any(|p| p.len() == s);
    match grs_dichotomy(g, s, &mut Budget::unlimited()).unwrap() {
        GrsOutcome::InducedPath(p) => has_path && p.len() == s && p.validate(g, None).is_ok(),
        GrsOutcome::Biclique(b) => !has_path && has_biclique(&adj, s) && b.validate(g, None).is_ok(),
        GrsOutcome::Neither => !has_path && !has_biclique(&adj, s),
    }
}

/// Every graph on at most 7 vertices with `COLOURINGS_PER_GRAPH` random
/// proper colourings each. Returns (instances, disagreements).
pub fn path_oracle_suite(seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = 0;
    let mut bad = 0;
    for n in 1..=7 {
        for g in all_graphs(n) {
            for _ in 0..COLOURINGS_PER_GRAPH {
                let c = random_proper_colouring(&g, &mut rng);
                bad += check_instance(&g, &c, &mut rng);
                instances += 1;
            }
        }
    }
    (instances, bad)
}

/// The dichotomy on every graph on at most 7 vertices for s = 1..=3, and on
/// the longest monotone path of each of `COLOURINGS_PER_GRAPH` random
/// colourings, which is how the proofs use it. Returns (instances, disagreements).
pub fn grs_oracle_suite(seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut instances, mut bad) = (0, 0);
    for n in 1..=7 {
        for g in all_graphs(n) {
            for s in 1..=3 {
                bad += usize::from(!grs_agrees(&g, s));
                instances += 1;
            }
            for _ in 0..COLOURINGS_PER_GRAPH {
                let c = random_proper_colouring(&g, &mut rng);
                let p = longest_directed_path(&orient_by_colour(&g, &c).unwrap()).unwrap();
                let (sub, _) = g.induced_subgraph(&p.vertex_set()).unwrap();
                let s = rng.random_range(1..=3);
                bad += usize::from(!grs_agrees(&sub, s));
                instances += 1;
            }
        }
    }
    (instances, bad)
}
