//! Executable forms of the constructions behind the rainbow-path theorem:
//! colour orientations and monotone paths, the induced-path / biclique
//! dichotomy, gradings and their later-neighbour witnesses, the `A(z)` and
//! `B(Q)` endpoint sets, and the bound recursion.
//!
//! Two slips in the source argument are read as follows. In the grading
//! lemma, "none of them belongs to `W_j`" means `W_i` (the block of `v`). In
//! the main argument, "Let `v = {v_1,…,v_n}`" means the candidate set `V`, and
//! "extension of `Q(v_i)`" means an extension of `Q_{v_i}`.

mod constants;
mod grading;
mod grs;
mod guided;
mod orientation;
mod sets;

use serde::Serialize;

pub use constants::{constants_table, ConstantsTable, RTable};
pub use grading::{grading_lemma_constructive, grading_lemma_search, ConstructiveOutcome, FailedStep, Grading, GradingWitness};
pub use grs::{find_biclique, grs_dichotomy, BicliqueWitness, GrsOutcome};
pub use guided::{proof_guided_search, GuidedOutcome};
pub use orientation::{longest_directed_path, orient_by_colour, Orientation};
pub use sets::{compute_a_set, compute_b_set, extension_candidates};

/// One recorded step of a traced computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<usize>,
}

#[derive(Debug, Default)]
pub(crate) struct Tracer {
    pub(crate) steps: Vec<TraceStep>,
}

impl Tracer {
    pub(crate) fn note(&mut self, step: &'static str, detail: String) {
        self.vertices(step, detail, Vec::new());
    }

    pub(crate) fn vertices(&mut self, step: &'static str, detail: String, vertices: Vec<usize>) {
        self.steps.push(TraceStep { step, detail, vertices });
    }
}
