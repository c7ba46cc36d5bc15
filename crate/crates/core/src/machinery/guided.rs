//! Path search ordered by the chromatic numbers of `A(z)` and `B(Q)` sets.
//!
//! The existence argument is by contradiction, so it does not yield an
//! algorithm directly. This search borrows its strategy: start from roots whose
//! `A(z)` has large chromatic number and prefer extensions whose `B(Q_v)`
//! stays highly chromatic. It backtracks over all choices, so within budget it
//! finds a rainbow induced `s`-path whenever one exists.

use serde::Serialize;

use super::constants::{constants_table, ConstantsTable, RTable};
use super::grading::Grading;
use super::sets::{compute_a_set, compute_b_set, extension_candidates};
use super::{TraceStep, Tracer};
use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Colouring, Graph};
use crate::invariants::{chromatic_number_with_budget, clique_number_with_budget};
use crate::paths::PathWitness;

/// Descents recorded in the trace before it is truncated.
const TRACE_DESCENTS: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct GuidedOutcome {
    pub witness: Option<PathWitness>,
    /// Largest `χ(G[N(v)])`, the neighbourhood bound the recursion uses as `c'`.
    pub c_prime: u64,
    pub constants: Option<ConstantsTable>,
    pub backtracks: u64,
    pub steps: Vec<TraceStep>,
}

fn chi_of(g: &Graph, set: &BitSet, budget: &mut Budget) -> Result<u64> {
    let (sub, _) = g.induced_subgraph(set)?;
    Ok(chromatic_number_with_budget(&sub, budget)?.chi as u64)
}

struct Guided<'a> {
    g: &'a Graph,
    c: &'a Colouring,
    s: usize,
    constants: Option<ConstantsTable>,
    trace: Tracer,
    descents: usize,
    backtracks: u64,
}

impl Guided<'_> {
    fn extend(&mut self, q: &mut Vec<usize>, budget: &mut Budget) -> Result<bool> {
        if q.len() == self.s {
            return Ok(true);
        }
        let candidates = extension_candidates(self.g, self.c, q)?;
        if q.len() + 1 == self.s {
            if let Some(v) = candidates.first() {
                q.push(v);
                return Ok(true);
            }
            self.backtracks += 1;
            return Ok(false);
        }
        let mut ranked = Vec::with_capacity(candidates.len());
        for v in candidates.iter() {
            q.push(v);
            let b = compute_b_set(self.g, self.c, q, budget)?;
            q.pop();
            if b.is_empty() {
                continue;
            }
            ranked.push((chi_of(self.g, &b, budget)?, v));
        }
        ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (chi_b, v) in ranked {
            q.push(v);
            if self.descents < TRACE_DESCENTS {
                self.descents += 1;
                let j = q.len();
                let threshold = match &self.constants {
                    Some(t) if j <= self.s => format!(", w_{j} = {}", t.w(j)),
                    _ => String::new(),
                };
                self.trace
                    .vertices("extend", format!("|Q| = {j}, χ(G[B(Q)]) = {chi_b}{threshold}"), q.clone());
            }
            if self.extend(q, budget)? {
                return Ok(true);
            }
            q.pop();
        }
        self.backtracks += 1;
        Ok(false)
    }
}

pub fn proof_guided_search(
    g: &Graph,
    c: &Colouring,
    s: usize,
    r_table: &RTable,
    budget: &mut Budget,
) -> Result<GuidedOutcome> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    c.check_proper(g)?;
    let mut trace = Tracer::default();

    let mut c_prime = 0;
    for v in 0..g.n() {
        c_prime = c_prime.max(chi_of(g, &g.neighbours(v), budget)?);
    }
    let kappa = clique_number_with_budget(g, budget)?.size() as u64;
    trace.note("neighbourhoods", format!("ω(G) = {kappa}, max χ(G[N(v)]) = {c_prime}"));
    let constants = match r_table.get(s) {
        Some(r) => match constants_table(s as u64, kappa, r, c_prime) {
            Ok(t) => {
                trace.note("constants", format!("r = {r}, w_1 = {}, c = {}", t.w(1), t.c));
                Some(t)
            }
            Err(e) => {
                trace.note("constants", e.to_string());
                None
            }
        },
        None => {
            trace.note("constants", format!("no r({s}) supplied; thresholds omitted"));
            None
        }
    };

    let mut a_sets = Vec::with_capacity(g.n());
    let mut roots = Vec::with_capacity(g.n());
    for z in 0..g.n() {
        let a = compute_a_set(g, c, z, budget)?;
        roots.push((chi_of(g, &a, budget)?, z));
        a_sets.push(a);
    }
    if g.n() > 0 {
        let grading = Grading::from_differences(g, &a_sets, budget)?;
        trace.note("a_grading", format!("W_i = A(v_i) minus earlier A-sets is {}-colourable", grading.w()));
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut search = Guided {
        g,
        c,
        s,
        constants: constants.clone(),
        trace,
        descents: 0,
        backtracks: 0,
    };
    let mut witness = None;
    for (chi_a, z) in roots {
        if search.descents < TRACE_DESCENTS {
            search.descents += 1;
            search.trace.vertices("root", format!("χ(G[A(z)]) = {chi_a}"), vec![z]);
        }
        let mut q = vec![z];
        if search.extend(&mut q, budget)? {
            witness = Some(PathWitness {
                vertices: q,
                induced: true,
                rainbow: true,
            });
            break;
        }
    }
    if let Some(w) = &witness {
        w.validate(g, Some(c))?;
    }
    Ok(GuidedOutcome {
        witness,
        c_prime,
        constants,
        backtracks: search.backtracks,
        steps: search.trace.steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn guided_examples() {
        let c5 = cycle(5).unwrap();
        let c = Colouring::new(vec![1, 2, 3, 1, 2]).unwrap();
        let out = proof_guided_search(&c5, &c, 3, &RTable::default(), &mut Budget::unlimited()).unwrap();
        let w = out.witness.unwrap();
        assert_eq!(w.len(), 3);
        w.validate(&c5, Some(&c)).unwrap();
        assert_eq!(out.c_prime, 1);

        let k4 = complete(4).unwrap();
        let c = Colouring::new(vec![1, 2, 3, 4]).unwrap();
        let out = proof_guided_search(&k4, &c, 3, &RTable::default(), &mut Budget::unlimited()).unwrap();
        assert!(out.witness.is_none());
        assert!(proof_guided_search(&k4, &c, 0, &RTable::default(), &mut Budget::unlimited()).is_err());
        let out = proof_guided_search(&k4, &c, 2, &RTable::default(), &mut Budget::unlimited()).unwrap();
        assert!(out.constants.is_some());
        assert_eq!(out.witness.unwrap().len(), 2);
    }
}
