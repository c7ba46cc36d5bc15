//! Dispatch from an [`ExperimentConfig`] to library operations, producing a
//! [`Report`].
//!
//! Operation names are `analyze`, `search:<op>`, `machinery:<op>`,
//! `verify:<claim>` and `hunt:<op>`, plus the named experiments listed in
//! [`NAMED_EXPERIMENTS`].

use std::time::Instant;

use serde_json::{json, Value};

use rainbow_core::generators::{random_proper_colouring, TripleVertex};
use rainbow_core::invariants::{chromatic_number_with_budget, clique_number_with_budget, girth};
use rainbow_core::lab::{
    check_aravind_with, search_stable_cover_path, verify_monotone_rainbow_3paths, verify_monotone_rainbow_3paths_in,
    verify_rainbow_max_degree, AravindOptions, AravindVerdict, DegreeVerdict, MonotoneVerdict, StableCover,
};
use rainbow_core::machinery::{
    compute_a_set, compute_b_set, constants_table, extension_candidates, grading_lemma_constructive, grading_lemma_search,
    grs_dichotomy, longest_directed_path, orient_by_colour, proof_guided_search, Grading, RTable,
};
use rainbow_core::paths::{
    all_holes, find_hole_all_runs_rainbow, find_hole_with_rainbow_run, find_induced_path, find_rainbow_hole,
    find_rainbow_induced_path,
};
use rainbow_core::{BitSet, Budget, Colouring, Error, Graph};

use crate::family::build_family;
use crate::io::{parse_colouring, parse_cover, parse_graph};
use crate::{read_file, CliError, ColouringSource, ExperimentConfig, GraphSource, InputDigests, Report, Status};

pub const NAMED_EXPERIMENTS: &[&str] = &[
    "mycielski-23-invariants",
    "mycielski-23-t5",
    "grotzsch-t4",
    "shift-deg2",
    "shift-claims",
];

type Outcome = Result<(Status, Value), CliError>;

struct Loaded {
    graph: Graph,
    triples: Option<Vec<TripleVertex>>,
}

struct Ctx<'a> {
    cfg: &'a ExperimentConfig,
    digests: InputDigests,
    budget: Budget,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result serialises")
}

fn vertices(set: &BitSet) -> Value {
    to_value(&set.to_vec())
}

impl Ctx<'_> {
    fn load_graph(&mut self, default_family: Option<&str>) -> Result<Loaded, CliError> {
        let source = match (&self.cfg.graph, default_family) {
            (Some(s), _) => s.clone(),
            (None, Some(f)) => GraphSource::Family(f.to_string()),
            (None, None) => return Err(CliError::Input("no graph given; use --graph or --family".into())),
        };
        let loaded = match source {
            GraphSource::File(path) => Loaded {
                graph: parse_graph(&read_file(&path)?).map_err(|e| match e {
                    CliError::Parse { line, msg } => CliError::Input(format!("{}: line {line}: {msg}", path.display())),
                    e => e,
                })?,
                triples: None,
            },
            GraphSource::Family(spec) => {
                let f = build_family(&spec, self.cfg.params.seed)?;
                Loaded {
                    graph: f.graph,
                    triples: f.triples,
                }
            }
        };
        self.digests.graph = Some(loaded.graph.digest());
        Ok(loaded)
    }

    fn load_colouring(&mut self, g: &Loaded, default: Option<ColouringSource>) -> Result<Colouring, CliError> {
        let source = self
            .cfg
            .colouring
            .clone()
            .or(default)
            .ok_or_else(|| CliError::Input("no colouring given; use --colouring".into()))?;
        let c = match source {
            ColouringSource::File(path) => parse_colouring(&read_file(&path)?, g.graph.n()).map_err(|e| match e {
                CliError::Parse { line, msg } => CliError::Input(format!("{}: line {line}: {msg}", path.display())),
                e => e,
            })?,
            ColouringSource::Middle => match &g.triples {
                Some(t) => rainbow_core::generators::middle_element_colouring(t),
                None => return Err(CliError::Input("`middle` colouring needs a shift:N family".into())),
            },
            ColouringSource::Random => {
                let palette = match self.cfg.params.palette {
                    Some(p) => p,
                    None => chromatic_number_with_budget(&g.graph, &mut self.budget)?.chi.max(1) as u32,
                };
                random_proper_colouring(&g.graph, palette, self.cfg.params.seed.unwrap_or(0))?
            }
            ColouringSource::Optimal => chromatic_number_with_budget(&g.graph, &mut self.budget)?.partition.to_colouring(),
            ColouringSource::Enumerate => {
                return Err(CliError::Input("`enumerate` is only valid for colouring-wide checks".into()))
            }
        };
        c.check_graph(&g.graph)?;
        self.digests.colouring = Some(c.digest());
        Ok(c)
    }

    fn need<T: Copy>(&self, name: &str, v: Option<T>) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Input(format!("{} needs --{name}", self.cfg.experiment)))
    }

    fn grading(&self, g: &Graph) -> Result<Grading, CliError> {
        let blocks = self
            .cfg
            .params
            .blocks
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("{} needs --blocks", self.cfg.experiment)))?;
        let mut sets = Vec::with_capacity(blocks.len());
        for b in blocks {
            let set: BitSet = b.iter().collect();
            g.check_set(&set)?;
            sets.push(set);
        }
        Ok(Grading::new(g, sets)?)
    }

    fn path_arg(&self) -> Result<Vec<usize>, CliError> {
        self.cfg
            .params
            .q
            .clone()
            .ok_or_else(|| CliError::Input(format!("{} needs --q", self.cfg.experiment)))
    }

    fn r_table(&self) -> Result<RTable, CliError> {
        Ok(match &self.cfg.params.r_table {
            Some(t) => RTable::parse_overrides(t)?,
            None => RTable::default(),
        })
    }
}

fn analyze(ctx: &mut Ctx<'_>, default_family: Option<&str>) -> Outcome {
    let l = ctx.load_graph(default_family)?;
    let g = &l.graph;
    let omega = clique_number_with_budget(g, &mut ctx.budget)?;
    let chi = chromatic_number_with_budget(g, &mut ctx.budget)?;
    Ok((
        Status::Ok,
        json!({
            "n": g.n(),
            "m": g.edge_count(),
            "max_degree": g.max_degree(),
            "chi": chi.chi,
            "omega": omega.size(),
            "girth": girth(g),
            "max_clique": vertices(&omega.clique),
            "optimal_colouring": to_value(&chi.partition),
        }),
    ))
}

fn aravind(ctx: &mut Ctx<'_>, g: &Graph, t: Option<usize>) -> Outcome {
    let t = match t {
        Some(t) => t,
        None => chromatic_number_with_budget(g, &mut ctx.budget)?.chi,
    };
    let p = &ctx.cfg.params;
    let mut opts = AravindOptions {
        jobs: p.jobs.unwrap_or(1),
        checkpoint: p.checkpoint.clone(),
        ..AravindOptions::default()
    };
    if let Some(d) = p.split_depth {
        opts.split_depth = d;
    }
    let out = check_aravind_with(g, t, &opts, &mut ctx.budget)?;
    let status = match out.verdict {
        AravindVerdict::BudgetExhausted => Status::BudgetExhausted,
        _ => Status::Ok,
    };
    let mut value = to_value(&out);
    value["t"] = json!(t);
    Ok((status, value))
}

fn shift_claims(n: u32, budget: &mut Budget) -> Outcome {
    let sg = rainbow_core::generators::shift_graph_triples(n)?;
    let (g, c) = (&sg.graph, sg.middle_element_colouring());
    let rainbow_hole = find_rainbow_hole(g, &c, budget)?;
    let run = find_hole_with_rainbow_run(g, &c, 3, budget)?;
    let all_runs = find_hole_all_runs_rainbow(g, &c, 3, budget)?;
    Ok((
        Status::Ok,
        json!({
            "n": n,
            "vertices": g.n(),
            "edges": g.edge_count(),
            "middle_colouring_proper": rainbow_core::is_proper(g, &c)?,
            "rainbow_max_degree_2": to_value(&verify_rainbow_max_degree(g, &c, 2)?),
            "rainbow_hole": to_value(&rainbow_hole),
            "hole_with_rainbow_3_run": run.map(|(h, start)| json!({"hole": h, "start": start, "triples": h.vertices.iter().map(|&v| sg.triples[v]).collect::<Vec<_>>()})),
            "hole_with_all_3_runs_rainbow": to_value(&all_runs),
            "monotone_rainbow_3paths": to_value(&verify_monotone_rainbow_3paths(n)?),
        }),
    ))
}

fn search(ctx: &mut Ctx<'_>, op: &str) -> Outcome {
    let l = ctx.load_graph(None)?;
    let g = &l.graph;
    let p = ctx.cfg.params.clone();
    let value = match op {
        "rainbow-path" if ctx.cfg.colouring == Some(ColouringSource::Enumerate) => {
            let s = ctx.need("s", p.s)?;
            return aravind(ctx, g, Some(s));
        }
        "rainbow-path" => {
            let c = ctx.load_colouring(&l, None)?;
            let s = ctx.need("s", p.s)?;
            json!({ "witness": find_rainbow_induced_path(g, &c, s, &mut ctx.budget)? })
        }
        "induced-path" => {
            let s = ctx.need("s", p.s)?;
            json!({ "witness": find_induced_path(g, s, &mut ctx.budget)? })
        }
        "rainbow-hole" => {
            let c = ctx.load_colouring(&l, None)?;
            json!({ "witness": find_rainbow_hole(g, &c, &mut ctx.budget)? })
        }
        "hole-run" => {
            let c = ctx.load_colouring(&l, None)?;
            let s = ctx.need("s", p.s)?;
            match find_hole_with_rainbow_run(g, &c, s, &mut ctx.budget)? {
                Some((h, start)) => json!({ "witness": h, "start": start }),
                None => json!({ "witness": null }),
            }
        }
        "hole-all-runs" => {
            let c = ctx.load_colouring(&l, None)?;
            let s = ctx.need("s", p.s)?;
            json!({ "witness": find_hole_all_runs_rainbow(g, &c, s, &mut ctx.budget)? })
        }
        "holes" => {
            let holes = all_holes(g, &mut ctx.budget)?;
            json!({ "count": holes.len(), "holes": holes })
        }
        _ => return Err(CliError::Input(format!("unknown search operation `{op}`"))),
    };
    Ok((Status::Ok, value))
}

fn machinery(ctx: &mut Ctx<'_>, op: &str) -> Outcome {
    let p = ctx.cfg.params.clone();
    if op == "constants" {
        let s = ctx.need("s", p.s)? as u64;
        let value = match constants_table(s, p.kappa.unwrap_or(2), ctx.need("r", p.r)?, ctx.need("c-prime", p.c_prime)?) {
            Ok(t) => json!({ "table": t }),
            Err(e @ Error::Overflow(_)) => json!({ "overflow": e.to_string() }),
            Err(e) => return Err(e.into()),
        };
        return Ok((Status::Ok, value));
    }
    let l = ctx.load_graph(None)?;
    let g = &l.graph;
    let value = match op {
        "grs" => json!({ "outcome": grs_dichotomy(g, ctx.need("s", p.s)?, &mut ctx.budget)? }),
        _ => {
            let c = ctx.load_colouring(&l, None)?;
            match op {
                "orient" => {
                    let o = orient_by_colour(g, &c)?;
                    let path = longest_directed_path(&o)?;
                    json!({ "arcs": o.arcs(), "acyclic": o.is_acyclic(), "longest_path": path, "path_len": path.len() })
                }
                "a-set" => {
                    let z = ctx.need("z", p.z)?;
                    json!({ "z": z, "a_set": vertices(&compute_a_set(g, &c, z, &mut ctx.budget)?) })
                }
                "b-set" => {
                    let q = ctx.path_arg()?;
                    json!({ "q": q, "b_set": vertices(&compute_b_set(g, &c, &q, &mut ctx.budget)?) })
                }
                "candidates" => {
                    let q = ctx.path_arg()?;
                    json!({ "q": q, "candidates": vertices(&extension_candidates(g, &c, &q)?) })
                }
                "grading-search" => {
                    let grading = ctx.grading(g)?;
                    let s = ctx.need("s", p.s)?;
                    json!({ "w": grading.w(), "witness": grading_lemma_search(g, &c, &grading, s)? })
                }
                "grading-constructive" => {
                    let grading = ctx.grading(g)?;
                    let s = ctx.need("s", p.s)?;
                    let out = grading_lemma_constructive(g, &c, &grading, s, ctx.need("r", p.r)?, &mut ctx.budget)?;
                    json!({ "w": grading.w(), "outcome": out })
                }
                "guided" => {
                    let s = ctx.need("s", p.s)?;
                    to_value(&proof_guided_search(g, &c, s, &ctx.r_table()?, &mut ctx.budget)?)
                }
                _ => return Err(CliError::Input(format!("unknown machinery operation `{op}`"))),
            }
        }
    };
    Ok((Status::Ok, value))
}

fn verify(ctx: &mut Ctx<'_>, claim: &str) -> Outcome {
    let p = ctx.cfg.params.clone();
    match claim {
        "max-degree" => {
            let l = ctx.load_graph(None)?;
            let c = ctx.load_colouring(&l, Some(ColouringSource::Middle))?;
            let d = p.d.unwrap_or(2);
            Ok((Status::Ok, json!({ "d": d, "result": verify_rainbow_max_degree(&l.graph, &c, d)? })))
        }
        "monotone" => {
            let verdict: MonotoneVerdict = if ctx.cfg.graph.is_some() {
                let l = ctx.load_graph(None)?;
                let c = ctx.load_colouring(&l, Some(ColouringSource::Middle))?;
                verify_monotone_rainbow_3paths_in(&l.graph, &c)?
            } else {
                verify_monotone_rainbow_3paths(ctx.need("n", p.n)?)?
            };
            Ok((Status::Ok, json!({ "result": verdict })))
        }
        "shift-claims" => shift_claims(ctx.need("n", p.n)?, &mut ctx.budget),
        "aravind" => {
            let l = ctx.load_graph(None)?;
            aravind(ctx, &l.graph, p.t)
        }
        _ => Err(CliError::Input(format!("unknown claim `{claim}`"))),
    }
}

fn hunt(ctx: &mut Ctx<'_>, op: &str) -> Outcome {
    let p = ctx.cfg.params.clone();
    let l = ctx.load_graph(None)?;
    match op {
        "aravind" => aravind(ctx, &l.graph, p.t),
        "stable-cover" => {
            let path = p
                .cover
                .as_ref()
                .ok_or_else(|| CliError::Input("stable-cover needs --cover FILE".into()))?;
            let cover = StableCover::new(&l.graph, parse_cover(&read_file(path)?, l.graph.n())?)?;
            let s = ctx.need("s", p.s)?;
            let found = search_stable_cover_path(&l.graph, &cover, s, &mut ctx.budget)?;
            Ok((Status::Ok, json!({ "witness": found })))
        }
        _ => Err(CliError::Input(format!("unknown hunt operation `{op}`"))),
    }
}

fn dispatch(ctx: &mut Ctx<'_>) -> Outcome {
    let name = ctx.cfg.experiment.clone();
    let (kind, op) = name.split_once(':').unwrap_or((name.as_str(), ""));
    match kind {
        "analyze" => analyze(ctx, None),
        "search" => search(ctx, op),
        "machinery" => machinery(ctx, op),
        "verify" => verify(ctx, op),
        "hunt" => hunt(ctx, op),
        "gen" => {
            let l = ctx.load_graph(None)?;
            if ctx.cfg.colouring.is_some() {
                ctx.load_colouring(&l, None)?;
            }
            Ok((Status::Ok, json!({ "n": l.graph.n(), "m": l.graph.edge_count() })))
        }
        "mycielski-23-invariants" => analyze(ctx, Some("mycielski:2")),
        "mycielski-23-t5" => {
            let l = ctx.load_graph(Some("mycielski:2"))?;
            aravind(ctx, &l.graph, Some(ctx.cfg.params.t.unwrap_or(5)))
        }
        "grotzsch-t4" => {
            let l = ctx.load_graph(Some("grotzsch"))?;
            aravind(ctx, &l.graph, Some(ctx.cfg.params.t.unwrap_or(4)))
        }
        "shift-deg2" => {
            let n = ctx.cfg.params.n.unwrap_or(7);
            let sg = rainbow_core::generators::shift_graph_triples(n)?;
            let c = sg.middle_element_colouring();
            ctx.digests.graph = Some(sg.graph.digest());
            ctx.digests.colouring = Some(c.digest());
            let verdict = verify_rainbow_max_degree(&sg.graph, &c, 2)?;
            let label = match &verdict {
                DegreeVerdict::Verified => "verified",
                DegreeVerdict::Violation(_) => "violation",
            };
            Ok((Status::Ok, json!({ "n": n, "d": 2, "verdict": label, "result": verdict })))
        }
        "shift-claims" => shift_claims(ctx.cfg.params.n.unwrap_or(7), &mut ctx.budget),
        _ => Err(CliError::Input(format!(
            "unknown experiment `{name}`; named experiments: {}",
            NAMED_EXPERIMENTS.join(", ")
        ))),
    }
}

/// Runs `cfg` and reports the outcome. Never panics on bad input: errors
/// become an `input_error` report, budget exhaustion a `budget_exhausted` one.
pub fn run_experiment(cfg: &ExperimentConfig) -> Report {
    let started = Instant::now();
    let mut ctx = Ctx {
        cfg,
        digests: InputDigests::default(),
        budget: cfg.params.budget.map_or_else(Budget::unlimited, Budget::new),
    };
    let outcome = cfg.validate().and_then(|()| dispatch(&mut ctx));
    let (status, result, error) = match outcome {
        Ok((status, value)) => (status, value, None),
        Err(CliError::Core(e @ Error::BudgetExhausted { .. })) => (
            Status::BudgetExhausted,
            json!({ "nodes": ctx.budget.used() }),
            Some(e.to_string()),
        ),
        Err(e) => (Status::InputError, Value::Null, Some(e.to_string())),
    };
    Report {
        operation: cfg.experiment.clone(),
        version: env!("CARGO_PKG_VERSION"),
        status,
        config: cfg.clone(),
        inputs: ctx.digests,
        elapsed_ms: started.elapsed().as_millis() as u64,
        error,
        result,
    }
}
