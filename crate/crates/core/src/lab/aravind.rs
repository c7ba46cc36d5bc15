//! Exhaustive check that every proper colouring of a graph contains a rainbow
//! induced path on `t` vertices.
//!
//! Colourings are enumerated as partitions into independent sets, built one
//! vertex at a time. A partial colouring that already contains a rainbow
//! induced `t`-path is pruned: colouring more vertices cannot destroy it.
//! Only paths through the newly coloured vertex need checking, since the
//! parent node had none.
//!
//! The tree is cut at a fixed depth into jobs (prefixes of the partition) that
//! run independently, optionally in parallel, and are recorded in a checkpoint
//! file as they finish.

use std::collections::HashSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{ColourPartition, Graph};
use crate::lab::partitions::enumerate_colour_partitions;
use crate::paths::find_rainbow_induced_path;

/// Largest graph the bit-parallel engine handles.
pub const MAX_VERTICES: usize = 64;

/// Nodes counted locally before they are published to the shared counter.
const FLUSH: u64 = 1 << 12;

#[derive(Debug, Clone)]
pub struct AravindOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Number of leading vertices fixed per job.
    pub split_depth: usize,
    /// Resume from and record progress in this file.
    pub checkpoint: Option<PathBuf>,
}

impl Default for AravindOptions {
    fn default() -> Self {
        AravindOptions {
            jobs: 1,
            split_depth: 6,
            checkpoint: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Partial colourings visited in this run.
    pub nodes: u64,
    /// Partial colourings cut off because they already contain the path.
    pub prunes: u64,
    /// Nodes including earlier runs recorded in the checkpoint.
    pub nodes_total: u64,
    pub prunes_total: u64,
    pub jobs_total: u64,
    pub jobs_done: u64,
    /// Jobs skipped because the checkpoint lists them as done.
    pub jobs_resumed: u64,
    pub elapsed_ms: u64,
    pub elapsed_total_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub graph_digest: String,
    pub partition: ColourPartition,
    pub t: usize,
    pub stats: SearchStats,
}

impl CounterexampleReport {
    /// The partition is proper and exhaustive search finds no rainbow induced
    /// `t`-path under it.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.digest() != self.graph_digest {
            return Err(Error::InvalidWitness("counterexample is for a different graph".into()));
        }
        let p = ColourPartition::new(g, self.partition.blocks().to_vec())?;
        let c = p.to_colouring();
        if let Some(w) = find_rainbow_induced_path(g, &c, self.t, &mut Budget::unlimited())? {
            return Err(Error::InvalidWitness(format!(
                "claimed counterexample contains rainbow induced path {:?}",
                w.vertices
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AravindVerdict {
    Holds,
    Counterexample(CounterexampleReport),
    BudgetExhausted,
}

#[derive(Debug, Clone, Serialize)]
pub struct AravindOutcome {
    pub verdict: AravindVerdict,
    pub stats: SearchStats,
    /// Vertices in the order they are coloured.
    pub order: Vec<usize>,
}

/// Colours vertices so each one has as many already-coloured neighbours as
/// possible, which makes paths appear (and prunes fire) early.
fn colouring_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut chosen = BitSet::new();
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !chosen.contains(v))
            .max_by_key(|&v| (g.neighbours(v).intersection(&chosen).len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        chosen.insert(v);
        order.push(v);
    }
    order
}

struct Engine {
    n: usize,
    t: usize,
    /// Adjacency in colouring order.
    nb: Vec<u64>,
}

#[derive(Clone)]
struct State {
    block_of: Vec<u8>,
    blocks: Vec<u64>,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            block_of: vec![0; n],
            blocks: Vec::with_capacity(n),
        }
    }

    fn assign(&mut self, v: usize, b: usize) {
        if b == self.blocks.len() {
            self.blocks.push(0);
        }
        self.blocks[b] |= 1 << v;
        self.block_of[v] = b as u8;
    }

    fn unassign(&mut self, v: usize, b: usize) {
        self.blocks[b] &= !(1 << v);
        if self.blocks[b] == 0 {
            self.blocks.pop();
        }
    }
}

struct Shared<'a> {
    limit: Option<u64>,
    spent: AtomicU64,
    prunes: AtomicU64,
    stop: AtomicBool,
    /// Lowest job index that has produced a counterexample.
    found_job: AtomicUsize,
    checkpoint: Option<&'a Mutex<CheckpointWriter>>,
}

struct Worker<'s, 'a> {
    shared: &'s Shared<'a>,
    job: usize,
    local_nodes: u64,
    local_prunes: u64,
}

enum Flow {
    Continue,
    Found(Vec<u8>),
    Abort,
}

impl Worker<'_, '_> {
    fn flush(&mut self) -> bool {
        let total = self.shared.spent.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.shared.prunes.fetch_add(self.local_prunes, Ordering::Relaxed);
        self.local_nodes = 0;
        self.local_prunes = 0;
        if matches!(self.shared.limit, Some(l) if total > l) {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        !self.shared.stop.load(Ordering::Relaxed) && self.shared.found_job.load(Ordering::Relaxed) >= self.job
    }
}

impl Engine {
    fn new(g: &Graph, order: &[usize], t: usize) -> Self {
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let nb = order
            .iter()
            .map(|&v| g.neighbours(v).iter().fold(0u64, |m, u| m | 1 << pos[u]))
            .collect();
        Engine { n: g.n(), t, nb }
    }

    /// Whether vertices `0..=v`, coloured by `st`, contain a rainbow induced
    /// `t`-path through `v`.
    fn path_through(&self, st: &State, v: usize) -> bool {
        if self.t <= 1 {
            return true;
        }
        let coloured = if v == 63 { u64::MAX } else { (1u64 << (v + 1)) - 1 };
        let used = 1u64 << st.block_of[v];
        self.grow(st, coloured, 1 << v, used, v, v, 1, true)
    }

    /// Grows the path at its right end, then at its left end.
    #[allow(clippy::too_many_arguments)]
    fn grow(&self, st: &State, coloured: u64, set: u64, used: u64, left: usize, right: usize, len: usize, at_right: bool) -> bool {
        if len == self.t {
            return true;
        }
        let end = if at_right { right } else { left };
        let mut cand = self.nb[end] & coloured & !set;
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let colour = 1u64 << st.block_of[x];
            if used & colour != 0 || self.nb[x] & set != 1 << end {
                continue;
            }
            let (l, r) = if at_right { (left, x) } else { (x, right) };
            if self.grow(st, coloured, set | 1 << x, used | colour, l, r, len + 1, at_right) {
                return true;
            }
        }
        at_right && len > 1 && self.grow(st, coloured, set, used, left, right, len, false)
    }

    /// Depth-first over colourings of vertices `k..n` below `st`.
    fn dfs(&self, st: &mut State, k: usize, w: &mut Worker<'_, '_>) -> Flow {
        let nblocks = st.blocks.len();
        for b in 0..=nblocks {
            if b < nblocks && st.blocks[b] & self.nb[k] != 0 {
                continue;
            }
            w.local_nodes += 1;
            if w.local_nodes >= FLUSH && !w.flush() {
                return Flow::Abort;
            }
            st.assign(k, b);
            let flow = if self.path_through(st, k) {
                w.local_prunes += 1;
                Flow::Continue
            } else if k + 1 == self.n {
                Flow::Found(st.block_of.clone())
            } else {
                self.dfs(st, k + 1, w)
            };
            st.unassign(k, b);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    /// Unpruned partial colourings of the first `depth` vertices, in order.
    fn frontier(&self, st: &mut State, k: usize, depth: usize, out: &mut Vec<Vec<u8>>, w: &mut Worker<'_, '_>) -> bool {
        if k == depth {
            out.push(st.block_of[..depth].to_vec());
            return true;
        }
        let nblocks = st.blocks.len();
        for b in 0..=nblocks {
            if b < nblocks && st.blocks[b] & self.nb[k] != 0 {
                continue;
            }
            w.local_nodes += 1;
            if w.local_nodes >= FLUSH && !w.flush() {
                return false;
            }
            st.assign(k, b);
            let ok = if self.path_through(st, k) {
                w.local_prunes += 1;
                true
            } else {
                self.frontier(st, k + 1, depth, out, w)
            };
            st.unassign(k, b);
            if !ok {
                return false;
            }
        }
        true
    }
}

fn prefix_key(prefix: &[u8]) -> String {
    prefix.iter().map(u8::to_string).collect::<Vec<_>>().join(".")
}

/// Checkpoint file: `#` header lines naming the graph digest, `t`, split
/// depth and vertex order; one finished job prefix per line (dot-separated
/// block indices in colouring order); and a `[stats]` block.
#[derive(Debug, Default)]
struct CheckpointData {
    done: Vec<String>,
    nodes: u64,
    prunes: u64,
    elapsed_ms: u64,
}

fn header(digest: &str, t: usize, depth: usize, order: &[usize]) -> Vec<String> {
    vec![
        "# rainbow-path colouring search checkpoint".to_string(),
        format!("# graph {digest}"),
        format!("# t {t}"),
        format!("# depth {depth}"),
        format!("# order {}", order.iter().map(usize::to_string).collect::<Vec<_>>().join(".")),
    ]
}

fn read_checkpoint(path: &Path, expected_header: &[String]) -> Result<Option<CheckpointData>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::InvalidParameter(format!("cannot read checkpoint {}: {e}", path.display()))),
    };
    let bad = |msg: String| Error::InvalidParameter(format!("checkpoint {}: {msg}", path.display()));
    let lines: Vec<&str> = text.lines().collect();
    let head: Vec<&str> = lines.iter().copied().take_while(|l| l.starts_with('#')).collect();
    if head.len() != expected_header.len() || head.iter().zip(expected_header).any(|(a, b)| a.trim() != b) {
        return Err(bad("header does not match this graph, t, depth and order".into()));
    }
    let mut data = CheckpointData::default();
    let mut in_stats = false;
    for (i, line) in lines.iter().enumerate().skip(head.len()) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "[stats]" {
            in_stats = true;
            continue;
        }
        if in_stats {
            let (key, value) = line.split_once(' ').ok_or_else(|| bad(format!("line {}: malformed stat", i + 1)))?;
            let value: u64 = value.trim().parse().map_err(|_| bad(format!("line {}: bad number", i + 1)))?;
            match key {
                "nodes" => data.nodes = value,
                "prunes" => data.prunes = value,
                "elapsed_ms" => data.elapsed_ms = value,
                _ => {}
            }
        } else if line.split('.').all(|p| p.parse::<u8>().is_ok()) {
            data.done.push(line.to_string());
        } else {
            return Err(bad(format!("line {}: malformed prefix `{line}`", i + 1)));
        }
    }
    Ok(Some(data))
}

struct CheckpointWriter {
    path: PathBuf,
    header: Vec<String>,
    done: Vec<String>,
    base_nodes: u64,
    base_prunes: u64,
    base_elapsed: u64,
    started: Instant,
    last_write: Instant,
}

impl CheckpointWriter {
    fn write(&mut self, nodes: u64, prunes: u64) -> Result<()> {
        let tmp = self.path.with_extension("tmp");
        let io = |e: std::io::Error| Error::InvalidParameter(format!("cannot write checkpoint {}: {e}", self.path.display()));
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp).map_err(io)?);
        for line in self.header.iter().chain(&self.done) {
            writeln!(f, "{line}").map_err(io)?;
        }
        writeln!(f, "[stats]").map_err(io)?;
        writeln!(f, "nodes {}", self.base_nodes + nodes).map_err(io)?;
        writeln!(f, "prunes {}", self.base_prunes + prunes).map_err(io)?;
        writeln!(f, "elapsed_ms {}", self.base_elapsed + self.started.elapsed().as_millis() as u64).map_err(io)?;
        f.flush().map_err(io)?;
        drop(f);
        fs::rename(&tmp, &self.path).map_err(io)?;
        self.last_write = Instant::now();
        Ok(())
    }
}

/// Checks that every proper colouring of `g` contains a rainbow induced path
/// on `t` vertices, with default options.
pub fn check_aravind(g: &Graph, t: usize, budget: &mut Budget) -> Result<AravindOutcome> {
    check_aravind_with(g, t, &AravindOptions::default(), budget)
}

/// As [`check_aravind`], with parallelism and checkpointing.
///
/// A counterexample, when several exist, is the first in colouring order as
/// long as the search is not cut short by the budget. Budget accounting is
/// batched, so a run may overshoot its limit by a few thousand nodes per
/// worker.
pub fn check_aravind_with(g: &Graph, t: usize, opts: &AravindOptions, budget: &mut Budget) -> Result<AravindOutcome> {
    let started = Instant::now();
    if t < 1 {
        return Err(Error::InvalidParameter("path length t must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph must have at least one vertex".into()));
    }
    if g.n() > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "colouring search supports at most {MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    let order = colouring_order(g);
    let engine = Engine::new(g, &order, t);
    let depth = opts.split_depth.min(g.n() - 1);
    let digest = g.digest();
    let head = header(&digest, t, depth, &order);

    let previous = match &opts.checkpoint {
        Some(path) => read_checkpoint(path, &head)?,
        None => None,
    };
    let resumed = previous.is_some();
    let previous = previous.unwrap_or_default();
    let writer = opts.checkpoint.as_ref().map(|path| {
        Mutex::new(CheckpointWriter {
            path: path.clone(),
            header: head.clone(),
            done: previous.done.clone(),
            base_nodes: previous.nodes,
            base_prunes: previous.prunes,
            base_elapsed: previous.elapsed_ms,
            started,
            last_write: started,
        })
    });
    let shared = Shared {
        limit: budget.remaining(),
        spent: AtomicU64::new(0),
        prunes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        found_job: AtomicUsize::new(usize::MAX),
        checkpoint: writer.as_ref(),
    };

    let mut jobs = Vec::new();
    let mut w = Worker {
        shared: &shared,
        job: 0,
        local_nodes: 0,
        local_prunes: 0,
    };
    let complete = engine.frontier(&mut State::new(g.n()), 0, depth, &mut jobs, &mut w);
    w.flush();
    let done: HashSet<&str> = previous.done.iter().map(String::as_str).collect();
    let pending: Vec<(usize, &Vec<u8>)> = jobs.iter().enumerate().filter(|(_, p)| !done.contains(prefix_key(p).as_str())).collect();
    let jobs_resumed = (jobs.len() - pending.len()) as u64;

    let found: Mutex<Option<(usize, Vec<u8>)>> = Mutex::new(None);
    let jobs_done = AtomicU64::new(jobs_resumed);
    let write_error: Mutex<Option<Error>> = Mutex::new(None);
    let run_job = |&(index, prefix): &(usize, &Vec<u8>)| {
        if shared.stop.load(Ordering::Relaxed) || shared.found_job.load(Ordering::Relaxed) < index {
            return;
        }
        let mut st = State::new(g.n());
        for (v, &b) in prefix.iter().enumerate() {
            st.assign(v, b as usize);
        }
        let mut w = Worker {
            shared: &shared,
            job: index,
            local_nodes: 0,
            local_prunes: 0,
        };
        let flow = engine.dfs(&mut st, depth, &mut w);
        w.flush();
        match flow {
            Flow::Found(blocks) => {
                shared.found_job.fetch_min(index, Ordering::Relaxed);
                let mut slot = found.lock().unwrap();
                if slot.as_ref().is_none_or(|(j, _)| index < *j) {
                    *slot = Some((index, blocks));
                }
            }
            Flow::Abort => {}
            Flow::Continue => {
                jobs_done.fetch_add(1, Ordering::Relaxed);
                if let Some(cp) = shared.checkpoint {
                    let mut cp = cp.lock().unwrap();
                    cp.done.push(prefix_key(prefix));
                    if cp.last_write.elapsed() >= Duration::from_secs(1) {
                        if let Err(e) = cp.write(shared.spent.load(Ordering::Relaxed), shared.prunes.load(Ordering::Relaxed)) {
                            write_error.lock().unwrap().get_or_insert(e);
                            shared.stop.store(true, Ordering::Relaxed);
                        }
                    }
                }
            }
        }
    };
    if complete {
        if opts.jobs <= 1 {
            pending.iter().for_each(run_job);
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
            pool.install(|| pending.par_iter().for_each(run_job));
        }
    }
    if let Some(e) = write_error.into_inner().unwrap() {
        return Err(e);
    }

    let nodes = shared.spent.load(Ordering::Relaxed);
    let prunes = shared.prunes.load(Ordering::Relaxed);
    if let Some(cp) = &writer {
        cp.lock().unwrap().write(nodes, prunes)?;
    }
    let _ = budget.charge(nodes);
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let stats = SearchStats {
        nodes,
        prunes,
        nodes_total: previous.nodes + nodes,
        prunes_total: previous.prunes + prunes,
        jobs_total: jobs.len() as u64,
        jobs_done: jobs_done.load(Ordering::Relaxed),
        jobs_resumed: if resumed { jobs_resumed } else { 0 },
        elapsed_ms,
        elapsed_total_ms: previous.elapsed_ms + elapsed_ms,
    };

    let verdict = if let Some((_, blocks)) = found.into_inner().unwrap() {
        let mut classes = vec![BitSet::new(); blocks.iter().map(|&b| b as usize + 1).max().unwrap_or(0)];
        for (k, &b) in blocks.iter().enumerate() {
            classes[b as usize].insert(order[k]);
        }
        let report = CounterexampleReport {
            graph_digest: digest,
            partition: ColourPartition::new(g, classes)?,
            t,
            stats: stats.clone(),
        };
        report.validate(g)?;
        AravindVerdict::Counterexample(report)
    } else if shared.stop.load(Ordering::Relaxed) || !complete {
        AravindVerdict::BudgetExhausted
    } else {
        AravindVerdict::Holds
    };
    Ok(AravindOutcome { verdict, stats, order })
}

/// Reference check without pruning: every partition into independent sets is
/// tested with the plain path search. Returns the first colouring lacking the
/// path, or `None` when the statement holds.
pub fn check_aravind_unpruned(g: &Graph, t: usize, budget: &mut Budget) -> Result<Option<ColourPartition>> {
    if t < 1 {
        return Err(Error::InvalidParameter("path length t must be at least 1".into()));
    }
    for p in enumerate_colour_partitions(g) {
        budget.tick()?;
        if find_rainbow_induced_path(g, &p.to_colouring(), t, budget)?.is_none() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, grotzsch, mycielski_iterate, path, petersen};

    fn verdict(g: &Graph, t: usize) -> AravindVerdict {
        check_aravind(g, t, &mut Budget::unlimited()).unwrap().verdict
    }

    #[test]
    fn small_verdicts() {
        assert!(matches!(verdict(&cycle(5).unwrap(), 3), AravindVerdict::Holds));
        assert!(matches!(verdict(&complete(2).unwrap(), 2), AravindVerdict::Holds));
        assert!(matches!(verdict(&complete(4).unwrap(), 1), AravindVerdict::Holds));
        // K4 has no induced 3-path at all.
        match verdict(&complete(4).unwrap(), 3) {
            AravindVerdict::Counterexample(r) => assert_eq!(r.partition.num_blocks(), 4),
            v => panic!("expected counterexample, got {v:?}"),
        }
        // Colouring P4 as 1,2,1,2 leaves no rainbow 3-path.
        assert!(matches!(verdict(&path(4).unwrap(), 3), AravindVerdict::Counterexample(_)));
        assert!(check_aravind(&Graph::empty(0).unwrap(), 1, &mut Budget::unlimited()).is_err());
    }

    #[test]
    fn grotzsch_is_fine_at_t4() {
        let out = check_aravind(&grotzsch(), 4, &mut Budget::unlimited()).unwrap();
        assert!(matches!(out.verdict, AravindVerdict::Holds), "{:?}", out.stats);
    }

    #[test]
    fn agrees_with_unpruned() {
        for (g, t) in [(petersen(), 3), (petersen(), 4), (cycle(6).unwrap(), 3), (path(5).unwrap(), 3)] {
            let fast = verdict(&g, t);
            let slow = check_aravind_unpruned(&g, t, &mut Budget::unlimited()).unwrap();
            match (fast, slow) {
                (AravindVerdict::Holds, None) => {}
                (AravindVerdict::Counterexample(r), Some(p)) => assert_eq!(r.partition.rgs().len(), p.rgs().len()),
                (f, s) => panic!("disagreement: {f:?} vs {s:?}"),
            }
        }
    }

    #[test]
    fn budget_and_parallel() {
        let g = petersen();
        let out = check_aravind(&g, 6, &mut Budget::new(10)).unwrap();
        assert!(matches!(out.verdict, AravindVerdict::BudgetExhausted));
        let seq = check_aravind(&g, 5, &mut Budget::unlimited()).unwrap();
        let opts = AravindOptions {
            jobs: 3,
            split_depth: 3,
            checkpoint: None,
        };
        let par = check_aravind_with(&g, 5, &opts, &mut Budget::unlimited()).unwrap();
        match (seq.verdict, par.verdict) {
            (AravindVerdict::Counterexample(a), AravindVerdict::Counterexample(b)) => assert_eq!(a.partition, b.partition),
            (AravindVerdict::Holds, AravindVerdict::Holds) => {}
            (a, b) => panic!("{a:?} vs {b:?}"),
        }
    }

    #[test]
    fn checkpoint_resume() {
        let dir = std::env::temp_dir().join(format!("rainbow-cp-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("grotzsch.ckpt");
        let _ = fs::remove_file(&path);
        let opts = AravindOptions {
            jobs: 1,
            split_depth: 8,
            checkpoint: Some(path.clone()),
        };
        let g = mycielski_iterate(&cycle(5).unwrap(), 2).unwrap();
        let first = check_aravind_with(&g, 5, &opts, &mut Budget::new(20_000)).unwrap();
        assert!(matches!(first.verdict, AravindVerdict::BudgetExhausted));
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.contains("[stats]") && text.contains(&g.digest()));
        assert!(first.stats.jobs_done > 0 && first.stats.jobs_done < first.stats.jobs_total);
        let second = check_aravind_with(&g, 5, &opts, &mut Budget::unlimited()).unwrap();
        assert!(matches!(second.verdict, AravindVerdict::Holds));
        assert_eq!(second.stats.jobs_resumed, first.stats.jobs_done);
        assert_eq!(second.stats.jobs_done, second.stats.jobs_total);
        // A different t does not match the header.
        assert!(check_aravind_with(&g, 4, &opts, &mut Budget::unlimited()).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
