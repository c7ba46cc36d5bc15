//! `NAME:PARAMS` graph descriptions for `--family`.
//!
//! - `cycle:5`, `path:4`, `complete:4`, `kbip:3,3`, `kneser:5,2`, `star:3`,
//!   `empty:4`, `petersen`, `grotzsch`
//! - `shift:N`: shift graph of triples of `1..=N`
//! - `mycielski:K` (from `C5`) or `mycielski:K:SPEC` (from any other spec)
//! - `random-tf:N`: random maximal triangle-free graph; needs a seed

use rainbow_core::generators::{mycielski_iterate, random_triangle_free, shift_graph_triples, standard_family, cycle, TripleVertex};
use rainbow_core::Graph;

use crate::CliError;

pub struct FamilyGraph {
    pub graph: Graph,
    /// Vertex labels for shift graphs.
    pub triples: Option<Vec<TripleVertex>>,
}

fn ints(spec: &str, text: &str) -> Result<Vec<usize>, CliError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| p.trim().parse().map_err(|_| CliError::Input(format!("family `{spec}`: `{p}` is not an integer"))))
        .collect()
}

/// Whether building `spec` needs a random seed.
pub fn is_randomised(spec: &str) -> bool {
    spec.split(':').any(|part| part == "random-tf")
}

pub fn build_family(spec: &str, seed: Option<u64>) -> Result<FamilyGraph, CliError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let plain = |graph| Ok(FamilyGraph { graph, triples: None });
    match name {
        "shift" => {
            let n: u32 = rest.parse().map_err(|_| CliError::Input(format!("family `{spec}`: expected shift:N")))?;
            let sg = shift_graph_triples(n)?;
            Ok(FamilyGraph {
                graph: sg.graph,
                triples: Some(sg.triples),
            })
        }
        "mycielski" => {
            let (times, base) = rest.split_once(':').unwrap_or((rest, ""));
            let times: usize = times
                .parse()
                .map_err(|_| CliError::Input(format!("family `{spec}`: expected mycielski:K[:BASE]")))?;
            let base = if base.is_empty() { cycle(5)? } else { build_family(base, seed)?.graph };
            plain(mycielski_iterate(&base, times)?)
        }
        "random-tf" => {
            let seed = seed.ok_or_else(|| CliError::Input(format!("family `{spec}` is random and needs --seed")))?;
            let p = ints(spec, rest)?;
            if p.len() != 1 {
                return Err(CliError::Input(format!("family `{spec}`: expected random-tf:N")));
            }
            plain(random_triangle_free(p[0], seed)?)
        }
        _ => plain(standard_family(name, &ints(spec, rest)?)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::invariants::{chromatic_number, clique_number};

    #[test]
    fn specs() {
        let m = build_family("mycielski:2", None).unwrap().graph;
        assert_eq!(m.n(), 23);
        assert_eq!(build_family("mycielski:1:cycle:5", None).unwrap().graph, rainbow_core::generators::grotzsch());
        assert_eq!(build_family("mycielski:0:petersen", None).unwrap().graph.n(), 10);
        let sg = build_family("shift:7", None).unwrap();
        assert_eq!(sg.triples.unwrap().len(), 35);
        assert_eq!(build_family("kbip:3,3", None).unwrap().graph.edge_count(), 9);
        assert!(build_family("random-tf:8", None).is_err());
        let g = build_family("random-tf:8", Some(3)).unwrap().graph;
        assert!(clique_number(&g).size() <= 2);
        assert!(is_randomised("mycielski:1:random-tf:6"));
        assert!(build_family("nosuch", None).is_err());
        assert!(build_family("cycle:x", None).is_err());
        assert_eq!(chromatic_number(&build_family("kneser:7,2", None).unwrap().graph).chi, 5);
    }
}
