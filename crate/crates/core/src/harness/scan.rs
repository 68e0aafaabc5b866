use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_cap, exact_delta, HarnessError};
use crate::exact::ldlt_inertia;
use crate::graph::{build_family, graph_stats, random_unicyclic, FamilySpec, Graph};
use crate::rng::SplitMix64;
use crate::REPORT_SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub samples: usize,
    pub max_n: usize,
    pub seed: u64,
}

/// One graph checked against `l <= i- <= l + q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: usize,
    /// `"random"` or `"probe:<name>"`.
    pub source: String,
    /// Per-graph seed; 0 for probes.
    pub seed: u64,
    pub n: usize,
    pub graph: Graph,
    pub l: usize,
    pub q: usize,
    pub i_minus: usize,
    pub lo: usize,
    pub hi: usize,
    pub in_bounds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub total: usize,
    pub in_bounds: usize,
    pub out_of_bounds: usize,
    /// Indices of out-of-bounds records.
    pub violations: Vec<usize>,
    pub at_lower: usize,
    pub at_upper: usize,
}

/// Lines of the JSONL stream, tagged by `"type"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ScanLine {
    Header {
        schema: String,
        samples: usize,
        max_n: usize,
        seed: u64,
        rng: String,
        model: String,
        probes: Vec<String>,
    },
    Record(ScanRecord),
    Summary(ScanSummary),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub header: ScanLine,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// Writes header, records and summary as JSON Lines.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut line = |l: &ScanLine| -> io::Result<()> {
            serde_json::to_writer(&mut w, l)?;
            w.write_all(b"\n")
        };
        line(&self.header)?;
        for r in &self.records {
            line(&ScanLine::Record(r.clone()))?;
        }
        line(&ScanLine::Summary(self.summary.clone()))
    }
}

const RNG_DOC: &str = "splitmix64; master stream draws n = 3 + below(max_n - 2) then a graph seed per sample";
const MODEL_DOC: &str = "cycle length uniform in [3, n] on vertices 0..p; each later vertex joins a uniform earlier vertex";

/// Even cycle with the given pendant count on each cycle vertex.
fn pendant_cycle(counts: &[usize]) -> Graph {
    let p = counts.len();
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let mut next = p;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, edges).expect("valid pendant cycle")
}

/// Fixed graphs appended after the random samples: uniform pendant cycles
/// where `i- = l` is known, unequal pendant counts above `q`, and a pendant
/// extended into a short path.
fn probes() -> Vec<(String, Graph)> {
    let spec = |s: &str| build_family(&s.parse::<FamilySpec>().expect("probe spec")).expect("probe graph");
    let mut extended = pendant_cycle(&[2, 2, 2, 2]);
    let n = extended.n();
    extended = Graph::new(n + 1, extended.edges().iter().copied().chain([(4, n)])).expect("valid");
    vec![
        ("pendants:6x3".into(), spec("pendants:6x3")),
        ("pendants:4x2".into(), spec("pendants:4x2")),
        ("saturated:6".into(), spec("saturated:6")),
        ("pendants-uneven:2,3,2,2".into(), pendant_cycle(&[2, 3, 2, 2])),
        ("pendants-uneven:3,2,4,2".into(), pendant_cycle(&[3, 2, 4, 2])),
        ("pendants-extended:4x2".into(), extended),
    ]
}

fn record(index: usize, source: String, seed: u64, g: Graph) -> Result<ScanRecord, HarnessError> {
    let stats = graph_stats(&g)?;
    let q = stats.q.ok_or_else(|| HarnessError::InvalidCampaign("scan graph is not unicyclic".into()))?;
    let i_minus = ldlt_inertia(&exact_delta(&g)?).i_minus;
    let (lo, hi) = (stats.leaf_count, stats.leaf_count + q);
    Ok(ScanRecord {
        index,
        source,
        seed,
        n: g.n(),
        graph: g,
        l: stats.leaf_count,
        q,
        i_minus,
        lo,
        hi,
        in_bounds: lo <= i_minus && i_minus <= hi,
    })
}

/// Samples random unicyclic graphs, plus fixed probes, and records where
/// the exact `i-` falls relative to `[l, l + q]`. Out-of-bounds graphs are
/// data, not errors.
pub fn conjecture_scan(config: ScanConfig) -> Result<ScanReport, HarnessError> {
    let cap = super::oracle_cap();
    if config.max_n < 3 {
        return Err(HarnessError::InvalidCampaign(format!("max_n must be >= 3, got {}", config.max_n)));
    }
    check_cap(config.max_n, cap)?;
    let mut master = SplitMix64::new(config.seed);
    let draws: Vec<(usize, u64)> = (0..config.samples)
        .map(|_| {
            let n = 3 + master.below((config.max_n - 2) as u64) as usize;
            (n, master.next_u64())
        })
        .collect();
    let probes: Vec<(String, Graph)> = probes().into_iter().filter(|(_, g)| g.n() <= cap).collect();
    let probe_names = probes.iter().map(|(name, _)| name.clone()).collect();

    let mut records = draws
        .par_iter()
        .enumerate()
        .map(|(i, &(n, seed))| record(i, "random".into(), seed, random_unicyclic(n, seed)?))
        .collect::<Result<Vec<_>, _>>()?;
    let base = records.len();
    for (k, (name, g)) in probes.into_iter().enumerate() {
        records.push(record(base + k, format!("probe:{name}"), 0, g)?);
    }

    let violations: Vec<usize> = records.iter().filter(|r| !r.in_bounds).map(|r| r.index).collect();
    let summary = ScanSummary {
        total: records.len(),
        in_bounds: records.len() - violations.len(),
        out_of_bounds: violations.len(),
        violations,
        at_lower: records.iter().filter(|r| r.i_minus == r.lo).count(),
        at_upper: records.iter().filter(|r| r.i_minus == r.hi).count(),
    };
    Ok(ScanReport {
        header: ScanLine::Header {
            schema: REPORT_SCHEMA.to_string(),
            samples: config.samples,
            max_n: config.max_n,
            seed: config.seed,
            rng: RNG_DOC.to_string(),
            model: MODEL_DOC.to_string(),
            probes: probe_names,
        },
        records,
        summary,
    })
}
