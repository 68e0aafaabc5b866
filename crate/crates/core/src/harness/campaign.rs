use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_cap, exact_delta, graph_hash, HarnessError};
use crate::exact::{ldlt_inertia, rank, rat, rational_nullspace, Rational, RationalMatrix};
use crate::graph::{
    build_family, enumerate_trees, graph_stats, pruefer_sequence, FamilySpec, Graph, GraphStats,
};
use crate::predict::{
    null_witness_deg2_pair, null_witness_even_cycle_branch, null_witness_opposite_pendants,
    predict_inertia, row_witness_deg2, FamilyTag, Outcome, PartialTriple,
};
use crate::{InertiaTriple, REPORT_SCHEMA};

/// Which family a campaign sweeps, and what its range bounds mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignFamily {
    /// All free trees with `n` in range.
    Trees,
    /// `C_n` for `n` in range.
    Cycles,
    /// Even `C_p` with one pendant, `p` in range.
    CyclePendant,
    /// Even `C_p`, `p` in range, with every free tree on up to `tree_max`
    /// vertices attached through each of its vertices.
    EvencycleTree,
    /// Saturated even cycles, `p` in range.
    Saturated,
    /// Even `C_p`, `p` in range, with `s = q, q+1, q+2` pendants per vertex.
    Pendants,
    /// Triangle with every free tree of size in range, each attach vertex.
    TriangleTree,
    /// Opposite-pendant cycles `C_2k`, `k` in range.
    Opposite,
}

impl CampaignFamily {
    pub const ALL: [CampaignFamily; 8] = [
        CampaignFamily::Trees,
        CampaignFamily::Cycles,
        CampaignFamily::CyclePendant,
        CampaignFamily::EvencycleTree,
        CampaignFamily::Saturated,
        CampaignFamily::Pendants,
        CampaignFamily::TriangleTree,
        CampaignFamily::Opposite,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CampaignFamily::Trees => "trees",
            CampaignFamily::Cycles => "cycles",
            CampaignFamily::CyclePendant => "cycle-pendant",
            CampaignFamily::EvencycleTree => "evencycle-tree",
            CampaignFamily::Saturated => "saturated",
            CampaignFamily::Pendants => "pendants",
            CampaignFamily::TriangleTree => "triangle-tree",
            CampaignFamily::Opposite => "opposite",
        }
    }
}

impl fmt::Display for CampaignFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CampaignFamily {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|f| f.name()).collect();
                HarnessError::InvalidCampaign(format!("unknown family {s:?}, expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub family: CampaignFamily,
    pub lo: usize,
    pub hi: usize,
    /// Largest attached tree for [`CampaignFamily::EvencycleTree`].
    pub tree_max: usize,
    /// Oracle cap; larger instances fail with `SizeLimit`.
    pub max_n: usize,
}

impl CampaignSpec {
    pub fn new(family: CampaignFamily, lo: usize, hi: usize) -> Self {
        Self {
            family,
            lo,
            hi,
            tree_max: 5,
            max_n: super::oracle_cap(),
        }
    }

    pub fn tree_max(mut self, k: usize) -> Self {
        self.tree_max = k;
        self
    }

    pub fn max_n(mut self, n: usize) -> Self {
        self.max_n = n;
        self
    }
}

/// Counts of witness checks run on one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSummary {
    /// `Δx = 2·1` for each degree-2 cut vertex.
    pub row: usize,
    /// Differences of row witnesses.
    pub pair: usize,
    pub branch: usize,
    pub opposite: usize,
    /// Checks that failed, described.
    pub failures: Vec<String>,
    /// Rank of the pair and branch witnesses, when a branch witness applies.
    pub kernel_witness_rank: Option<usize>,
    /// Exact nullity of `Δ`, computed for opposite-pendant graphs.
    pub nullity: Option<usize>,
}

impl WitnessSummary {
    pub fn total(&self) -> usize {
        self.row + self.pair + self.branch + self.opposite
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub spec: String,
    pub graph_hash: String,
    pub stats: GraphStats,
    pub family: Option<FamilyTag>,
    pub predicted: Option<PartialTriple>,
    pub oracle: InertiaTriple,
    pub witnesses: WitnessSummary,
    /// All asserted checks passed.
    pub matched: bool,
    pub boundary: bool,
    /// For boundary cases: whether the formula agrees anyway.
    pub formula_agrees: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: String,
    pub family: CampaignFamily,
    pub range: (usize, usize),
    pub tree_max: usize,
    pub max_n: usize,
    pub instance_count: usize,
    pub records: Vec<InstanceRecord>,
    /// Indices of records with `matched == false`.
    pub mismatches: Vec<usize>,
    /// Indices of boundary records.
    pub boundary_cases: Vec<usize>,
    pub duration_ms: u128,
}

impl CampaignReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn free_trees(n: usize) -> Result<Vec<FamilySpec>, HarnessError> {
    if n == 1 {
        return Ok(vec![FamilySpec::Path(1)]);
    }
    enumerate_trees(n)?
        .iter()
        .map(|t| Ok(FamilySpec::Tree(pruefer_sequence(t)?)))
        .collect()
}

fn even_range(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo.max(4)..=hi).filter(|p| p % 2 == 0)
}

fn instances(spec: &CampaignSpec) -> Result<Vec<FamilySpec>, HarnessError> {
    let (lo, hi) = (spec.lo, spec.hi);
    if lo > hi {
        return Err(HarnessError::InvalidCampaign(format!("empty range {lo}..{hi}")));
    }
    let mut out = Vec::new();
    match spec.family {
        CampaignFamily::Trees => {
            for n in lo.max(3)..=hi {
                out.extend(free_trees(n)?);
            }
        }
        CampaignFamily::Cycles => out.extend((lo.max(3)..=hi).map(FamilySpec::Cycle)),
        CampaignFamily::CyclePendant => out.extend(even_range(lo, hi).map(|p| FamilySpec::EvenCycleOneTree {
            p,
            tree: Box::new(FamilySpec::Path(1)),
            attach: 0,
        })),
        CampaignFamily::EvencycleTree => {
            for p in even_range(lo, hi) {
                for k in 1..=spec.tree_max {
                    for tree in free_trees(k)? {
                        for attach in 0..k {
                            out.push(FamilySpec::EvenCycleOneTree {
                                p,
                                tree: Box::new(tree.clone()),
                                attach,
                            });
                        }
                    }
                }
            }
        }
        CampaignFamily::Saturated => out.extend(even_range(lo, hi).map(FamilySpec::SaturatedCycle)),
        CampaignFamily::Pendants => {
            for p in even_range(lo, hi) {
                let q = p / 2;
                out.extend((q..=q + 2).map(|s| FamilySpec::CyclePendants { p, s }));
            }
        }
        CampaignFamily::TriangleTree => {
            for k in lo.max(1)..=hi {
                for tree in free_trees(k)? {
                    for attach in 0..k {
                        out.push(FamilySpec::TriangleOneTree {
                            tree: Box::new(tree.clone()),
                            attach,
                        });
                    }
                }
            }
        }
        CampaignFamily::Opposite => out.extend((lo.max(2)..=hi).map(FamilySpec::OppositePendants)),
    }
    Ok(out)
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| *x == rat(0))
}

fn check_witnesses(
    family: CampaignFamily,
    spec: &FamilySpec,
    g: &Graph,
    delta: &crate::exact::RationalSymMatrix,
) -> WitnessSummary {
    let mut out = WitnessSummary::default();
    let cuts = g.deg2_cut_vertices();
    let two = vec![rat(2); g.n()];
    for &v in &cuts {
        out.row += 1;
        match row_witness_deg2(g, v) {
            Ok(x) if delta.mul_vec(&x) == two => {}
            _ => out.failures.push(format!("row witness at {v}")),
        }
    }
    let mut kernel = Vec::new();
    for &v in cuts.iter().skip(1) {
        out.pair += 1;
        match null_witness_deg2_pair(g, cuts[0], v) {
            Ok(w) if w.verify(delta) => kernel.push(w.vector),
            _ => out.failures.push(format!("pair witness ({}, {v})", cuts[0])),
        }
    }
    if family == CampaignFamily::EvencycleTree {
        let cycle = g.cycle().unwrap_or_default();
        let mut branch = None;
        for u in (0..g.n()).filter(|&u| g.degree(u) == 2 && !cycle.contains(&u)) {
            out.branch += 1;
            match null_witness_even_cycle_branch(g, u) {
                Ok(w) if w.verify(delta) => branch = Some(w.vector),
                _ => out.failures.push(format!("branch witness at {u}")),
            }
        }
        if let Some(b) = branch {
            kernel.push(b);
        }
        // the witnesses must span at least t dimensions of the kernel
        let n = g.n();
        let mut rows: Vec<Vec<Rational>> = kernel.into_iter().filter(|v| !is_zero_vec(v)).collect();
        let r = if rows.is_empty() {
            0
        } else {
            rows.resize(n.max(rows.len()), vec![rat(0); n]);
            rows.truncate(n);
            rank(&RationalMatrix::from_rows(rows).expect("square"))
        };
        out.kernel_witness_rank = Some(r);
        if r < cuts.len() {
            out.failures.push(format!("witness rank {r} below t = {}", cuts.len()));
        }
    }
    if let FamilySpec::OppositePendants(k) = spec {
        out.opposite += 1;
        match null_witness_opposite_pendants(*k) {
            Ok(w) if w.verify(delta) => {}
            _ => out.failures.push("opposite-pendant witness".into()),
        }
        let nullity = rational_nullspace(delta).len();
        out.nullity = Some(nullity);
        if nullity == 0 {
            out.failures.push("nullity is 0".into());
        }
    }
    out
}

fn run_instance(family: CampaignFamily, index: usize, spec: &FamilySpec) -> Result<InstanceRecord, HarnessError> {
    let g = build_family(spec)?;
    let stats = graph_stats(&g)?;
    let delta = exact_delta(&g)?;
    let oracle = ldlt_inertia(&delta);
    let witnesses = check_witnesses(family, spec, &g, &delta);
    let outcome = predict_inertia(&g);
    let mut note = None;
    let (fam, predicted, boundary, agrees) = match &outcome {
        Outcome::Predicted(p) => (Some(p.family), Some(p.inertia), p.boundary, p.matches(&oracle)),
        Outcome::Unsupported { reason } => {
            note = Some(reason.clone());
            (None, None, false, false)
        }
    };
    let prediction_ok = match family {
        CampaignFamily::Opposite => true,
        _ => predicted.is_some() && (boundary || agrees),
    };
    let matched = prediction_ok && witnesses.failures.is_empty() && oracle.dim() == g.n();
    Ok(InstanceRecord {
        index,
        spec: spec.to_string(),
        graph_hash: graph_hash(&g),
        stats,
        family: fam,
        predicted,
        oracle,
        witnesses,
        matched,
        boundary,
        formula_agrees: boundary.then_some(agrees),
        note,
    })
}

/// Builds every instance of the campaign, predicts, runs the exact oracle
/// and the applicable witness checks, and collects the records in order.
pub fn verify_campaign(spec: &CampaignSpec) -> Result<CampaignReport, HarnessError> {
    let start = Instant::now();
    let specs = instances(spec)?;
    for s in &specs {
        check_cap(build_family(s)?.n(), spec.max_n)?;
    }
    let records = specs
        .par_iter()
        .enumerate()
        .map(|(i, s)| run_instance(spec.family, i, s))
        .collect::<Result<Vec<_>, _>>()?;
    let mismatches = records.iter().filter(|r| !r.matched).map(|r| r.index).collect();
    let boundary_cases = records.iter().filter(|r| r.boundary).map(|r| r.index).collect();
    Ok(CampaignReport {
        schema: REPORT_SCHEMA.to_string(),
        family: spec.family,
        range: (spec.lo, spec.hi),
        tree_max: spec.tree_max,
        max_n: spec.max_n,
        instance_count: records.len(),
        records,
        mismatches,
        boundary_cases,
        duration_ms: start.elapsed().as_millis(),
    })
}
