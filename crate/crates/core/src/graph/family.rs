use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{tree_from_pruefer, Graph, GraphError};

/// A member of one of the graph families with known inertia.
///
/// Labeling is fixed: cycle vertices come first (`0..p` in cycle order),
/// then the attached vertices in construction order. Attached trees hang
/// off cycle vertex 0 through an edge to their `attach` vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Path(usize),
    /// Star on `n` vertices, center 0.
    Star(usize),
    Cycle(usize),
    /// Labeled tree given by its Prüfer sequence (`len + 2` vertices).
    Tree(Vec<usize>),
    EvenCycleOneTree {
        p: usize,
        tree: Box<FamilySpec>,
        attach: usize,
    },
    /// Even cycle with one pendant per cycle vertex; pendant of `i` is `p + i`.
    SaturatedCycle(usize),
    /// Even cycle with `s` pendants per cycle vertex; pendants of `i` are
    /// `p + i*s .. p + (i+1)*s`.
    CyclePendants { p: usize, s: usize },
    /// Cycle of length `2k` with pendants `2k` on vertex 0 and `2k+1` on vertex `k`.
    OppositePendants(usize),
    TriangleOneTree { tree: Box<FamilySpec>, attach: usize },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidSpec(msg.into())
}

fn require_even_cycle(p: usize) -> Result<(), GraphError> {
    if p < 4 || !p.is_multiple_of(2) {
        return Err(invalid(format!("cycle length must be even and >= 4, got {p}")));
    }
    Ok(())
}

fn cycle_edges(p: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..p).map(move |i| (i, (i + 1) % p))
}

/// Builds a tree-valued spec; anything that is not a tree is rejected.
fn build_tree(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path(_) | FamilySpec::Star(_) | FamilySpec::Tree(_) => build_family(spec),
        other => Err(invalid(format!("{other} is not a tree spec"))),
    }
}

/// Glues `tree` to cycle vertex 0 of a `p`-cycle by the edge `0 -- p + attach`.
fn cycle_with_tree(p: usize, tree: &FamilySpec, attach: usize) -> Result<Graph, GraphError> {
    let t = build_tree(tree)?;
    if attach >= t.n() {
        return Err(invalid(format!(
            "attach vertex {attach} out of range for a {}-vertex tree",
            t.n()
        )));
    }
    let edges = cycle_edges(p)
        .chain(t.edges().iter().map(|&(u, v)| (p + u, p + v)))
        .chain(std::iter::once((0, p + attach)));
    Graph::new(p + t.n(), edges)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(invalid("path needs at least one vertex"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Star(n) => {
            if n == 0 {
                return Err(invalid("star needs at least one vertex"));
            }
            Graph::new(n, (1..n).map(|i| (0, i)))
        }
        FamilySpec::Cycle(p) => {
            if p < 3 {
                return Err(invalid(format!("cycle length must be >= 3, got {p}")));
            }
            Graph::new(p, cycle_edges(p))
        }
        FamilySpec::Tree(ref seq) => tree_from_pruefer(seq),
        FamilySpec::EvenCycleOneTree {
            p,
            ref tree,
            attach,
        } => {
            require_even_cycle(p)?;
            cycle_with_tree(p, tree, attach)
        }
        FamilySpec::SaturatedCycle(p) => {
            require_even_cycle(p)?;
            Graph::new(2 * p, cycle_edges(p).chain((0..p).map(|i| (i, p + i))))
        }
        FamilySpec::CyclePendants { p, s } => {
            require_even_cycle(p)?;
            if s == 0 {
                return Err(invalid("pendant count must be >= 1"));
            }
            let pendants = (0..p).flat_map(move |i| (0..s).map(move |r| (i, p + i * s + r)));
            Graph::new(p + p * s, cycle_edges(p).chain(pendants))
        }
        FamilySpec::OppositePendants(k) => {
            if k < 2 {
                return Err(invalid(format!("opposite pendants need k >= 2, got {k}")));
            }
            let p = 2 * k;
            Graph::new(p + 2, cycle_edges(p).chain([(0, p), (k, p + 1)]))
        }
        FamilySpec::TriangleOneTree { ref tree, attach } => cycle_with_tree(3, tree, attach),
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("bad {what}: {s:?}")))
}

fn parse_seq(s: &str) -> Result<Vec<usize>, GraphError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_usize(x, "Prüfer entry")).collect()
}

/// Tree part of a composite spec: a bare Prüfer list, or a nested
/// `path:N` / `star:N` / `tree:...`, optionally followed by `@attach`.
fn parse_tree_part(s: &str) -> Result<(FamilySpec, usize), GraphError> {
    let (body, attach) = match s.rsplit_once('@') {
        Some((b, a)) => (b, parse_usize(a, "attach vertex")?),
        None => (s, 0),
    };
    let tree = if body.contains(':') {
        body.parse::<FamilySpec>()?
    } else {
        FamilySpec::Tree(parse_seq(body)?)
    };
    build_tree(&tree)?;
    Ok((tree, attach))
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses CLI strings such as `cycle:6`, `saturated:8`, `pendants:6x3`,
    /// `opposite:4`, `tree:0,0,1`, `evencycle-tree:6+0,0@2`,
    /// `triangle-tree:path:1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected KIND:ARGS, got {s:?}")))?;
        let spec = match kind.trim() {
            "path" => FamilySpec::Path(parse_usize(rest, "path length")?),
            "star" => FamilySpec::Star(parse_usize(rest, "star size")?),
            "cycle" => FamilySpec::Cycle(parse_usize(rest, "cycle length")?),
            "tree" => FamilySpec::Tree(parse_seq(rest)?),
            "saturated" => FamilySpec::SaturatedCycle(parse_usize(rest, "cycle length")?),
            "pendants" => {
                let (p, s) = rest
                    .split_once('x')
                    .ok_or_else(|| invalid(format!("expected pendants:PxS, got {s:?}")))?;
                FamilySpec::CyclePendants {
                    p: parse_usize(p, "cycle length")?,
                    s: parse_usize(s, "pendant count")?,
                }
            }
            "opposite" => FamilySpec::OppositePendants(parse_usize(rest, "half length")?),
            "evencycle-tree" => {
                let (p, tree) = rest
                    .split_once('+')
                    .ok_or_else(|| invalid(format!("expected evencycle-tree:P+TREE, got {s:?}")))?;
                let (tree, attach) = parse_tree_part(tree)?;
                FamilySpec::EvenCycleOneTree {
                    p: parse_usize(p, "cycle length")?,
                    tree: Box::new(tree),
                    attach,
                }
            }
            "triangle-tree" => {
                let (tree, attach) = parse_tree_part(rest)?;
                FamilySpec::TriangleOneTree {
                    tree: Box::new(tree),
                    attach,
                }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        build_family(&spec)?;
        Ok(spec)
    }
}

fn fmt_seq(seq: &[usize]) -> String {
    seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn fmt_tree_part(tree: &FamilySpec, attach: usize) -> String {
    let body = match tree {
        FamilySpec::Tree(seq) if !seq.is_empty() => fmt_seq(seq),
        other => other.to_string(),
    };
    if attach == 0 {
        body
    } else {
        format!("{body}@{attach}")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Cycle(p) => write!(f, "cycle:{p}"),
            FamilySpec::Tree(seq) => write!(f, "tree:{}", fmt_seq(seq)),
            FamilySpec::EvenCycleOneTree { p, tree, attach } => {
                write!(f, "evencycle-tree:{p}+{}", fmt_tree_part(tree, *attach))
            }
            FamilySpec::SaturatedCycle(p) => write!(f, "saturated:{p}"),
            FamilySpec::CyclePendants { p, s } => write!(f, "pendants:{p}x{s}"),
            FamilySpec::OppositePendants(k) => write!(f, "opposite:{k}"),
            FamilySpec::TriangleOneTree { tree, attach } => {
                write!(f, "triangle-tree:{}", fmt_tree_part(tree, *attach))
            }
        }
    }
}
