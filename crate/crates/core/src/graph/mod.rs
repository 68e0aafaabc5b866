//! Simple undirected graphs, the families whose inertia is known, and their
//! distance-squared matrices.

mod family;
mod random;
mod trees;

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use family::{build_family, FamilySpec};
pub use random::random_unicyclic;
pub use trees::{
    canonical_tree_code, enumerate_trees, pruefer_sequence, tree_from_pruefer, MAX_ENUMERATED_TREE,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unsupported graph: {0}")]
    UnsupportedGraph(String),
    #[error("size {n} exceeds limit {max}")]
    SizeLimit { n: usize, max: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted, which is also the JSON
/// layout: `{"n": 4, "edges": [[0,1],[1,2],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a simple graph. Connectivity is not required here; the
    /// operations that need it report [`GraphError::Disconnected`].
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS hop counts from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// `|E| - |V| + 1`; 0 for trees, 1 for unicyclic graphs (when connected).
    pub fn cyclomatic_number(&self) -> isize {
        self.edges.len() as isize - self.n as isize + 1
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Whether deleting `v` (and its edges) leaves the rest disconnected.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        if self.n <= 2 {
            return false;
        }
        let start = match (0..self.n).find(|&u| u != v) {
            Some(s) => s,
            None => return false,
        };
        let mut seen = vec![false; self.n];
        seen[v] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached < self.n - 1
    }

    /// Degree-2 vertices whose removal disconnects the graph, ascending.
    pub fn deg2_cut_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) == 2 && self.is_cut_vertex(v))
            .collect()
    }

    /// The vertices of the 2-core, found by repeatedly stripping leaves.
    /// Empty for trees.
    pub fn two_core(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        (0..self.n).filter(|&v| !removed[v]).collect()
    }

    /// Cycle vertices in cyclic order for a connected unicyclic graph,
    /// starting from the smallest label and stepping to its smaller cycle
    /// neighbor. `None` if the 2-core is empty or not a single cycle.
    pub fn cycle(&self) -> Option<Vec<usize>> {
        let core = self.two_core();
        if core.len() < 3 {
            return None;
        }
        let mut on_core = vec![false; self.n];
        for &v in &core {
            on_core[v] = true;
        }
        let core_nbrs = |v: usize| -> Vec<usize> {
            self.adj[v].iter().copied().filter(|&w| on_core[w]).collect()
        };
        if core.iter().any(|&v| core_nbrs(v).len() != 2) {
            return None;
        }
        let start = core[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = core_nbrs(start)[0];
        while cur != start {
            order.push(cur);
            let nb = core_nbrs(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        (order.len() == core.len()).then_some(order)
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidSpec(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Canonical JSON text, used for hashing and reports.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }
}

/// Symmetric integer matrix with zero diagonal; here always `Δ` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntSymMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as f64).collect())
            .collect()
    }
}

/// `Δ(g)`: entry `(i, j)` is the squared hop distance between `i` and `j`.
pub fn all_pairs_distance_squared(g: &Graph) -> Result<IntSymMatrix, GraphError> {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for (j, d) in g.bfs_distances(i).into_iter().enumerate() {
            let d = d.ok_or(GraphError::Disconnected)? as i64;
            entries[i * n + j] = d * d;
        }
    }
    Ok(IntSymMatrix { n, entries })
}

/// The parameters the inertia formulas are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    /// Number of leaves (degree-1 vertices).
    pub leaf_count: usize,
    /// Degree-2 vertices whose removal disconnects the graph.
    pub deg2_cut_count: usize,
    /// Length of the unique cycle; `None` for trees.
    pub cycle_length: Option<usize>,
    /// Negative eigenvalue count of `Δ` of the bare cycle; `None` for trees.
    pub q: Option<usize>,
}

/// Number of negative eigenvalues of `Δ(C_p)`.
pub fn cycle_negative_count(p: usize) -> usize {
    if p.is_multiple_of(2) {
        p / 2
    } else if p % 4 == 1 {
        (p - 1) / 2
    } else {
        (p - 1) / 2 + 1
    }
}

pub fn graph_stats(g: &Graph) -> Result<GraphStats, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let cycle_length = match g.cyclomatic_number() {
        0 => None,
        1 => Some(
            g.cycle()
                .ok_or_else(|| GraphError::UnsupportedGraph("2-core is not a cycle".into()))?
                .len(),
        ),
        c => {
            return Err(GraphError::UnsupportedGraph(format!(
                "cyclomatic number {c}"
            )))
        }
    };
    Ok(GraphStats {
        n: g.n(),
        leaf_count: g.leaf_count(),
        deg2_cut_count: g.deg2_cut_vertices().len(),
        cycle_length,
        q: cycle_length.map(cycle_negative_count),
    })
}
