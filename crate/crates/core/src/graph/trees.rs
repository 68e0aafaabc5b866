use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, GraphError};

/// Largest `n` accepted by [`enumerate_trees`].
pub const MAX_ENUMERATED_TREE: usize = 12;

/// Decodes a Prüfer sequence into the labeled tree on `seq.len() + 2`
/// vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, GraphError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(GraphError::OutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let u = leaves.pop_first().expect("two vertices remain");
    let v = leaves.pop_first().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(n, edges)
}

/// Prüfer sequence of a labeled tree on at least 2 vertices; inverse of
/// [`tree_from_pruefer`].
pub fn pruefer_sequence(g: &Graph) -> Result<Vec<usize>, GraphError> {
    require_tree(g)?;
    let n = g.n();
    if n < 2 {
        return Err(GraphError::UnsupportedGraph("Prüfer codes need 2 vertices".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = g
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf has a neighbor");
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.insert(parent);
        }
    }
    Ok(seq)
}

fn require_tree(g: &Graph) -> Result<(), GraphError> {
    if g.n() == 0 || g.edge_count() + 1 != g.n() {
        return Err(GraphError::UnsupportedGraph("not a tree".into()));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(())
}

/// Centroid vertices: those minimizing the largest component left after
/// deleting them. One or two of them.
fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let worst: Vec<usize> = (0..n)
        .map(|u| {
            let below = g
                .neighbors(u)
                .iter()
                .filter(|&&w| parent[w] == u)
                .map(|&w| size[w])
                .max()
                .unwrap_or(0);
            below.max(n - size[u])
        })
        .collect();
    let best = *worst.iter().min().expect("non-empty tree");
    (0..n).filter(|&u| worst[u] == best).collect()
}

/// AHU parenthesis encoding of `g` rooted at `root`.
fn ahu(g: &Graph, root: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(root)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(g, w, root))
        .collect();
    kids.sort();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// Canonical form of a free tree: the smallest AHU encoding over its
/// centroids. Two trees are isomorphic iff their codes are equal.
pub fn canonical_tree_code(g: &Graph) -> Result<String, GraphError> {
    require_tree(g)?;
    Ok(centroids(g)
        .into_iter()
        .map(|c| ahu(g, c, usize::MAX))
        .min()
        .expect("a tree has a centroid"))
}

/// Rebuilds the tree from its encoding, labeling vertices in preorder.
fn decode_ahu(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for c in code.chars() {
        match c {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop();
            }
            _ => unreachable!("AHU codes only contain parentheses"),
        }
    }
    Graph::new(next, edges).expect("decoded AHU tree is simple")
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// sorted by canonical code and labeled in canonical preorder.
///
/// Trees on `k + 1` vertices are grown from those on `k` by adding a leaf
/// at every vertex and deduplicating by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(2..=MAX_ENUMERATED_TREE).contains(&n) {
        return Err(GraphError::SizeLimit {
            n,
            max: MAX_ENUMERATED_TREE,
        });
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert("()".into(), Graph::new(1, []).expect("single vertex"));
    for k in 1..n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in 0..k {
                let grown = Graph::new(k + 1, tree.edges().iter().copied().chain([(v, k)]))
                    .expect("adding a leaf keeps the graph simple");
                let code = canonical_tree_code(&grown).expect("grown graph is a tree");
                next.entry(code).or_insert_with_key(|c| decode_ahu(c));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Brute force: decode every Prüfer sequence and count distinct codes.
    fn pruefer_class_count(n: usize) -> usize {
        let len = n - 2;
        let total = n.pow(len as u32);
        let mut codes = HashSet::new();
        for mut idx in 0..total {
            let mut seq = Vec::with_capacity(len);
            for _ in 0..len {
                seq.push(idx % n);
                idx /= n;
            }
            codes.insert(canonical_tree_code(&tree_from_pruefer(&seq).unwrap()).unwrap());
        }
        codes.len()
    }

    #[test]
    fn pruefer_examples() {
        assert_eq!(tree_from_pruefer(&[]).unwrap().edges(), &[(0, 1)]);
        assert_eq!(tree_from_pruefer(&[0, 0]).unwrap().edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(tree_from_pruefer(&[1, 2]).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            tree_from_pruefer(&[0, 4]),
            Err(GraphError::OutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_trees(4).unwrap().len(), 2);
        assert_eq!(enumerate_trees(7).unwrap().len(), 11);
    }

    #[test]
    fn counts_match_pruefer_brute_force() {
        for n in 3..=7 {
            assert_eq!(enumerate_trees(n).unwrap().len(), pruefer_class_count(n), "n={n}");
        }
    }

    #[test]
    fn counts_match_known_sequence() {
        // free trees on n vertices, n = 2..12
        let known = [1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &c) in known.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 2).unwrap().len(), c);
        }
    }

    #[test]
    fn pruefer_round_trip() {
        for n in 2..=8 {
            for g in enumerate_trees(n).unwrap() {
                let seq = pruefer_sequence(&g).unwrap();
                assert_eq!(seq.len(), n - 2);
                assert_eq!(tree_from_pruefer(&seq).unwrap(), g);
            }
        }
        assert!(pruefer_sequence(&Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()).is_err());
    }

    #[test]
    fn size_limits() {
        assert!(matches!(enumerate_trees(1), Err(GraphError::SizeLimit { .. })));
        assert!(matches!(enumerate_trees(13), Err(GraphError::SizeLimit { .. })));
    }

    #[test]
    fn representatives_are_canonical_trees() {
        for g in enumerate_trees(8).unwrap() {
            assert_eq!(g.edge_count(), 7);
            assert!(g.is_connected());
            let code = canonical_tree_code(&g).unwrap();
            assert_eq!(decode_ahu(&code), g);
        }
    }

    #[test]
    fn code_ignores_labels() {
        let a = tree_from_pruefer(&[3, 3, 1]).unwrap();
        let b = a.relabel(&[4, 2, 0, 1, 3]).unwrap();
        assert_eq!(canonical_tree_code(&a), canonical_tree_code(&b));
        let path = tree_from_pruefer(&[1, 2, 3]).unwrap();
        assert_ne!(canonical_tree_code(&a), canonical_tree_code(&path));
    }
}
