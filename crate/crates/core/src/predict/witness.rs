use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::PredictError;
use crate::exact::{format_rational, rat, ratio, Rational, RationalSymMatrix};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Deg2Pair,
    EvenCycleBranch,
    OppositePendants,
}

/// A nonzero vector, indexed by vertex, in the kernel of `Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct NullWitness {
    pub kind: WitnessKind,
    pub vector: Vec<Rational>,
}

impl NullWitness {
    /// `Δ · vector` in exact arithmetic.
    pub fn residual(&self, delta: &RationalSymMatrix) -> Vec<Rational> {
        delta.mul_vec(&self.vector)
    }

    /// Whether the vector is nonzero, has the right length, and `Δ` kills it.
    pub fn verify(&self, delta: &RationalSymMatrix) -> bool {
        self.vector.len() == delta.n()
            && self.vector.iter().any(|x| !x.is_zero())
            && self.residual(delta).iter().all(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.vector.iter().map(format_rational).collect()
    }
}

/// `x` with `+1` at the neighbors of `v` and `-2` at `v`. For a degree-2
/// cut vertex `Δx = 2·1`.
pub fn row_witness_deg2(g: &Graph, v: usize) -> Result<Vec<Rational>, PredictError> {
    if v >= g.n() || g.degree(v) != 2 || !g.is_cut_vertex(v) {
        return Err(PredictError::NotDeg2Cut(v));
    }
    let mut x = vec![Rational::zero(); g.n()];
    x[v] = rat(-2);
    for &w in g.neighbors(v) {
        x[w] = rat(1);
    }
    Ok(x)
}

/// `x₁ - x₂` for two degree-2 cut vertices; both map to `2·1`, so the
/// difference is in the kernel.
pub fn null_witness_deg2_pair(g: &Graph, v1: usize, v2: usize) -> Result<NullWitness, PredictError> {
    if v1 == v2 {
        return Err(PredictError::SameVertex(v1));
    }
    let x1 = row_witness_deg2(g, v1)?;
    let x2 = row_witness_deg2(g, v2)?;
    Ok(NullWitness {
        kind: WitnessKind::Deg2Pair,
        vector: x1.into_iter().zip(x2).map(|(a, b)| a - b).collect(),
    })
}

fn violated(msg: impl Into<String>) -> PredictError {
    PredictError::PreconditionViolated(msg.into())
}

/// The two halves `(a, b)` of the branch witness. Every row of `Δ` has
/// inner product `-m² - m` with `a` and `m² + m` with `b`.
///
/// `g` must be an even cycle `C_2m` whose only non-degree-2 cycle vertex
/// `c` has degree 3, and `u` a degree-2 vertex off the cycle. `a` has `-1`
/// at the vertex antipodal to `c`, `m + 1` at `c` and `-m` at the branch
/// neighbor of `c`; `b` has `m(m+1)/2` at both neighbors of `u` and
/// `-m(m+1)` at `u`.
pub fn even_cycle_branch_parts(g: &Graph, u: usize) -> Result<(Vec<Rational>, Vec<Rational>), PredictError> {
    if g.cyclomatic_number() != 1 || !g.is_connected() {
        return Err(violated("graph is not unicyclic"));
    }
    let cycle = g.cycle().ok_or_else(|| violated("graph is not unicyclic"))?;
    let p = cycle.len();
    if p % 2 != 0 {
        return Err(violated(format!("cycle length {p} is odd")));
    }
    let m = p / 2;
    let loaded: Vec<usize> = (0..p).filter(|&i| g.degree(cycle[i]) != 2).collect();
    if loaded.len() != 1 || g.degree(cycle[loaded[0]]) != 3 {
        return Err(violated("need exactly one cycle vertex of degree 3 and the rest of degree 2"));
    }
    let pos = loaded[0];
    let c = cycle[pos];
    if u >= g.n() || cycle.contains(&u) || g.degree(u) != 2 {
        return Err(violated(format!("vertex {u} is not an off-cycle degree-2 vertex")));
    }
    let antipode = cycle[(pos + m) % p];
    let branch = g
        .neighbors(c)
        .iter()
        .copied()
        .find(|w| !cycle.contains(w))
        .expect("degree-3 cycle vertex has a branch");

    let n = g.n();
    let mi = m as i64;
    let mut a = vec![Rational::zero(); n];
    a[antipode] = rat(-1);
    a[c] = rat(mi + 1);
    a[branch] = rat(-mi);
    let mut b = vec![Rational::zero(); n];
    let half = ratio(mi * (mi + 1), 2);
    for &w in g.neighbors(u) {
        b[w] = half.clone();
    }
    b[u] = rat(-mi * (mi + 1));
    Ok((a, b))
}

/// `a + b` from [`even_cycle_branch_parts`].
pub fn null_witness_even_cycle_branch(g: &Graph, u: usize) -> Result<NullWitness, PredictError> {
    let (a, b) = even_cycle_branch_parts(g, u)?;
    Ok(NullWitness {
        kind: WitnessKind::EvenCycleBranch,
        vector: a.into_iter().zip(b).map(|(x, y)| x + y).collect(),
    })
}

/// Kernel vector of `Δ` for a `2k`-cycle with pendants `2k` on vertex 0
/// and `2k + 1` on vertex `k`: `e₀ - e_k - k/(k+2)·(e_{2k} - e_{2k+1})`.
pub fn null_witness_opposite_pendants(k: usize) -> Result<NullWitness, PredictError> {
    if k < 2 {
        return Err(PredictError::BadK(k));
    }
    let mut v = vec![Rational::zero(); 2 * k + 2];
    let c = ratio(k as i64, k as i64 + 2);
    v[0] = rat(1);
    v[k] = rat(-1);
    v[2 * k] = -c.clone();
    v[2 * k + 1] = c;
    Ok(NullWitness {
        kind: WitnessKind::OppositePendants,
        vector: v,
    })
}
