use serde::{Deserialize, Serialize};

use super::exact_delta;
use crate::exact::{
    congruence_transform, haynsworth_inertia, ldlt_inertia, rank, RationalMatrix,
    RationalSymMatrix,
};
use crate::graph::{enumerate_trees, random_unicyclic, tree_from_pruefer, Graph};
use crate::rng::SplitMix64;
use crate::spectra::{jacobi_eigenvalues, SIGN_TOL};
use crate::{InertiaTriple, REPORT_SCHEMA};

/// Largest tree size swept by the interlacing check.
pub const INTERLACING_MAX_TREE: usize = 9;

const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub trials: usize,
    pub passed: usize,
    /// First few failing cases, described.
    pub failures: Vec<String>,
}

impl PropertyCheck {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub schema: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::ok)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    check: PropertyCheck,
}

impl Tally {
    fn new(name: &str) -> Self {
        Self {
            check: PropertyCheck {
                name: name.to_string(),
                trials: 0,
                passed: 0,
                failures: Vec::new(),
            },
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check.trials += 1;
        if ok {
            self.check.passed += 1;
        } else if self.check.failures.len() < 5 {
            self.check.failures.push(describe());
        }
    }
}

/// Random symmetric integer matrix. Odd draws are built as a signed sum of
/// fewer rank-one terms than the dimension, so singular cases show up.
#[allow(clippy::needless_range_loop)]
fn random_symmetric(rng: &mut SplitMix64, n: usize) -> RationalSymMatrix {
    let mut a = vec![vec![0i64; n]; n];
    if rng.below(2) == 0 {
        for i in 0..n {
            for j in i..n {
                let x = rng.range_i64(-5, 5);
                a[i][j] = x;
                a[j][i] = x;
            }
        }
    } else {
        let terms = rng.range_inclusive(0, n.saturating_sub(1) as u64) as usize;
        for _ in 0..terms {
            let sign = if rng.below(2) == 0 { 1 } else { -1 };
            let v: Vec<i64> = (0..n).map(|_| rng.range_i64(-2, 2)).collect();
            for i in 0..n {
                for j in 0..n {
                    a[i][j] += sign * v[i] * v[j];
                }
            }
        }
    }
    RationalSymMatrix::from_i64_rows(&a).expect("symmetric by construction")
}

fn random_nonsingular(rng: &mut SplitMix64, n: usize) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.range_i64(-3, 3)).collect())
            .collect();
        let s = RationalMatrix::from_i64_rows(&rows).expect("square");
        if rank(&s) == n {
            return s;
        }
    }
}

fn dim(rng: &mut SplitMix64, lo: usize) -> usize {
    rng.range_inclusive(lo as u64, MAX_DIM as u64) as usize
}

fn sylvester(seed: u64, trials: usize) -> PropertyCheck {
    let mut rng = SplitMix64::new(seed ^ 0x5137_7e57);
    let mut t = Tally::new("sylvester");
    for i in 0..trials {
        let n = dim(&mut rng, 1);
        let m = random_symmetric(&mut rng, n);
        let s = random_nonsingular(&mut rng, n);
        let before = ldlt_inertia(&m);
        let after = congruence_transform(&m, &s).map(|c| ldlt_inertia(&c));
        t.record(after.as_ref() == Ok(&before), || format!("trial {i}: n={n} {before} vs {after:?}"));
    }
    t.check
}

fn haynsworth(seed: u64, trials: usize) -> PropertyCheck {
    let mut rng = SplitMix64::new(seed ^ 0x4a75_0047);
    let mut t = Tally::new("haynsworth");
    for i in 0..trials {
        let n = dim(&mut rng, 2);
        let k = rng.range_inclusive(1, (n - 1) as u64) as usize;
        let lead: Vec<usize> = (0..k).collect();
        let m = loop {
            let m = random_symmetric(&mut rng, n);
            if rank(m.principal(&lead).as_matrix()) == k {
                break m;
            }
        };
        let direct = ldlt_inertia(&m);
        let split = haynsworth_inertia(&m, k);
        t.record(split.as_ref() == Ok(&direct), || format!("trial {i}: n={n} k={k} {direct} vs {split:?}"));
    }
    t.check
}

/// Deleting one row and column moves `i+` and `i-` down by at most one
/// each, and never up.
fn steps_ok(whole: InertiaTriple, part: InertiaTriple) -> bool {
    part.i_plus <= whole.i_plus
        && part.i_plus + 1 >= whole.i_plus
        && part.i_minus <= whole.i_minus
        && part.i_minus + 1 >= whole.i_minus
}

fn interlacing() -> PropertyCheck {
    let mut t = Tally::new("interlacing");
    for n in 2..=INTERLACING_MAX_TREE {
        for g in enumerate_trees(n).expect("within enumeration range") {
            let d = exact_delta(&g).expect("trees are connected");
            let whole = ldlt_inertia(&d);
            for v in 0..n {
                let part = ldlt_inertia(&d.delete(v));
                t.record(steps_ok(whole, part), || format!("{} minus {v}: {whole} -> {part}", g.to_json()));
            }
        }
    }
    t.check
}

fn subadditivity(seed: u64, trials: usize) -> PropertyCheck {
    let mut rng = SplitMix64::new(seed ^ 0x5ab_add);
    let mut t = Tally::new("subadditivity");
    for i in 0..trials {
        let n = dim(&mut rng, 1);
        let a = random_symmetric(&mut rng, n);
        let b = random_symmetric(&mut rng, n);
        let (ia, ib) = (ldlt_inertia(&a), ldlt_inertia(&b));
        let sum = ldlt_inertia(&a.add(&b).expect("same size"));
        let ok = sum.i_plus <= ia.i_plus + ib.i_plus && sum.i_minus <= ia.i_minus + ib.i_minus;
        t.record(ok, || format!("trial {i}: {ia} + {ib} -> {sum}"));
    }
    t.check
}

fn random_tree(rng: &mut SplitMix64, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    tree_from_pruefer(&seq).expect("entries in range")
}

/// Jacobi with the default sign threshold agrees with the exact inertia on
/// `Δ` of random trees and unicyclic graphs.
fn numeric_signs(seed: u64, trials: usize) -> PropertyCheck {
    let mut rng = SplitMix64::new(seed ^ 0x1ac0b1);
    let mut t = Tally::new("jacobi-signs");
    for i in 0..trials {
        let n = rng.range_inclusive(3, 12) as usize;
        let g = if i % 2 == 0 {
            random_tree(&mut rng, n)
        } else {
            random_unicyclic(n, rng.next_u64()).expect("n >= 3")
        };
        let d = exact_delta(&g).expect("connected");
        let exact = ldlt_inertia(&d);
        let numeric = jacobi_eigenvalues(&d.as_matrix().to_f64_rows(), SIGN_TOL).map(|s| s.inertia());
        t.record(numeric.as_ref() == Ok(&exact), || format!("{}: {exact} vs {numeric:?}", g.to_json()));
    }
    t.check
}

/// Exact-arithmetic inertia properties on seeded random inputs: congruence
/// invariance, Schur-complement additivity, subadditivity and Jacobi sign
/// agreement run `trials` times each; interlacing sweeps every tree up to
/// [`INTERLACING_MAX_TREE`] vertices.
pub fn property_suite(seed: u64, trials: usize) -> PropertyReport {
    let checks = vec![
        sylvester(seed, trials),
        haynsworth(seed, trials),
        interlacing(),
        subadditivity(seed, trials),
        numeric_signs(seed, trials),
    ];
    PropertyReport {
        schema: REPORT_SCHEMA.to_string(),
        seed,
        trials,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_and_is_deterministic() {
        let r = property_suite(3, 25);
        assert!(r.all_passed(), "{:?}", r.checks);
        assert_eq!(r.check("sylvester").unwrap().trials, 25);
        assert_eq!(r.check("interlacing").unwrap().trials, 2 + 3 + 8 + 15 + 36 + 77 + 184 + 423);
        assert_eq!(r, property_suite(3, 25));
    }

    #[test]
    fn step_rule() {
        let w = InertiaTriple::new(2, 3, 0);
        assert!(steps_ok(w, InertiaTriple::new(1, 3, 0)));
        assert!(steps_ok(w, InertiaTriple::new(2, 2, 0)));
        assert!(!steps_ok(w, InertiaTriple::new(3, 1, 0)));
        assert!(!steps_ok(w, InertiaTriple::new(0, 3, 1)));
    }

    #[test]
    fn random_symmetric_hits_singular_cases() {
        let mut rng = SplitMix64::new(9);
        let singular = (0..50)
            .filter(|_| ldlt_inertia(&random_symmetric(&mut rng, 5)).i_zero > 0)
            .count();
        assert!(singular > 0);
    }
}
