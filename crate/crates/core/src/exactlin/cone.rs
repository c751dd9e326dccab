//! Full-dimensionality of rational polyhedral cones by exact
//! Fourier–Motzkin elimination.
//!
//! The question decided here: given linear functionals `f_j` on Q^d, is
//! there a direction `x` with `f_j(x) > 0` for every `j`? That holds iff the
//! cone `{f_j >= 0}` is full-dimensional. Elimination proceeds one
//! coordinate at a time; strict inequalities project exactly, so the answer
//! is exact and a rational witness can be reconstructed by back
//! substitution.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::RatVec;
use crate::rat::{rat_int, Rat};

/// Scale a constraint by a positive rational so its first nonzero entry is
/// +-1; strict homogeneous inequalities are invariant under this.
fn normalize(v: &RatVec) -> RatVec {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.clone(),
        Some(lead) => v.scale(&lead.abs().recip()),
    }
}

fn dedupe(constraints: Vec<RatVec>) -> Vec<RatVec> {
    let set: BTreeSet<RatVec> = constraints.into_iter().map(|v| normalize(&v)).collect();
    set.into_iter().collect()
}

/// Find `x` in Q^d with `f(x) > 0` for all constraints, eliminating the last
/// coordinate first.
fn search(constraints: &[RatVec], dim: usize) -> Option<Vec<Rat>> {
    if constraints.iter().any(|c| c.is_zero()) {
        return None; // 0 > 0
    }
    if dim == 0 {
        debug_assert!(constraints.is_empty());
        return Some(Vec::new());
    }
    let last = dim - 1;
    let mut pos: Vec<&RatVec> = Vec::new();
    let mut neg: Vec<&RatVec> = Vec::new();
    let mut derived: Vec<RatVec> = Vec::new();
    let drop_last = |v: &RatVec| RatVec::new(v.entries()[..last].to_vec());
    for c in constraints {
        if c[last].is_zero() {
            derived.push(drop_last(c));
        } else if c[last].is_positive() {
            pos.push(c);
        } else {
            neg.push(c);
        }
    }
    for p in &pos {
        for q in &neg {
            // Positive combination cancelling the last coordinate.
            let combo = &p.scale(&-&q[last]) + &q.scale(&p[last]);
            debug_assert!(combo[last].is_zero());
            derived.push(drop_last(&combo));
        }
    }
    let projected = dedupe(derived);
    let inner = search(&projected, last)?;

    // Strict bounds on the eliminated coordinate coming from pos/neg rows.
    let value_at = |c: &RatVec| -> Rat {
        c.entries()[..last]
            .iter()
            .zip(&inner)
            .map(|(a, b)| a * b)
            .sum()
    };
    let lower = pos
        .iter()
        .map(|p| -&value_at(p) / &p[last])
        .max();
    let upper = neg
        .iter()
        .map(|q| -&value_at(q) / &q[last])
        .min();
    let x_last = match (lower, upper) {
        (Some(lo), Some(hi)) => {
            debug_assert!(lo < hi, "projection guarantees an open interval");
            (&lo + &hi) / rat_int(2)
        }
        (Some(lo), None) => &lo + &rat_int(1),
        (None, Some(hi)) => &hi - &rat_int(1),
        (None, None) => Rat::zero(),
    };
    let mut x = inner;
    x.push(x_last);
    Some(x)
}

/// An explicit direction with `f_j(x) > 0` for every functional, when one
/// exists. The witness is verified before being returned.
pub fn cone_witness(dim: usize, functionals: &[RatVec]) -> Option<RatVec> {
    for f in functionals {
        assert_eq!(f.dim(), dim, "functional dimension mismatch");
    }
    let start = dedupe(functionals.to_vec());
    let x = search(&start, dim)?;
    let w = RatVec::new(x);
    assert!(
        functionals.iter().all(|f| f.dot(&w).is_positive()),
        "witness must satisfy every constraint strictly"
    );
    Some(w)
}

/// True iff there is a direction on which every functional is strictly
/// positive (equivalently, the cone cut out by `f_j >= 0` has full
/// dimension).
pub fn cone_is_fulldim(dim: usize, functionals: &[RatVec]) -> bool {
    cone_witness(dim, functionals).is_some()
}
