//! The decision layer: containment of the ideal's annihilator in the
//! annihilators of finite-dimensional simples, bounded weight sets, and the
//! FCR classification of the prime factor attached to a linear ideal.
//!
//! The decision sweeps the enumerated Weyl group: the factor is FCR exactly
//! when some translate of the ideal under the inverse dot action is
//! strongly dominant and the translating element is a minimal coset
//! representative for the integral base of that translate. Witness
//! consistency across different strongly dominant translates is asserted at
//! runtime; with a correct implementation it can never fire.

use std::collections::BTreeSet;

use crate::exactlin::{solve_affine, RatVec};
use crate::ideals::LinearIdeal;
use crate::rat::{rat_int, Rat};
use crate::weyl::{is_minimal_representative, WeylElement, WeylGroup};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FcrStatus {
    /// The variety is a single dominant integral point.
    FiniteDimensional,
    Fcr,
    NotFcr,
    /// No conclusion for a reductive (non-semisimple) system: the
    /// sufficient conditions fail but necessity is not available.
    UnknownReductive,
}

impl FcrStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FcrStatus::FiniteDimensional => "FiniteDimensional",
            FcrStatus::Fcr => "FCR",
            FcrStatus::NotFcr => "NotFCR",
            FcrStatus::UnknownReductive => "UnknownReductive",
        }
    }
}

/// Outcome of the FCR decision. `witness` and `base_ideal` are present
/// whenever some Weyl translate of the input is strongly dominant; the
/// input ideal equals the dot action of `witness` on `base_ideal`.
#[derive(Clone, Debug)]
pub struct FcrVerdict {
    pub status: FcrStatus,
    pub witness: Option<WeylElement>,
    pub base_ideal: Option<LinearIdeal>,
    pub b_lambda: Option<Vec<RatVec>>,
}

/// True iff some group element `w` has `w . mu` on the variety; `mu` must
/// be dominant integral.
pub fn annihilator_contains(
    group: &WeylGroup,
    ideal: &LinearIdeal,
    mu: &RatVec,
) -> Result<bool> {
    let rs = ideal.system().as_ref();
    if !rs.is_dominant_integral(mu) {
        return Err(Error::NotDominantIntegral);
    }
    Ok(group
        .elements()
        .iter()
        .any(|w| ideal.variety().contains_point(&w.dot_apply(rs, mu))))
}

/// Dominant weights in the pairing box `{0..=bound}^rank` whose dot orbit
/// meets the variety, computed per group element as the dominant slice of
/// the pulled-back variety. Each nonempty slice contributes its canonical
/// base point, which is the slice itself whenever the slice is a single
/// point (always the case for semisimple realizations pinned by their
/// pairings).
pub fn lambda_set(group: &WeylGroup, ideal: &LinearIdeal, bound: u64) -> Vec<RatVec> {
    let rs = ideal.system().as_ref();
    let n = rs.ambient_dim();
    let coroots: Vec<RatVec> = rs
        .simple_roots()
        .iter()
        .map(|a| a.scale(&(rat_int(2) / a.dot(a))))
        .collect();
    let mut found: BTreeSet<RatVec> = BTreeSet::new();
    for wi in 0..group.len() {
        let pulled = ideal.dot_act(group.element(group.inverse_index(wi)));
        let mut pairing = vec![0u64; coroots.len()];
        'box_scan: loop {
            let mut functionals: Vec<(RatVec, Rat)> = pulled.functionals().to_vec();
            for (cv, &p) in coroots.iter().zip(&pairing) {
                functionals.push((cv.clone(), rat_int(-(p as i64))));
            }
            if let Some(space) = solve_affine(&functionals, n) {
                found.insert(space.base_point().clone());
            }
            let mut idx = 0;
            loop {
                if idx == pairing.len() {
                    break 'box_scan;
                }
                if pairing[idx] < bound {
                    pairing[idx] += 1;
                    break;
                }
                pairing[idx] = 0;
                idx += 1;
            }
        }
    }
    found.into_iter().collect()
}

/// The FCR classification of the prime factor attached to `ideal`.
pub fn fcr_decide(group: &WeylGroup, ideal: &LinearIdeal) -> Result<FcrVerdict> {
    let rs = ideal.system().as_ref();
    let mut witnesses: Vec<(usize, LinearIdeal, Vec<RatVec>)> = Vec::new();
    for wi in 0..group.len() {
        let base = ideal.dot_act(group.element(group.inverse_index(wi)));
        if base.is_strongly_dominant() {
            let b_lambda = base.b_lambda_roots();
            witnesses.push((wi, base, b_lambda));
        }
    }
    if witnesses.is_empty() {
        let status = if rs.is_semisimple() {
            FcrStatus::NotFcr
        } else {
            FcrStatus::UnknownReductive
        };
        return Ok(FcrVerdict { status, witness: None, base_ideal: None, b_lambda: None });
    }
    let verdicts: Vec<bool> = witnesses
        .iter()
        .map(|(wi, _, b_lambda)| is_minimal_representative(rs, b_lambda, group.element(*wi)))
        .collect();
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        let good = witnesses[verdicts.iter().position(|&v| v).unwrap()].0;
        let bad = witnesses[verdicts.iter().position(|&v| !v).unwrap()].0;
        return Err(Error::Consistency(format!(
            "strongly dominant witnesses disagree on coset membership: \
             elements {good} and {bad} of the enumeration"
        )));
    }
    let (wi, base, b_lambda) = witnesses.into_iter().next().expect("nonempty");
    let positive = verdicts[0];
    let status = if positive {
        let point = ideal.variety().base_point();
        if ideal.dim() == 0 && rs.is_dominant_integral(point) {
            FcrStatus::FiniteDimensional
        } else {
            FcrStatus::Fcr
        }
    } else if rs.is_semisimple() {
        FcrStatus::NotFcr
    } else {
        FcrStatus::UnknownReductive
    };
    Ok(FcrVerdict {
        status,
        witness: Some(group.element(wi).clone()),
        base_ideal: Some(base),
        b_lambda: Some(b_lambda),
    })
}

/// The combinatorial side of the equivalence between annihilator equality
/// and coset membership, for a strongly dominant ideal: whether `w` sends
/// the integral base into the positive roots.
pub fn equivalence_bc(ideal: &LinearIdeal, w: &WeylElement) -> Result<bool> {
    if !ideal.is_strongly_dominant() {
        return Err(Error::InvalidParameter(
            "equivalence check requires a strongly dominant ideal".into(),
        ));
    }
    let rs = ideal.system().as_ref();
    Ok(is_minimal_representative(rs, &ideal.b_lambda_roots(), w))
}
