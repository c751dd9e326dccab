//! Linear prime ideals of S(h): canonical form, the dot action on
//! degree-one generators, integral root data (the roots whose coroot
//! pairing is a constant integer on the variety), the strong-dominance
//! density decision, dominance, the weight-class trichotomy, and the
//! tau-invariant.
//!
//! An ideal here is generated by affine-linear elements `h + c`; its variety
//! is an affine subspace of h*, and the ideal is represented by that variety
//! in canonical form, so ideal equality is field-by-field comparison.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::exactlin::{
    cone_is_fulldim, integral_points, nullspace, rref, solve_affine, AffineLattice,
    AffineSubspace, RatVec,
};
use crate::rat::{is_natural, rat_int, Rat};
use crate::rootsys::RootSystem;
use crate::weyl::{inversion_sum, WeylElement};
use crate::{Error, Result};

/// A prime ideal of S(h) generated in degree <= 1, canonicalized. The
/// canonical functional list is the reduced-echelon basis of the space of
/// affine functionals vanishing on the variety, each entry meaning the map
/// `mu -> h . mu + c`.
#[derive(Clone, Debug)]
pub struct LinearIdeal {
    system: Arc<RootSystem>,
    functionals: Vec<(RatVec, Rat)>,
    variety: AffineSubspace,
}

impl PartialEq for LinearIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.variety == other.variety
    }
}
impl Eq for LinearIdeal {}

/// The integral root data of the tautological highest weight: roots whose
/// coroot pairing is a constant integer on the variety, together with those
/// constants and the simple basis of the positive part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRootData {
    pub r_lambda: BTreeSet<usize>,
    pub b_lambda: Vec<usize>,
    pub constants: BTreeMap<usize, Rat>,
}

/// Classification of the tautological highest weight by the shifted values
/// `n_alpha + (rho, alpha_vee)` over the base of the integral subsystem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaClass {
    Strict,
    Weak,
    Neither,
}

/// Canonicalize a generating list of affine functionals into a
/// `LinearIdeal`; fails when the system is inconsistent (the variety would
/// be empty, so the ideal is not a proper prime of this shape).
pub fn canonicalize(
    system: &Arc<RootSystem>,
    functionals: &[(RatVec, Rat)],
) -> Result<LinearIdeal> {
    let n = system.ambient_dim();
    for (h, _) in functionals {
        if h.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: h.dim() });
        }
    }
    let variety = solve_affine(functionals, n).ok_or(Error::EmptyVariety)?;
    Ok(from_variety(system, variety))
}

/// The ideal of affine functionals vanishing on a given subspace.
pub fn from_variety(system: &Arc<RootSystem>, variety: AffineSubspace) -> LinearIdeal {
    let n = system.ambient_dim();
    debug_assert_eq!(variety.ambient_dim(), n);
    let (dir_rows, dir_pivots) = rref(variety.direction_basis());
    let h_basis = nullspace(&dir_rows, &dir_pivots, n);
    let functionals: Vec<(RatVec, Rat)> = h_basis
        .into_iter()
        .map(|h| {
            let c = -h.dot(variety.base_point());
            (h, c)
        })
        .collect();
    LinearIdeal { system: system.clone(), functionals, variety }
}

/// The maximal ideal of a point of h*.
pub fn point_ideal(system: &Arc<RootSystem>, mu: &RatVec) -> LinearIdeal {
    from_variety(system, AffineSubspace::point(mu.clone()))
}

/// The zero ideal: its variety is all of h*.
pub fn zero_ideal(system: &Arc<RootSystem>) -> LinearIdeal {
    from_variety(system, AffineSubspace::full(system.ambient_dim()))
}

impl LinearIdeal {
    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn functionals(&self) -> &[(RatVec, Rat)] {
        &self.functionals
    }

    pub fn variety(&self) -> &AffineSubspace {
        &self.variety
    }

    pub fn dim(&self) -> usize {
        self.variety.dim()
    }

    /// Dot action on the ideal: each generator `h + c` maps to
    /// `w h + (c - h(<Q(w)>))`; the variety transforms as
    /// `V(w.I) = w . V(I)`.
    pub fn dot_act(&self, w: &WeylElement) -> LinearIdeal {
        let rs = self.system.as_ref();
        let qsum = inversion_sum(rs, w);
        let gens: Vec<(RatVec, Rat)> = self
            .functionals
            .iter()
            .map(|(h, c)| {
                let shift = h.dot(&qsum);
                (w.apply(h), c - &shift)
            })
            .collect();
        canonicalize(&self.system, &gens).expect("dot action preserves nonemptiness")
    }

    /// Roots whose coroot functional restricts to a constant integer on the
    /// variety, with those constants and the simple basis of the positive
    /// part.
    pub fn integral_root_data(&self) -> IntegralRootData {
        let rs = self.system.as_ref();
        let m = rs.num_positive();
        let mut r_lambda = BTreeSet::new();
        let mut constants = BTreeMap::new();
        for t in 0..m {
            let covee = rs.coroot_of_id(t);
            let constant = self
                .variety
                .direction_basis()
                .iter()
                .all(|d| covee.dot(d).is_zero());
            if !constant {
                continue;
            }
            let value = covee.dot(self.variety.base_point());
            if value.is_integer() {
                r_lambda.insert(t);
                r_lambda.insert(rs.negate_id(t));
                constants.insert(rs.negate_id(t), -&value);
                constants.insert(t, value);
            }
        }
        let positive_roots: Vec<RatVec> = r_lambda
            .iter()
            .copied()
            .filter(|&t| rs.is_positive_id(t))
            .map(|t| rs.root(t).clone())
            .collect();
        let b_lambda = rs
            .indecomposable_simples(&positive_roots)
            .iter()
            .map(|r| rs.root_id(r).expect("roots of the system"))
            .collect();
        IntegralRootData { r_lambda, b_lambda, constants }
    }

    pub fn b_lambda_roots(&self) -> Vec<RatVec> {
        let rs = self.system.as_ref();
        self.integral_root_data()
            .b_lambda
            .iter()
            .map(|&t| rs.root(t).clone())
            .collect()
    }

    /// Simple-coroot functionals split into those constant on the variety
    /// (with their values) and the non-constant rest.
    fn split_simple_functionals(&self) -> (Vec<Rat>, Vec<RatVec>) {
        let rs = self.system.as_ref();
        let mut constants = Vec::new();
        let mut nonconstant = Vec::new();
        for alpha in rs.simple_roots() {
            let covee = alpha.scale(&(rat_int(2) / alpha.dot(alpha)));
            let is_const = self
                .variety
                .direction_basis()
                .iter()
                .all(|d| covee.dot(d).is_zero());
            if is_const {
                constants.push(covee.dot(self.variety.base_point()));
            } else {
                nonconstant.push(covee);
            }
        }
        (constants, nonconstant)
    }

    /// Density decision for the dominant integral points of the variety:
    /// (i) every simple-coroot functional constant on the variety takes a
    /// value in N; (ii) the non-constant ones admit a common integral point
    /// on the variety; (iii) their restrictions to the direction space cut
    /// out a full-dimensional cone. All three together decide Zariski
    /// density of the dominant integral points exactly.
    pub fn is_strongly_dominant(&self) -> bool {
        let (constants, nonconstant) = self.split_simple_functionals();
        if !constants.iter().all(is_natural) {
            return false;
        }
        if nonconstant.is_empty() {
            return true;
        }
        let fs: Vec<(RatVec, Rat)> =
            nonconstant.iter().map(|h| (h.clone(), Rat::zero())).collect();
        match integral_points(&self.variety, &fs) {
            Ok(Some(_)) => {}
            Ok(None) => return false,
            Err(_) => unreachable!("constant functionals were filtered"),
        }
        let dirs = self.variety.direction_basis();
        let restricted: Vec<RatVec> = nonconstant
            .iter()
            .map(|h| RatVec::new(dirs.iter().map(|d| h.dot(d)).collect()))
            .collect();
        cone_is_fulldim(dirs.len(), &restricted)
    }

    /// The integral lattice behind the density decision, exposed for
    /// inspection and tests: integral points of the variety under the
    /// non-constant simple-coroot functionals.
    pub fn integral_dominance_lattice(&self) -> Result<Option<AffineLattice>> {
        let (_, nonconstant) = self.split_simple_functionals();
        let fs: Vec<(RatVec, Rat)> =
            nonconstant.iter().map(|h| (h.clone(), Rat::zero())).collect();
        integral_points(&self.variety, &fs)
    }

    /// Dominance of the ideal: with `v_alpha = n_alpha + (rho, alpha_vee)`
    /// over the integral roots, every root with `v_alpha > 0` must be
    /// positive.
    pub fn is_dominant(&self) -> bool {
        let rs = self.system.as_ref();
        let data = self.integral_root_data();
        for &t in &data.r_lambda {
            let alpha = rs.root(t);
            let v = &data.constants[&t] + &rs.coroot_pairing(rs.rho(), alpha);
            if v.is_positive() && !rs.is_positive_id(t) {
                return false;
            }
        }
        true
    }

    /// Classify the tautological highest weight by the shifted constants
    /// over the base of the integral subsystem: strict when all are
    /// positive, weak when all are nonnegative, neither otherwise.
    pub fn lambda_plus_class(&self) -> LambdaClass {
        let rs = self.system.as_ref();
        let data = self.integral_root_data();
        let values: Vec<Rat> = data
            .b_lambda
            .iter()
            .map(|&t| &data.constants[&t] + &rs.coroot_pairing(rs.rho(), rs.root(t)))
            .collect();
        if values.iter().all(|v| v.is_positive()) {
            LambdaClass::Strict
        } else if values.iter().all(|v| !v.is_negative()) {
            LambdaClass::Weak
        } else {
            LambdaClass::Neither
        }
    }

    /// tau-invariant of `w`: the subset of the integral base sent into the
    /// negative roots by the linear action.
    pub fn tau_invariant(&self, w: &WeylElement) -> Vec<usize> {
        tau_invariant_of_base(self.system.as_ref(), &self.integral_root_data().b_lambda, w)
    }
}

/// tau-invariant over an explicit base, as root indices.
pub fn tau_invariant_of_base(rs: &RootSystem, b_lambda: &[usize], w: &WeylElement) -> Vec<usize> {
    b_lambda
        .iter()
        .copied()
        .filter(|&t| !rs.is_positive_id(w.map_root(t)))
        .collect()
}
