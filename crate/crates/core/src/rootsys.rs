//! Classical root systems in epsilon-coordinates with exact rational data:
//! roots, coroots, rho, the invariant form, fundamental weights, closed
//! subsystems, and dominance tests.
//!
//! The reductive GL(n) realization shares its roots with A(n-1) inside Q^n
//! but is flagged non-semisimple; dominance and integrality never constrain
//! the center coordinate because they are expressed through coroot pairings.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::exactlin::{solve_affine, RatVec};
use crate::rat::{is_natural, rat, rat_int, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    /// gl_n: reductive, roots eps_i - eps_j.
    Gl,
    /// A(n-1) realized inside Q^n (same roots as GL(n), semisimple).
    A,
    /// so_{2n+1}: eps_i +- eps_j and short eps_i.
    B,
    /// sp_{2n}: eps_i +- eps_j and long 2 eps_i.
    C,
    /// so_{2n}: eps_i +- eps_j only.
    D,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Kind::Gl),
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            other => Err(Error::UnsupportedSystem { kind: other.to_string(), n: 0 }),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Gl => "GL",
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
        };
        write!(f, "{s}")
    }
}

/// A classical root system realized in Q^n. Positive roots, simple roots,
/// rho and per-root coroots are precomputed; roots are indexed with
/// positives first, so the negative of root `i` has index `i +- m` where `m`
/// is the number of positive roots.
#[derive(Debug)]
pub struct RootSystem {
    kind: Kind,
    n: usize,
    positive_roots: Vec<RatVec>,
    simple_roots: Vec<RatVec>,
    rho: RatVec,
    is_semisimple: bool,
    all_roots: Vec<RatVec>,
    coroots: Vec<RatVec>,
    index: HashMap<RatVec, usize>,
    fundamental_weights: Vec<RatVec>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.n == other.n
    }
}
impl Eq for RootSystem {}

/// Closed subsystem of a root system, stored as root indices into the
/// parent. `rho_prime` is half the sum of its positive part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subsystem {
    root_ids: BTreeSet<usize>,
    positive_ids: Vec<usize>,
    simple_ids: Vec<usize>,
    rho_prime: RatVec,
}

impl Subsystem {
    pub fn root_ids(&self) -> &BTreeSet<usize> {
        &self.root_ids
    }

    pub fn positive_ids(&self) -> &[usize] {
        &self.positive_ids
    }

    pub fn simple_ids(&self) -> &[usize] {
        &self.simple_ids
    }

    pub fn rho_prime(&self) -> &RatVec {
        &self.rho_prime
    }

    pub fn contains(&self, root_id: usize) -> bool {
        self.root_ids.contains(&root_id)
    }

    pub fn simple_roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a RatVec> {
        self.simple_ids.iter().map(|&i| rs.root(i)).collect()
    }
}

pub fn build(kind: Kind, n: usize) -> Result<Arc<RootSystem>> {
    let min = match kind {
        Kind::D => 2,
        _ => 1,
    };
    if n < min || n > 8 {
        return Err(Error::UnsupportedSystem { kind: kind.to_string(), n });
    }
    let mut positives: Vec<RatVec> = Vec::new();
    let two_entry = |i: usize, j: usize, cj: i64| {
        let mut e = vec![Rat::zero(); n];
        e[i] = rat_int(1);
        e[j] = rat_int(cj);
        RatVec::new(e)
    };
    for i in 0..n {
        for j in (i + 1)..n {
            positives.push(two_entry(i, j, -1));
        }
    }
    if matches!(kind, Kind::B | Kind::C | Kind::D) {
        for i in 0..n {
            for j in (i + 1)..n {
                positives.push(two_entry(i, j, 1));
            }
        }
    }
    match kind {
        Kind::B => {
            for i in 0..n {
                positives.push(RatVec::unit(n, i));
            }
        }
        Kind::C => {
            for i in 0..n {
                positives.push(RatVec::unit(n, i).scale(&rat_int(2)));
            }
        }
        _ => {}
    }

    let mut simple: Vec<RatVec> =
        (0..n.saturating_sub(1)).map(|i| two_entry(i, i + 1, -1)).collect();
    match kind {
        Kind::B => simple.push(RatVec::unit(n, n - 1)),
        Kind::C => simple.push(RatVec::unit(n, n - 1).scale(&rat_int(2))),
        Kind::D => simple.push(two_entry(n - 2, n - 1, 1)),
        _ => {}
    }

    let mut rho = RatVec::zeros(n);
    for r in &positives {
        rho = &rho + r;
    }
    let rho = rho.scale(&rat(1, 2));

    let mut all_roots = positives.clone();
    all_roots.extend(positives.iter().map(|r| -r));
    let coroots: Vec<RatVec> = all_roots
        .iter()
        .map(|r| r.scale(&(rat_int(2) / r.dot(r))))
        .collect();
    let index: HashMap<RatVec, usize> =
        all_roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

    let mut rs = RootSystem {
        kind,
        n,
        positive_roots: positives,
        simple_roots: simple,
        rho,
        is_semisimple: kind != Kind::Gl,
        all_roots,
        coroots,
        index,
        fundamental_weights: Vec::new(),
    };
    rs.fundamental_weights = compute_fundamental_weights(&rs)?;
    Ok(Arc::new(rs))
}

fn compute_fundamental_weights(rs: &RootSystem) -> Result<Vec<RatVec>> {
    let n = rs.n;
    match rs.kind {
        // Prefix sums: the standard choice for gl_n, also valid for the
        // A-realization since only coroot pairings matter.
        Kind::Gl | Kind::A => Ok((0..rs.simple_roots.len())
            .map(|i| {
                let mut e = RatVec::zeros(n).entries().to_vec();
                for x in e.iter_mut().take(i + 1) {
                    *x = rat_int(1);
                }
                RatVec::new(e)
            })
            .collect()),
        _ => {
            let mut out = Vec::with_capacity(n);
            for i in 0..rs.simple_roots.len() {
                let functionals: Vec<(RatVec, Rat)> = rs
                    .simple_roots
                    .iter()
                    .enumerate()
                    .map(|(j, a)| {
                        let target = if i == j { rat_int(-1) } else { Rat::zero() };
                        (rs.coroot_unchecked(a), target)
                    })
                    .collect();
                let space = solve_affine(&functionals, n).ok_or_else(|| {
                    Error::Consistency("fundamental weight system is inconsistent".into())
                })?;
                out.push(space.base_point().clone());
            }
            Ok(out)
        }
    }
}

impl RootSystem {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_semisimple(&self) -> bool {
        self.is_semisimple
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn positive_roots(&self) -> &[RatVec] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_roots(&self) -> &[RatVec] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &RatVec {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[RatVec] {
        &self.fundamental_weights
    }

    pub fn all_roots(&self) -> &[RatVec] {
        &self.all_roots
    }

    pub fn root(&self, id: usize) -> &RatVec {
        &self.all_roots[id]
    }

    pub fn root_id(&self, v: &RatVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive_id(&self, id: usize) -> bool {
        id < self.num_positive()
    }

    pub fn negate_id(&self, id: usize) -> usize {
        let m = self.num_positive();
        if id < m {
            id + m
        } else {
            id - m
        }
    }

    fn coroot_unchecked(&self, alpha: &RatVec) -> RatVec {
        alpha.scale(&(rat_int(2) / alpha.dot(alpha)))
    }

    /// `2 alpha / (alpha, alpha)` for a root `alpha` of this system.
    pub fn coroot(&self, alpha: &RatVec) -> Result<RatVec> {
        if self.root_id(alpha).is_none() {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(self.coroot_unchecked(alpha))
    }

    pub fn coroot_of_id(&self, id: usize) -> &RatVec {
        &self.coroots[id]
    }

    /// The invariant symmetric bilinear form, realized as the standard dot
    /// product in epsilon-coordinates.
    pub fn form_pairing(&self, mu: &RatVec, nu: &RatVec) -> Rat {
        mu.dot(nu)
    }

    /// `(mu, alpha_vee)` without requiring `alpha` to be a root of the
    /// system (used for arbitrary vectors in tests).
    pub fn coroot_pairing(&self, mu: &RatVec, alpha: &RatVec) -> Rat {
        mu.dot(alpha) * rat_int(2) / alpha.dot(alpha)
    }

    /// True iff every simple-coroot pairing is a nonnegative integer. For
    /// GL(n) the center coordinate is unconstrained.
    pub fn is_dominant_integral(&self, mu: &RatVec) -> bool {
        self.simple_roots
            .iter()
            .all(|a| is_natural(&self.coroot_pairing(mu, a)))
    }

    /// True iff `mu` is an integer combination of roots.
    pub fn root_lattice_contains(&self, mu: &RatVec) -> bool {
        assert_eq!(mu.dim(), self.n);
        let srank = self.simple_roots.len();
        // Solve sum c_i alpha_i = mu for c in Q^srank; the simple roots are
        // linearly independent so the solution is unique when it exists.
        let functionals: Vec<(RatVec, Rat)> = (0..self.n)
            .map(|r| {
                let row = RatVec::new(
                    self.simple_roots.iter().map(|a| a[r].clone()).collect(),
                );
                (row, -&mu[r])
            })
            .collect();
        match solve_affine(&functionals, srank) {
            None => false,
            Some(space) => {
                debug_assert_eq!(space.dim(), 0);
                space.base_point().iter().all(|c| c.is_integer())
            }
        }
    }

    /// Closure of a generating set of roots under the reflection subgroup it
    /// generates, intersected with R; returns the subsystem with its
    /// positive part, simple basis, and rho'.
    pub fn subsystem(&self, generators: &[RatVec]) -> Result<Subsystem> {
        let mut ids = BTreeSet::new();
        for g in generators {
            let id = self.root_id(g).ok_or_else(|| Error::NotARoot(g.to_string()))?;
            ids.insert(id);
            ids.insert(self.negate_id(id));
        }
        loop {
            let current: Vec<usize> = ids.iter().copied().collect();
            let mut grew = false;
            for &b in &current {
                for &c in &current {
                    let image = self.reflect_root(b, c);
                    if ids.insert(image) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Ok(self.subsystem_from_ids(ids))
    }

    pub(crate) fn subsystem_from_ids(&self, root_ids: BTreeSet<usize>) -> Subsystem {
        let positive_ids: Vec<usize> =
            root_ids.iter().copied().filter(|&i| self.is_positive_id(i)).collect();
        let positive_roots: Vec<RatVec> =
            positive_ids.iter().map(|&i| self.root(i).clone()).collect();
        let simple = self.indecomposable_simples(&positive_roots);
        let simple_ids: Vec<usize> =
            simple.iter().map(|r| self.root_id(r).expect("closed subset")).collect();
        let mut rho_prime = RatVec::zeros(self.n);
        for r in &positive_roots {
            rho_prime = &rho_prime + r;
        }
        Subsystem {
            root_ids,
            positive_ids,
            simple_ids,
            rho_prime: rho_prime.scale(&rat(1, 2)),
        }
    }

    /// Subsystem generated by a subset of the simple roots (0-based
    /// indices), the parabolic case.
    pub fn standard_subsystem(&self, simple_indices: &[usize]) -> Result<Subsystem> {
        let gens: Vec<RatVec> = simple_indices
            .iter()
            .map(|&i| {
                self.simple_roots
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidParameter(format!("simple index {i}")))
            })
            .collect::<Result<_>>()?;
        self.subsystem(&gens)
    }

    /// Index of `s_{root b}(root c)`.
    pub(crate) fn reflect_root(&self, b: usize, c: usize) -> usize {
        let beta = self.root(b);
        let gamma = self.root(c);
        let coeff = self.coroot_pairing(gamma, beta);
        let image = gamma.sub_scaled(&coeff, beta);
        self.root_id(&image).expect("root systems are closed under their reflections")
    }

    /// Elements of a positive subset not expressible as a sum of two
    /// elements of the subset.
    pub fn indecomposable_simples(&self, positive_subset: &[RatVec]) -> Vec<RatVec> {
        let set: BTreeSet<&RatVec> = positive_subset.iter().collect();
        positive_subset
            .iter()
            .filter(|a| {
                !positive_subset.iter().any(|b| {
                    let rest = *a - b;
                    !rest.is_zero() && set.contains(&rest)
                })
            })
            .cloned()
            .collect()
    }
}
