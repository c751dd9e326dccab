//! Dual-pair applications: partition utilities, the highest-weight
//! enumerations for Cases A and B, the explicit component ideals of the
//! weight closures with an independent stratum-hull oracle, the explicit
//! Weyl witnesses, the odd-multiplicity emptiness certificates, and the
//! kernel / Case C rank reports.
//!
//! Case conventions: A is (GL_k acting on M_{p,k} x M_{k,q}, gl_{p+q}); B
//! is (O_k on M_{k,n}, sp_{2n}); C is (Sp_{2k} on M_{k,n}, so_{2n}).

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::exactlin::{affine_hull_of_points, AffineSubspace, RatVec};
use crate::fcr::{fcr_decide, FcrStatus, FcrVerdict};
use crate::ideals::{canonicalize, zero_ideal, LinearIdeal};
use crate::rat::{rat, rat_int, Rat};
use crate::rootsys::{Kind, RootSystem};
use crate::weyl::{is_minimal_representative, WeylElement, WeylGroup};
use crate::{Error, Result};

/// A partition: weakly decreasing positive parts (trailing zeros trimmed by
/// the constructor).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition: the i-th part counts the parts that are >= i+1.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u64)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "0")
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join("+"))
        }
    }
}

/// All partitions with at most `max_parts` parts, each at most `max_part`.
pub fn partitions_up_to(max_parts: usize, max_part: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    fn rec(out: &mut Vec<Partition>, current: &mut Vec<u64>, left: usize, cap: u64) {
        out.push(Partition { parts: current.clone() });
        if left == 0 {
            return;
        }
        for v in (1..=cap).rev() {
            current.push(v);
            rec(out, current, left - 1, v);
            current.pop();
        }
    }
    rec(&mut out, &mut current, max_parts, max_part);
    out
}

/// One summand of the Case A decomposition: the partition pair and both
/// highest weights.
#[derive(Clone, Debug)]
pub struct CaseAWeight {
    pub alpha: Partition,
    pub beta: Partition,
    pub weight_g: RatVec,
    pub weight_k: RatVec,
}

/// Enumerate the Case A index set within a part bound: pairs with
/// `len(alpha) <= p`, `len(beta) <= q`, `len(alpha) + len(beta) <= k`.
pub fn enumerate_case_a(p: usize, q: usize, k: usize, bound: u64) -> Vec<CaseAWeight> {
    let n = p + q;
    let mut out = Vec::new();
    for alpha in partitions_up_to(p, bound) {
        for beta in partitions_up_to(q, bound) {
            if alpha.len() + beta.len() > k {
                continue;
            }
            let mut wg = vec![Rat::zero(); n];
            for j in 0..p {
                // Entry j is -k - alpha_{p-j} with alpha padded by zeros.
                wg[j] = rat_int(-(k as i64) - alpha.part(p - 1 - j) as i64);
            }
            for j in 0..q {
                wg[p + j] = rat_int(beta.part(j) as i64);
            }
            let mut wk = vec![Rat::zero(); k];
            for (i, &a) in alpha.parts().iter().enumerate() {
                wk[i] = rat_int(a as i64);
            }
            for (j, &b) in beta.parts().iter().enumerate() {
                wk[k - 1 - j] = rat_int(-(b as i64));
            }
            out.push(CaseAWeight {
                alpha: alpha.clone(),
                beta: beta.clone(),
                weight_g: RatVec::new(wg),
                weight_k: RatVec::new(wk),
            });
        }
    }
    out
}

/// The Case A component ideal over gl_n: coordinates 1..=m pinned to -k and
/// coordinates m+k+1..=n pinned to 0.
pub fn omega_case_a(system: &Arc<RootSystem>, m: usize, k: usize) -> Result<LinearIdeal> {
    let n = system.ambient_dim();
    if system.kind() != Kind::Gl {
        return Err(Error::InvalidParameter("Case A ideals live over GL(n)".into()));
    }
    if k == 0 || k >= n || m > n - k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < n and 0 <= m <= n - k; got m = {m}, k = {k}, n = {n}"
        )));
    }
    let mut gens: Vec<(RatVec, Rat)> = Vec::new();
    for i in 0..m {
        gens.push((RatVec::unit(n, i), rat_int(k as i64)));
    }
    for i in (m + k)..n {
        gens.push((RatVec::unit(n, i), Rat::zero()));
    }
    let ideal = canonicalize(system, &gens)?;
    debug_assert_eq!(ideal.dim(), k);
    Ok(ideal)
}

/// Component index set of the Case A closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PhiSet {
    /// The closure is all of h* (n <= k).
    FullSpace,
    Indices(Vec<usize>),
}

/// The index set over which the Case A closure decomposes, from the regime
/// tables; overlapping table rows are checked to agree with each other and
/// with the uniform range `max(0, p-k) ..= min(p, n-k)`.
pub fn phi_set(p: usize, q: usize, k: usize) -> Result<PhiSet> {
    let n = p + q;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if n <= k {
        return Ok(PhiSet::FullSpace);
    }
    let lo = p.saturating_sub(k);
    let hi = p.min(n - k);
    let uniform: Vec<usize> = (lo..=hi).collect();
    let mut rows: Vec<(String, Vec<usize>)> = Vec::new();
    if k < n && n <= 2 * k {
        if p <= n - k {
            rows.push(("mid/low".into(), (0..=p).collect()));
        }
        if n - k <= p && p <= k {
            rows.push(("mid/mid".into(), (0..=(n - k)).collect()));
        }
        if k <= p {
            rows.push(("mid/high".into(), ((p - k)..=(n - k)).collect()));
        }
    }
    if 2 * k <= n {
        if p <= k {
            rows.push(("wide/low".into(), (0..=p).collect()));
        }
        if k <= p && p <= n - k {
            rows.push(("wide/mid".into(), ((p - k)..=p).collect()));
        }
        if p >= n - k {
            rows.push(("wide/high".into(), ((p - k)..=(n - k)).collect()));
        }
    }
    for (name, row) in &rows {
        if row != &uniform {
            return Err(Error::Consistency(format!(
                "regime row {name} gives {row:?}, expected {uniform:?}"
            )));
        }
    }
    Ok(PhiSet::Indices(uniform))
}

/// Closure decomposition report shared by Cases A and B.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub index_set: Vec<usize>,
    pub components: Vec<LinearIdeal>,
    pub dims: Vec<usize>,
    pub oracle_agreement: bool,
    pub full_space: bool,
    pub note: Option<String>,
}

fn components_pairwise_incomparable(components: &[LinearIdeal]) -> bool {
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate() {
            if i != j && a.variety().contains(b.variety()) {
                return false;
            }
        }
    }
    true
}

fn hull_of_weights(weights: &[RatVec]) -> Option<AffineSubspace> {
    affine_hull_of_points(weights)
}

/// Stratum of the Case A weights with `len(alpha) = p - i` exactly; the
/// closure flavor admits every compatible `len(beta)`, the strict flavor
/// pins `len(beta)` to its maximum.
fn case_a_stratum(
    p: usize,
    q: usize,
    k: usize,
    i: usize,
    bound: u64,
    strict: bool,
) -> Vec<RatVec> {
    let la = p - i;
    let cap_b = q.min(k - la);
    enumerate_case_a(p, q, k, bound)
        .into_iter()
        .filter(|w| {
            w.alpha.len() == la && if strict { w.beta.len() == cap_b } else { w.beta.len() <= cap_b }
        })
        .map(|w| w.weight_g)
        .collect()
}

/// Decompose the Case A weight closure into component ideals and verify the
/// decomposition against stratum hulls computed at `bound` and `bound + 1`
/// (stabilization) in both stratum conventions.
pub fn closure_case_a(
    system: &Arc<RootSystem>,
    p: usize,
    q: usize,
    k: usize,
    bound: u64,
) -> Result<ClosureReport> {
    let n = p + q;
    if system.kind() != Kind::Gl || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected GL({n}) system")));
    }
    if n <= k {
        let all: Vec<RatVec> =
            enumerate_case_a(p, q, k, bound).into_iter().map(|w| w.weight_g).collect();
        let all_next: Vec<RatVec> =
            enumerate_case_a(p, q, k, bound + 1).into_iter().map(|w| w.weight_g).collect();
        let full = AffineSubspace::full(n);
        let agree = hull_of_weights(&all).as_ref() == Some(&full)
            && hull_of_weights(&all_next).as_ref() == Some(&full);
        return Ok(ClosureReport {
            index_set: Vec::new(),
            components: vec![zero_ideal(system)],
            dims: vec![n],
            oracle_agreement: agree,
            full_space: true,
            note: None,
        });
    }
    let PhiSet::Indices(indices) = phi_set(p, q, k)? else {
        unreachable!("n > k");
    };
    let components: Vec<LinearIdeal> = indices
        .iter()
        .map(|&m| omega_case_a(system, m, k))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = components.iter().map(|c| c.dim()).collect();
    let mut agree = components_pairwise_incomparable(&components);
    for (&i, component) in indices.iter().zip(&components) {
        let hull = hull_of_weights(&case_a_stratum(p, q, k, i, bound, false));
        let hull_next = hull_of_weights(&case_a_stratum(p, q, k, i, bound + 1, false));
        let hull_strict = hull_of_weights(&case_a_stratum(p, q, k, i, bound, true));
        let target = Some(component.variety().clone());
        if hull != target || hull_next != target || hull_strict != target {
            agree = false;
        }
    }
    Ok(ClosureReport {
        index_set: indices,
        components,
        dims,
        oracle_agreement: agree,
        full_space: false,
        note: None,
    })
}

/// The explicit Case A witness permutation: fixes 1..=i, shifts
/// i+1..=n-k up by k, and wraps the last k indices behind position i. The
/// returned element is checked to carry the top component ideal onto the
/// i-th one and to be a minimal coset representative; the extreme
/// components are checked strongly dominant.
pub fn witness_case_a(system: &Arc<RootSystem>, i: usize, n: usize, k: usize) -> Result<WeylElement> {
    if system.kind() != Kind::Gl || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected GL({n}) system")));
    }
    if k == 0 || k >= n || i > n - k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < n and 0 <= i <= n - k; got i = {i}, k = {k}, n = {n}"
        )));
    }
    // sigma(j) as a 1-based permutation.
    let sigma = |j: usize| -> usize {
        if j <= i {
            j
        } else if j <= n - k {
            j + k
        } else {
            j + k + i - n
        }
    };
    let mut matrix = vec![RatVec::zeros(n); n];
    for j in 1..=n {
        // w(eps_j) = eps_{sigma(j)}: column j-1 has a one in row sigma(j)-1.
        let row = sigma(j) - 1;
        let mut entries = matrix[row].entries().to_vec();
        entries[j - 1] = rat_int(1);
        matrix[row] = RatVec::new(entries);
    }
    let w = WeylElement::from_matrix(system, matrix)?;

    let top = omega_case_a(system, n - k, k)?;
    let omega_i = omega_case_a(system, i, k)?;
    if top.dot_act(&w) != omega_i {
        return Err(Error::Consistency(format!(
            "witness {i} does not carry the top component onto component {i}"
        )));
    }
    if !is_minimal_representative(system, &top.b_lambda_roots(), &w) {
        return Err(Error::Consistency(format!(
            "witness {i} is not a minimal coset representative"
        )));
    }
    let omega_0 = omega_case_a(system, 0, k)?;
    if !omega_0.is_strongly_dominant() || !top.is_strongly_dominant() {
        return Err(Error::Consistency(
            "extreme Case A components must be strongly dominant".into(),
        ));
    }
    if i == n - k && !w.is_identity() {
        return Err(Error::Consistency("witness at the top index must be the identity".into()));
    }
    Ok(w)
}

/// One summand of the Case B decomposition.
#[derive(Clone, Debug)]
pub struct CaseBWeight {
    pub mu: Partition,
    pub weight: RatVec,
}

/// Enumerate the Case B index set within a part bound: partitions with
/// `mu'_1 + mu'_2 <= k` and at most `n` parts; the sp_{2n} weight has its
/// first `n - len(mu)` coordinates equal to `-k/2` and then descends by the
/// parts of `mu` in reverse.
pub fn enumerate_case_b(n: usize, k: usize, bound: u64) -> Vec<CaseBWeight> {
    let mut out = Vec::new();
    for mu in partitions_up_to(n.min(k), bound) {
        let conj = mu.conjugate();
        if conj.part(0) + conj.part(1) > k as u64 {
            continue;
        }
        let ell = mu.len();
        let mut w = vec![rat(-(k as i64), 2); n];
        for j in 1..=ell {
            w[n - ell + j - 1] = rat(-(k as i64), 2) - rat_int(mu.part(ell - j) as i64);
        }
        out.push(CaseBWeight { mu, weight: RatVec::new(w) });
    }
    out
}

/// The Case B component ideal over sp_{2n} with k = 2p: the variety pins
/// `a_1 .. a_r = -p` and `a_{r+1} .. a_s = -p-1` with `r = n-p-i`,
/// `s = n-p+i`. The crossing generator this forces is `H_r - 1`; the
/// alternative sign `H_r + 1` is inconsistent with the stratum hulls.
pub fn omega_case_b(system: &Arc<RootSystem>, i: usize, n: usize, p: usize) -> Result<LinearIdeal> {
    if system.kind() != Kind::C || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected C({n}) system")));
    }
    if p == 0 || p >= n || i > p.min(n - p) {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= p < n and 0 <= i <= min(p, n-p); got i = {i}, p = {p}, n = {n}"
        )));
    }
    let r = n - p - i;
    let s = n - p + i;
    let mut gens: Vec<(RatVec, Rat)> = Vec::new();
    for j in 0..r {
        gens.push((RatVec::unit(n, j), rat_int(p as i64)));
    }
    for j in r..s {
        gens.push((RatVec::unit(n, j), rat_int(p as i64 + 1)));
    }
    let ideal = canonicalize(system, &gens)?;
    debug_assert_eq!(ideal.dim(), p - i);
    Ok(ideal)
}

/// Decompose the Case B weight closure (k = 2p) into component ideals,
/// verified against the stratum hulls `mu'_1 = p + i` at `bound` and
/// `bound + 1`, and check that the sub-threshold weights fall into the
/// dense component.
pub fn closure_case_b(
    system: &Arc<RootSystem>,
    n: usize,
    p: usize,
    bound: u64,
) -> Result<ClosureReport> {
    if system.kind() != Kind::C || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected C({n}) system")));
    }
    let k = 2 * p;
    if p >= n {
        // k >= 2n: the closure is everything.
        let full = AffineSubspace::full(n);
        let agree = [bound, bound + 1].iter().all(|&b| {
            let pts: Vec<RatVec> =
                enumerate_case_b(n, k, b).into_iter().map(|w| w.weight).collect();
            hull_of_weights(&pts).as_ref() == Some(&full)
        });
        return Ok(ClosureReport {
            index_set: Vec::new(),
            components: vec![zero_ideal(system)],
            dims: vec![n],
            oracle_agreement: agree,
            full_space: true,
            note: None,
        });
    }
    let indices: Vec<usize> = (0..=p.min(n - p)).collect();
    let components: Vec<LinearIdeal> = indices
        .iter()
        .map(|&i| omega_case_b(system, i, n, p))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = components.iter().map(|c| c.dim()).collect();
    let mut agree = components_pairwise_incomparable(&components);
    for (&i, component) in indices.iter().zip(&components) {
        let target = Some(component.variety().clone());
        for b in [bound, bound + 1] {
            let stratum: Vec<RatVec> = enumerate_case_b(n, k, b)
                .into_iter()
                .filter(|w| w.mu.len() == p + i)
                .map(|w| w.weight)
                .collect();
            if hull_of_weights(&stratum) != target {
                agree = false;
            }
        }
    }
    // Weights below the threshold stratum lie in the dense component.
    let dense = &components[0];
    for w in enumerate_case_b(n, k, bound) {
        if w.mu.len() < p && !dense.variety().contains_point(&w.weight) {
            agree = false;
        }
    }
    Ok(ClosureReport {
        index_set: indices,
        components,
        dims,
        oracle_agreement: agree,
        full_space: false,
        note: Some(
            "component generators pin a_1..a_r to -p and a_{r+1}..a_s to -p-1; \
             the crossing generator is H_r - 1, the sign forced by the stratum hulls"
                .into(),
        ),
    })
}

/// The Case B base ideal `(H_{p+1}, ..., H_n)` together with the explicit
/// block-rotation witness carrying it onto the dense component, and the
/// resulting verdict. All claims are checked; a failure is reported as an
/// internal inconsistency.
#[derive(Clone, Debug)]
pub struct CaseBFcr {
    pub base: LinearIdeal,
    pub witness: WeylElement,
    pub verdict: FcrVerdict,
}

pub fn case_b_fcr(
    system: &Arc<RootSystem>,
    group: &WeylGroup,
    n: usize,
    p: usize,
) -> Result<CaseBFcr> {
    if system.kind() != Kind::C || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected C({n}) system")));
    }
    if p == 0 || p >= n {
        return Err(Error::InvalidParameter("need 1 <= p < n".into()));
    }
    // (H_{p+1}, ..., H_n): variety {a : a_{p+1} = ... = a_n = 0}.
    let mut gens: Vec<(RatVec, Rat)> = Vec::new();
    for j in (p + 1)..n {
        let mut e = vec![Rat::zero(); n];
        e[j - 1] = rat_int(1);
        e[j] = rat_int(-1);
        gens.push((RatVec::new(e), Rat::zero()));
    }
    gens.push((RatVec::unit(n, n - 1), Rat::zero()));
    let base = canonicalize(system, &gens)?;

    // (w a)_i = a_{i+p} for i <= n-p and a_{i+p-n} beyond: row i-1 has a
    // one in column sigma(i)-1.
    let sigma = |i: usize| -> usize { if i <= n - p { i + p } else { i + p - n } };
    let mut matrix = vec![RatVec::zeros(n); n];
    for (row, m) in matrix.iter_mut().enumerate() {
        let mut entries = m.entries().to_vec();
        entries[sigma(row + 1) - 1] = rat_int(1);
        *m = RatVec::new(entries);
    }
    let witness = WeylElement::from_matrix(system, matrix)?;

    if !base.is_strongly_dominant() {
        return Err(Error::Consistency("Case B base ideal must be strongly dominant".into()));
    }
    let omega0 = omega_case_b(system, 0, n, p)?;
    if base.dot_act(&witness) != omega0 {
        return Err(Error::Consistency(
            "Case B witness does not carry the base ideal onto the dense component".into(),
        ));
    }
    if !is_minimal_representative(system, &base.b_lambda_roots(), &witness) {
        return Err(Error::Consistency(
            "Case B witness is not a minimal coset representative".into(),
        ));
    }
    let verdict = fcr_decide(group, &omega0)?;
    if verdict.status != FcrStatus::Fcr {
        return Err(Error::Consistency(format!(
            "dense Case B component must be FCR, got {}",
            verdict.status.as_str()
        )));
    }
    Ok(CaseBFcr { base, witness, verdict })
}

/// Emptiness report for odd k (< 2n): closure components from the stratum
/// hulls, the bounded weight sets of every component (must be empty), and
/// for every component and group element a root whose coroot functional is
/// constant and non-integral on the pulled-back variety.
#[derive(Clone, Debug)]
pub struct OddKReport {
    pub components: Vec<LinearIdeal>,
    pub empty: bool,
    /// certificates[c][w] is a root id with non-integral constant pairing
    /// on the w-pullback of component c.
    pub certificates: Vec<Vec<Option<usize>>>,
}

pub fn odd_k_case_b(
    system: &Arc<RootSystem>,
    group: &WeylGroup,
    n: usize,
    k: usize,
    bound: u64,
) -> Result<OddKReport> {
    if system.kind() != Kind::C || system.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!("expected C({n}) system")));
    }
    if k % 2 == 0 || k >= 2 * n {
        return Err(Error::InvalidParameter("need odd k with k < 2n".into()));
    }
    // Maximal stratum hulls are the closure components.
    let mut hulls: Vec<AffineSubspace> = Vec::new();
    for ell in 0..=n.min(k) {
        let stab: Vec<Vec<RatVec>> = [bound, bound + 1]
            .iter()
            .map(|&b| {
                enumerate_case_b(n, k, b)
                    .into_iter()
                    .filter(|w| w.mu.len() == ell)
                    .map(|w| w.weight)
                    .collect()
            })
            .collect();
        match (hull_of_weights(&stab[0]), hull_of_weights(&stab[1])) {
            (Some(a), Some(b)) if a == b => hulls.push(a),
            (None, None) => {}
            _ => {
                return Err(Error::Consistency(format!(
                    "stratum {ell} hull did not stabilize at bound {bound}"
                )))
            }
        }
    }
    let maximal: Vec<AffineSubspace> = hulls
        .iter()
        .filter(|h| !hulls.iter().any(|other| *h != other && other.contains(h)))
        .cloned()
        .collect();
    let mut components: Vec<LinearIdeal> = Vec::new();
    for h in maximal {
        let ideal = crate::ideals::from_variety(system, h);
        if !components.contains(&ideal) {
            components.push(ideal);
        }
    }

    let mut empty = true;
    let mut certificates = Vec::with_capacity(components.len());
    for component in &components {
        if !crate::fcr::lambda_set(group, component, bound).is_empty() {
            empty = false;
        }
        let mut per_w: Vec<Option<usize>> = Vec::with_capacity(group.len());
        for wi in 0..group.len() {
            let pulled = component.dot_act(group.element(group.inverse_index(wi)));
            let cert = (0..system.all_roots().len()).find(|&t| {
                let covee = system.coroot_of_id(t);
                let constant = pulled
                    .variety()
                    .direction_basis()
                    .iter()
                    .all(|d| covee.dot(d).is_zero());
                constant && !covee.dot(pulled.variety().base_point()).is_integer()
            });
            if cert.is_none() {
                empty = false;
            }
            per_w.push(cert);
        }
        certificates.push(per_w);
    }
    Ok(OddKReport { components, empty, certificates })
}

/// The rank data of a dual pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DualPairCase {
    A { p: usize, q: usize, k: usize },
    B { n: usize, k: usize },
    C { n: usize, k: usize },
}

impl DualPairCase {
    pub fn letter(&self) -> &'static str {
        match self {
            DualPairCase::A { .. } => "A",
            DualPairCase::B { .. } => "B",
            DualPairCase::C { .. } => "C",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            DualPairCase::A { p, q, .. } => p + q,
            DualPairCase::B { n, .. } | DualPairCase::C { n, .. } => n,
        }
    }

    /// Rank of the reductive Lie algebra side.
    pub fn rank_g(&self) -> usize {
        self.n()
    }

    /// Rank of the group side: k for GL_k and Sp_{2k}, floor(k/2) for O_k.
    pub fn rank_k(&self) -> usize {
        match *self {
            DualPairCase::A { k, .. } => k,
            DualPairCase::B { k, .. } => k / 2,
            DualPairCase::C { k, .. } => k,
        }
    }
}

/// Case C facts: the closure is irreducible and the factor has enough
/// finite-dimensional modules (both imported facts); the closure is all of
/// h* exactly when n <= k.
#[derive(Clone, Copy, Debug)]
pub struct CaseCReport {
    pub irreducible: bool,
    pub full_space: bool,
    pub fcr: bool,
}

pub fn case_c_report(n: usize, k: usize) -> CaseCReport {
    CaseCReport { irreducible: true, full_space: n <= k, fcr: true }
}

/// Kernel report: the rank comparison deciding a zero kernel, the closure
/// decomposition where one is computed, and for even Case B the dense
/// component marked as the kernel's combinatorial datum via the dimension
/// comparison.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub case: DualPairCase,
    pub rank_g: usize,
    pub rank_k: usize,
    pub kernel_is_zero: bool,
    pub closure: Option<ClosureReport>,
    /// Index into `closure.components` of the kernel's combinatorial datum
    /// (even Case B only).
    pub kernel_component: Option<usize>,
    pub case_c: Option<CaseCReport>,
}

pub fn kernel_report(case: DualPairCase, bound: u64) -> Result<KernelReport> {
    let rank_g = case.rank_g();
    let rank_k = case.rank_k();
    let kernel_is_zero = rank_g <= rank_k;
    match case {
        DualPairCase::A { p, q, k } => {
            let system = crate::rootsys::build(Kind::Gl, p + q)?;
            let closure = closure_case_a(&system, p, q, k, bound)?;
            Ok(KernelReport {
                case,
                rank_g,
                rank_k,
                kernel_is_zero,
                closure: Some(closure),
                kernel_component: None,
                case_c: None,
            })
        }
        DualPairCase::B { n, k } => {
            let system = crate::rootsys::build(Kind::C, n)?;
            if k % 2 == 0 && k < 2 * n {
                let p = k / 2;
                let closure = closure_case_b(&system, n, p, bound)?;
                // The dense component has dimension p, every other one
                // p - i < p.
                let dims_ok = closure.dims[0] == p
                    && closure.dims.iter().skip(1).all(|&d| d < p);
                if !dims_ok {
                    return Err(Error::Consistency(
                        "dense Case B component is not the unique maximal dimension".into(),
                    ));
                }
                Ok(KernelReport {
                    case,
                    rank_g,
                    rank_k,
                    kernel_is_zero,
                    closure: Some(closure),
                    kernel_component: Some(0),
                    case_c: None,
                })
            } else if k % 2 == 1 && k < 2 * n {
                let group = crate::weyl::enumerate_group(&system)?;
                let odd = odd_k_case_b(&system, &group, n, k, bound)?;
                Ok(KernelReport {
                    case,
                    rank_g,
                    rank_k,
                    kernel_is_zero,
                    closure: Some(ClosureReport {
                        index_set: (0..odd.components.len()).collect(),
                        dims: odd.components.iter().map(|c| c.dim()).collect(),
                        components: odd.components,
                        oracle_agreement: odd.empty,
                        full_space: false,
                        note: Some("odd multiplicity: no bounded dominant weights".into()),
                    }),
                    kernel_component: None,
                    case_c: None,
                })
            } else {
                // k >= 2n: the closure is everything.
                Ok(KernelReport {
                    case,
                    rank_g,
                    rank_k,
                    kernel_is_zero,
                    closure: None,
                    kernel_component: None,
                    case_c: None,
                })
            }
        }
        DualPairCase::C { n, k } => Ok(KernelReport {
            case,
            rank_g,
            rank_k,
            kernel_is_zero,
            closure: None,
            kernel_component: None,
            case_c: Some(case_c_report(n, k)),
        }),
    }
}
