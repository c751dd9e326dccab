//! Weyl group elements and enumeration; inversion sets, lengths, reduced
//! words; the dot action; subsystem-stabilizer structure (the groups W_0 and
//! T, the semidirect factorization W_0 = W_1 T, the kappa involution); and
//! the parabolic-style coset decomposition w = u v with u sending the
//! subsystem base into the positive roots.
//!
//! Elements are stored as exact orthogonal matrices together with the
//! permutation they induce on the roots; the permutation is what makes the
//! exhaustive sweeps cheap. Enumeration is breadth-first over the simple
//! reflections with ascending indices, identity first, so element order is
//! reproducible.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exactlin::RatVec;
use crate::rat::Rat;
use crate::rootsys::{RootSystem, Subsystem};
use crate::{Error, Result};

/// Default cap on the number of enumerated elements; override with the
/// `WEYL_GROUP_CAP` environment variable.
pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// Rank guard for enumeration.
pub const MAX_ENUM_RANK: usize = 8;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Row-major matrix; `apply` is matrix times column vector.
    matrix: Vec<RatVec>,
    /// Image of each root index under the element.
    perm: Vec<u32>,
    /// A shortest word in simple reflections (0-based indices).
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm && self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.ambient_dim();
        WeylElement {
            matrix: (0..n).map(|i| RatVec::unit(n, i)).collect(),
            perm: (0..rs.all_roots().len() as u32).collect(),
            word: Some(Vec::new()),
        }
    }

    /// Reflection in an arbitrary root.
    pub fn reflection(rs: &RootSystem, alpha: &RatVec) -> Result<Self> {
        let id = rs.root_id(alpha).ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let n = rs.ambient_dim();
        let covee = rs.coroot_of_id(id).clone();
        let matrix: Vec<RatVec> = (0..n)
            .map(|i| RatVec::unit(n, i).sub_scaled(&alpha[i], &covee))
            .collect();
        let perm = (0..rs.all_roots().len())
            .map(|t| rs.reflect_root(id, t) as u32)
            .collect();
        Ok(WeylElement { matrix, perm, word: None })
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        let alpha = rs
            .simple_roots()
            .get(i)
            .cloned()
            .ok_or_else(|| Error::InvalidParameter(format!("simple index {i}")))?;
        let mut s = Self::reflection(rs, &alpha)?;
        s.word = Some(vec![i]);
        Ok(s)
    }

    /// Build from an explicit matrix, checking that it permutes the roots.
    pub fn from_matrix(rs: &RootSystem, matrix: Vec<RatVec>) -> Result<Self> {
        let n = rs.ambient_dim();
        if matrix.len() != n || matrix.iter().any(|r| r.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: matrix.len() });
        }
        let tmp = WeylElement { matrix, perm: Vec::new(), word: None };
        let mut perm = Vec::with_capacity(rs.all_roots().len());
        for root in rs.all_roots() {
            let image = tmp.apply(root);
            let id = rs.root_id(&image).ok_or_else(|| Error::NotARoot(image.to_string()))?;
            perm.push(id as u32);
        }
        Ok(WeylElement { perm, ..tmp })
    }

    pub fn apply(&self, v: &RatVec) -> RatVec {
        RatVec::new(self.matrix.iter().map(|row| row.dot(v)).collect())
    }

    /// Dot action: `w . xi = w(xi + rho) - rho`.
    pub fn dot_apply(&self, rs: &RootSystem, xi: &RatVec) -> RatVec {
        &self.apply(&(xi + rs.rho())) - rs.rho()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let matrix: Vec<RatVec> = (0..n)
            .map(|i| {
                RatVec::new(
                    (0..n)
                        .map(|j| {
                            (0..n)
                                .map(|k| &self.matrix[i][k] * &other.matrix[k][j])
                                .sum::<Rat>()
                        })
                        .collect(),
                )
            })
            .collect();
        let perm = other.perm.iter().map(|&t| self.perm[t as usize]).collect();
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement { matrix, perm, word }
    }

    /// Inverse; the matrix is orthogonal for the standard form, so this is
    /// the transpose.
    pub fn inverse(&self) -> WeylElement {
        let n = self.matrix.len();
        let matrix: Vec<RatVec> = (0..n)
            .map(|i| RatVec::new((0..n).map(|j| self.matrix[j][i].clone()).collect()))
            .collect();
        let mut perm = vec![0u32; self.perm.len()];
        for (src, &dst) in self.perm.iter().enumerate() {
            perm[dst as usize] = src as u32;
        }
        WeylElement { matrix, perm, word: None }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &t)| i as u32 == t)
    }

    pub fn matrix(&self) -> &[RatVec] {
        &self.matrix
    }

    pub fn root_permutation(&self) -> &[u32] {
        &self.perm
    }

    /// Image root index under the element.
    pub fn map_root(&self, id: usize) -> usize {
        self.perm[id] as usize
    }

    pub fn cached_word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }
}

/// An enumerated Weyl group with an index of every element's root
/// permutation; identity first, breadth-first by word length.
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u32>, usize>,
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w.root_permutation()).copied()
    }

    pub fn compose_indices(&self, a: usize, b: usize) -> usize {
        let pa = self.elements[a].root_permutation();
        let pb = self.elements[b].root_permutation();
        let perm: Vec<u32> = pb.iter().map(|&t| pa[t as usize]).collect();
        self.index[&perm]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let pa = self.elements[a].root_permutation();
        let mut perm = vec![0u32; pa.len()];
        for (src, &dst) in pa.iter().enumerate() {
            perm[dst as usize] = src as u32;
        }
        self.index[&perm]
    }
}

fn configured_cap() -> usize {
    std::env::var("WEYL_GROUP_CAP")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}

/// Enumerate the full Weyl group breadth-first over simple reflections with
/// ascending indices; the identity comes first and every element carries a
/// shortest word.
pub fn enumerate_group(rs: &RootSystem) -> Result<WeylGroup> {
    enumerate_group_with_cap(rs, configured_cap())
}

pub fn enumerate_group_with_cap(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    if rs.semisimple_rank() > MAX_ENUM_RANK {
        return Err(Error::InvalidParameter(format!(
            "rank {} exceeds the enumeration guard of {MAX_ENUM_RANK}",
            rs.semisimple_rank()
        )));
    }
    let simples: Vec<WeylElement> = (0..rs.semisimple_rank())
        .map(|i| WeylElement::simple_reflection(rs, i))
        .collect::<Result<_>>()?;
    let mut elements = vec![WeylElement::identity(rs)];
    let mut index = HashMap::new();
    index.insert(elements[0].root_permutation().to_vec(), 0usize);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for s in &simples {
            let next = current.compose(s);
            if !index.contains_key(next.root_permutation()) {
                if elements.len() == cap {
                    return Err(Error::GroupCapExceeded { cap });
                }
                index.insert(next.root_permutation().to_vec(), elements.len());
                elements.push(next);
            }
        }
        frontier += 1;
    }
    Ok(WeylGroup { elements, index })
}

/// Enumerate the reflection subgroup generated by the given roots, as
/// elements of the ambient group.
pub fn enumerate_reflection_subgroup(
    rs: &RootSystem,
    generators: &[RatVec],
) -> Result<Vec<WeylElement>> {
    let gens: Vec<WeylElement> = generators
        .iter()
        .map(|a| WeylElement::reflection(rs, a))
        .collect::<Result<_>>()?;
    let mut elements = vec![WeylElement::identity(rs)];
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(elements[0].root_permutation().to_vec(), ());
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for s in &gens {
            let next = current.compose(s);
            if !seen.contains_key(next.root_permutation()) {
                seen.insert(next.root_permutation().to_vec(), ());
                elements.push(next);
            }
        }
        frontier += 1;
    }
    Ok(elements)
}

/// Inversion set `Q(w) = {alpha in R+ : w alpha in -R+}` as root indices.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let m = rs.num_positive();
    (0..m).filter(|&t| w.map_root(t) >= m).collect()
}

pub fn length(rs: &RootSystem, w: &WeylElement) -> usize {
    inversion_set(rs, w).len()
}

/// Sum of the inversion set as a vector.
pub fn inversion_sum(rs: &RootSystem, w: &WeylElement) -> RatVec {
    let mut s = RatVec::zeros(rs.ambient_dim());
    for t in inversion_set(rs, w) {
        s = &s + rs.root(t);
    }
    s
}

/// `sum_{alpha in Q(w)} alpha`, checked against `rho - w^{-1} rho`; the two
/// agree exactly for every element, so a mismatch is an internal
/// inconsistency.
pub fn rho_difference(rs: &RootSystem, w: &WeylElement) -> Result<RatVec> {
    let s = inversion_sum(rs, w);
    let direct = rs.rho() - &w.inverse().apply(rs.rho());
    if s != direct {
        return Err(Error::Consistency(format!(
            "inversion-set sum {s} differs from rho - w^-1(rho) = {direct}"
        )));
    }
    Ok(s)
}

/// Word of length `l(w)` composing to `w`, built by repeatedly taking the
/// smallest simple index sent to a negative root.
pub fn reduced_word(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let m = rs.num_positive();
    let simple_ids: Vec<usize> = rs
        .simple_roots()
        .iter()
        .map(|a| rs.root_id(a).expect("simple roots are roots"))
        .collect();
    let mut v = w.clone();
    let mut picked = Vec::new();
    loop {
        let Some((i, _)) = simple_ids
            .iter()
            .enumerate()
            .find(|(_, &sid)| v.map_root(sid) >= m)
        else {
            break;
        };
        let s = WeylElement::simple_reflection(rs, i).expect("valid simple index");
        v = v.compose(&s);
        picked.push(i);
    }
    debug_assert!(v.is_identity());
    picked.reverse();
    picked
}

/// Compose a word of simple reflection indices (0-based) into an element.
pub fn compose_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs);
    for &i in word {
        w = w.compose(&WeylElement::simple_reflection(rs, i)?);
    }
    Ok(w)
}

/// True iff `w` maps the subsystem onto itself.
pub fn stabilizes(rs: &RootSystem, sub: &Subsystem, w: &WeylElement) -> bool {
    let _ = rs;
    sub.root_ids().iter().all(|&t| sub.contains(w.map_root(t)))
}

/// True iff `w` maps the subsystem base onto itself.
pub fn fixes_base(sub: &Subsystem, w: &WeylElement) -> bool {
    sub.simple_ids().iter().all(|&t| sub.simple_ids().contains(&w.map_root(t)))
}

/// Subsystem inversion set `T(w) = {alpha in R1+ : w alpha in -R1+}`,
/// asserting the identity `rho' - w^{-1} rho' = sum_{alpha in T(w)} alpha`.
pub fn subsystem_inversions(
    rs: &RootSystem,
    sub: &Subsystem,
    w: &WeylElement,
) -> Result<Vec<usize>> {
    if !stabilizes(rs, sub, w) {
        return Err(Error::NotAStabilizer);
    }
    let t: Vec<usize> = sub
        .positive_ids()
        .iter()
        .copied()
        .filter(|&id| {
            let image = w.map_root(id);
            !rs.is_positive_id(image) && sub.contains(image)
        })
        .collect();
    let mut s = RatVec::zeros(rs.ambient_dim());
    for &id in &t {
        s = &s + rs.root(id);
    }
    let direct = sub.rho_prime() - &w.inverse().apply(sub.rho_prime());
    if s != direct {
        return Err(Error::Consistency(format!(
            "subsystem inversion sum {s} differs from rho' - w^-1(rho') = {direct}"
        )));
    }
    Ok(t)
}

/// `(rho', <Q(w)>)` for a subsystem-stabilizing `w`; nonnegative, zero
/// exactly when `w` fixes the base.
pub fn inversion_sum_pairing(rs: &RootSystem, sub: &Subsystem, w: &WeylElement) -> Result<Rat> {
    if !stabilizes(rs, sub, w) {
        return Err(Error::NotAStabilizer);
    }
    Ok(sub.rho_prime().dot(&inversion_sum(rs, w)))
}

/// The stabilizer `W_0 = {w : w(R_1) = R_1}`, the base-fixing subgroup
/// `T = {w : w(B_1) = B_1}`, the reflection subgroup `W_1`, and the unique
/// factorization `w = w_1 t` for every element of `W_0`. All entries are
/// indices into the ambient enumerated group.
pub struct StabilizerDecomposition {
    pub w0: Vec<usize>,
    pub w1: Vec<usize>,
    pub t: Vec<usize>,
    factorization: HashMap<usize, (usize, usize)>,
}

impl StabilizerDecomposition {
    /// `(w_1, t)` with `w = w_1 t`.
    pub fn factorize(&self, w: usize) -> Option<(usize, usize)> {
        self.factorization.get(&w).copied()
    }
}

pub fn stabilizer_decomposition(
    rs: &RootSystem,
    group: &WeylGroup,
    sub: &Subsystem,
) -> Result<StabilizerDecomposition> {
    let w0: Vec<usize> = (0..group.len())
        .filter(|&i| stabilizes(rs, sub, group.element(i)))
        .collect();
    let t: Vec<usize> = w0
        .iter()
        .copied()
        .filter(|&i| fixes_base(sub, group.element(i)))
        .collect();
    let base: Vec<RatVec> = sub.simple_roots(rs).into_iter().cloned().collect();
    let w1_elems = enumerate_reflection_subgroup(rs, &base)?;
    let w1: Vec<usize> = w1_elems
        .iter()
        .map(|e| {
            group
                .index_of(e)
                .ok_or_else(|| Error::Consistency("subgroup element missing from group".into()))
        })
        .collect::<Result<_>>()?;

    let mut factorization = HashMap::new();
    for &wi in &w0 {
        let w = group.element(wi);
        // Descend w(rho') back to rho' through base reflections; the
        // product of the steps is the W_1 part.
        let mut x = w.apply(sub.rho_prime());
        let mut w1_part = WeylElement::identity(rs);
        let mut guard = 0usize;
        while let Some(alpha) = base.iter().find(|a| rs.coroot_pairing(&x, a) < Rat::zero()) {
            let s = WeylElement::reflection(rs, alpha)?;
            x = s.apply(&x);
            w1_part = w1_part.compose(&s);
            guard += 1;
            if guard > rs.num_positive() + 1 {
                return Err(Error::Consistency("descent to rho' did not terminate".into()));
            }
        }
        if x != *sub.rho_prime() {
            return Err(Error::Consistency("w(rho') is not in the W_1 orbit of rho'".into()));
        }
        let w1_idx = group
            .index_of(&w1_part)
            .ok_or_else(|| Error::Consistency("factor missing from group".into()))?;
        let t_idx = group.compose_indices(group.inverse_index(w1_idx), wi);
        if !fixes_base(sub, group.element(t_idx)) {
            return Err(Error::Consistency("residual factor does not fix the base".into()));
        }
        factorization.insert(wi, (w1_idx, t_idx));
    }
    Ok(StabilizerDecomposition { w0, w1, t, factorization })
}

/// Longest element of the reflection subgroup of a subsystem: the unique
/// element sending `rho'` to `-rho'`.
pub fn longest_of_subsystem(rs: &RootSystem, sub: &Subsystem) -> Result<WeylElement> {
    let base: Vec<RatVec> = sub.simple_roots(rs).into_iter().cloned().collect();
    let mut x = -sub.rho_prime();
    let mut u = WeylElement::identity(rs);
    let mut guard = 0usize;
    while let Some(alpha) = base.iter().find(|a| rs.coroot_pairing(&x, a) < Rat::zero()) {
        let s = WeylElement::reflection(rs, alpha)?;
        x = s.apply(&x);
        u = u.compose(&s);
        guard += 1;
        if guard > rs.num_positive() + 1 {
            return Err(Error::Consistency("descent to -rho' did not terminate".into()));
        }
    }
    // u(-rho') = rho', so u^{-1} is the longest element.
    Ok(u.inverse())
}

/// Checks on the map `kappa : alpha -> v alpha` of `Q(t)` for `t` fixing the
/// base, with `v` the longest element of `W_1`: kappa permutes `Q(t)`,
/// swaps its positive- and negative-pairing parts against rho', and
/// `(rho', <Q(t)>) = 0`. Returns true when all hold.
pub fn kappa_check(rs: &RootSystem, sub: &Subsystem, t: &WeylElement) -> Result<bool> {
    if !fixes_base(sub, t) {
        return Err(Error::DoesNotFixBase);
    }
    let v = longest_of_subsystem(rs, sub)?;
    let q = inversion_set(rs, t);
    let qset: std::collections::BTreeSet<usize> = q.iter().copied().collect();
    let rho_prime = sub.rho_prime();
    for &a in &q {
        let image = v.map_root(a);
        if !qset.contains(&image) {
            return Ok(false);
        }
        let before = rho_prime.dot(rs.root(a));
        let after = rho_prime.dot(rs.root(image));
        // kappa negates the rho'-pairing, so it swaps the strictly
        // positive and strictly negative parts.
        if after != -&before {
            return Ok(false);
        }
    }
    let pairing = rho_prime.dot(&inversion_sum(rs, t));
    Ok(pairing.is_zero())
}

/// Unique factorization `w = u v` with `v` in the reflection subgroup of
/// `b_lambda` and `u(b_lambda)` positive. `b_lambda` must be a positive
/// base of a closed subsystem (pairwise nonpositive coroot pairings).
pub fn coset_decompose(
    rs: &RootSystem,
    b_lambda: &[RatVec],
    w: &WeylElement,
) -> Result<(WeylElement, WeylElement)> {
    validate_base(rs, b_lambda)?;
    let m = rs.num_positive();
    let ids: Vec<usize> = b_lambda.iter().map(|a| rs.root_id(a).unwrap()).collect();
    let mut u = w.clone();
    let mut v = WeylElement::identity(rs);
    let mut guard = 0usize;
    loop {
        let Some(pos) = ids.iter().position(|&id| u.map_root(id) >= m) else {
            break;
        };
        let s = WeylElement::reflection(rs, &b_lambda[pos])?;
        u = u.compose(&s);
        v = s.compose(&v);
        guard += 1;
        if guard > m + 1 {
            return Err(Error::Consistency("coset descent did not terminate".into()));
        }
    }
    debug_assert_eq!(u.compose(&v), *w);
    Ok((u, v))
}

/// Membership test for the minimal coset representatives: `w(b_lambda)`
/// lands in the positive roots.
pub fn is_minimal_representative(rs: &RootSystem, b_lambda: &[RatVec], w: &WeylElement) -> bool {
    let m = rs.num_positive();
    b_lambda
        .iter()
        .all(|a| w.map_root(rs.root_id(a).expect("base of roots")) < m)
}

fn validate_base(rs: &RootSystem, b_lambda: &[RatVec]) -> Result<()> {
    for a in b_lambda {
        let id = rs.root_id(a).ok_or_else(|| Error::NotARoot(a.to_string()))?;
        if !rs.is_positive_id(id) {
            return Err(Error::InvalidParameter(format!("base root {a} is not positive")));
        }
    }
    for a in b_lambda {
        for b in b_lambda {
            if a != b && rs.coroot_pairing(a, b) > Rat::zero() {
                return Err(Error::InvalidParameter(format!(
                    "base roots {a} and {b} have positive pairing"
                )));
            }
        }
    }
    Ok(())
}

/// Serialize as a reduced word, 1-based: "s1 s3 s2"; the identity is "".
pub fn word_string(rs: &RootSystem, w: &WeylElement) -> String {
    reduced_word(rs, w)
        .iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse "s1 s2"-style words; empty text or "e" is the identity.
pub fn parse_word(rs: &RootSystem, text: &str) -> Result<WeylElement> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(WeylElement::identity(rs));
    }
    let mut word = Vec::new();
    for tok in trimmed.split_whitespace() {
        let digits = tok
            .strip_prefix('s')
            .ok_or_else(|| Error::Parse(format!("bad word token {tok:?}")))?;
        let i: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad word token {tok:?}")))?;
        if i == 0 || i > rs.semisimple_rank() {
            return Err(Error::Parse(format!(
                "simple index {i} out of range 1..={}",
                rs.semisimple_rank()
            )));
        }
        word.push(i - 1);
    }
    compose_word(rs, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::rootsys::{build, Kind};

    fn rv(xs: &[i64]) -> RatVec {
        RatVec::from_ints(xs)
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(&build(Kind::A, 4).unwrap()).unwrap().len(), 24);
        assert_eq!(enumerate_group(&build(Kind::C, 2).unwrap()).unwrap().len(), 8);
        assert_eq!(enumerate_group(&build(Kind::D, 4).unwrap()).unwrap().len(), 192);
        assert_eq!(enumerate_group(&build(Kind::B, 3).unwrap()).unwrap().len(), 48);
        assert_eq!(enumerate_group(&build(Kind::Gl, 1).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let rs = build(Kind::B, 3).unwrap();
        assert!(matches!(
            enumerate_group_with_cap(&rs, 10),
            Err(Error::GroupCapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn dot_action_basics() {
        let rs = build(Kind::Gl, 2).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let s = g.element(1);
        // Identity fixes everything; -rho is a fixed point of every element.
        let xi = RatVec::new(vec![rat(1, 3), rat(7, 5)]);
        assert_eq!(g.element(0).dot_apply(&rs, &xi), xi);
        for w in g.elements() {
            assert_eq!(w.dot_apply(&rs, &-rs.rho()), -rs.rho());
        }
        // The coordinate swap sends (1,1) to (0,2) under the dot action.
        assert_eq!(s.dot_apply(&rs, &rv(&[1, 1])), rv(&[0, 2]));
    }

    #[test]
    fn inversions_and_length() {
        let rs = build(Kind::A, 3).unwrap();
        let g = enumerate_group(&rs).unwrap();
        assert!(inversion_set(&rs, g.element(0)).is_empty());
        for i in 0..rs.semisimple_rank() {
            let s = WeylElement::simple_reflection(&rs, i).unwrap();
            let inv = inversion_set(&rs, &s);
            assert_eq!(inv.len(), 1);
            assert_eq!(rs.root(inv[0]), &rs.simple_roots()[i]);
        }
        // Longest element of A2 inverts all three positive roots.
        let longest = g.elements().iter().max_by_key(|w| length(&rs, w)).unwrap();
        assert_eq!(length(&rs, longest), 3);
    }

    #[test]
    fn rho_difference_exhaustive_b3() {
        let rs = build(Kind::B, 3).unwrap();
        let g = enumerate_group(&rs).unwrap();
        assert_eq!(g.len(), 48);
        for w in g.elements() {
            rho_difference(&rs, w).unwrap();
        }
    }

    #[test]
    fn inverse_and_inversion_duality() {
        // l(w) = l(w^-1) and Q(w^-1) = -w(Q(w)).
        let rs = build(Kind::C, 3).unwrap();
        let g = enumerate_group(&rs).unwrap();
        for w in g.elements() {
            let wi = w.inverse();
            assert_eq!(length(&rs, w), length(&rs, &wi));
            let mut lhs: Vec<usize> = inversion_set(&rs, &wi);
            let mut rhs: Vec<usize> = inversion_set(&rs, w)
                .into_iter()
                .map(|t| rs.negate_id(w.map_root(t)))
                .collect();
            lhs.sort_unstable();
            rhs.sort_unstable();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        let rs = build(Kind::C, 2).unwrap();
        let g = enumerate_group(&rs).unwrap();
        for w in g.elements() {
            let word = reduced_word(&rs, w);
            assert_eq!(word.len(), length(&rs, w));
            assert_eq!(&compose_word(&rs, &word).unwrap(), w);
        }
        assert_eq!(word_string(&rs, g.element(0)), "");
        let s1 = WeylElement::simple_reflection(&rs, 0).unwrap();
        assert_eq!(word_string(&rs, &s1), "s1");
        assert!(!parse_word(&rs, "s1 s2 s1").unwrap().is_identity());
        assert!(parse_word(&rs, "s9").is_err());
        assert!(parse_word(&rs, "e").unwrap().is_identity());
    }

    #[test]
    fn subsystem_inversions_match_ambient_for_members() {
        let rs = build(Kind::A, 4).unwrap();
        let sub = rs.standard_subsystem(&[0, 1]).unwrap();
        let base: Vec<RatVec> = sub.simple_roots(&rs).into_iter().cloned().collect();
        for w in enumerate_reflection_subgroup(&rs, &base).unwrap() {
            let t = subsystem_inversions(&rs, &sub, &w).unwrap();
            let q = inversion_set(&rs, &w);
            assert_eq!(t, q);
        }
        // Identity has empty T(w); non-stabilizers are rejected.
        let id = WeylElement::identity(&rs);
        assert!(subsystem_inversions(&rs, &sub, &id).unwrap().is_empty());
    }

    #[test]
    fn stabilizer_decomposition_full_system() {
        let rs = build(Kind::C, 2).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let sub = rs.standard_subsystem(&[0, 1]).unwrap();
        let d = stabilizer_decomposition(&rs, &g, &sub).unwrap();
        assert_eq!(d.w0.len(), g.len());
        assert_eq!(d.w1.len(), g.len());
        assert_eq!(d.t, vec![0]);
    }

    #[test]
    fn stabilizer_decomposition_a3_outer() {
        // B1 = {alpha1, alpha3} in A3: T contains the longest element of W,
        // which swaps alpha1 and alpha3; the factorization is unique with
        // additive length.
        let rs = build(Kind::A, 4).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let sub = rs.standard_subsystem(&[0, 2]).unwrap();
        let d = stabilizer_decomposition(&rs, &g, &sub).unwrap();
        assert_eq!(d.w1.len(), 4);
        // T = {id, t} where t swaps alpha1 and alpha3 (the coordinate
        // permutation exchanging the blocks {1,2} and {3,4}); the longest
        // element of W factors as (s1 s3) t.
        assert_eq!(d.t.len(), 2);
        let swap = d
            .t
            .iter()
            .copied()
            .find(|&i| !g.element(i).is_identity())
            .unwrap();
        let a1 = rs.root_id(&rs.simple_roots()[0]).unwrap();
        let a3 = rs.root_id(&rs.simple_roots()[2]).unwrap();
        assert_eq!(g.element(swap).map_root(a1), a3);
        assert_eq!(g.element(swap).map_root(a3), a1);
        let longest = (0..g.len()).max_by_key(|&i| length(&rs, g.element(i))).unwrap();
        assert!(d.w0.contains(&longest));
        let (w1_part, t_part) = d.factorize(longest).unwrap();
        assert_eq!(t_part, swap);
        assert_eq!(length(&rs, g.element(w1_part)), 2);
        assert_eq!(d.w0.len(), d.w1.len() * d.t.len());
        for &wi in &d.w0 {
            let (a, b) = d.factorize(wi).unwrap();
            assert!(d.w1.contains(&a));
            assert!(d.t.contains(&b));
            assert_eq!(g.compose_indices(a, b), wi);
            assert_eq!(
                length(&rs, g.element(wi)),
                length(&rs, g.element(a)) + length(&rs, g.element(b))
            );
        }
        let (a, b) = d.factorize(0).unwrap();
        assert_eq!((a, b), (0, 0));
    }

    #[test]
    fn kappa_on_t_elements() {
        let rs = build(Kind::A, 4).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let sub = rs.standard_subsystem(&[0, 2]).unwrap();
        let d = stabilizer_decomposition(&rs, &g, &sub).unwrap();
        for &ti in &d.t {
            assert!(kappa_check(&rs, &sub, g.element(ti)).unwrap());
        }
        // Elements outside T are rejected by precondition.
        if let Some(i) = d.w0.iter().copied().find(|i| !d.t.contains(i)) {
            assert!(matches!(
                kappa_check(&rs, &sub, g.element(i)),
                Err(Error::DoesNotFixBase)
            ));
        }
    }

    #[test]
    fn coset_decomposition_c3() {
        let rs = build(Kind::C, 3).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let b_lambda: Vec<RatVec> =
            vec![rs.simple_roots()[1].clone(), rs.simple_roots()[2].clone()];
        let sub = rs.subsystem(&b_lambda).unwrap();
        let base: Vec<RatVec> = sub.simple_roots(&rs).into_iter().cloned().collect();
        let w_lambda = enumerate_reflection_subgroup(&rs, &base).unwrap();
        for w in g.elements() {
            let (u, v) = coset_decompose(&rs, &b_lambda, w).unwrap();
            assert!(is_minimal_representative(&rs, &b_lambda, &u));
            assert!(w_lambda.contains(&v));
            assert_eq!(u.compose(&v), *w);
            assert_eq!(length(&rs, w), length(&rs, &u) + length(&rs, &v));
            if w_lambda.contains(w) {
                assert!(u.is_identity());
            }
            if is_minimal_representative(&rs, &b_lambda, w) {
                assert!(v.is_identity());
            }
        }
    }

    #[test]
    fn pairing_dichotomy_small() {
        let rs = build(Kind::B, 2).unwrap();
        let g = enumerate_group(&rs).unwrap();
        let sub = rs.standard_subsystem(&[0]).unwrap();
        for w in g.elements() {
            if !stabilizes(&rs, &sub, w) {
                assert!(inversion_sum_pairing(&rs, &sub, w).is_err());
                continue;
            }
            let p = inversion_sum_pairing(&rs, &sub, w).unwrap();
            assert!(p >= Rat::zero());
            assert_eq!(p.is_zero(), fixes_base(&sub, w));
        }
    }

    #[test]
    fn from_matrix_validates_roots() {
        let rs = build(Kind::A, 3).unwrap();
        // Cyclic permutation of coordinates is in W(A2) x nothing... it is a
        // valid root permutation for A inside Q^3.
        let mat = vec![
            RatVec::unit(3, 2),
            RatVec::unit(3, 0),
            RatVec::unit(3, 1),
        ];
        let w = WeylElement::from_matrix(&rs, mat).unwrap();
        assert_eq!(length(&rs, &w), 2);
        // A non-root-permuting matrix is rejected.
        let bad = vec![
            RatVec::from_ints(&[2, 0, 0]),
            RatVec::unit(3, 1),
            RatVec::unit(3, 2),
        ];
        assert!(WeylElement::from_matrix(&rs, bad).is_err());
    }
}
