//! Exact rational linear algebra: vectors, reduced row echelon form, affine
//! subspaces in canonical form, integer-point lattices of affine subspaces,
//! and full-dimensionality of rational cones.

mod cone;
mod hermite;
mod lattice;

pub use cone::{cone_is_fulldim, cone_witness};
pub use hermite::{column_hermite, integer_kernel, solve_integer, ColumnHermite};
pub use lattice::{integral_points, AffineLattice};

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use crate::rat::{rat_int, Rat};

/// A vector of exact rationals of fixed dimension.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RatVec {
    entries: Vec<Rat>,
}

impl RatVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVec { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec { entries: vec![Rat::zero(); dim] }
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = rat_int(1);
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RatVec { entries: xs.iter().map(|&x| rat_int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        let mut acc = Rat::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec { entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// self - c * other, the row-reduction workhorse.
    pub fn sub_scaled(&self, c: &Rat, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - &(c * b))
                .collect(),
        }
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.entries[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.dim(), rhs.dim());
        RatVec {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.dim(), rhs.dim());
        RatVec {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec { entries: self.entries.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rat::rat_to_string(x))?;
        }
        write!(f, ")")
    }
}

/// Reduced row echelon form. Returns the reduced matrix (same number of
/// rows, zero rows sunk to the bottom) and the strictly increasing pivot
/// column indices. The row space is preserved exactly.
pub fn rref(rows: &[RatVec]) -> (Vec<RatVec>, Vec<usize>) {
    let m = rows.len();
    if m == 0 {
        return (Vec::new(), Vec::new());
    }
    let n = rows[0].dim();
    let mut a: Vec<RatVec> = rows.to_vec();
    for row in &a {
        assert_eq!(row.dim(), n, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].clone().recip();
        a[r] = a[r].scale(&inv);
        for i in 0..m {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                a[i] = a[i].sub_scaled(&f, &a[r].clone());
            }
        }
        pivots.push(col);
        r += 1;
    }
    (a, pivots)
}

/// True when `v` lies in the row space described by an rref matrix.
pub fn in_row_space(v: &RatVec, reduced: &[RatVec], pivots: &[usize]) -> bool {
    let mut w = v.clone();
    for (row, &col) in reduced.iter().zip(pivots) {
        if !w[col].is_zero() {
            let c = w[col].clone();
            w = w.sub_scaled(&c, row);
        }
    }
    w.is_zero()
}

/// Basis of the kernel of the linear map given by rref rows, itself in
/// reduced echelon form.
pub fn nullspace(reduced: &[RatVec], pivots: &[usize], n: usize) -> Vec<RatVec> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for f in 0..n {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v = RatVec::zeros(n);
        v.entries[f] = rat_int(1);
        for (row, &p) in reduced.iter().zip(pivots) {
            v.entries[p] = -&row[f];
        }
        basis.push(v);
    }
    // Leading entries need not be pivots of the kernel matrix; reduce once
    // more so the basis is canonical.
    let (reduced, _) = rref(&basis);
    reduced.into_iter().filter(|r| !r.is_zero()).collect()
}

/// An affine subspace of Q^n in canonical form: the direction basis is in
/// reduced row echelon form and the base point has zero entries in every
/// pivot coordinate of that basis. Two subspaces are equal as sets iff the
/// canonical fields compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSubspace {
    base_point: RatVec,
    direction_basis: Vec<RatVec>,
    pivots: Vec<usize>,
    ambient_dim: usize,
}

impl AffineSubspace {
    /// Canonicalize a base point plus spanning set of directions.
    pub fn new(base: RatVec, directions: Vec<RatVec>) -> Self {
        let ambient = base.dim();
        for d in &directions {
            assert_eq!(d.dim(), ambient);
        }
        let (reduced, pivots) = rref(&directions);
        let basis: Vec<RatVec> = reduced.into_iter().filter(|r| !r.is_zero()).collect();
        let mut b = base;
        for (row, &p) in basis.iter().zip(&pivots) {
            if !b[p].is_zero() {
                let c = b[p].clone();
                b = b.sub_scaled(&c, row);
            }
        }
        AffineSubspace { base_point: b, direction_basis: basis, pivots, ambient_dim: ambient }
    }

    pub fn point(p: RatVec) -> Self {
        Self::new(p, Vec::new())
    }

    /// The whole ambient space.
    pub fn full(ambient: usize) -> Self {
        let dirs = (0..ambient).map(|i| RatVec::unit(ambient, i)).collect();
        Self::new(RatVec::zeros(ambient), dirs)
    }

    pub fn dim(&self) -> usize {
        self.direction_basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn base_point(&self) -> &RatVec {
        &self.base_point
    }

    pub fn direction_basis(&self) -> &[RatVec] {
        &self.direction_basis
    }

    pub fn contains_point(&self, p: &RatVec) -> bool {
        assert_eq!(p.dim(), self.ambient_dim);
        in_row_space(&(p - &self.base_point), &self.direction_basis, &self.pivots)
    }

    pub fn contains(&self, other: &AffineSubspace) -> bool {
        self.contains_point(&other.base_point)
            && other
                .direction_basis
                .iter()
                .all(|d| in_row_space(d, &self.direction_basis, &self.pivots))
    }

    /// Coordinates of `p` in the direction basis, if `p` lies in the space.
    pub fn coordinates_of(&self, p: &RatVec) -> Option<Vec<Rat>> {
        let mut w = p - &self.base_point;
        let mut coords = Vec::with_capacity(self.direction_basis.len());
        for (row, &col) in self.direction_basis.iter().zip(&self.pivots) {
            let c = w[col].clone();
            if !c.is_zero() {
                w = w.sub_scaled(&c, row);
            }
            coords.push(c);
        }
        w.is_zero().then_some(coords)
    }

    /// Point of the space with the given direction-basis coordinates.
    pub fn point_at(&self, coords: &[Rat]) -> RatVec {
        assert_eq!(coords.len(), self.direction_basis.len());
        let mut p = self.base_point.clone();
        for (c, d) in coords.iter().zip(&self.direction_basis) {
            p = &p + &d.scale(c);
        }
        p
    }
}

/// Solve the affine system `h_j . mu + c_j = 0`. Returns the solution set in
/// canonical form, or `None` when the system is inconsistent.
pub fn solve_affine(functionals: &[(RatVec, Rat)], ambient_dim: usize) -> Option<AffineSubspace> {
    // Augmented rows (h | c) express h . mu + c = 0.
    let mut aug: Vec<RatVec> = Vec::with_capacity(functionals.len());
    for (h, c) in functionals {
        assert_eq!(h.dim(), ambient_dim, "functional dimension mismatch");
        let mut row = h.entries.clone();
        row.push(c.clone());
        aug.push(RatVec::new(row));
    }
    let (reduced, pivots) = rref(&aug);
    if pivots.contains(&ambient_dim) {
        return None; // a row reduced to 0 = nonzero
    }
    // Particular solution: free coordinates zero, pivot coordinate of each
    // row determined by its constant term.
    let mut base = RatVec::zeros(ambient_dim);
    let h_rows: Vec<RatVec> = reduced
        .iter()
        .take(pivots.len())
        .map(|row| RatVec::new(row.entries[..ambient_dim].to_vec()))
        .collect();
    for (row, &p) in reduced.iter().zip(&pivots) {
        base.entries[p] = -&row[ambient_dim];
    }
    let dirs = nullspace(&h_rows, &pivots, ambient_dim);
    Some(AffineSubspace::new(base, dirs))
}

/// Affine hull of a nonempty family of subspaces (of equal ambient
/// dimension): smallest affine subspace containing them all.
pub fn affine_hull(spaces: &[AffineSubspace]) -> Option<AffineSubspace> {
    let first = spaces.first()?;
    let base = first.base_point.clone();
    let mut dirs: Vec<RatVec> = Vec::new();
    for s in spaces {
        assert_eq!(s.ambient_dim, first.ambient_dim);
        dirs.push(&s.base_point - &base);
        dirs.extend(s.direction_basis.iter().cloned());
    }
    Some(AffineSubspace::new(base, dirs))
}

/// Affine hull of a nonempty set of points.
pub fn affine_hull_of_points(points: &[RatVec]) -> Option<AffineSubspace> {
    let first = points.first()?;
    let dirs: Vec<RatVec> = points[1..].iter().map(|p| p - first).collect();
    Some(AffineSubspace::new(first.clone(), dirs))
}
