//! Integer-point sets of affine subspaces.
//!
//! Given an affine subspace and affine functionals that are non-constant on
//! it, the points of the subspace where every functional takes an integer
//! value form either the empty set or a coset of a full-rank subgroup of the
//! direction space. `integral_points` decides which, exactly, by clearing
//! denominators to a single integer system and triangularizing it; no
//! enumeration is involved. The returned lattice is a full-rank set of
//! translates inside the solution set (it is the whole solution set whenever
//! the functionals have full rank on the direction space).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hermite::{column_hermite, integer_kernel, solve_integer};
use super::{nullspace, rref, AffineSubspace, RatVec};
use crate::rat::{lcm_denoms, Rat};
use crate::{Error, Result};

/// A base point plus a lattice basis; the represented set is
/// `base + sum n_i basis_i` over integer tuples `n`. The basis is kept in a
/// canonical triangular (column Hermite) form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineLattice {
    base_point: RatVec,
    lattice_basis: Vec<RatVec>,
}

impl AffineLattice {
    pub fn base_point(&self) -> &RatVec {
        &self.base_point
    }

    pub fn lattice_basis(&self) -> &[RatVec] {
        &self.lattice_basis
    }

    pub fn rank(&self) -> usize {
        self.lattice_basis.len()
    }

    /// The lattice point with the given integer coefficients.
    pub fn point(&self, coeffs: &[i64]) -> RatVec {
        assert_eq!(coeffs.len(), self.lattice_basis.len());
        let mut p = self.base_point.clone();
        for (&c, b) in coeffs.iter().zip(&self.lattice_basis) {
            p = &p + &b.scale(&crate::rat::rat_int(c));
        }
        p
    }
}

fn lin_comb(dirs: &[RatVec], coords: &[Rat], ambient: usize) -> RatVec {
    let mut v = RatVec::zeros(ambient);
    for (c, d) in coords.iter().zip(dirs) {
        if !c.is_zero() {
            v = &v + &d.scale(c);
        }
    }
    v
}

/// Determinant of a square integer matrix via its Hermite form.
fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let ch = column_hermite(m);
    if ch.pivots.len() < n {
        return BigInt::zero();
    }
    ch.pivots.iter().map(|&(r, c)| ch.h[r][c].clone()).product()
}

/// Canonical triangular basis of the lattice spanned by the given rational
/// vectors (assumed independent).
fn canonical_lattice_basis(vectors: &[RatVec], dim: usize) -> Vec<RatVec> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let q = lcm_denoms(vectors.iter().flat_map(|v| v.iter()));
    let qr = Rat::from_integer(q.clone());
    // Columns of the integer matrix are the scaled vectors.
    let mat: Vec<Vec<BigInt>> = (0..dim)
        .map(|row| vectors.iter().map(|v| (&v[row] * &qr).to_integer()).collect())
        .collect();
    let ch = column_hermite(&mat);
    ch.pivots
        .iter()
        .map(|&(_, col)| {
            RatVec::new(
                (0..dim)
                    .map(|row| Rat::new(ch.h[row][col].clone(), q.clone()))
                    .collect(),
            )
        })
        .collect()
}

/// Points of `space` on which every functional `mu -> h . mu + c` takes an
/// integer value. Returns `Ok(None)` when no such point exists, and an error
/// when a functional is constant on the space (caller contract violation).
pub fn integral_points(
    space: &AffineSubspace,
    functionals: &[(RatVec, Rat)],
) -> Result<Option<AffineLattice>> {
    let ambient = space.ambient_dim();
    let dirs = space.direction_basis();
    let k = dirs.len();
    let m = functionals.len();

    // Restrict each functional to the parameter space: g_j[i] = h_j . d_i,
    // e_j = h_j . base + c_j.
    let mut g: Vec<RatVec> = Vec::with_capacity(m);
    let mut e: Vec<Rat> = Vec::with_capacity(m);
    for (index, (h, c)) in functionals.iter().enumerate() {
        assert_eq!(h.dim(), ambient, "functional dimension mismatch");
        let row = RatVec::new(dirs.iter().map(|d| h.dot(d)).collect());
        if row.is_zero() {
            return Err(Error::ConstantFunctional { index });
        }
        g.push(row);
        e.push(h.dot(space.base_point()) + c);
    }

    if m == 0 {
        // No constraints: the direction basis itself generates a full-rank
        // lattice of solutions.
        return Ok(Some(AffineLattice {
            base_point: space.base_point().clone(),
            lattice_basis: canonical_lattice_basis(dirs, ambient),
        }));
    }

    let (g_red, pivot_cols) = rref(&g);
    let r = pivot_cols.len();
    let free_kernel = nullspace(
        &g_red.iter().take(r).cloned().collect::<Vec<_>>(),
        &pivot_cols,
        k,
    );

    // Integer model of the pivot-column block: a = l * g_p.
    let l = lcm_denoms(g.iter().flat_map(|row| row.iter()).chain(e.iter()));
    let lr = Rat::from_integer(l.clone());
    let a: Vec<Vec<BigInt>> = g
        .iter()
        .map(|row| pivot_cols.iter().map(|&c| (&row[c] * &lr).to_integer()).collect())
        .collect();
    let le: Vec<BigInt> = e.iter().map(|x| (x * &lr).to_integer()).collect();

    // Denominator bound: any s with a s integral satisfies d * s integral,
    // d = |det(a^T a)| (a has full column rank r).
    let ata: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..m).map(|row| &a[row][i] * &a[row][j]).sum())
                .collect()
        })
        .collect();
    let d = int_det(&ata).abs();
    debug_assert!(!d.is_zero());
    let n_mod = &d * &l;

    // Solve a sigma + n_mod * y = -d * le over the integers.
    let mut aug: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for (row, arow) in a.iter().enumerate() {
        let mut v: Vec<BigInt> = arow.clone();
        for j in 0..m {
            v.push(if j == row { n_mod.clone() } else { BigInt::zero() });
        }
        aug.push(v);
    }
    let rhs: Vec<BigInt> = le.iter().map(|x| -(&d * x)).collect();
    let Some(sol) = solve_integer(&aug, &rhs) else {
        return Ok(None);
    };

    // Particular point: pivot coordinates sigma/d, free coordinates zero.
    let mut t0 = vec![Rat::zero(); k];
    for (i, &col) in pivot_cols.iter().enumerate() {
        t0[col] = Rat::new(sol[i].clone(), d.clone());
    }
    let base = space.point_at(&t0);

    // Homogeneous solutions: sigma with a sigma = 0 mod n_mod, plus the
    // rational kernel directions of g.
    let hom = integer_kernel(&aug);
    let mut t_basis: Vec<RatVec> = Vec::with_capacity(k);
    for kv in &hom {
        let mut t = vec![Rat::zero(); k];
        for (i, &col) in pivot_cols.iter().enumerate() {
            t[col] = Rat::new(kv[i].clone(), d.clone());
        }
        let t = RatVec::new(t);
        if !t.is_zero() {
            t_basis.push(t);
        }
    }
    t_basis.extend(free_kernel);
    debug_assert_eq!(t_basis.len(), k);

    let canon = canonical_lattice_basis(&t_basis, k);
    let lattice_basis: Vec<RatVec> = canon
        .iter()
        .map(|t| lin_comb(dirs, t.entries(), ambient))
        .collect();

    // Exactness: base and every generator keep all functionals integral.
    debug_assert!(functionals
        .iter()
        .all(|(h, c)| (h.dot(&base) + c).is_integer()));
    debug_assert!(lattice_basis
        .iter()
        .all(|b| functionals.iter().all(|(h, _)| h.dot(b).is_integer())));

    Ok(Some(AffineLattice { base_point: base, lattice_basis }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::solve_affine;
    use crate::rat::{rat, rat_int};

    fn rv(xs: &[i64]) -> RatVec {
        RatVec::from_ints(xs)
    }

    #[test]
    fn whole_plane_integer_grid() {
        let space = AffineSubspace::full(2);
        let fs = vec![(rv(&[1, 0]), Rat::zero()), (rv(&[0, 1]), Rat::zero())];
        let lat = integral_points(&space, &fs).unwrap().unwrap();
        assert_eq!(lat.rank(), 2);
        assert_eq!(lat.base_point(), &rv(&[0, 0]));
        // The generated lattice is exactly Z^2: both unit vectors are
        // integer combinations of the basis.
        let b = lat.lattice_basis();
        assert!(b.iter().all(|v| v.iter().all(|x| x.is_integer())));
        let det = &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0];
        assert_eq!(det, rat_int(1));
    }

    #[test]
    fn shifted_line() {
        // Line (t, t + 1/2); functional mu_1. Solutions: (m, m + 1/2).
        let space = AffineSubspace::new(
            RatVec::new(vec![rat_int(0), rat(1, 2)]),
            vec![rv(&[1, 1])],
        );
        let fs = vec![(rv(&[1, 0]), Rat::zero())];
        let lat = integral_points(&space, &fs).unwrap().unwrap();
        assert_eq!(lat.rank(), 1);
        for c in [-3i64, 0, 5] {
            let p = lat.point(&[c]);
            assert!(p[0].is_integer());
            assert_eq!(&p[1] - &p[0], rat(1, 2));
        }
    }

    #[test]
    fn parity_obstruction_is_empty() {
        // Line (t, 2t); functionals mu_1 and mu_2 - 1/2 need t and 2t - 1/2
        // integral simultaneously: impossible.
        let space = AffineSubspace::new(rv(&[0, 0]), vec![rv(&[1, 2])]);
        let fs = vec![
            (rv(&[1, 0]), Rat::zero()),
            (rv(&[0, 1]), rat(-1, 2)),
        ];
        assert!(integral_points(&space, &fs).unwrap().is_none());
    }

    #[test]
    fn constant_functional_rejected() {
        let space = solve_affine(&[(rv(&[0, 1]), Rat::zero())], 2).unwrap();
        let fs = vec![(rv(&[0, 1]), rat_int(3))];
        assert!(matches!(
            integral_points(&space, &fs),
            Err(Error::ConstantFunctional { index: 0 })
        ));
    }

    #[test]
    fn denominator_lattice() {
        // On the full line, requiring mu/3 integral gives the lattice 3Z.
        let space = AffineSubspace::full(1);
        let fs = vec![(RatVec::new(vec![rat(1, 3)]), Rat::zero())];
        let lat = integral_points(&space, &fs).unwrap().unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.lattice_basis()[0], rv(&[3]));
    }

    #[test]
    fn every_generated_point_satisfies_constraints() {
        let space = AffineSubspace::new(
            RatVec::new(vec![rat(1, 2), rat(1, 3), rat_int(0)]),
            vec![rv(&[1, 1, 0]), rv(&[0, 2, 1])],
        );
        let fs = vec![
            (RatVec::new(vec![rat(1, 2), rat_int(1), rat_int(0)]), rat(1, 6)),
            (rv(&[0, 0, 1]), Rat::zero()),
        ];
        if let Some(lat) = integral_points(&space, &fs).unwrap() {
            assert_eq!(lat.rank(), 2);
            for c in [[-2i64, 3], [0, 0], [7, -5], [1, 1]] {
                let p = lat.point(&c);
                for (h, cst) in &fs {
                    assert!((h.dot(&p) + cst).is_integer());
                }
            }
        } else {
            panic!("system is solvable: base point adjustments exist");
        }
    }
}
