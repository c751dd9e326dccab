//! Hermite-style triangularization of integer matrices by unimodular column
//! operations, with exact solving of integer linear systems and integer
//! kernels. This is the engine behind the integer-point computation for
//! affine subspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column echelon data: `h = m * v` with `v` unimodular. Every column of `h`
/// is either a pivot column or identically zero, pivot rows are strictly
/// increasing, pivots are positive, and entries left of a pivot in its row
/// are reduced modulo the pivot.
pub struct ColumnHermite {
    pub h: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    /// (row, col) per pivot, in order.
    pub pivots: Vec<(usize, usize)>,
}

fn col_addmul(mat: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in mat.iter_mut() {
        let t = &row[src] * q;
        row[dst] -= t;
    }
}

fn col_swap(mat: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in mat.iter_mut() {
        row.swap(a, b);
    }
}

fn col_neg(mat: &mut [Vec<BigInt>], c: usize) {
    for row in mat.iter_mut() {
        let t = -row[c].clone();
        row[c] = t;
    }
}

/// Compute the column Hermite form of an integer matrix (rows of equal
/// length; the matrix may be empty or rank-deficient).
pub fn column_hermite(m: &[Vec<BigInt>]) -> ColumnHermite {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    for r in &h {
        assert_eq!(r.len(), cols, "ragged matrix");
    }
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for row in 0..rows {
        if next == cols {
            break;
        }
        // Euclid across the active columns until at most one nonzero
        // remains in this row.
        loop {
            let mut nonzero: Vec<usize> = (next..cols).filter(|&j| !h[row][j].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&j| h[row][j].abs());
            let jmin = nonzero[0];
            for &j in &nonzero[1..] {
                let q = h[row][j].div_floor(&h[row][jmin]);
                col_addmul(&mut h, j, jmin, &q);
                col_addmul(&mut v, j, jmin, &q);
            }
        }
        let Some(j) = (next..cols).find(|&j| !h[row][j].is_zero()) else {
            continue;
        };
        col_swap(&mut h, next, j);
        col_swap(&mut v, next, j);
        if h[row][next].is_negative() {
            col_neg(&mut h, next);
            col_neg(&mut v, next);
        }
        // Reduce earlier pivot columns at this row modulo the new pivot.
        for e in 0..next {
            if !h[row][e].is_zero() {
                let q = h[row][e].div_floor(&h[row][next]);
                col_addmul(&mut h, e, next, &q);
                col_addmul(&mut v, e, next, &q);
            }
        }
        pivots.push((row, next));
        next += 1;
    }
    ColumnHermite { h, v, pivots }
}

/// Basis of `{x : m x = 0}` over the integers; every integer kernel element
/// is an integer combination of the returned vectors.
pub fn integer_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let ch = column_hermite(m);
    let pivot_cols: std::collections::HashSet<usize> = ch.pivots.iter().map(|&(_, c)| c).collect();
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| ch.v.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// One integer solution of `m x = b`, or `None` when there is none.
pub fn solve_integer(m: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.len(), b.len());
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let ch = column_hermite(m);
    // Forward substitution along pivot rows of h, checking exact
    // divisibility; rows without pivots must have zero residual.
    let mut residual: Vec<BigInt> = b.to_vec();
    let mut y = vec![BigInt::zero(); cols];
    let mut pivot_iter = ch.pivots.iter().peekable();
    for row in 0..m.len() {
        match pivot_iter.peek() {
            Some(&&(prow, pcol)) if prow == row => {
                pivot_iter.next();
                let (q, r) = residual[row].div_rem(&ch.h[row][pcol]);
                if !r.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for rr in row..m.len() {
                        let t = &ch.h[rr][pcol] * &q;
                        residual[rr] -= t;
                    }
                }
                y[pcol] = q;
            }
            _ => {
                if !residual[row].is_zero() {
                    return None;
                }
            }
        }
    }
    // x = v y.
    let x: Vec<BigInt> = (0..cols)
        .map(|i| (0..cols).map(|j| &ch.v[i][j] * &y[j]).sum())
        .collect();
    debug_assert!(m
        .iter()
        .zip(b)
        .all(|(row, bi)| row.iter().zip(&x).map(|(a, xi)| a * xi).sum::<BigInt>() == *bi));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermite_reproduces_matrix() {
        let m = vec![bi(&[4, 6, 2]), bi(&[2, 8, 10])];
        let ch = column_hermite(&m);
        // h = m * v entry by entry.
        for r in 0..2 {
            for c in 0..3 {
                let s: BigInt = (0..3).map(|k| &m[r][k] * &ch.v[k][c]).sum();
                assert_eq!(s, ch.h[r][c]);
            }
        }
        // Echelon shape: non-pivot columns are zero.
        let pivot_cols: Vec<usize> = ch.pivots.iter().map(|&(_, c)| c).collect();
        for c in 0..3 {
            if !pivot_cols.contains(&c) {
                assert!(ch.h.iter().all(|row| row[c].is_zero()));
            }
        }
    }

    #[test]
    fn kernel_of_projection() {
        let m = vec![bi(&[1, 0, 2])];
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_gcd_equation() {
        // 6x + 10y = 8 has integer solutions; = 7 does not.
        let m = vec![bi(&[6, 10])];
        let x = solve_integer(&m, &bi(&[8])).unwrap();
        assert_eq!(&m[0][0] * &x[0] + &m[0][1] * &x[1], BigInt::from(8));
        assert!(solve_integer(&m, &bi(&[7])).is_none());
    }

    #[test]
    fn solve_rectangular() {
        let m = vec![bi(&[2, 0, 1]), bi(&[0, 3, 1])];
        let b = bi(&[5, 7]);
        let x = solve_integer(&m, &b).unwrap();
        for (row, bv) in m.iter().zip(&b) {
            let s: BigInt = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
            assert_eq!(&s, bv);
        }
        // Inconsistent system.
        let m2 = vec![bi(&[2, 4]), bi(&[1, 2])];
        assert!(solve_integer(&m2, &bi(&[2, 2])).is_none());
    }
}
