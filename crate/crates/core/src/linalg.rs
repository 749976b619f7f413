//! Householder QR with column pivoting: numerical rank and least squares.

use crate::scalar::Scalar;

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

fn norm_from<T: Scalar>(col: &[T], start: usize) -> T {
    col[start..].iter().map(|v| v.powi(2)).sum::<T>().sqrt()
}

/// In-place pivoted QR of column-major `cols`; applies the same reflections to `rhs`.
///
/// On return `cols[j][..=j]` holds column `j` of `R` for `j < rank`, and
/// `perm[j]` is the original index of the column now in position `j`.
/// Factorization stops at the first pivot at or below
/// `factor * |R_00| * max(rows, cols.len())`.
fn pivoted_qr<T: Scalar>(
    cols: &mut [Vec<T>],
    rows: usize,
    factor: T,
    mut rhs: Option<&mut [T]>,
) -> (usize, Vec<usize>) {
    let k = cols.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let steps = rows.min(k);
    let scale = T::from_usize_lossy(rows.max(k));
    let mut cutoff = T::zero();
    for j in 0..steps {
        let (p, pivot) = (j..k).map(|c| (c, norm_from(&cols[c], j))).fold((j, T::neg_infinity()), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });
        if j == 0 {
            cutoff = factor * pivot * scale;
        }
        if pivot <= cutoff || pivot == T::zero() {
            return (j, perm);
        }
        cols.swap(j, p);
        perm.swap(j, p);

        let x0 = cols[j][j];
        let alpha = if x0 >= T::zero() { -pivot } else { pivot };
        let mut v: Vec<T> = cols[j][j..].to_vec();
        v[0] = v[0] - alpha;
        let vv = dot(&v, &v);
        if vv > T::zero() {
            let two = T::lit(2.0);
            let reflect = |target: &mut [T]| {
                let f = two * dot(&v, &target[j..]) / vv;
                for (t, &vi) in target[j..].iter_mut().zip(&v) {
                    *t = *t - f * vi;
                }
            };
            for col in cols[j + 1..].iter_mut() {
                reflect(col);
            }
            if let Some(b) = rhs.as_deref_mut() {
                reflect(b);
            }
        }
        cols[j][j] = alpha;
        for e in cols[j][j + 1..].iter_mut() {
            *e = T::zero();
        }
    }
    (steps, perm)
}

/// Numerical rank of the matrix whose columns are `columns` (each of length `rows`).
pub fn rank_of_columns<T: Scalar>(columns: &[&[T]], rows: usize, factor: T) -> usize {
    let mut work: Vec<Vec<T>> = columns.iter().map(|c| c.to_vec()).collect();
    pivoted_qr(&mut work, rows, factor, None).0
}

/// Least-squares coefficients for `min ||C z - b||_2`, `None` when `C` is
/// numerically rank deficient. Returns the coefficients and the residual norm.
pub fn least_squares<T: Scalar>(columns: &[&[T]], b: &[T], factor: T) -> Option<(Vec<T>, T)> {
    let rows = b.len();
    let k = columns.len();
    let mut work: Vec<Vec<T>> = columns.iter().map(|c| c.to_vec()).collect();
    let mut qtb = b.to_vec();
    let (rank, perm) = pivoted_qr(&mut work, rows, factor, Some(&mut qtb));
    if rank < k {
        return None;
    }
    let mut z = vec![T::zero(); k];
    for j in (0..k).rev() {
        let s = (j + 1..k).map(|c| work[c][j] * z[c]).sum::<T>();
        z[j] = (qtb[j] - s) / work[j][j];
    }
    let mut coeffs = vec![T::zero(); k];
    for (j, &orig) in perm.iter().enumerate() {
        coeffs[orig] = z[j];
    }
    let residual = (0..rows)
        .map(|i| {
            let fit: T = columns.iter().zip(&coeffs).map(|(c, &w)| c[i] * w).sum();
            (fit - b[i]).powi(2)
        })
        .sum::<T>()
        .sqrt();
    Some((coeffs, residual))
}
