//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! The matrices in scope are tiny (order <= 64, <= 16 in hot loops), where
//! Jacobi is branch-light and, via [`jacobi_in_place`], allocation-free per
//! solve. Convergence is declared when the off-diagonal Frobenius norm drops
//! below `tol` times the Frobenius norm of the input, which bounds each
//! residual `||A v - lambda v||` by the same amount.

use super::Spectrum;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 60;

/// Eigendecomposition of a symmetric matrix: `values` descending and an
/// orthonormal eigenvector per value.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// Column-major `n x n`: column `k` is the eigenvector of `values[k]`.
    vectors: Vec<f64>,
    n: usize,
}

impl SymmetricEigen {
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }
}

/// Low-level cyclic Jacobi on a row-major buffer `a` of order `n`.
/// On success `a`'s diagonal holds the (unsorted) eigenvalues. When `v` is
/// provided (length `n*n`) it accumulates the rotations: column `k` of the
/// row-major matrix `v` ends up as the eigenvector of `a[k*n+k]`.
pub(crate) fn jacobi_in_place(
    a: &mut [f64],
    n: usize,
    mut v: Option<&mut [f64]>,
    tol: f64,
) -> Result<()> {
    debug_assert_eq!(a.len(), n * n);
    if let Some(v) = v.as_deref_mut() {
        v.fill(0.0);
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    if n <= 1 {
        return Ok(());
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if frob == 0.0 {
        return Ok(());
    }
    let threshold2 = (tol * frob) * (tol * frob);

    for _sweep in 0..MAX_SWEEPS {
        let mut off2 = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off2 += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off2 <= threshold2 {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    let new_ip = aip - s * (aiq + tau * aip);
                    let new_iq = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = new_ip;
                    a[p * n + i] = new_ip;
                    a[i * n + q] = new_iq;
                    a[q * n + i] = new_iq;
                }
                if let Some(v) = v.as_deref_mut() {
                    for i in 0..n {
                        let vip = v[i * n + p];
                        let viq = v[i * n + q];
                        v[i * n + p] = vip - s * (viq + tau * vip);
                        v[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence { n, sweeps: MAX_SWEEPS })
}

fn check_input(m: &SquareMatrix, tol: f64) -> Result<()> {
    if m.order() == 0 {
        return Err(Error::domain("eigensolver requires order >= 1"));
    }
    if !m.is_symmetric() {
        return Err(Error::domain("eigensolver requires a symmetric matrix"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain("eigensolver tolerance must be positive"));
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, sorted descending.
pub fn eigen_symmetric(m: &SquareMatrix, tol: f64) -> Result<Spectrum> {
    check_input(m, tol)?;
    let n = m.order();
    let mut a = m.data().to_vec();
    jacobi_in_place(&mut a, n, None, tol)?;
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum::from_sorted(values))
}

/// Eigenvalues (descending) with an orthonormal eigenvector basis. The sign
/// of each vector is fixed so that its first coordinate of non-negligible
/// magnitude is positive.
pub fn eigen_symmetric_full(m: &SquareMatrix, tol: f64) -> Result<SymmetricEigen> {
    check_input(m, tol)?;
    let n = m.order();
    let mut a = m.data().to_vec();
    let mut v = vec![0.0; n * n];
    jacobi_in_place(&mut a, n, Some(&mut v), tol)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());
    let mut values = Vec::with_capacity(n);
    let mut vectors = vec![0.0; n * n];
    for (k, &col) in order.iter().enumerate() {
        values.push(a[col * n + col]);
        let out = &mut vectors[k * n..(k + 1) * n];
        for i in 0..n {
            out[i] = v[i * n + col];
        }
        let maxabs = out.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        if let Some(first) = out.iter().find(|x| x.abs() > 1e-9 * maxabs) {
            if *first < 0.0 {
                out.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
    Ok(SymmetricEigen { values, vectors, n })
}
