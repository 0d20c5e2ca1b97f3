//! Builders for the extremal signed graphs `Γ_{s,n}` and `Σ_{k,n}`, their
//! closed-form polynomials, and their quotient matrices.
//!
//! `Γ_{s,n}` is the all-positive complete graph on `v_1..v_{n-1}` plus a
//! vertex `v_n` joined to `v_1..v_{s+1}`, with `v_n v_1` the unique negative
//! edge. `Σ_{k,n}` is the five-block graph with apexes `u_1, u_2` (the
//! unique negative edge between them), a clique `K_r`, an independent set of
//! `k` vertices, and a clique `K_{n-2-r-k}`. Vertices map to indices in
//! order, so `v_n` is index `n-1`.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::sgraph::{Sign, SignedGraph, VertexSet};
use crate::spectra::{
    largest_real_root, symmetrized_eigenvalues, EquitablePartition, RealPolynomial,
};

/// Validates `s >= 1`, `n >= s + 2`.
pub fn check_gamma_params(s: usize, n: usize) -> Result<()> {
    if s < 1 {
        return Err(Error::domain("gamma requires s >= 1"));
    }
    if n < s + 2 {
        return Err(Error::domain(format!("gamma requires s <= n-2 (got s={s}, n={n})")));
    }
    Ok(())
}

/// Validates `k >= 1`, `r >= 2`, `n >= k + r + 4`.
pub fn check_sigma_params(k: usize, r: usize, n: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::domain("sigma requires k >= 1"));
    }
    if r < 2 {
        return Err(Error::domain("sigma requires r >= 2"));
    }
    if n < k + r + 4 {
        return Err(Error::domain(format!(
            "sigma requires n >= k + r + 4 (got k={k}, r={r}, n={n})"
        )));
    }
    Ok(())
}

/// The signed graph `Γ_{s,n}`.
pub fn gamma(s: usize, n: usize) -> Result<SignedGraph> {
    check_gamma_params(s, n)?;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    for i in 0..n - 1 {
        for j in (i + 1)..n - 1 {
            edges.push((i, j, Sign::Plus));
        }
    }
    // v_n = index n-1, joined to v_1..v_{s+1} = indices 0..=s; v_n v_1 negative.
    edges.push((0, n - 1, Sign::Minus));
    for i in 1..=s {
        edges.push((i, n - 1, Sign::Plus));
    }
    SignedGraph::new(n, &edges)
}

/// The signed graph `Σ_{k,n}` (with the clique parameter `r` explicit).
///
/// Index layout: `u_2 = 0`, `u_1 = 1`, the `K_r` block on `2..2+r`, the
/// independent block on `2+r..2+r+k`, the `K_{n-2-r-k}` block on the rest.
/// `u_2` is adjacent to `u_1`, the `K_r` block and the independent block but
/// not to the large clique.
pub fn sigma(k: usize, r: usize, n: usize) -> Result<SignedGraph> {
    check_sigma_params(k, r, n)?;
    let w0 = 2;
    let q0 = 2 + r;
    let v0 = 2 + r + k;
    let mut edges: Vec<(usize, usize, Sign)> = vec![(0, 1, Sign::Minus)];
    for w in w0..q0 {
        edges.push((0, w, Sign::Plus));
        edges.push((1, w, Sign::Plus));
    }
    for q in q0..v0 {
        edges.push((0, q, Sign::Plus));
        edges.push((1, q, Sign::Plus));
    }
    for v in v0..n {
        edges.push((1, v, Sign::Plus));
    }
    for a in w0..q0 {
        for b in (a + 1)..q0 {
            edges.push((a, b, Sign::Plus));
        }
        for v in v0..n {
            edges.push((a, v, Sign::Plus));
        }
    }
    for q in q0..v0 {
        for v in v0..n {
            edges.push((q, v, Sign::Plus));
        }
    }
    for a in v0..n {
        for b in (a + 1)..n {
            edges.push((a, b, Sign::Plus));
        }
    }
    SignedGraph::new(n, &edges)
}

/// The five-block equitable partition of [`sigma`]:
/// `{u_2}, {u_1}, K_r, independent block, K_{n-2-r-k}`.
pub fn sigma_partition(k: usize, r: usize, n: usize) -> Result<EquitablePartition> {
    check_sigma_params(k, r, n)?;
    let blocks = vec![
        VertexSet::singleton(0),
        VertexSet::singleton(1),
        (2..2 + r).collect(),
        (2 + r..2 + r + k).collect(),
        (2 + r + k..n).collect(),
    ];
    EquitablePartition::new(n, blocks)
}

/// `f_{s,n}(x) = x^3 - (n-3)x^2 - (n+s-1)x - s^2 + n + ns - 3`,
/// whose largest root is the index of `Γ_{s,n}`.
pub fn f_poly(s: usize, n: usize) -> Result<RealPolynomial> {
    check_gamma_params(s, n)?;
    let (s, n) = (s as f64, n as f64);
    Ok(RealPolynomial::new(vec![
        -s * s + n + n * s - 3.0,
        -(n + s - 1.0),
        -(n - 3.0),
        1.0,
    ]))
}

/// The quintic `h_{k,n}` (characteristic polynomial of `Q(Σ_{k,n})`),
/// coefficients from the constant term upward.
pub fn h_poly(k: usize, r: usize, n: usize) -> Result<RealPolynomial> {
    check_sigma_params(k, r, n)?;
    let (k, r, n) = (k as f64, r as f64, n as f64);
    Ok(RealPolynomial::new(vec![
        2.0 * k * k * r - 2.0 * k * k - 2.0 * k * n * r + 2.0 * k * n + 2.0 * k * r * r - 2.0 * k,
        -2.0 * k * k + 2.0 * k * n - 3.0 * k * r - 3.0 * k + n * r + n - r * r - 3.0,
        -k * k * r + k * k + k * n * r - k * n - k * r * r + n * r - r * r - r - 2.0,
        k * k - k * n + k * r + 2.0 * k - 2.0 * n - r + 4.0,
        k - n + 4.0,
        1.0,
    ]))
}

/// The 5x5 quotient matrix `Q(Σ_{k,n})` of the five-block partition.
pub fn q_sigma(k: usize, r: usize, n: usize) -> Result<SquareMatrix> {
    check_sigma_params(k, r, n)?;
    let p = (n - 2 - r - k) as i64;
    let (r, k) = (r as i64, k as i64);
    SquareMatrix::from_int_rows(&[
        vec![0, -1, r, k, 0],
        vec![-1, 0, r, k, p],
        vec![1, 1, r - 1, 0, p],
        vec![1, 1, 0, 0, p],
        vec![0, 1, r, k, p - 1],
    ])
}

/// Largest eigenvalue of `Q(Σ_{k,n})`, via the symmetrized quotient.
pub fn lambda1_sigma_quotient(k: usize, r: usize, n: usize) -> Result<f64> {
    let q = q_sigma(k, r, n)?;
    let sizes = [1, 1, r, k, n - 2 - r - k];
    let eigs = symmetrized_eigenvalues(&q, &sizes)?;
    Ok(eigs[0])
}

/// The index of `Γ_{s,n}` as the largest root of `f_{s,n}`, bracketed in
/// `[n-2, n-1)`; returns exactly `n-2` at the `s = 1` boundary.
pub fn lambda1_gamma(s: usize, n: usize) -> Result<f64> {
    check_gamma_params(s, n)?;
    if s == 1 {
        return Ok((n - 2) as f64);
    }
    let p = f_poly(s, n)?;
    largest_real_root(&p, (n - 2) as f64 - 1e-6, (n - 1) as f64)
}

/// `r(t) = (1 + sqrt(8t-7)) / 2` when integral, else `None`.
pub fn r_of_t(t: u64) -> Option<u64> {
    if t < 2 {
        return None;
    }
    let disc = 8 * t - 7;
    let root = disc.isqrt();
    if root * root != disc {
        return None;
    }
    // disc is odd, so an integral root is odd and 1 + root is even.
    Some(root / 2 + 1)
}

/// Inverse of [`r_of_t`]: `t(r) = r(r-1)/2 + 1`.
pub fn t_of_r(r: u64) -> u64 {
    r * (r - 1) / 2 + 1
}

/// All-positive complete graph `(K_n, +)`.
pub fn complete_positive(n: usize) -> Result<SignedGraph> {
    if n < 1 {
        return Err(Error::domain("complete graph requires n >= 1"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j, Sign::Plus));
        }
    }
    SignedGraph::new(n, &edges)
}

/// Complete graph with exactly one negative edge (`{0, n-1}`); equals
/// `Γ_{n-2,n}` for `n >= 3`.
pub fn complete_one_negative(n: usize) -> Result<SignedGraph> {
    if n < 2 {
        return Err(Error::domain("a negative edge requires n >= 2"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let s = if i == 0 && j == n - 1 { Sign::Minus } else { Sign::Plus };
            edges.push((i, j, s));
        }
    }
    SignedGraph::new(n, &edges)
}
