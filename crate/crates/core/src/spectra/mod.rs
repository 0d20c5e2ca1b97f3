//! Numerical linear algebra for signed adjacency matrices: a cyclic Jacobi
//! eigensolver, characteristic polynomials, Rayleigh quotients, equitable
//! partitions with quotient matrices, and polynomial root isolation.

mod eigen;
mod partition;
mod poly;

pub use eigen::{eigen_symmetric, eigen_symmetric_full, SymmetricEigen, DEFAULT_TOL, MAX_SWEEPS};
pub(crate) use eigen::jacobi_in_place;
pub use partition::{
    is_equitable, quotient, quotient_eigenvalues, symmetrized_eigenvalues, EquitablePartition,
};
pub use poly::{char_poly, largest_real_root, RealPolynomial};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::sgraph::{SignedGraph, VertexSet};

/// Adjacency eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub(crate) fn from_sorted(values: Vec<f64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The index, i.e. the largest eigenvalue.
    pub fn index(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// `max(lambda_1, -lambda_n)`.
    pub fn spectral_radius(&self) -> f64 {
        self.index().max(-self.smallest())
    }
}

/// Eigenvalue with a unit eigenvector.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

fn require_positive_order(g: &SignedGraph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::domain("spectral operations require order >= 1"));
    }
    Ok(())
}

/// Full adjacency spectrum of `g`, descending.
pub fn spectrum(g: &SignedGraph) -> Result<Spectrum> {
    require_positive_order(g)?;
    eigen_symmetric(&g.adjacency_matrix(), DEFAULT_TOL)
}

/// The index `lambda_1(g)`.
pub fn index(g: &SignedGraph) -> Result<f64> {
    Ok(spectrum(g)?.index())
}

/// The spectral radius `max(lambda_1, -lambda_n)`.
pub fn spectral_radius(g: &SignedGraph) -> Result<f64> {
    Ok(spectrum(g)?.spectral_radius())
}

/// Largest eigenvalue together with a unit eigenvector (any valid one when
/// the index is a multiple eigenvalue).
pub fn leading_eigenpair(g: &SignedGraph) -> Result<EigenPair> {
    require_positive_order(g)?;
    let eig = eigen_symmetric_full(&g.adjacency_matrix(), DEFAULT_TOL)?;
    Ok(EigenPair { value: eig.values[0], vector: eig.eigenvector(0).to_vec() })
}

/// Switches `g` so that the leading eigenvalue admits a non-negative
/// eigenvector: with `x` a leading eigenvector of `g` and
/// `u = {i : x_i < 0}`, the switched graph has `|x|` as a leading
/// eigenvector. Returns `(u, switch(g, u), leading pair of the switch)`.
pub fn nonneg_switching(g: &SignedGraph) -> Result<(VertexSet, SignedGraph, EigenPair)> {
    let pair = leading_eigenpair(g)?;
    let u: VertexSet = (0..g.order()).filter(|&i| pair.vector[i] < 0.0).collect();
    let switched = g.switch(u);
    let vector: Vec<f64> = pair.vector.iter().map(|x| x.abs()).collect();
    Ok((u, switched, EigenPair { value: pair.value, vector }))
}

/// Rayleigh quotient `x^T M x / x^T x`.
pub fn rayleigh(m: &SquareMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.order() {
        return Err(Error::domain("vector length does not match matrix order"));
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if norm2 == 0.0 {
        return Err(Error::domain("Rayleigh quotient of the zero vector"));
    }
    let mx = m.mul_vec(x);
    let num: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
    Ok(num / norm2)
}
