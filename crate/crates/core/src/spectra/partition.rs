//! Equitable partitions and quotient matrices.

use super::{eigen_symmetric, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::sgraph::VertexSet;

/// Ordered partition of `0..n` into nonempty, pairwise disjoint blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct EquitablePartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl EquitablePartition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::domain("partition blocks must be nonempty"));
            }
            if !b.intersection(seen).is_empty() {
                return Err(Error::domain("partition blocks must be disjoint"));
            }
            seen = seen.union(*b);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::domain("partition blocks must cover 0..n"));
        }
        Ok(EquitablePartition { n, blocks })
    }

    /// The all-singletons partition.
    pub fn discrete(n: usize) -> Self {
        EquitablePartition { n, blocks: (0..n).map(VertexSet::singleton).collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

fn block_row_sum(m: &SquareMatrix, row: usize, block: VertexSet) -> f64 {
    block.iter().map(|c| m.get(row, c)).sum()
}

/// True iff within every block pair all row sums agree exactly. Intended for
/// integer-valued matrices, where the sums are exact in f64.
pub fn is_equitable(m: &SquareMatrix, p: &EquitablePartition) -> Result<bool> {
    if m.order() != p.order() {
        return Err(Error::domain("partition order does not match matrix order"));
    }
    for bi in p.blocks() {
        for bj in p.blocks() {
            let mut rows = bi.iter();
            let first = block_row_sum(m, rows.next().unwrap(), *bj);
            for r in rows {
                if block_row_sum(m, r, *bj) != first {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The quotient matrix `Q = (b_ij)` of an equitable partition; errors when
/// the partition is not equitable for `m`.
pub fn quotient(m: &SquareMatrix, p: &EquitablePartition) -> Result<SquareMatrix> {
    if !is_equitable(m, p)? {
        return Err(Error::domain("partition is not equitable for this matrix"));
    }
    let k = p.blocks().len();
    let mut q = SquareMatrix::zeros(k);
    for (i, bi) in p.blocks().iter().enumerate() {
        let row = bi.iter().next().unwrap();
        for (j, bj) in p.blocks().iter().enumerate() {
            q.set(i, j, block_row_sum(m, row, *bj));
        }
    }
    Ok(q)
}

/// Eigenvalues of the quotient of a *symmetric* matrix, descending.
///
/// The quotient itself is not symmetric in general, but
/// `D^{1/2} Q D^{-1/2}` is, where `D = diag(block sizes)`; its spectrum
/// equals that of `Q`, so the symmetric solver applies.
pub fn quotient_eigenvalues(m: &SquareMatrix, p: &EquitablePartition) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(Error::domain("quotient eigenvalues require a symmetric matrix"));
    }
    let q = quotient(m, p)?;
    let sizes = p.block_sizes();
    symmetrized_eigenvalues(&q, &sizes)
}

/// Eigenvalues of a quotient matrix `q` whose underlying partition has the
/// given block sizes (the similarity `D^{1/2} Q D^{-1/2}` must be symmetric,
/// which holds for every equitable quotient of a symmetric matrix).
pub fn symmetrized_eigenvalues(q: &SquareMatrix, block_sizes: &[usize]) -> Result<Vec<f64>> {
    let k = q.order();
    if block_sizes.len() != k {
        return Err(Error::domain("block size list does not match quotient order"));
    }
    let mut b = SquareMatrix::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let scale = (block_sizes[i] as f64 / block_sizes[j] as f64).sqrt();
            b.set(i, j, scale * q.get(i, j));
        }
    }
    // Symmetrize away the last few ulps of rounding.
    for i in 0..k {
        for j in (i + 1)..k {
            let avg = 0.5 * (b.get(i, j) + b.get(j, i));
            if (b.get(i, j) - b.get(j, i)).abs() > 1e-8 * (1.0 + avg.abs()) {
                return Err(Error::domain(
                    "quotient does not symmetrize; not a quotient of a symmetric matrix",
                ));
            }
            b.set(i, j, avg);
            b.set(j, i, avg);
        }
    }
    Ok(eigen_symmetric(&b, DEFAULT_TOL)?.values().to_vec())
}
