//! Undirected weighted network topologies and their Laplacian spectra.
//!
//! The Laplacian `L` of a topology has `L[i][j] = -a_ij` off the diagonal and
//! row-sum zero on the diagonal; for undirected (symmetric) weights it is
//! symmetric positive semidefinite, and its second-smallest eigenvalue (the
//! Fiedler value) is positive exactly when the network is connected. The
//! nonzero eigenvalues are what the certificates in [`crate::certify`]
//! consume.

use nalgebra::DMatrix;
use thiserror::Error;

/// Eigensolver noise floor used both for the connectivity test and for
/// symmetry checks on unit-scale matrices.
pub const SPECTRAL_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("weight matrix is not square: {0} x {1}")]
    NotSquare(usize, usize),

    #[error("weights must be symmetric: mismatch at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("self-loops are not allowed: nonzero diagonal at node {0}")]
    SelfLoop(usize),

    #[error("node index {index} out of range for {n_nodes} nodes")]
    NodeOutOfRange { index: usize, n_nodes: usize },

    #[error("matrix is not symmetric within tolerance {0:.1e}")]
    NonSymmetric(f64),

    #[error("complete graph needs at least 2 nodes, got {0}")]
    InvalidSize(usize),

    #[error("topology must have at least one node")]
    Empty,
}

/// An undirected weighted network: symmetric weight matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    weights: DMatrix<f64>,
}

impl Topology {
    /// Builds a topology from an explicit weight matrix.
    ///
    /// The matrix must be square, exactly symmetric, and zero on the
    /// diagonal (self-loops would cancel in the Laplacian, so they are
    /// rejected rather than silently ignored).
    pub fn from_weights(weights: DMatrix<f64>) -> Result<Self, GraphError> {
        if weights.nrows() != weights.ncols() {
            return Err(GraphError::NotSquare(weights.nrows(), weights.ncols()));
        }
        if weights.nrows() == 0 {
            return Err(GraphError::Empty);
        }
        let n = weights.nrows();
        for i in 0..n {
            if weights[(i, i)] != 0.0 {
                return Err(GraphError::SelfLoop(i));
            }
            for j in (i + 1)..n {
                if weights[(i, j)] != weights[(j, i)] {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Self { weights })
    }

    /// Complete (globally connected) topology on `n` nodes with a uniform
    /// edge weight.
    pub fn complete(n: usize, weight: f64) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::InvalidSize(n));
        }
        let mut w = DMatrix::from_element(n, n, weight);
        w.fill_diagonal(0.0);
        Self::from_weights(w)
    }

    /// Builds a topology on `n` nodes from an undirected edge list.
    ///
    /// Each `(i, j, w)` entry sets both `weights[i][j]` and `weights[j][i]`;
    /// repeated edges accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut w = DMatrix::zeros(n, n);
        for &(i, j, weight) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::NodeOutOfRange { index, n_nodes: n });
                }
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            w[(i, j)] += weight;
            w[(j, i)] += weight;
        }
        Self::from_weights(w)
    }

    pub fn n_nodes(&self) -> usize {
        self.weights.nrows()
    }

    pub fn weights(&self) -> &DMatrix<f64> {
        &self.weights
    }
}

/// Sorted eigenvalues of a network Laplacian.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianSpectrum {
    eigenvalues: Vec<f64>,
}

impl LaplacianSpectrum {
    /// Eigenvalues sorted ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Second-smallest eigenvalue; `None` for a single-node network.
    pub fn fiedler_value(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    /// The eigenvalues that act on disagreement directions: everything past
    /// the structural zero eigenvalue.
    pub fn coupling_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[1.min(self.eigenvalues.len())..]
    }
}

/// Laplacian matrix of a topology: `L[i][j] = -a_ij` for `i != j`,
/// `L[i][i] = sum_j a_ij`. Every row sums to zero and `L` is symmetric.
pub fn laplacian(topo: &Topology) -> DMatrix<f64> {
    let n = topo.n_nodes();
    let w = topo.weights();
    let mut l = -w.clone();
    for i in 0..n {
        l[(i, i)] = w.row(i).sum();
    }
    l
}

/// Eigenvalues of a symmetric matrix, sorted ascending.
///
/// Rejects matrices that are not symmetric within [`SPECTRAL_TOL`] relative
/// to their largest entry; the decomposition itself runs on the symmetric
/// part so roundoff asymmetry cannot leak into the result.
pub fn spectrum(l: &DMatrix<f64>) -> Result<LaplacianSpectrum, GraphError> {
    if l.nrows() != l.ncols() {
        return Err(GraphError::NotSquare(l.nrows(), l.ncols()));
    }
    let scale = l.amax().max(1.0);
    let asymmetry = (l - l.transpose()).amax();
    if asymmetry > SPECTRAL_TOL * scale {
        return Err(GraphError::NonSymmetric(SPECTRAL_TOL));
    }
    let sym = (l + l.transpose()) * 0.5;
    let mut eigenvalues: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|a, b| a.total_cmp(b));
    Ok(LaplacianSpectrum { eigenvalues })
}

/// Laplacian of the unit-weight complete graph on `n` nodes:
/// `n - 1` on the diagonal, `-1` everywhere else.
pub fn complete_graph_laplacian(n: usize) -> Result<DMatrix<f64>, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize(n));
    }
    let mut r = DMatrix::from_element(n, n, -1.0);
    r.fill_diagonal(n as f64 - 1.0);
    Ok(r)
}

/// A topology is connected exactly when its Fiedler value clears the
/// eigensolver noise floor. Single-node networks count as connected.
pub fn is_connected(topo: &Topology) -> bool {
    let spec = spectrum(&laplacian(topo)).expect("topology Laplacian is symmetric");
    match spec.fiedler_value() {
        Some(mu2) => mu2 > SPECTRAL_TOL,
        None => true,
    }
}
