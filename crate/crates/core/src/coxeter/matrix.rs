//! Reflection representation on `X_ℝ` in the basis of unit simple roots, and
//! numeric eigenspace computations.

use nalgebra::{Complex, DMatrix, DVector};

use super::{CoxeterSystem, Frac, Subset, Twisted};
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex<f64>>;

/// Eigenspace of a matrix for one eigenvalue.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub multiplicity: usize,
    /// Orthonormal basis (standard hermitian product on coordinates).
    pub basis: Vec<DVector<Complex<f64>>>,
}

impl CoxeterSystem {
    /// Matrix of `wφ^k`; column `j` is the image of `α_j`.
    pub fn matrix_of(&self, x: &Twisted) -> DMatrix<f64> {
        let a = self.twisted_action(x);
        let r = self.rank();
        let mut m = DMatrix::zeros(r, r);
        for j in 0..r {
            let v = self.root_vector(a.apply(j as u16));
            for i in 0..r {
                m[(i, j)] = v[i];
            }
        }
        m
    }

    pub fn gram_matrix(&self) -> DMatrix<f64> {
        let r = self.rank();
        DMatrix::from_fn(r, r, |i, j| self.gram[i][j])
    }

    /// Multiplicity of `exp(2πi·k/d)` as an eigenvalue of `x`.
    pub fn zeta_rank(&self, x: &Twisted, k: i64, d: u64, tol: f64) -> Result<usize> {
        let m = self.matrix_of(x);
        eigen_multiplicity(&m, Frac::new(k, d), tol).map(|e| e.multiplicity)
    }

    /// `|{i : ζ^{d_i} = ε_i}|` for `ζ = exp(2πi·k/d)`.
    pub fn coset_zeta_rank(&self, k: i64, d: u64) -> usize {
        let z = Frac::new(k, d);
        self.degrees
            .iter()
            .zip(&self.factors)
            .filter(|(&deg, &eps)| z.pow(deg as i64) == eps)
            .count()
    }

    /// Same count with codegrees `d_i − 2` and conjugate cofactors.
    pub fn coset_zeta_corank(&self, k: i64, d: u64) -> usize {
        let z = Frac::new(k, d);
        self.degrees
            .iter()
            .zip(&self.factors)
            .filter(|(&deg, &eps)| z.pow(deg as i64 - 2) == eps.conj())
            .count()
    }

    /// Dimension of the fixed space of `x`.
    pub fn fixed_dim(&self, x: &Twisted, tol: f64) -> Result<usize> {
        self.zeta_rank(x, 0, 1, tol)
    }

    /// Positive roots orthogonal (for the invariant form) to every vector of `basis`.
    pub fn roots_orthogonal_to(&self, basis: &[DVector<Complex<f64>>], tol: f64) -> Vec<usize> {
        let g = self.gram_matrix();
        (0..self.npos())
            .filter(|&r| {
                let v = DVector::from_vec(self.root_vector(r as u16));
                let gv = &g * v;
                basis.iter().all(|b| {
                    let s: Complex<f64> = (0..gv.len()).map(|i| b[i] * gv[i]).sum();
                    s.norm() < tol
                })
            })
            .collect()
    }

    /// Restriction of `x` to the span of the simple roots in `i`, assuming it
    /// is stable.
    pub fn restricted_matrix(&self, x: &Twisted, i: Subset) -> DMatrix<f64> {
        let m = self.matrix_of(x);
        let idx: Vec<usize> = i.iter().collect();
        DMatrix::from_fn(idx.len(), idx.len(), |a, b| m[(idx[a], idx[b])])
    }
}

/// Eigenspace of `m` for the eigenvalue `exp(2πi·z)`. The matrices here are
/// orthogonal for a positive definite form, so geometric and algebraic
/// multiplicities agree.
pub fn eigen_multiplicity(m: &DMatrix<f64>, z: Frac, tol: f64) -> Result<Eigen> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Eigen { multiplicity: 0, basis: vec![] });
    }
    let zeta = z.to_complex();
    let a: CMatrix = DMatrix::from_fn(n, n, |i, j| {
        let x = Complex::new(m[(i, j)], 0.0);
        if i == j {
            x - zeta
        } else {
            x
        }
    });
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut basis = Vec::new();
    for (k, &s) in svd.singular_values.iter().enumerate() {
        if s < tol {
            basis.push(v_t.row(k).transpose().map(|c| c.conj()));
        } else if s < 10.0 * tol {
            return Err(Error::AmbiguousEigenvalue);
        }
    }
    Ok(Eigen { multiplicity: basis.len(), basis })
}
