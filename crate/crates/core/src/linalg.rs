//! Dense symmetric matrices and a cyclic Jacobi eigensolver.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use libm::sqrt;

#[derive(Debug, Clone, PartialEq)]
pub enum LinalgError {
    /// Data length is not a perfect square, or the matrix is empty.
    NotSquare {
        len: usize,
    },
    /// `|m[i][j] - m[j][i]|` exceeds the symmetry tolerance.
    NotSymmetric {
        i: usize,
        j: usize,
    },
    NonFinite {
        i: usize,
        j: usize,
    },
    /// Off-diagonal mass did not drop below threshold within the sweep cap.
    NoConvergence {
        sweeps: usize,
    },
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { len } => write!(f, "{len} entries do not form a nonempty square matrix"),
            LinalgError::NotSymmetric { i, j } => write!(f, "matrix is not symmetric at ({i}, {j})"),
            LinalgError::NonFinite { i, j } => write!(f, "non-finite entry at ({i}, {j})"),
            LinalgError::NoConvergence { sweeps } => write!(f, "Jacobi iteration did not converge in {sweeps} sweeps"),
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Square real matrix, row-major. Symmetry is checked by the routines that
/// need it, not by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, a: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        SymMatrix { n, a }
    }

    pub fn from_row_major(n: usize, a: Vec<f64>) -> Result<Self, LinalgError> {
        if n == 0 || a.len() != n * n {
            return Err(LinalgError::NotSquare { len: a.len() });
        }
        Ok(SymMatrix { n, a })
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        SymMatrix::from_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    pub fn frobenius_norm(&self) -> f64 {
        sqrt(self.a.iter().map(|x| x * x).sum())
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.a[i * self.n..(i + 1) * self.n].iter().zip(v).map(|(x, y)| x * y).sum()).collect()
    }

    /// Checks finiteness and `|m_ij - m_ji| <= tol * max(1, ‖M‖_F)`.
    pub fn check_symmetric(&self, tol: f64) -> Result<(), LinalgError> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if !self.get(i, j).is_finite() {
                    return Err(LinalgError::NonFinite { i, j });
                }
            }
        }
        let scale = tol * self.frobenius_norm().max(1.0);
        for i in 0..n {
            for j in i + 1..n {
                if (self.get(i, j) - self.get(j, i)).abs() > scale {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    /// `Bᵀ M B` where `basis` holds `k` column vectors of length `n`.
    pub fn congruence(&self, basis: &[Vec<f64>]) -> SymMatrix {
        let mb: Vec<Vec<f64>> = basis.iter().map(|b| self.mul_vec(b)).collect();
        let k = basis.len();
        SymMatrix::from_fn(k, |i, j| basis[i].iter().zip(&mb[j]).map(|(x, y)| x * y).sum())
    }
}

/// Full eigendecomposition: eigenvalues ascending, eigenvector `k` stored in
/// `vectors[k * n..(k + 1) * n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    vectors: Vec<f64>,
    pub sweeps: usize,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> &[f64] {
        let n = self.values.len();
        &self.vectors[k * n..(k + 1) * n]
    }

    pub fn max(&self) -> (f64, &[f64]) {
        let k = self.values.len() - 1;
        (self.values[k], self.vector(k))
    }

    pub fn min(&self) -> (f64, &[f64]) {
        (self.values[0], self.vector(0))
    }
}

pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi rotations on a symmetric matrix. Converged when the
/// off-diagonal Frobenius norm is below `1e-12 · ‖M‖_F`.
///
/// The input is symmetrized by averaging before iterating. Eigenvectors are
/// sign-normalized so their largest-magnitude entry (lowest index on ties) is
/// positive.
pub fn symmetric_eigen(m: &SymMatrix) -> Result<Eigen, LinalgError> {
    let n = m.n;
    if n == 0 {
        return Err(LinalgError::NotSquare { len: 0 });
    }
    let mut a = SymMatrix::from_fn(n, |i, j| 0.5 * (m.get(i, j) + m.get(j, i)));
    let mut v = SymMatrix::identity(n);
    let threshold = JACOBI_REL_TOL * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = sqrt(
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|(i, j)| i != j)
                .map(|(i, j)| a.get(i, j) * a.get(i, j))
                .sum(),
        );
        if off <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                rotate(&mut a, p, q, c, s);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                rotate_columns(&mut v, p, q, c, s);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)).then(i.cmp(&j)));
    let values = order.iter().map(|&k| a.get(k, k)).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        let mut col: Vec<f64> = (0..n).map(|i| v.get(i, k)).collect();
        normalize_sign(&mut col);
        vectors.extend(col);
    }
    Ok(Eigen { values, vectors, sweeps })
}

fn rotate_columns(m: &mut SymMatrix, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..m.n {
        let mkp = m.get(k, p);
        let mkq = m.get(k, q);
        m.set(k, p, c * mkp - s * mkq);
        m.set(k, q, s * mkp + c * mkq);
    }
}

// A <- Rᵀ A R with R the (p, q) plane rotation [[c, s], [-s, c]].
fn rotate(a: &mut SymMatrix, p: usize, q: usize, c: f64, s: f64) {
    rotate_columns(a, p, q, c, s);
    for k in 0..a.n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, c * apk - s * aqk);
        a.set(q, k, s * apk + c * aqk);
    }
}

fn normalize_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(i) = v.iter().position(|x| x.abs() >= max * (1.0 - 1e-12)) {
        if v[i] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// `‖M v − λ v‖₂`.
pub fn residual(m: &SymMatrix, value: f64, vector: &[f64]) -> f64 {
    let mv = m.mul_vec(vector);
    sqrt(mv.iter().zip(vector).map(|(x, y)| (x - value * y) * (x - value * y)).sum())
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    sqrt(dot(a, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn diagonal_matrix() {
        let e = symmetric_eigen(&SymMatrix::from_diagonal(&[1.0, 3.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.max().1, &[0.0, 1.0, 0.0]);
        assert_eq!(e.sweeps, 0);
    }

    #[test]
    fn two_by_two_off_diagonal() {
        let m = SymMatrix::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = symmetric_eigen(&m).unwrap();
        assert_abs_diff_eq!(e.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[1], 1.0, epsilon = 1e-14);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(e.vector(1)[0], h, epsilon = 1e-14);
        assert_abs_diff_eq!(e.vector(1)[1], h, epsilon = 1e-14);
    }

    #[test]
    fn tridiagonal_known_spectrum() {
        // eigenvalues of tridiag(-1, 2, -1) are 2 - 2 cos(kπ/(n+1))
        let n = 12;
        let m = SymMatrix::from_fn(n, |i, j| match i.abs_diff(j) {
            0 => 2.0,
            1 => -1.0,
            _ => 0.0,
        });
        let e = symmetric_eigen(&m).unwrap();
        for k in 1..=n {
            let expect = 2.0 - 2.0 * libm::cos(k as f64 * core::f64::consts::PI / (n as f64 + 1.0));
            assert_abs_diff_eq!(e.values[k - 1], expect, epsilon = 1e-12);
            assert!(residual(&m, e.values[k - 1], e.vector(k - 1)) < 1e-10);
        }
    }

    #[test]
    fn symmetry_and_finiteness_checks() {
        let m = SymMatrix::from_row_major(2, vec![0.0, 1.0, 2.0, 0.0]).unwrap();
        assert_eq!(m.check_symmetric(1e-9), Err(LinalgError::NotSymmetric { i: 0, j: 1 }));
        let m = SymMatrix::from_row_major(2, vec![0.0, f64::NAN, f64::NAN, 0.0]).unwrap();
        assert_eq!(m.check_symmetric(1e-9), Err(LinalgError::NonFinite { i: 0, j: 1 }));
        assert!(SymMatrix::from_row_major(2, vec![1.0; 3]).is_err());
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let e = symmetric_eigen(&SymMatrix::zeros(4)).unwrap();
        assert_eq!(e.values, vec![0.0; 4]);
    }
}
