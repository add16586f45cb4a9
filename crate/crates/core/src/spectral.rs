//! Numeric QE constant, the matrices `q^D`, PSD tests and the sampled `π(G)`.
//!
//! The QE constant of a distance matrix `D` is the maximum of `fᵀDf` over unit
//! vectors orthogonal to the all-ones vector. It is computed as the largest
//! eigenvalue of `HᵀDH`, where the columns of `H` are the Helmert basis of the
//! zero-sum hyperplane.

use alloc::vec::Vec;
use core::fmt;

use libm::sqrt;

use crate::distance::DistanceMatrix;
use crate::linalg::{self, symmetric_eigen, LinalgError, SymMatrix};

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    Linalg(LinalgError),
    /// The QE constant needs at least two vertices.
    TooSmall {
        n: usize,
    },
    LengthMismatch {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::Linalg(e) => write!(f, "{e}"),
            SpectralError::TooSmall { n } => write!(f, "QE constant needs at least 2 vertices, got {n}"),
            SpectralError::LengthMismatch { expected, got } => {
                write!(f, "vector has length {got}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for SpectralError {}

impl From<LinalgError> for SpectralError {
    fn from(e: LinalgError) -> Self {
        SpectralError::Linalg(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum QecMethod {
    Numeric,
    ClosedForm,
}

/// A QE constant together with a maximizing zero-sum unit vector.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QecResult {
    pub value: f64,
    pub vector: Vec<f64>,
    pub tol: f64,
    pub method: QecMethod,
}

/// Largest eigenpair of a symmetric matrix (symmetric within `tol`).
pub fn max_eigenvalue_symmetric(m: &SymMatrix, tol: f64) -> Result<(f64, Vec<f64>), SpectralError> {
    m.check_symmetric(tol)?;
    let e = symmetric_eigen(m)?;
    let (value, vector) = e.max();
    Ok((value, vector.to_vec()))
}

/// Orthonormal basis of `{f : Σf = 0}` in `R^n`: the `k`-th vector
/// (`k = 1..n`) is `(1, …, 1, −k, 0, …, 0) / √(k(k+1))` with `k` leading ones.
pub fn helmert_basis(n: usize) -> Vec<Vec<f64>> {
    (1..n)
        .map(|k| {
            let s = 1.0 / sqrt((k * (k + 1)) as f64);
            (0..n)
                .map(|i| match i.cmp(&k) {
                    core::cmp::Ordering::Less => s,
                    core::cmp::Ordering::Equal => -(k as f64) * s,
                    core::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect()
}

/// QE constant of an arbitrary symmetric matrix (the maximum of `fᵀMf` on the
/// centered unit sphere).
pub fn qec_of_matrix(m: &SymMatrix, tol: f64) -> Result<QecResult, SpectralError> {
    let n = m.n();
    if n < 2 {
        return Err(SpectralError::TooSmall { n });
    }
    m.check_symmetric(tol)?;
    let basis = helmert_basis(n);
    let reduced = m.congruence(&basis);
    let e = symmetric_eigen(&reduced)?;
    let (value, w) = e.max();
    let mut f = alloc::vec![0.0; n];
    for (b, &wk) in basis.iter().zip(w) {
        for (fi, bi) in f.iter_mut().zip(b) {
            *fi += wk * bi;
        }
    }
    Ok(QecResult { value, vector: f, tol, method: QecMethod::Numeric })
}

/// Numeric QE constant of a graph distance matrix.
pub fn qec_numeric(d: &DistanceMatrix, tol: f64) -> Result<QecResult, SpectralError> {
    let m = SymMatrix::from_row_major(d.n(), d.to_f64())?;
    qec_of_matrix(&m, tol)
}

/// `fᵀDf`, summed over all ordered pairs.
pub fn quadratic_form(d: &DistanceMatrix, f: &[f64]) -> Result<f64, SpectralError> {
    let n = d.n();
    if f.len() != n {
        return Err(SpectralError::LengthMismatch { expected: n, got: f.len() });
    }
    let mut s = 0.0;
    for i in 0..n {
        if f[i] == 0.0 {
            continue;
        }
        for j in 0..n {
            s += f[i] * f[j] * d.get(i, j) as f64;
        }
    }
    Ok(s)
}

/// Integer `fᵀDf`.
pub fn quadratic_form_exact(d: &DistanceMatrix, f: &[i64]) -> Result<i64, SpectralError> {
    let n = d.n();
    if f.len() != n {
        return Err(SpectralError::LengthMismatch { expected: n, got: f.len() });
    }
    let mut s = 0i64;
    for i in 0..n {
        for j in 0..n {
            s += f[i] * f[j] * d.get(i, j) as i64;
        }
    }
    Ok(s)
}

fn powi(q: f64, e: u32) -> f64 {
    let (mut base, mut e, mut acc) = (q, e, 1.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Entrywise `q^{d(i,j)}` with `0^0 = 1`.
pub fn q_power_matrix(d: &DistanceMatrix, q: f64) -> SymMatrix {
    SymMatrix::from_fn(d.n(), |i, j| if i == j { 1.0 } else { powi(q, d.get(i, j)) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdCheck {
    pub psd: bool,
    pub min_eigenvalue: f64,
}

/// PSD iff the smallest eigenvalue is `>= -tol`.
pub fn is_psd(m: &SymMatrix, tol: f64) -> Result<PsdCheck, SpectralError> {
    m.check_symmetric(tol)?;
    let min_eigenvalue = symmetric_eigen(m)?.values[0];
    Ok(PsdCheck { psd: min_eigenvalue >= -tol, min_eigenvalue })
}

/// Sampled `π(G) ∩ [−1, 1]`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PiScan {
    pub grid: Vec<f64>,
    pub psd_flags: Vec<bool>,
    pub min_eigenvalues: Vec<f64>,
    pub full_interval_sampled: bool,
}

pub const DEFAULT_GRID_POINTS: usize = 401;

impl PiScan {
    /// Sample with the most negative minimum eigenvalue, `(q, λ_min)`.
    pub fn worst(&self) -> (f64, f64) {
        self.grid.iter().zip(&self.min_eigenvalues).fold((f64::NAN, f64::INFINITY), |acc, (&q, &l)| {
            if l < acc.1 {
                (q, l)
            } else {
                acc
            }
        })
    }

    pub fn failing_count(&self) -> usize {
        self.psd_flags.iter().filter(|&&f| !f).count()
    }
}

/// Uniform grid of `points` samples over `[−1, 1]`, always containing `−1`,
/// `0` and `1`.
pub fn pi_grid(points: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = if points >= 2 {
        (0..points)
            .map(|i| -1.0 + 2.0 * i as f64 / (points - 1) as f64)
            .map(|q| if q.abs() < 1e-15 { 0.0 } else { q })
            .collect()
    } else {
        Vec::new()
    };
    grid.extend([-1.0, 0.0, 1.0]);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

pub fn pi_scan(d: &DistanceMatrix, points: usize, tol: f64) -> Result<PiScan, SpectralError> {
    let grid = pi_grid(points);
    let mut psd_flags = Vec::with_capacity(grid.len());
    let mut min_eigenvalues = Vec::with_capacity(grid.len());
    for &q in &grid {
        let check = is_psd(&q_power_matrix(d, q), tol)?;
        psd_flags.push(check.psd);
        min_eigenvalues.push(check.min_eigenvalue);
    }
    let full_interval_sampled = psd_flags.iter().all(|&f| f);
    Ok(PiScan { grid, psd_flags, min_eigenvalues, full_interval_sampled })
}

/// Re-export of the residual helper for callers checking eigenpairs.
pub use linalg::residual;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    fn dm(spec: FamilySpec) -> DistanceMatrix {
        DistanceMatrix::from_graph(&spec.generate().unwrap()).unwrap()
    }

    #[test]
    fn max_eigen_examples() {
        let (v, _) = max_eigenvalue_symmetric(&SymMatrix::identity(3), 1e-9).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        let (v, vec3) = max_eigenvalue_symmetric(&SymMatrix::from_diagonal(&[1.0, 2.0, 3.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(v, 3.0, epsilon = 1e-14);
        assert_eq!(vec3, vec![0.0, 0.0, 1.0]);
        let p2 = SymMatrix::from_row_major(2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        assert_abs_diff_eq!(max_eigenvalue_symmetric(&p2, 1e-9).unwrap().0, 1.0, epsilon = 1e-14);
        let bad = SymMatrix::from_row_major(2, vec![0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            max_eigenvalue_symmetric(&bad, 1e-9),
            Err(SpectralError::Linalg(LinalgError::NotSymmetric { .. }))
        ));
        let inf = SymMatrix::from_row_major(1, vec![f64::INFINITY]).unwrap();
        assert!(matches!(
            max_eigenvalue_symmetric(&inf, 1e-9),
            Err(SpectralError::Linalg(LinalgError::NonFinite { .. }))
        ));
    }

    #[test]
    fn helmert_is_orthonormal_and_centered() {
        let b = helmert_basis(7);
        assert_eq!(b.len(), 6);
        for (i, u) in b.iter().enumerate() {
            assert_abs_diff_eq!(u.iter().sum::<f64>(), 0.0, epsilon = 1e-14);
            for (j, v) in b.iter().enumerate() {
                assert_abs_diff_eq!(linalg::dot(u, v), if i == j { 1.0 } else { 0.0 }, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn qec_small_graphs() {
        assert_abs_diff_eq!(qec_numeric(&dm(FamilySpec::Path(2)), 1e-9).unwrap().value, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            qec_numeric(&dm(FamilySpec::CompleteBipartite(3, 3)), 1e-9).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(qec_numeric(&dm(FamilySpec::Cycle(6)), 1e-9).unwrap().value, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(qec_numeric(&dm(FamilySpec::Theta(2, 2, 4)), 1e-9).unwrap().value, 0.5529, epsilon = 5e-4);
        assert_eq!(qec_numeric(&dm(FamilySpec::Path(1)), 1e-9), Err(SpectralError::TooSmall { n: 1 }));
    }

    #[test]
    fn qec_vector_attains_value() {
        let d = dm(FamilySpec::Theta(2, 3, 4));
        let r = qec_numeric(&d, 1e-9).unwrap();
        assert_abs_diff_eq!(r.vector.iter().sum::<f64>(), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(linalg::norm(&r.vector), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(quadratic_form(&d, &r.vector).unwrap(), r.value, epsilon = 1e-8);
    }

    #[test]
    fn quadratic_form_examples() {
        let d = dm(FamilySpec::Path(2));
        assert_eq!(quadratic_form(&d, &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(quadratic_form(&d, &[1.0, -1.0]).unwrap(), -2.0);
        assert_eq!(quadratic_form_exact(&d, &[1, -1]).unwrap(), -2);
        assert_eq!(quadratic_form(&d, &[1.0]), Err(SpectralError::LengthMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn q_power_examples() {
        let d = dm(FamilySpec::Theta(2, 3, 4));
        assert_eq!(q_power_matrix(&d, 0.0), SymMatrix::identity(d.n()));
        assert!(q_power_matrix(&d, 1.0).as_slice().iter().all(|&x| x == 1.0));
        let p3 = q_power_matrix(&dm(FamilySpec::Path(3)), -1.0);
        assert_eq!(p3.as_slice(), &[1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0]);
    }

    #[test]
    fn psd_examples() {
        let ones = SymMatrix::from_fn(4, |_, _| 1.0);
        let c = is_psd(&ones, 1e-9).unwrap();
        assert!(c.psd);
        assert_abs_diff_eq!(c.min_eigenvalue, 0.0, epsilon = 1e-12);
        assert!(!is_psd(&SymMatrix::from_diagonal(&[1.0, -1.0]), 1e-9).unwrap().psd);
        assert!(is_psd(&q_power_matrix(&dm(FamilySpec::Path(3)), 0.5), 1e-9).unwrap().psd);
    }

    #[test]
    fn grid_shape() {
        let g = pi_grid(401);
        assert_eq!(g.len(), 401);
        assert_eq!((g[0], g[200], g[400]), (-1.0, 0.0, 1.0));
        let g = pi_grid(4);
        assert!(g.contains(&0.0) && g.len() == 5);
        assert_eq!(pi_grid(0), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn pi_scan_examples() {
        let s = pi_scan(&dm(FamilySpec::Path(5)), 401, 1e-9).unwrap();
        assert!(s.full_interval_sampled);
        let k23 = pi_scan(&dm(FamilySpec::CompleteBipartite(2, 3)), 401, 1e-9).unwrap();
        assert!(!k23.full_interval_sampled);
        for s in [&s, &k23] {
            for (q, f) in s.grid.iter().zip(&s.psd_flags) {
                if *q == 0.0 || *q == 1.0 {
                    assert!(*f);
                }
            }
        }
    }
}
