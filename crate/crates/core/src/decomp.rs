//! The matrix `A_n` behind the `Θ(1, 2, n−1)` QE argument and its
//! decomposition `B_n` into sums of block indicators `J^n(p, q)`.
//!
//! Indices `i, j, p, q` are 1-based throughout this module, matching the
//! usual displays; entry `(i, j)` is stored at `(i − 1)·n + (j − 1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::SymMatrix;
use crate::spectral::{is_psd, SpectralError};

#[derive(Debug, Clone, PartialEq)]
pub enum DecompError {
    TooSmall { n: usize },
    Band { n: usize, p: usize, q: usize },
    Spectral(SpectralError),
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::TooSmall { n } => write!(f, "need n >= 3, got {n}"),
            DecompError::Band { n, p, q } => write!(f, "need 1 <= p <= q <= n, got p={p}, q={q}, n={n}"),
            DecompError::Spectral(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DecompError {}

impl From<SpectralError> for DecompError {
    fn from(e: SpectralError) -> Self {
        DecompError::Spectral(e)
    }
}

/// Dense symmetric integer matrix with 1-based accessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, a: vec![0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[(i - 1) * self.n + (j - 1)]
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[(i - 1) * self.n..i * self.n]
    }

    fn add_scaled(&mut self, other: &BlockJ, c: i64) {
        for i in other.p..=other.q {
            for j in other.p..=other.q {
                self.a[(i - 1) * self.n + (j - 1)] += c;
            }
        }
    }

    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| self.a[i * self.n + j] as f64)
    }
}

/// `J^n(p, q)`: ones on the square band `p ≤ i, j ≤ q`, zero elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockJ {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl BlockJ {
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self, DecompError> {
        if !(1 <= p && p <= q && q <= n) {
            return Err(DecompError::Band { n, p, q });
        }
        Ok(BlockJ { n, p, q })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        (self.p <= i && i <= self.q && self.p <= j && j <= self.q) as i64
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        m.add_scaled(self, 1);
        m
    }
}

fn check_n(n: usize) -> Result<(), DecompError> {
    if n < 3 {
        return Err(DecompError::TooSmall { n });
    }
    Ok(())
}

/// `a_{i,j} = min{i, n+1−i} + min{j, n+1−j} − min{|i−j|, n−|i−j|}`.
pub fn build_a(n: usize) -> Result<IntMatrix, DecompError> {
    check_n(n)?;
    let mut m = IntMatrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            let diff = i.abs_diff(j);
            let v = i.min(n + 1 - i) + j.min(n + 1 - j) - diff.min(n - diff);
            m.a[(i - 1) * n + (j - 1)] = v as i64;
        }
    }
    Ok(m)
}

/// Terms of `B_n` as `(coefficient, block)`.
///
/// `n = 2k`: `J(1,2k) + J(1,k) + J(k+1,2k) + 2·Σ_{p=2..k} J(p, p+k−1)`.
/// `n = 2k+1`: `J(1,2k+1) + Σ_{p=1..k+1} J(p, p+k) + Σ_{p=2..k+1} J(p, p+k−1)`.
pub fn b_terms(n: usize) -> Result<Vec<(i64, BlockJ)>, DecompError> {
    check_n(n)?;
    let k = n / 2;
    let mut terms = vec![(1, BlockJ::new(n, 1, n)?)];
    if n % 2 == 0 {
        terms.push((1, BlockJ::new(n, 1, k)?));
        terms.push((1, BlockJ::new(n, k + 1, n)?));
        for p in 2..=k {
            terms.push((2, BlockJ::new(n, p, p + k - 1)?));
        }
    } else {
        for p in 1..=k + 1 {
            terms.push((1, BlockJ::new(n, p, p + k)?));
        }
        for p in 2..=k + 1 {
            terms.push((1, BlockJ::new(n, p, p + k - 1)?));
        }
    }
    Ok(terms)
}

pub fn build_b(n: usize) -> Result<IntMatrix, DecompError> {
    let mut m = IntMatrix::zeros(n);
    for (c, block) in b_terms(n)? {
        m.add_scaled(&block, c);
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theta12Check {
    pub equal: bool,
    pub min_eig: f64,
    pub psd: bool,
}

/// Compares `A_n` with `B_n` entrywise and computes the least eigenvalue of `A_n`.
pub fn verify_theta12(n: usize, tol: f64) -> Result<Theta12Check, DecompError> {
    let a = build_a(n)?;
    let b = build_b(n)?;
    let check = is_psd(&a.to_sym(), tol)?;
    Ok(Theta12Check { equal: a == b, min_eig: check.min_eigenvalue, psd: check.psd })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_a6_a7() {
        let a6 = build_a(6).unwrap();
        let expected6: [[i64; 6]; 6] = [
            [2, 2, 2, 1, 1, 1],
            [2, 4, 4, 3, 1, 1],
            [2, 4, 6, 5, 3, 1],
            [1, 3, 5, 6, 4, 2],
            [1, 1, 3, 4, 4, 2],
            [1, 1, 1, 2, 2, 2],
        ];
        for i in 1..=6 {
            assert_eq!(a6.row(i), &expected6[i - 1]);
        }
        let a7 = build_a(7).unwrap();
        assert_eq!(a7.get(4, 4), 8);
        assert_eq!(a7.row(2), &[2, 4, 4, 4, 2, 1, 1]);
        assert_eq!(a7.row(7), &[1, 1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn displayed_decompositions() {
        let j = |n, p, q| BlockJ::new(n, p, q).unwrap().to_matrix();
        let mut b6 = IntMatrix::zeros(6);
        for (c, (p, q)) in [(1, (1, 6)), (1, (1, 3)), (1, (4, 6)), (2, (2, 4)), (2, (3, 5))] {
            b6.add_scaled(&BlockJ::new(6, p, q).unwrap(), c);
        }
        assert_eq!(b6, build_b(6).unwrap());
        assert_eq!(b6, build_a(6).unwrap());
        let mut b7 = IntMatrix::zeros(7);
        for (p, q) in [(1, 7), (1, 4), (2, 5), (3, 6), (4, 7), (2, 4), (3, 5), (4, 6)] {
            b7.add_scaled(&BlockJ::new(7, p, q).unwrap(), 1);
        }
        assert_eq!(b7, build_b(7).unwrap());
        assert_eq!(b7, build_a(7).unwrap());
        assert_eq!(j(3, 2, 3).get(3, 2), 1);
        assert_eq!(j(3, 2, 3).get(1, 2), 0);
    }

    #[test]
    fn symmetries() {
        for n in 3..20 {
            let a = build_a(n).unwrap();
            let b = build_b(n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(a.get(i, j), a.get(j, i));
                    assert_eq!(a.get(i, j), a.get(n + 1 - i, n + 1 - j));
                    assert_eq!(b.get(i, j), b.get(n + 1 - i, n + 1 - j));
                }
            }
        }
    }

    #[test]
    fn verify_small_and_forty() {
        for n in [3, 4, 5, 6, 7, 40] {
            let c = verify_theta12(n, 1e-9).unwrap();
            assert!(c.equal, "n={n}");
            assert!(c.psd && c.min_eig >= -1e-9, "n={n} min {}", c.min_eig);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(build_a(2), Err(DecompError::TooSmall { n: 2 }));
        assert!(BlockJ::new(4, 3, 2).is_err());
        assert!(BlockJ::new(4, 0, 2).is_err());
        assert!(BlockJ::new(4, 2, 5).is_err());
    }
}
