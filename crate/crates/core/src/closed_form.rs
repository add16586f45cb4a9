//! Closed-form QE constants: complete and almost complete bipartite graphs,
//! paths, and the largest real root of a cubic.
//!
//! For `K_{m,n}` the value `(2(m−1)(n−1) − 2)/(m + n)` is used. The other
//! formula in circulation, `(2mn − 2m − 2n)/(mn)`, disagrees with the numeric
//! value already at `K_{3,3}` (2/3 against 1) and at `K_{1,2} = P_3`, so it is
//! not implemented.

use alloc::string::{String, ToString};
use core::fmt;

use libm::{cos, sqrt};

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedFormError {
    NonFinite,
    /// Leading coefficient is zero.
    NotCubic,
    /// Parameters outside the range where the formula is valid.
    OutOfDomain(String),
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::NonFinite => write!(f, "non-finite cubic coefficient"),
            ClosedFormError::NotCubic => write!(f, "leading coefficient is zero"),
            ClosedFormError::OutOfDomain(msg) => write!(f, "parameters out of domain: {msg}"),
        }
    }
}

impl core::error::Error for ClosedFormError {}

fn domain<T>(msg: &str) -> Result<T, ClosedFormError> {
    Err(ClosedFormError::OutOfDomain(msg.to_string()))
}

/// `c3·λ³ + c2·λ² + c1·λ + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoefficients {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl CubicCoefficients {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        CubicCoefficients { c3, c2, c1, c0 }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1
    }

    /// The polynomial whose largest root `λ₀` gives `QEC(K_{m,n}^t) = 2λ₀ − 2`:
    /// `(m+n)λ³ + (2t−mn)λ² + (2t−m−n)λ + (m−t)(n−t)`.
    pub fn almost_complete_bipartite(t: usize, m: usize, n: usize) -> Self {
        let (t, m, n) = (t as f64, m as f64, n as f64);
        CubicCoefficients::new(m + n, 2.0 * t - m * n, 2.0 * t - m - n, (m - t) * (n - t))
    }
}

const BISECTION_CAP: usize = 400;

/// Largest real root of a cubic, to within `tol`.
///
/// The monic polynomial is split into monotone pieces at the real critical
/// points; the rightmost piece containing a sign change (inside the Cauchy
/// bound `B = 1 + max|a_i|`) is bisected to width `tol`, followed by one
/// Newton step that is kept only if it stays inside the final bracket. A
/// local minimum touching zero (double root) is returned directly.
pub fn max_real_root_cubic(c: CubicCoefficients, tol: f64) -> Result<f64, ClosedFormError> {
    if ![c.c3, c.c2, c.c1, c.c0].iter().all(|x| x.is_finite()) {
        return Err(ClosedFormError::NonFinite);
    }
    if c.c3 == 0.0 {
        return Err(ClosedFormError::NotCubic);
    }
    let p = CubicCoefficients::new(1.0, c.c2 / c.c3, c.c1 / c.c3, c.c0 / c.c3);
    let bound = 1.0 + p.c2.abs().max(p.c1.abs()).max(p.c0.abs());
    let scale = 1.0 + p.c2.abs() + p.c1.abs() + p.c0.abs();
    let touch = 1e-12 * scale;

    let disc = p.c2 * p.c2 - 3.0 * p.c1;
    let (lo, hi) = if disc > 0.0 {
        let r = sqrt(disc);
        let hi = (-p.c2 + r) / 3.0;
        let lo = (-p.c2 - r) / 3.0;
        let p_hi = p.eval(hi);
        if p_hi < 0.0 {
            (hi, bound)
        } else if p_hi <= touch {
            return Ok(hi);
        } else {
            (-bound, lo)
        }
    } else {
        (-bound, bound)
    };

    // p is increasing on [lo, hi], p(lo) <= 0 <= p(hi)
    let (mut a, mut b) = (lo, hi);
    for _ in 0..BISECTION_CAP {
        if b - a <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if p.eval(mid) <= 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let mut root = 0.5 * (a + b);
    let dp = p.derivative(root);
    if dp != 0.0 {
        let polished = root - p.eval(root) / dp;
        if polished >= a && polished <= b && p.eval(polished).abs() <= p.eval(root).abs() {
            root = polished;
        }
    }
    Ok(root)
}

/// `QEC(K_{m,n}) = (2(m−1)(n−1) − 2)/(m + n)`.
pub fn qec_complete_bipartite(m: usize, n: usize) -> Result<f64, ClosedFormError> {
    if m == 0 || n == 0 {
        return domain("K_{m,n} needs m, n >= 1");
    }
    let (m, n) = (m as f64, n as f64);
    Ok((2.0 * (m - 1.0) * (n - 1.0) - 2.0) / (m + n))
}

/// `QEC(K_{m,n}^t)` for connected `K_{m,n}^t`, `0 ≤ t ≤ m ≤ n`.
///
/// Routing: `t = 0` uses [`qec_complete_bipartite`]; `(3,3,3)` is the
/// 6-cycle with value 0; `t = m = 2` uses [`qec_k2n2`]; everything else is
/// `2λ₀ − 2` with `λ₀` the largest root of
/// [`CubicCoefficients::almost_complete_bipartite`]. `K_{1,n}^1` and
/// `K_{2,2}^2` are disconnected and rejected.
pub fn qec_almost_complete_bipartite(t: usize, m: usize, n: usize, tol: f64) -> Result<f64, ClosedFormError> {
    if !(t <= m && m <= n && m >= 1) {
        return domain("K_{m,n}^t needs 0 <= t <= m <= n, m >= 1");
    }
    match (t, m, n) {
        (0, _, _) => qec_complete_bipartite(m, n),
        (1, 1, _) => domain("K_{1,n}^1 is disconnected"),
        (2, 2, 2) => domain("K_{2,2}^2 is disconnected"),
        (2, 2, n) => qec_k2n2(n),
        (3, 3, 3) => Ok(0.0),
        _ => {
            let lambda = max_real_root_cubic(CubicCoefficients::almost_complete_bipartite(t, m, n), tol)?;
            Ok(2.0 * lambda - 2.0)
        }
    }
}

/// `QEC(K_{2,n}^2) = (n − 8 + √(5n² − 24n + 32))/(n + 2)` for `n ≥ 3`.
pub fn qec_k2n2(n: usize) -> Result<f64, ClosedFormError> {
    if n < 3 {
        return domain("K_{2,n}^2 formula needs n >= 3");
    }
    let n = n as f64;
    Ok((n - 8.0 + sqrt(5.0 * n * n - 24.0 * n + 32.0)) / (n + 2.0))
}

/// `QEC(K_{m,m}^t) = (m − 6 + √(m² + 4m + 4 − 8t))/2`.
///
/// Valid for `1 ≤ t ≤ m`, `m ≥ 2`, except `(t, m) = (2, 2)` (disconnected) and
/// `(3, 3)` (the 6-cycle, where the formula would give −1 instead of 0).
pub fn qec_corollary_kmm(t: usize, m: usize) -> Result<f64, ClosedFormError> {
    if !(1 <= t && t <= m && m >= 2) {
        return domain("needs 1 <= t <= m, m >= 2");
    }
    if (t, m) == (2, 2) || (t, m) == (3, 3) {
        return domain("(t, m) = (2, 2) and (3, 3) are outside the cubic-root regime");
    }
    let (t, m) = (t as f64, m as f64);
    Ok((m - 6.0 + sqrt(m * m + 4.0 * m + 4.0 - 8.0 * t)) / 2.0)
}

/// `QEC(K_{m,n}^m) = (mn − 4m − 2n + √(m²n² + 4n² − 4m²n))/(m + n)` for
/// `3 ≤ m ≤ n`, `n ≥ 4`.
pub fn qec_corollary_kmnm(m: usize, n: usize) -> Result<f64, ClosedFormError> {
    if !(3 <= m && m <= n && n >= 4) {
        return domain("needs 3 <= m <= n, n >= 4");
    }
    let (m, n) = (m as f64, n as f64);
    Ok((m * n - 4.0 * m - 2.0 * n + sqrt(m * m * n * n + 4.0 * n * n - 4.0 * m * m * n)) / (m + n))
}

/// `QEC(P_n) = −1/(1 + cos(π/n))` for `n ≥ 2` vertices.
pub fn qec_path(n: usize) -> Result<f64, ClosedFormError> {
    if n < 2 {
        return domain("path needs at least 2 vertices");
    }
    Ok(-1.0 / (1.0 + cos(core::f64::consts::PI / n as f64)))
}
