//! Tanaka and modified Tanaka quintuples: validation, exhaustive search,
//! explicit constructions on theta graphs, and non-QE witness vectors.
//!
//! A quintuple `(v1, .., v5)` has edges `{v1,v2}`, `{v3,v4}` and
//! `d(v1,v3) = d(v2,v4) = d(v1,v4) − 1 = d(v2,v3) − 1`. The standard kind
//! additionally asks `d(v5,v2) = d(v5,v1) + 1` and `d(v5,v3) = d(v5,v4) + 1`;
//! the modified kind asks `d(v5,v2) = d(v5,v1) + 1` and `d(v5,v3) = d(v5,v4)`.
//! Either kind forces the graph to be non-QE.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::distance::DistanceMatrix;
use crate::graph::{FamilySpec, Graph, GraphError, ThetaLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum QuintupleKind {
    Standard,
    Modified,
}

/// Distances recorded with a valid quintuple: `r = d(v1,v3)`, `j = d(v5,v1)`,
/// `h = d(v5,v4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub r: u32,
    pub j: u32,
    pub h: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quintuple {
    pub v: [usize; 5],
    pub kind: QuintupleKind,
    pub cert: Certificate,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QuintupleError {
    Graph(GraphError),
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// The tuple does not satisfy the distance conditions of its kind.
    Invalid([usize; 5]),
    WrongKind {
        expected: QuintupleKind,
    },
    /// Vertex count of the distance matrix and the graph differ.
    SizeMismatch,
    Parameter(String),
}

impl fmt::Display for QuintupleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuintupleError::Graph(e) => write!(f, "{e}"),
            QuintupleError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            QuintupleError::Invalid(v) => write!(f, "{v:?} is not a valid quintuple"),
            QuintupleError::WrongKind { expected } => write!(f, "expected a {expected:?} quintuple"),
            QuintupleError::SizeMismatch => write!(f, "distance matrix does not match graph"),
            QuintupleError::Parameter(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for QuintupleError {}

impl From<GraphError> for QuintupleError {
    fn from(e: GraphError) -> Self {
        QuintupleError::Graph(e)
    }
}

fn holds(d: &DistanceMatrix, v: &[usize; 5], kind: QuintupleKind) -> bool {
    let [v1, v2, v3, v4, v5] = *v;
    if d.get(v1, v2) != 1 || d.get(v3, v4) != 1 {
        return false;
    }
    let r = d.get(v1, v3);
    if d.get(v2, v4) != r || d.get(v1, v4) != r + 1 || d.get(v2, v3) != r + 1 {
        return false;
    }
    if d.get(v5, v2) != d.get(v5, v1) + 1 {
        return false;
    }
    match kind {
        QuintupleKind::Standard => d.get(v5, v3) == d.get(v5, v4) + 1,
        QuintupleKind::Modified => d.get(v5, v3) == d.get(v5, v4),
    }
}

fn check_range(d: &DistanceMatrix, v: &[usize; 5]) -> Result<(), QuintupleError> {
    match v.iter().find(|&&x| x >= d.n()) {
        Some(&vertex) => Err(QuintupleError::VertexOutOfRange { vertex, n: d.n() }),
        None => Ok(()),
    }
}

/// Whether `v` satisfies the conditions of `kind` under `d`.
pub fn validate(d: &DistanceMatrix, v: &[usize; 5], kind: QuintupleKind) -> Result<bool, QuintupleError> {
    check_range(d, v)?;
    Ok(holds(d, v, kind))
}

impl Quintuple {
    /// Checks `v` and attaches its certificate.
    pub fn certify(d: &DistanceMatrix, v: [usize; 5], kind: QuintupleKind) -> Result<Self, QuintupleError> {
        if !validate(d, &v, kind)? {
            return Err(QuintupleError::Invalid(v));
        }
        Ok(Self::certified_unchecked(d, v, kind))
    }

    fn certified_unchecked(d: &DistanceMatrix, v: [usize; 5], kind: QuintupleKind) -> Self {
        let cert = Certificate { r: d.get(v[0], v[2]), j: d.get(v[4], v[0]), h: d.get(v[4], v[3]) };
        Quintuple { v, kind, cert }
    }

    /// Re-checks the tuple and its certificate against `d`.
    pub fn validate(&self, d: &DistanceMatrix) -> Result<bool, QuintupleError> {
        Ok(validate(d, &self.v, self.kind)? && Self::certified_unchecked(d, self.v, self.kind).cert == self.cert)
    }
}

fn check_sizes(g: &Graph, d: &DistanceMatrix) -> Result<(), QuintupleError> {
    if g.n() != d.n() {
        return Err(QuintupleError::SizeMismatch);
    }
    Ok(())
}

/// All valid quintuples with first vertex `v1`, in lexicographic order,
/// passed to `visit` until it returns `false`. Returns whether the scan ran
/// to completion.
fn scan_from(
    g: &Graph,
    d: &DistanceMatrix,
    kind: QuintupleKind,
    v1: usize,
    visit: &mut impl FnMut(Quintuple) -> bool,
) -> bool {
    let n = g.n();
    for &v2 in g.neighbors(v1) {
        for v3 in 0..n {
            let r = d.get(v1, v3);
            if d.get(v2, v3) != r + 1 {
                continue;
            }
            for &v4 in g.neighbors(v3) {
                if d.get(v2, v4) != r || d.get(v1, v4) != r + 1 {
                    continue;
                }
                for v5 in 0..n {
                    let v = [v1, v2, v3, v4, v5];
                    if holds(d, &v, kind) && !visit(Quintuple::certified_unchecked(d, v, kind)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographically first quintuple of `kind` whose first vertex is `v1`.
/// Lets callers split [`find`] over `v1` and reduce by minimum.
pub fn find_from(
    g: &Graph,
    d: &DistanceMatrix,
    kind: QuintupleKind,
    v1: usize,
) -> Result<Option<Quintuple>, QuintupleError> {
    check_sizes(g, d)?;
    g.check_vertex(v1)?;
    let mut hit = None;
    scan_from(g, d, kind, v1, &mut |q| {
        hit = Some(q);
        false
    });
    Ok(hit)
}

/// Lexicographically first quintuple of `kind`, if any.
pub fn find(g: &Graph, d: &DistanceMatrix, kind: QuintupleKind) -> Result<Option<Quintuple>, QuintupleError> {
    check_sizes(g, d)?;
    for v1 in 0..g.n() {
        if let Some(q) = find_from(g, d, kind, v1)? {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Every quintuple of `kind`, in lexicographic order. Tuples related by a
/// symmetry of the conditions are listed separately.
pub fn find_all(g: &Graph, d: &DistanceMatrix, kind: QuintupleKind) -> Result<Vec<Quintuple>, QuintupleError> {
    check_sizes(g, d)?;
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        scan_from(g, d, kind, v1, &mut |q| {
            out.push(q);
            true
        });
    }
    Ok(out)
}

/// Where a theta-graph witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum WitnessSource {
    /// The explicit index formula.
    Formula,
    /// The formula collided or failed validation; [`find`] supplied the witness.
    SearchFallback,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaWitness {
    pub quintuple: Quintuple,
    pub source: WitnessSource,
    /// Paths playing the roles `(x, y, z)` in the formula (0 = α, 1 = β, 2 = γ).
    pub roles: [usize; 3],
}

/// Role assignments `(x, y, z)`, identity first.
const ROLES: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]];

fn theta_setup(alpha: usize, beta: usize, gamma: usize) -> Result<(ThetaLabeling, DistanceMatrix), QuintupleError> {
    let lab = ThetaLabeling::new(alpha, beta, gamma)?;
    let g = FamilySpec::Theta(alpha, beta, gamma).generate()?;
    let d = DistanceMatrix::from_graph(&g)?;
    Ok((lab, d))
}

/// Indices `(x_i, x_{i+1}, y_j, y_{j+1}, z_p)` from the standard construction,
/// for `a ≤ b` of equal parity on the `x`, `y` paths and `c` on `z`.
fn standard_indices(a: usize, b: usize, c: usize) -> Option<[usize; 5]> {
    if a < 2 || b < a || (b - a) % 2 != 0 || c < 2 {
        return None;
    }
    let k = (b - a) / 2;
    let p = c / 2;
    if a % 2 == 0 {
        let l = a / 2 - 1;
        if c % 2 == 0 && (l == 0 || p == 1) {
            return Some([l, l + 1, k + l + 1, k + l + 2, p]);
        }
        if l >= 1 && c >= 4 {
            return Some([l - 1, l, k + l + 2, k + l + 3, p]);
        }
        None
    } else {
        if c < 3 {
            return None;
        }
        let l = (a - 3) / 2;
        Some([l, l + 1, k + l + 2, k + l + 3, p])
    }
}

fn map_indices(lab: &ThetaLabeling, roles: [usize; 3], idx: [usize; 5]) -> [usize; 5] {
    let path = [roles[0], roles[0], roles[1], roles[1], roles[2]];
    let mut v = [0; 5];
    for t in 0..5 {
        v[t] = lab.vertex(path[t], idx[t]).expect("construction index within path");
    }
    v
}

/// Standard quintuple on `Θ(α, β, γ)` from the explicit construction, with
/// `v5` on the path playing the `z` role.
///
/// The construction needs two paths `a ≤ b` of equal parity on the `x`, `y`
/// roles: `a = 2` with `b`, `c` even; `a, b ≥ 4` even with `c ≠ 3`; or `a, b ≥ 3`
/// odd with `c ≥ 3`. Role assignments are tried with the given order first.
/// Vertex ids refer to the labeling of `Θ(α, β, γ)` as given.
pub fn theta_construct_standard(
    alpha: usize,
    beta: usize,
    gamma: usize,
) -> Result<Option<ThetaWitness>, QuintupleError> {
    let (lab, d) = theta_setup(alpha, beta, gamma)?;
    let len = lab.lengths;
    for roles in ROLES {
        let (a, b, c) = (len[roles[0]], len[roles[1]], len[roles[2]]);
        if a > b {
            continue;
        }
        if let Some(idx) = standard_indices(a, b, c) {
            let v = map_indices(&lab, roles, idx);
            let quintuple = Quintuple::certified_unchecked(&d, v, QuintupleKind::Standard);
            return Ok(Some(ThetaWitness { quintuple, source: WitnessSource::Formula, roles }));
        }
    }
    Ok(None)
}

/// Index formula for the modified construction on paths `(a, b, c)`:
/// `a = 2k, b = 2l, c = 2p + 1` gives `(x_k, x_{k+1}, y_l, y_{l+1}, z_p)`;
/// `a = 2k + 1, b = 2l + 1, c = 2p + 2` gives `(x_{k−1}, x_k, y_{l+1}, y_{l+2}, z_p)`.
pub fn modified_formula_indices(a: usize, b: usize, c: usize) -> Option<[usize; 5]> {
    if a < 2 || b < 2 || c < 2 {
        return None;
    }
    if a % 2 == 0 && b % 2 == 0 && c % 2 == 1 {
        let (k, l, p) = (a / 2, b / 2, c / 2);
        Some([k, k + 1, l, l + 1, p])
    } else if a % 2 == 1 && b % 2 == 1 && c % 2 == 0 && c >= 4 {
        let (k, l, p) = (a / 2, b / 2, c / 2 - 1);
        Some([k - 1, k, l + 1, l + 2, p])
    } else {
        None
    }
}

/// Modified quintuple on `Θ(α, β, γ)` when the parity conditions hold for
/// some role assignment: the `x`, `y` paths both even with `z` odd, or both
/// odd with `z ≥ 4` even (all lengths ≥ 2).
///
/// The explicit index formula is used when its five vertices are distinct and
/// valid. Otherwise the first quintuple found by [`find`] is returned and
/// marked [`WitnessSource::SearchFallback`]. The even-even formula never
/// validates: `d(x_k, y_l) = k + l` while `d(x_{k+1}, y_{l+1}) = k + l − 2`.
pub fn theta_construct_modified(
    alpha: usize,
    beta: usize,
    gamma: usize,
) -> Result<Option<ThetaWitness>, QuintupleError> {
    let (lab, d) = theta_setup(alpha, beta, gamma)?;
    let len = lab.lengths;
    let Some((roles, idx)) =
        ROLES.iter().find_map(|&r| modified_formula_indices(len[r[0]], len[r[1]], len[r[2]]).map(|idx| (r, idx)))
    else {
        return Ok(None);
    };
    let v = map_indices(&lab, roles, idx);
    let distinct = (0..5).all(|s| (s + 1..5).all(|t| v[s] != v[t]));
    if distinct && holds(&d, &v, QuintupleKind::Modified) {
        let quintuple = Quintuple::certified_unchecked(&d, v, QuintupleKind::Modified);
        return Ok(Some(ThetaWitness { quintuple, source: WitnessSource::Formula, roles }));
    }
    let g = FamilySpec::Theta(alpha, beta, gamma).generate()?;
    Ok(find(&g, &d, QuintupleKind::Modified)?.map(|quintuple| ThetaWitness {
        quintuple,
        source: WitnessSource::SearchFallback,
        roles,
    }))
}

/// Integer vector with `fᵀDf = 2j > 0` for a modified quintuple with
/// `j = d(v5, v1)`, `h = d(v5, v4)`: values `−(j+h), j+h, j+h−1, −(j+h), 1`
/// on `v1..v5`, zero elsewhere.
pub fn modified_witness_vector(d: &DistanceMatrix, q: &Quintuple) -> Result<Vec<i64>, QuintupleError> {
    if q.kind != QuintupleKind::Modified {
        return Err(QuintupleError::WrongKind { expected: QuintupleKind::Modified });
    }
    if !q.validate(d)? {
        return Err(QuintupleError::Invalid(q.v));
    }
    let s = q.cert.j as i64 + q.cert.h as i64;
    let mut f = vec![0i64; d.n()];
    for (&vertex, value) in q.v.iter().zip([-s, s, s - 1, -s, 1]) {
        f[vertex] = value;
    }
    Ok(f)
}

/// `Θ(2, 2k+1, 2l+1)` with an integer zero-sum vector whose quadratic form is
/// `2(4k + 4l − 13)`; needs `k, l ≥ 2`.
pub fn lemma_oddodd_vector(k: usize, l: usize) -> Result<(Graph, Vec<i64>), QuintupleError> {
    if k < 2 || l < 2 {
        return Err(QuintupleError::Parameter("k and l must be at least 2".to_string()));
    }
    let lab = ThetaLabeling::new(2, 2 * k + 1, 2 * l + 1)?;
    let g = FamilySpec::Theta(2, 2 * k + 1, 2 * l + 1).generate()?;
    let (ki, li) = (k as i64, l as i64);
    let u1 = 2 * ki + 2 * li - 4;
    let u2 = 11 - 4 * ki - 4 * li;
    let u3 = 4 * ki + 4 * li - 13;
    let u4 = -2 * (u1 + u2 + u3);
    let mut f = vec![0i64; g.n()];
    let at = |p: Option<usize>| p.expect("index within path");
    f[at(lab.y(1))] = u1;
    f[at(lab.z(2 * l))] = u1;
    f[at(lab.y(k + 1))] = u2;
    f[at(lab.z(l))] = u2;
    f[at(lab.y(k + 2))] = u3;
    f[at(lab.z(l - 1))] = u3;
    f[at(lab.x(1))] = u4;
    Ok((g, f))
}

fn in_interval(d: &DistanceMatrix, a: usize, b: usize, w: usize) -> bool {
    d.get(a, w) + d.get(w, b) == d.get(a, b)
}

/// Geodesic separation forced by a valid quintuple.
///
/// Every `v1–v3` geodesic misses every `v2–v4` geodesic and `v5` lies on
/// neither. For the standard kind `v4` lies on no `v5–v1` geodesic and `v1` on
/// no `v5–v4` geodesic; for the modified kind `v3, v4` avoid the `v5–v1`
/// geodesics and `v1` avoids the `v5–v4` geodesics. A vertex lies on some
/// `a–b` geodesic iff `d(a,w) + d(w,b) = d(a,b)`, so the check works on these
/// intervals rather than on individual paths.
///
/// For the modified kind, `v1` may lie on a `v5–v3` geodesic (whenever
/// `j + r = h`, e.g. in `Θ(2,2,5)`), so that case is not checked.
pub fn geodesic_disjointness_check(d: &DistanceMatrix, q: &Quintuple) -> Result<bool, QuintupleError> {
    if !q.validate(d)? {
        return Err(QuintupleError::Invalid(q.v));
    }
    let [v1, v2, v3, v4, v5] = q.v;
    for w in 0..d.n() {
        if in_interval(d, v1, v3, w) && in_interval(d, v2, v4, w) {
            return Ok(false);
        }
    }
    if in_interval(d, v1, v3, v5) || in_interval(d, v2, v4, v5) {
        return Ok(false);
    }
    let ok = match q.kind {
        QuintupleKind::Standard => !in_interval(d, v5, v1, v4) && !in_interval(d, v5, v4, v1),
        QuintupleKind::Modified => {
            !in_interval(d, v5, v1, v3) && !in_interval(d, v5, v1, v4) && !in_interval(d, v5, v4, v1)
        }
    };
    Ok(ok)
}

/// Parity condition for a standard quintuple on `Θ(α, β, γ)` as usually
/// stated, after sorting: `α = 2` with `β, γ` even, `α = 3` with `β, γ` odd,
/// or `α ≥ 4`.
///
/// Sufficient but not necessary: with `α = 3` and exactly one of `β, γ` even
/// the two odd paths still carry the construction of
/// [`theta_construct_standard`], e.g. `Θ(3,3,4)` has
/// `(x_0, x_1, y_2, y_3, z_2)`. [`theta_standard_exists`] gives the condition
/// matching exhaustive search.
pub fn theta_has_standard(alpha: usize, beta: usize, gamma: usize) -> bool {
    let mut s = [alpha, beta, gamma];
    s.sort_unstable();
    let [a, b, c] = s;
    (a == 2 && b % 2 == 0 && c % 2 == 0) || (a == 3 && b % 2 == 1 && c % 2 == 1) || a >= 4
}

/// Whether some role assignment admits the explicit standard construction:
/// after sorting, `α = 2` with `β, γ` even, `α = 3` with `β` or `γ` odd, or
/// `α ≥ 4`.
pub fn theta_standard_exists(alpha: usize, beta: usize, gamma: usize) -> bool {
    let len = [alpha, beta, gamma];
    ROLES.iter().any(|r| len[r[0]] <= len[r[1]] && standard_indices(len[r[0]], len[r[1]], len[r[2]]).is_some())
}

/// Sufficient parity condition for a modified quintuple on `Θ(α, β, γ)`.
pub fn theta_modified_condition(alpha: usize, beta: usize, gamma: usize) -> bool {
    let len = [alpha, beta, gamma];
    ROLES.iter().any(|r| modified_formula_indices(len[r[0]], len[r[1]], len[r[2]]).is_some())
}
