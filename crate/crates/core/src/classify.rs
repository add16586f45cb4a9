//! QE classification, hypercube embeddability, theta-graph predictions and
//! primary non-QE checks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::distance::{is_bipartite, DistanceMatrix};
use crate::graph::{Graph, GraphError, ThetaLabeling};
use crate::quintuple::{self, Quintuple, QuintupleError, QuintupleKind};
use crate::spectral::{pi_scan, qec_numeric, PiScan, QecResult, SpectralError, DEFAULT_GRID_POINTS};
use crate::{DEFAULT_CLASS_TOL, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub enum ClassifyError {
    Graph(GraphError),
    Spectral(SpectralError),
    Quintuple(QuintupleError),
    NotBipartite,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Graph(e) => write!(f, "{e}"),
            ClassifyError::Spectral(e) => write!(f, "{e}"),
            ClassifyError::Quintuple(e) => write!(f, "{e}"),
            ClassifyError::NotBipartite => write!(f, "graph is not bipartite"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<GraphError> for ClassifyError {
    fn from(e: GraphError) -> Self {
        ClassifyError::Graph(e)
    }
}

impl From<SpectralError> for ClassifyError {
    fn from(e: SpectralError) -> Self {
        ClassifyError::Spectral(e)
    }
}

impl From<QuintupleError> for ClassifyError {
    fn from(e: QuintupleError) -> Self {
        ClassifyError::Quintuple(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum QeClass {
    #[cfg_attr(feature = "serde", serde(rename = "QE"))]
    Qe,
    #[cfg_attr(feature = "serde", serde(rename = "nonQE"))]
    NonQe,
}

impl QeClass {
    /// `QE` iff `qec ≤ class_tol`, so a numerically zero constant stays QE.
    pub fn from_qec(qec: f64, class_tol: f64) -> Self {
        if qec <= class_tol {
            QeClass::Qe
        } else {
            QeClass::NonQe
        }
    }
}

impl fmt::Display for QeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QeClass::Qe => "QE",
            QeClass::NonQe => "nonQE",
        })
    }
}

/// Size caps for exhaustive subgraph enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SubgraphLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SubgraphLimits {
    fn default() -> Self {
        SubgraphLimits { max_vertices: 12, max_edges: 16 }
    }
}

/// Which subgraphs a search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SubgraphRelation {
    /// Connected subgraphs whose distances agree with the host graph.
    /// These are always induced, so only vertex subsets are enumerated.
    Isometric,
    /// Any connected subgraph: a vertex subset with any subset of the edges among it.
    Any,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SubgraphWitness {
    pub relation: SubgraphRelation,
    /// Host vertex ids, ascending.
    pub vertices: Vec<usize>,
    /// Host edges.
    pub edges: Vec<(usize, usize)>,
    pub qec: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case", tag = "status"))]
pub enum SubgraphSearch {
    Found { witness: SubgraphWitness },
    NoneFound,
    Skipped { n: usize, edges: usize, limits: SubgraphLimits },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case", tag = "status"))]
pub enum PrimaryStatus {
    Primary,
    NonPrimary { witness: SubgraphWitness },
    NotApplicable,
    Skipped { n: usize, edges: usize, limits: SubgraphLimits },
}

/// Condensed `π(G)` scan for reports.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PiSummary {
    pub points: usize,
    pub failing: usize,
    pub full_interval_sampled: bool,
    pub worst_q: f64,
    pub worst_min_eigenvalue: f64,
}

impl From<&PiScan> for PiSummary {
    fn from(scan: &PiScan) -> Self {
        let (worst_q, worst_min_eigenvalue) = scan.worst();
        PiSummary {
            points: scan.grid.len(),
            failing: scan.failing_count(),
            full_interval_sampled: scan.full_interval_sampled,
            worst_q,
            worst_min_eigenvalue,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConsistencyFlag {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationReport {
    pub n: usize,
    pub edges: usize,
    pub bipartite: bool,
    pub qec: QecResult,
    pub qe_class: QeClass,
    pub tanaka: Option<Quintuple>,
    pub modified_tanaka: Option<Quintuple>,
    pub djokovic_embeddable: bool,
    pub pi_scan: PiSummary,
    pub primary_status: PrimaryStatus,
    pub consistency_flags: Vec<ConsistencyFlag>,
}

impl ClassificationReport {
    pub fn consistent(&self) -> bool {
        self.consistency_flags.iter().all(|f| f.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    /// Symmetry and PSD tolerance.
    pub tol: f64,
    pub class_tol: f64,
    pub grid_points: usize,
    pub limits: SubgraphLimits,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            tol: DEFAULT_TOL,
            class_tol: DEFAULT_CLASS_TOL,
            grid_points: DEFAULT_GRID_POINTS,
            limits: SubgraphLimits::default(),
        }
    }
}

/// Full classification of a connected graph on at least two vertices.
pub fn classify(g: &Graph, opts: &ClassifyOptions) -> Result<ClassificationReport, ClassifyError> {
    let d = DistanceMatrix::from_graph(g)?;
    let bipartite = is_bipartite(g)?.is_some();
    let qec = qec_numeric(&d, opts.tol)?;
    let qe_class = QeClass::from_qec(qec.value, opts.class_tol);
    let tanaka = quintuple::find(g, &d, QuintupleKind::Standard)?;
    let modified_tanaka = if bipartite { None } else { quintuple::find(g, &d, QuintupleKind::Modified)? };
    let djokovic_embeddable = bipartite && convexity_condition(g, &d);
    let scan = pi_scan(&d, opts.grid_points, opts.tol)?;
    let pi = PiSummary::from(&scan);
    let primary_status = primary_with_qec(g, &d, qec.value, opts.limits, opts.tol, opts.class_tol)?;

    let flag = |name: &str, passed: bool| ConsistencyFlag { name: name.into(), passed };
    let consistency_flags = vec![
        flag("tanaka-implies-nonQE", tanaka.is_none() || qe_class == QeClass::NonQe),
        flag("modified-tanaka-implies-nonQE", modified_tanaka.is_none() || qe_class == QeClass::NonQe),
        flag("djokovic-implies-QE", !djokovic_embeddable || qe_class == QeClass::Qe),
        flag("djokovic-iff-bipartite-without-tanaka", djokovic_embeddable == (bipartite && tanaka.is_none())),
        flag("djokovic-iff-pi-contains-interval", djokovic_embeddable == pi.full_interval_sampled),
    ];

    Ok(ClassificationReport {
        n: g.n(),
        edges: g.edge_count(),
        bipartite,
        qec,
        qe_class,
        tanaka,
        modified_tanaka,
        djokovic_embeddable,
        pi_scan: pi,
        primary_status,
        consistency_flags,
    })
}

/// `G(a, b) = {x : d(x, a) < d(x, b)}`.
pub fn half_set(d: &DistanceMatrix, a: usize, b: usize) -> Vec<bool> {
    (0..d.n()).map(|x| d.get(x, a) < d.get(x, b)).collect()
}

/// Whether `member` is closed under geodesics.
pub fn is_convex(d: &DistanceMatrix, member: &[bool]) -> bool {
    let inside: Vec<usize> = (0..d.n()).filter(|&x| member[x]).collect();
    for (s, &x) in inside.iter().enumerate() {
        for &y in &inside[s + 1..] {
            let dxy = d.get(x, y);
            if (0..d.n()).any(|z| !member[z] && d.get(x, z) + d.get(z, y) == dxy) {
                return false;
            }
        }
    }
    true
}

/// Every half-set `G(a, b)` over ordered adjacent pairs is convex.
pub fn convexity_condition(g: &Graph, d: &DistanceMatrix) -> bool {
    g.edges().iter().flat_map(|&(a, b)| [(a, b), (b, a)]).all(|(a, b)| is_convex(d, &half_set(d, a, b)))
}

/// Djoković's criterion for isometric embedding into a hypercube: bipartite,
/// and every `G(a, b)` with `a ~ b` convex.
pub fn djokovic_embeddable(g: &Graph) -> Result<bool, ClassifyError> {
    let d = DistanceMatrix::from_graph(g)?;
    Ok(is_bipartite(g)?.is_some() && convexity_condition(g, &d))
}

/// Three characterizations of partial cubes evaluated independently on a
/// bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossCheck {
    /// Every `G(a, b)` is convex.
    pub convexity: bool,
    /// `q^D` is PSD at every grid point of `[−1, 1]`.
    pub pi_full_interval: bool,
    /// No standard Tanaka quintuple.
    pub no_quintuple: bool,
}

impl CrossCheck {
    pub fn all_agree(&self) -> bool {
        self.convexity == self.pi_full_interval && self.convexity == self.no_quintuple
    }
}

pub fn theorem01_crosscheck(g: &Graph, grid_points: usize, tol: f64) -> Result<CrossCheck, ClassifyError> {
    if is_bipartite(g)?.is_none() {
        return Err(ClassifyError::NotBipartite);
    }
    let d = DistanceMatrix::from_graph(g)?;
    Ok(CrossCheck {
        convexity: convexity_condition(g, &d),
        pi_full_interval: pi_scan(&d, grid_points, tol)?.full_interval_sampled,
        no_quintuple: quintuple::find(g, &d, QuintupleKind::Standard)?.is_none(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ThetaVerdict {
    Qe,
    NonQe,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThetaPrediction {
    /// What the proven results say.
    pub verdict: ThetaVerdict,
    /// Conjectured class: QE iff `α = 1`, or `α = 2, β = 3` with `γ` odd.
    pub conjectured: QeClass,
}

/// Theorem-based class of `Θ(α, β, γ)`; parameters are sorted first.
///
/// QE: `α = 1` with `β ∈ {2, 3}` or `β, γ` both odd. Non-QE: `α = β = 2`;
/// `α = 2, β = 3, γ` even; `α = 2, β ≥ 4`; `α ≥ 3`. Everything else is open.
pub fn theta_predict(alpha: usize, beta: usize, gamma: usize) -> Result<ThetaPrediction, ClassifyError> {
    ThetaLabeling::new(alpha, beta, gamma)?;
    let mut s = [alpha, beta, gamma];
    s.sort_unstable();
    let [a, b, c] = s;
    let verdict = match a {
        1 if b <= 3 || (b % 2 == 1 && c % 2 == 1) => ThetaVerdict::Qe,
        1 => ThetaVerdict::Unknown,
        2 if b == 2 || (b == 3 && c % 2 == 0) || b >= 4 => ThetaVerdict::NonQe,
        2 => ThetaVerdict::Unknown,
        _ => ThetaVerdict::NonQe,
    };
    let conjectured = if a == 1 || (a == 2 && b == 3 && c % 2 == 1) { QeClass::Qe } else { QeClass::NonQe };
    Ok(ThetaPrediction { verdict, conjectured })
}

/// Whether `(h_vertices, h_edges)` is a connected subgraph of `g` with the
/// same distances as `g` on `h_vertices`.
pub fn is_isometric_subgraph(
    g: &Graph,
    h_vertices: &[usize],
    h_edges: &[(usize, usize)],
) -> Result<bool, ClassifyError> {
    let d = DistanceMatrix::from_graph(g)?;
    let h = g.subgraph(h_vertices, h_edges)?;
    let dh = DistanceMatrix::from_graph(&h)?;
    Ok(distances_agree(&d, h_vertices, &dh))
}

fn distances_agree(d: &DistanceMatrix, vertices: &[usize], dh: &DistanceMatrix) -> bool {
    vertices.iter().enumerate().all(|(i, &x)| vertices.iter().enumerate().all(|(j, &y)| dh.get(i, j) == d.get(x, y)))
}

fn within(g: &Graph, limits: SubgraphLimits) -> bool {
    g.n() <= limits.max_vertices && g.edge_count() <= limits.max_edges
}

fn subsets_by_size_desc(n: usize, bits: usize) -> impl Iterator<Item = u64> {
    (1..bits.min(n) + 1).rev().flat_map(move |size| (0u64..1 << n).filter(move |m| m.count_ones() as usize == size))
}

/// Search for a proper connected subgraph of `g` with `qec > class_tol`.
///
/// `Isometric` enumerates vertex subsets by size, largest first; `Any`
/// enumerates edge subsets by size, largest first. Returns the first hit.
/// Graphs beyond `limits` are skipped, not truncated.
pub fn find_non_qe_subgraph(
    g: &Graph,
    relation: SubgraphRelation,
    limits: SubgraphLimits,
    tol: f64,
    class_tol: f64,
) -> Result<SubgraphSearch, ClassifyError> {
    let d = DistanceMatrix::from_graph(g)?;
    search(g, &d, relation, limits, tol, class_tol)
}

fn search(
    g: &Graph,
    d: &DistanceMatrix,
    relation: SubgraphRelation,
    limits: SubgraphLimits,
    tol: f64,
    class_tol: f64,
) -> Result<SubgraphSearch, ClassifyError> {
    if !within(g, limits) || g.n() > 63 || g.edge_count() > 63 {
        return Ok(SubgraphSearch::Skipped { n: g.n(), edges: g.edge_count(), limits });
    }
    let hit = match relation {
        SubgraphRelation::Isometric => isometric_search(g, d, tol, class_tol)?,
        SubgraphRelation::Any => any_search(g, tol, class_tol)?,
    };
    Ok(match hit {
        Some(witness) => SubgraphSearch::Found { witness },
        None => SubgraphSearch::NoneFound,
    })
}

fn isometric_search(
    g: &Graph,
    d: &DistanceMatrix,
    tol: f64,
    class_tol: f64,
) -> Result<Option<SubgraphWitness>, ClassifyError> {
    let n = g.n();
    // proper subsets of at least two vertices
    for mask in subsets_by_size_desc(n, n - 1).filter(|m| m.count_ones() >= 2) {
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vertices)?;
        let Ok(dh) = DistanceMatrix::from_graph(&h) else { continue };
        if !distances_agree(d, &vertices, &dh) {
            continue;
        }
        let qec = qec_numeric(&dh, tol)?.value;
        if qec > class_tol {
            let edges = h.edges().iter().map(|&(u, v)| (vertices[u], vertices[v])).collect();
            return Ok(Some(SubgraphWitness { relation: SubgraphRelation::Isometric, vertices, edges, qec }));
        }
    }
    Ok(None)
}

fn any_search(g: &Graph, tol: f64, class_tol: f64) -> Result<Option<SubgraphWitness>, ClassifyError> {
    let all = g.edges();
    let m = all.len();
    // a connected subgraph on >= 2 vertices is determined by its edges; all m
    // edges give g itself
    for mask in subsets_by_size_desc(m, m.saturating_sub(1)) {
        let edges: Vec<(usize, usize)> = (0..m).filter(|&e| mask >> e & 1 == 1).map(|e| all[e]).collect();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let h = g.subgraph(&vertices, &edges)?;
        let Ok(dh) = DistanceMatrix::from_graph(&h) else { continue };
        let qec = qec_numeric(&dh, tol)?.value;
        if qec > class_tol {
            return Ok(Some(SubgraphWitness { relation: SubgraphRelation::Any, vertices, edges, qec }));
        }
    }
    Ok(None)
}

/// Primary non-QE status: a non-QE graph none of whose proper connected
/// isometric subgraphs is non-QE.
pub fn primary_non_qe(
    g: &Graph,
    limits: SubgraphLimits,
    tol: f64,
    class_tol: f64,
) -> Result<PrimaryStatus, ClassifyError> {
    let d = DistanceMatrix::from_graph(g)?;
    let qec = qec_numeric(&d, tol)?.value;
    primary_with_qec(g, &d, qec, limits, tol, class_tol)
}

fn primary_with_qec(
    g: &Graph,
    d: &DistanceMatrix,
    qec: f64,
    limits: SubgraphLimits,
    tol: f64,
    class_tol: f64,
) -> Result<PrimaryStatus, ClassifyError> {
    if qec <= class_tol {
        return Ok(PrimaryStatus::NotApplicable);
    }
    Ok(match search(g, d, SubgraphRelation::Isometric, limits, tol, class_tol)? {
        SubgraphSearch::Found { witness } => PrimaryStatus::NonPrimary { witness },
        SubgraphSearch::NoneFound => PrimaryStatus::Primary,
        SubgraphSearch::Skipped { n, edges, limits } => PrimaryStatus::Skipped { n, edges, limits },
    })
}

impl fmt::Display for PrimaryStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimaryStatus::Primary => f.write_str("primary"),
            PrimaryStatus::NonPrimary { witness } => {
                write!(f, "non-primary (witness on vertices {:?})", witness.vertices)
            }
            PrimaryStatus::NotApplicable => f.write_str("not applicable"),
            PrimaryStatus::Skipped { n, edges, limits } => write!(
                f,
                "skipped ({n} vertices, {edges} edges; limits {} and {})",
                limits.max_vertices, limits.max_edges
            ),
        }
    }
}

/// Short human label for a prediction, e.g. `unknown (conjectured QE)`.
pub fn describe_prediction(p: &ThetaPrediction) -> String {
    match p.verdict {
        ThetaVerdict::Qe => "QE".into(),
        ThetaVerdict::NonQe => "nonQE".into(),
        ThetaVerdict::Unknown => format!("unknown (conjectured {})", p.conjectured),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use approx::assert_abs_diff_eq;

    fn gen(spec: &str) -> Graph {
        spec.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn classify_examples() {
        let opts = ClassifyOptions { grid_points: 101, ..Default::default() };
        let r = classify(&gen("cycle:6"), &opts).unwrap();
        assert_eq!(r.qe_class, QeClass::Qe);
        assert_abs_diff_eq!(r.qec.value, 0.0, epsilon = 1e-10);
        assert!(r.djokovic_embeddable);
        assert_eq!(r.primary_status, PrimaryStatus::NotApplicable);
        assert!(r.consistent());

        let r = classify(&gen("kmn:2,3"), &opts).unwrap();
        assert_eq!(r.qe_class, QeClass::NonQe);
        assert!(r.tanaka.is_some());
        assert_eq!(r.primary_status, PrimaryStatus::Primary);
        assert!(r.consistent());

        let r = classify(&gen("theta:2,2,3"), &opts).unwrap();
        assert_eq!(r.qe_class, QeClass::NonQe);
        assert!(r.modified_tanaka.is_some());
        assert_abs_diff_eq!(r.qec.value, (libm::sqrt(19.0) - 4.0) / 3.0, epsilon = 1e-9);
        assert!(r.consistent());
    }

    #[test]
    fn classify_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            classify(&g, &ClassifyOptions::default()),
            Err(ClassifyError::Graph(GraphError::Disconnected { .. }))
        ));
    }

    #[test]
    fn djokovic_examples() {
        assert!(djokovic_embeddable(&gen("cycle:4")).unwrap());
        assert!(!djokovic_embeddable(&gen("kmn:2,3")).unwrap());
        assert!(djokovic_embeddable(&gen("hypercube:3")).unwrap());
        assert!(djokovic_embeddable(&gen("wheel:3,1,1,1,1,1,1")).unwrap());
        assert!(!djokovic_embeddable(&gen("cycle:5")).unwrap());
    }

    #[test]
    fn crosscheck_examples() {
        for spec in ["cycle:6", "cycle:8", "path:5"] {
            let c = theorem01_crosscheck(&gen(spec), 101, 1e-9).unwrap();
            assert!(c.convexity && c.pi_full_interval && c.no_quintuple, "{spec}");
        }
        let c = theorem01_crosscheck(&gen("kmn:3,3"), 101, 1e-9).unwrap();
        assert!(!c.convexity && !c.pi_full_interval && !c.no_quintuple);
        assert_eq!(theorem01_crosscheck(&gen("cycle:5"), 11, 1e-9), Err(ClassifyError::NotBipartite));
    }

    #[test]
    fn predictions() {
        assert_eq!(theta_predict(1, 2, 7).unwrap().verdict, ThetaVerdict::Qe);
        assert_eq!(theta_predict(3, 4, 5).unwrap().verdict, ThetaVerdict::NonQe);
        let p = theta_predict(4, 4, 1).unwrap();
        assert_eq!(p.verdict, ThetaVerdict::Unknown);
        assert_eq!(p.conjectured, QeClass::Qe);
        assert_eq!(describe_prediction(&p), "unknown (conjectured QE)");
        assert_eq!(theta_predict(2, 3, 5).unwrap().verdict, ThetaVerdict::Unknown);
        assert_eq!(theta_predict(2, 3, 4).unwrap().verdict, ThetaVerdict::NonQe);
        assert!(theta_predict(1, 1, 3).is_err());
    }

    #[test]
    fn isometric_examples() {
        let c6 = gen("cycle:6");
        assert!(is_isometric_subgraph(&c6, &[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert!(!is_isometric_subgraph(&c6, &[0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap());
        assert!(is_isometric_subgraph(&c6, &[0, 1, 2, 3, 4, 5], c6.edges()).unwrap());
        assert!(is_isometric_subgraph(&c6, &[0, 1, 3], &[(0, 1)]).is_err());
        assert!(is_isometric_subgraph(&c6, &[0, 1], &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn wheel_theta_subgraph_not_isometric() {
        let w = gen("wheel:3,1,1,1,1,1,1");
        // w2 = 2, w3 = 3; rim midpoints 4, 5, 6; spoke midpoints 7, 8, 9; hub 0.
        // Paths w2-5-w3, w2-8-0-9-w3, w2-4-w1-6-w3; the spoke through 7 is left out.
        let vertices = [2, 3, 5, 8, 0, 9, 4, 1, 6];
        let edges = [(2, 5), (3, 5), (2, 8), (0, 8), (0, 9), (3, 9), (2, 4), (1, 4), (1, 6), (3, 6)];
        let h = w.subgraph(&vertices, &edges).unwrap();
        let dh = DistanceMatrix::from_graph(&h).unwrap();
        assert!(qec_numeric(&dh, 1e-9).unwrap().value > 1e-8);
        assert!(!is_isometric_subgraph(&w, &vertices, &edges).unwrap());
        let d = DistanceMatrix::from_graph(&w).unwrap();
        assert!(qec_numeric(&d, 1e-9).unwrap().value <= 1e-8);
    }

    #[test]
    fn primary_examples() {
        let lim = SubgraphLimits::default();
        assert_eq!(primary_non_qe(&gen("theta:2,2,2"), lim, 1e-9, 1e-8).unwrap(), PrimaryStatus::Primary);
        assert_eq!(primary_non_qe(&gen("cycle:6"), lim, 1e-9, 1e-8).unwrap(), PrimaryStatus::NotApplicable);
        match primary_non_qe(&gen("kmn:3,3"), lim, 1e-9, 1e-8).unwrap() {
            PrimaryStatus::NonPrimary { witness } => {
                assert_eq!(witness.vertices.len(), 5);
                assert_eq!(witness.edges.len(), 6);
                let mut degs: Vec<usize> = witness
                    .vertices
                    .iter()
                    .map(|&v| witness.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
                    .collect();
                degs.sort_unstable();
                assert_eq!(degs, [2, 2, 2, 3, 3]);
            }
            other => panic!("{other:?}"),
        }
        let tight = SubgraphLimits { max_vertices: 4, max_edges: 16 };
        assert!(matches!(
            primary_non_qe(&gen("kmn:3,3"), tight, 1e-9, 1e-8).unwrap(),
            PrimaryStatus::Skipped { n: 6, .. }
        ));
    }

    #[test]
    fn any_relation_on_wheel_finds_theta() {
        let w = gen("wheel:3,1,1,1,1,1,1");
        let lim = SubgraphLimits::default();
        match find_non_qe_subgraph(&w, SubgraphRelation::Any, lim, 1e-9, 1e-8).unwrap() {
            SubgraphSearch::Found { witness } => assert!(witness.qec > 1e-8),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            find_non_qe_subgraph(&w, SubgraphRelation::Isometric, lim, 1e-9, 1e-8).unwrap(),
            SubgraphSearch::NoneFound
        );
        assert_eq!(
            find_non_qe_subgraph(&gen("theta:2,2,4"), SubgraphRelation::Any, lim, 1e-9, 1e-8).unwrap(),
            SubgraphSearch::NoneFound
        );
    }
}
