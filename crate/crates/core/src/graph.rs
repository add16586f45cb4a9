//! Simple undirected graphs and the graph families used throughout the crate.
//!
//! Vertex ids are `0..n`. Every family generator uses a frozen numbering so
//! that witness vertex ids are reproducible:
//!
//! * `Path(n)`: `0 - 1 - ... - (n-1)`.
//! * `Cycle(n)`: the path plus the edge `{n-1, 0}`.
//! * `CompleteBipartite(m, n)`, `AlmostCompleteBipartite(t, m, n)`, `Crown(m)`:
//!   `u_1..u_m` get ids `0..m`, `v_1..v_n` get ids `m..m+n`.
//! * `Theta(α, β, γ)`: see [`ThetaLabeling`].
//! * `Hypercube(k)`: vertex id is the characteristic bitmask of the subset.
//! * `SubdividedWheel(k, rim, spokes)`: hub `0`, rim vertices `w_1..w_k` are
//!   `1..=k`, then the vertices subdividing the rim edges `w_i w_{i+1}` (for
//!   `i = 1..k`, walking from `w_i` to `w_{i+1}`), then the vertices
//!   subdividing the spokes `u w_i` (walking from the hub outwards).

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Errors raised while building or inspecting graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A graph needs at least one vertex.
    Empty,
    /// `{v, v}` is not an edge of a simple graph.
    SelfLoop(usize),
    /// The edge was listed more than once.
    DuplicateEdge(usize, usize),
    /// A vertex id is not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Family parameters violate the family's constraints.
    InvalidFamily(String),
    /// The operation needs a connected graph; `a` cannot reach `b`.
    Disconnected { a: usize, b: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::InvalidFamily(msg) => write!(f, "invalid family: {msg}"),
            GraphError::Disconnected { a, b } => {
                write!(f, "graph is disconnected: no path from {a} to {b}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple undirected graph.
///
/// Edges are stored canonically (`u < v`, sorted), adjacency lists are sorted
/// ascending. Graphs are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[cfg_attr(feature = "serde", serde(skip))]
    adj: Vec<Vec<usize>>,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, duplicate edges
    /// (in either orientation) and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj, family: None })
    }

    /// Attaches a family descriptor used for reporting.
    pub fn with_family(mut self, family: FamilySpec) -> Self {
        self.family = Some(family);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `Ok(())` for connected graphs; otherwise names vertex 0 and the smallest
    /// vertex it cannot reach.
    pub fn require_connected(&self) -> Result<(), GraphError> {
        let comps = self.components();
        if comps.len() == 1 {
            Ok(())
        } else {
            Err(GraphError::Disconnected { a: comps[0][0], b: comps[1][0] })
        }
    }

    /// Subgraph on `vertices` (any order, no repeats) with `edges`, each of
    /// which must be an edge of `self` with both endpoints in `vertices`.
    /// Returned vertex `i` is `vertices[i]` in `self`.
    pub fn subgraph(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(GraphError::InvalidFamily("repeated vertex in subgraph".to_string()));
            }
            index[v] = i;
        }
        let mut mapped = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(GraphError::InvalidFamily(alloc::format!("{{{u}, {v}}} is not an edge of the host graph")));
            }
            if index[u] == usize::MAX {
                return Err(GraphError::VertexOutOfRange { vertex: u, n: vertices.len() });
            }
            if index[v] == usize::MAX {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: vertices.len() });
            }
            mapped.push((index[u], index[v]));
        }
        Graph::new(vertices.len(), mapped)
    }

    /// Induced subgraph on `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in vertices {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let edges: Vec<_> = self.edges.iter().copied().filter(|&(u, v)| inside[u] && inside[v]).collect();
        self.subgraph(vertices, &edges)
    }
}

/// Glues `g1` at `v1` to `g2` at `v2`.
///
/// Vertices of `g1` keep their ids; the glued vertex is `v1`. A vertex
/// `w != v2` of `g2` gets id `g1.n() + w` if `w < v2`, else `g1.n() + w - 1`.
pub fn star_product(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, GraphError> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.n();
    let map = |w: usize| -> usize {
        match w.cmp(&v2) {
            core::cmp::Ordering::Equal => v1,
            core::cmp::Ordering::Less => n1 + w,
            core::cmp::Ordering::Greater => n1 + w - 1,
        }
    };
    let edges = g1.edges().iter().copied().chain(g2.edges().iter().map(|&(a, b)| (map(a), map(b))));
    Graph::new(n1 + g2.n() - 1, edges)
}

/// Vertex numbering of `Θ(α, β, γ)`.
///
/// `x_0 = y_0 = z_0` is id 0 and `x_α = y_β = z_γ` is id 1. Interior `x_i`
/// (`1 ≤ i < α`) is `1 + i`, interior `y_j` is `α + j`, interior `z_k` is
/// `α + β - 1 + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaLabeling {
    pub lengths: [usize; 3],
}

impl ThetaLabeling {
    pub fn new(alpha: usize, beta: usize, gamma: usize) -> Result<Self, GraphError> {
        validate_theta(alpha, beta, gamma)?;
        Ok(ThetaLabeling { lengths: [alpha, beta, gamma] })
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.iter().sum::<usize>() - 1
    }

    /// Id of the `index`-th vertex of path `path` (0 = x, 1 = y, 2 = z).
    /// Returns `None` when `index` exceeds the path length.
    pub fn vertex(&self, path: usize, index: usize) -> Option<usize> {
        let len = *self.lengths.get(path)?;
        if index > len {
            return None;
        }
        if index == 0 {
            return Some(0);
        }
        if index == len {
            return Some(1);
        }
        let offset = 1 + self.lengths[..path].iter().map(|l| l - 1).sum::<usize>();
        Some(offset + index)
    }

    pub fn x(&self, i: usize) -> Option<usize> {
        self.vertex(0, i)
    }

    pub fn y(&self, j: usize) -> Option<usize> {
        self.vertex(1, j)
    }

    pub fn z(&self, k: usize) -> Option<usize> {
        self.vertex(2, k)
    }

    /// Inverse of [`ThetaLabeling::vertex`]: `(path, index)` for an interior
    /// vertex, `None` for the two branch points.
    pub fn locate(&self, id: usize) -> Option<(usize, usize)> {
        if id < 2 || id >= self.vertex_count() {
            return None;
        }
        let mut offset = 1;
        for (p, &len) in self.lengths.iter().enumerate() {
            if id < offset + len && id > offset {
                return Some((p, id - offset));
            }
            offset += len - 1;
        }
        None
    }
}

fn validate_theta(alpha: usize, beta: usize, gamma: usize) -> Result<(), GraphError> {
    let l = [alpha, beta, gamma];
    if l.contains(&0) {
        return Err(GraphError::InvalidFamily("theta path lengths must be positive".to_string()));
    }
    if l.iter().filter(|&&x| x == 1).count() > 1 {
        return Err(GraphError::InvalidFamily("at most one theta path may have length 1".to_string()));
    }
    Ok(())
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n ≥ 3` vertices.
    Cycle(usize),
    /// `K_{m,n}`.
    CompleteBipartite(usize, usize),
    /// `K_{m,n}^t`: `K_{m,n}` minus the matching `{u_i, v_i}`, `i ≤ t`.
    AlmostCompleteBipartite { t: usize, m: usize, n: usize },
    /// `K_{m,m}^m`.
    Crown(usize),
    /// `Θ(α, β, γ)`.
    Theta(usize, usize, usize),
    /// Skeleton of the `k`-cube.
    Hypercube(usize),
    /// Wheel `W_k` with `rim[i]` vertices added on `w_i w_{i+1}` and
    /// `spokes[i]` on `u w_i`.
    SubdividedWheel { k: usize, rim: Vec<usize>, spokes: Vec<usize> },
}

const MAX_HYPERCUBE_DIM: usize = 16;

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: &str| Err(GraphError::InvalidFamily(msg.to_string()));
        match *self {
            FamilySpec::Path(0) => bad("path needs at least one vertex"),
            FamilySpec::Cycle(n) if n < 3 => bad("cycle needs at least three vertices"),
            FamilySpec::CompleteBipartite(m, n) if m == 0 || n == 0 => bad("K_{m,n} needs m, n >= 1"),
            FamilySpec::AlmostCompleteBipartite { t, m, n } if !(t <= m && m <= n && m >= 1) => {
                bad("K_{m,n}^t needs 0 <= t <= m <= n and m >= 1")
            }
            FamilySpec::Crown(0) => bad("crown needs m >= 1"),
            FamilySpec::Theta(a, b, c) => validate_theta(a, b, c),
            FamilySpec::Hypercube(k) if k == 0 || k > MAX_HYPERCUBE_DIM => bad("hypercube dimension must be in 1..=16"),
            FamilySpec::SubdividedWheel { k, ref rim, ref spokes } => {
                if k < 3 {
                    bad("wheel needs k >= 3")
                } else if rim.len() != k || spokes.len() != k {
                    bad("wheel needs k rim counts and k spoke counts")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Builds the graph with the canonical numbering described in the module
    /// docs. Families that are disconnected for some parameters (`K_{1,n}^1`,
    /// `K_{2,2}^2`, small crowns) are still returned; check
    /// [`Graph::is_connected`].
    pub fn generate(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let (n, edges): (usize, Vec<(usize, usize)>) = match *self {
            FamilySpec::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
            FamilySpec::Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
            FamilySpec::CompleteBipartite(m, n) => acb_edges(0, m, n),
            FamilySpec::AlmostCompleteBipartite { t, m, n } => acb_edges(t, m, n),
            FamilySpec::Crown(m) => acb_edges(m, m, m),
            FamilySpec::Theta(a, b, c) => {
                let lab = ThetaLabeling::new(a, b, c)?;
                let mut edges = Vec::new();
                for p in 0..3 {
                    for i in 1..=lab.lengths[p] {
                        edges.push((lab.vertex(p, i - 1).unwrap(), lab.vertex(p, i).unwrap()));
                    }
                }
                (lab.vertex_count(), edges)
            }
            FamilySpec::Hypercube(k) => {
                let n = 1usize << k;
                let edges =
                    (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v).collect();
                (n, edges)
            }
            FamilySpec::SubdividedWheel { k, ref rim, ref spokes } => {
                let mut next = k + 1;
                let mut edges = Vec::new();
                let mut chain = |from: usize, to: usize, count: usize, edges: &mut Vec<(usize, usize)>| {
                    let mut prev = from;
                    for _ in 0..count {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    edges.push((prev, to));
                };
                for i in 1..=k {
                    let succ = if i == k { 1 } else { i + 1 };
                    chain(i, succ, rim[i - 1], &mut edges);
                }
                for i in 1..=k {
                    chain(0, i, spokes[i - 1], &mut edges);
                }
                (next, edges)
            }
        };
        Ok(Graph::new(n, edges)?.with_family(self.clone()))
    }
}

fn acb_edges(t: usize, m: usize, n: usize) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            if i == j && i < t {
                continue;
            }
            edges.push((i, m + j));
        }
    }
    (m + n, edges)
}

impl fmt::Display for FamilySpec {
    /// Mini-grammar `name:comma-separated-ints`, inverse of [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            FamilySpec::AlmostCompleteBipartite { t, m, n } => write!(f, "acb:{t},{m},{n}"),
            FamilySpec::Crown(m) => write!(f, "crown:{m}"),
            FamilySpec::Theta(a, b, c) => write!(f, "theta:{a},{b},{c}"),
            FamilySpec::Hypercube(k) => write!(f, "hypercube:{k}"),
            FamilySpec::SubdividedWheel { k, rim, spokes } => {
                write!(f, "wheel:{k}")?;
                for x in rim.iter().chain(spokes) {
                    write!(f, ",{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses `theta:2,3,4`, `acb:1,3,3`, `kmn:2,3`, `crown:5`,
    /// `hypercube:3`, `path:6`, `cycle:6` or `wheel:k,m_1..m_k,n_1..n_k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| GraphError::InvalidFamily(msg);
        let (name, args) =
            s.trim().split_once(':').ok_or_else(|| bad(alloc::format!("expected `family:ints`, got `{s}`")))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad(alloc::format!("`{a}` is not a nonnegative integer"))))
            .collect::<Result<Vec<_>, _>>()?;
        let want = |k: usize| -> Result<(), GraphError> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(alloc::format!("`{name}` takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "path" => {
                want(1)?;
                FamilySpec::Path(nums[0])
            }
            "cycle" => {
                want(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "kmn" | "complete-bipartite" => {
                want(2)?;
                FamilySpec::CompleteBipartite(nums[0], nums[1])
            }
            "acb" => {
                want(3)?;
                FamilySpec::AlmostCompleteBipartite { t: nums[0], m: nums[1], n: nums[2] }
            }
            "crown" => {
                want(1)?;
                FamilySpec::Crown(nums[0])
            }
            "theta" => {
                want(3)?;
                FamilySpec::Theta(nums[0], nums[1], nums[2])
            }
            "hypercube" | "cube" => {
                want(1)?;
                FamilySpec::Hypercube(nums[0])
            }
            "wheel" => {
                let k = nums[0];
                want(1 + 2 * k)?;
                FamilySpec::SubdividedWheel { k, rim: nums[1..=k].to_vec(), spokes: nums[k + 1..].to_vec() }
            }
            other => return Err(bad(alloc::format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn theta_222_is_k23() {
        let g = gen(FamilySpec::Theta(2, 2, 2));
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        // both branch points see all three midpoints, midpoints see only them
        assert_eq!(g.neighbors(0), &[2, 3, 4]);
        assert_eq!(g.neighbors(1), &[2, 3, 4]);
        for v in 2..5 {
            assert_eq!(g.neighbors(v), &[0, 1]);
        }
    }

    #[test]
    fn theta_counts() {
        for a in 1..6 {
            for b in 1..6 {
                for c in 1..6 {
                    if [a, b, c].iter().filter(|&&x| x == 1).count() > 1 {
                        assert!(FamilySpec::Theta(a, b, c).generate().is_err());
                        continue;
                    }
                    let g = gen(FamilySpec::Theta(a, b, c));
                    assert_eq!(g.n(), a + b + c - 1);
                    assert_eq!(g.edge_count(), a + b + c);
                    assert!(g.is_connected());
                }
            }
        }
    }

    #[test]
    fn theta_labeling_is_bijective() {
        let lab = ThetaLabeling::new(2, 3, 4).unwrap();
        let mut seen = vec![0; lab.vertex_count()];
        for p in 0..3 {
            for i in 1..lab.lengths[p] {
                let id = lab.vertex(p, i).unwrap();
                seen[id] += 1;
                assert_eq!(lab.locate(id), Some((p, i)));
            }
        }
        assert_eq!(&seen[2..], &[1; 6]);
        assert_eq!(lab.x(0), Some(0));
        assert_eq!(lab.z(4), Some(1));
        assert_eq!(lab.x(1), Some(2));
        assert_eq!(lab.y(1), Some(3));
        assert_eq!(lab.z(1), Some(5));
        assert_eq!(lab.z(5), None);
    }

    #[test]
    fn acb_122_is_p4() {
        let g = gen(FamilySpec::AlmostCompleteBipartite { t: 1, m: 2, n: 2 });
        let degrees: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
    }

    #[test]
    fn disconnected_members_are_flagged() {
        assert!(!gen(FamilySpec::AlmostCompleteBipartite { t: 1, m: 1, n: 4 }).is_connected());
        assert!(!gen(FamilySpec::AlmostCompleteBipartite { t: 2, m: 2, n: 2 }).is_connected());
        assert!(gen(FamilySpec::AlmostCompleteBipartite { t: 2, m: 2, n: 3 }).is_connected());
    }

    #[test]
    fn crown_and_cube_counts() {
        let c = gen(FamilySpec::Crown(5));
        assert_eq!((c.n(), c.edge_count()), (10, 20));
        let h = gen(FamilySpec::Hypercube(3));
        assert_eq!((h.n(), h.edge_count()), (8, 12));
        assert!(h.has_edge(0b010, 0b110));
        assert!(!h.has_edge(0b011, 0b110));
    }

    #[test]
    fn subdivided_wheel_layout() {
        let spec = FamilySpec::SubdividedWheel { k: 3, rim: vec![1, 1, 1], spokes: vec![1, 1, 1] };
        let g = gen(spec);
        assert_eq!((g.n(), g.edge_count()), (10, 12));
        // rim subdivisions 4, 5, 6 then spoke subdivisions 7, 8, 9
        assert_eq!(g.neighbors(4), &[1, 2]);
        assert_eq!(g.neighbors(6), &[1, 3]);
        assert_eq!(g.neighbors(7), &[0, 1]);
        assert_eq!(g.neighbors(0), &[7, 8, 9]);
        let plain = gen(FamilySpec::SubdividedWheel { k: 4, rim: vec![0; 4], spokes: vec![0; 4] });
        assert_eq!((plain.n(), plain.edge_count()), (5, 8));
    }

    #[test]
    fn star_product_counts() {
        let p2 = gen(FamilySpec::Path(2));
        let p3 = star_product(&p2, 1, &p2, 0).unwrap();
        assert_eq!(p3, gen(FamilySpec::Path(3)).clone_without_family());
        let c4 = gen(FamilySpec::Cycle(4));
        let g = star_product(&c4, 2, &p2, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 5));
        assert!(g.has_edge(2, 4));
        assert!(star_product(&c4, 4, &p2, 0).is_err());
    }

    #[test]
    fn family_grammar_round_trips() {
        for s in [
            "theta:2,3,4",
            "acb:1,3,3",
            "kmn:2,3",
            "crown:5",
            "hypercube:3",
            "path:6",
            "cycle:6",
            "wheel:3,1,1,1,1,1,1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(format!("{spec}"), s);
        }
        assert!("theta:1,1,3".parse::<FamilySpec>().is_err());
        assert!("theta:2,3".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn subgraph_mapping() {
        let c6 = gen(FamilySpec::Cycle(6));
        let h = c6.subgraph(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(c6.subgraph(&[0, 2], &[(0, 2)]).is_err());
        let ind = c6.induced_subgraph(&[5, 0, 1]).unwrap();
        assert_eq!(ind.edges(), &[(0, 1), (1, 2)]);
    }

    impl Graph {
        fn clone_without_family(&self) -> Graph {
            Graph { family: None, ..self.clone() }
        }
    }
}
