//! Exact shortest-path distances and bipartiteness.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

/// Symmetric matrix of shortest-path lengths of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHED: u32 = u32::MAX;

fn bfs_into(g: &Graph, source: usize, row: &mut [u32], queue: &mut VecDeque<usize>) {
    row.fill(UNREACHED);
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = row[u];
        for &w in g.neighbors(u) {
            if row[w] == UNREACHED {
                row[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

impl DistanceMatrix {
    /// All-pairs BFS. Fails on a disconnected graph, naming the first
    /// unreachable pair in row-major order.
    pub fn from_graph(g: &Graph) -> Result<Self, GraphError> {
        let n = g.n();
        let mut d = vec![0u32; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            bfs_into(g, s, row, &mut queue);
            if let Some(t) = row.iter().position(|&x| x == UNREACHED) {
                return Err(GraphError::Disconnected { a: s, b: t });
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Wraps raw rows; checks shape only. Use [`DistanceMatrix::is_graph_metric`]
    /// to check the metric axioms.
    pub fn from_rows(rows: &[Vec<u32>]) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(DistanceMatrix { n, d: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.d.iter().map(|&x| x as f64).collect()
    }

    /// Symmetric, zero exactly on the diagonal, triangle inequality, and
    /// `d = 1` exactly on the edges of `g`.
    pub fn is_graph_metric(&self, g: &Graph) -> bool {
        let n = self.n;
        if g.n() != n {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let dij = self.get(i, j);
                if dij != self.get(j, i) || (dij == 0) != (i == j) || (dij == 1) != g.has_edge(i, j) {
                    return false;
                }
                for k in 0..n {
                    if dij > self.get(i, k) + self.get(k, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertices lying on at least one geodesic between `a` and `b`.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        let dab = self.get(a, b);
        (0..self.n).filter(|&w| self.get(a, w) + self.get(w, b) == dab).collect()
    }
}

/// Two-coloring (`0`/`1` per vertex, vertex 0 colored `0`) of a connected
/// graph, or `None` when it contains an odd cycle.
pub fn is_bipartite(g: &Graph) -> Result<Option<Vec<u8>>, GraphError> {
    g.require_connected()?;
    let mut color = vec![u8::MAX; g.n()];
    color[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                queue.push_back(w);
            } else if color[w] == color[u] {
                return Ok(None);
            }
        }
    }
    Ok(Some(color))
}
