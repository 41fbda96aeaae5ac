//! Finite simple-graph kernel: bitset adjacency, shortest-path metric, graph
//! powers, canonical labeling and isomorphism.
//!
//! Graphs are undirected, loopless, without multi-edges. Vertices are
//! 1-indexed at every public interface (internal storage is 0-indexed bitset
//! rows). The kernel is capped at [`MAX_VERTICES`] vertices; canonical
//! labeling is capped at [`CANONICAL_MAX`] — this is a desk-scale tool, not a
//! nauty replacement.

use std::fmt;

use thiserror::Error;

mod canon;
mod io;

pub use canon::CanonicalLabel;
pub use io::{parse_edge_list, to_dot, write_edge_list, EdgeListError};

pub(crate) use canon::{code_to_rows, identity_code, min_code};
pub(crate) use io::data_lines as io_data_lines;

/// Hard cap on vertex count (adjacency rows are single machine words).
pub const MAX_VERTICES: usize = 64;

/// Cap for canonical labeling, isomorphism-class enumeration and related
/// backtracking searches.
pub const CANONICAL_MAX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be in 1..={MAX_VERTICES}, got {0}")]
    BadVertexCount(usize),
    #[error("vertex {vertex} out of range 1..={p}")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{op} supports at most {max} vertices, got {p}")]
    CapacityExceeded {
        op: &'static str,
        p: usize,
        max: usize,
    },
}

/// Length of a shortest path, or the marker for "no path".
///
/// `Infinite` compares greater than every finite distance, so `max` over
/// pairs gives the diameter directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An undirected simple graph on vertices `1..=p`, `p <= 64`.
///
/// Immutable in practice: every operation returns a new graph. Row `i` of the
/// adjacency bitset has bit `j` set iff `{i+1, j+1}` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    p: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    /// The empty graph on `p` vertices.
    pub fn new(p: usize) -> Result<Self, GraphError> {
        if p == 0 || p > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(p));
        }
        Ok(SimpleGraph {
            p,
            rows: vec![0; p],
        })
    }

    /// Builds a graph from 1-indexed endpoint pairs (either order accepted).
    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut graph = SimpleGraph::new(p)?;
        for &(u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    pub fn complete(p: usize) -> Result<Self, GraphError> {
        let mut graph = SimpleGraph::new(p)?;
        let mask = full_mask(p);
        for v in 0..p {
            graph.rows[v] = mask & !(1 << v);
        }
        Ok(graph)
    }

    /// The path `1 - 2 - ... - p`.
    pub fn path(p: usize) -> Result<Self, GraphError> {
        let mut graph = SimpleGraph::new(p)?;
        for v in 1..p {
            graph.add_edge(v, v + 1)?;
        }
        Ok(graph)
    }

    /// The cycle `1 - 2 - ... - p - 1` (requires `p >= 3`).
    pub fn cycle(p: usize) -> Result<Self, GraphError> {
        if p < 3 {
            return Err(GraphError::BadVertexCount(p));
        }
        let mut graph = SimpleGraph::path(p)?;
        graph.add_edge(p, 1)?;
        Ok(graph)
    }

    /// The star `K_{1,p-1}` with center 1.
    pub fn star(p: usize) -> Result<Self, GraphError> {
        let mut graph = SimpleGraph::new(p)?;
        for v in 2..=p {
            graph.add_edge(1, v)?;
        }
        Ok(graph)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let (iu, iv) = (self.check_vertex(u)?, self.check_vertex(v)?);
        if iu == iv {
            return Err(GraphError::LoopEdge(u));
        }
        if self.rows[iu] >> iv & 1 == 1 {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.rows[iu] |= 1 << iv;
        self.rows[iv] |= 1 << iu;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<usize, GraphError> {
        if v == 0 || v > self.p {
            return Err(GraphError::VertexOutOfRange { vertex: v, p: self.p });
        }
        Ok(v - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 1-indexed pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.p {
            // neighbors above u only, so each edge is listed once
            let mut bits = self.rows[u] & !full_mask(u + 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    /// Whether `{u, v}` is an edge. Panics on out-of-range vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.p && v >= 1 && v <= self.p, "vertex out of range");
        u != v && self.rows[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.p, "vertex out of range");
        self.rows[v - 1].count_ones() as usize
    }

    /// The complement: same vertices, `{u,v}` an edge iff it is not one here.
    pub fn complement(&self) -> SimpleGraph {
        let mask = full_mask(self.p);
        let rows = (0..self.p)
            .map(|v| !self.rows[v] & mask & !(1 << v))
            .collect();
        SimpleGraph { p: self.p, rows }
    }

    /// BFS distances from the 0-indexed `start` to every vertex.
    fn bfs(&self, start: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.p];
        dist[start] = Distance::Finite(0);
        let mut visited: u64 = 1 << start;
        let mut frontier: u64 = 1 << start;
        let mut level: u32 = 0;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= !visited;
            level += 1;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                dist[v] = Distance::Finite(level);
            }
            visited |= next;
            frontier = next;
        }
        dist
    }

    /// Shortest-path distance between 1-indexed vertices.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        let (iu, iv) = (self.check_vertex(u)?, self.check_vertex(v)?);
        Ok(self.bfs(iu)[iv])
    }

    /// All-pairs maximum of the metric; `Infinite` iff disconnected.
    pub fn diameter(&self) -> Distance {
        let mut max = Distance::Finite(0);
        for u in 0..self.p {
            for d in self.bfs(u) {
                max = max.max(d);
            }
        }
        max
    }

    /// The n-th power: `{u,v}` an edge iff `1 <= d(u,v) <= n`.
    pub fn power(&self, n: usize) -> SimpleGraph {
        assert!(n >= 1, "graph power requires n >= 1");
        let mut rows = vec![0u64; self.p];
        for (u, row) in rows.iter_mut().enumerate() {
            for (v, d) in self.bfs(u).into_iter().enumerate() {
                if u != v {
                    if let Distance::Finite(d) = d {
                        if d as usize <= n {
                            *row |= 1 << v;
                        }
                    }
                }
            }
        }
        SimpleGraph { p: self.p, rows }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|d| d.is_finite())
    }

    /// 1-indexed vertices of degree 0, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.p).filter(|&v| self.rows[v] == 0).map(|v| v + 1).collect()
    }

    /// 1-indexed vertices adjacent to every other vertex, ascending.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.p)
            .filter(|&v| self.rows[v] == full_mask(self.p) & !(1 << v))
            .map(|v| v + 1)
            .collect()
    }

    /// Canonical label: equal labels iff isomorphic (for equal `p`).
    pub fn canonical_label(&self) -> Result<CanonicalLabel, GraphError> {
        self.check_canonical_capacity("canonical_label")?;
        Ok(CanonicalLabel::pack(self.p, canon::min_code(&self.rows)))
    }

    /// The canonically labeled representative of this graph's isomorphism
    /// class (the relabeling realizing [`Self::canonical_label`]).
    pub fn canonical_form(&self) -> Result<SimpleGraph, GraphError> {
        self.check_canonical_capacity("canonical_form")?;
        let code = canon::min_code(&self.rows);
        Ok(SimpleGraph {
            p: self.p,
            rows: canon::code_to_rows(self.p, code),
        })
    }

    fn check_canonical_capacity(&self, op: &'static str) -> Result<(), GraphError> {
        if self.p > CANONICAL_MAX {
            return Err(GraphError::CapacityExceeded {
                op,
                p: self.p,
                max: CANONICAL_MAX,
            });
        }
        Ok(())
    }

    /// Isomorphism test by degree-pruned backtracking over vertex bijections.
    ///
    /// Independent of [`Self::canonical_label`] (different algorithm, no
    /// capacity cap); intended for small graphs.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        if self.p != other.p || self.edge_count() != other.edge_count() {
            return false;
        }
        let deg_a: Vec<usize> = (1..=self.p).map(|v| self.degree(v)).collect();
        let deg_b: Vec<usize> = (1..=other.p).map(|v| other.degree(v)).collect();
        let mut sorted_a = deg_a.clone();
        let mut sorted_b = deg_b.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return false;
        }
        // map vertices of self in descending-degree order to fail early
        let mut order: Vec<usize> = (0..self.p).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));
        let mut map = vec![usize::MAX; self.p];
        self.iso_dfs(other, &order, 0, &mut map, 0)
    }

    fn iso_dfs(
        &self,
        other: &SimpleGraph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        if depth == self.p {
            return true;
        }
        let u = order[depth];
        let du = self.rows[u].count_ones();
        for cand in 0..self.p {
            if used >> cand & 1 == 1 || other.rows[cand].count_ones() != du {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let adj_a = self.rows[u] >> w & 1;
                let adj_b = other.rows[cand] >> map[w] & 1;
                adj_a == adj_b
            });
            if !consistent {
                continue;
            }
            map[u] = cand;
            if self.iso_dfs(other, order, depth + 1, map, used | 1 << cand) {
                return true;
            }
        }
        false
    }

    /// Edges rendered as `{1,2} {1,3} ...`, or `-` when there are none.
    pub fn edge_list_string(&self) -> String {
        let edges = self.edges();
        if edges.is_empty() {
            return "-".to_string();
        }
        edges
            .iter()
            .map(|(u, v)| format!("{{{u},{v}}}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    #[cfg(test)]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> SimpleGraph {
        SimpleGraph { p: rows.len(), rows }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(p={}, edges={})", self.p, self.edge_list_string())
    }
}

pub(crate) fn full_mask(p: usize) -> u64 {
    if p == 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}
