//! Simple undirected graphs and the plain edge-list text format.
//!
//! The text format is one header line `n m` followed by `m` lines `u v`
//! with 0-based vertex ids. Everything after a `#` on a line is ignored,
//! as are blank lines.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are kept sorted, and the edge list holds each edge once
/// as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // Compressed adjacency: the neighbours of `v` are `heads[offsets[v]..offsets[v + 1]]`.
    // Position `d` in `heads` names the dart `tails[d] -> heads[d]`.
    offsets: Vec<usize>,
    heads: Vec<usize>,
    tails: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty(0)
    }
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted_unique(vertex_count, Vec::new())
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(vertex_count, norm))
    }

    /// Same as [`Graph::from_edges`] but silently drops loops and duplicates.
    pub fn from_edges_lossy(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut norm: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(u, v)| u != v && u < vertex_count && v < vertex_count)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        norm.sort_unstable();
        norm.dedup();
        Self::from_sorted_unique(vertex_count, norm)
    }

    fn from_sorted_unique(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut heads = Vec::with_capacity(2 * edges.len());
        let mut tails = Vec::with_capacity(2 * edges.len());
        offsets.push(0);
        for (v, mut list) in adj.into_iter().enumerate() {
            list.sort_unstable();
            tails.extend(std::iter::repeat_n(v, list.len()));
            heads.extend(list);
            offsets.push(heads.len());
        }
        Graph {
            offsets,
            heads,
            tails,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.heads[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart(u, v).is_some()
    }

    /// Number of darts (directed edge copies), always `2 * edge_count`.
    pub fn dart_count(&self) -> usize {
        self.heads.len()
    }

    /// Id of the dart `u -> v`, if `uv` is an edge.
    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count() {
            return None;
        }
        self.neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.offsets[u] + i)
    }

    /// Darts leaving `v`, in the same order as [`Graph::neighbors`].
    pub fn darts_of(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn dart_head(&self, d: usize) -> usize {
        self.heads[d]
    }

    pub fn dart_tail(&self, d: usize) -> usize {
        self.tails[d]
    }

    /// The reverse dart of `d`.
    pub fn twin(&self, d: usize) -> usize {
        self.dart(self.heads[d], self.tails[d])
            .expect("adjacency is symmetric")
    }

    /// Index of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Component id per vertex, numbered in order of smallest vertex id.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().0 == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges_lossy(vertices.len(), &edges)
    }

    /// Union of the edge sets of `self` and `extra` on the same vertex set.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Graph {
        let mut all = self.edges.clone();
        all.extend_from_slice(extra);
        Graph::from_edges_lossy(self.vertex_count(), &all)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() <= other.vertex_count()
            && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Parses the plain edge-list format.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("not a non-negative integer: {t:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers, found {}", nums.len()),
                });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some(_) => edges.push((nums[0], nums[1])),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// Serializes into the plain edge-list format.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + self.edges.len() * 12);
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Hop distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Small constructors used throughout tests and generators.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges_lossy(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges_lossy(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges_lossy(n, &edges)
    }

    /// `rows x cols` grid; vertex `(x, y)` has id `y * cols + x`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for y in 0..rows {
            for x in 0..cols {
                let v = y * cols + x;
                if x + 1 < cols {
                    edges.push((v, v + 1));
                }
                if y + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges_lossy(rows * cols, &edges)
    }

    /// Every edge replaced by a path of length two through a new vertex.
    pub fn subdivide(g: &Graph) -> Graph {
        let n = g.vertex_count();
        let mut edges = Vec::with_capacity(2 * g.edge_count());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            edges.push((u, n + i));
            edges.push((n + i, v));
        }
        Graph::from_edges_lossy(n + g.edge_count(), &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn parse_with_comments() {
        let g = Graph::parse("# triangle\n3 3\n0 1 # first\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Graph::parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let (count, comp) = g.components();
        assert_eq!(count, 3);
        assert_eq!(comp, vec![0, 0, 1, 2, 2]);
        let h = g.induced(&[4, 3, 0]);
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn grid_counts() {
        let g = families::grid(3, 3);
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        let s = families::subdivide(&families::complete(4));
        assert_eq!(s.vertex_count(), 10);
        assert_eq!(s.edge_count(), 12);
    }
}
