//! BFS layerings, BFS spanning forests and vertical paths.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered partition of the vertices into layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layering {
    /// Layer contents, each sorted ascending.
    pub layers: Vec<Vec<usize>>,
    #[serde(skip)]
    layer_of: Vec<usize>,
}

impl Layering {
    /// Builds a layering from a vertex-to-layer map.
    pub fn from_layer_of(layer_of: Vec<usize>) -> Self {
        let depth = layer_of.iter().max().map_or(0, |&d| d + 1);
        let mut layers = vec![Vec::new(); depth];
        for (v, &l) in layer_of.iter().enumerate() {
            layers[l].push(v);
        }
        Layering { layers, layer_of }
    }

    /// Builds a layering from explicit layers; each vertex must appear once.
    pub fn from_layers(vertex_count: usize, layers: Vec<Vec<usize>>) -> Result<Self> {
        let mut layer_of = vec![usize::MAX; vertex_count];
        for (i, layer) in layers.iter().enumerate() {
            for &v in layer {
                if v >= vertex_count || layer_of[v] != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} repeated or out of range in layering"
                    )));
                }
                layer_of[v] = i;
            }
        }
        if let Some(v) = layer_of.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidGraph(format!("vertex {v} missing from layering")));
        }
        Ok(Self::from_layer_of(layer_of))
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    pub fn layer_map(&self) -> &[usize] {
        &self.layer_of
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.layer_of.len()
    }

    /// Every edge joins equal or consecutive layers.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.layer_of.len() == g.vertex_count()
            && g
                .edges()
                .iter()
                .all(|&(u, v)| self.layer_of[u].abs_diff(self.layer_of[v]) <= 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Layering = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let n = raw.layers.iter().map(Vec::len).sum();
        Self::from_layers(n, raw.layers)
    }
}

/// A BFS spanning forest, one tree per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub roots: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl BfsTree {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// `v`, its parent, its grandparent and so on up to the root.
    pub fn path_to_root(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(v), move |&x| self.parent[x])
    }

    /// The layering whose layer `i` holds the vertices of depth `i`.
    pub fn layering(&self) -> Layering {
        Layering::from_layer_of(self.depth.clone())
    }

    /// Checks the forest against `g`: parents are adjacent with depth one
    /// less, roots have depth 0 and no parent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.parent.len() != g.vertex_count() || self.depth.len() != g.vertex_count() {
            return false;
        }
        for v in 0..g.vertex_count() {
            match self.parent[v] {
                Some(p) => {
                    if !g.has_edge(p, v) || self.depth[p] + 1 != self.depth[v] {
                        return false;
                    }
                }
                None => {
                    if self.depth[v] != 0 || !self.roots.contains(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// BFS layering from `roots` (one per component) or, when `roots` is
/// `None`, from the smallest vertex of every component. Neighbours are
/// explored in ascending id order.
pub fn bfs_layering(g: &Graph, roots: Option<&[usize]>) -> Result<(Layering, BfsTree)> {
    let n = g.vertex_count();
    let (count, comp) = g.components();
    let roots: Vec<usize> = match roots {
        Some(rs) => {
            let mut seen = vec![false; count];
            for &r in rs {
                if r >= n {
                    return Err(Error::BadRoots(format!("vertex {r} out of range")));
                }
                if std::mem::replace(&mut seen[comp[r]], true) {
                    return Err(Error::BadRoots(format!(
                        "two roots in the component of {r}"
                    )));
                }
            }
            if let Some(c) = seen.iter().position(|&s| !s) {
                let v = comp.iter().position(|&x| x == c).expect("component is non-empty");
                return Err(Error::BadRoots(format!("no root in the component of {v}")));
            }
            rs.to_vec()
        }
        None => {
            let mut rs = vec![usize::MAX; count];
            for v in (0..n).rev() {
                rs[comp[v]] = v;
            }
            rs
        }
    };

    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &r in &roots {
        depth[r] = 0;
        queue.push_back(r);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }
    let tree = BfsTree {
        roots,
        parent,
        depth,
    };
    Ok((tree.layering(), tree))
}

/// `path` is listed top-down along tree edges with consecutive depths.
pub fn is_vertical_path(tree: &BfsTree, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= tree.vertex_count()) {
        return false;
    }
    path.windows(2).all(|w| {
        tree.parent[w[1]] == Some(w[0]) && tree.depth[w[1]] == tree.depth[w[0]] + 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn path_and_clique() {
        let (l, t) = bfs_layering(&families::path(3), Some(&[0])).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1], vec![2]]);
        assert!(t.is_valid_for(&families::path(3)));
        let (l, _) = bfs_layering(&families::complete(4), Some(&[2])).unwrap();
        assert_eq!(l.layers, vec![vec![2], vec![0, 1, 3]]);
    }

    #[test]
    fn grid_corner() {
        let g = families::grid(3, 3);
        let (l, _) = bfs_layering(&g, Some(&[0])).unwrap();
        let sizes: Vec<usize> = l.layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 2, 1]);
        assert!(l.is_valid_for(&g));
    }

    #[test]
    fn roots_must_cover_components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(bfs_layering(&g, Some(&[0])), Err(Error::BadRoots(_))));
        assert!(matches!(bfs_layering(&g, Some(&[0, 1, 2])), Err(Error::BadRoots(_))));
        let (l, t) = bfs_layering(&g, Some(&[1, 3])).unwrap();
        assert_eq!(l.layers, vec![vec![1, 3], vec![0, 2]]);
        assert_eq!(t.roots, vec![1, 3]);
        let (_, t) = bfs_layering(&g, None).unwrap();
        assert_eq!(t.roots, vec![0, 2]);
    }

    #[test]
    fn vertical_paths() {
        let (_, t) = bfs_layering(&families::path(5), Some(&[0])).unwrap();
        assert!(is_vertical_path(&t, &[1, 2, 3]));
        assert!(!is_vertical_path(&t, &[3, 2]));
        assert!(!is_vertical_path(&t, &[1, 3]));
        assert!(!is_vertical_path(&t, &[]));
    }

    #[test]
    fn layering_json() {
        let (l, _) = bfs_layering(&families::grid(3, 4), None).unwrap();
        assert_eq!(Layering::from_json(&l.to_json()).unwrap(), l);
    }
}
