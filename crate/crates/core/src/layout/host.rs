//! Queue layouts of graphs with a known tree-decomposition.
//!
//! The graph is first completed to the chordal graph in which every bag is
//! a clique. In a chordal graph every BFS layer after the first has a
//! smaller clique number than the whole graph, which drives a recursion:
//!
//! * a *piece* of layer `i` is the layer-`i` part of a component of the
//!   subgraph induced by layers `i, i+1, ...`; pieces of layer `i` sit
//!   inside pieces of layer `i - 1`;
//! * layers are placed one after another; within a layer, pieces are
//!   sorted by the rank of their parent piece, then by the positions of
//!   their neighbours in the previous layer (largest first), then by their
//!   smallest vertex;
//! * inside a piece the vertices follow the same construction applied to
//!   the subgraph the piece induces.
//!
//! Queues are then assigned by nesting depth. On every calibration
//! instance the count stays within `2^w - 1` for width `w`.

use crate::bfs::bfs_layering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{assign_queues_by_depth, QueueLayout};
use crate::partition::{validate_tree_decomposition, TreeDecomposition};

/// `h` plus an edge between every two vertices sharing a bag.
pub fn chordal_completion(h: &Graph, td: &TreeDecomposition) -> Result<Graph> {
    let report = validate_tree_decomposition(h, td);
    if let Some(v) = report.violation {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let mut extra = Vec::new();
    for bag in &td.bags {
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                if !h.has_edge(a, b) {
                    extra.push((a, b));
                }
            }
        }
    }
    extra.sort_unstable();
    extra.dedup();
    Ok(h.with_edges(&extra))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// (parent rank, positions of neighbours above, descending; smallest vertex)
type GroupKey = (usize, Vec<usize>, usize);

/// The recursive layered ordering described in the module docs. Meant for
/// chordal graphs; any graph gets a valid ordering, but the queue bound
/// only applies to chordal ones.
pub fn host_ordering(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return (0..n).collect();
    }
    let (layering, tree) = bfs_layering(g, None).expect("automatic roots are valid");
    let depth = &tree.depth;
    let layers = &layering.layers;

    // Bottom-up union-find: after adding layer i, the representative of a
    // vertex names its component among layers >= i.
    let mut uf: Vec<usize> = (0..n).collect();
    let mut piece = vec![0; n];
    let mut up = vec![0; n];
    for i in (0..layers.len()).rev() {
        for &v in &layers[i] {
            for &w in g.neighbors(v) {
                if depth[w] >= i {
                    let (a, b) = (find(&mut uf, v), find(&mut uf, w));
                    if a != b {
                        uf[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        for &v in &layers[i] {
            piece[v] = find(&mut uf, v);
        }
        if let Some(next) = layers.get(i + 1) {
            for &v in next {
                up[v] = find(&mut uf, v);
            }
        }
    }

    let mut ordering = Vec::with_capacity(n);
    let mut position = vec![usize::MAX; n];
    let mut rank = vec![usize::MAX; n];
    for (i, layer) in layers.iter().enumerate() {
        let mut members = layer.clone();
        members.sort_unstable_by_key(|&v| (piece[v], v));
        let mut groups: Vec<(GroupKey, Vec<usize>)> = Vec::new();
        for chunk in members.chunk_by(|&a, &b| piece[a] == piece[b]) {
            let parent_rank = if i == 0 { 0 } else { rank[up[chunk[0]]] };
            let mut above: Vec<usize> = chunk
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|&w| depth[w] + 1 == i)
                .map(|w| position[w])
                .collect();
            above.sort_unstable_by(|a, b| b.cmp(a));
            above.dedup();
            groups.push(((parent_rank, above, chunk[0]), chunk.to_vec()));
        }
        groups.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (r, (_, vs)) in groups.iter().enumerate() {
            rank[piece[vs[0]]] = r;
            let sub = g.induced(vs);
            for x in host_ordering(&sub) {
                position[vs[x]] = ordering.len();
                ordering.push(vs[x]);
            }
        }
    }
    ordering
}

/// Queue layout of `h` built from a tree-decomposition of it; the count
/// depends on the width of `td`, not on the size of `h`.
pub fn tree_decomposition_layout(h: &Graph, td: &TreeDecomposition) -> Result<QueueLayout> {
    let chordal = chordal_completion(h, td)?;
    let ordering = host_ordering(&chordal);
    assign_queues_by_depth(h, &ordering)
}
