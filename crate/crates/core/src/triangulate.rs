//! Augmenting a plane graph to a plane triangulation without creating
//! parallel edges.
//!
//! Three passes over a mutable rotation system: join the components at a
//! fixed corner, add a chord across every corner whose two edges lie in
//! different blocks, then cut ears off every face longer than three.

use std::collections::{HashMap, HashSet};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A triangulation together with the edges that were added to reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub embedding: Embedding,
    /// Added edges as `(u, v)` with `u < v`, sorted.
    pub added_edges: Vec<(usize, usize)>,
}

struct Rotations {
    first: Vec<Option<usize>>,
    succ: HashMap<(usize, usize), usize>,
    pred: HashMap<(usize, usize), usize>,
    edges: HashSet<(usize, usize)>,
    added: Vec<(usize, usize)>,
}

impl Rotations {
    fn from_embedding(emb: &Embedding) -> Self {
        let n = emb.vertex_count();
        let mut r = Rotations {
            first: vec![None; n],
            succ: HashMap::new(),
            pred: HashMap::new(),
            edges: emb.graph().edges().iter().copied().collect(),
            added: Vec::new(),
        };
        for v in 0..n {
            let rot = emb.rotation(v);
            if rot.is_empty() {
                continue;
            }
            r.first[v] = Some(rot[0]);
            for i in 0..rot.len() {
                let a = rot[i];
                let b = rot[(i + 1) % rot.len()];
                r.succ.insert((v, a), b);
                r.pred.insert((v, b), a);
            }
        }
        r
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = self.first[v] {
            let mut x = f;
            loop {
                out.push(x);
                x = self.succ[&(v, x)];
                if x == f {
                    break;
                }
            }
        }
        out
    }

    /// Places `w` right after `after` in the rotation at `v`; `after = None`
    /// is only allowed while `v` has no neighbours.
    fn insert_after(&mut self, v: usize, w: usize, after: Option<usize>) {
        match after {
            None => {
                debug_assert!(self.first[v].is_none());
                self.first[v] = Some(w);
                self.succ.insert((v, w), w);
                self.pred.insert((v, w), w);
            }
            Some(a) => {
                let b = self.succ[&(v, a)];
                self.succ.insert((v, a), w);
                self.succ.insert((v, w), b);
                self.pred.insert((v, w), a);
                self.pred.insert((v, b), w);
            }
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.insert((u.min(v), u.max(v)));
        self.added.push((u.min(v), u.max(v)));
    }

    /// Chord `a - b` across the corner `a, mid, b` of a face (so that the
    /// face walk contains `a -> mid -> b`).
    fn add_chord(&mut self, a: usize, mid: usize, b: usize) {
        let before_mid = self.pred[&(a, mid)];
        self.insert_after(a, b, Some(before_mid));
        self.insert_after(b, a, Some(mid));
        self.add_edge(a, b);
    }

    fn to_rotation(&self, n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|v| self.neighbours(v)).collect()
    }
}

/// Block (biconnected component) id of every edge, indexed like
/// [`Graph::edges`]. Iterative Tarjan with an edge stack.
pub fn edge_blocks(g: &Graph) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut block = vec![NONE; g.edge_count()];
    let mut next_block = 0;
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    for s in 0..n {
        if disc[s] != NONE || g.degree(s) == 0 {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        // (vertex, edge to parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, NONE, 0)];
        while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
            if *pos < g.degree(v) {
                let w = g.neighbors(v)[*pos];
                *pos += 1;
                let eid = g.edge_index(v, w).expect("neighbour edge exists");
                if eid == pe {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push(eid);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, eid, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(eid);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        while let Some(e) = edge_stack.pop() {
                            block[e] = next_block;
                            if e == pe {
                                break;
                            }
                        }
                        next_block += 1;
                    }
                }
            }
        }
    }
    block
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Extends `emb` to a simple plane triangulation with `required_outer` on
/// the outer face.
pub fn triangulate(emb: &Embedding, required_outer: usize) -> Result<Triangulation> {
    let n = emb.vertex_count();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if required_outer >= n {
        return Err(Error::BadRoots(format!("vertex {required_outer} out of range")));
    }
    let g = emb.graph();
    let mut rot = Rotations::from_embedding(emb);

    // Connect every component to the smallest vertex at one fixed corner.
    let (count, comp) = g.components();
    let mut reps = vec![usize::MAX; count];
    for v in (0..n).rev() {
        reps[comp[v]] = v;
    }
    let hub = reps[0];
    let corner = rot.first[hub];
    for &r in &reps[1..] {
        let r_corner = rot.first[r];
        match corner {
            Some(c) => rot.insert_after(hub, r, Some(c)),
            None => {
                let prev = rot.first[hub];
                rot.insert_after(hub, r, prev);
            }
        }
        rot.insert_after(r, hub, r_corner);
        rot.add_edge(hub, r);
    }

    // Remove cut vertices.
    let connected = Graph::from_edges_lossy(n, &rot.edges.iter().copied().collect::<Vec<_>>());
    let blocks = edge_blocks(&connected);
    let mut label: HashMap<(usize, usize), usize> = connected
        .edges()
        .iter()
        .zip(&blocks)
        .map(|(&e, &b)| (e, b))
        .collect();
    let mut uf: Vec<usize> = (0..blocks.iter().max().map_or(0, |b| b + 1)).collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for v in 0..n {
        let around = rot.neighbours(v);
        if around.len() < 2 {
            continue;
        }
        for i in 0..around.len() {
            let a = around[i];
            let b = around[(i + 1) % around.len()];
            let la = find(&mut uf, label[&key(v, a)]);
            let lb = find(&mut uf, label[&key(v, b)]);
            if la == lb {
                continue;
            }
            uf[la] = lb;
            if !rot.adjacent(a, b) {
                rot.add_chord(a, v, b);
                label.insert(key(a, b), lb);
            }
        }
    }

    // Cut ears off every face longer than a triangle.
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    for v in 0..n {
        for w in rot.neighbours(v) {
            if visited.contains(&(v, w)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (v, w);
            while visited.insert((a, b)) {
                walk.push(a);
                let c = rot.succ[&(b, a)];
                a = b;
                b = c;
            }
            if walk.len() > 3 {
                cut_ears(&mut rot, walk, &mut visited)?;
            }
        }
    }

    let graph = g.with_edges(&rot.added);
    let rotation = rot.to_rotation(n);
    let tri = Embedding::from_rotation(graph, rotation)
        .map_err(|e| Error::Internal(format!("triangulation broke the embedding: {e}")))?;
    if !tri.is_triangulation() {
        return Err(Error::Internal("augmentation left a non-triangular face".into()));
    }
    let tri = tri.with_outer_vertex(required_outer)?;
    let mut added = rot.added;
    added.sort_unstable();
    Ok(Triangulation {
        embedding: tri,
        added_edges: added,
    })
}

fn cut_ears(
    rot: &mut Rotations,
    mut walk: Vec<usize>,
    visited: &mut HashSet<(usize, usize)>,
) -> Result<()> {
    let mut i = 0;
    let mut misses = 0;
    while walk.len() > 3 {
        let k = walk.len();
        let (a, mid, b) = (walk[i % k], walk[(i + 1) % k], walk[(i + 2) % k]);
        if a != b && !rot.adjacent(a, b) {
            rot.add_chord(a, mid, b);
            // The new darts bound an ear triangle and the shrunken face; both
            // are handled here, so mark them as traced.
            visited.insert((a, b));
            visited.insert((b, a));
            walk.remove((i + 1) % k);
            if (i + 1) % k < i % k {
                i -= 1;
            }
            misses = 0;
        } else {
            i = (i + 1) % k;
            misses += 1;
            if misses > k {
                return Err(Error::Internal(format!(
                    "face of length {k} has no ear"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::planarity::planar_embed;

    fn tri(g: &Graph, r: usize) -> Triangulation {
        let t = triangulate(&planar_embed(g).unwrap(), r).unwrap();
        assert!(t.embedding.is_triangulation());
        assert!(g.is_subgraph_of(t.embedding.graph()));
        assert!(t.embedding.outer_vertices().contains(&r));
        assert_eq!(
            t.embedding.graph().edge_count(),
            g.edge_count() + t.added_edges.len()
        );
        t
    }

    #[test]
    fn small_inputs() {
        let t = tri(&families::complete(3), 0);
        assert!(t.added_edges.is_empty());
        let t = tri(&families::cycle(4), 2);
        assert_eq!(t.embedding.graph(), &families::complete(4));
        assert_eq!(t.embedding.face_count(), 4);
        let t = tri(&families::path(3), 1);
        assert_eq!(t.embedding.graph(), &families::complete(3));
        assert!(matches!(
            triangulate(&planar_embed(&families::path(2)).unwrap(), 0),
            Err(Error::TooSmall(2))
        ));
    }

    #[test]
    fn sparse_and_disconnected() {
        tri(&Graph::empty(3), 2);
        tri(&Graph::empty(7), 5);
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        tri(&star, 3);
        let forest = Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (4, 6)]).unwrap();
        tri(&forest, 8);
        tri(&families::grid(6, 7), 20);
        tri(&families::cycle(40), 0);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        tri(&bowtie, 4);
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let b = edge_blocks(&bowtie);
        assert_eq!(b.iter().collect::<HashSet<_>>().len(), 2);
        assert_eq!(b[0], b[1]);
    }
}
