//! Combinatorial embeddings given by rotation systems.
//!
//! `rotation[v]` lists the neighbours of `v` in cyclic order. Faces are traced
//! with the rule: after the dart `u -> v` comes `v -> w`, where `w` follows `u`
//! in the rotation at `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer_face: usize,
    // Position of `dart_head(d)` inside `rotation[dart_tail(d)]`.
    rot_pos: Vec<usize>,
    face_darts: Vec<Vec<usize>>,
    dart_face: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingWire {
    vertex_count: usize,
    rotation: Vec<Vec<usize>>,
    outer_face: usize,
}

impl Embedding {
    /// Validates the rotation system, traces its faces and checks Euler's
    /// formula on every component.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>, outer_face: usize) -> Result<Self> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "rotation has {} entries for {n} vertices",
                rotation.len()
            )));
        }
        let mut rot_pos = vec![usize::MAX; graph.dart_count()];
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() != graph.degree(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at {v} has {} entries, degree is {}",
                    rot.len(),
                    graph.degree(v)
                )));
            }
            for (i, &w) in rot.iter().enumerate() {
                let d = graph.dart(v, w).ok_or_else(|| {
                    Error::InvalidEmbedding(format!("rotation at {v} names non-neighbour {w}"))
                })?;
                if rot_pos[d] != usize::MAX {
                    return Err(Error::InvalidEmbedding(format!(
                        "rotation at {v} repeats {w}"
                    )));
                }
                rot_pos[d] = i;
            }
        }

        let mut emb = Embedding {
            graph,
            rotation,
            outer_face: 0,
            rot_pos,
            face_darts: Vec::new(),
            dart_face: Vec::new(),
        };
        emb.trace_faces();
        emb.check_euler()?;
        if outer_face >= emb.face_darts.len() && !(emb.face_darts.is_empty() && outer_face == 0) {
            return Err(Error::InvalidEmbedding(format!(
                "outer face {outer_face} out of range, {} faces",
                emb.face_darts.len()
            )));
        }
        emb.outer_face = outer_face;
        Ok(emb)
    }

    fn trace_faces(&mut self) {
        let dc = self.graph.dart_count();
        let mut dart_face = vec![usize::MAX; dc];
        let mut faces = Vec::new();
        for start in 0..dc {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            while dart_face[d] == usize::MAX {
                dart_face[d] = id;
                walk.push(d);
                d = self.next_dart(d);
            }
            faces.push(walk);
        }
        self.face_darts = faces;
        self.dart_face = dart_face;
    }

    fn check_euler(&self) -> Result<()> {
        let (count, comp) = self.graph.components();
        let mut nv = vec![0i64; count];
        let mut ne = vec![0i64; count];
        let mut nf = vec![0i64; count];
        for &c in &comp {
            nv[c] += 1;
        }
        for &(u, _) in self.graph.edges() {
            ne[comp[u]] += 1;
        }
        for walk in &self.face_darts {
            nf[comp[self.graph.dart_tail(walk[0])]] += 1;
        }
        for c in 0..count {
            if ne[c] > 0 && nv[c] - ne[c] + nf[c] != 2 {
                return Err(Error::InvalidEmbedding(format!(
                    "component {c}: {} - {} + {} != 2",
                    nv[c], ne[c], nf[c]
                )));
            }
        }
        Ok(())
    }

    /// Reads a rotation system and takes face 0 as the outer face.
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(graph, rotation, 0)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// The neighbour following `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let d = self.graph.dart(v, u).expect("u is a neighbour of v");
        let rot = &self.rotation[v];
        rot[(self.rot_pos[d] + 1) % rot.len()]
    }

    /// The neighbour preceding `u` in the rotation at `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let d = self.graph.dart(v, u).expect("u is a neighbour of v");
        let rot = &self.rotation[v];
        rot[(self.rot_pos[d] + rot.len() - 1) % rot.len()]
    }

    /// The dart following `d` on its face.
    pub fn next_dart(&self, d: usize) -> usize {
        let v = self.graph.dart_head(d);
        let back = self.graph.twin(d);
        let rot = &self.rotation[v];
        let w = rot[(self.rot_pos[back] + 1) % rot.len()];
        self.graph.dart(v, w).expect("rotation entries are neighbours")
    }

    pub fn face_count(&self) -> usize {
        self.face_darts.len()
    }

    /// Darts of face `f` in walking order.
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.face_darts[f]
    }

    /// Vertices of face `f` in walking order (a vertex may repeat on
    /// faces of graphs that are not 2-connected).
    pub fn face(&self, f: usize) -> Vec<usize> {
        self.face_darts[f]
            .iter()
            .map(|&d| self.graph.dart_tail(d))
            .collect()
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        (0..self.face_count()).map(|f| self.face(f)).collect()
    }

    /// Face to which the dart `d` belongs.
    pub fn dart_face(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    /// Face on which the dart `u -> v` is walked.
    pub fn face_of(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.dart(u, v).map(|d| self.dart_face[d])
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn outer_vertices(&self) -> Vec<usize> {
        if self.face_darts.is_empty() {
            return Vec::new();
        }
        self.face(self.outer_face)
    }

    /// The lowest-numbered face incident to `v`.
    pub fn first_face_at(&self, v: usize) -> Option<usize> {
        self.graph.darts_of(v).map(|d| self.dart_face[d]).min()
    }

    /// Same rotation system with a different face declared outer.
    pub fn with_outer_face(&self, f: usize) -> Result<Self> {
        if f >= self.face_count() {
            return Err(Error::InvalidEmbedding(format!("no face {f}")));
        }
        let mut e = self.clone();
        e.outer_face = f;
        Ok(e)
    }

    /// Re-faces the embedding so that `v` lies on the outer face; keeps the
    /// current outer face when it already contains `v`.
    pub fn with_outer_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.vertex_count() {
            return Err(Error::InvalidEmbedding(format!("no vertex {v}")));
        }
        if self.outer_vertices().contains(&v) {
            return Ok(self.clone());
        }
        match self.first_face_at(v) {
            Some(f) => self.with_outer_face(f),
            None => Err(Error::InvalidEmbedding(format!("vertex {v} has no incident face"))),
        }
    }

    /// Every face is a triangle and `m = 3n - 6`.
    pub fn is_triangulation(&self) -> bool {
        let n = self.vertex_count();
        n >= 3
            && self.graph.edge_count() == 3 * n - 6
            && self.face_darts.iter().all(|f| f.len() == 3)
    }

    pub fn to_json(&self) -> String {
        let wire = EmbeddingWire {
            vertex_count: self.vertex_count(),
            rotation: self.rotation.clone(),
            outer_face: self.outer_face,
        };
        serde_json::to_string_pretty(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: EmbeddingWire = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if wire.rotation.len() != wire.vertex_count {
            return Err(Error::InvalidEmbedding("rotation length differs from vertex_count".into()));
        }
        let mut edges = Vec::new();
        for (v, rot) in wire.rotation.iter().enumerate() {
            for &w in rot {
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::from_edges(wire.vertex_count, &edges)?;
        Embedding::new(graph, wire.rotation, wire.outer_face)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Embedding {
        // Vertex 3 sits inside the triangle 0, 1, 2.
        let g = crate::graph::families::complete(4);
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        Embedding::from_rotation(g, rot).unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        let e = k4();
        assert_eq!(e.face_count(), 4);
        assert!(e.is_triangulation());
        let total: usize = (0..4).map(|f| e.face(f).len()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn bad_rotation_fails_euler() {
        let g = crate::graph::families::complete(4);
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(Embedding::from_rotation(g, rot).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = k4().with_outer_face(2).unwrap();
        let back = Embedding::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn refacing() {
        let e = k4();
        let f = e.with_outer_vertex(3).unwrap();
        assert!(f.outer_vertices().contains(&3));
    }
}
