//! The recursive frame decomposition behind both planar partitions.
//!
//! A frame is a cycle of the triangulation made of a few boundary pieces,
//! each piece belonging to an already created part. Processing a frame
//! colours its interior by the piece its tree path leaves through, finds a
//! trichromatic face, turns the three tree paths below that face into new
//! parts and pushes the (up to) three smaller frames they cut off. Every
//! processed frame contributes one bag holding the parts of its boundary and
//! the parts it created.
//!
//! The recursion runs on an explicit stack; faces inside a frame are found
//! by flooding from a seed face without crossing the frame's boundary.

use crate::bfs::BfsTree;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::partition::{Part, Partition, TreeDecomposition, Tripod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Variant {
    Width1,
    Tripod,
}

impl Variant {
    fn max_pieces(self) -> usize {
        match self {
            Variant::Width1 => 6,
            Variant::Tripod => 3,
        }
    }

    fn max_bag(self) -> usize {
        match self {
            Variant::Width1 => 9,
            Variant::Tripod => 4,
        }
    }
}

/// Counters describing one run of the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrameStats {
    /// Frames taken off the stack, including ones without interior vertices.
    pub frames: usize,
    /// Frames that produced a bag.
    pub nodes: usize,
    /// Most boundary pieces seen on any frame.
    pub max_pieces: usize,
    /// Deepest nesting of frames (the root frame has depth 0).
    pub max_depth: usize,
    /// Largest bag produced.
    pub max_bag: usize,
}

#[derive(Debug, Clone)]
struct Piece {
    verts: Vec<usize>,
    part: usize,
}

#[derive(Debug)]
struct Frame {
    pieces: Vec<Piece>,
    seed: usize,
    parent_node: Option<usize>,
    depth: usize,
}

pub(crate) struct Outcome {
    pub parts: Vec<Part>,
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    pub stats: FrameStats,
}

struct Engine<'a> {
    emb: &'a Embedding,
    parent: &'a [Option<usize>],
    depth: &'a [usize],
    variant: Variant,
    stamp: usize,
    boundary_mark: Vec<usize>,
    interior_mark: Vec<usize>,
    wall_mark: Vec<usize>,
    face_mark: Vec<usize>,
    colour: Vec<u8>,
    part_of: Vec<usize>,
    parts: Vec<Part>,
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
    stats: FrameStats,
}

/// Colours interior vertices (sorted by depth) after their tree parent.
fn colour_interior(interior: &[usize], parent: &[Option<usize>], colour: &mut [u8]) -> Result<()> {
    for &v in interior {
        match parent[v] {
            Some(p) if colour[p] != 0 => colour[v] = colour[p],
            _ => return Err(Error::BrokenFrame(v)),
        }
    }
    Ok(())
}

fn is_trichromatic(colour: &[u8], verts: [usize; 3]) -> bool {
    let mut seen = [false; 4];
    for v in verts {
        seen[colour[v] as usize] = true;
    }
    seen[1] && seen[2] && seen[3]
}

/// Splits a frame boundary into the three colour classes. Returns the
/// vertices of each class in cycle order, each tagged with the index of
/// the piece it comes from.
fn split_boundary(pieces: &[Piece]) -> Result<[Vec<(usize, usize)>; 3]> {
    let tag = |idx: usize, vs: &[usize]| -> Vec<(usize, usize)> {
        vs.iter().map(|&v| (v, idx)).collect()
    };
    match pieces.len() {
        0 => Err(Error::Internal("frame without boundary".into())),
        1 => {
            let p = &pieces[0].verts;
            if p.len() < 3 {
                return Err(Error::Internal("single-piece frame shorter than 3".into()));
            }
            let last = p.len() - 1;
            Ok([
                tag(0, &p[..1]),
                tag(0, &p[1..last]),
                tag(0, &p[last..]),
            ])
        }
        2 => {
            let (a, b) = (&pieces[0].verts, &pieces[1].verts);
            let first = if a.len() > b.len() || (a.len() == b.len() && a[0] < b[0]) {
                0
            } else {
                1
            };
            let p = &pieces[first].verts;
            if p.len() < 2 {
                return Err(Error::Internal("two singleton pieces cannot form a cycle".into()));
            }
            Ok([
                tag(first, &p[..1]),
                tag(first, &p[1..]),
                tag(1 - first, &pieces[1 - first].verts),
            ])
        }
        k => {
            let cuts = [0, k / 3, 2 * k / 3, k];
            let mut out: [Vec<(usize, usize)>; 3] = Default::default();
            for (i, group) in out.iter_mut().enumerate() {
                for (idx, piece) in pieces.iter().enumerate().take(cuts[i + 1]).skip(cuts[i]) {
                    group.extend(tag(idx, &piece.verts));
                }
            }
            Ok(out)
        }
    }
}

/// Consecutive runs of `seq` that come from the same piece.
fn runs(seq: &[(usize, usize)], pieces: &[Piece]) -> Vec<Piece> {
    let mut out: Vec<Piece> = Vec::new();
    let mut last_idx = usize::MAX;
    for &(v, idx) in seq {
        if idx == last_idx {
            out.last_mut().expect("run started").verts.push(v);
        } else {
            out.push(Piece {
                verts: vec![v],
                part: pieces[idx].part,
            });
            last_idx = idx;
        }
    }
    out
}

impl<'a> Engine<'a> {
    fn new(
        emb: &'a Embedding,
        parent: &'a [Option<usize>],
        depth: &'a [usize],
        variant: Variant,
    ) -> Self {
        let n = emb.vertex_count();
        let g = emb.graph();
        Engine {
            emb,
            parent,
            depth,
            variant,
            stamp: 0,
            boundary_mark: vec![0; n],
            interior_mark: vec![0; n],
            wall_mark: vec![0; g.dart_count()],
            face_mark: vec![0; emb.face_count()],
            colour: vec![0; parent.len()],
            part_of: vec![usize::MAX; n],
            parts: Vec::new(),
            bags: Vec::new(),
            tree_edges: Vec::new(),
            stats: FrameStats::default(),
        }
    }

    fn new_part(&mut self, part: Part) -> usize {
        let id = self.parts.len();
        for &v in &part.vertices {
            self.part_of[v] = id;
        }
        self.parts.push(part);
        id
    }

    fn add_node(&mut self, mut bag: Vec<usize>, parent_node: Option<usize>) -> Result<usize> {
        bag.sort_unstable();
        bag.dedup();
        if bag.len() > self.variant.max_bag() {
            return Err(Error::Internal(format!(
                "bag of size {} exceeds {}",
                bag.len(),
                self.variant.max_bag()
            )));
        }
        let id = self.bags.len();
        self.stats.nodes += 1;
        self.stats.max_bag = self.stats.max_bag.max(bag.len());
        self.bags.push(bag);
        if let Some(p) = parent_node {
            self.tree_edges.push((p, id));
        }
        Ok(id)
    }

    fn run(mut self, root_pieces: Vec<Piece>, seed: usize) -> Result<Outcome> {
        let mut stack = vec![Frame {
            pieces: root_pieces,
            seed,
            parent_node: None,
            depth: 0,
        }];
        while let Some(frame) = stack.pop() {
            let children = self.process(frame)?;
            // Reverse so the first child is processed next.
            stack.extend(children.into_iter().rev());
        }
        Ok(Outcome {
            parts: self.parts,
            bags: self.bags,
            tree_edges: self.tree_edges,
            stats: self.stats,
        })
    }

    /// Marks the frame boundary and returns the faces inside it.
    fn region(&mut self, cycle: &[usize], seed: usize) -> Result<Vec<usize>> {
        let s = self.stamp;
        let g = self.emb.graph();
        for (i, &v) in cycle.iter().enumerate() {
            self.boundary_mark[v] = s;
            let w = cycle[(i + 1) % cycle.len()];
            let d = g
                .dart(v, w)
                .ok_or_else(|| Error::Internal(format!("frame boundary uses non-edge {v}-{w}")))?;
            self.wall_mark[d] = s;
            self.wall_mark[g.twin(d)] = s;
        }
        let mut faces = vec![seed];
        self.face_mark[seed] = s;
        let mut i = 0;
        while i < faces.len() {
            let f = faces[i];
            i += 1;
            if f == self.emb.outer_face() {
                return Err(Error::Internal("frame region leaks into the outer face".into()));
            }
            for &d in self.emb.face_darts(f) {
                if self.wall_mark[d] == s {
                    continue;
                }
                let h = self.emb.dart_face(g.twin(d));
                if self.face_mark[h] != s {
                    self.face_mark[h] = s;
                    faces.push(h);
                }
            }
        }
        Ok(faces)
    }

    fn process(&mut self, frame: Frame) -> Result<Vec<Frame>> {
        self.stamp += 1;
        let s = self.stamp;
        self.stats.frames += 1;
        self.stats.max_depth = self.stats.max_depth.max(frame.depth);
        self.stats.max_pieces = self.stats.max_pieces.max(frame.pieces.len());
        if frame.pieces.len() > self.variant.max_pieces() {
            return Err(Error::Internal(format!(
                "frame with {} boundary pieces",
                frame.pieces.len()
            )));
        }
        let boundary_parts: Vec<usize> = frame.pieces.iter().map(|p| p.part).collect();
        let cycle: Vec<usize> = frame.pieces.iter().flat_map(|p| p.verts.iter().copied()).collect();
        let faces = self.region(&cycle, frame.seed)?;

        let mut interior = Vec::new();
        for &f in &faces {
            for &d in self.emb.face_darts(f) {
                let v = self.emb.graph().dart_tail(d);
                if self.boundary_mark[v] != s && self.interior_mark[v] != s {
                    self.interior_mark[v] = s;
                    interior.push(v);
                }
            }
        }
        if interior.is_empty() {
            // Every quotient edge inside this frame joins two boundary parts,
            // and those already share the parent's bag.
            if frame.parent_node.is_none() {
                self.add_node(boundary_parts, None)?;
            }
            return Ok(Vec::new());
        }

        let classes = split_boundary(&frame.pieces)?;
        for (i, class) in classes.iter().enumerate() {
            for &(v, _) in class {
                self.colour[v] = i as u8 + 1;
            }
        }
        let depth = self.depth;
        interior.sort_unstable_by_key(|&v| (depth[v], v));
        let coloured = colour_interior(&interior, self.parent, &mut self.colour);
        let result = coloured.and_then(|_| self.split(&frame, &faces, &classes, boundary_parts));
        for &v in cycle.iter().chain(&interior) {
            self.colour[v] = 0;
        }
        result
    }

    fn split(
        &mut self,
        frame: &Frame,
        faces: &[usize],
        classes: &[Vec<(usize, usize)>; 3],
        boundary_parts: Vec<usize>,
    ) -> Result<Vec<Frame>> {
        let s = self.stamp;
        let g = self.emb.graph();
        let tau = faces
            .iter()
            .copied()
            .filter(|&f| {
                let d = self.emb.face_darts(f);
                d.len() == 3
                    && is_trichromatic(&self.colour, [g.dart_tail(d[0]), g.dart_tail(d[1]), g.dart_tail(d[2])])
            })
            .min()
            .ok_or(Error::NoTrichromaticFace)?;
        let mut v = [0usize; 3];
        for &d in self.emb.face_darts(tau) {
            let x = g.dart_tail(d);
            v[self.colour[x] as usize - 1] = x;
        }

        // Tree paths from the triangle up to the boundary, bottom-up and
        // without their boundary endpoint.
        let mut q: [Vec<usize>; 3] = Default::default();
        let mut top = [0usize; 3];
        for i in 0..3 {
            let mut x = v[i];
            while self.boundary_mark[x] != s {
                if self.colour[x] as usize != i + 1 {
                    return Err(Error::Internal(format!("tree path from {} changes colour", v[i])));
                }
                q[i].push(x);
                x = self.parent[x].ok_or(Error::BrokenFrame(v[i]))?;
            }
            top[i] = x;
        }

        let mut new_parts = Vec::new();
        let mut q_part = [usize::MAX; 3];
        match self.variant {
            Variant::Width1 => {
                for i in 0..3 {
                    if !q[i].is_empty() {
                        let path: Vec<usize> = q[i].iter().rev().copied().collect();
                        q_part[i] = self.new_part(Part::vertical(path));
                        new_parts.push(q_part[i]);
                    }
                }
            }
            Variant::Tripod => {
                let legs: Vec<usize> = (0..3).filter(|&i| !q[i].is_empty()).collect();
                if !legs.is_empty() {
                    let mut clique_edges = Vec::new();
                    for (a, &i) in legs.iter().enumerate() {
                        for &j in &legs[a + 1..] {
                            clique_edges.push((v[i].min(v[j]), v[i].max(v[j])));
                        }
                    }
                    let tripod = Tripod {
                        legs: legs
                            .iter()
                            .map(|&i| q[i].iter().rev().copied().collect())
                            .collect(),
                        clique_edges,
                    };
                    let id = self.new_part(Part::tripod(tripod));
                    q_part = [id; 3];
                    new_parts.push(id);
                }
            }
        }

        let mut bag = boundary_parts;
        bag.extend_from_slice(&new_parts);
        let node = self.add_node(bag, frame.parent_node)?;

        let mut children = Vec::new();
        for i in 0..3 {
            let j = (i + 1) % 3;
            let pos_i = classes[i]
                .iter()
                .position(|&(x, _)| x == top[i])
                .ok_or_else(|| Error::Internal("tree path left through the wrong class".into()))?;
            let pos_j = classes[j]
                .iter()
                .position(|&(x, _)| x == top[j])
                .ok_or_else(|| Error::Internal("tree path left through the wrong class".into()))?;
            let plus = &classes[i][pos_i..];
            let minus = &classes[j][..=pos_j];
            let down_j: Vec<usize> = q[j].iter().rev().copied().collect();

            let mut pieces = Vec::new();
            match self.variant {
                Variant::Width1 => {
                    if !q[i].is_empty() {
                        pieces.push(Piece {
                            verts: q[i].clone(),
                            part: q_part[i],
                        });
                    }
                    pieces.extend(runs(plus, &frame.pieces));
                    pieces.extend(runs(minus, &frame.pieces));
                    if !down_j.is_empty() {
                        pieces.push(Piece {
                            verts: down_j,
                            part: q_part[j],
                        });
                    }
                }
                Variant::Tripod => {
                    let plus_runs = runs(plus, &frame.pieces);
                    let minus_runs = runs(minus, &frame.pieces);
                    if plus_runs.len() != 1 || minus_runs.len() != 1 {
                        return Err(Error::Internal("colour class spans two pieces".into()));
                    }
                    pieces.extend(plus_runs);
                    pieces.extend(minus_runs);
                    let mut joint = down_j;
                    joint.extend_from_slice(&q[i]);
                    if !joint.is_empty() {
                        pieces.push(Piece {
                            verts: joint,
                            part: q_part[i],
                        });
                    }
                }
            }
            let len: usize = pieces.iter().map(|p| p.verts.len()).sum();
            if len < 3 {
                continue;
            }
            let across = [
                self.emb.face_of(v[i], v[j]).expect("triangle edge"),
                self.emb.face_of(v[j], v[i]).expect("triangle edge"),
            ];
            let seed = if across[0] == tau { across[1] } else { across[0] };
            children.push(Frame {
                pieces,
                seed,
                parent_node: Some(node),
                depth: frame.depth + 1,
            });
        }
        Ok(children)
    }
}

fn check_input(tri: &Embedding, tree: &BfsTree) -> Result<usize> {
    if !tri.is_triangulation() {
        return Err(Error::InvalidEmbedding("expected a plane triangulation".into()));
    }
    if !tree.is_valid_for(tri.graph()) || tree.roots.len() != 1 {
        return Err(Error::BadRoots("tree is not a rooted spanning tree of the triangulation".into()));
    }
    let root = tree.roots[0];
    if !tri.outer_vertices().contains(&root) {
        return Err(Error::RootNotOnOuterFace(root));
    }
    Ok(root)
}

pub(crate) fn run_frames(tri: &Embedding, tree: &BfsTree, variant: Variant) -> Result<Outcome> {
    let root = check_input(tri, tree)?;
    let n = tri.vertex_count();
    let (parent, depth) = match variant {
        Variant::Width1 => (tree.parent.clone(), tree.depth.clone()),
        Variant::Tripod => {
            // A new apex `n` outside the outer face becomes the parent of the
            // old root; it lies outside every frame and never joins a part.
            let mut parent = tree.parent.clone();
            parent[root] = Some(n);
            parent.push(None);
            let mut depth: Vec<usize> = tree.depth.iter().map(|d| d + 1).collect();
            depth.push(0);
            (parent, depth)
        }
    };
    let mut engine = Engine::new(tri, &parent, &depth, variant);
    let outer = tri.face_darts(tri.outer_face()).to_vec();
    let mut pieces = Vec::new();
    for &d in &outer {
        let v = tri.graph().dart_tail(d);
        let part = match variant {
            Variant::Width1 => Part::vertical(vec![v]),
            Variant::Tripod => Part::tripod(Tripod {
                legs: vec![vec![v]],
                clique_edges: Vec::new(),
            }),
        };
        let id = engine.new_part(part);
        pieces.push(Piece {
            verts: vec![v],
            part: id,
        });
    }
    let seed = tri.dart_face(tri.graph().twin(outer[0]));
    let out = engine.run(pieces, seed)?;
    if out.parts.iter().any(|p| p.vertices.iter().any(|&v| v >= n)) {
        return Err(Error::Internal("apex leaked into a part".into()));
    }
    Ok(out)
}

fn assemble(
    tri: &Embedding,
    tree: &BfsTree,
    out: Outcome,
    width: usize,
) -> Result<(Partition, TreeDecomposition, FrameStats)> {
    let partition = Partition::new(tri.graph(), out.parts, tree.layering(), width)?;
    let td = TreeDecomposition::new(&out.tree_edges, out.bags)?;
    Ok((partition, td, out.stats))
}

pub(crate) fn vertical_path_partition_stats(
    tri: &Embedding,
    tree: &BfsTree,
) -> Result<(Partition, TreeDecomposition, FrameStats)> {
    let out = run_frames(tri, tree, Variant::Width1)?;
    assemble(tri, tree, out, 1)
}

pub(crate) fn tripod_partition_stats(
    tri: &Embedding,
    tree: &BfsTree,
) -> Result<(Partition, TreeDecomposition, FrameStats)> {
    let out = run_frames(tri, tree, Variant::Tripod)?;
    assemble(tri, tree, out, 3)
}

/// Partition of a plane triangulation into vertical paths of `tree`; the
/// quotient comes with a tree-decomposition whose bags have at most 9
/// parts. The three outer vertices are singleton parts 0, 1 and 2.
pub fn vertical_path_partition(
    tri: &Embedding,
    tree: &BfsTree,
) -> Result<(Partition, TreeDecomposition)> {
    vertical_path_partition_stats(tri, tree).map(|(p, td, _)| (p, td))
}

/// Partition of a plane triangulation into tripods of `tree`; the quotient
/// comes with a tree-decomposition whose bags have at most 4 parts.
pub fn tripod_partition(tri: &Embedding, tree: &BfsTree) -> Result<(Partition, TreeDecomposition)> {
    tripod_partition_stats(tri, tree).map(|(p, td, _)| (p, td))
}

/// Colours the closed disk bounded by the cycle `r[0] ++ r[1] ++ r[2]` (the
/// side away from the outer face). Vertices of `r[i]` get colour `i + 1`,
/// inner vertices inherit the colour of the first cycle vertex on their
/// tree path, everything outside the disk gets 0.
pub fn sperner_colour(tri: &Embedding, tree: &BfsTree, r: [&[usize]; 3]) -> Result<Vec<u8>> {
    let g = tri.graph();
    let n = tri.vertex_count();
    let cycle: Vec<usize> = r.iter().flat_map(|x| x.iter().copied()).collect();
    if cycle.len() < 3 {
        return Err(Error::Internal("boundary cycle needs at least 3 vertices".into()));
    }
    let mut on_cycle = vec![false; n];
    let mut wall = vec![false; g.dart_count()];
    for (i, &v) in cycle.iter().enumerate() {
        if std::mem::replace(&mut on_cycle[v], true) {
            return Err(Error::Internal(format!("vertex {v} repeats on the boundary")));
        }
        let w = cycle[(i + 1) % cycle.len()];
        let d = g
            .dart(v, w)
            .ok_or_else(|| Error::Internal(format!("boundary uses non-edge {v}-{w}")))?;
        wall[d] = true;
        wall[g.twin(d)] = true;
    }
    let mut outside = vec![false; tri.face_count()];
    let mut queue = vec![tri.outer_face()];
    outside[tri.outer_face()] = true;
    while let Some(f) = queue.pop() {
        for &d in tri.face_darts(f) {
            let h = tri.dart_face(g.twin(d));
            if !wall[d] && !outside[h] {
                outside[h] = true;
                queue.push(h);
            }
        }
    }
    let mut colour = vec![0u8; n];
    for (i, class) in r.iter().enumerate() {
        for &v in class.iter() {
            colour[v] = i as u8 + 1;
        }
    }
    let mut inside = vec![false; n];
    for f in (0..tri.face_count()).filter(|&f| !outside[f]) {
        for v in tri.face(f) {
            inside[v] = !on_cycle[v];
        }
    }
    let mut interior: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    interior.sort_unstable_by_key(|&v| (tree.depth[v], v));
    colour_interior(&interior, &tree.parent, &mut colour)?;
    Ok(colour)
}

/// The lowest-numbered inner face whose three vertices carry colours 1, 2
/// and 3.
pub fn find_sperner_triangle(tri: &Embedding, colour: &[u8]) -> Result<usize> {
    (0..tri.face_count())
        .filter(|&f| f != tri.outer_face())
        .find(|&f| {
            let vs = tri.face(f);
            vs.len() == 3 && is_trichromatic(colour, [vs[0], vs[1], vs[2]])
        })
        .ok_or(Error::NoTrichromaticFace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::{bfs_layering, is_vertical_path};
    use crate::graph::families;
    use crate::partition::{check_tripod_parts, validate_partition, validate_tree_decomposition};
    use crate::planarity::planar_embed;
    use crate::triangulate::triangulate;

    fn k4_embedding() -> Embedding {
        // Vertex 3 inside the triangle 0, 1, 2.
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let e = Embedding::from_rotation(families::complete(4), rot).unwrap();
        let outer = (0..4).find(|&f| !e.face(f).contains(&3)).unwrap();
        e.with_outer_face(outer).unwrap()
    }

    #[test]
    fn triangle_base_case() {
        let g = families::complete(3);
        let tri = triangulate(&planar_embed(&g).unwrap(), 0).unwrap().embedding;
        let (_, tree) = bfs_layering(tri.graph(), Some(&[0])).unwrap();
        let (p, td) = vertical_path_partition(&tri, &tree).unwrap();
        assert_eq!(p.part_count(), 3);
        assert_eq!(p.quotient(), &families::complete(3));
        assert_eq!(td.bags, vec![vec![0, 1, 2]]);
        let (p, td) = tripod_partition(&tri, &tree).unwrap();
        assert_eq!(p.part_count(), 3);
        assert_eq!(td.bags, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn k4_partitions() {
        let tri = k4_embedding();
        let (_, tree) = bfs_layering(tri.graph(), Some(&[0])).unwrap();
        let (p, td) = vertical_path_partition(&tri, &tree).unwrap();
        assert_eq!(p.part_count(), 4);
        assert_eq!(p.quotient(), &families::complete(4));
        assert!(validate_tree_decomposition(p.quotient(), &td).is_valid);
        assert!(td.max_bag() <= 9);

        let (p, td) = tripod_partition(&tri, &tree).unwrap();
        assert_eq!(p.part_count(), 4);
        assert!(check_tripod_parts(tri.graph(), &tree, &p).is_none());
        assert!(validate_tree_decomposition(p.quotient(), &td).is_valid);
        assert!(td.max_bag() <= 4);
    }

    #[test]
    fn root_must_be_outer() {
        let tri = k4_embedding();
        let (_, tree) = bfs_layering(tri.graph(), Some(&[3])).unwrap();
        assert_eq!(vertical_path_partition(&tri, &tree), Err(Error::RootNotOnOuterFace(3)));
        assert_eq!(tripod_partition(&tri, &tree), Err(Error::RootNotOnOuterFace(3)));
    }

    #[test]
    fn k4_sperner() {
        let tri = k4_embedding();
        // Root 0 is the parent of the centre 3, and 0 is in class 2 here.
        let (_, tree) = bfs_layering(tri.graph(), Some(&[0])).unwrap();
        let c = sperner_colour(&tri, &tree, [&[1], &[0], &[2]]).unwrap();
        assert_eq!(c, vec![2, 1, 3, 2]);
        let f = find_sperner_triangle(&tri, &c).unwrap();
        let mut vs = tri.face(f);
        vs.sort_unstable();
        assert!(vs.contains(&1) && vs.contains(&2));
    }

    #[test]
    fn grid_partitions_validate() {
        let g = families::grid(8, 8);
        let tri = triangulate(&planar_embed(&g).unwrap(), 0).unwrap().embedding;
        let (layering, tree) = bfs_layering(&g, Some(&[0])).unwrap();
        let (p, td) = vertical_path_partition(&tri, &tree).unwrap();
        assert!(p.parts().iter().all(|x| is_vertical_path(&tree, &x.vertices)));
        let r = validate_partition(&g, &p.requotient(&g), &layering);
        assert!(r.is_valid, "{:?}", r.problems);
        assert_eq!(r.measured_layered_width, 1);
        let tr = validate_tree_decomposition(p.quotient(), &td);
        assert!(tr.is_valid, "{:?}", tr.violation);
        assert!(td.max_bag() <= 9);

        let (p, td) = tripod_partition(&tri, &tree).unwrap();
        assert!(check_tripod_parts(tri.graph(), &tree, &p).is_none());
        let r = validate_partition(&g, &p.requotient(&g), &layering);
        assert!(r.is_valid, "{:?}", r.problems);
        assert!(r.measured_layered_width <= 3);
        let tr = validate_tree_decomposition(p.quotient(), &td);
        assert!(tr.is_valid, "{:?}", tr.violation);
        assert!(td.max_bag() <= 4);
    }
}
