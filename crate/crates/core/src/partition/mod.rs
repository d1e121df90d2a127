//! Vertex partitions, their quotients and tree-decompositions.

mod frame;
mod planar;
mod widen;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bfs::{is_vertical_path, BfsTree, Layering};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use frame::{
    find_sperner_triangle, sperner_colour, tripod_partition, vertical_path_partition,
    FrameStats,
};
pub use planar::{partition_planar, Mode, PlanarPartition};
pub use widen::{bag_layered_width, layered_decomposition, widen_to_width1, width_against};

/// Up to three disjoint vertical paths whose lower endpoints are pairwise
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tripod {
    /// Legs listed top-down; the last vertex of each leg is its lower endpoint.
    pub legs: Vec<Vec<usize>>,
    /// Edges between lower endpoints of distinct legs.
    pub clique_edges: Vec<(usize, usize)>,
}

impl Tripod {
    pub fn lower_endpoints(&self) -> Vec<usize> {
        self.legs.iter().filter_map(|l| l.last().copied()).collect()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.legs.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartShape {
    Plain,
    /// A vertical path; the part's vertices are listed top-down.
    Vertical,
    Tripod(Tripod),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub shape: PartShape,
}

impl Part {
    pub fn plain(vertices: Vec<usize>) -> Self {
        Part {
            vertices,
            shape: PartShape::Plain,
        }
    }

    pub fn vertical(vertices: Vec<usize>) -> Self {
        Part {
            vertices,
            shape: PartShape::Vertical,
        }
    }

    pub fn tripod(tripod: Tripod) -> Self {
        Part {
            vertices: tripod.vertices(),
            shape: PartShape::Tripod(tripod),
        }
    }
}

/// A partition of the vertices of a graph together with its quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<Part>,
    part_of: Vec<usize>,
    quotient: Graph,
    declared_layered_width: usize,
    layering: Layering,
}

/// The quotient of `g` by `part_of`: parts `x != y` are adjacent iff some
/// edge of `g` joins them.
pub fn quotient_graph(g: &Graph, part_of: &[usize], part_count: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (part_of[u], part_of[v]))
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges_lossy(part_count, &edges)
}

fn part_map(vertex_count: usize, parts: &[Part]) -> Result<Vec<usize>> {
    let mut part_of = vec![usize::MAX; vertex_count];
    for (i, p) in parts.iter().enumerate() {
        if p.vertices.is_empty() {
            return Err(Error::InvalidGraph(format!("part {i} is empty")));
        }
        for &v in &p.vertices {
            if v >= vertex_count {
                return Err(Error::InvalidGraph(format!("part {i} names vertex {v}")));
            }
            if part_of[v] != usize::MAX {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} lies in parts {} and {i}",
                    part_of[v]
                )));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::InvalidGraph(format!("vertex {v} lies in no part")));
    }
    Ok(part_of)
}

impl Partition {
    /// Builds a partition of `g` and computes its quotient. Parts must be
    /// non-empty, disjoint and cover every vertex; the layered width is not
    /// checked here.
    pub fn new(
        g: &Graph,
        parts: Vec<Part>,
        layering: Layering,
        declared_layered_width: usize,
    ) -> Result<Self> {
        let part_of = part_map(g.vertex_count(), &parts)?;
        let quotient = quotient_graph(g, &part_of, parts.len());
        Ok(Partition {
            parts,
            part_of,
            quotient,
            declared_layered_width,
            layering,
        })
    }

    /// Like [`Partition::new`] but with a quotient supplied by the caller
    /// (for example one read from a file); use [`validate_partition`] to
    /// compare it against the graph.
    pub fn with_quotient(
        vertex_count: usize,
        parts: Vec<Part>,
        quotient: Graph,
        layering: Layering,
        declared_layered_width: usize,
    ) -> Result<Self> {
        let part_of = part_map(vertex_count, &parts)?;
        if quotient.vertex_count() != parts.len() {
            return Err(Error::InvalidGraph(format!(
                "quotient has {} vertices for {} parts",
                quotient.vertex_count(),
                parts.len()
            )));
        }
        Ok(Partition {
            parts,
            part_of,
            quotient,
            declared_layered_width,
            layering,
        })
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &Part {
        &self.parts[i]
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn part_map(&self) -> &[usize] {
        &self.part_of
    }

    pub fn quotient(&self) -> &Graph {
        &self.quotient
    }

    pub fn declared_layered_width(&self) -> usize {
        self.declared_layered_width
    }

    pub fn layering(&self) -> &Layering {
        &self.layering
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    /// Largest number of vertices any part has in a single layer.
    pub fn measured_layered_width(&self) -> usize {
        layered_width(&self.part_of, self.parts.len(), &self.layering)
    }

    /// Same parts with the quotient recomputed for `g`.
    pub fn requotient(&self, g: &Graph) -> Partition {
        let mut p = self.clone();
        p.quotient = quotient_graph(g, &self.part_of, self.parts.len());
        p
    }

    pub fn to_json(&self) -> String {
        let wire = PartitionWire {
            declared_layered_width: self.declared_layered_width,
            layers: self.layering.layers.clone(),
            parts: self
                .parts
                .iter()
                .map(|p| match &p.shape {
                    PartShape::Plain => PartWire {
                        kind: "plain".into(),
                        vertices: p.vertices.clone(),
                        tripod: None,
                    },
                    PartShape::Vertical => PartWire {
                        kind: "vertical".into(),
                        vertices: p.vertices.clone(),
                        tripod: None,
                    },
                    PartShape::Tripod(t) => PartWire {
                        kind: "tripod".into(),
                        vertices: p.vertices.clone(),
                        tripod: Some(t.clone()),
                    },
                })
                .collect(),
            quotient_edges: self.quotient.edges().to_vec(),
        };
        serde_json::to_string_pretty(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PartitionWire = serde_json::from_str(text).map_err(json_error)?;
        let n: usize = wire.layers.iter().map(Vec::len).sum();
        let layering = Layering::from_layers(n, wire.layers)?;
        let mut parts = Vec::with_capacity(wire.parts.len());
        for p in wire.parts {
            let shape = match (p.kind.as_str(), p.tripod) {
                ("plain", None) => PartShape::Plain,
                ("vertical", None) => PartShape::Vertical,
                ("tripod", Some(t)) => PartShape::Tripod(t),
                (kind, _) => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("bad part kind {kind:?}"),
                    })
                }
            };
            parts.push(Part {
                vertices: p.vertices,
                shape,
            });
        }
        let quotient = Graph::from_edges(parts.len(), &wire.quotient_edges)?;
        Partition::with_quotient(n, parts, quotient, layering, wire.declared_layered_width)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

#[derive(Serialize, Deserialize)]
struct PartWire {
    kind: String,
    vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tripod: Option<Tripod>,
}

#[derive(Serialize, Deserialize)]
struct PartitionWire {
    declared_layered_width: usize,
    layers: Vec<Vec<usize>>,
    parts: Vec<PartWire>,
    quotient_edges: Vec<(usize, usize)>,
}

/// Largest `|A ∩ V_i|` over parts `A` and layers `V_i`.
pub fn layered_width(part_of: &[usize], part_count: usize, layering: &Layering) -> usize {
    let mut best = 0;
    let mut count = vec![0usize; part_count];
    for layer in &layering.layers {
        for &v in layer {
            count[part_of[v]] += 1;
            best = best.max(count[part_of[v]]);
        }
        for &v in layer {
            count[part_of[v]] = 0;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct QuotientDiff {
    /// Quotient edges implied by the graph but absent from the partition.
    pub missing: Vec<(usize, usize)>,
    /// Quotient edges present in the partition but not implied by the graph.
    pub extra: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub is_valid: bool,
    pub measured_layered_width: usize,
    pub quotient_edge_diff: QuotientDiff,
    pub problems: Vec<String>,
}

/// Recomputes layered width and quotient of `partition` from scratch.
pub fn validate_partition(g: &Graph, partition: &Partition, layering: &Layering) -> PartitionReport {
    let mut problems = Vec::new();
    if partition.vertex_count() != g.vertex_count() {
        problems.push(format!(
            "partition covers {} vertices, graph has {}",
            partition.vertex_count(),
            g.vertex_count()
        ));
        return PartitionReport {
            is_valid: false,
            measured_layered_width: 0,
            quotient_edge_diff: QuotientDiff::default(),
            problems,
        };
    }
    if !layering.is_valid_for(g) {
        problems.push("layering is not valid for the graph".into());
    }
    // Disjointness and cover were enforced on construction; recheck anyway.
    match part_map(g.vertex_count(), &partition.parts) {
        Ok(map) if map == partition.part_of => {}
        Ok(_) => problems.push("part map disagrees with the parts".into()),
        Err(e) => problems.push(e.to_string()),
    }
    let measured = layered_width(&partition.part_of, partition.part_count(), layering);
    if measured > partition.declared_layered_width {
        problems.push(format!(
            "layered width {measured} exceeds declared {}",
            partition.declared_layered_width
        ));
    }
    let fresh = quotient_graph(g, &partition.part_of, partition.part_count());
    let diff = QuotientDiff {
        missing: fresh
            .edges()
            .iter()
            .filter(|&&(a, b)| !partition.quotient.has_edge(a, b))
            .copied()
            .collect(),
        extra: partition
            .quotient
            .edges()
            .iter()
            .filter(|&&(a, b)| !fresh.has_edge(a, b))
            .copied()
            .collect(),
    };
    if !diff.missing.is_empty() || !diff.extra.is_empty() {
        problems.push(format!(
            "quotient differs: {} missing, {} extra edges",
            diff.missing.len(),
            diff.extra.len()
        ));
    }
    PartitionReport {
        is_valid: problems.is_empty(),
        measured_layered_width: measured,
        quotient_edge_diff: diff,
        problems,
    }
}

/// First part that is not a vertical path of `tree`, if any.
pub fn check_vertical_parts(tree: &BfsTree, partition: &Partition) -> Option<usize> {
    partition
        .parts
        .iter()
        .position(|p| p.shape != PartShape::Vertical || !is_vertical_path(tree, &p.vertices))
}

/// First part that is not a tripod of `tree` in `g`, if any. Lower
/// endpoints must be pairwise adjacent in `g` and the clique edges must be
/// exactly those adjacencies.
pub fn check_tripod_parts(g: &Graph, tree: &BfsTree, partition: &Partition) -> Option<usize> {
    partition.parts.iter().position(|p| match &p.shape {
        PartShape::Tripod(t) => !is_tripod(g, tree, t, &p.vertices),
        _ => true,
    })
}

fn is_tripod(g: &Graph, tree: &BfsTree, t: &Tripod, vertices: &[usize]) -> bool {
    if t.legs.is_empty() || t.legs.len() > 3 {
        return false;
    }
    if t.legs.iter().any(|l| !is_vertical_path(tree, l)) {
        return false;
    }
    let mut all = t.vertices();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != total {
        return false;
    }
    let mut listed = vertices.to_vec();
    listed.sort_unstable();
    if listed != all {
        return false;
    }
    let low = t.lower_endpoints();
    let mut expected = Vec::new();
    for i in 0..low.len() {
        for j in i + 1..low.len() {
            if !g.has_edge(low[i], low[j]) {
                return false;
            }
            expected.push((low[i].min(low[j]), low[i].max(low[j])));
        }
    }
    expected.sort_unstable();
    let mut clique: Vec<(usize, usize)> = t
        .clique_edges
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    clique.sort_unstable();
    clique == expected
}

/// A tree-decomposition: bags of vertices of some graph indexed by the
/// nodes of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Graph,
    /// Bags, each sorted ascending without repeats.
    pub bags: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionWire {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(tree_edges: &[(usize, usize)], bags: Vec<Vec<usize>>) -> Result<Self> {
        let tree = Graph::from_edges(bags.len(), tree_edges)?;
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(TreeDecomposition { tree, bags })
    }

    /// A single bag holding `0..vertex_count`.
    pub fn trivial(vertex_count: usize) -> Self {
        TreeDecomposition {
            tree: Graph::empty(1),
            bags: vec![(0..vertex_count).collect()],
        }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let wire = DecompositionWire {
            bags: self.bags.clone(),
            tree_edges: self.tree.edges().to_vec(),
        };
        serde_json::to_string_pretty(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: DecompositionWire = serde_json::from_str(text).map_err(json_error)?;
        TreeDecomposition::new(&wire.tree_edges, wire.bags)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TdViolation {
    NotATree,
    VertexOutOfRange(usize),
    VertexMissing(usize),
    Disconnected(usize),
    EdgeUncovered(usize, usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree => write!(f, "decomposition tree is not a tree"),
            TdViolation::VertexOutOfRange(v) => write!(f, "bag names vertex {v} out of range"),
            TdViolation::VertexMissing(v) => write!(f, "vertex {v} lies in no bag"),
            TdViolation::Disconnected(v) => write!(f, "bags containing {v} are not connected"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "no bag contains edge ({u}, {v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TdReport {
    pub is_valid: bool,
    pub width: usize,
    pub violation: Option<TdViolation>,
}

fn is_tree(t: &Graph) -> bool {
    t.vertex_count() > 0 && t.edge_count() + 1 == t.vertex_count() && t.is_connected()
}

/// Checks the tree, vertex-subtree and edge-cover properties.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> TdReport {
    let width = td.width();
    let fail = |v| TdReport {
        is_valid: false,
        width,
        violation: Some(v),
    };
    if td.tree.vertex_count() != td.bags.len() || !is_tree(&td.tree) {
        return fail(TdViolation::NotATree);
    }
    let n = g.vertex_count();
    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return fail(TdViolation::VertexOutOfRange(v));
            }
            nodes_of[v].push(x);
        }
    }
    let mut inner_edges = vec![0usize; n];
    for &(x, y) in td.tree.edges() {
        let (a, b) = (&td.bags[x], &td.bags[y]);
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        for &v in small {
            if big.binary_search(&v).is_ok() {
                inner_edges[v] += 1;
            }
        }
    }
    for v in 0..n {
        if nodes_of[v].is_empty() {
            return fail(TdViolation::VertexMissing(v));
        }
        // A set of k tree nodes is connected iff it spans k - 1 tree edges.
        if inner_edges[v] + 1 != nodes_of[v].len() {
            return fail(TdViolation::Disconnected(v));
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = if nodes_of[u].len() <= nodes_of[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        if !nodes_of[a]
            .iter()
            .any(|&x| td.bags[x].binary_search(&b).is_ok())
        {
            return fail(TdViolation::EdgeUncovered(u, v));
        }
    }
    TdReport {
        is_valid: true,
        width,
        violation: None,
    }
}
