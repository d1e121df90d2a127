//! Partitions of arbitrary planar graphs: each component is triangulated
//! and decomposed on its own, then the pieces are stitched together.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bfs::{bfs_layering, BfsTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::frame::{run_frames, FrameStats, Variant};
use crate::partition::{Part, Partition, TreeDecomposition, Tripod};
use crate::planarity::planar_embed;
use crate::triangulate::triangulate;

/// Which decomposition to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Vertical paths, layered width 1, quotient bags of at most 9 parts.
    Width1,
    /// Tripods, layered width at most 3, quotient bags of at most 4 parts.
    Tripod,
}

impl Mode {
    pub fn declared_width(self) -> usize {
        match self {
            Mode::Width1 => 1,
            Mode::Tripod => 3,
        }
    }

    pub fn max_bag(self) -> usize {
        match self {
            Mode::Width1 => 9,
            Mode::Tripod => 4,
        }
    }

    fn variant(self) -> Variant {
        match self {
            Mode::Width1 => Variant::Width1,
            Mode::Tripod => Variant::Tripod,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Width1 => "width1",
            Mode::Tripod => "tripod",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "width1" => Ok(Mode::Width1),
            "tripod" => Ok(Mode::Tripod),
            other => Err(Error::BadParameters(format!("unknown mode {other:?}"))),
        }
    }
}

/// A partition of a planar graph `G` with its quotient decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarPartition {
    pub mode: Mode,
    /// Partition of `G`; its quotient only has edges coming from `G`.
    pub partition: Partition,
    /// Decomposition of the quotient.
    pub decomposition: TreeDecomposition,
    /// BFS forest of `G` (smallest vertex of each component as root).
    pub tree: BfsTree,
    /// `G` plus every edge added while triangulating its components. Tripod
    /// clique edges may only exist here.
    pub augmented: Graph,
    pub stats: FrameStats,
}

/// Partitions a planar graph component by component.
pub fn partition_planar(g: &Graph, mode: Mode) -> Result<PlanarPartition> {
    let n = g.vertex_count();
    let (layering, tree) = bfs_layering(g, None)?;
    let (count, comp) = g.components();
    let mut members = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }

    let mut parts: Vec<Part> = Vec::new();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut extra_edges: Vec<(usize, usize)> = Vec::new();
    let mut stats = FrameStats::default();

    for verts in &members {
        let first_node = bags.len();
        if verts.len() <= 2 {
            // The smallest vertex is the root, so this is already top-down.
            let part = match mode {
                Mode::Width1 => Part::vertical(verts.clone()),
                Mode::Tripod => Part::tripod(Tripod {
                    legs: vec![verts.clone()],
                    clique_edges: Vec::new(),
                }),
            };
            bags.push(vec![parts.len()]);
            parts.push(part);
        } else {
            let h = g.induced(verts);
            let emb = planar_embed(&h)?;
            let tri = triangulate(&emb, 0)?;
            let (_, local_tree) = bfs_layering(&h, Some(&[0]))?;
            let out = run_frames(&tri.embedding, &local_tree, mode.variant())?;
            let offset = parts.len();
            let lift = |v: &usize| verts[*v];
            for part in out.parts {
                parts.push(match part.shape {
                    crate::partition::PartShape::Tripod(t) => Part::tripod(Tripod {
                        legs: t.legs.iter().map(|l| l.iter().map(lift).collect()).collect(),
                        clique_edges: t
                            .clique_edges
                            .iter()
                            .map(|&(a, b)| {
                                let (x, y) = (verts[a], verts[b]);
                                (x.min(y), x.max(y))
                            })
                            .collect(),
                    }),
                    crate::partition::PartShape::Vertical => {
                        Part::vertical(part.vertices.iter().map(lift).collect())
                    }
                    crate::partition::PartShape::Plain => {
                        Part::plain(part.vertices.iter().map(lift).collect())
                    }
                });
            }
            let node_offset = bags.len();
            bags.extend(
                out.bags
                    .into_iter()
                    .map(|b| b.into_iter().map(|x| x + offset).collect::<Vec<_>>()),
            );
            tree_edges.extend(
                out.tree_edges
                    .into_iter()
                    .map(|(a, b)| (a + node_offset, b + node_offset)),
            );
            extra_edges.extend(tri.added_edges.iter().map(|&(a, b)| (verts[a], verts[b])));
            stats.frames += out.stats.frames;
            stats.nodes += out.stats.nodes;
            stats.max_pieces = stats.max_pieces.max(out.stats.max_pieces);
            stats.max_depth = stats.max_depth.max(out.stats.max_depth);
            stats.max_bag = stats.max_bag.max(out.stats.max_bag);
        }
        if first_node > 0 {
            tree_edges.push((0, first_node));
        }
    }
    if n == 0 {
        bags.push(Vec::new());
    }

    let partition = Partition::new(g, parts, layering, mode.declared_width())?;
    let decomposition = TreeDecomposition::new(&tree_edges, bags)?;
    Ok(PlanarPartition {
        mode,
        partition,
        decomposition,
        tree,
        augmented: g.with_edges(&extra_edges),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::is_vertical_path;
    use crate::graph::families;
    use crate::partition::{check_tripod_parts, validate_partition, validate_tree_decomposition};

    fn check(g: &Graph, mode: Mode) -> PlanarPartition {
        let pp = partition_planar(g, mode).unwrap();
        let r = validate_partition(g, &pp.partition, pp.partition.layering());
        assert!(r.is_valid, "{:?}", r.problems);
        assert!(r.measured_layered_width <= mode.declared_width());
        let t = validate_tree_decomposition(pp.partition.quotient(), &pp.decomposition);
        assert!(t.is_valid, "{:?}", t.violation);
        assert!(pp.decomposition.max_bag() <= mode.max_bag());
        match mode {
            Mode::Width1 => assert!(pp
                .partition
                .parts()
                .iter()
                .all(|p| is_vertical_path(&pp.tree, &p.vertices))),
            Mode::Tripod => assert_eq!(check_tripod_parts(&pp.augmented, &pp.tree, &pp.partition), None),
        }
        pp
    }

    #[test]
    fn assorted_graphs() {
        let forest = Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (4, 6)]).unwrap();
        for g in [
            Graph::empty(0),
            Graph::empty(1),
            Graph::empty(5),
            families::path(2),
            families::cycle(7),
            families::grid(6, 9),
            forest,
            families::complete(4),
        ] {
            check(&g, Mode::Width1);
            check(&g, Mode::Tripod);
        }
    }

    #[test]
    fn non_planar_rejected() {
        assert_eq!(
            partition_planar(&families::complete(5), Mode::Width1).map(|_| ()),
            Err(Error::NonPlanar)
        );
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("tripod".parse::<Mode>().unwrap(), Mode::Tripod);
        assert_eq!(Mode::Width1.to_string(), "width1");
        assert!("wide".parse::<Mode>().is_err());
    }
}
