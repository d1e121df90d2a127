//! Vertex colourings of planar graphs in which the union of any `c - 1`
//! colour classes has small treewidth.
//!
//! From a width-1 partition and its BFS layering: class `j` (1-based) takes
//! the layers congruent to `2j - 2`, `2j - 1` and `2j` modulo `2c`, so
//! dropping class `j` leaves blocks of `2c - 1` consecutive layers with a
//! missing layer between blocks. Each block is decomposed with a copy of
//! the quotient decomposition restricted to the block.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{partition_planar, Mode, TreeDecomposition};

/// One colour class and the decomposition of everything outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourClass {
    /// Vertices of this class, ascending.
    pub vertices: Vec<usize>,
    /// Vertices of the other classes together, ascending.
    pub complement: Vec<usize>,
    /// Decomposition of the subgraph induced by `complement`, with vertex
    /// `i` standing for `complement[i]`.
    pub decomposition: TreeDecomposition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub c: usize,
    /// BFS layer of every vertex.
    pub layer_of: Vec<usize>,
    /// One colour per vertex (0-based): the first class containing it. The
    /// vertices not coloured `j` all lie in `classes[j].complement`.
    pub colour_of: Vec<usize>,
    pub classes: Vec<ColourClass>,
}

impl Colouring {
    /// `9 (2c - 1) - 1`, the width promised for every complement.
    pub fn width_bound(&self) -> usize {
        9 * (2 * self.c - 1) - 1
    }
}

/// Builds the `c` classes and the complement decompositions.
pub fn low_treewidth_colouring(g: &Graph, c: usize) -> Result<Colouring> {
    if c < 2 {
        return Err(Error::BadParameters("need at least 2 colours".into()));
    }
    let pp = partition_planar(g, Mode::Width1)?;
    let p = &pp.partition;
    let layer_of: Vec<usize> = (0..g.vertex_count()).map(|v| p.layering().layer_of(v)).collect();
    let period = 2 * c;
    let td = &pp.decomposition;

    let mut classes = Vec::with_capacity(c);
    for j in 1..=c {
        let wanted = [2 * j - 2, 2 * j - 1, (2 * j) % period];
        let vertices: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| wanted.contains(&(layer_of[v] % period)))
            .collect();
        let gap = 2 * j - 1;
        let complement: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| layer_of[v] % period != gap)
            .collect();
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in complement.iter().enumerate() {
            local[v] = i;
        }
        // Block of a kept layer: blocks start right after each gap layer.
        let block_of = |layer: usize| (layer + period - gap - 1) / period;

        // Members of each (part, block), by local id.
        let mut cells: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
        for &v in &complement {
            cells
                .entry((block_of(layer_of[v]), p.part_of(v)))
                .or_default()
                .push(local[v]);
        }
        let mut blocks: Vec<usize> = cells.keys().map(|k| k.0).collect();
        blocks.dedup();

        let mut bags: Vec<Vec<usize>> = Vec::new();
        let mut tree_edges = Vec::new();
        let mut previous_root: Option<usize> = None;
        for &b in &blocks {
            // Copy of the quotient tree restricted to the block, keeping
            // only non-empty bags. Dropping empty bags may split the tree;
            // the pieces and consecutive blocks are joined in a chain.
            let offset = bags.len();
            let mut node_id = vec![usize::MAX; td.node_count()];
            for (x, bag) in td.bags.iter().enumerate() {
                let contents: Vec<usize> = bag
                    .iter()
                    .filter_map(|&a| cells.get(&(b, a)))
                    .flatten()
                    .copied()
                    .collect();
                if !contents.is_empty() {
                    node_id[x] = bags.len() - offset;
                    bags.push(contents);
                }
            }
            let local_edges: Vec<(usize, usize)> = td
                .tree
                .edges()
                .iter()
                .filter(|&&(x, y)| node_id[x] != usize::MAX && node_id[y] != usize::MAX)
                .map(|&(x, y)| (node_id[x], node_id[y]))
                .collect();
            let (_, comp) = Graph::from_edges(bags.len() - offset, &local_edges)?.components();
            tree_edges.extend(local_edges.iter().map(|&(x, y)| (x + offset, y + offset)));
            let mut roots = Vec::new();
            for (i, &k) in comp.iter().enumerate() {
                if k == roots.len() {
                    roots.push(offset + i);
                }
            }
            if let Some(prev) = previous_root {
                tree_edges.push((prev, roots[0]));
            }
            tree_edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
            previous_root = Some(roots[0]);
        }
        if bags.is_empty() {
            bags.push(Vec::new());
        }
        let decomposition = TreeDecomposition::new(&tree_edges, bags)?;
        classes.push(ColourClass {
            vertices,
            complement,
            decomposition,
        });
    }
    let colour_of = layer_of
        .iter()
        .map(|&layer| (layer % period).div_ceil(2).max(1) - 1)
        .collect();
    Ok(Colouring {
        c,
        layer_of,
        colour_of,
        classes,
    })
}
