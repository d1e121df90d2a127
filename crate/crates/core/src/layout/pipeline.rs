//! End-to-end queue layouts of planar graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{
    partition_queue_layout, tree_decomposition_layout, validate_queue_layout, Assign, QueueLayout,
};
use crate::partition::{partition_planar, width_against, Mode, PlanarPartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub planar: PlanarPartition,
    /// Layout of the quotient.
    pub host_layout: QueueLayout,
    /// Layout of the input graph.
    pub layout: QueueLayout,
    /// Width of the quotient decomposition.
    pub host_width: usize,
    /// Layered width measured against the BFS layering of the input.
    pub layered_width: usize,
    /// `3 l q + floor(3 l / 2)` with the achieved host queue count `q`.
    pub bound: usize,
    /// Edges added by triangulation and left out of every output.
    pub stripped_edges: usize,
}

/// `3 l k + floor(3 l / 2)`.
pub fn stacking_bound(l: usize, k: usize) -> usize {
    3 * l * k + 3 * l / 2
}

/// Partitions `g`, lays out the quotient from its decomposition and stacks
/// the layers. The returned layout has been validated against `g`.
pub fn planar_pipeline(g: &Graph, mode: Mode, assign: Assign) -> Result<PipelineResult> {
    let planar = partition_planar(g, mode)?;
    let p = &planar.partition;
    let layering = p.layering().clone();
    let host_layout = tree_decomposition_layout(p.quotient(), &planar.decomposition)?;
    let layout = partition_queue_layout(g, p, &layering, &host_layout, assign)?;
    let report = validate_queue_layout(g, &layout);
    if !report.is_valid {
        return Err(Error::Internal(format!(
            "assembled layout is invalid: {}",
            report.first_violation.map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    let layered_width = width_against(p, &layering);
    Ok(PipelineResult {
        host_width: planar.decomposition.width(),
        bound: stacking_bound(p.declared_layered_width(), host_layout.queue_count()),
        stripped_edges: planar.augmented.edge_count() - g.edge_count(),
        layered_width,
        host_layout,
        layout,
        planar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn grid_both_modes() {
        let g = families::grid(10, 10);
        for mode in [Mode::Width1, Mode::Tripod] {
            for assign in [Assign::Depth, Assign::Structured] {
                let r = planar_pipeline(&g, mode, assign).unwrap();
                assert!(r.layout.queue_count() <= r.bound, "{mode} {assign}");
                assert!(r.layered_width <= mode.declared_width());
                assert!(r.host_width < mode.max_bag());
            }
        }
    }

    #[test]
    fn small_and_disconnected() {
        for g in [
            Graph::from_edges(0, &[]).unwrap(),
            families::path(1),
            Graph::from_edges(7, &[(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ] {
            let r = planar_pipeline(&g, Mode::Width1, Assign::Depth).unwrap();
            assert_eq!(r.layout.vertex_count(), g.vertex_count());
        }
    }

    #[test]
    fn nonplanar() {
        assert_eq!(
            planar_pipeline(&families::complete(5), Mode::Width1, Assign::Depth).unwrap_err(),
            Error::NonPlanar
        );
    }
}
