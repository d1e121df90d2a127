//! Queue layouts of a graph from a layered partition and a queue layout of
//! its quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bfs::Layering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{assign_queues_by_depth, complete_graph_layout, nesting_depths, QueueLayout};
use crate::partition::{width_against, Partition};

/// How edges are put into queues once the ordering is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assign {
    /// Nesting depth; as few queues as the ordering allows.
    #[default]
    Depth,
    /// Separate queue blocks for the four edge classes (same layer and
    /// part, same layer, consecutive layers and part, consecutive layers).
    Structured,
}

impl fmt::Display for Assign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Assign::Depth => "depth",
            Assign::Structured => "structured",
        })
    }
}

impl FromStr for Assign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "depth" => Ok(Assign::Depth),
            "structured" => Ok(Assign::Structured),
            other => Err(Error::BadParameters(format!("unknown assignment {other:?}"))),
        }
    }
}

fn check_inputs(g: &Graph, partition: &Partition, layering: &Layering, host: &QueueLayout) -> Result<usize> {
    if !layering.is_valid_for(g) {
        return Err(Error::BadParameters("layering is not valid for the graph".into()));
    }
    if partition.vertex_count() != g.vertex_count() {
        return Err(Error::BadParameters("partition and graph sizes differ".into()));
    }
    let measured = width_against(partition, layering);
    let declared = partition.declared_layered_width();
    if measured > declared {
        return Err(Error::WidthMismatch { declared, measured });
    }
    if host.vertex_count() != partition.part_count() {
        return Err(Error::HostMismatch(format!(
            "host layout has {} vertices for {} parts",
            host.vertex_count(),
            partition.part_count()
        )));
    }
    for &(u, v) in g.edges() {
        let (x, y) = (partition.part_of(u), partition.part_of(v));
        if x != y && host.queue_of_edge(x, y).is_none() {
            return Err(Error::HostMismatch(format!(
                "edge {u}-{v} joins parts {x} and {y}, which are not adjacent in the host"
            )));
        }
    }
    Ok(declared.max(1))
}

/// Layers in order; inside a layer, vertices grouped by part in host
/// order; inside a group, by vertex id.
pub fn partition_ordering(partition: &Partition, layering: &Layering, host: &QueueLayout) -> Vec<usize> {
    let mut ordering: Vec<usize> = (0..partition.vertex_count()).collect();
    ordering.sort_unstable_by_key(|&v| (layering.layer_of(v), host.position(partition.part_of(v)), v));
    ordering
}

/// Queue layout of `g` on [`partition_ordering`]. With layered width `l`
/// and a `k`-queue host both strategies stay within `3lk + floor(3l/2)`
/// queues.
pub fn partition_queue_layout(
    g: &Graph,
    partition: &Partition,
    layering: &Layering,
    host: &QueueLayout,
    assign: Assign,
) -> Result<QueueLayout> {
    let l = check_inputs(g, partition, layering, host)?;
    let ordering = partition_ordering(partition, layering, host);
    match assign {
        Assign::Depth => assign_queues_by_depth(g, &ordering),
        Assign::Structured => structured(g, partition, layering, host, ordering, l),
    }
}

fn structured(
    g: &Graph,
    partition: &Partition,
    layering: &Layering,
    host: &QueueLayout,
    ordering: Vec<usize>,
    l: usize,
) -> Result<QueueLayout> {
    let n = g.vertex_count();
    let k = host.queue_count();
    let mut position = vec![0; n];
    for (i, &v) in ordering.iter().enumerate() {
        position[v] = i;
    }
    // Rank of each vertex inside its (part, layer) group.
    let mut slot = vec![0; n];
    for i in 1..n {
        let (a, b) = (ordering[i - 1], ordering[i]);
        let same = partition.part_of(a) == partition.part_of(b)
            && layering.layer_of(a) == layering.layer_of(b);
        slot[b] = if same { slot[a] + 1 } else { 0 };
    }
    let clique = complete_graph_layout(l)?;

    // Class blocks: intra-level intra-part, then k blocks of l for
    // intra-level inter-part, one block of l for inter-level intra-part,
    // then 2k blocks of l for inter-level inter-part.
    let base2 = l / 2;
    let base3 = base2 + k * l;
    let base4 = base3 + l;
    // (first queue of the class, blowup class id)
    let mut class_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let (u, v) = if position[u] < position[v] { (u, v) } else { (v, u) };
        let (x, y) = (partition.part_of(u), partition.part_of(v));
        let same_layer = layering.layer_of(u) == layering.layer_of(v);
        let class = match (same_layer, x == y) {
            (true, true) => {
                let q = clique
                    .queue_of_edge(slot[u], slot[v])
                    .ok_or_else(|| Error::Internal("group larger than the layered width".into()))?;
                (q, None)
            }
            (true, false) => {
                let a = host.queue_of_edge(x, y).expect("checked host edge");
                (base2 + a * l, Some(2 + a))
            }
            (false, true) => (base3, Some(2 + k)),
            (false, false) => {
                let a = host.queue_of_edge(x, y).expect("checked host edge");
                let dir = usize::from(host.position(y) < host.position(x));
                let block = 2 * a + dir;
                (base4 + block * l, Some(3 + k + block))
            }
        };
        class_of.push(class);
    }

    // Inside every blowup class, nesting depth stays below l.
    let edges = g.edges();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); 3 + 3 * k];
    for (i, c) in class_of.iter().enumerate() {
        if let Some(id) = c.1 {
            members[id].push(i);
        }
    }
    let mut queue: Vec<usize> = class_of.iter().map(|c| c.0).collect();
    for group in members.iter().filter(|m| !m.is_empty()) {
        let iv: Vec<(usize, usize)> = group
            .iter()
            .map(|&i| {
                let (a, b) = (position[edges[i].0], position[edges[i].1]);
                (a.min(b), a.max(b))
            })
            .collect();
        let depth = nesting_depths(&iv, n);
        for (&i, &d) in group.iter().zip(&depth) {
            if d >= l {
                return Err(Error::Internal(format!(
                    "edge class needs more than {l} queues"
                )));
            }
            queue[i] += d;
        }
    }
    QueueLayout::new(ordering, edges.iter().copied().zip(queue).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::layout::{max_rainbow, validate_queue_layout};
    use crate::partition::Part;

    fn grid_columns(n: usize) -> (Graph, Partition, Layering) {
        let g = families::grid(n, n);
        let rows = Layering::from_layer_of((0..n * n).map(|v| v / n).collect());
        let parts = (0..n)
            .map(|x| Part::plain((0..n).map(|y| y * n + x).collect()))
            .collect();
        let p = Partition::new(&g, parts, rows.clone(), 1).unwrap();
        (g, p, rows)
    }

    #[test]
    fn grid_with_column_parts() {
        let (g, p, rows) = grid_columns(7);
        assert_eq!(p.quotient(), &families::path(7));
        let host = QueueLayout::single_queue(p.quotient(), (0..7).collect()).unwrap();
        for assign in [Assign::Depth, Assign::Structured] {
            let l = partition_queue_layout(&g, &p, &rows, &host, assign).unwrap();
            assert!(validate_queue_layout(&g, &l).is_valid);
            assert!(l.queue_count() <= 4, "{assign}: {}", l.queue_count());
        }
    }

    #[test]
    fn edgeless_quotient() {
        let g = families::path(6);
        let layering = Layering::from_layer_of((0..6).collect());
        let p = Partition::new(&g, vec![Part::plain((0..6).collect())], layering.clone(), 1).unwrap();
        let host = QueueLayout::new(vec![0], Vec::new()).unwrap();
        for assign in [Assign::Depth, Assign::Structured] {
            let l = partition_queue_layout(&g, &p, &layering, &host, assign).unwrap();
            assert!(l.queue_count() <= 1);
            assert!(validate_queue_layout(&g, &l).is_valid);
        }
    }

    #[test]
    fn ordering_is_layer_then_host() {
        let (g, p, rows) = grid_columns(5);
        let host = QueueLayout::single_queue(p.quotient(), vec![4, 3, 2, 1, 0]).unwrap();
        let ord = partition_ordering(&p, &rows, &host);
        assert_eq!(&ord[..5], &[4, 3, 2, 1, 0]);
        let l = partition_queue_layout(&g, &p, &rows, &host, Assign::Depth).unwrap();
        assert_eq!(l.queue_count(), max_rainbow(&g, &ord).unwrap());
    }

    #[test]
    fn mismatches() {
        let (g, p, rows) = grid_columns(4);
        let host = QueueLayout::new((0..3).collect(), Vec::new()).unwrap();
        assert!(matches!(
            partition_queue_layout(&g, &p, &rows, &host, Assign::Depth),
            Err(Error::HostMismatch(_))
        ));
        let cols = Layering::from_layer_of((0..16).map(|v| v % 4).collect());
        let host = QueueLayout::single_queue(p.quotient(), (0..4).collect()).unwrap();
        assert!(matches!(
            partition_queue_layout(&g, &p, &cols, &host, Assign::Depth),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn wide_parts_structured() {
        // Pairs of columns per part: layered width 2 on rows.
        let n = 8;
        let g = families::grid(n, n);
        let rows = Layering::from_layer_of((0..n * n).map(|v| v / n).collect());
        let parts = (0..n / 2)
            .map(|x| {
                Part::plain(
                    (0..n)
                        .flat_map(|y| [y * n + 2 * x, y * n + 2 * x + 1])
                        .collect(),
                )
            })
            .collect();
        let p = Partition::new(&g, parts, rows.clone(), 2).unwrap();
        let host = QueueLayout::single_queue(p.quotient(), (0..n / 2).collect()).unwrap();
        for assign in [Assign::Depth, Assign::Structured] {
            let l = partition_queue_layout(&g, &p, &rows, &host, assign).unwrap();
            assert!(validate_queue_layout(&g, &l).is_valid);
            assert!(l.queue_count() <= 3 * 2 + 3);
        }
        assert!("sideways".parse::<Assign>().is_err());
    }
}
