//! Trading layered width for quotient treewidth, and turning a partition
//! into a layered tree-decomposition of the graph itself.

use crate::bfs::Layering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{layered_width, Part, Partition, TreeDecomposition};

/// Splits every part of layered width `l` into at most `l` slots: inside
/// each layer the members of a part are sorted by id and the `s`-th one
/// goes to slot `s`. Each bag is replaced by all slots of its parts, so the
/// new bags have at most `l` times as many entries.
///
/// Slots that end up empty are dropped; new part ids list the slots of part
/// 0 first, then those of part 1 and so on.
pub fn widen_to_width1(
    g: &Graph,
    partition: &Partition,
    td: &TreeDecomposition,
) -> Result<(Partition, TreeDecomposition)> {
    let declared = partition.declared_layered_width();
    let layering = partition.layering();
    let measured = partition.measured_layered_width();
    if measured > declared {
        return Err(Error::WidthMismatch { declared, measured });
    }
    let l = declared.max(1);
    let k = partition.part_count();

    let mut slot_of = vec![0usize; partition.vertex_count()];
    let mut used = vec![false; k * l];
    for (a, part) in partition.parts().iter().enumerate() {
        let mut members = part.vertices.clone();
        members.sort_unstable_by_key(|&v| (layering.layer_of(v), v));
        let mut prev_layer = usize::MAX;
        let mut slot = 0;
        for v in members {
            let layer = layering.layer_of(v);
            if layer != prev_layer {
                prev_layer = layer;
                slot = 0;
            }
            slot_of[v] = slot;
            used[a * l + slot] = true;
            slot += 1;
        }
    }
    let mut new_id = vec![usize::MAX; k * l];
    let mut count = 0;
    for (i, &u) in used.iter().enumerate() {
        if u {
            new_id[i] = count;
            count += 1;
        }
    }
    let mut groups = vec![Vec::new(); count];
    for v in 0..partition.vertex_count() {
        groups[new_id[partition.part_of(v) * l + slot_of[v]]].push(v);
    }
    let parts = groups.into_iter().map(Part::plain).collect();
    let widened = Partition::new(g, parts, layering.clone(), 1)?;

    let bags = td
        .bags
        .iter()
        .map(|bag| {
            bag.iter()
                .flat_map(|&a| (a * l..(a + 1) * l).map(|i| new_id[i]))
                .filter(|&x| x != usize::MAX)
                .collect()
        })
        .collect();
    let td = TreeDecomposition::new(td.tree.edges(), bags)?;
    Ok((widened, td))
}

/// Replaces every part in every bag of `td` by its vertices, giving a
/// tree-decomposition of `g` whose bags meet each layer in at most
/// `(k + 1) * l` vertices (`k + 1` the largest bag, `l` the layered width).
pub fn layered_decomposition(partition: &Partition, td: &TreeDecomposition) -> Result<TreeDecomposition> {
    let bags = td
        .bags
        .iter()
        .map(|bag| {
            if let Some(&a) = bag.iter().find(|&&a| a >= partition.part_count()) {
                return Err(Error::InvalidDecomposition(format!("bag names missing part {a}")));
            }
            Ok(bag
                .iter()
                .flat_map(|&a| partition.part(a).vertices.iter().copied())
                .collect())
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    TreeDecomposition::new(td.tree.edges(), bags)
}

/// Largest number of vertices any bag has in a single layer.
pub fn bag_layered_width(td: &TreeDecomposition, layering: &Layering) -> usize {
    let mut count = vec![0usize; layering.layer_count()];
    let mut best = 0;
    for bag in &td.bags {
        for &v in bag {
            let l = layering.layer_of(v);
            count[l] += 1;
            best = best.max(count[l]);
        }
        for &v in bag {
            count[layering.layer_of(v)] = 0;
        }
    }
    best
}

/// Layered width of `partition` against an arbitrary layering.
pub fn width_against(partition: &Partition, layering: &Layering) -> usize {
    layered_width(partition.part_map(), partition.part_count(), layering)
}
