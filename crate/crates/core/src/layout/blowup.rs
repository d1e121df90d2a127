//! Layouts of blowups of one-queue graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{assign_queues_by_depth, QueueLayout};

/// Replaces every host vertex `x` by the block `blocks[x]` of vertices of
/// `blown` (block members keep their listed order) and assigns queues by
/// depth. Every edge of `blown` must join two blocks whose host vertices
/// are adjacent; with blocks of size at most `l` the result has at most
/// `l` queues.
pub fn blowup_layout(host: &QueueLayout, blocks: &[Vec<usize>], blown: &Graph) -> Result<QueueLayout> {
    if host.queue_count() > 1 {
        return Err(Error::NotAOneQueueHost(host.queue_count()));
    }
    if blocks.len() != host.vertex_count() {
        return Err(Error::HostMismatch(format!(
            "{} blocks for {} host vertices",
            blocks.len(),
            host.vertex_count()
        )));
    }
    let n = blown.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    for (x, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= n || block_of[v] != usize::MAX {
                return Err(Error::HostMismatch(format!("vertex {v} repeated or out of range")));
            }
            block_of[v] = x;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::HostMismatch(format!("vertex {v} is in no block")));
    }
    for &(u, v) in blown.edges() {
        let (x, y) = (block_of[u], block_of[v]);
        if x == y || host.queue_of_edge(x, y).is_none() {
            return Err(Error::NotABlowup(u, v));
        }
    }
    let ordering: Vec<usize> = host
        .ordering()
        .iter()
        .flat_map(|&x| blocks[x].iter().copied())
        .collect();
    assign_queues_by_depth(blown, &ordering)
}
