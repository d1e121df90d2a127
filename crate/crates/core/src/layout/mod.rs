//! Queue layouts: a vertex ordering plus a queue index per edge such that
//! no two edges of one queue nest.

mod blowup;
mod colouring;
mod host;
mod pipeline;
mod product;
mod stacking;
mod subdivision;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::json_error;

pub use blowup::blowup_layout;
pub use colouring::{low_treewidth_colouring, Colouring, ColourClass};
pub use host::{chordal_completion, host_ordering, tree_decomposition_layout};
pub use pipeline::{planar_pipeline, stacking_bound, PipelineResult};
pub use product::{product_injection, verify_injection, ProductInjection};
pub use stacking::{partition_ordering, partition_queue_layout, Assign};
pub use subdivision::{
    greedy_edge_colouring, path_power_bound, path_power_layout, path_power_targets, PathPowerLayout, Witness,
};

/// A vertex ordering of some graph with a queue index for every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueueLayout {
    ordering: Vec<usize>,
    position: Vec<usize>,
    /// Edges as `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    queue_of: Vec<usize>,
    queue_count: usize,
}

#[derive(Serialize, Deserialize)]
struct LayoutWire {
    ordering: Vec<usize>,
    queues: Vec<Vec<(usize, usize)>>,
}

fn inverse(ordering: &[usize]) -> Result<Vec<usize>> {
    let mut position = vec![usize::MAX; ordering.len()];
    for (i, &v) in ordering.iter().enumerate() {
        if v >= ordering.len() || position[v] != usize::MAX {
            return Err(Error::InvalidLayout(format!(
                "ordering is not a permutation (vertex {v})"
            )));
        }
        position[v] = i;
    }
    Ok(position)
}

impl QueueLayout {
    /// Builds a layout from an ordering and `(edge, queue)` pairs. Queue
    /// indices are renumbered to `0..count` keeping their relative order.
    pub fn new(ordering: Vec<usize>, assignment: Vec<((usize, usize), usize)>) -> Result<Self> {
        let position = inverse(&ordering)?;
        let n = ordering.len();
        let mut pairs: Vec<((usize, usize), usize)> = assignment
            .into_iter()
            .map(|((u, v), q)| ((u.min(v), u.max(v)), q))
            .collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidLayout(format!(
                    "edge {:?} assigned twice",
                    w[0].0
                )));
            }
        }
        if let Some(&((u, v), _)) = pairs.iter().find(|((u, v), _)| u == v || *v >= n) {
            return Err(Error::InvalidLayout(format!("bad edge ({u}, {v})")));
        }
        let mut used: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        used.sort_unstable();
        used.dedup();
        let edges = pairs.iter().map(|p| p.0).collect();
        let queue_of = pairs
            .iter()
            .map(|p| used.binary_search(&p.1).expect("queue listed"))
            .collect();
        Ok(QueueLayout {
            ordering,
            position,
            edges,
            queue_of,
            queue_count: used.len(),
        })
    }

    /// Every edge of `g` in queue 0.
    pub fn single_queue(g: &Graph, ordering: Vec<usize>) -> Result<Self> {
        Self::new(ordering, g.edges().iter().map(|&e| (e, 0)).collect())
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn vertex_count(&self) -> usize {
        self.ordering.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Queue of the `i`-th edge of [`QueueLayout::edges`].
    pub fn queue_of(&self, i: usize) -> usize {
        self.queue_of[i]
    }

    pub fn queue_map(&self) -> &[usize] {
        &self.queue_of
    }

    /// Queue of edge `u v`, if the layout has it.
    pub fn queue_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .binary_search(&(u.min(v), u.max(v)))
            .ok()
            .map(|i| self.queue_of[i])
    }

    pub fn queue_count(&self) -> usize {
        self.queue_count
    }

    /// Edges grouped by queue.
    pub fn queues(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.queue_count];
        for (i, &e) in self.edges.iter().enumerate() {
            out[self.queue_of[i]].push(e);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let wire = LayoutWire {
            ordering: self.ordering.clone(),
            queues: self.queues(),
        };
        serde_json::to_string_pretty(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: LayoutWire = serde_json::from_str(text).map_err(json_error)?;
        let assignment = wire
            .queues
            .into_iter()
            .enumerate()
            .flat_map(|(q, es)| es.into_iter().map(move |e| (e, q)))
            .collect();
        Self::new(wire.ordering, assignment)
    }

    /// The ordering with each edge as a `(left, right)` position pair.
    fn intervals(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.position[u], self.position[v]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Position pairs `(left, right)` of the edges of `g` under `ordering`.
fn intervals(g: &Graph, position: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (position[u], position[v]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Size of the largest set of pairwise nested edges under `ordering`:
/// sort by left end ascending (right end ascending on ties) and take the
/// longest strictly decreasing run of right ends.
pub fn max_rainbow(g: &Graph, ordering: &[usize]) -> Result<usize> {
    let position = inverse(ordering)?;
    if position.len() != g.vertex_count() {
        return Err(Error::InvalidLayout("ordering length differs from the graph".into()));
    }
    Ok(rainbow_of_intervals(intervals(g, &position)))
}

pub(crate) fn rainbow_of_intervals(mut iv: Vec<(usize, usize)>) -> usize {
    iv.sort_unstable();
    // tails[k] = largest possible last right end of a decreasing run of
    // length k + 1; kept strictly decreasing.
    let mut tails: Vec<usize> = Vec::new();
    for &(_, r) in &iv {
        let k = tails.partition_point(|&t| t > r);
        if k == tails.len() {
            tails.push(r);
        } else {
            tails[k] = r;
        }
    }
    tails.len()
}

/// Prefix-maximum tree over positions, queried for the largest value at
/// positions strictly greater than a bound.
struct SuffixMax {
    tree: Vec<usize>,
}

impl SuffixMax {
    fn new(n: usize) -> Self {
        SuffixMax { tree: vec![0; n + 1] }
    }

    /// Records `value` at position `p`.
    fn insert(&mut self, p: usize, value: usize) {
        let n = self.tree.len() - 1;
        let mut i = n - p;
        while i <= n {
            self.tree[i] = self.tree[i].max(value);
            i += i & i.wrapping_neg();
        }
    }

    /// Largest value recorded at a position `> p`.
    fn query_above(&self, p: usize) -> usize {
        let n = self.tree.len() - 1;
        let mut i = n - p - 1;
        let mut best = 0;
        while i > 0 {
            best = best.max(self.tree[i]);
            i -= i & i.wrapping_neg();
        }
        best
    }
}

/// Queue of each interval = number of intervals in the longest chain of
/// intervals strictly enclosing it. Same-depth intervals never nest.
pub(crate) fn nesting_depths(iv: &[(usize, usize)], n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..iv.len()).collect();
    order.sort_unstable_by_key(|&i| iv[i]);
    let mut depth = vec![0; iv.len()];
    let mut fen = SuffixMax::new(n);
    let mut i = 0;
    while i < order.len() {
        let left = iv[order[i]].0;
        let mut j = i;
        while j < order.len() && iv[order[j]].0 == left {
            // Stored values are depth + 1 so that 0 means "none".
            depth[order[j]] = fen.query_above(iv[order[j]].1);
            j += 1;
        }
        for &e in &order[i..j] {
            fen.insert(iv[e].1, depth[e] + 1);
        }
        i = j;
    }
    depth
}

/// Puts every edge in the queue given by its nesting depth; uses exactly
/// [`max_rainbow`] queues for the ordering.
pub fn assign_queues_by_depth(g: &Graph, ordering: &[usize]) -> Result<QueueLayout> {
    let position = inverse(ordering)?;
    if position.len() != g.vertex_count() {
        return Err(Error::InvalidLayout("ordering length differs from the graph".into()));
    }
    let iv = intervals(g, &position);
    let depth = nesting_depths(&iv, g.vertex_count());
    QueueLayout::new(
        ordering.to_vec(),
        g.edges().iter().copied().zip(depth).collect(),
    )
}

/// What makes a layout invalid for a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LayoutViolation {
    OrderingLength { expected: usize, found: usize },
    MissingEdge(usize, usize),
    ExtraEdge(usize, usize),
    /// `outer` strictly encloses `inner` and both are in `queue`.
    Nested {
        queue: usize,
        outer: (usize, usize),
        inner: (usize, usize),
    },
}

impl fmt::Display for LayoutViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayoutViolation::OrderingLength { expected, found } => {
                write!(f, "ordering has {found} vertices, graph has {expected}")
            }
            LayoutViolation::MissingEdge(u, v) => write!(f, "edge {u}-{v} has no queue"),
            LayoutViolation::ExtraEdge(u, v) => write!(f, "layout edge {u}-{v} is not in the graph"),
            LayoutViolation::Nested { queue, outer, inner } => write!(
                f,
                "edges {}-{} and {}-{} nest in queue {queue}",
                outer.0, outer.1, inner.0, inner.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutReport {
    pub is_valid: bool,
    pub queue_count: usize,
    pub first_violation: Option<LayoutViolation>,
}

const PAIRWISE_LIMIT: usize = 10_000;

/// Checks that the layout covers exactly the edges of `g` and that no
/// queue contains two nested edges. Small layouts are checked pairwise,
/// larger ones by a sweep per queue.
pub fn validate_queue_layout(g: &Graph, layout: &QueueLayout) -> LayoutReport {
    let report = |v: Option<LayoutViolation>| LayoutReport {
        is_valid: v.is_none(),
        queue_count: layout.queue_count(),
        first_violation: v,
    };
    if layout.vertex_count() != g.vertex_count() {
        return report(Some(LayoutViolation::OrderingLength {
            expected: g.vertex_count(),
            found: layout.vertex_count(),
        }));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| layout.queue_of_edge(u, v).is_none()) {
        return report(Some(LayoutViolation::MissingEdge(u, v)));
    }
    if let Some(&(u, v)) = layout.edges().iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return report(Some(LayoutViolation::ExtraEdge(u, v)));
    }
    let iv = layout.intervals();
    let named = |queue: usize, outer: usize, inner: usize| {
        Some(LayoutViolation::Nested {
            queue,
            outer: layout.edges[outer],
            inner: layout.edges[inner],
        })
    };
    if layout.edges.len() <= PAIRWISE_LIMIT {
        for a in 0..iv.len() {
            for b in 0..iv.len() {
                if layout.queue_of[a] == layout.queue_of[b]
                    && iv[a].0 < iv[b].0
                    && iv[b].1 < iv[a].1
                {
                    return report(named(layout.queue_of[a], a, b));
                }
            }
        }
        return report(None);
    }
    let mut order: Vec<usize> = (0..iv.len()).collect();
    order.sort_unstable_by_key(|&i| (layout.queue_of[i], iv[i].0, iv[i].1));
    let mut i = 0;
    while i < order.len() {
        let q = layout.queue_of[order[i]];
        // Edge with the largest right end among strictly smaller left ends.
        let mut widest: Option<usize> = None;
        while i < order.len() && layout.queue_of[order[i]] == q {
            let left = iv[order[i]].0;
            let mut j = i;
            while j < order.len() && layout.queue_of[order[j]] == q && iv[order[j]].0 == left {
                if let Some(w) = widest {
                    if iv[order[j]].1 < iv[w].1 {
                        return report(named(q, w, order[j]));
                    }
                }
                j += 1;
            }
            let last = order[j - 1];
            if widest.is_none_or(|w| iv[last].1 > iv[w].1) {
                widest = Some(last);
            }
            i = j;
        }
    }
    report(None)
}

/// `K_l` on its natural order: edge lengths `2q + 1` and `2q + 2` share
/// queue `q`, for `floor(l / 2)` queues.
pub fn complete_graph_layout(l: usize) -> Result<QueueLayout> {
    if l == 0 {
        return Err(Error::BadParameters("clique size must be positive".into()));
    }
    let mut assignment = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            assignment.push(((i, j), (j - i - 1) / 2));
        }
    }
    QueueLayout::new((0..l).collect(), assignment)
}

/// One-queue layout of the `n x n` grid (vertex `y * n + x`), ordered by
/// `x + y` and then by `x`.
pub fn grid_layout(n: usize) -> Result<QueueLayout> {
    if n == 0 {
        return Err(Error::BadParameters("grid side must be positive".into()));
    }
    let g = crate::graph::families::grid(n, n);
    let mut ordering: Vec<usize> = (0..n * n).collect();
    ordering.sort_unstable_by_key(|&v| (v % n + v / n, v % n));
    QueueLayout::single_queue(&g, ordering)
}
