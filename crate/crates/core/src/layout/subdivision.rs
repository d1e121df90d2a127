//! Queue layouts of graphs whose edges are short paths in a laid-out base
//! graph, with low-degree internal vertices.
//!
//! A target edge `vw` (with `v` first in the base ordering) witnessed by
//! the base path `v = x0, x1, ..., xL = w` gets the queue named by `L` and,
//! for every path edge, its direction in the ordering, its base queue and
//! its colour in an edge colouring that is proper at vertices of degree at
//! most `delta`. Two target edges with the same name cannot nest.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::QueueLayout;

/// A target edge together with the base path that witnesses it (from one
/// endpoint to the other).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub path: Vec<usize>,
}

impl Witness {
    pub fn endpoints(&self) -> (usize, usize) {
        let (a, b) = (self.path[0], *self.path.last().expect("non-empty path"));
        (a.min(b), a.max(b))
    }
}

/// Colours edges in id order with the smallest colour not yet used at an
/// endpoint of degree at most `delta`. Uses at most `2 * delta - 1`
/// colours. Returns the colour per edge (indexed like [`Graph::edges`]) and
/// the number of colours.
pub fn greedy_edge_colouring(g: &Graph, delta: usize) -> (Vec<usize>, usize) {
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    let mut colour = Vec::with_capacity(g.edge_count());
    let mut count = 0;
    for &(u, v) in g.edges() {
        let low: Vec<usize> = [u, v].into_iter().filter(|&x| g.degree(x) <= delta).collect();
        let c = (0..)
            .find(|c| low.iter().all(|&x| !used[x].contains(c)))
            .expect("some colour is free");
        for &x in &low {
            used[x].push(c);
        }
        colour.push(c);
        count = count.max(c + 1);
    }
    (colour, count)
}

/// `sum over L = 1..=c of (2 k colours)^(L + 1)`, saturating.
pub fn path_power_bound(k: usize, colours: usize, c: usize) -> u128 {
    let base = (2 * k * colours) as u128;
    let mut total: u128 = 0;
    let mut power = base;
    for _ in 1..=c {
        power = power.saturating_mul(base);
        total = total.saturating_add(power);
    }
    total
}

/// Every pair of base vertices joined by a path of length at most `c`
/// whose internal vertices have degree at most `delta`, each with a
/// shortest such path, in order of endpoints.
pub fn path_power_targets(base: &Graph, c: usize, delta: usize) -> Vec<Witness> {
    let n = base.vertex_count();
    let mut out = Vec::new();
    let mut dist = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for s in 0..n {
        let mut seen = vec![s];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == c || (x != s && base.degree(x) > delta) {
                continue;
            }
            for &y in base.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    prev[y] = x;
                    seen.push(y);
                    queue.push_back(y);
                }
            }
        }
        let mut ends: Vec<usize> = seen.iter().copied().filter(|&t| t > s).collect();
        ends.sort_unstable();
        for t in ends {
            let mut path = vec![t];
            while *path.last().expect("non-empty") != s {
                path.push(prev[*path.last().expect("non-empty")]);
            }
            path.reverse();
            out.push(Witness { path });
        }
        for v in seen {
            dist[v] = usize::MAX;
        }
    }
    out
}

/// Path length and `(upward, base queue, colour)` per path edge.
type Name = (usize, Vec<(bool, usize, usize)>);

/// A layout of the target graph built from the base layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPowerLayout {
    pub graph: Graph,
    pub layout: QueueLayout,
    /// Colours used by the edge colouring of the base graph.
    pub colours: usize,
    /// Queue bound for this base layout, colouring and `c`.
    pub bound: u128,
}

/// Lays out the graph whose edges are the witnessed pairs, keeping the
/// base ordering.
pub fn path_power_layout(
    base: &Graph,
    base_layout: &QueueLayout,
    c: usize,
    delta: usize,
    targets: &[Witness],
) -> Result<PathPowerLayout> {
    if c == 0 || delta < 2 {
        return Err(Error::BadParameters("need c >= 1 and delta >= 2".into()));
    }
    if base_layout.vertex_count() != base.vertex_count() {
        return Err(Error::HostMismatch("base layout and base graph differ in size".into()));
    }
    let (colour, colours) = greedy_edge_colouring(base, delta);
    let mut names: BTreeMap<Name, usize> = BTreeMap::new();
    let mut keyed = Vec::with_capacity(targets.len());
    for w in targets {
        let path = &w.path;
        let (u, v) = (path[0], *path.last().unwrap_or(&path[0]));
        let bad = |why: &str| Error::BadWitness(u, v, why.to_string());
        if path.len() < 2 || path.len() - 1 > c {
            return Err(bad("path length out of range"));
        }
        if u == v {
            return Err(bad("endpoints coincide"));
        }
        if path[1..path.len() - 1].iter().any(|&x| base.degree(x) > delta) {
            return Err(bad("internal vertex of high degree"));
        }
        // Walk from the endpoint that comes first in the base ordering.
        let forward = base_layout.position(u) < base_layout.position(v);
        let steps: Vec<usize> = if forward {
            path.clone()
        } else {
            path.iter().rev().copied().collect()
        };
        let mut name = Vec::with_capacity(steps.len() - 1);
        for s in steps.windows(2) {
            let e = base.edge_index(s[0], s[1]).ok_or_else(|| bad("not a path of the base graph"))?;
            let q = base_layout
                .queue_of_edge(s[0], s[1])
                .ok_or_else(|| bad("base edge missing from the base layout"))?;
            let up = base_layout.position(s[0]) < base_layout.position(s[1]);
            name.push((up, q, colour[e]));
        }
        let key = (steps.len() - 1, name);
        let next = names.len();
        let id = *names.entry(key).or_insert(next);
        keyed.push((w.endpoints(), id));
    }
    let target_edges: Vec<(usize, usize)> = keyed.iter().map(|p| p.0).collect();
    let graph = Graph::from_edges(base.vertex_count(), &target_edges)?;
    let layout = QueueLayout::new(base_layout.ordering().to_vec(), keyed)?;
    Ok(PathPowerLayout {
        graph,
        layout,
        colours,
        bound: path_power_bound(base_layout.queue_count(), colours, c),
    })
}
