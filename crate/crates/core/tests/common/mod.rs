//! Checks written from the definitions, kept apart from the library's own
//! validators so that the two can be compared.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use layerq::layout::QueueLayout;
use layerq::oracle::random_triangulation;
use layerq::{BfsTree, Graph, TreeDecomposition};

pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// 100 random triangulations with `n` spread over [50, 2000], then the
/// `k x k` grids for `k = 2..=50`.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 0..100u64 {
        let n = 50 + (i as usize * 1950) / 99;
        out.push(Instance {
            name: format!("tri(n={n}, seed={i})"),
            graph: random_triangulation(n, i).unwrap().graph().clone(),
        });
    }
    for k in 2..=50 {
        out.push(Instance {
            name: format!("grid({k})"),
            graph: layerq::graph::families::grid(k, k),
        });
    }
    out
}

/// Largest number of pairwise nested edges, by dynamic programming over
/// intervals sorted by left end.
pub fn brute_rainbow(g: &Graph, ordering: &[usize]) -> usize {
    let mut pos = vec![0; ordering.len()];
    for (i, &v) in ordering.iter().enumerate() {
        pos[v] = i;
    }
    let mut iv: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    iv.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut best = vec![1usize; iv.len()];
    for i in 0..iv.len() {
        for j in 0..i {
            if iv[j].0 < iv[i].0 && iv[i].1 < iv[j].1 {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Checks a layout against the definition: the ordering is a permutation,
/// the edges are exactly those of `g`, and no queue holds two nested edges.
pub fn check_layout(g: &Graph, layout: &QueueLayout) -> Result<(), String> {
    let n = g.vertex_count();
    let ord = layout.ordering();
    let mut pos = vec![usize::MAX; n];
    if ord.len() != n {
        return Err("ordering length".into());
    }
    for (i, &v) in ord.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(format!("ordering repeats or overflows at {v}"));
        }
        pos[v] = i;
    }
    let mut queues: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    let mut seen = HashSet::new();
    for (q, list) in layout.queues().iter().enumerate() {
        for &(u, v) in list {
            if !g.has_edge(u, v) {
                return Err(format!("extra edge {u}-{v}"));
            }
            seen.insert((u.min(v), u.max(v)));
            queues.entry(q).or_default().push((pos[u].min(pos[v]), pos[u].max(pos[v])));
        }
    }
    if seen.len() != g.edge_count() {
        return Err("some edge is not in any queue".into());
    }
    for (q, mut iv) in queues {
        if iv.len() <= 300 {
            for a in &iv {
                for b in &iv {
                    if a.0 < b.0 && b.1 < a.1 {
                        return Err(format!("queue {q}: {a:?} nests {b:?}"));
                    }
                }
            }
        } else {
            // Sweep by left end; an edge is nested if a strictly earlier
            // left end reaches strictly further right.
            iv.sort_unstable();
            let mut reach_before = 0usize;
            let mut i = 0;
            while i < iv.len() {
                let mut j = i;
                while j < iv.len() && iv[j].0 == iv[i].0 {
                    if iv[j].1 < reach_before {
                        return Err(format!("queue {q}: {:?} is nested", iv[j]));
                    }
                    j += 1;
                }
                reach_before = reach_before.max(iv[j - 1].1);
                i = j;
            }
        }
    }
    Ok(())
}

/// Width of `td` as a decomposition of `g`, or the first broken property.
pub fn check_td(g: &Graph, td: &TreeDecomposition) -> Result<usize, String> {
    let nodes = td.bags.len();
    let t = &td.tree;
    if nodes == 0 || t.vertex_count() != nodes || t.edge_count() + 1 != nodes || !t.is_connected() {
        return Err("decomposition tree is not a tree".into());
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (x, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.vertex_count() {
                return Err(format!("bag {x} names vertex {v}"));
            }
            holders[v].push(x);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            return Err(format!("vertex {v} is in no bag"));
        }
        let set: HashSet<usize> = h.iter().copied().collect();
        let mut reached = HashSet::from([h[0]]);
        let mut stack = vec![h[0]];
        while let Some(x) = stack.pop() {
            for &y in t.neighbors(x) {
                if set.contains(&y) && reached.insert(y) {
                    stack.push(y);
                }
            }
        }
        if reached.len() != set.len() {
            return Err(format!("bags holding {v} are not connected"));
        }
    }
    for &(u, v) in g.edges() {
        let hv: HashSet<usize> = holders[v].iter().copied().collect();
        if !holders[u].iter().any(|x| hv.contains(x)) {
            return Err(format!("edge {u}-{v} is in no bag"));
        }
    }
    Ok(td.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1))
}

/// Largest number of vertices of one part inside one layer.
pub fn layered_width(part_of: &[usize], layer_of: &[usize]) -> usize {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..part_of.len() {
        *count.entry((part_of[v], layer_of[v])).or_default() += 1;
    }
    count.into_values().max().unwrap_or(0)
}

/// Layers are a valid layering of `g`: every edge spans at most one step.
pub fn is_layering(g: &Graph, layer_of: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| layer_of[u].abs_diff(layer_of[v]) <= 1)
}

/// Graph obtained by contracting every part.
pub fn quotient(g: &Graph, part_of: &[usize], parts: usize) -> Graph {
    let edges: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (part_of[u], part_of[v]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    Graph::from_edges(parts, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

/// A vertical path: listed vertices ordered by depth, each the tree parent
/// of the next.
pub fn is_vertical(tree: &BfsTree, vertices: &[usize]) -> bool {
    let mut vs = vertices.to_vec();
    vs.sort_unstable_by_key(|&v| tree.depth[v]);
    !vs.is_empty() && vs.windows(2).all(|w| tree.parent[w[1]] == Some(w[0]))
}

/// Subgraph induced by `vertices`, relabelled in listed order.
pub fn induced(g: &Graph, vertices: &[usize]) -> Graph {
    let index: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))
        .collect();
    Graph::from_edges(vertices.len(), &edges).unwrap()
}
