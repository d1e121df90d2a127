//! Exhaustive searches for tiny graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const QUEUE_NUMBER_LIMIT: usize = 9;
pub const TREEWIDTH_LIMIT: usize = 12;

struct Search<'a> {
    g: &'a Graph,
    position: Vec<usize>,
    prefix: Vec<usize>,
    // Placed edges as (left position, right position, longest rainbow with
    // this edge outermost).
    placed: Vec<(usize, usize, usize)>,
    best: usize,
    best_ordering: Vec<usize>,
}

// Any graph with an edge needs one queue, so the search stops there.
const FLOOR: usize = 1;

impl Search<'_> {
    fn extend(&mut self, current: usize) {
        let n = self.g.vertex_count();
        let depth = self.prefix.len();
        if depth == n {
            self.best = current;
            self.best_ordering = self.prefix.clone();
            return;
        }
        for v in 0..n {
            if self.best <= FLOOR {
                return;
            }
            if self.position[v] != usize::MAX {
                continue;
            }
            // A reversed ordering has the same rainbows, so only orderings
            // whose first vertex is smaller than their last are completed.
            if depth + 1 == n && n > 1 && self.prefix[0] > v {
                continue;
            }
            let mark = self.placed.len();
            let mut worst = current;
            // New edges end at the last position, so each one is outermost
            // over exactly the placed edges starting to its right.
            let mut lefts: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&u| self.position[u] != usize::MAX)
                .map(|&u| self.position[u])
                .collect();
            lefts.sort_unstable();
            for &a in &lefts {
                let inner = self.placed[..mark]
                    .iter()
                    .filter(|e| e.0 > a)
                    .map(|e| e.2)
                    .max()
                    .unwrap_or(0);
                worst = worst.max(inner + 1);
                self.placed.push((a, depth, inner + 1));
            }
            if worst < self.best {
                self.position[v] = depth;
                self.prefix.push(v);
                self.extend(worst);
                self.prefix.pop();
                self.position[v] = usize::MAX;
            }
            self.placed.truncate(mark);
        }
    }
}

/// Queue-number of `g` together with an ordering that attains it: the
/// smallest largest rainbow over all vertex orderings.
pub fn exact_queue_number_with_ordering(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n > QUEUE_NUMBER_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: QUEUE_NUMBER_LIMIT,
        });
    }
    if g.edge_count() == 0 {
        return Ok((0, (0..n).collect()));
    }
    let mut s = Search {
        g,
        position: vec![usize::MAX; n],
        prefix: Vec::with_capacity(n),
        placed: Vec::new(),
        // Every ordering fits in one queue per edge.
        best: g.edge_count() + 1,
        best_ordering: Vec::new(),
    };
    s.extend(0);
    Ok((s.best, s.best_ordering))
}

pub fn exact_queue_number(g: &Graph) -> Result<usize> {
    exact_queue_number_with_ordering(g).map(|r| r.0)
}

/// Treewidth by dynamic programming over vertex subsets: `tw(S)` is the
/// best width of eliminating `S` first, where eliminating `v` after `S`
/// costs the number of outside vertices reachable from `v` through `S`.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > TREEWIDTH_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: TREEWIDTH_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before = s & !(1 << v);
            if tw[before as usize] >= best {
                continue;
            }
            let q = reach_outside(&adj, before, v, full).count_ones() as usize;
            best = best.min(tw[before as usize].max(q));
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize])
}

/// Vertices outside `s` and `v` joined to `v` by a path through `s`.
fn reach_outside(adj: &[u32], s: u32, v: usize, full: u32) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = seen;
    let mut outside = 0u32;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[x] & !seen;
        seen |= nb;
        outside |= nb & !s;
        frontier |= nb & s;
    }
    outside & full
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::layout::max_rainbow;

    #[test]
    fn closed_forms() {
        assert_eq!(exact_queue_number(&families::path(4)).unwrap(), 1);
        assert_eq!(exact_queue_number(&families::complete(5)).unwrap(), 2);
        assert_eq!(exact_queue_number(&families::cycle(6)).unwrap(), 1);
        assert_eq!(exact_queue_number(&families::complete(9)).unwrap(), 4);
        assert_eq!(exact_queue_number(&Graph::empty(3)).unwrap(), 0);
        assert!(matches!(
            exact_queue_number(&families::path(10)),
            Err(Error::TooLarge { size: 10, limit: 9 })
        ));
    }

    #[test]
    fn best_ordering_attains_the_value() {
        for g in [families::complete(6), families::grid(3, 3), families::cycle(7)] {
            let (q, ord) = exact_queue_number_with_ordering(&g).unwrap();
            assert_eq!(max_rainbow(&g, &ord).unwrap(), q);
        }
    }

    #[test]
    fn treewidths() {
        assert_eq!(exact_treewidth(&families::path(7)).unwrap(), 1);
        assert_eq!(exact_treewidth(&families::complete(4)).unwrap(), 3);
        assert_eq!(exact_treewidth(&families::grid(3, 3)).unwrap(), 3);
        assert_eq!(exact_treewidth(&families::cycle(12)).unwrap(), 2);
        assert_eq!(exact_treewidth(&Graph::empty(4)).unwrap(), 0);
        assert_eq!(exact_treewidth(&families::grid(3, 4)).unwrap(), 3);
        assert!(exact_treewidth(&families::path(13)).is_err());
    }
}
