//! Left-right planarity test with embedding extraction.
//!
//! Iterative version of the left-right algorithm: a DFS orientation computes
//! low points and nesting depths, a second DFS checks the conflict-pair
//! constraints, and a third DFS turns the computed sides into a rotation
//! system. Darts of the input graph stand in for oriented edges.

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ordered_adjs: Vec<Vec<usize>>,
    reference: Vec<usize>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    roots: Vec<usize>,
    ind: Vec<usize>,
    skip_init: Vec<bool>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let dc = g.dart_count();
        State {
            g,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            oriented: vec![false; dc],
            lowpt: vec![0; dc],
            lowpt2: vec![0; dc],
            nesting_depth: vec![0; dc],
            ordered_adjs: vec![Vec::new(); n],
            reference: vec![NONE; dc],
            side: vec![1; dc],
            stack: Vec::new(),
            next_pair_id: 0,
            stack_bottom: vec![NONE; dc],
            lowpt_edge: vec![NONE; dc],
            roots: Vec::new(),
            ind: vec![0; n],
            skip_init: vec![false; dc],
        }
    }

    fn head(&self, e: usize) -> usize {
        self.g.dart_head(e)
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        ConflictPair { id, left, right }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn dfs_orientation(&mut self, root: usize) {
        let g = self.g;
        let mut ind = std::mem::take(&mut self.ind);
        let mut skip_init = std::mem::take(&mut self.skip_init);
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let darts = g.darts_of(v);
            while darts.start + ind[v] < darts.end {
                let vw = darts.start + ind[v];
                let w = g.dart_head(vw);
                if !skip_init[vw] {
                    if self.oriented[vw] || self.oriented[g.twin(vw)] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[vw] = true;
                        break;
                    } else {
                        self.lowpt[vw] = self.height[w];
                    }
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting_depth[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
        self.ind = ind;
        self.skip_init = skip_init;
    }

    fn dfs_testing(&mut self, root: usize) -> bool {
        let mut ind = std::mem::take(&mut self.ind);
        let mut skip_init = std::mem::take(&mut self.skip_init);
        let ok = self.dfs_testing_inner(root, &mut ind, &mut skip_init);
        self.ind = ind;
        self.skip_init = skip_init;
        ok
    }

    fn dfs_testing_inner(&mut self, root: usize, ind: &mut [usize], skip_init: &mut [bool]) -> bool {
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut skip_final = false;
            while ind[v] < self.ordered_adjs[v].len() {
                let ei = self.ordered_adjs[v][ind[v]];
                let w = self.head(ei);
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if ei == self.parent_edge[w] {
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[ei] = true;
                        skip_final = true;
                        break;
                    } else {
                        self.lowpt_edge[ei] = ei;
                        let p = self.new_pair(Interval::EMPTY, Interval { low: ei, high: ei });
                        self.stack.push(p);
                    }
                }
                if self.lowpt[ei] < self.height[v] {
                    if ind[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !skip_final && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = self.new_pair(Interval::EMPTY, Interval::EMPTY);
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.g.dart_tail(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("checked non-empty");
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head(p.left.high) == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head(p.right.high) == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edges remain on the stack");
            let hl = top.left.high;
            let hr = top.right.high;
            if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                self.reference[e] = hl;
            } else {
                self.reference[e] = hr;
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        let mut cur = e;
        while self.reference[cur] != NONE {
            cur = self.reference[cur];
            chain.push(cur);
        }
        for i in (0..chain.len() - 1).rev() {
            let (x, next) = (chain[i], chain[i + 1]);
            self.side[x] *= self.side[next];
            self.reference[x] = NONE;
        }
        self.side[e]
    }
}

/// Doubly linked cyclic adjacency used while the embedding is assembled.
struct Rotation {
    first: Vec<usize>,
    cw: Vec<usize>,
    ccw: Vec<usize>,
    present: Vec<bool>,
}

impl Rotation {
    fn new(n: usize, dc: usize) -> Self {
        Rotation {
            first: vec![NONE; n],
            cw: vec![NONE; dc],
            ccw: vec![NONE; dc],
            present: vec![false; dc],
        }
    }

    fn insert_lone(&mut self, v: usize, d: usize) {
        self.first[v] = d;
        self.cw[d] = d;
        self.ccw[d] = d;
        self.present[d] = true;
    }

    /// Inserts `d` clockwise right after `reference` (both leave the same vertex).
    fn insert_cw(&mut self, v: usize, d: usize, reference: usize) {
        if self.first[v] == NONE {
            self.insert_lone(v, d);
            return;
        }
        let after = self.cw[reference];
        self.cw[reference] = d;
        self.ccw[d] = reference;
        self.cw[d] = after;
        self.ccw[after] = d;
        self.present[d] = true;
    }

    fn insert_ccw(&mut self, v: usize, d: usize, reference: usize) {
        if self.first[v] == NONE {
            self.insert_lone(v, d);
            return;
        }
        let before = self.ccw[reference];
        self.insert_cw(v, d, before);
    }

    fn insert_first(&mut self, v: usize, d: usize) {
        if self.first[v] == NONE {
            self.insert_lone(v, d);
        } else {
            let f = self.first[v];
            self.insert_ccw(v, d, f);
            self.first[v] = d;
        }
    }
}

/// Runs the left-right test; returns a rotation system (counter-clockwise
/// order per vertex) or `None` when the graph is not planar.
pub fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = State::new(g);
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            st.roots.push(v);
            st.dfs_orientation(v);
        }
    }
    st.ind.iter_mut().for_each(|i| *i = 0);
    st.skip_init.iter_mut().for_each(|s| *s = false);
    for v in 0..n {
        let mut out: Vec<usize> = g.darts_of(v).filter(|&d| st.oriented[d]).collect();
        out.sort_by_key(|&d| st.nesting_depth[d]);
        st.ordered_adjs[v] = out;
    }
    let roots = st.roots.clone();
    for &r in &roots {
        if !st.dfs_testing(r) {
            return None;
        }
    }
    for d in 0..g.dart_count() {
        if st.oriented[d] {
            st.nesting_depth[d] *= st.sign(d);
        }
    }

    let mut rot = Rotation::new(n, g.dart_count());
    for v in 0..n {
        let mut out = std::mem::take(&mut st.ordered_adjs[v]);
        out.sort_by_key(|&d| st.nesting_depth[d]);
        let mut prev = NONE;
        for &d in &out {
            if prev == NONE {
                rot.insert_lone(v, d);
            } else {
                rot.insert_cw(v, d, prev);
            }
            prev = d;
        }
        st.ordered_adjs[v] = out;
    }

    let mut left_ref = vec![NONE; n];
    let mut right_ref = vec![NONE; n];
    let mut ind = vec![0usize; n];
    for &r in &roots {
        let mut dfs = vec![r];
        while let Some(v) = dfs.pop() {
            while ind[v] < st.ordered_adjs[v].len() {
                let ei = st.ordered_adjs[v][ind[v]];
                ind[v] += 1;
                let w = g.dart_head(ei);
                let back = g.twin(ei);
                if ei == st.parent_edge[w] {
                    rot.insert_first(w, back);
                    left_ref[v] = ei;
                    right_ref[v] = ei;
                    dfs.push(v);
                    dfs.push(w);
                    break;
                } else if st.side[ei] == 1 {
                    rot.insert_cw(w, back, right_ref[w]);
                } else {
                    rot.insert_ccw(w, back, left_ref[w]);
                    left_ref[w] = back;
                }
            }
        }
    }

    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let mut list = Vec::with_capacity(g.degree(v));
        let f = rot.first[v];
        if f != NONE {
            // Walk counter-clockwise so that face tracing uses the successor.
            let mut d = f;
            loop {
                debug_assert!(rot.present[d]);
                list.push(g.dart_head(d));
                d = rot.ccw[d];
                if d == f {
                    break;
                }
            }
        }
        rotation.push(list);
    }
    Some(rotation)
}

/// Planar embedding of `g`, certified by Euler's formula on every
/// component. Face 0 is declared outer.
pub fn planar_embed(g: &Graph) -> Result<Embedding> {
    let rotation = planar_rotation(g).ok_or(Error::NonPlanar)?;
    if rotation.iter().enumerate().any(|(v, r)| r.len() != g.degree(v)) {
        return Err(Error::Internal("embedding lost half-edges".into()));
    }
    Embedding::from_rotation(g.clone(), rotation)
        .map_err(|e| Error::Internal(format!("planarity embedding failed certification: {e}")))
}

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}
