//! Seeded graph generators.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{families, Graph};

/// Generators refuse to build graphs with more vertices than this.
pub const MAX_VERTICES: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `n x n` grid.
    Grid { n: usize },
    /// Path on `9 l^2 + 3 l` vertices plus a dominant vertex (the last one).
    Fan { l: usize },
    /// `fan(l)` for `k = 2`; otherwise `3 l` copies of the `k - 1` graph
    /// plus a dominant vertex.
    Tightness { k: usize, l: usize },
    RandomTriangulation { n: usize },
    Complete { n: usize },
    Cycle { n: usize },
    /// Uniform random recursive tree.
    Tree { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    #[serde(default)]
    pub seed: u64,
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::Grid { n } => write!(f, "grid({n})"),
            GeneratorKind::Fan { l } => write!(f, "fan({l})"),
            GeneratorKind::Tightness { k, l } => write!(f, "tightness({k}, {l})"),
            GeneratorKind::RandomTriangulation { n } => {
                write!(f, "random_triangulation({n}, seed {})", self.seed)
            }
            GeneratorKind::Complete { n } => write!(f, "complete({n})"),
            GeneratorKind::Cycle { n } => write!(f, "cycle({n})"),
            GeneratorKind::Tree { n } => write!(f, "tree({n}, seed {})", self.seed),
        }
    }
}

fn too_big(what: &str) -> Error {
    Error::BadParameters(format!("{what} exceeds {MAX_VERTICES} vertices"))
}

/// Builds the graph a spec describes; the same spec always gives the same
/// graph.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match spec.kind {
        GeneratorKind::Grid { n } => {
            if n == 0 || n.checked_mul(n).is_none_or(|s| s > MAX_VERTICES) {
                return Err(Error::BadParameters(format!("grid side {n} out of range")));
            }
            Ok(families::grid(n, n))
        }
        GeneratorKind::Fan { l } => fan(l),
        GeneratorKind::Tightness { k, l } => tightness(k, l),
        GeneratorKind::RandomTriangulation { n } => {
            random_triangulation(n, spec.seed).map(|e| e.graph().clone())
        }
        GeneratorKind::Complete { n } => {
            if n == 0 || n > 3000 {
                return Err(Error::BadParameters(format!("clique size {n} out of range")));
            }
            Ok(families::complete(n))
        }
        GeneratorKind::Cycle { n } => {
            if !(3..=MAX_VERTICES).contains(&n) {
                return Err(Error::BadParameters(format!("cycle length {n} out of range")));
            }
            Ok(families::cycle(n))
        }
        GeneratorKind::Tree { n } => random_tree(n, spec.seed),
    }
}

pub fn fan(l: usize) -> Result<Graph> {
    tightness(2, l)
}

fn tightness_size(k: usize, l: usize) -> Option<usize> {
    let mut size = (9 * l).checked_mul(l)?.checked_add(3 * l + 1)?;
    for _ in 2..k {
        size = size.checked_mul(3 * l)?.checked_add(1)?;
    }
    (size <= MAX_VERTICES).then_some(size)
}

pub fn tightness(k: usize, l: usize) -> Result<Graph> {
    if k < 2 || l == 0 {
        return Err(Error::BadParameters("tightness needs k >= 2 and l >= 1".into()));
    }
    tightness_size(k, l).ok_or_else(|| too_big("tightness graph"))?;
    let path_len = 9 * l * l + 3 * l;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    edges.extend((0..path_len).map(|i| (i, path_len)));
    let mut n = path_len + 1;
    for _ in 2..k {
        let copies = 3 * l;
        let mut next = Vec::with_capacity(edges.len() * copies + n * copies);
        for c in 0..copies {
            next.extend(edges.iter().map(|&(u, v)| (u + c * n, v + c * n)));
        }
        let apex = copies * n;
        next.extend((0..apex).map(|v| (v, apex)));
        edges = next;
        n = apex + 1;
    }
    Graph::from_edges(n, &edges)
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::BadParameters(format!("tree size {n} out of range")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges)
}

/// Random plane triangulation on `n >= 3` vertices: vertices are inserted
/// one by one into uniformly chosen faces, then `2n` random edge flips are
/// tried (a flip is skipped when it would create a parallel edge or drop a
/// degree below 3). Not uniform over triangulations.
pub fn random_triangulation(n: usize, seed: u64) -> Result<Embedding> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::BadParameters(format!("triangulation size {n} out of range")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Faces as counter-clockwise triples; `dart[(u, v)]` is the face that
    // walks u -> v.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut dart: HashMap<(usize, usize), usize> = HashMap::with_capacity(6 * n);
    let mut degree = vec![0usize; n];
    let mut adjacent: HashSet<(usize, usize)> = HashSet::with_capacity(3 * n);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let set_face = |faces: &mut Vec<[usize; 3]>, dart: &mut HashMap<(usize, usize), usize>, f: usize, t: [usize; 3]| {
        faces[f] = t;
        for i in 0..3 {
            dart.insert((t[i], t[(i + 1) % 3]), f);
        }
    };
    for f in 0..2 {
        let t = faces[f];
        set_face(&mut faces, &mut dart, f, t);
    }
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        adjacent.insert((a, b));
        degree[a] += 1;
        degree[b] += 1;
    }
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        set_face(&mut faces, &mut dart, f, [a, b, v]);
        faces.push([0; 3]);
        let g1 = faces.len() - 1;
        set_face(&mut faces, &mut dart, g1, [b, c, v]);
        faces.push([0; 3]);
        let g2 = faces.len() - 1;
        set_face(&mut faces, &mut dart, g2, [c, a, v]);
        for u in [a, b, c] {
            adjacent.insert(key(u, v));
            degree[u] += 1;
        }
        degree[v] = 3;
    }
    if n >= 5 {
        let mut edge_list: Vec<(usize, usize)> = adjacent.iter().copied().collect();
        edge_list.sort_unstable();
        for _ in 0..2 * n {
            let i = rng.gen_range(0..edge_list.len());
            let (u, v) = edge_list[i];
            let f1 = dart[&(u, v)];
            let f2 = dart[&(v, u)];
            let x = third(faces[f1], u, v);
            let y = third(faces[f2], v, u);
            if x == y || adjacent.contains(&key(x, y)) || degree[u] <= 3 || degree[v] <= 3 {
                continue;
            }
            dart.remove(&(u, v));
            dart.remove(&(v, u));
            set_face(&mut faces, &mut dart, f1, [x, u, y]);
            set_face(&mut faces, &mut dart, f2, [y, v, x]);
            adjacent.remove(&(u, v));
            adjacent.insert(key(x, y));
            degree[u] -= 1;
            degree[v] -= 1;
            degree[x] += 1;
            degree[y] += 1;
            edge_list[i] = key(x, y);
        }
    }
    // After u -> v on a face comes v -> w, with w following u at v.
    let mut next_at: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for t in &faces {
        for i in 0..3 {
            let (u, v, w) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            next_at[v].insert(u, w);
        }
    }
    let mut edges: Vec<(usize, usize)> = adjacent.into_iter().collect();
    edges.sort_unstable();
    let graph = Graph::from_edges(n, &edges)?;
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let start = graph.neighbors(v)[0];
            let mut rot = vec![start];
            let mut w = next_at[v][&start];
            while w != start {
                rot.push(w);
                w = next_at[v][&w];
            }
            rot
        })
        .collect();
    Embedding::from_rotation(graph, rotation)
}

fn third(t: [usize; 3], u: usize, v: usize) -> usize {
    *t.iter().find(|&&x| x != u && x != v).expect("triangle has three vertices")
}

/// Outcome of [`sample_fan_partitions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanSample {
    pub samples: usize,
    /// Samples whose quotient contains a triangle.
    pub with_triangle: usize,
}

/// Draws random layerings of `fan(l)` (the dominant vertex on layer 1, the
/// path walking over layers 0..=2) and random partitions of layered width
/// at most `l`, and counts the quotients that contain a triangle.
pub fn sample_fan_partitions(l: usize, samples: usize, seed: u64) -> Result<FanSample> {
    let g = fan(l)?;
    let n = g.vertex_count();
    let apex = n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut with_triangle = 0;
    let mut layer = vec![0usize; n];
    let mut part_of = vec![0usize; n];
    for _ in 0..samples {
        layer[apex] = 1;
        layer[0] = rng.gen_range(0..3);
        for v in 1..apex {
            let prev = layer[v - 1] as i64;
            let choices: Vec<i64> = (prev - 1..=prev + 1).filter(|x| (0..3).contains(x)).collect();
            layer[v] = *choices.choose(&mut rng).expect("non-empty") as usize;
        }
        // Part sizes per layer; a vertex joins a random part with room in
        // its layer, or opens a new part.
        let target_parts = rng.gen_range(1..=n);
        let mut load: Vec<[usize; 3]> = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for &v in &order {
            let open: Vec<usize> = (0..load.len()).filter(|&p| load[p][layer[v]] < l).collect();
            let p = if open.is_empty() || (load.len() < target_parts && rng.gen_bool(0.5)) {
                load.push([0; 3]);
                load.len() - 1
            } else {
                *open.choose(&mut rng).expect("non-empty")
            };
            load[p][layer[v]] += 1;
            part_of[v] = p;
        }
        let mut quotient: HashSet<(usize, usize)> = HashSet::new();
        for &(u, v) in g.edges() {
            let (a, b) = (part_of[u], part_of[v]);
            if a != b {
                quotient.insert((a.min(b), a.max(b)));
            }
        }
        let mut nbrs: Vec<HashSet<usize>> = vec![HashSet::new(); load.len()];
        for &(a, b) in &quotient {
            nbrs[a].insert(b);
            nbrs[b].insert(a);
        }
        if quotient.iter().any(|&(a, b)| nbrs[a].iter().any(|c| nbrs[b].contains(c))) {
            with_triangle += 1;
        }
    }
    Ok(FanSample {
        samples,
        with_triangle,
    })
}
