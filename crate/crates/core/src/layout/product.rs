//! Embedding a partitioned graph into `H x P x K_l` (strong product of the
//! quotient, a path and a clique).

use serde::Serialize;

use crate::bfs::Layering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{width_against, Partition};

/// A map from the vertices of a graph into a strong product
/// `host x path(path_length) x K_clique`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductInjection {
    #[serde(serialize_with = "edges_only")]
    pub host: Graph,
    pub path_length: usize,
    pub clique_size: usize,
    /// `(host vertex, path index, clique slot)` per vertex.
    pub map: Vec<(usize, usize, usize)>,
}

fn edges_only<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Graph", 2)?;
    st.serialize_field("vertex_count", &g.vertex_count())?;
    st.serialize_field("edges", g.edges())?;
    st.end()
}

impl ProductInjection {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Maps `v` to `(part of v, layer of v, rank of v among the members of its
/// part in its layer)`; the clique size is the declared layered width.
pub fn product_injection(g: &Graph, partition: &Partition, layering: &Layering) -> Result<ProductInjection> {
    if !layering.is_valid_for(g) {
        return Err(Error::BadParameters("layering is not valid for the graph".into()));
    }
    let declared = partition.declared_layered_width();
    let measured = width_against(partition, layering);
    if measured > declared {
        return Err(Error::WidthMismatch { declared, measured });
    }
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (partition.part_of(v), layering.layer_of(v), v));
    let mut map = vec![(0, 0, 0); n];
    for (i, &v) in order.iter().enumerate() {
        let key = (partition.part_of(v), layering.layer_of(v));
        let slot = match i.checked_sub(1).map(|j| order[j]) {
            Some(u) if (partition.part_of(u), layering.layer_of(u)) == key => map[u].2 + 1,
            _ => 0,
        };
        map[v] = (key.0, key.1, slot);
    }
    Ok(ProductInjection {
        host: partition.quotient().clone(),
        path_length: layering.layer_count(),
        clique_size: declared,
        map,
    })
}

/// Checks that the map is injective, stays inside the product and sends
/// every edge of `g` to an edge of the product. Returns the first problem.
pub fn verify_injection(g: &Graph, inj: &ProductInjection) -> std::result::Result<(), String> {
    if inj.map.len() != g.vertex_count() {
        return Err(format!("map covers {} of {} vertices", inj.map.len(), g.vertex_count()));
    }
    let mut images: Vec<((usize, usize, usize), usize)> =
        inj.map.iter().copied().zip(0..).collect();
    images.sort_unstable();
    for w in images.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(format!("vertices {} and {} share an image", w[0].1, w[1].1));
        }
    }
    for (v, &(x, i, s)) in inj.map.iter().enumerate() {
        if x >= inj.host.vertex_count() || i >= inj.path_length || s >= inj.clique_size {
            return Err(format!("vertex {v} maps outside the product"));
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = (inj.map[u], inj.map[v]);
        let host_ok = a.0 == b.0 || inj.host.has_edge(a.0, b.0);
        if !host_ok || a.1.abs_diff(b.1) > 1 {
            return Err(format!("edge {u}-{v} is not an edge of the product"));
        }
    }
    Ok(())
}
