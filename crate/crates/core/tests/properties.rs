mod common;

use common::*;
use layerq::graph::families;
use layerq::layout::{
    assign_queues_by_depth, complete_graph_layout, grid_layout, max_rainbow, partition_ordering,
    partition_queue_layout, planar_pipeline, product_injection, tree_decomposition_layout, validate_queue_layout,
    verify_injection, Assign, QueueLayout,
};
use layerq::oracle::{exact_queue_number_with_ordering, exact_treewidth, random_triangulation};
use layerq::partition::{partition_planar, Mode, Partition, TreeDecomposition};
use layerq::{Embedding, Graph, Layering};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 3).prop_map(move |pairs| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges_lossy(n, &edges)
        })
    })
}

fn arb_graph_and_ordering(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// A planar graph: a random triangulation with a random subset of its
/// edges removed.
fn arb_planar() -> impl Strategy<Value = Graph> {
    (3usize..120, any::<u64>(), 0.0f64..0.7).prop_map(|(n, seed, drop)| {
        let g = random_triangulation(n, seed).unwrap().graph().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let kept: Vec<(usize, usize)> = g.edges().iter().copied().filter(|_| !rng.gen_bool(drop)).collect();
        Graph::from_edges(n, &kept).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn depth_assignment_is_optimal_for_its_ordering((g, ord) in arb_graph_and_ordering(30)) {
        let layout = assign_queues_by_depth(&g, &ord).unwrap();
        let brute = brute_rainbow(&g, &ord);
        prop_assert_eq!(layout.queue_count(), brute);
        prop_assert_eq!(max_rainbow(&g, &ord).unwrap(), brute);
        prop_assert_eq!(check_layout(&g, &layout), Ok(()));
        prop_assert!(validate_queue_layout(&g, &layout).is_valid);
    }

    #[test]
    fn layout_json_round_trips((g, ord) in arb_graph_and_ordering(20)) {
        let layout = assign_queues_by_depth(&g, &ord).unwrap();
        prop_assert_eq!(QueueLayout::from_json(&layout.to_json()).unwrap(), layout);
    }

    #[test]
    fn graph_text_round_trips(g in arb_graph(25)) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pipeline_is_sound(g in arb_planar(), tripod in any::<bool>(), structured in any::<bool>()) {
        let mode = if tripod { Mode::Tripod } else { Mode::Width1 };
        let assign = if structured { Assign::Structured } else { Assign::Depth };
        let r = planar_pipeline(&g, mode, assign).unwrap();
        prop_assert_eq!(check_layout(&g, &r.layout), Ok(()));
        let l = mode.declared_width();
        prop_assert!(r.layout.queue_count() <= 3 * l * r.host_layout.queue_count() + 3 * l / 2);
        prop_assert!(r.host_layout.queue_count() < (1 << r.host_width.max(1)));
        prop_assert_eq!(check_layout(r.planar.partition.quotient(), &r.host_layout), Ok(()));
    }

    #[test]
    fn ordering_is_monotone_in_layers_and_host(g in arb_planar()) {
        let pp = partition_planar(&g, Mode::Width1).unwrap();
        let p = &pp.partition;
        let host = tree_decomposition_layout(p.quotient(), &pp.decomposition).unwrap();
        let ord = partition_ordering(p, p.layering(), &host);
        for w in ord.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (la, lb) = (p.layering().layer_of(a), p.layering().layer_of(b));
            prop_assert!(la <= lb);
            if la == lb {
                prop_assert!(host.position(p.part_of(a)) <= host.position(p.part_of(b)));
            }
        }
        let layout = partition_queue_layout(&g, p, p.layering(), &host, Assign::Depth).unwrap();
        prop_assert_eq!(layout.ordering(), ord.as_slice());
    }

    #[test]
    fn injection_is_a_product_embedding(g in arb_planar()) {
        let pp = partition_planar(&g, Mode::Width1).unwrap();
        let p = &pp.partition;
        let inj = product_injection(&g, p, p.layering()).unwrap();
        prop_assert_eq!(verify_injection(&g, &inj), Ok(()));
        let mut images = inj.map.clone();
        images.sort_unstable();
        images.dedup();
        prop_assert_eq!(images.len(), g.vertex_count());
        for &(u, v) in g.edges() {
            let (a, b) = (inj.map[u], inj.map[v]);
            prop_assert!(a.1.abs_diff(b.1) <= 1);
            prop_assert!(a.0 == b.0 || inj.host.has_edge(a.0, b.0));
        }
    }

    #[test]
    fn partition_artifacts_round_trip(g in arb_planar()) {
        let pp = partition_planar(&g, Mode::Tripod).unwrap();
        prop_assert_eq!(&Partition::from_json(&pp.partition.to_json()).unwrap(), &pp.partition);
        prop_assert_eq!(&TreeDecomposition::from_json(&pp.decomposition.to_json()).unwrap(), &pp.decomposition);
        let l = pp.partition.layering();
        prop_assert_eq!(&Layering::from_json(&l.to_json()).unwrap(), l);
    }
}

#[test]
fn clique_layouts_use_half_the_size() {
    for l in 1..=40 {
        let layout = complete_graph_layout(l).unwrap();
        assert_eq!(layout.queue_count(), l / 2);
        assert_eq!(check_layout(&families::complete(l), &layout), Ok(()));
    }
}

#[test]
fn grid_layouts_use_one_queue() {
    for n in 2..=30 {
        assert_eq!(grid_layout(n).unwrap().queue_count(), 1);
    }
}

#[test]
fn embedding_json_round_trips() {
    let e = random_triangulation(60, 3).unwrap();
    assert_eq!(Embedding::from_json(&e.to_json()).unwrap(), e);
}

#[test]
fn best_exact_ordering_is_reproduced_by_depth_assignment() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let (q, ord) = exact_queue_number_with_ordering(&g).unwrap();
        assert_eq!(assign_queues_by_depth(&g, &ord).unwrap().queue_count(), q);
        // No ordering beats the exact value.
        for _ in 0..50 {
            let mut o: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(o.as_mut_slice(), &mut rng);
            assert!(brute_rainbow(&g, &o) >= q);
        }
    }
}

#[test]
fn small_quotients_have_width_at_most_eight() {
    let mut seen = 0;
    for seed in 0..300u64 {
        let n = 4 + (seed as usize % 20);
        let g = random_triangulation(n, seed).unwrap().graph().clone();
        let pp = partition_planar(&g, Mode::Width1).unwrap();
        let q = pp.partition.quotient();
        if q.vertex_count() > 12 {
            continue;
        }
        seen += 1;
        let exact = exact_treewidth(q).unwrap();
        assert!(exact <= 8);
        assert!(exact <= pp.decomposition.width());
    }
    assert!(seen > 50);
}

/// Random k-tree on `n` vertices with its natural decomposition.
fn random_ktree(n: usize, k: usize, seed: u64) -> (Graph, TreeDecomposition) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut bags = vec![(0..=k).collect::<Vec<_>>()];
    let mut tree_edges = Vec::new();
    let mut cliques: Vec<(Vec<usize>, usize)> = (0..=k).map(|s| ((0..=k).filter(|&x| x != s).collect(), 0)).collect();
    for i in 0..=k {
        for j in i + 1..=k {
            edges.push((i, j));
        }
    }
    for v in k + 1..n {
        let (c, b) = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(c.iter().map(|&u| (u, v)));
        let mut bag = c.clone();
        bag.push(v);
        let node = bags.len();
        bags.push(bag.clone());
        tree_edges.push((b, node));
        for s in 0..k {
            let mut face: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != s).map(|(_, &x)| x).collect();
            face.push(v);
            cliques.push((face, node));
        }
    }
    (Graph::from_edges(n, &edges).unwrap(), TreeDecomposition::new(&tree_edges, bags).unwrap())
}

#[test]
fn host_count_depends_on_width_only() {
    for k in 1..=5usize {
        let ceiling = (1usize << k) - 1;
        let mut counts = Vec::new();
        for n in [100usize, 1000, 10_000] {
            let (h, td) = random_ktree(n, k, n as u64 + k as u64);
            assert_eq!(check_td(&h, &td), Ok(k));
            let layout = tree_decomposition_layout(&h, &td).unwrap();
            assert_eq!(check_layout(&h, &layout), Ok(()));
            counts.push(layout.queue_count());
        }
        assert!(counts.iter().all(|&c| c <= ceiling), "k = {k}: {counts:?}");
    }
}
