mod report;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use layerq::bfs::bfs_layering;
use layerq::layout::{
    low_treewidth_colouring, planar_pipeline, product_injection, stacking_bound, validate_queue_layout,
    verify_injection, Assign, QueueLayout,
};
use layerq::oracle::{
    exact_queue_number_with_ordering, exact_treewidth, generate, sample_fan_partitions, GeneratorKind,
    GeneratorSpec,
};
use layerq::partition::{
    check_tripod_parts, check_vertical_parts, partition_planar, validate_partition, validate_tree_decomposition,
    width_against, Mode, Partition, TreeDecomposition,
};
use layerq::render::render_svg;
use layerq::{planar_embed, triangulate, Error, Graph};
use serde_json::{json, Value};

use report::{Bound, Instance, RunReport};

#[derive(Parser)]
#[command(name = "layerq", version, about = "Layered partitions and queue layouts of planar graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for batch verification.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Where to write the artifact.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Grid,
    Fan,
    Tightness,
    RandomTriangulation,
    Complete,
    Cycle,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleWhat {
    QueueNumber,
    Treewidth,
    FanSample,
}

#[derive(Subcommand)]
enum Verb {
    /// Generate a graph (edge list on stdout unless --out is given).
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Planar embedding as a rotation system.
    Embed { input: PathBuf },
    /// Triangulate a planar graph.
    Triangulate {
        input: PathBuf,
        /// Vertex that must stay on the outer face.
        #[arg(long, default_value_t = 0)]
        outer: usize,
    },
    /// BFS layering.
    Layering {
        input: PathBuf,
        /// Root vertices (default: smallest vertex of each component).
        #[arg(long)]
        root: Vec<usize>,
    },
    /// Layered partition with its quotient decomposition.
    Partition {
        input: PathBuf,
        #[arg(long, default_value = "width1")]
        mode: Mode,
    },
    /// Queue layout through the full pipeline.
    Layout {
        input: PathBuf,
        #[arg(long, default_value = "width1")]
        mode: Mode,
        #[arg(long, default_value = "depth")]
        assign: Assign,
    },
    /// Check layouts or partition bundles against graphs.
    Verify {
        /// One graph for all artifacts, or one per artifact.
        #[arg(long, required = true)]
        graph: Vec<PathBuf>,
        #[arg(long)]
        layout: Vec<PathBuf>,
        #[arg(long)]
        partition: Vec<PathBuf>,
    },
    /// Exhaustive searches and sampled checks on small graphs.
    Oracle {
        #[arg(long, value_enum)]
        what: OracleWhat,
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Injection into a strong product of the quotient, a path and a clique.
    Product { input: PathBuf },
    /// Colouring whose unions of all but one class have small treewidth.
    Colour {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
    /// Arc diagram of a layout as SVG (stdout unless --out is given).
    Render {
        #[arg(long)]
        layout: PathBuf,
    },
}

enum Failure {
    /// Bad invocation or unreadable input.
    Usage(String),
    /// The operation itself failed.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidGraph(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<Option<RunReport>, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read_text(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_artifact(out: &Option<PathBuf>, text: &str, report: &mut RunReport) -> Result<(), Failure> {
    if let Some(path) = out {
        fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        report.artifacts.push(path.display().to_string());
    }
    Ok(())
}

fn instance(g: &Graph) -> Option<Instance> {
    Some(Instance {
        n: g.vertex_count(),
        m: g.edge_count(),
    })
}

fn json_value(text: &str) -> Value {
    serde_json::from_str(text).expect("library output is JSON")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Outcome {
    let out = &cli.out;
    match cli.verb {
        Verb::Gen { kind, n, k, l } => {
            let need = |x: Option<usize>, name: &str| {
                x.ok_or_else(|| Failure::Usage(format!("--{name} is required for this kind")))
            };
            let kind = match kind {
                Kind::Grid => GeneratorKind::Grid { n: need(n, "n")? },
                Kind::Fan => GeneratorKind::Fan { l: need(l, "l")? },
                Kind::Tightness => GeneratorKind::Tightness {
                    k: need(k, "k")?,
                    l: need(l, "l")?,
                },
                Kind::RandomTriangulation => GeneratorKind::RandomTriangulation { n: need(n, "n")? },
                Kind::Complete => GeneratorKind::Complete { n: need(n, "n")? },
                Kind::Cycle => GeneratorKind::Cycle { n: need(n, "n")? },
                Kind::Tree => GeneratorKind::Tree { n: need(n, "n")? },
            };
            let spec = GeneratorSpec { kind, seed: cli.seed };
            let g = generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = g.to_text();
            if out.is_none() {
                print!("{text}");
                return Ok(None);
            }
            let mut r = RunReport::new("gen");
            r.instance = instance(&g);
            r.value("spec", spec);
            write_artifact(out, &text, &mut r)?;
            Ok(Some(r))
        }
        Verb::Embed { input } => {
            let g = read_graph(&input)?;
            let e = planar_embed(&g)?;
            let mut r = RunReport::new("embed");
            r.instance = instance(&g);
            r.value("faces", e.face_count());
            r.verdict("euler", g.edge_count() == 0 || e.face_count() + g.vertex_count() >= g.edge_count() + 2);
            write_artifact(out, &e.to_json(), &mut r)?;
            Ok(Some(r))
        }
        Verb::Triangulate { input, outer } => {
            let g = read_graph(&input)?;
            let e = planar_embed(&g)?;
            let t = triangulate(&e, outer)?;
            let mut r = RunReport::new("triangulate");
            r.instance = instance(&g);
            r.value("added_edges", t.added_edges.len());
            r.verdict("triangulation", t.embedding.is_triangulation());
            r.verdict("outer_vertex_on_outer_face", t.embedding.outer_vertices().contains(&outer));
            r.verdict("contains_input", g.is_subgraph_of(t.embedding.graph()));
            let doc = json!({
                "embedding": json_value(&t.embedding.to_json()),
                "added_edges": t.added_edges,
            });
            write_artifact(out, &pretty(&doc), &mut r)?;
            Ok(Some(r))
        }
        Verb::Layering { input, root } => {
            let g = read_graph(&input)?;
            let roots = (!root.is_empty()).then_some(root.as_slice());
            let (layering, tree) = bfs_layering(&g, roots)?;
            let mut r = RunReport::new("layering");
            r.instance = instance(&g);
            r.value("layers", layering.layer_count());
            r.verdict("layering", layering.is_valid_for(&g));
            r.verdict("bfs_tree", tree.is_valid_for(&g));
            write_artifact(out, &layering.to_json(), &mut r)?;
            Ok(Some(r))
        }
        Verb::Partition { input, mode } => {
            let g = read_graph(&input)?;
            let pp = partition_planar(&g, mode)?;
            let mut r = RunReport::new("partition");
            r.instance = instance(&g);
            r.mode = Some(mode.to_string());
            let added: Vec<(usize, usize)> = pp
                .augmented
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            check_bundle(&g, &pp.partition, &pp.decomposition, mode, &added, &mut r);
            let doc = json!({
                "mode": mode,
                "partition": json_value(&pp.partition.to_json()),
                "decomposition": json_value(&pp.decomposition.to_json()),
                "augmented_edges": added,
            });
            write_artifact(out, &pretty(&doc), &mut r)?;
            Ok(Some(r))
        }
        Verb::Layout { input, mode, assign } => {
            let g = read_graph(&input)?;
            let res = planar_pipeline(&g, mode, assign)?;
            let p = &res.planar.partition;
            let mut r = RunReport::new("layout");
            r.instance = instance(&g);
            r.mode = Some(mode.to_string());
            r.assign = Some(assign.to_string());
            let l = width_against(p, p.layering());
            r.measured_layered_width = Some(l);
            let td = validate_tree_decomposition(p.quotient(), &res.planar.decomposition);
            r.quotient_td_width = Some(td.width);
            let host = validate_queue_layout(p.quotient(), &res.host_layout);
            r.host_queue_count = Some(host.queue_count);
            let fin = validate_queue_layout(&g, &res.layout);
            r.final_queue_count = Some(fin.queue_count);
            let declared = mode.declared_width();
            let bound = stacking_bound(declared, host.queue_count);
            r.bound = Some(Bound {
                formula: format!("3*{declared}*{} + floor(3*{declared}/2)", host.queue_count),
                value: bound,
            });
            r.value("stripped_edges", res.stripped_edges);
            r.verdict("partition", validate_partition(&g, p, p.layering()).is_valid && l <= declared);
            r.verdict("decomposition", td.is_valid && td.width < mode.max_bag());
            r.verdict("host_layout", host.is_valid);
            r.verdict("layout", fin.is_valid);
            r.verdict("within_bound", fin.queue_count <= bound);
            if let Some(v) = fin.first_violation {
                r.problems.push(v.to_string());
            }
            write_artifact(out, &res.layout.to_json(), &mut r)?;
            Ok(Some(r))
        }
        Verb::Verify {
            graph,
            layout,
            partition,
        } => verify(&graph, &layout, &partition, cli.jobs),
        Verb::Oracle {
            what,
            input,
            l,
            samples,
        } => {
            let mut r = RunReport::new("oracle");
            match what {
                OracleWhat::QueueNumber | OracleWhat::Treewidth => {
                    let path = input.ok_or_else(|| Failure::Usage("an input graph is required".into()))?;
                    let g = read_graph(&path)?;
                    r.instance = instance(&g);
                    if matches!(what, OracleWhat::QueueNumber) {
                        let (q, ord) = exact_queue_number_with_ordering(&g)?;
                        r.value("queue_number", q);
                        r.value("ordering", ord);
                    } else {
                        r.value("treewidth", exact_treewidth(&g)?);
                    }
                }
                OracleWhat::FanSample => {
                    let s = sample_fan_partitions(l, samples, cli.seed).map_err(|e| Failure::Usage(e.to_string()))?;
                    r.value("samples", s.samples);
                    r.value("with_triangle", s.with_triangle);
                    r.verdict("every_quotient_has_a_triangle", s.with_triangle == s.samples);
                }
            }
            Ok(Some(r))
        }
        Verb::Product { input } => {
            let g = read_graph(&input)?;
            let pp = partition_planar(&g, Mode::Width1)?;
            let p = &pp.partition;
            let inj = product_injection(&g, p, p.layering())?;
            let mut r = RunReport::new("product");
            r.instance = instance(&g);
            r.mode = Some(Mode::Width1.to_string());
            r.measured_layered_width = Some(width_against(p, p.layering()));
            let td = validate_tree_decomposition(&inj.host, &pp.decomposition);
            r.quotient_td_width = Some(td.width);
            r.value("clique_size", inj.clique_size);
            r.value("path_length", inj.path_length);
            let check = verify_injection(&g, &inj);
            r.verdict("injection", check.is_ok());
            r.verdict("host_decomposition", td.is_valid && td.width <= 8);
            if let Err(why) = check {
                r.problems.push(why);
            }
            write_artifact(out, &inj.to_json(), &mut r)?;
            Ok(Some(r))
        }
        Verb::Colour { input, c } => {
            let g = read_graph(&input)?;
            let col = low_treewidth_colouring(&g, c).map_err(|e| match e {
                Error::BadParameters(_) => Failure::Usage(e.to_string()),
                other => other.into(),
            })?;
            let mut r = RunReport::new("colour");
            r.instance = instance(&g);
            let bound = col.width_bound();
            r.bound = Some(Bound {
                formula: format!("9*(2*{c}-1)-1"),
                value: bound,
            });
            let mut widths = Vec::new();
            let mut classes = Vec::new();
            for (j, class) in col.classes.iter().enumerate() {
                let h = g.induced(&class.complement);
                let td = validate_tree_decomposition(&h, &class.decomposition);
                widths.push(td.width);
                r.verdict(&format!("class_{j}"), td.is_valid && td.width <= bound);
                classes.push(json!({
                    "vertices": class.vertices,
                    "complement": class.complement,
                    "decomposition": json_value(&class.decomposition.to_json()),
                }));
            }
            r.value("complement_widths", widths);
            let doc = json!({ "c": c, "colour_of": col.colour_of, "classes": classes });
            write_artifact(out, &pretty(&doc), &mut r)?;
            Ok(Some(r))
        }
        Verb::Render { layout } => {
            let l = QueueLayout::from_json(&read_text(&layout)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", layout.display())))?;
            let svg = render_svg(&l);
            if out.is_none() {
                print!("{svg}");
                return Ok(None);
            }
            let mut r = RunReport::new("render");
            r.final_queue_count = Some(l.queue_count());
            write_artifact(out, &svg, &mut r)?;
            Ok(Some(r))
        }
    }
}

/// Validates a partition bundle and records the verdicts.
fn check_bundle(
    g: &Graph,
    p: &Partition,
    td: &TreeDecomposition,
    mode: Mode,
    augmented_edges: &[(usize, usize)],
    r: &mut RunReport,
) {
    let pr = validate_partition(g, p, p.layering());
    r.measured_layered_width = Some(pr.measured_layered_width);
    r.problems.extend(pr.problems.iter().cloned());
    let t = validate_tree_decomposition(p.quotient(), td);
    r.quotient_td_width = Some(t.width);
    r.verdict("partition", pr.is_valid && pr.measured_layered_width <= mode.declared_width());
    r.verdict("decomposition", t.is_valid && td.max_bag() <= mode.max_bag());
    let shapes_ok = match bfs_layering(g, None) {
        Ok((_, tree)) => match mode {
            Mode::Width1 => check_vertical_parts(&tree, p).is_none(),
            Mode::Tripod => check_tripod_parts(&g.with_edges(augmented_edges), &tree, p).is_none(),
        },
        Err(_) => false,
    };
    r.verdict("part_shapes", shapes_ok);
}

fn verify_one(graph: &Path, layout: Option<&Path>, bundle: Option<&Path>) -> Result<RunReport, Failure> {
    let g = read_graph(graph)?;
    let mut r = RunReport::new("verify");
    r.instance = instance(&g);
    if let Some(path) = layout {
        let l = QueueLayout::from_json(&read_text(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let rep = validate_queue_layout(&g, &l);
        r.final_queue_count = Some(rep.queue_count);
        r.verdict("layout", rep.is_valid);
        if let Some(v) = rep.first_violation {
            r.problems.push(format!("{}: {v}", path.display()));
        }
    }
    if let Some(path) = bundle {
        let doc: Value = serde_json::from_str(&read_text(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let bad = |what: &str| Failure::Usage(format!("{}: {what}", path.display()));
        let mode: Mode = serde_json::from_value(doc["mode"].clone()).map_err(|_| bad("missing mode"))?;
        let p = Partition::from_json(&doc["partition"].to_string()).map_err(|e| bad(&e.to_string()))?;
        let td = TreeDecomposition::from_json(&doc["decomposition"].to_string()).map_err(|e| bad(&e.to_string()))?;
        let added: Vec<(usize, usize)> =
            serde_json::from_value(doc["augmented_edges"].clone()).map_err(|_| bad("missing augmented_edges"))?;
        if p.vertex_count() != g.vertex_count() {
            return Err(bad("partition and graph sizes differ"));
        }
        r.mode = Some(mode.to_string());
        check_bundle(&g, &p, &td, mode, &added, &mut r);
    }
    Ok(r)
}

fn verify(graphs: &[PathBuf], layouts: &[PathBuf], bundles: &[PathBuf], jobs: usize) -> Outcome {
    let items = layouts.len().max(bundles.len()).max(1);
    if (graphs.len() != 1 && graphs.len() != items)
        || (!layouts.is_empty() && !bundles.is_empty() && layouts.len() != bundles.len())
    {
        return Err(Failure::Usage("give one graph, or one graph per artifact".into()));
    }
    if layouts.is_empty() && bundles.is_empty() {
        return Err(Failure::Usage("nothing to verify: pass --layout or --partition".into()));
    }
    let task = |i: usize| {
        let graph = &graphs[if graphs.len() == 1 { 0 } else { i }];
        verify_one(graph, layouts.get(i).map(|p| p.as_path()), bundles.get(i).map(|p| p.as_path()))
    };
    let mut results: Vec<Option<Result<RunReport, Failure>>> = (0..items).map(|_| None).collect();
    let workers = jobs.clamp(1, items);
    std::thread::scope(|s| {
        let chunks: Vec<_> = (0..workers)
            .map(|w| {
                let task = &task;
                s.spawn(move || (w..items).step_by(workers).map(|i| (i, task(i))).collect::<Vec<_>>())
            })
            .collect();
        for h in chunks {
            for (i, res) in h.join().expect("worker panicked") {
                results[i] = Some(res);
            }
        }
    });
    let mut results: Vec<RunReport> = results
        .into_iter()
        .map(|r| r.expect("every item ran"))
        .collect::<Result<_, _>>()?;
    if results.len() == 1 {
        return Ok(results.pop());
    }
    let mut r = RunReport::new("verify");
    for (i, item) in results.iter().enumerate() {
        r.verdict(&format!("item_{i}"), item.all_valid());
        r.problems.extend(item.problems.iter().cloned());
    }
    r.value("items", &results);
    Ok(Some(r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(mut r)) => {
            r.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
            println!("{}", serde_json::to_string_pretty(&r).expect("plain data serializes"));
            if r.all_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
