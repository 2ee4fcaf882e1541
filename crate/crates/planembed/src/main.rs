//! Command-line front end for the plane-graph embedding toolkit.
//!
//! Exit codes: 0 success / property holds, 1 property fails, 2 input error,
//! 3 internal error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use planembed::error::Error;
use planembed::graph::PlaneGraph;
use planembed::io::{self, CoordsJson, GraphJson, TriangulateJson, WeightFile};
use planembed::solver::{self, BoundaryPlacement, EmbeddingResult, WeightScheme};
use planembed::tolerance::Tolerances;
use planembed::triangulate::triangulate;
use planembed::validate::{covering_number_check, validate, Coords};
use planembed::{analysis, svg};

#[derive(Parser)]
#[command(name = "planembed", version, about = "Convex combination maps on plane graphs")]
struct Cli {
    /// Relative geometric tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Seed for random weight schemes and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Radius of the default regular-polygon boundary placement.
    #[arg(long, global = true, default_value_t = 1.0)]
    radius: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze connectivity structure and convex embeddability.
    Check {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a convex combination map and validate the drawing.
    Embed {
        graph: PathBuf,
        #[command(flatten)]
        opts: EmbedOpts,
        /// Output path; a .svg extension selects SVG, anything else coords JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add chords until every bounded face is a triangle.
    Triangulate {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether given coordinates form a straight-line embedding.
    Validate {
        graph: PathBuf,
        coords: PathBuf,
        /// Interior sample count for the covering-number check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render given coordinates to SVG.
    Render {
        graph: PathBuf,
        coords: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate convergence of the perturbed maps toward the unperturbed map.
    Sweep {
        graph: PathBuf,
        #[command(flatten)]
        opts: EmbedOpts,
        /// Comma-separated perturbation values in [0, 1); empty for header-only output.
        #[arg(long, default_value = "1e-2,1e-4,1e-6")]
        deltas: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct EmbedOpts {
    /// Weight scheme: barycentric | random:<seed> | file:<path>.
    #[arg(long, default_value = "barycentric")]
    weights: String,
    /// Boundary placement: regular:<radius> | file:<path>.
    #[arg(long, default_value = "regular")]
    placement: String,
    /// Perturbation toward a triangulated supergraph, in [0, 1).
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 3 })
        }
    }
}

/// Input-shaped failures exit 2; anything else is an internal error (exit 3).
fn is_input_error(e: &Error) -> bool {
    !matches!(
        e,
        Error::SingularSystem
            | Error::NoDiagonal
            | Error::SampleOnEdge
            | Error::FacesNotAdjacent
            | Error::IntersectionDisconnected
    )
}

fn run(cli: &Cli) -> planembed::Result<ExitCode> {
    let tolerances = Tolerances::new(cli.tolerance);
    match &cli.command {
        Command::Check { graph, out } => {
            let g = load_graph(graph)?;
            let report = analysis::analyze(&g);
            emit(out.as_deref(), &serde_json::to_string_pretty(&report).unwrap())?;
            Ok(exit_bool(report.convex_embeddable))
        }
        Command::Embed { graph, opts, out } => {
            let g = load_graph(graph)?;
            let result = run_embed(&g, opts, cli)?;
            let report = validate(&g, &result.coords, &tolerances)?;
            match out {
                Some(path) if path.extension().is_some_and(|e| e == "svg") => {
                    emit(Some(path), &svg::render(&g, &result.coords))?
                }
                _ => {
                    let coords_json = CoordsJson::from_coords(&g, &result.coords);
                    emit(out.as_deref(), &serde_json::to_string_pretty(&coords_json).unwrap())?;
                }
            }
            let summary = json!({
                "residual": result.residual,
                "is_embedding": report.is_embedding,
                "validation": report,
            });
            eprintln!("{}", serde_json::to_string_pretty(&summary).unwrap());
            Ok(exit_bool(report.is_embedding))
        }
        Command::Triangulate { graph, out } => {
            let g = load_graph(graph)?;
            let tri = triangulate(&g)?;
            let gj = GraphJson::from_graph(&tri.graph);
            let result = TriangulateJson {
                vertices: gj.vertices,
                rotation: gj.rotation,
                outer_cycle: gj.outer_cycle,
                added_edges: tri
                    .added_edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (tri.graph.id(u).to_string(), tri.graph.id(v).to_string());
                        if a <= b { [a, b] } else { [b, a] }
                    })
                    .collect(),
            };
            emit(out.as_deref(), &serde_json::to_string_pretty(&result).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { graph, coords, samples, out } => {
            let g = load_graph(graph)?;
            let c = load_coords(&g, coords)?;
            let report = validate(&g, &c, &tolerances)?;
            let covering = if report.is_embedding {
                covering_number_check(&g, &c, *samples, cli.seed, &tolerances)?
            } else {
                Vec::new()
            };
            let ok = report.is_embedding && covering.is_empty();
            let full = json!({
                "validation": report,
                "covering_number_violations": covering,
            });
            emit(out.as_deref(), &serde_json::to_string_pretty(&full).unwrap())?;
            Ok(exit_bool(ok))
        }
        Command::Render { graph, coords, out } => {
            let g = load_graph(graph)?;
            let c = load_coords(&g, coords)?;
            emit(out.as_deref(), &svg::render(&g, &c))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { graph, opts, deltas, out } => {
            let g = load_graph(graph)?;
            let deltas = parse_deltas(deltas)?;
            let (scheme, placement) = scheme_and_placement(&g, opts, cli)?;
            let base = solver::convex_combination_map(&g, &scheme, &placement)?;
            let tri = triangulate(&g)?;
            let mut csv = String::from("delta,sup_norm,is_embedding\n");
            for &delta in &deltas {
                let perturbed = solver::perturbed_map(&g, &scheme, &placement, &tri, delta)?;
                let norm = solver::max_displacement(&base.coords, &perturbed.coords);
                let report = validate(&g, &perturbed.coords, &tolerances)?;
                writeln!(csv, "{delta},{norm},{}", report.is_embedding).unwrap();
            }
            emit(out.as_deref(), &csv)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn load_graph(path: &Path) -> planembed::Result<PlaneGraph> {
    let text = read(path)?;
    io::parse_json::<GraphJson>(&text, &path.display().to_string())?.to_graph()
}

fn load_coords(g: &PlaneGraph, path: &Path) -> planembed::Result<Coords> {
    let text = read(path)?;
    io::parse_json::<CoordsJson>(&text, &path.display().to_string())?.to_coords(g)
}

fn read(path: &Path) -> planembed::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> planembed::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::ParseError(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_deltas(spec: &str) -> planembed::Result<Vec<f64>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let d: f64 = s
                .parse()
                .map_err(|_| Error::ParseError(format!("invalid delta value: {s}")))?;
            if (0.0..1.0).contains(&d) { Ok(d) } else { Err(Error::InvalidDelta(d)) }
        })
        .collect()
}

fn scheme_and_placement(
    g: &PlaneGraph,
    opts: &EmbedOpts,
    cli: &Cli,
) -> planembed::Result<(WeightScheme, BoundaryPlacement)> {
    let scheme = match opts.weights.as_str() {
        "barycentric" => solver::barycentric_weights(g)?,
        spec if spec.starts_with("random:") => {
            let seed: u64 = spec["random:".len()..]
                .parse()
                .map_err(|_| Error::ParseError(format!("invalid weight spec: {spec}")))?;
            solver::random_weight_scheme(g, seed)?
        }
        "random" => solver::random_weight_scheme(g, cli.seed)?,
        spec if spec.starts_with("file:") => {
            let path = PathBuf::from(&spec["file:".len()..]);
            let text = read(&path)?;
            let raw: WeightFile = io::parse_json(&text, &path.display().to_string())?;
            io::weights_from_file(g, &raw)?
        }
        spec => return Err(Error::ParseError(format!("invalid weight spec: {spec}"))),
    };
    let cycle = g.outer_cycle_ccw()?;
    let placement = match opts.placement.as_str() {
        "regular" => solver::regular_polygon_placement(&cycle, cli.radius)?,
        spec if spec.starts_with("regular:") => {
            let radius: f64 = spec["regular:".len()..]
                .parse()
                .map_err(|_| Error::ParseError(format!("invalid placement spec: {spec}")))?;
            solver::regular_polygon_placement(&cycle, radius)?
        }
        spec if spec.starts_with("file:") => {
            let path = PathBuf::from(&spec["file:".len()..]);
            let c = load_coords_partial(g, &path, &cycle)?;
            let points = cycle.iter().map(|v| c[v]).collect();
            BoundaryPlacement::new(cycle.clone(), points)?
        }
        spec => return Err(Error::ParseError(format!("invalid placement spec: {spec}"))),
    };
    Ok((scheme, placement))
}

/// Load a coordinate file required to cover at least the given vertices.
fn load_coords_partial(
    g: &PlaneGraph,
    path: &Path,
    required: &[planembed::VertexId],
) -> planembed::Result<Coords> {
    let text = read(path)?;
    let json: CoordsJson = io::parse_json(&text, &path.display().to_string())?;
    let mut out: Coords = BTreeMap::new();
    for (id, &[x, y]) in &json.coords {
        let v = g
            .index_of(id)
            .ok_or_else(|| Error::UnknownVertex(id.clone(), id.clone()))?;
        out.insert(v, (x, y));
    }
    for &v in required {
        if !out.contains_key(&v) {
            return Err(Error::MissingCoordinate(g.id(v).to_string()));
        }
    }
    Ok(out)
}

fn run_embed(g: &PlaneGraph, opts: &EmbedOpts, cli: &Cli) -> planembed::Result<EmbeddingResult> {
    let (scheme, placement) = scheme_and_placement(g, opts, cli)?;
    if opts.delta > 0.0 {
        let tri = triangulate(g)?;
        solver::perturbed_map(g, &scheme, &placement, &tri, opts.delta)
    } else {
        solver::convex_combination_map(g, &scheme, &placement)
    }
}
