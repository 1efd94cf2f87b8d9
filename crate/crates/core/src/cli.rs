//! The `tropkit` batch front end. Inputs are JSON files, outputs are JSON
//! (or a bare scalar) on stdout. Errors go to stderr as
//! `{"error": {"kind": ..., "message": ...}}`; exit code 1 means the
//! mathematics rejected a well-formed request, 2 means bad input.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::enumeration::{self, DEFAULT_MAX_DEGREE};
use crate::jacobian::{self, Jacobian};
use crate::metricgraph::{self, MetricGraph};
use crate::planecurve::{corner_locus, stable_intersection, svg};
use crate::{io, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "tropkit", version, about = "Exact tropical geometry toolkit")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a polynomial at a point.
    Eval {
        poly: PathBuf,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Corner locus of a two-variable polynomial.
    Curve {
        poly: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// x0,y0,x1,y1 as rationals.
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
    },
    /// Stable intersection of two curves.
    Intersect {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Divisors and chip-firing on metric graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Tropical Jacobians.
    #[command(subcommand)]
    Jacobian(JacobianCommand),
    /// Count plane curves of given degree and genus through generic points.
    Count {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        list_diagrams: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Tropical moduli of rational curves.
    #[command(subcommand)]
    Moduli(ModuliCommand),
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// First Betti number.
    Genus { graph: PathBuf },
    /// Canonical divisor.
    Canonical { graph: PathBuf },
    /// Principal divisor of a piecewise linear function.
    DivisorOf { graph: PathBuf, function: PathBuf },
    /// Baker-Norine rank.
    Rank { graph: PathBuf, divisor: PathBuf },
    /// Check Riemann-Roch for one divisor.
    RrCheck { graph: PathBuf, divisor: PathBuf },
    /// Reduced representative of the divisor class.
    Reduce {
        graph: PathBuf,
        divisor: PathBuf,
        /// Base vertex name; the first vertex by default.
        #[arg(long)]
        q: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum JacobianCommand {
    /// Period matrix in a cycle basis.
    Period { graph: PathBuf },
    /// Abel-Jacobi image of a degree-zero divisor.
    AbelJacobi { graph: PathBuf, divisor: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ModuliCommand {
    /// Cross-ratios of a leaf-labelled metric tree.
    CrossRatio { tree: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn graph(path: &Path) -> Result<MetricGraph> {
    io::graph_from_json(&read(path)?)
}

fn json_text(v: &Value) -> String {
    io::to_text(v)
}

fn execute(cli: &Cli) -> Result<String> {
    Ok(match &cli.command {
        Command::Eval { poly, at } => {
            let f = io::polynomial_from_json(&read(poly)?)?;
            let x = io::parse_rational_list(at)?;
            format!("{}\n", f.evaluate(&x)?)
        }
        Command::Curve { poly, svg: svg_path, bbox } => {
            let f = io::polynomial_from_json(&read(poly)?)?;
            let c = corner_locus(&f)?;
            if let Some(path) = svg_path {
                let bbox = match bbox {
                    Some(s) => {
                        let v = io::parse_rational_list(s)?;
                        let [x0, y0, x1, y1]: [_; 4] = v
                            .try_into()
                            .map_err(|_| Error::Input("--bbox needs four rationals".into()))?;
                        if x0 >= x1 || y0 >= y1 {
                            return Err(Error::Input("--bbox must have x0 < x1 and y0 < y1".into()));
                        }
                        svg::BoundingBox { x0, y0, x1, y1 }
                    }
                    None => svg::BoundingBox::around(&c),
                };
                write(path, &svg::render(&c, &bbox))?;
            }
            json_text(&io::curve_to_json(&c))
        }
        Command::Intersect { first, second, seed } => {
            let c1 = io::curve_from_json(&read(first)?)?;
            let c2 = io::curve_from_json(&read(second)?)?;
            json_text(&io::report_to_json(&stable_intersection(&c1, &c2, *seed)?))
        }
        Command::Graph(cmd) => match cmd {
            GraphCommand::Genus { graph: g } => format!("{}\n", graph(g)?.genus()),
            GraphCommand::Canonical { graph: g } => {
                let g = graph(g)?;
                json_text(&io::divisor_to_json(&g, &g.canonical_divisor()?))
            }
            GraphCommand::DivisorOf { graph: g, function } => {
                let g = graph(g)?;
                let phi = io::function_from_json(&g, &read(function)?)?;
                json_text(&io::divisor_to_json(&g, &metricgraph::divisor_of(&g, &phi)))
            }
            GraphCommand::Rank { graph: g, divisor } => {
                let g = graph(g)?;
                let d = io::divisor_from_json(&g, &read(divisor)?)?;
                format!("{}\n", metricgraph::rank(&g, &d)?)
            }
            GraphCommand::RrCheck { graph: g, divisor } => {
                let g = graph(g)?;
                let d = io::divisor_from_json(&g, &read(divisor)?)?;
                format!("{}\n", metricgraph::riemann_roch_check(&g, &d)?)
            }
            GraphCommand::Reduce { graph: g, divisor, q } => {
                let g = graph(g)?;
                let d = io::divisor_from_json(&g, &read(divisor)?)?;
                let q = match q {
                    Some(name) => g
                        .vertex_id(name)
                        .ok_or_else(|| Error::Graph(format!("unknown vertex {name:?}")))?,
                    None => 0,
                };
                let r = metricgraph::reduced_divisor(&g, &d, &metricgraph::GraphPoint::Vertex(q))?;
                json_text(&io::divisor_to_json(&g, &r))
            }
        },
        Command::Jacobian(cmd) => match cmd {
            JacobianCommand::Period { graph: g } => {
                json_text(&io::period_matrix_to_json(&jacobian::period_matrix(&graph(g)?)?))
            }
            JacobianCommand::AbelJacobi { graph: g, divisor } => {
                let g = graph(g)?;
                let d = io::divisor_from_json(&g, &read(divisor)?)?;
                json_text(&io::jacobian_point_to_json(&Jacobian::new(&g)?.abel_jacobi(&d)?))
            }
        },
        Command::Count {
            degree,
            genus,
            list_diagrams,
            max_degree,
        } => {
            if *degree == 0 {
                return Err(Error::Input("degree must be at least 1".into()));
            }
            if degree > max_degree {
                return Err(Error::Input(format!(
                    "degree {degree} exceeds --max-degree {max_degree}"
                )));
            }
            let mut out = format!("{}\n", enumeration::count_curves(*degree, *genus));
            if *list_diagrams {
                let ds: Vec<Value> = enumeration::enumerate_floor_diagrams(*degree, *genus)
                    .iter()
                    .map(io::floor_diagram_to_json)
                    .collect();
                out.push_str(&json_text(&Value::Array(ds)));
            }
            out
        }
        Command::Moduli(ModuliCommand::CrossRatio { tree }) => {
            let t = io::tree_from_json(&read(tree)?)?;
            json_text(&io::cross_ratios_to_json(&t.cross_ratios()?))
        }
    })
}

fn report(kind: &str, message: &str) {
    let v = json!({"error": {"kind": kind, "message": message}});
    eprintln!("{}", serde_json::to_string(&v).expect("values always serialize"));
}

fn configure_threads() {
    if let Some(n) = std::env::var("TROPKIT_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a pool may already exist when called as a library; keep it then
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Runs the front end on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            report("usage", &e.to_string());
            return 2;
        }
    };
    configure_threads();
    let result = execute(&cli).and_then(|text| match &cli.output {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) if e.is_input() => {
            report("input", &e.to_string());
            2
        }
        Err(e) => {
            report("domain", &e.to_string());
            1
        }
    }
}
