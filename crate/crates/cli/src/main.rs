use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gpr_core::compare::compare;
use gpr_core::geometry::ball::{electrified_distance, CayleyBall, DEFAULT_VERTEX_CAP};
use gpr_core::report::analyze;
use gpr_core::squares::SquareStructure;
use gpr_core::{parse_graph, Error, GraphProduct, SimplicialGraph};

/// Invariants and word geometry of graph products of finite cyclic groups.
#[derive(Parser)]
#[command(name = "gpr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one graph.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare two graphs by quasi-isometry invariants.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the normal form of a word.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Word distance between two elements.
    Distance {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Distance in the electrification, measured inside a finite ball.
        #[arg(long, requires = "radius")]
        electrified: bool,
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Enumerate the ball around the identity.
    Ball {
        file: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        electrified: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Flat grid spanned by the two diagonals of an induced square.
    Flat {
        file: PathBuf,
        /// First diagonal, as `u,v`.
        #[arg(long)]
        diag1: String,
        /// Second diagonal, as `a,b`.
        #[arg(long)]
        diag2: String,
        #[arg(long)]
        size: usize,
    },
    /// Electrification verdict with uncovered squares.
    Electric { file: PathBuf },
}

enum Failure {
    Usage(String),
    Input(String),
    Cap(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Cap(m) => f.write_str(m),
        }
    }
}

fn fail(path: &Path, e: Error) -> Failure {
    let msg = format!("{}: {e}", path.display());
    match e {
        Error::CapExceeded { .. } => Failure::Cap(msg),
        _ => Failure::Input(msg),
    }
}

fn load(path: &Path) -> Result<SimplicialGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| fail(path, e.into()))
}

fn pair(g: &SimplicialGraph, path: &Path, text: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!("expected two comma-separated vertices, got `{text}`")));
    }
    let u = g.vertex_or_err(parts[0]).map_err(|e| fail(path, e))?;
    let v = g.vertex_or_err(parts[1]).map_err(|e| fail(path, e))?;
    Ok((u, v))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Analyze { file, json } => {
            let report = analyze(&load(&file)?);
            Ok(if json { report.to_json() } else { report.to_text() })
        }
        Command::Compare { a, b, json } => {
            let verdict = compare(&load(&a)?, &load(&b)?);
            Ok(if json { verdict.to_json() } else { verdict.to_text() })
        }
        Command::Reduce { file, word } => {
            let g = load(&file)?;
            let gp = GraphProduct::new(&g);
            let x = gp.element(&word).map_err(|e| fail(&file, e))?;
            Ok(format!("{}\n", gp.format(&x)))
        }
        Command::Distance {
            file,
            from,
            to,
            electrified,
            radius,
            cap,
        } => {
            let g = load(&file)?;
            let gp = GraphProduct::new(&g);
            let x = gp.element(&from).map_err(|e| fail(&file, e))?;
            let y = gp.element(&to).map_err(|e| fail(&file, e))?;
            match radius.filter(|_| electrified) {
                Some(r) => {
                    let d = electrified_distance(&g, &x, &y, r, cap).map_err(|e| fail(&file, e))?;
                    Ok(format!("{} (electrified, radius {})\n", d.value, d.radius))
                }
                None => Ok(format!("{}\n", gp.distance(&x, &y).map_err(|e| fail(&file, e))?)),
            }
        }
        Command::Ball {
            file,
            radius,
            count_only,
            electrified,
            cap,
        } => {
            let g = load(&file)?;
            let gp = GraphProduct::new(&g);
            let ball = CayleyBall::build(&g, radius, electrified, cap).map_err(|e| fail(&file, e))?;
            if count_only {
                return Ok(format!("{}\n", ball.len()));
            }
            let mut out = format!("vertices: {}\nedges: {}\n", ball.len(), ball.edges().len());
            let spheres: Vec<String> = ball.sphere_sizes().iter().map(usize::to_string).collect();
            out += &format!("spheres: {}\n", spheres.join(" "));
            if electrified {
                out += &format!(
                    "cone classes: {}\ncone edges: {}\n",
                    ball.cone_classes().len(),
                    ball.cone_edges().len()
                );
            }
            for x in ball.elements() {
                out += &format!("{}\n", gp.format(x));
            }
            Ok(out)
        }
        Command::Flat {
            file,
            diag1,
            diag2,
            size,
        } => {
            let g = load(&file)?;
            let gp = GraphProduct::new(&g);
            let d1 = pair(&g, &file, &diag1)?;
            let d2 = pair(&g, &file, &diag2)?;
            let grid = gp.flat_witness(d1, d2, size).map_err(|e| fail(&file, e))?;
            let mut out = String::new();
            for ((i, j), p) in grid.points() {
                out += &format!("{i} {j} {}\n", gp.format(p));
            }
            let isometric = grid.is_isometric(&gp).map_err(|e| fail(&file, e))?;
            out += &format!("isometric: {isometric}\n");
            Ok(out)
        }
        Command::Electric { file } => {
            let g = load(&file)?;
            let verdict = SquareStructure::new(&g).electrification_hyperbolic();
            let mut out = format!("electrification hyperbolic: {}\n", verdict.hyperbolic);
            for sq in &verdict.uncovered {
                out += &format!("uncovered square: {}\n", g.format_set(sq.vertices));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("gpr: {f}");
            ExitCode::from(match f {
                Failure::Usage(_) | Failure::Input(_) => 1,
                Failure::Cap(_) => 2,
            })
        }
    }
}
