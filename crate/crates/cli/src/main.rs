//! Command-line front end.

mod commands;
mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use equicoh::s1::DEFAULT_MAX_DEGREE;
use equicoh::xray::DEFAULT_XRAY_MAX_DEGREE;
use output::{Format, Outcome, EXIT_OK, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "equicoh", version, about = "Equivariant cohomology of Hamiltonian circle and complexity one torus actions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// In batch mode, stop at the first input that fails.
    #[arg(long, global = true)]
    fail_fast: bool,
    /// Degree cutoff (default 12 for graphs, 8 for x-rays).
    #[arg(long, env = "EQUICOH_MAX_DEGREE", global = true)]
    max_degree: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a decorated graph (or x-ray) for consistency.
    Validate { path: PathBuf },
    /// Poincaré series of the manifold or its fixed set.
    Poincare {
        path: PathBuf,
        /// Equivariant series (divide by 1 - t^2).
        #[arg(long)]
        equivariant: bool,
        /// Series of the fixed set instead of the manifold.
        #[arg(long)]
        fixed: bool,
    },
    /// Basis of one graded piece of the image of restriction to the fixed set.
    Basis {
        path: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Decide whether a class on the fixed set extends to the manifold.
    Check {
        graph: PathBuf,
        class: PathBuf,
        /// Character of a torus acting through the circle, e.g. `1,0`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Localization sum of a class.
    Localize { graph: PathBuf, class: PathBuf },
    /// Equivariant Euler classes of the normal bundles of fixed components.
    Euler {
        path: PathBuf,
        #[arg(long)]
        component: Option<String>,
        /// Print the inverse instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Check an x-ray for consistency.
    XrayValidate { path: PathBuf },
    /// Decide membership of a class over an x-ray.
    XrayCheck { xray: PathBuf, class: PathBuf },
    /// Basis of one graded piece of the image for an x-ray.
    XrayBasis {
        path: PathBuf,
        #[arg(long)]
        degree: u32,
    },
}

/// JSON documents directly inside `dir`, sorted by name.
fn batch_inputs(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Run `f` on `path`, or on every JSON file in it when it is a directory.
/// Batch outputs are buffered per file and emitted in name order.
fn run(path: &Path, cli: &Cli, f: &(dyn Fn(&Path) -> Outcome + Sync)) -> (i32, String) {
    if !path.is_dir() {
        let o = f(path);
        return (o.code, o.render(cli.format));
    }
    let files = match batch_inputs(path) {
        Ok(files) => files,
        Err(e) => {
            let o = Outcome::io(&path.display().to_string(), &e);
            return (o.code, o.render(cli.format));
        }
    };
    let outcomes: Vec<(PathBuf, Outcome)> = if cli.fail_fast {
        let mut done = Vec::new();
        for file in files {
            let o = f(&file);
            let failed = o.code != EXIT_OK;
            done.push((file, o));
            if failed {
                break;
            }
        }
        done
    } else {
        files.into_par_iter().map(|file| {
            let o = f(&file);
            (file, o)
        }).collect()
    };
    let code = outcomes.iter().map(|(_, o)| o.code).max().unwrap_or(EXIT_OK);
    let rendered = match cli.format {
        Format::Text => outcomes
            .iter()
            .map(|(p, o)| format!("== {} ==\n{}", p.display(), o.render(Format::Text)))
            .collect(),
        Format::Json => {
            let docs: Vec<Value> = outcomes
                .iter()
                .map(|(p, o)| json!({"path": p.display().to_string(), "exit": o.code, "output": o.json}))
                .collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("json");
            s.push('\n');
            s
        }
    };
    (code, rendered)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { EXIT_OK as u8 });
        }
    };
    let graph_cutoff = cli.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let xray_cutoff = cli.max_degree.unwrap_or(DEFAULT_XRAY_MAX_DEGREE);
    let (code, out) = match &cli.command {
        Command::Validate { path } => run(path, &cli, &commands::validate),
        Command::Poincare {
            path,
            equivariant,
            fixed,
        } => {
            let opts = commands::PoincareOptions {
                equivariant: *equivariant,
                fixed: *fixed,
                max_degree: graph_cutoff,
            };
            run(path, &cli, &|p| commands::poincare(p, &opts))
        }
        Command::Basis { path, degree } => {
            run(path, &cli, &|p| commands::basis(p, *degree, graph_cutoff))
        }
        Command::Check {
            graph,
            class,
            lambda,
        } => run(class, &cli, &|c| commands::check(graph, c, lambda.as_deref())),
        Command::Localize { graph, class } => run(class, &cli, &|c| commands::localize(graph, c)),
        Command::Euler {
            path,
            component,
            inverse,
        } => run(path, &cli, &|p| commands::euler(p, component.as_deref(), *inverse)),
        Command::XrayValidate { path } => run(path, &cli, &commands::xray_validate),
        Command::XrayCheck { xray, class } => run(class, &cli, &|c| commands::xray_check(xray, c)),
        Command::XrayBasis { path, degree } => {
            run(path, &cli, &|p| commands::xray_basis(p, *degree, xray_cutoff))
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
