//! Command-line front end: deterministic, newline-delimited JSON on stdout
//! (DOT/SVG opt-in), diagnostics on stderr. Exit codes: 0 success, 1 failed
//! verification or runtime failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use torslat::arcs::{enumerate_arcs, render_arcs_svg, render_svg, ArcDiagram};
use torslat::iso::{phi, verify_isomorphism, IsoReport};
use torslat::strings::{enumerate_indecomposables, Orientation, StringModule};
use torslat::torsion::{build_tors_lattice, tors_to_json, Algebra, TorsLattice};
use torslat::weak::{build_weak_order, delta, Permutation};
use torslat::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(
    name = "torslat",
    version,
    about = "Torsion-class lattices of RA_n, noncrossing arc diagrams, and the weak order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposable modules of RA_n, one JSON record per line.
    Ind { n: usize },
    /// Hom dimension between two modules, by the interval formula and by
    /// exact linear algebra. Modules are given as ids, "S2", or "1-3:RL".
    Hom {
        n: usize,
        module: String,
        other: String,
    },
    /// The lattice of torsion classes of RA_n.
    Lattice {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Attach brick labels to cover edges (DOT output).
        #[arg(long)]
        labels: bool,
    },
    /// The weak order on permutations of {0, …, n}.
    Weak {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Faces of the canonical join complex of tors RA_n, one JSON array of
    /// brick module ids per line.
    Cjc { n: usize },
    /// Arcs on n+1 nodes, one JSON record per line.
    Arcs {
        n: usize,
        /// Emit the faces of the arc complex instead of the arc list.
        #[arg(long)]
        complex: bool,
        /// Also write an SVG drawing of all arcs to this file.
        #[arg(long, value_name = "FILE")]
        render: Option<PathBuf>,
    },
    /// Arc diagram of a permutation (e.g. "210" or "3,1,0,2").
    Delta {
        perm: String,
        /// Also write an SVG drawing of the diagram to this file.
        #[arg(long, value_name = "FILE")]
        render: Option<PathBuf>,
    },
    /// Permutation image of a torsion class under phi.
    Phi {
        n: usize,
        /// Class id (BFS discovery order of the lattice construction).
        #[arg(long)]
        class: usize,
    },
    /// Build both lattices at rank n and verify the isomorphism; prints the
    /// report as JSON and exits 0 only if every check passes.
    Verify { n: usize },
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Runtime(String),
}

impl AppError {
    fn usage(e: impl std::fmt::Display) -> Self {
        AppError::Usage(e.to_string())
    }

    fn runtime(e: impl std::fmt::Display) -> Self {
        AppError::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let budget = match read_budget() {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, budget) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Element cap for every exhaustive construction; `TORSLAT_BUDGET`
/// overrides the default.
fn read_budget() -> Result<usize, String> {
    match std::env::var("TORSLAT_BUDGET") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("TORSLAT_BUDGET must be a positive integer, got {s:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(e.to_string()),
    }
}

fn run(command: Command, budget: usize) -> Result<ExitCode, AppError> {
    match command {
        Command::Ind { n } => {
            let modules = enumerate_indecomposables(n).map_err(AppError::usage)?;
            let mut out = std::io::stdout().lock();
            for m in &modules {
                emit(&mut out, &serde_json::to_value(m.to_json()).expect("serializable"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { n, module, other } => {
            let a = parse_module(n, &module)?;
            let b = parse_module(n, &other)?;
            let hom_dim = a.hom_dim(&b).map_err(AppError::usage)?;
            let oracle = a.hom_dim_oracle(&b).map_err(AppError::usage)?;
            println!(
                "{}",
                serde_json::json!({"hom_dim": hom_dim, "hom_dim_oracle": oracle})
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { n, format, labels } => {
            let (alg, tl) = tors(n, budget)?;
            match format {
                Format::Json => println!("{}", tors_to_json(&alg, &tl)),
                Format::Dot => {
                    let node = |id: usize| class_label(&alg, &tl, id);
                    let edge = |brick: usize| alg.modules()[brick].to_string();
                    let edge_fn: Option<&dyn Fn(usize) -> String> =
                        if labels { Some(&edge) } else { None };
                    print!("{}", tl.lattice().to_dot(&node, edge_fn));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Weak { n, format } => {
            if n < 1 {
                return Err(AppError::Usage("rank must be at least 1".into()));
            }
            let wo = build_weak_order(n, budget).map_err(AppError::runtime)?;
            match format {
                Format::Json => {
                    let elements: Vec<String> =
                        wo.perms().iter().map(Permutation::to_string).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": n,
                            "elements": elements,
                            "covers": wo.lattice().covers(),
                        })
                    );
                }
                Format::Dot => {
                    let node = |id: usize| wo.perms()[id].to_string();
                    print!("{}", wo.lattice().to_dot(&node, None));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cjc { n } => {
            let (_alg, tl) = tors(n, budget)?;
            let complex = tl
                .lattice()
                .canonical_join_complex()
                .map_err(AppError::runtime)?;
            let mut faces: Vec<Vec<usize>> = Vec::with_capacity(complex.len());
            for face in complex {
                let mut bricks = Vec::with_capacity(face.len());
                for ji in face {
                    bricks.push(tl.ji_brick(ji).ok_or_else(|| {
                        AppError::Runtime(format!("class {ji} has no brick label"))
                    })?);
                }
                bricks.sort_unstable();
                faces.push(bricks);
            }
            faces.sort();
            let mut out = std::io::stdout().lock();
            for face in faces {
                emit(&mut out, &serde_json::json!(face))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Arcs { n, complex, render } => {
            let arcs = enumerate_arcs(n).map_err(AppError::usage)?;
            let mut out = std::io::stdout().lock();
            if complex {
                let faces = torslat::arcs::arc_complex(n, budget).map_err(AppError::runtime)?;
                for face in faces {
                    emit(&mut out, &serde_json::json!(face))?;
                }
            } else {
                for a in &arcs {
                    emit(&mut out, &serde_json::to_value(a.to_json()).expect("serializable"))?;
                }
            }
            if let Some(path) = render {
                write_file(&path, &render_arcs_svg(n, &arcs))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta { perm, render } => {
            let w = Permutation::parse(&perm).map_err(AppError::usage)?;
            let arcs = delta(&w);
            let mut out = std::io::stdout().lock();
            for a in &arcs {
                emit(&mut out, &serde_json::to_value(a.to_json()).expect("serializable"))?;
            }
            if let Some(path) = render {
                let diagram = ArcDiagram::new(w.rank(), arcs).map_err(AppError::runtime)?;
                write_file(&path, &render_svg(&diagram))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi { n, class } => {
            let (alg, tl) = tors(n, budget)?;
            let class = tl
                .classes()
                .get(class)
                .ok_or_else(|| AppError::Usage(format!("class id {class} is out of range")))?;
            let w = phi(&alg, class).map_err(AppError::runtime)?;
            println!("{}", serde_json::to_string(&w).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n } => {
            let report = verify_isomorphism(n, budget).map_err(AppError::runtime)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            if report.ok() {
                eprintln!("rank {n}: all checks passed");
            } else {
                for f in &report.failures {
                    eprintln!("rank {n}: {f}");
                }
            }
            Ok(ExitCode::from(report_exit_code(&report)))
        }
    }
}

fn tors(n: usize, budget: usize) -> Result<(Algebra, TorsLattice), AppError> {
    let alg = Algebra::new(n).map_err(AppError::usage)?;
    let tl = build_tors_lattice(&alg, budget).map_err(AppError::runtime)?;
    Ok((alg, tl))
}

/// 0 when every flag passed, 1 otherwise.
fn report_exit_code(report: &IsoReport) -> u8 {
    u8::from(!report.ok())
}

fn class_label(alg: &Algebra, tl: &TorsLattice, id: usize) -> String {
    let names: Vec<String> = tl.classes()[id]
        .members()
        .iter()
        .map(|&m| alg.modules()[m].to_string())
        .collect();
    format!("{id}: {{{}}}", names.join(", "))
}

fn emit(out: &mut impl Write, value: &serde_json::Value) -> Result<(), AppError> {
    writeln!(out, "{value}").map_err(AppError::runtime)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), AppError> {
    std::fs::write(path, contents)
        .map_err(|e| AppError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

/// Accepts a module id, a simple like "S2", or support-and-word like
/// "1-3:RL" ("1-1:" is the simple at vertex 1).
fn parse_module(n: usize, spec: &str) -> Result<StringModule, AppError> {
    let spec = spec.trim();
    if let Ok(id) = spec.parse::<usize>() {
        let modules = enumerate_indecomposables(n).map_err(AppError::usage)?;
        return modules
            .get(id)
            .cloned()
            .ok_or_else(|| AppError::Usage(format!("module id {id} is out of range")));
    }
    if let Some(vertex) = spec.strip_prefix('S') {
        let i: usize = vertex
            .parse()
            .map_err(|_| AppError::Usage(format!("bad module spec {spec:?}")))?;
        return StringModule::simple(n, i).map_err(AppError::usage);
    }
    let (support, word) = spec
        .split_once(':')
        .ok_or_else(|| AppError::Usage(format!("bad module spec {spec:?}")))?;
    let (p, q) = support
        .split_once('-')
        .ok_or_else(|| AppError::Usage(format!("bad module spec {spec:?}")))?;
    let p: usize = p
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("bad module spec {spec:?}")))?;
    let q: usize = q
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("bad module spec {spec:?}")))?;
    let word = word
        .chars()
        .map(|c| match c {
            'L' => Ok(Orientation::L),
            'R' => Ok(Orientation::R),
            _ => Err(AppError::Usage(format!("bad module spec {spec:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    StringModule::new(n, p, q, word).map_err(AppError::usage)
}
