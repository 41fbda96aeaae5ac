//! `wg` — weight graphs of nilpotent Lie algebras from the command line.
//!
//! Subcommands: `check` (criteria battery on an edge-list graph), `algebra`
//! (full pipeline from structure constants), `enumerate` (isomorph-free
//! candidate counts), `bounds` (edge-bound table).
//!
//! Exit codes: 0 = success / all conditions hold; 1 = some necessary
//! condition fails; 2 = usage or input error. Reports go to stdout,
//! diagnostics to stderr, so the tool composes in shell pipelines.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wg_core::criteria::{check_weight_graph, f, min_edges, naive_min_edges};
use wg_core::enumeration::{
    candidate_report, enumerate_graphs_where, filter_pipeline, ENUMERATION_MAX,
};
use wg_core::graph::{parse_edge_list, to_dot, write_edge_list};
use wg_core::lie::parse_structure_constants;
use wg_core::weights::max_weight_sums;

mod pipeline;

const EXIT_CONDITION_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "wg",
    version,
    about = "Weight graphs of nilpotent Lie algebras: construction, checks, enumeration, bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Keyvalue,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph (edge-list file) against the weight-graph conditions
    Check {
        /// Edge-list file: header `p q`, then q lines `u v` (u < v)
        file: PathBuf,
        /// Write the graph in DOT format (universal vertices highlighted)
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full pipeline on a structure-constant file
    Algebra {
        /// Structure constants: header `dim n`, then lines `i j k q`
        file: PathBuf,
        /// Write the weight graph in DOT format, vertices labeled by weights
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate graph classes and the candidate filter counts
    Enumerate {
        /// Vertex count, 3..=8
        #[arg(short, long)]
        p: usize,
        /// Dump every graph passing all checks to this directory
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the edge-bound table for p = 3..=max
    Bounds {
        /// Largest vertex count, 3..=64
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    // restore default SIGPIPE so `wg ... | head` terminates quietly
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, dot, format } => cmd_check(&file, dot.as_deref(), format),
        Command::Algebra { file, dot, format } => cmd_algebra(&file, dot.as_deref(), format),
        Command::Enumerate { p, dump, format } => cmd_enumerate(p, dump.as_deref(), format),
        Command::Bounds { max, format } => cmd_bounds(max, format),
    }
}

fn input_error(context: &str, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("wg: {context}: {message}");
    ExitCode::from(EXIT_INPUT_ERROR)
}

fn read_file(path: &std::path::Path) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| input_error(&path.display().to_string(), e))
}

fn write_dot_file(path: &std::path::Path, contents: &str) -> Result<(), ExitCode> {
    fs::write(path, contents).map_err(|e| input_error(&path.display().to_string(), e))
}

fn cmd_check(path: &std::path::Path, dot: Option<&std::path::Path>, format: Format) -> ExitCode {
    let text = match read_file(path) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let graph = match parse_edge_list(&text) {
        Ok(graph) => graph,
        Err(e) => return input_error(&path.display().to_string(), e),
    };
    let report = check_weight_graph(&graph);
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Keyvalue => print!("{}", report.render_keyvalue()),
    }
    if let Some(dot_path) = dot {
        let rendered = to_dot(&graph, None, &graph.universal_vertices());
        if let Err(code) = write_dot_file(dot_path, &rendered) {
            return code;
        }
    }
    if report.overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CONDITION_FAILED)
    }
}

fn cmd_algebra(path: &std::path::Path, dot: Option<&std::path::Path>, format: Format) -> ExitCode {
    let text = match read_file(path) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let algebra = match parse_structure_constants(&text) {
        Ok(algebra) => algebra,
        Err(e) => return input_error(&path.display().to_string(), e),
    };
    let outcome = pipeline::run(&algebra);
    match format {
        Format::Text => print!("{}", outcome.render_text()),
        Format::Keyvalue => print!("{}", outcome.render_keyvalue()),
    }
    if let Some(dot_path) = dot {
        if let Some(rendered) = outcome.weight_graph_dot() {
            if let Err(code) = write_dot_file(dot_path, &rendered) {
                return code;
            }
        } else {
            eprintln!("wg: no weight graph available for DOT output");
        }
    }
    if outcome.clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CONDITION_FAILED)
    }
}

fn cmd_enumerate(p: usize, dump: Option<&std::path::Path>, format: Format) -> ExitCode {
    if !(3..=ENUMERATION_MAX).contains(&p) {
        return input_error("enumerate", format!("p must be in 3..={ENUMERATION_MAX}, got {p}"));
    }
    let report = candidate_report(p).expect("range checked");
    let stages = filter_pipeline(p).expect("range checked");
    match format {
        Format::Text => {
            print!("{}", report.render_text());
            println!("filter pipeline (cumulative):");
            for (name, count) in &stages {
                println!("  {name:<18} {count}");
            }
        }
        Format::Keyvalue => {
            print!("{}", report.render_keyvalue());
            for (name, count) in &stages {
                println!("stage.{name}={count}");
            }
        }
    }
    if let Some(dir) = dump {
        if let Err(e) = fs::create_dir_all(dir) {
            return input_error(&dir.display().to_string(), e);
        }
        let survivors =
            enumerate_graphs_where(p, |g| check_weight_graph(g).overall).expect("range checked");
        for (index, graph) in survivors.iter().enumerate() {
            let name = format!("graph_{:04}_q{:02}.txt", index + 1, graph.edge_count());
            if let Err(e) = fs::write(dir.join(&name), write_edge_list(graph)) {
                return input_error(&name, e);
            }
        }
        eprintln!("wg: wrote {} surviving graphs to {}", survivors.len(), dir.display());
    }
    ExitCode::SUCCESS
}

fn cmd_bounds(max: usize, format: Format) -> ExitCode {
    if !(3..=64).contains(&max) {
        return input_error("bounds", format!("--max must be in 3..=64, got {max}"));
    }
    match format {
        Format::Text => {
            println!(
                "{:>3} {:>7} {:>6} {:>6} {:>6} {:>8}",
                "p", "naive", "sums", "min", "f", "f-(p+1)"
            );
            for p in 3..=max {
                let gap = f(p).expect("p >= 3");
                let margin = if p >= 8 {
                    (gap - (p as i64 + 1)).to_string()
                } else {
                    "-".to_string()
                };
                println!(
                    "{:>3} {:>7} {:>6} {:>6} {:>6} {:>8}",
                    p,
                    naive_min_edges(p),
                    max_weight_sums(p),
                    min_edges(p),
                    gap,
                    margin
                );
            }
        }
        Format::Keyvalue => {
            for p in 3..=max {
                println!("bounds.{p}.naive_min_edges={}", naive_min_edges(p));
                println!("bounds.{p}.max_weight_sums={}", max_weight_sums(p));
                println!("bounds.{p}.min_edges={}", min_edges(p));
                println!("bounds.{p}.f={}", f(p).expect("p >= 3"));
                if p >= 8 {
                    println!("bounds.{p}.f_margin={}", f(p).unwrap() - (p as i64 + 1));
                }
            }
        }
    }
    ExitCode::SUCCESS
}

