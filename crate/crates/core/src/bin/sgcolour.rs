//! Command-line front end. Exit status: 0 success, 1 infeasible or failed
//! verification, 2 usage or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use signed_colouring::brooks::{brooks_colour, colour_complete};
use signed_colouring::io::{parse_graph_file, parse_partition_file, render_colouring, render_graph, PartitionFileKind};
use signed_colouring::structure::construct_sharpness_graph;
use signed_colouring::verify::{EnumerationSpec, TheoremId, Verifier, DEFAULT_VERTEX_CAP};
use signed_colouring::{
    check_proper, chromatic_number, find_n_colouring, gamma_pair, BalanceReport, Colouring, SignedGraph,
};

#[derive(Parser)]
#[command(name = "sgcolour", version, about = "Colouring of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number with a witness colouring.
    Chi { file: PathBuf },
    /// Find a colouring into M_n.
    Colour {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Constructive Brooks colouring.
    Brooks { file: PathBuf },
    /// Colouring of a signed complete graph.
    Complete { file: PathBuf },
    /// Balance test with switch set or unbalanced circuit.
    Balance { file: PathBuf },
    /// Antibalance test with the vertex partition.
    Antibalance { file: PathBuf },
    /// gamma, gamma* and their sum.
    Gamma { file: PathBuf },
    /// Print the extremal graph G_n.
    ConstructGn { n: usize },
    /// Check a theorem over enumerated or supplied graphs.
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long)]
        long_run: bool,
        /// Enumerate loopless multigraphs with this many parallel edges.
        #[arg(long, default_value_t = 1)]
        multiplicity: usize,
        #[arg(long)]
        connected: bool,
        /// Directory of graph files for planar_conjecture.
        #[arg(long)]
        planar_dir: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// One line per instance.
        #[arg(long)]
        verbose: bool,
    },
    /// Colour a graph from a forest partition or acyclic colouring.
    FromPartition {
        file: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        /// vertex-forests, two-edge-forests, independent-forest or acyclic.
        #[arg(long)]
        kind: String,
    },
}

enum Failure {
    Infeasible(String),
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_graph_file(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Re-checks properness before anything is printed.
fn validated(g: &SignedGraph, phi: &Colouring) -> Outcome {
    check_proper(g, phi).map_err(|v| Failure::Infeasible(format!("internal error: improper colouring ({v})")))?;
    Ok(render_colouring(phi))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Chi { file } => {
            let g = read_graph(&file)?;
            let r = chromatic_number(&g);
            Ok(format!("chi {}\n{}", r.chi, validated(&g, &r.witness)?))
        }
        Command::Colour { file, n } => {
            let g = read_graph(&file)?;
            match find_n_colouring(&g, n) {
                Some(phi) => validated(&g, &phi),
                None => Err(Failure::Infeasible(format!("no colouring into M_{n}"))),
            }
        }
        Command::Brooks { file } => {
            let g = read_graph(&file)?;
            let cert = brooks_colour(&g).map_err(usage)?;
            Ok(format!(
                "bound {}\nclass {}\n{}",
                cert.bound_used,
                cert.exceptional,
                validated(&g, &cert.colouring)?
            ))
        }
        Command::Complete { file } => {
            let g = read_graph(&file)?;
            validated(&g, &colour_complete(&g).map_err(usage)?)
        }
        Command::Balance { file } => {
            let g = read_graph(&file)?;
            match g.balance() {
                BalanceReport::Balanced { switch } => {
                    let set: Vec<String> = switch.iter().map(|v| v.to_string()).collect();
                    Ok(format!("balanced\nswitch {}\n", set.join(" ")))
                }
                BalanceReport::Unbalanced { circuit } => {
                    let vs: Vec<String> = circuit.vertices.iter().map(|v| v.to_string()).collect();
                    Err(Failure::Infeasible(format!("unbalanced\ncircuit {}", vs.join(" "))))
                }
            }
        }
        Command::Antibalance { file } => {
            let g = read_graph(&file)?;
            match g.antibalance_partition() {
                Some(side) => {
                    let s: Vec<String> = side.iter().map(|&b| u8::from(b).to_string()).collect();
                    Ok(format!("antibalanced\npartition {}\n", s.join(" ")))
                }
                None => Err(Failure::Infeasible("not antibalanced".into())),
            }
        }
        Command::Gamma { file } => {
            let g = read_graph(&file)?;
            let gp = gamma_pair(&g);
            Ok(format!("gamma {}\ngamma_star {}\nchi {}\n", gp.gamma, gp.gamma_star, gp.sum()))
        }
        Command::ConstructGn { n } => Ok(render_graph(&construct_sharpness_graph(n).map_err(usage)?)),
        Command::Verify {
            theorem,
            max_vertices,
            long_run,
            multiplicity,
            connected,
            planar_dir,
            jobs,
            verbose,
        } => {
            let theorem: TheoremId = theorem.parse().map_err(usage)?;
            let spec = EnumerationSpec {
                max_vertices,
                connected_only: connected,
                simple_only: multiplicity <= 1,
                max_multiplicity: multiplicity,
                long_run,
                cap: DEFAULT_VERTEX_CAP,
            };
            let mut verifier = Verifier::new(spec).verbose(verbose);
            if let Some(j) = jobs {
                verifier = verifier.jobs(j);
            }
            if let Some(dir) = planar_dir {
                verifier = verifier.with_planar_graphs(read_dir_graphs(&dir)?);
            }
            let report = verifier.run(theorem).map_err(usage)?;
            let mut out = report.render_text();
            if verbose {
                out.push_str(&report.render_lines());
            }
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Infeasible(out))
            }
        }
        Command::FromPartition { file, partition, kind } => {
            let g = read_graph(&file)?;
            let kind: PartitionFileKind = kind.parse().map_err(usage)?;
            let text = fs::read_to_string(&partition).map_err(|e| usage(format!("{}: {e}", partition.display())))?;
            let p = parse_partition_file(&text).map_err(|e| usage(format!("{}: {e}", partition.display())))?;
            let phi = p.colour(&g, kind).map_err(|e| Failure::Infeasible(e.to_string()))?;
            validated(&g, &phi)
        }
    }
}

/// Every `*.txt` file in `dir`, sorted by name.
fn read_dir_graphs(dir: &Path) -> Result<Vec<(String, SignedGraph)>, Failure> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| usage(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| Ok((p.display().to_string(), read_graph(&p)?)))
        .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Infeasible(msg)) => {
            print!("{msg}");
            if !msg.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
