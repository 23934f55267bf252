//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain-negative answer (not a hypertree,
//! infeasible demands, validation failures), 2 usage or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypershrink::gen::{adversarial_star, random_hypertree};
use hypershrink::recognition::{Recognition, DEFAULT_VERTEX_LIMIT};
use hypershrink::{
    clique_graph, is_hypertree, is_hypertree_bruteforce, orient_floor, orient_with_demands,
    rainbow_spanning_tree, shrink_hypertree_with_k, star_graph, validate, verify_shrinking,
    DemandFunction, Hypergraph, OrientationResult,
};

use crate::format::{self, HypergraphFormat};
use crate::{dot, report};

#[derive(Parser, Debug)]
#[command(
    name = "hypershrink",
    version,
    about = "Shrink hypertrees to degree-preserving spanning trees"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expansion {
    /// One star per hyperedge, centred at its head in the floor orientation.
    Star,
    /// One clique per hyperedge.
    Clique,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a file holds a valid simple hypergraph.
    Validate { file: PathBuf },
    /// Decide whether a hypergraph is a hypertree.
    Check {
        file: PathBuf,
        /// Use the exhaustive subset check and print a witness on failure
        /// (at most 20 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Shrink a hypertree to a spanning tree keeping max(1, floor(d/k))
    /// of every vertex degree; the verification summary goes to stderr.
    Shrink {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
        /// Degree divisor (at least the rank; defaults to the rank).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Orient hyperedges to meet per-vertex indegree demands.
    Orient {
        file: PathBuf,
        /// Demand list (JSON array or whitespace-separated); defaults to
        /// floor(degree / k).
        #[arg(long)]
        demands: Option<PathBuf>,
        /// Divisor for the default demands (defaults to the rank).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Find a rainbow spanning tree of the star or clique expansion.
    Rainbow {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Expansion::Star)]
        graph: Expansion,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
    },
    /// Generate a random hypertree (or, with --star, the hub stress case).
    Gen {
        #[arg(long, required_unless_present = "star")]
        n: Option<usize>,
        /// Maximum hyperedge size (at least 2).
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of enlarging each tree edge.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Emit the hub hypertree with this many size-k hyperedges at vertex 0.
        #[arg(long)]
        star: Option<usize>,
        #[arg(long, value_enum, default_value_t = HypergraphFormat::Json)]
        format: HypergraphFormat,
        /// Also write the witness tree as JSON to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Shrink many random hypertrees and print per-trial bound statistics
    /// as CSV.
    Bench {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

enum Failure {
    /// Domain-negative answer already reported on stdout.
    Negative,
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_raw(path: &Path) -> Result<format::HypergraphFile, Failure> {
    format::parse_hypergraph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    let raw = load_raw(path)?;
    Hypergraph::new(raw.n, raw.edges)
        .map_err(|r| usage(format!("{}: invalid hypergraph:\n{r}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write failed: {e}")))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Negative) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => {
            let raw = load_raw(&file)?;
            let report = validate(raw.n, &raw.edges);
            if report.is_valid() {
                emit(out, "valid\n")
            } else {
                emit(out, &format!("{report}\n"))?;
                Err(Failure::Negative)
            }
        }
        Command::Check { file, oracle } => {
            let h = load(&file)?;
            if oracle {
                match is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT).map_err(usage)? {
                    Recognition::Hypertree => emit(out, "hypertree\n"),
                    Recognition::NotHypertree(w) => {
                        emit(out, &format!("not a hypertree: {w}\n"))?;
                        Err(Failure::Negative)
                    }
                }
            } else if is_hypertree(&h) {
                emit(out, "hypertree\n")
            } else {
                emit(out, "not a hypertree\n")?;
                Err(Failure::Negative)
            }
        }
        Command::Shrink {
            file,
            out: format,
            k,
        } => {
            let h = load(&file)?;
            let k = k.unwrap_or_else(|| h.rank().max(1));
            let s = match shrink_hypertree_with_k(&h, k) {
                Ok(s) => s,
                Err(e) if e.is_not_a_hypertree() => {
                    emit(out, &format!("{e}\n"))?;
                    return Err(Failure::Negative);
                }
                Err(e) => return Err(usage(e)),
            };
            let r = verify_shrinking(&h, &s, Some(k));
            match format {
                Output::Json => emit(out, &(report::shrinking_json(&s, &r) + "\n"))?,
                Output::Dot => emit(out, &dot::shrinking_overlay(&h, &s))?,
            }
            let _ = err.write_all(report::verification_summary(&r).as_bytes());
            if r.all_pass() {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
        Command::Orient { file, demands, k } => {
            let h = load(&file)?;
            let f = match demands {
                Some(path) => {
                    let values = format::parse_demands(&read(&path)?)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    DemandFunction::for_hypergraph(&h, values).map_err(usage)?
                }
                None => {
                    let d = orient_floor(&h, k).map_err(usage)?;
                    return emit(out, &(format::directed_to_json(&d) + "\n"));
                }
            };
            match orient_with_demands(&h, &f).map_err(usage)? {
                OrientationResult::Oriented(d) => emit(out, &(format::directed_to_json(&d) + "\n")),
                OrientationResult::Violator(set) => {
                    let doc = report::violator_json(
                        &set,
                        f.total_over(&set),
                        h.incident_edge_count(&set),
                    );
                    emit(out, &(doc + "\n"))?;
                    Err(Failure::Negative)
                }
            }
        }
        Command::Rainbow {
            file,
            graph,
            out: format,
        } => {
            let h = load(&file)?;
            let g = match graph {
                Expansion::Clique => clique_graph(&h),
                Expansion::Star => star_graph(&orient_floor(&h, None).map_err(usage)?),
            };
            let tree = rainbow_spanning_tree(&g);
            let chosen = tree.as_ref().map(|t| t.edge_indices.clone());
            match format {
                Output::Dot => emit(
                    out,
                    &dot::coloured_graph(&g, chosen.as_deref().unwrap_or(&[])),
                )?,
                Output::Json => {
                    let edges: Vec<[usize; 3]> =
                        g.edges().iter().map(|e| [e.u, e.v, e.colour]).collect();
                    let doc = serde_json::json!({ "edges": edges, "tree": chosen });
                    emit(out, &(doc.to_string() + "\n"))?;
                }
            }
            if tree.is_some() {
                Ok(())
            } else {
                let _ = writeln!(err, "no rainbow spanning tree");
                Err(Failure::Negative)
            }
        }
        Command::Gen {
            n,
            k,
            seed,
            p,
            star,
            format,
            witness,
        } => {
            if k < 2 {
                return Err(usage(format!("--k must be at least 2, got {k}")));
            }
            let (h, tree) = match star {
                Some(m) => {
                    let h = adversarial_star(m, k).map_err(usage)?;
                    let tree = hypershrink::shrink_hypertree(&h)
                        .map(|s| s.assignment.iter().map(|&j| s.tree[j]).collect())
                        .map_err(usage)?;
                    (h, tree)
                }
                None => {
                    random_hypertree(n.expect("required by clap"), k, seed, p).map_err(usage)?
                }
            };
            if let Some(path) = witness {
                let pairs: Vec<[usize; 2]> = tree.iter().map(|&(u, v)| [u, v]).collect();
                let doc = serde_json::json!({ "tree": pairs }).to_string() + "\n";
                std::fs::write(&path, doc)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            emit(out, &format::write_hypergraph(&h, format))
        }
        Command::Bench {
            trials,
            n,
            k,
            seed,
            p,
        } => {
            let cfg = report::BenchConfig {
                trials,
                n,
                k,
                seed,
                p,
            };
            let rows = report::bench(&cfg).map_err(usage)?;
            let mut buf = Vec::new();
            report::write_csv(&rows, &mut buf).map_err(usage)?;
            emit(out, &String::from_utf8(buf).expect("csv output is UTF-8"))
        }
    }
}
