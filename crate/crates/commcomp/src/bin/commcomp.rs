//! Thin command-line front end over the library: reduction, exact solvers,
//! protocol tools, the decision pipeline, and the seeded self-check.
//!
//! Exit codes: 0 success, 1 property or verification failure, 2 bad input,
//! 3 budget exhausted before a conclusive answer.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commcomp::graphs::{min_vertex_cover, parse_graph, Graph};
use commcomp::matrix::{parse_matrix, ColLabel, CommMatrix, RowLabel};
use commcomp::pipeline::{decide_vc_via_cc, Verdict};
use commcomp::protocols::{
    binarize, build_explicit_protocol, col_naming_protocol, evaluate, metrics, parse_protocol,
    row_naming_protocol, serialize_protocol, verify_protocol, Protocol,
};
use commcomp::reduction::{build_fg, build_padded};
use commcomp::selftest::property_suite;
use commcomp::solvers::{cc_exact, chi1, l_exact, Budget};
use commcomp::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "commcomp", version, about = "Exact communication-complexity toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the gadget matrix of a graph; with --k, the padded matrix.
    Reduce {
        /// Graph file, or - for stdin.
        #[arg(default_value = "-")]
        graph: PathBuf,
        /// Cover-size threshold; pads the matrix with identity blocks.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum vertex cover of a graph.
    Vc {
        #[arg(default_value = "-")]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact 1-partition number of a matrix.
    Chi1 {
        #[arg(default_value = "-")]
        matrix: PathBuf,
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Print the witness rectangles.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact deterministic communication complexity of a matrix.
    Cc {
        #[arg(default_value = "-")]
        matrix: PathBuf,
        /// Stop searching above this depth and report bounds.
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum leaf count of a protocol tree for a matrix.
    Leaves {
        #[arg(default_value = "-")]
        matrix: PathBuf,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build, evaluate, verify, binarize, or measure protocol trees.
    #[command(subcommand)]
    Protocol(ProtocolCmd),
    /// Decide whether a graph has a vertex cover of size at most k.
    Decide {
        #[arg(default_value = "-")]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the seeded property suite and print one line per property.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cases per property.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Maximum rows/columns of the random matrices.
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ProtocolCmd {
    /// Build a protocol for a graph's gadget matrix from a vertex cover.
    Build {
        #[arg(default_value = "-")]
        graph: PathBuf,
        /// Comma-separated cover vertices, e.g. 1,3 (required for explicit).
        #[arg(long, value_delimiter = ',')]
        cover: Vec<usize>,
        /// Pad the matrix for this cover-size threshold first.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Kind::Explicit)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a protocol on one (row, column) input pair.
    Eval {
        protocol: PathBuf,
        #[arg(long)]
        row: String,
        #[arg(long)]
        col: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a protocol against a matrix on every input pair.
    Verify {
        protocol: PathBuf,
        matrix: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand every node to fan-out 2; depth becomes the binary depth.
    Binarize {
        #[arg(default_value = "-")]
        protocol: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Depth, binary depth, and leaf counts of a protocol.
    Metrics {
        #[arg(default_value = "-")]
        protocol: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Cover-driven protocol from the reduction.
    Explicit,
    /// Bob names his column, Alice answers.
    ColNaming,
    /// Alice names her row, Bob answers.
    RowNaming,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Reduce { graph, k, out } => {
            let g = read_graph(&graph)?;
            let m = match k {
                Some(k) => {
                    let (m, p) = build_padded(&g, k);
                    eprintln!("l {} d0 {} d1 {} d {}", p.l, p.d0, p.d1, p.d);
                    m
                }
                None => build_fg(&g),
            };
            write_out(&out, &m.to_text())?;
            Ok(0)
        }
        Cmd::Vc { graph, out } => {
            let g = read_graph(&graph)?;
            let r = min_vertex_cover(&g);
            let witness: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            write_out(&out, &format!("size {}\ncover {}\n", r.size, witness.join(" ")))?;
            Ok(0)
        }
        Cmd::Chi1 { matrix, budget_seconds, witness, out } => {
            let m = read_matrix(&matrix)?;
            let r = chi1(&m, budget(budget_seconds)).map_err(bad_input)?;
            let mut text = match r.exact() {
                Some(v) => format!("chi1 {}\n", v),
                None => format!("chi1-lower {}\nchi1-upper {}\n", r.lower, r.upper),
            };
            if witness {
                for rect in &r.witness.rects {
                    text.push_str(&describe_rect(&m, rect.rows(), rect.cols()));
                }
            }
            write_out(&out, &text)?;
            Ok(if r.exact().is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Cmd::Cc { matrix, max_depth, budget_seconds, out } => {
            let m = read_matrix(&matrix)?;
            let r = cc_exact(&m, max_depth, budget(budget_seconds)).map_err(bad_input)?;
            let text = match r.exact() {
                Some(v) => format!("cc {}\n", v),
                None => format!("cc-lower {}\ncc-upper {}\n", r.lower, r.upper),
            };
            write_out(&out, &text)?;
            Ok(if r.exact().is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Cmd::Leaves { matrix, budget_seconds, out } => {
            let m = read_matrix(&matrix)?;
            let r = l_exact(&m, budget(budget_seconds)).map_err(bad_input)?;
            let text = match r.exact() {
                Some(v) => format!("leaves {}\n", v),
                None => format!("leaves-lower {}\nleaves-upper {}\n", r.lower, r.upper),
            };
            write_out(&out, &text)?;
            Ok(if r.exact().is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Cmd::Protocol(cmd) => run_protocol(cmd),
        Cmd::Decide { graph, k, budget_seconds, out } => {
            let g = read_graph(&graph)?;
            let r = match decide_vc_via_cc(&g, k, budget(budget_seconds)) {
                Ok(r) => r,
                Err(e @ Error::VerdictMismatch { .. }) => {
                    return Err((EXIT_FAILED, e.to_string()))
                }
                Err(e) => return Err(bad_input(e)),
            };
            let verdict = match r.verdict {
                Some(Verdict::AtMost) => "at-most",
                Some(Verdict::Exceeds) => "exceeds",
                None => "inconclusive",
            };
            let text = format!(
                "n {}\nedges {}\nk {}\nl {}\nd0 {}\nd1 {}\nchi1-lower {}\nchi1-upper {}\n\
                 cc-lower {}\ncc-upper {}\ncover-size {}\nverdict {}\ncertified {}\n",
                r.n, r.m_edges, r.k, r.params.l, r.params.d0, r.params.d1, r.chi1_lower,
                r.chi1_upper, r.cc_lower, r.cc_upper, r.cover_size, verdict, r.certified,
            );
            write_out(&out, &text)?;
            Ok(if r.verdict.is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Cmd::Selftest { seed, count, max_dim, out } => {
            if count == 0 || max_dim == 0 {
                return Err((EXIT_BAD_INPUT, "count and max-dim must be positive".into()));
            }
            let report = property_suite(seed, count, max_dim);
            write_out(&out, &report.text())?;
            Ok(if report.all_passed { 0 } else { EXIT_FAILED })
        }
    }
}

fn run_protocol(cmd: ProtocolCmd) -> Outcome {
    match cmd {
        ProtocolCmd::Build { graph, cover, k, kind, out } => {
            let g = read_graph(&graph)?;
            let p = match kind {
                Kind::Explicit => {
                    let params = k.map(|k| commcomp::reduction::ReductionParams::new(&g, k));
                    build_explicit_protocol(&g, &cover, params.as_ref()).map_err(bad_input)?
                }
                Kind::ColNaming => col_naming_protocol(&padded_or_plain(&g, k)),
                Kind::RowNaming => row_naming_protocol(&padded_or_plain(&g, k)),
            };
            write_out(&out, &serialize_protocol(&p))?;
            Ok(0)
        }
        ProtocolCmd::Eval { protocol, row, col, out } => {
            let p = read_protocol(&protocol)?;
            let row: RowLabel = row.parse().map_err(bad_input)?;
            let col: ColLabel = col.parse().map_err(bad_input)?;
            let v = evaluate(&p, &row, &col).map_err(bad_input)?;
            write_out(&out, if v { "1\n" } else { "0\n" })?;
            Ok(0)
        }
        ProtocolCmd::Verify { protocol, matrix, out } => {
            let p = read_protocol(&protocol)?;
            let m = read_matrix(&matrix)?;
            match verify_protocol(&p, &m) {
                Ok(true) => {
                    write_out(&out, "VERIFY PASS\n")?;
                    Ok(0)
                }
                Ok(false) => {
                    write_out(&out, "VERIFY FAIL output mismatch\n")?;
                    Ok(EXIT_FAILED)
                }
                Err(e @ Error::UniverseMismatch(_)) => {
                    write_out(&out, &format!("VERIFY FAIL {}\n", e))?;
                    Ok(EXIT_FAILED)
                }
                Err(e) => Err(bad_input(e)),
            }
        }
        ProtocolCmd::Binarize { protocol, out } => {
            let p = read_protocol(&protocol)?;
            write_out(&out, &serialize_protocol(&binarize(&p)))?;
            Ok(0)
        }
        ProtocolCmd::Metrics { protocol, out } => {
            let p = read_protocol(&protocol)?;
            let m = metrics(&p);
            let text = format!(
                "depth {}\nbinary-depth {}\nleaves {}\nuseful-leaves {}\nunused-leaves {}\n",
                m.depth, m.binary_depth, m.leaf_count, m.useful_leaf_count, m.unused_leaf_count,
            );
            write_out(&out, &text)?;
            Ok(0)
        }
    }
}

fn padded_or_plain(g: &Graph, k: Option<usize>) -> CommMatrix {
    match k {
        Some(k) => build_padded(g, k).0,
        None => build_fg(g),
    }
}

fn describe_rect(m: &CommMatrix, rows: &[usize], cols: &[usize]) -> String {
    let rows: Vec<String> = rows.iter().map(|&i| m.rows()[i].to_string()).collect();
    let cols: Vec<String> = cols.iter().map(|&j| m.cols()[j].to_string()).collect();
    format!("rect rows={} cols={}\n", rows.join(","), cols.join(","))
}

fn budget(seconds: Option<f64>) -> Budget {
    match seconds {
        Some(s) => Budget::seconds(s),
        None => Budget::unlimited(),
    }
}

fn bad_input(e: Error) -> (u8, String) {
    (EXIT_BAD_INPUT, e.to_string())
}

fn read_input(path: &PathBuf) -> Result<String, (u8, String)> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| (EXIT_BAD_INPUT, format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| (EXIT_BAD_INPUT, format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, (u8, String)> {
    parse_graph(&read_input(path)?).map_err(bad_input)
}

fn read_matrix(path: &PathBuf) -> Result<CommMatrix, (u8, String)> {
    parse_matrix(&read_input(path)?).map_err(bad_input)
}

fn read_protocol(path: &PathBuf) -> Result<Protocol, (u8, String)> {
    parse_protocol(&read_input(path)?).map_err(bad_input)
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), (u8, String)> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| (EXIT_BAD_INPUT, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
