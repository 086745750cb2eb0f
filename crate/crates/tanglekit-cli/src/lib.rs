//! The tanglekit command line: every checker behind one binary with a
//! stable exit-code contract.
//!
//! Exit codes: 0 = all checks passed, 1 = a check failed (violations are
//! printed one per line, prefixed `VIOLATION`), 2 = usage, parse or I/O
//! error. On exit 0 and 1 the last stdout line is always
//! `RESULT <subcommand> <pass|fail> checked=<n>`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use tanglekit::constants::{check_hypotheses, compute_constants};
use tanglekit::error::Error;
use tanglekit::format;
use tanglekit::graph::Path as VertexPath;
use tanglekit::grid::GridGraph;
use tanglekit::minor::{extension_tangle, validate_model};
use tanglekit::nearembed::{is_m_wide, respects_check, validate_certificate, RespectsCaps};
use tanglekit::separation::enumerate_separations_threaded;
use tanglekit::surface::{dart_partition_holds, euler_genus, trace_faces};
use tanglekit::tangle::{check_axioms, Tangle};
use tanglekit::verify;
use tanglekit::vortex::{check_comb_report, check_linked, Comb, Vortex, VortexDecomposition};
use tanglekit::DEFAULT_VERTEX_CAP;

#[derive(Parser)]
#[command(name = "tanglekit", version, about = "Checkers for tangles, grids, vortices and near-embeddings", disable_help_subcommand = true)]
struct Cli {
    /// Worker threads; the TANGLEKIT_THREADS environment variable is the
    /// fallback, then 1.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArg {
    /// Vertex cap for exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Write the r-grid in graph text format with coordinate comments.
    Grid {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate all separations of a graph up to an order bound.
    EnumSeps {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_order: usize,
        #[command(flatten)]
        cap: CapArg,
        /// Write separations to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the tangle axioms for an explicit tangle file.
    CheckTangle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tangle: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Write the natural tangle of the r-grid.
    NaturalTangle {
        #[arg(long)]
        r: usize,
        /// Materialize the member list into the file.
        #[arg(long)]
        materialize: bool,
        /// Cap on the materialized member orders (default r - 1).
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Exhaustively check |A| <= ord² over the natural tangle of the r-grid.
    VerifyGridcut {
        #[arg(long)]
        r: usize,
        /// Cap on the enumerated separation orders (default r - 1).
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Validate a minor model file against its host graph.
    CheckModel {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        model: PathBuf,
    },
    /// Extend a pattern tangle through a minor model to the host.
    ExtendTangle {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        pattern_tangle: PathBuf,
        /// Run the axiom check on the extension.
        #[arg(long)]
        check: bool,
        /// Materialize the extension into a tangle file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Check a vortex certificate: decomposition, linkedness, comb.
    CheckVortex {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Accept a comb whose teeth match the society in reverse.
        #[arg(long)]
        allow_reversed_comb: bool,
    },
    /// Trace the faces of a rotation system and report the Euler genus.
    Genus {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rotation: PathBuf,
    },
    /// Validate a near-embedding certificate, optionally with the
    /// respects-tangle check.
    CheckNearEmbedding {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Adhesion / apex bound of the near-embedding.
        #[arg(long, default_value_t = 2)]
        alpha: usize,
        /// Explicit tangle file on the host graph for --respects.
        #[arg(long)]
        tangle: Option<PathBuf>,
        /// Run the respects check against --tangle.
        #[arg(long)]
        respects: bool,
        /// Cap on the enumerated separation orders in the respects check.
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Decide m-wideness of one large vortex of a certificate.
    Wideness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Index of the large vortex.
        #[arg(long)]
        vortex: usize,
        #[arg(long)]
        m: usize,
    },
    /// Derive the constants g, n1 and r from the parameters.
    Constants {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        a: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        s: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        alpha: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        theta: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n2: u16,
    },
    /// Check the connectivity and minimum-degree hypotheses.
    CheckHypotheses {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: usize,
    },
    /// Run every exhaustive verification check.
    VerifyAll,
}

struct Outcome {
    /// Informational lines printed before the violations.
    info: Vec<String>,
    violations: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { info: Vec::new(), violations: Vec::new(), checked: 0 }
    }
}

pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; --help and --version
            // exit 0 by convention
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let threads = cli
        .threads
        .or_else(|| std::env::var("TANGLEKIT_THREADS").ok().and_then(|t| t.parse().ok()))
        .unwrap_or(1)
        .max(1);
    let name = subcommand_name(&cli.command);
    match dispatch(cli.command, threads) {
        Ok(outcome) => {
            for line in &outcome.info {
                let _ = writeln!(out, "{line}");
            }
            for violation in &outcome.violations {
                let _ = writeln!(out, "VIOLATION {violation}");
            }
            let verdict = if outcome.violations.is_empty() { "pass" } else { "fail" };
            let _ = writeln!(out, "RESULT {name} {verdict} checked={}", outcome.checked);
            if outcome.violations.is_empty() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn subcommand_name(command: &Command) -> &'static str {
    match command {
        Command::Grid { .. } => "grid",
        Command::EnumSeps { .. } => "enum-seps",
        Command::CheckTangle { .. } => "check-tangle",
        Command::NaturalTangle { .. } => "natural-tangle",
        Command::VerifyGridcut { .. } => "verify-gridcut",
        Command::CheckModel { .. } => "check-model",
        Command::ExtendTangle { .. } => "extend-tangle",
        Command::CheckVortex { .. } => "check-vortex",
        Command::Genus { .. } => "genus",
        Command::CheckNearEmbedding { .. } => "check-near-embedding",
        Command::Wideness { .. } => "wideness",
        Command::Constants { .. } => "constants",
        Command::CheckHypotheses { .. } => "check-hypotheses",
        Command::VerifyAll => "verify-all",
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(command: Command, threads: usize) -> Result<Outcome, Error> {
    let mut outcome = Outcome::new();
    match command {
        Command::Grid { r, out } => {
            if r < 1 {
                return Err(Error::ParameterOutOfRange { name: "r" });
            }
            let w = GridGraph::new(r);
            write_file(&out, &format::write_grid_with_coords(&w))?;
            outcome.checked = 1;
        }
        Command::EnumSeps { graph, max_order, cap, out } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let seps = enumerate_separations_threaded(&g, max_order, cap.cap, threads)?;
            outcome.checked = seps.len();
            let lines: Vec<String> = seps.iter().map(format::write_separation).collect();
            match out {
                Some(path) => write_file(&path, &(lines.join("\n") + "\n"))?,
                None => outcome.info = lines,
            }
        }
        Command::CheckTangle { graph, tangle, cap } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let t = format::parse_tangle(&read(&tangle)?, &g)?;
            let report = check_axioms(&g, &t, cap.cap, threads)?;
            outcome.checked = report.checked;
            outcome.violations = report.violations.iter().map(|v| v.to_string()).collect();
        }
        Command::NaturalTangle { r, materialize, max_order, out, cap } => {
            if r < 1 {
                return Err(Error::ParameterOutOfRange { name: "r" });
            }
            let w = GridGraph::new(r);
            let t = Tangle::natural(&w);
            let text = if materialize {
                let explicit = t.materialize(max_order, cap.cap)?;
                outcome.checked = explicit.explicit_members().map_or(0, |m| m.len());
                format::write_tangle(&explicit)?
            } else {
                format!("tangle order={r}\n# predicate-backed; members not materialized\n")
            };
            write_file(&out, &text)?;
        }
        Command::VerifyGridcut { r, max_order, cap } => {
            if r < 1 {
                return Err(Error::ParameterOutOfRange { name: "r" });
            }
            let bound = max_order.unwrap_or(r.saturating_sub(1));
            let result = verify::check_gridcut(r, bound, cap.cap, threads);
            outcome.checked = result.checked;
            outcome.violations = result.failures;
        }
        Command::CheckModel { host, model } => {
            let g = format::parse_graph(&read(&host)?)?;
            let base = model.parent().map(|p| p.to_path_buf()).unwrap_or_default();
            let m = format::parse_model(&read(&model)?, &g, &base)?;
            let report = validate_model(&m);
            outcome.checked = m.branch_sets().len() + m.pattern().edge_count();
            outcome.violations = report.violations.iter().map(|v| v.to_string()).collect();
        }
        Command::ExtendTangle { host, model, pattern_tangle, check, out, cap } => {
            let g = format::parse_graph(&read(&host)?)?;
            let base = model.parent().map(|p| p.to_path_buf()).unwrap_or_default();
            let m = format::parse_model(&read(&model)?, &g, &base)?;
            let t = format::parse_tangle(&read(&pattern_tangle)?, m.pattern())?;
            let extended = extension_tangle(&m, &t)?;
            outcome.checked = 1;
            if check {
                let report = check_axioms(&g, &extended, cap.cap, threads)?;
                outcome.checked = report.checked;
                outcome.violations = report.violations.iter().map(|v| v.to_string()).collect();
            }
            if let Some(path) = out {
                let explicit = extended.materialize(None, cap.cap)?;
                write_file(&path, &format::write_tangle(&explicit)?)?;
            }
        }
        Command::CheckVortex { graph, cert, allow_reversed_comb } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let file = format::parse_vortex_cert(&read(&cert)?)?;
            let vortex = Vortex::new(g.clone(), file.society.clone())?;
            let decomposition = VortexDecomposition { bags: file.bags.clone() };
            let report = check_linked(&vortex, &decomposition);
            outcome.checked = file.bags.len();
            outcome.violations = report.violations.iter().map(|v| v.to_string()).collect();
            if let Some(q) = report.adhesion {
                outcome.info.push(format!("linked q={q}"));
                if let Some(linkage) = &report.linkage {
                    for path in &linkage.paths {
                        let ids: Vec<String> =
                            path.vertices().iter().map(|v| v.to_string()).collect();
                        outcome.info.push(format!("linkpath {}", ids.join(",")));
                    }
                }
            }
            if let Some(spine) = file.spine {
                let comb = Comb {
                    spine: VertexPath::new(spine)?,
                    teeth_paths: file
                        .teeth
                        .iter()
                        .map(|t| VertexPath::new(t.clone()))
                        .collect::<Result<_, _>>()?,
                };
                outcome.checked += 1;
                for violation in
                    check_comb_report(&g, &comb, &file.society, allow_reversed_comb)
                {
                    outcome.violations.push(violation.to_string());
                }
            }
        }
        Command::Genus { graph, rotation } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let rs = format::parse_rotation(&read(&rotation)?, &g)?;
            let faces = trace_faces(&rs)?;
            outcome.checked = faces.face_count();
            let lengths: Vec<String> =
                faces.lengths().iter().map(|l| l.to_string()).collect();
            outcome.info.push(format!("faces={}", faces.face_count()));
            outcome.info.push(format!("lengths={}", lengths.join(",")));
            outcome.info.push(format!("genus={}", euler_genus(&rs)?));
            if !dart_partition_holds(&g, &faces) {
                outcome.violations.push("DartPartitionBroken".to_string());
            }
            if faces.lengths().iter().sum::<usize>() != 2 * g.edge_count() {
                outcome.violations.push("FaceLengthSumMismatch".to_string());
            }
        }
        Command::CheckNearEmbedding { graph, cert, alpha, tangle, respects, max_order, cap } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let certificate = format::parse_near_embedding(&read(&cert)?, &g)?;
            let profile = compute_constants(1, 1, 1, alpha, 1, 1)?;
            let report = validate_certificate(&g, &certificate, &profile);
            outcome.checked = 1 + certificate.vortex_count();
            outcome.violations = report.violations.iter().map(|v| v.to_string()).collect();
            if respects {
                let tangle_path = tangle.ok_or_else(|| {
                    Error::Io("--respects needs --tangle <file>".to_string())
                })?;
                let t = format::parse_tangle(&read(&tangle_path)?, &g)?;
                let caps = RespectsCaps { vertex_cap: cap.cap, max_order, threads };
                let respects_report = respects_check(&g, &certificate, &t, caps)?;
                outcome.checked += respects_report.checked;
                if !respects_report.complete {
                    outcome.info.push(format!(
                        "respects: orders above {} not enumerated",
                        respects_report.order_bound - 1
                    ));
                }
                for violation in &respects_report.violations {
                    outcome.violations.push(format!(
                        "RespectsViolation {} contains large side {}",
                        violation.container,
                        format::write_separation(&violation.separation)
                    ));
                }
            }
        }
        Command::Wideness { graph, cert, vortex, m } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let certificate = format::parse_near_embedding(&read(&cert)?, &g)?;
            outcome.checked = 1;
            if !is_m_wide(&certificate, vortex, m)? {
                outcome.violations.push(format!("NotWide vortex={vortex} m={m}"));
            }
        }
        Command::Constants { a, s, k, alpha, theta, n2 } => {
            let profile = compute_constants(
                a as usize,
                s as usize,
                k as usize,
                alpha as usize,
                theta as usize,
                n2 as usize,
            )?;
            outcome.info.push(format!("g={} n1={} r={}", profile.g, profile.n1, profile.r));
            outcome.checked = 3;
        }
        Command::CheckHypotheses { graph, a } => {
            let g = format::parse_graph(&read(&graph)?)?;
            let report = check_hypotheses(&g, a)?;
            outcome.checked = 2;
            for line in [&report.connectivity, &report.min_degree] {
                outcome.info.push(format!(
                    "{}={} threshold={} {}",
                    line.name,
                    line.value,
                    line.threshold_display(),
                    if line.holds { "pass" } else { "fail" }
                ));
                if !line.holds {
                    outcome.violations.push(format!(
                        "HypothesisFailed {}={} < {}",
                        line.name,
                        line.value,
                        line.threshold_display()
                    ));
                }
            }
        }
        Command::VerifyAll => {
            for check in verify::run_all(threads) {
                let verdict = if check.passed { "pass" } else { "fail" };
                outcome
                    .info
                    .push(format!("CHECK {} {verdict} checked={}", check.name, check.checked));
                outcome.checked += check.checked;
                for failure in check.failures {
                    outcome.violations.push(format!("{}: {failure}", check.name));
                }
            }
        }
    }
    Ok(outcome)
}
