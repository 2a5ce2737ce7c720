//! Command-line front end for the `holonorm` library.
//!
//! Subcommands: `catalog` (vertex table), `graph` (DOT/JSON export of the
//! local normalizing graph), `verify` (engine versus brute-force oracle),
//! `lemmas` (power-sum unit lemmas over an exponent range) and `counts`
//! (predicted census, optionally oracle-confirmed).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 feasibility bound exceeded. Results go to standard output (or `-o`);
//! progress notes go to standard error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use holonorm::catalog::{expected_counts, format_catalog, full_catalog};
use holonorm::group_id::IsoClass;
use holonorm::modring::verify_arith_lemmas;
use holonorm::normgraph::{build_graph, clique_families, export_dot, export_json, Engine};
use holonorm::oracle::{count_by_iso, enumerate_regular_subgroups, verify};
use holonorm::{Error, Modulus};

#[derive(Parser)]
#[command(
    name = "holonorm",
    version,
    about = "Regular subgroups of Hol(C_{p^n}): catalog, local normalizing graph, brute-force cross-verification",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap the worker-thread count (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    /// Write the result to this file instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// The modulus arguments shared by every subcommand.
#[derive(Args, Clone, Copy)]
struct At {
    /// The prime p.
    #[arg(short = 'p', value_name = "PRIME")]
    p: u64,
    /// The exponent n (the ambient group is C_{p^n}).
    #[arg(short = 'n', value_name = "EXP")]
    n: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Closed,
    Modular,
    General,
}

impl From<EngineArg> for Engine {
    fn from(value: EngineArg) -> Engine {
        match value {
            EngineArg::Closed => Engine::ClosedForm,
            EngineArg::Modular => Engine::Modular,
            EngineArg::General => Engine::General,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the catalog of regular subgroups at p^n.
    Catalog {
        #[command(flatten)]
        at: At,
        /// Output format (this command emits `text` only).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the local normalizing graph and export it.
    Graph {
        #[command(flatten)]
        at: At,
        /// Edge decision engine.
        #[arg(long, value_enum, default_value_t = EngineArg::Modular)]
        engine: EngineArg,
        /// Output format (`dot` or `json`).
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Cross-check one engine against the permutation oracle.
    Verify {
        #[command(flatten)]
        at: At,
        /// Edge decision engine to compare with the oracle.
        #[arg(long, value_enum, default_value_t = EngineArg::Modular)]
        engine: EngineArg,
    },
    /// Verify the power-sum unit lemmas for every exponent up to n.
    Lemmas {
        #[command(flatten)]
        at: At,
    },
    /// Print the predicted subgroup census (optionally oracle-confirmed).
    Counts {
        #[command(flatten)]
        at: At,
        /// Also run the brute-force enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn success(text: String) -> Self {
        Outcome {
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("warning: thread pool already initialized ({e}); --jobs ignored");
        }
    }
    let outcome = match run(cli.command) {
        Ok(outcome) => outcome,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::OracleBound { .. } => 3,
                // A subgroup or table the verified theory cannot account
                // for is a mathematical divergence, not a usage problem.
                Error::UnmatchedSubgroup(_) | Error::Unclassifiable => 1,
                _ => 2,
            };
            return ExitCode::from(code);
        }
    };
    if let Err(e) = emit(cli.output.as_deref(), &outcome.text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(u8::from(outcome.failed))
}

fn emit(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Catalog { at, format } => {
            if format != Format::Text {
                return Err(CliError::Usage(
                    "catalog supports --format text only".into(),
                ));
            }
            let m = Modulus::new(at.p, at.n)?;
            let entries = full_catalog(m)?;
            eprintln!("catalog at {m}: {} regular subgroups", entries.len());
            let text = format!(
                "p n family u k c period isoclass\n{}",
                format_catalog(&entries)
            );
            Ok(Outcome::success(text))
        }
        Command::Graph { at, engine, format } => {
            let m = Modulus::new(at.p, at.n)?;
            let engine: Engine = engine.into();
            let graph = build_graph(m, engine)?;
            let cliques = clique_families(m)?;
            eprintln!(
                "graph at {m}: {} vertices, {} edges, {} clique families (engine {engine})",
                graph.vertices().len(),
                graph.edge_count(),
                cliques.len()
            );
            let text = match format {
                Format::Dot => export_dot(&graph, &cliques),
                Format::Json => export_json(&graph, &cliques),
                Format::Text => {
                    return Err(CliError::Usage(
                        "graph supports --format dot or --format json".into(),
                    ))
                }
            };
            Ok(Outcome::success(text))
        }
        Command::Verify { at, engine } => {
            let m = Modulus::new(at.p, at.n)?;
            let engine: Engine = engine.into();
            eprintln!("verifying {m}: engine {engine} versus the permutation oracle");
            let report = verify(m, engine)?;
            let failed = !report.passed();
            if failed {
                eprintln!("verification FAILED at {m}");
            }
            Ok(Outcome {
                text: format!("{report}\n"),
                failed,
            })
        }
        Command::Lemmas { at } => {
            let lo = if at.p == 2 { 4 } else { 2 };
            if at.n < lo {
                return Err(CliError::Usage(format!(
                    "lemma range is empty: p = {} needs n >= {lo}",
                    at.p
                )));
            }
            let mut text = String::new();
            let mut failed = false;
            for n in lo..=at.n {
                let report = verify_arith_lemmas(Modulus::new(at.p, n)?)?;
                failed |= !report.all_hold();
                text.push_str(&report.to_string());
            }
            let _ = writeln!(
                text,
                "lemmas for p = {}, {lo} <= n <= {}: {}",
                at.p,
                at.n,
                if failed { "FAIL" } else { "all hold" }
            );
            Ok(Outcome { text, failed })
        }
        Command::Counts { at, oracle } => {
            let m = Modulus::new(at.p, at.n)?;
            let expected = expected_counts(m)?;
            let mut text = String::new();
            let _ = writeln!(
                text,
                "expected at {m}: {} regular subgroups",
                expected.total
            );
            for (class, count) in &expected.by_class {
                let _ = writeln!(text, "  {class}: {count}");
            }
            let orbits: Vec<String> = expected.orbit_sizes.iter().map(u64::to_string).collect();
            let _ = writeln!(text, "  conjugation orbit sizes: {}", orbits.join(" "));
            let mut failed = false;
            if oracle {
                eprintln!("running the brute-force enumeration at {m}");
                let subs = enumerate_regular_subgroups(m)?;
                let got = count_by_iso(&subs)?;
                let total_verdict = if subs.len() as u64 == expected.total {
                    "match"
                } else {
                    failed = true;
                    "MISMATCH"
                };
                let _ = writeln!(
                    text,
                    "oracle at {m}: {} regular subgroups [{total_verdict}]",
                    subs.len()
                );
                for class in IsoClass::all() {
                    let found = got.iter().find(|(c, _)| *c == class).map_or(0, |&(_, k)| k);
                    let want = expected.class_count(class);
                    if found == 0 && want == 0 {
                        continue;
                    }
                    let verdict = if found == want {
                        "match"
                    } else {
                        failed = true;
                        "MISMATCH"
                    };
                    let _ = writeln!(text, "  {class}: {found} [{verdict}]");
                }
            }
            Ok(Outcome { text, failed })
        }
    }
}
