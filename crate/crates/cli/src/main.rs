use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cisgraph::enumeration::DEFAULT_LIMIT;
use cisgraph::families::FamilySpec;
use cisgraph::symmetry::{are_isomorphic, canonical_form, DEFAULT_BUDGET};
use cisgraph_cli::commands::{enumerate, render_graph, Format};
use cisgraph_cli::explore;
use cisgraph_cli::input::{parse_graph, read};
use cisgraph_cli::predicate::Predicate;
use cisgraph_cli::report::{Extras, Report};
use cisgraph_cli::scan::{scan_catalog, ScanOptions};
use cisgraph_cli::verify::{run_suite, SUITES};
use cisgraph_cli::{CliError, Context, Result, Settings, SuiteResult};

/// Exact toolkit for CIS graphs.
#[derive(Debug, Parser)]
#[command(name = "cisgraph", version)]
struct Cli {
    /// Maximum number of maximal cliques or stable sets per enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit_cliques: usize,
    /// Node budget for each automorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format: g6, edges or jsonl.
    #[arg(long, global = true, default_value = "g6")]
    format: Format,
    /// Allow order-8 exhaustive runs (minutes to hours).
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family member, e.g. `Q:7`, `Kmn:3,4`, `Cayley:Z4xZ4:0,1;0,3`.
    Construct { spec: String },
    /// Property report for graphs given as family specs, graph6 or @file.
    Props {
        graphs: Vec<String>,
        /// Also compute the chromatic number.
        #[arg(long)]
        chromatic: bool,
        /// Also compute the automorphism group and vertex-transitivity.
        #[arg(long)]
        vt: bool,
    },
    /// All isomorphism classes of order N passing a predicate.
    Enumerate {
        n: usize,
        /// e.g. "connected & omega<=2 & cis"
        #[arg(default_value = "true")]
        predicate: String,
    },
    /// Scan a graph6 catalog for vertex-transitive CIS graphs.
    Scan {
        path: PathBuf,
        /// Check membership in the closure of the base family.
        #[arg(long)]
        closure_check: bool,
        /// Report every graph, not only vertex-transitive CIS ones.
        #[arg(long)]
        all: bool,
    },
    /// Run verification suites (`all` runs every suite).
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
    },
    /// Search bounded ranges around an open question: q1, q2 or q3.
    Explore {
        question: String,
        /// Largest order for q1 and q3; largest n of Q_n for q2.
        #[arg(long)]
        max: Option<usize>,
        /// Smallest n of Q_n for q2.
        #[arg(long, default_value_t = 4)]
        min: usize,
    },
    /// Decide whether two graphs are isomorphic.
    Iso { first: String, second: String },
    /// Canonical graph6 form.
    Canon { graph: String },
}

fn print_suite(r: &SuiteResult, format: Format) {
    match format {
        Format::Jsonl => println!("{}", r.to_json()),
        _ => println!("{}", r.to_text()),
    }
}

fn print_report(r: &Report, format: Format) {
    match format {
        Format::Jsonl => println!("{}", r.to_json()),
        _ => println!("{}", r.to_text()),
    }
}

fn status(failed: bool) -> u8 {
    u8::from(failed)
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    }
    let settings = Settings { limit: cli.limit_cliques, budget: cli.budget, seed: cli.seed, long: cli.long };
    let ctx = Context::new(settings);
    let format = cli.format;
    match cli.command {
        Command::Construct { spec } => {
            let spec: FamilySpec = spec.parse()?;
            print!("{}", render_graph(&spec.build()?, format));
            Ok(0)
        }
        Command::Props { graphs, chromatic, vt } => {
            let mut incomplete = false;
            for arg in graphs {
                let g = parse_graph(&arg)?;
                let report = Report::compute(&arg, &g, &settings, Extras { chromatic, symmetry: vt })?;
                incomplete |= report.is_incomplete();
                print_report(&report, format);
            }
            Ok(if incomplete { 3 } else { 0 })
        }
        Command::Enumerate { n, predicate } => {
            let predicate: Predicate = predicate.parse()?;
            if n == 8 && !settings.long {
                eprintln!("order 8 enumeration needs --long");
            }
            for g in enumerate(n, &predicate, &ctx)? {
                print!("{}", render_graph(&g, format));
            }
            Ok(0)
        }
        Command::Scan { path, closure_check, all } => {
            let text = read(&path)?;
            let out = scan_catalog(&text, &ctx, ScanOptions { closure_check, all })?;
            for line in &out.log {
                eprintln!("{line}");
            }
            for r in &out.reports {
                print_report(r, format);
            }
            print_suite(&out.suite, format);
            Ok(status(!out.suite.is_pass()))
        }
        Command::Verify { suites } => {
            let names: Vec<String> =
                if suites.iter().any(|s| s == "all") { SUITES.iter().map(|s| s.to_string()).collect() } else { suites };
            let mut failed = false;
            for name in names {
                let r = run_suite(&name, &ctx)?;
                failed |= !r.is_pass();
                print_suite(&r, format);
            }
            Ok(status(failed))
        }
        Command::Explore { question, max, min } => {
            let r = match question.as_str() {
                "q1" => explore::q1(&ctx, max.unwrap_or(ctx.exhaustive_order()))?,
                "q2" => explore::q2(min..=max.unwrap_or(8))?,
                "q3" => explore::q3(&ctx, max.unwrap_or(ctx.exhaustive_order()))?,
                other => return Err(CliError::Input(format!("unknown question {other:?}; expected q1, q2 or q3"))),
            };
            print_suite(&r, format);
            Ok(status(!r.is_pass()))
        }
        Command::Iso { first, second } => {
            let (a, b) = (parse_graph(&first)?, parse_graph(&second)?);
            println!("isomorphic={}", are_isomorphic(&a, &b, settings.budget)?);
            Ok(0)
        }
        Command::Canon { graph } => {
            println!("{}", canonical_form(&parse_graph(&graph)?, settings.budget)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
