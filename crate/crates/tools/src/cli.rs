//! The `brace` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails (including
//! `--expect-simple` on a non-simple brace and witness searches that find
//! nothing), 2 for invalid specs, arguments or IO errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use brace_core::bounds::{
    find_orthogonal_element, theorem_main2_bounds, SearchStrategy, SEARCH_BUDGET,
};
use brace_core::brace::CLOSURE_BUDGET;
use brace_core::Error;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{Result, ToolError};
use crate::pipeline::{self, bounds_rows, VerifyReport};
use crate::spec::{parse_spec, raw_block, render_block};
use crate::ybe_io::render_solution;

#[derive(Debug, Parser)]
#[command(
    name = "brace",
    version,
    about = "Finite left braces: build, verify, analyze, export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Carrier ceiling for closure-based deciders, or `p^{dim²}` ceiling for
    /// witness search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a spec and build its brace.
    Build {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Check the axioms and decide simplicity.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        /// Exit with status 1 unless the brace is simple.
        #[arg(long)]
        expect_simple: bool,
    },
    /// Multiplicative group structure and Sylow blocks.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Unit orders and exponent bounds for a cycle of primes.
    Bounds {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u32>,
    },
    /// Search for an orthogonal map of order `p1` over `Z/(p)` with `f − id`
    /// bijective; prints a spec-ready block.
    Witness {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        p1: u32,
        /// Defaults to the minimal dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Skip the constructions and search exhaustively.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Write the Yang-Baxter solution of a spec's brace in YBE v1 format.
    Export {
        #[arg(long)]
        spec: PathBuf,
    },
    /// The prime non-simple brace of order 92160.
    PrimeExample {
        /// Random seeds drawn on each side of the proper ideal.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Enumerate the whole ideal lattice (slow).
        #[arg(long)]
        full: bool,
    },
}

struct Output {
    body: String,
    ok: bool,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<14}{value}");
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn closure_budget(cli: &Cli) -> usize {
    cli.budget.map_or(CLOSURE_BUDGET, |b| b as usize)
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    line(&mut s, "family", r.build.family);
    line(&mut s, "order", r.build.order);
    let ax = &r.axioms;
    let status = match ax.failed_law {
        None => "hold".to_string(),
        Some(law) => format!(
            "FAIL ({law} at {:?})",
            ax.counterexample.as_deref().unwrap_or(&[])
        ),
    };
    line(
        &mut s,
        "axioms",
        format!("{}, {} triples, {status}", ax.mode, ax.triples),
    );
    line(
        &mut s,
        "f - id",
        format!("bijective {:?}", r.build.minus_id_bijective),
    );
    line(&mut s, "simple", yes(r.simple));
    match &r.proper_ideal {
        None => line(
            &mut s,
            "certificate",
            format!(
                "all {} nonzero closures are the whole brace",
                r.closures_checked
            ),
        ),
        Some(i) => {
            let inside = match r.certificate_inside_j {
                Some(true) => ", contained in J",
                Some(false) => ", not contained in J",
                None => "",
            };
            line(
                &mut s,
                "certificate",
                format!("proper ideal of size {}{inside}", i.size),
            );
        }
    }
    if let Some(j) = r.witness_j {
        line(&mut s, "J", format!("ideal of size {j}"));
    }
    let lattice = if r.lattice == [1, r.build.order] {
        "{0, B}".to_string()
    } else {
        format!("{:?}", r.lattice)
    };
    line(&mut s, "ideals", lattice);
    s
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Build { spec } => {
            let spec = parse_spec(spec)?;
            let b = spec.build()?;
            let r = pipeline::build_report(&spec, &b);
            let body = if cli.json {
                json(&r)
            } else {
                let mut s = String::new();
                line(&mut s, "family", r.family);
                line(&mut s, "order", r.order);
                line(&mut s, "primes", tuple(&r.block_primes));
                line(&mut s, "coordinates", r.radices.len());
                line(
                    &mut s,
                    "predicted",
                    if r.predicts_simple {
                        "simple"
                    } else {
                        "not simple"
                    },
                );
                s
            };
            Ok(Output { body, ok: true })
        }
        Command::Verify {
            spec,
            expect_simple,
        } => {
            let spec = parse_spec(spec)?;
            let r = pipeline::verify(&spec, closure_budget(cli), cli.seed)?;
            let ok = r.passed() && (!expect_simple || r.simple);
            Ok(Output {
                body: if cli.json { json(&r) } else { verify_text(&r) },
                ok,
            })
        }
        Command::Analyze { spec } => {
            let b = parse_spec(spec)?.build()?;
            let r = pipeline::analyze(&b, closure_budget(cli))?;
            let body = if cli.json {
                json(&r)
            } else {
                let mut s = String::new();
                line(&mut s, "order", r.order);
                line(&mut s, "abelian", yes(r.is_abelian));
                line(&mut s, "metabelian", yes(r.is_metabelian));
                line(&mut s, "A-group", yes(r.is_a_group));
                line(&mut s, "derived", r.derived_size);
                for blk in &r.sylow {
                    line(
                        &mut s,
                        &format!("sylow {}", blk.prime),
                        format!(
                            "size {}, left ideal {}, ideal {}",
                            blk.size,
                            yes(blk.left_ideal),
                            yes(blk.ideal)
                        ),
                    );
                }
                s
            };
            Ok(Output { body, ok: true })
        }
        Command::Bounds { primes } => {
            let r = theorem_main2_bounds(primes)?;
            let rows = bounds_rows(&r);
            let body = if cli.json {
                json(&rows)
            } else {
                let mut s = format!("k={}\nl={}\n", tuple(&r.k()), tuple(&r.l()));
                let _ = writeln!(
                    s,
                    "{:>6} {:>6} {:>4} {:>4} {:>8} {:>8}",
                    "p", "p_prev", "k", "nu", "min_dim", "l"
                );
                for row in &rows {
                    let _ = writeln!(
                        s,
                        "{:>6} {:>6} {:>4} {:>4} {:>8} {:>8}",
                        row.p, row.p_prev, row.k, row.nu_k, row.minimal_dim, row.l
                    );
                }
                s
            };
            Ok(Output { body, ok: true })
        }
        Command::Witness {
            p,
            p1,
            dim,
            exhaustive,
        } => {
            let dim = match dim {
                Some(d) => *d,
                None => brace_core::bounds::minimal_witness_dimension(*p, *p1)?,
            };
            let strategy = if *exhaustive {
                SearchStrategy::Exhaustive
            } else {
                SearchStrategy::Auto
            };
            let budget = cli.budget.map_or(SEARCH_BUDGET, u128::from);
            match find_orthogonal_element(*p, *p1, dim, strategy, budget) {
                Ok(w) => {
                    let block = raw_block(*p, w.form().gram(), w.matrix(), Some(1), 1);
                    Ok(Output {
                        body: render_block(&block),
                        ok: true,
                    })
                }
                Err(Error::NoWitness(msg)) => {
                    eprintln!("{msg}");
                    Ok(Output {
                        body: String::new(),
                        ok: false,
                    })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Export { spec } => {
            let b = parse_spec(spec)?.build()?;
            let (table, summary) = pipeline::solution(&b, cli.seed)?;
            let ok = summary.braid
                && summary.involutive
                && summary.left_nondegenerate
                && summary.right_nondegenerate;
            eprint!("{}", json(&summary));
            Ok(Output {
                body: render_solution(&table),
                ok,
            })
        }
        Command::PrimeExample { samples, full } => {
            let r = pipeline::prime_example(*samples, cli.seed, *full, closure_budget(cli))?;
            let body = if cli.json {
                json(&r)
            } else {
                let mut s = String::new();
                line(&mut s, "order", r.order);
                line(
                    &mut s,
                    "A x {0}",
                    format!(
                        "size {}, ideal {}",
                        r.left_factor_size,
                        yes(r.left_factor_is_ideal)
                    ),
                );
                line(&mut s, "A*A = A", yes(r.star_square_is_left_factor));
                line(
                    &mut s,
                    "outside",
                    format!(
                        "{}/{} closures full",
                        r.outside_closures_full, r.seeds_outside
                    ),
                );
                line(
                    &mut s,
                    "inside",
                    format!(
                        "{}/{} closures equal A x {{0}}",
                        r.inside_closures_left_factor, r.seeds_inside
                    ),
                );
                line(&mut s, "simple", yes(r.simple));
                line(
                    &mut s,
                    "prime",
                    format!(
                        "{} ({} lattice {:?})",
                        yes(r.prime),
                        r.lattice_mode,
                        r.lattice
                    ),
                );
                s
            };
            Ok(Output {
                ok: r.passed(),
                body,
            })
        }
    }
}

fn exit_code(e: &ToolError) -> i32 {
    match e {
        ToolError::Core(Error::NoWitness(_)) => 1,
        _ => 2,
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match pipeline::thread_pool(cli.threads) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(output) => {
            if let Err(e) = emit(&cli.out, &output.body) {
                eprintln!("error: {e}");
                return 2;
            }
            if output.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
