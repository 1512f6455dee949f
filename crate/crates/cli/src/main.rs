//! `sphalg`: tables, decomposition data and verification suites for the
//! partition algebra and its spherical subalgebra.

mod cache;
mod commands;
mod render;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::commands::Outcome;
use crate::verify::Suite;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "sphalg",
    version,
    about = "Exact computations for the partition algebra and its spherical subalgebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Cache directory; defaults to $SPHALG_CACHE_DIR, then the user cache dir
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write cached results
    #[arg(long, global = true)]
    no_cache: bool,

    /// Add wall-clock timing to the JSON envelope
    #[arg(long, global = true)]
    timing: bool,

    /// Lift the default size bounds
    #[arg(long, global = true)]
    allow_long: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bipartite partitions of k
    Bipar {
        #[arg(long)]
        k: usize,
        /// Print bp_k only
        #[arg(long)]
        count_only: bool,
        /// Include the Garsia-Gessel form of each element
        #[arg(long)]
        gg: bool,
    },
    /// Cell module dimensions, or the Kostka table for S^k V_n with --n
    Dims {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Use the spherical poset
        #[arg(long)]
        spherical: bool,
        /// Kostka table, Specht and multiplicity-space dimensions (needs --n)
        #[arg(long, requires = "n")]
        schur_weyl: bool,
    },
    /// Decomposition matrix, blocks and simple dimensions at t = n
    Decomp {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        spherical: bool,
    },
    /// Rank of the spherical diagram basis specialized at t
    Rank {
        #[arg(long)]
        k: usize,
        /// Rational parameter "p/q" or an integer; defaults to 2k+1
        #[arg(long, allow_negative_numbers = true)]
        t: Option<String>,
    },
    /// S^k V_n as a permutation module and its centralizer
    SchurWeyl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

pub fn poset_name(spherical: bool) -> &'static str {
    if spherical {
        "spherical"
    } else {
        "full"
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bipar { .. } => "bipar",
            Command::Dims { .. } => "dims",
            Command::Decomp { .. } => "decomp",
            Command::Rank { .. } => "rank",
            Command::SchurWeyl { .. } => "schur-weyl",
            Command::Verify { .. } => "verify",
        }
    }

    /// Canonical echo of everything that determines the payload.
    fn config(&self, allow_long: bool) -> anyhow::Result<Value> {
        let args = match self {
            Command::Bipar { k, count_only, gg } => json!({ "k": k, "count_only": count_only, "gg": gg }),
            Command::Dims { k, n, spherical, .. } => json!({ "k": k, "n": n, "poset": poset_name(*spherical) }),
            Command::Decomp { k, n, spherical } => json!({ "k": k, "n": n, "poset": poset_name(*spherical) }),
            Command::Rank { k, t } => {
                json!({ "k": k, "t": commands::rational_string(&commands::parse_t(*k, t.as_deref())?) })
            }
            Command::SchurWeyl { k, n } => json!({ "k": k, "n": n }),
            Command::Verify { suite, max_k, max_n } => {
                json!({ "suite": suite.name(), "max_k": max_k, "max_n": max_n })
            }
        };
        Ok(json!({ "subcommand": self.name(), "args": args, "allow_long": allow_long }))
    }

    fn run(&self, allow_long: bool) -> anyhow::Result<Outcome> {
        match self {
            Command::Bipar { k, count_only, gg } => commands::bipar(*k, *count_only, *gg, allow_long),
            Command::Dims { k, n, spherical, .. } => commands::dims(*k, *n, *spherical, allow_long),
            Command::Decomp { k, n, spherical } => commands::decomp(*k, *n, *spherical, allow_long),
            Command::Rank { k, t } => commands::rank(*k, &commands::parse_t(*k, t.as_deref())?, allow_long),
            Command::SchurWeyl { k, n } => commands::schur_weyl(*k, *n, allow_long),
            Command::Verify { suite, max_k, max_n } => verify::run(*suite, *max_k, *max_n, allow_long),
        }
    }
}

fn envelope(config: Value, outcome: Outcome) -> Value {
    json!({
        "version": VERSION,
        "config": config,
        "payload": outcome.payload,
        "provenance": outcome.provenance,
    })
}

/// Whether a stored envelope records a passing run.
fn envelope_ok(envelope: &Value) -> bool {
    envelope["payload"].get("passed").and_then(Value::as_bool).unwrap_or(true)
}

fn execute(cli: &Cli) -> anyhow::Result<bool> {
    let start = Instant::now();
    let config = cli.command.config(cli.allow_long)?;
    let store = if cli.no_cache { None } else { cache::Store::locate(cli.cache_dir.clone()) };
    let key = cache::key(VERSION, &config);

    let cached = store.as_ref().and_then(|s| s.load(&key));
    let hit = cached.is_some();
    let mut envelope = match cached {
        Some(envelope) => envelope,
        None => {
            let outcome = cli.command.run(cli.allow_long)?;
            let envelope = envelope(config, outcome);
            if let Some(store) = &store {
                if let Err(e) = store.save(&key, &envelope) {
                    eprintln!("warning: could not write cache entry: {e:#}");
                }
            }
            envelope
        }
    };
    let ok = envelope_ok(&envelope);
    if cli.timing {
        envelope["timing"] = json!({ "elapsed_ms": start.elapsed().as_millis() as u64, "cached": hit });
    }

    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&envelope)? + "\n",
        Format::Csv => render::csv(cli.command.name(), &envelope["payload"]),
        Format::Text => render::text(cli.command.name(), &envelope["payload"]),
    };
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
