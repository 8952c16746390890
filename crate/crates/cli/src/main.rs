// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use whapar_cli::{run, Command, Options};

/// Exact verification of weak Hopf algebras, their partial actions and
/// representations, and the universal algebra H_par^w.
#[derive(Parser)]
#[command(name = "whapar", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weak Hopf axioms, counital identities and projections; plus the
    /// partial-action or partial-representation axioms for those inputs.
    Check(Common),
    /// Build H_par^w and run the bracket, E-calculus and smash-isomorphism suites.
    Hpar {
        #[command(flatten)]
        common: Common,
        /// Compare with the Birget–Rhodes expansion (groupoid input only).
        #[arg(long)]
        oracle: bool,
    },
    /// Build the Hopf algebroid structure on H_par^w and check every axiom.
    Algebroid(Common),
    /// Check the quantum inverse semigroup structure (cocommutative input).
    Qisg(Common),
    /// Partial smash product of an action, or the smash isomorphism for H_par^w.
    Smash(Common),
    /// Partial representation suites and the universal factorization; for an
    /// action, the algebra-object round trip.
    Parrep(Common),
}

#[derive(Args)]
struct Common {
    /// Input file (whapar/v1 JSON).
    path: PathBuf,
    /// Print the machine-readable report instead of the summary.
    #[arg(long)]
    json: bool,
    /// Seed for sampled identity checks.
    #[arg(long, default_value_t = whapar::report::DEFAULT_SEED)]
    seed: u64,
    /// Largest degree the H_par^w saturation may reach.
    #[arg(long, default_value_t = whapar::hpar::DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    /// Check every basis tuple instead of sampling large suites.
    #[arg(long)]
    exhaustive: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("WHAPAR_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Failing here only means a pool already exists; keep going with it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (command, common, oracle) = match cli.command {
        Cmd::Check(c) => (Command::Check, c, false),
        Cmd::Hpar { common, oracle } => (Command::Hpar, common, oracle),
        Cmd::Algebroid(c) => (Command::Algebroid, c, false),
        Cmd::Qisg(c) => (Command::Qisg, c, false),
        Cmd::Smash(c) => (Command::Smash, c, false),
        Cmd::Parrep(c) => (Command::Parrep, c, false),
    };
    let opts = Options { seed: common.seed, exhaustive: common.exhaustive, max_degree: common.max_degree, oracle };
    let report = run(command, &common.path, &opts);
    if common.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
    ExitCode::from(report.exit_code() as u8)
}
