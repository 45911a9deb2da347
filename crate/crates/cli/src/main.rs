mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::Printer;

#[derive(Parser)]
#[command(name = "sylowscope", version)]
#[command(about = "Sylow subgroup structure of finite simple groups")]
struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print results only, without echoes or notes.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Alternating,
    Lie,
    Sporadic,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the Sylow r-subgroup of a group.
    Classify {
        /// Group such as "PSL(3,4)", "A(10)", "E8(2)" or "M11".
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
    },
    /// Compute the order of a group.
    Order {
        #[arg(long)]
        group: String,
        /// Also print the prime factorisation.
        #[arg(long)]
        factored: bool,
        /// Compute the order two ways and compare.
        #[arg(long)]
        check: bool,
    },
    /// List the simple groups whose Sylow subgroup has a given structure.
    Enumerate {
        #[arg(long)]
        prime: u64,
        /// Target structure such as "C5^2" or "C25".
        #[arg(long)]
        structure: String,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = vec![ScopeArg::Alternating, ScopeArg::Lie, ScopeArg::Sporadic])]
        scope: Vec<ScopeArg>,
        #[arg(long, default_value_t = 12)]
        rank_bound: u32,
        /// Instantiate Lie-type matches for q up to this bound.
        #[arg(long)]
        concrete: Option<u64>,
    },
    /// Congruence classes of q giving an elementary abelian Sylow subgroup.
    Congruences {
        /// Family pattern such as "PSL(4,q)" or "E8(q)".
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        /// The multiplicative order m of q mod r; all divisors of r - 1 if omitted.
        #[arg(long)]
        order: Option<u64>,
    },
    /// The abelian Sylow table for the sporadic groups.
    Sporadic,
    /// Sylow 2-subgroups against Walter's list.
    Walter {
        #[arg(long)]
        group: String,
    },
    /// Run verification suites.
    Verify {
        /// cyclotomic, valuation, orders, exceptional, c5-squared, sporadic or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = Printer::new(cli.json, cli.quiet);
    let result = match cli.command {
        Command::Classify { group, prime } => commands::classify(&mut out, &group, prime),
        Command::Order {
            group,
            factored,
            check,
        } => commands::order(&mut out, &group, factored, check),
        Command::Enumerate {
            prime,
            structure,
            scope,
            rank_bound,
            concrete,
        } => {
            let scope = scope
                .into_iter()
                .map(|s| match s {
                    ScopeArg::Alternating => sylowscope::enumerator::Scope::Alternating,
                    ScopeArg::Lie => sylowscope::enumerator::Scope::Lie,
                    ScopeArg::Sporadic => sylowscope::enumerator::Scope::Sporadic,
                })
                .collect();
            commands::enumerate(&mut out, prime, &structure, scope, rank_bound, concrete)
        }
        Command::Congruences {
            group,
            prime,
            order,
        } => commands::congruences(&mut out, &group, prime, order),
        Command::Sporadic => commands::sporadic(&mut out),
        Command::Walter { group } => commands::walter(&mut out, &group),
        Command::Verify { suite } => commands::verify(&mut out, &suite),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
