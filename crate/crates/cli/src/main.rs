use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};
use vsrc_cli::commands::{self, Method};
use vsrc_cli::experiment::{experiment, Suite, SuiteConfig};
use vsrc_cli::{CliError, Outcome};
use vsrc_core::exact::DEFAULT_BUDGET;

/// Very strong rainbow coloring workbench.
#[derive(Parser)]
#[command(name = "vsrc", version)]
struct Cli {
    /// Print the machine-readable run record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock runtime in the run record.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute vsrc with an optimal, verified coloring.
    Compute {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Node budget for the exact search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check a coloring file; exit 1 with a witness when it is not valid.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Lower and upper bounds with certificates.
    Bounds {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generate an instance as an edge list.
    Generate(GenerateArgs),
    /// Reduce 3-coloring: output the complement plus a universal vertex.
    Reduce {
        #[command(flatten)]
        input: InputArg,
    },
    /// Run a named batch suite and print its results table.
    Experiment {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random instances (suite default when omitted).
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Args)]
struct InputArg {
    /// Edge-list file; standard input when omitted or `-`.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family name, e.g. `path`, `random_cactus`.
    family: Option<String>,
    /// Full spec as JSON text or a path to a JSON file.
    #[arg(long, conflicts_with = "family")]
    spec: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long)]
    max_len: Option<usize>,
    /// Comma-separated cactus block kinds: bridge, odd_cycle, even_cycle.
    #[arg(long, value_delimiter = ',')]
    kinds: Option<Vec<String>>,
    #[arg(long)]
    seed: Option<u64>,
}

fn read_input(arg: &InputArg) -> Result<String, CliError> {
    match arg.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => read_file(p),
        _ => std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::Parse(format!("stdin: {e}"))),
    }
}

fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn spec_value(args: &GenerateArgs) -> Result<Value, CliError> {
    if let Some(spec) = &args.spec {
        let text = if spec.trim_start().starts_with('{') {
            spec.clone()
        } else {
            read_file(spec.as_ref())?
        };
        return serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("generator spec: {e}")));
    }
    let family = args
        .family
        .clone()
        .ok_or_else(|| CliError::Parse("give a family name or --spec".into()))?;
    let mut map = Map::new();
    map.insert("family".into(), family.into());
    let mut put = |key: &str, v: Option<Value>| {
        if let Some(v) = v {
            map.insert(key.into(), v);
        }
    };
    put("n", args.n.map(Value::from));
    put("p", args.p.map(Value::from));
    put("a", args.a.map(Value::from));
    put("b", args.b.map(Value::from));
    put("leaves", args.leaves.map(Value::from));
    put("blocks", args.blocks.map(Value::from));
    put("max_len", args.max_len.map(Value::from));
    put("kinds", args.kinds.clone().map(Value::from));
    put("seed", args.seed.map(Value::from));
    Ok(Value::Object(map))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute {
            input,
            method,
            budget,
        } => commands::compute(&read_input(input)?, *method, *budget),
        Command::Verify { input, coloring } => {
            commands::verify(&read_input(input)?, &read_file(coloring)?)
        }
        Command::Bounds { input, budget } => commands::bounds(&read_input(input)?, *budget),
        Command::Generate(args) => {
            commands::generate(&commands::parse_gen_spec(spec_value(args)?)?)
        }
        Command::Reduce { input } => commands::reduce(&read_input(input)?),
        Command::Experiment { suite, seed, count } => Ok(experiment(
            *suite,
            SuiteConfig {
                seed: *seed,
                count: *count,
            },
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut outcome) => {
            if cli.timing {
                outcome.record.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let out = outcome.render(cli.json);
            if outcome.exit_code == 0 {
                print!("{out}");
                if cli.json {
                    println!();
                }
            } else {
                eprint!("{out}");
                if cli.json {
                    eprintln!();
                }
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
