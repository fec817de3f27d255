use std::process::ExitCode;

use arrlik::commands::{self, CliError, Config, GraphQuery, OrderChoice};
use arrlik_core::groebner::Budget;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "arrlik",
    version,
    about = "Likelihood ideals of hypersurface arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Term order for the reported basis and the multidegree.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Bigraded)]
    order: OrderArg,
    /// Give up after this many S-pairs in one Gröbner basis.
    #[arg(long, global = true, default_value_t = 500_000)]
    max_pairs: usize,
    /// Give up on pairs of higher sugar degree.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Saturate by this polynomial before the automatic candidates.
    #[arg(long, global = true)]
    witness: Option<String>,
    /// Saturate only by the arrangement polynomials (and --witness).
    #[arg(long, global = true)]
    skip_minors: bool,
    /// Print a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Warn instead of failing when two polynomials share a factor.
    #[arg(long, global = true)]
    allow_common_factors: bool,
    /// Print the generators as computed, without minimizing.
    #[arg(long, global = true)]
    no_minimize: bool,
    /// Graphic arrangements: set the last coordinate to zero.
    #[arg(long, global = true)]
    reduced: bool,
    /// More log output on stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pre-likelihood ideal of an arrangement file.
    Prelikelihood { file: String },
    /// Likelihood ideal, multidegree, ML degree and gentleness.
    Likelihood { file: String },
    /// Questions about the graphic arrangement of a graph file.
    Graphic {
        file: String,
        #[arg(value_enum)]
        query: QueryArg,
    },
    /// Gentleness of every connected graph on the given number of vertices.
    Survey { vertices: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderArg {
    Bigraded,
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum QueryArg {
    Arrangement,
    Chordal,
    Separators,
    Generators,
    Obstruction,
    Gentle,
}

fn config(cli: &Cli) -> Config {
    Config {
        order: match cli.order {
            OrderArg::Bigraded => OrderChoice::Bigraded,
            OrderArg::Grevlex => OrderChoice::Grevlex,
            OrderArg::Lex => OrderChoice::Lex,
        },
        budget: Budget {
            max_pairs: Some(cli.max_pairs),
            max_degree: cli.max_degree,
        },
        witness: cli.witness.clone(),
        skip_minors: cli.skip_minors,
        allow_common_factors: cli.allow_common_factors,
        minimize: !cli.no_minimize,
        reduced: cli.reduced,
    }
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let cfg = config(cli);
    let outcome = match &cli.command {
        Command::Prelikelihood { file } => {
            commands::prelikelihood(file, &commands::read_file(file)?, &cfg)?
        }
        Command::Likelihood { file } => {
            commands::likelihood(file, &commands::read_file(file)?, &cfg)?
        }
        Command::Graphic { file, query } => {
            let q = match query {
                QueryArg::Arrangement => GraphQuery::Arrangement,
                QueryArg::Chordal => GraphQuery::Chordal,
                QueryArg::Separators => GraphQuery::Separators,
                QueryArg::Generators => GraphQuery::Generators,
                QueryArg::Obstruction => GraphQuery::Obstruction,
                QueryArg::Gentle => GraphQuery::Gentle,
            };
            commands::graphic(file, &commands::read_file(file)?, q, &cfg)?
        }
        Command::Survey { vertices } => {
            let entries = commands::survey(*vertices, &cfg)?;
            let text = if cli.json {
                serde_json::to_string_pretty(&entries).expect("survey serializes") + "\n"
            } else {
                commands::survey_text(*vertices, &entries)
            };
            return Ok((text, commands::EXIT_OK));
        }
    };
    let text = if cli.json {
        outcome.report.to_json()
    } else {
        outcome.report.to_text()
    };
    Ok((text, outcome.code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
