use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use hyperdual::cli::{self, CliError, ConstructRequest, Format, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "hyperdual", version, about = "Duality index of oriented regular hypermaps")]
struct Args {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the hypermap generated by two permutations in cycle notation
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Pad both permutations to this degree
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Emit and certify an explicit construction
    #[command(group(ArgGroup::new("variant").required(true)))]
    Construct {
        /// Orders of x and y, e.g. 9,5
        #[arg(long, group = "variant", value_parser = parse_pair)]
        duality_type: Option<(usize, usize)>,
        #[arg(long, group = "variant", value_name = "N")]
        lemma1_sym: Option<usize>,
        #[arg(long, group = "variant", value_name = "N")]
        lemma1_alt: Option<usize>,
        #[arg(long, group = "variant", value_name = "N")]
        theorem2: Option<usize>,
    },
    /// Run a verification sweep
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random pairs per sampled group (oracle_agreement)
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Tabulate duality indices over all generating pairs of S_n or A_n
    Census {
        /// S1..S5 or A1..A5
        #[arg(long)]
        group: String,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected L,N")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn run(command: Command) -> Result<cli::Outcome, CliError> {
    match command {
        Command::Analyze { x, y, degree } => cli::cmd_analyze(&x, &y, degree),
        Command::Construct {
            duality_type,
            lemma1_sym,
            lemma1_alt,
            theorem2,
        } => {
            let req = match (duality_type, lemma1_sym, lemma1_alt, theorem2) {
                (Some((l, n)), ..) => ConstructRequest::DualityType { l, n },
                (_, Some(n), ..) => ConstructRequest::Lemma1Sym { n },
                (_, _, Some(n), _) => ConstructRequest::Lemma1Alt { n },
                (.., Some(n)) => ConstructRequest::Theorem2 { n },
                _ => unreachable!("clap requires one variant"),
            };
            cli::cmd_construct(req)
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            samples,
        } => cli::cmd_verify(VerifyOptions {
            suite,
            max_n,
            seed,
            samples,
        }),
        Command::Census { group } => cli::cmd_census(group.parse()?),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(outcome) => {
            print!("{}", outcome.render(args.format));
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
