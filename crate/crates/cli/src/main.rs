use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gsg_core::group::{canonical_length, guarded_order};
use gsg_core::mixed_radix::{decode, encode};
use gsg_core::statistics::{fmaj_exponents, inversion_table, poincare, rank, root_length, unrank};
use gsg_core::subexceedant::{digits_of_element, element_of_integer, integer_of_element};
use gsg_core::text::encode_text;
use gsg_core::verify::verify_group;
use gsg_core::{BigUint, Error, Execution, GroupElement, MixedRadixNumber, DEFAULT_BUDGET};
use serde_json::{json, Value};

/// Integer representations and statistics of the generalized symmetric group G(m,1,n).
#[derive(Debug, Parser)]
#[command(name = "gsg", version)]
struct Cli {
    /// Output format: `table` defaults to csv, `text-encode` to plain.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest group order any command may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert between an integer and its G_{m,.} digits.
    Convert(ConvertArgs),
    /// Integer representation I(w) of a group element.
    #[command(subcommand)]
    Element(ElementCommand),
    /// Rank of a window in the inversion-table order, starting at 1.
    Rank {
        #[arg(long)]
        m: usize,
        window: String,
    },
    /// Element with the given rank, 1 <= rank <= m^n n!.
    Unrank {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        rank: String,
    },
    /// Statistics of one element as a JSON object.
    Stats {
        #[arg(long)]
        m: usize,
        /// Also compute the word length over {t_1, s_1, ..., s_{n-1}} by search.
        #[arg(long)]
        bfs: bool,
        window: String,
    },
    /// Every element in rank order with its inversion table.
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of prod_{i=1..n} [i m]_q, constant term first.
    Poincare {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check every invariant over the whole group.
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Run the sweeps on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Concatenate the ASCII codes of a text and write the result in G_{m,.} digits.
    TextEncode {
        #[arg(long)]
        m: usize,
        text: String,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["to_digits", "to_int"])))]
struct ConvertArgs {
    #[arg(long)]
    m: usize,
    /// Non-negative integer to write in digits.
    #[arg(long, value_name = "X")]
    to_digits: Option<String>,
    /// Colon-separated digits, most significant first, to read as an integer.
    #[arg(long, value_name = "D")]
    to_int: Option<String>,
}

#[derive(Debug, Subcommand)]
enum ElementCommand {
    /// Integer in [0, m^n n! - 1] to window.
    Encode {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        x: String,
    },
    /// Window to integer.
    Decode {
        #[arg(long)]
        m: usize,
        window: String,
    },
}

enum Failure {
    Core(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Overflow { .. } | Error::RankOutOfRange { .. } => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn natural(text: &str) -> Result<BigUint, Error> {
    text.trim().parse().map_err(|_| Error::Parse {
        entry: text.to_string(),
        reason: "expected a non-negative integer".into(),
    })
}

/// An exact JSON number, however large.
fn number(x: &BigUint) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal digits form a JSON number")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Convert(args) => {
            if args.m == 0 {
                return Err(Error::ZeroRadix.into());
            }
            match (args.to_digits, args.to_int) {
                (Some(x), None) => println!("{}", encode(&natural(&x)?, args.m)?),
                (None, Some(d)) => println!("{}", decode(&MixedRadixNumber::parse(&d, args.m)?)),
                _ => unreachable!("clap enforces exactly one direction"),
            }
        }
        Command::Element(ElementCommand::Encode { m, n, x }) => {
            println!("{}", element_of_integer(&natural(&x)?, m, n)?);
        }
        Command::Element(ElementCommand::Decode { m, window }) => {
            println!("{}", integer_of_element(&GroupElement::parse(&window, m)?));
        }
        Command::Rank { m, window } => {
            println!("{}", rank(&GroupElement::parse(&window, m)?));
        }
        Command::Unrank { m, n, rank } => {
            println!("{}", unrank(&natural(&rank)?, m, n)?);
        }
        Command::Stats { m, bfs, window } => {
            let w = GroupElement::parse(&window, m)?;
            let exponents = fmaj_exponents(&w)?;
            let mut out = json!({
                "window": w.to_string(),
                "inv_table": inversion_table(&w).to_string(),
                "L": root_length(&w)?,
                "fmaj": exponents.iter().sum::<usize>(),
                "fmaj_exponents": exponents,
                "rank": number(&rank(&w)),
                "subexceedant_digits": digits_of_element(&w).to_string(),
                "integer_rep": number(&integer_of_element(&w)),
            });
            if bfs {
                out["canonical_length"] = canonical_length(&w, cli.budget)?.into();
            }
            println!("{out}");
        }
        Command::Table { m, n } => {
            let order = guarded_order(m, n, cli.budget)?;
            let rows = (1..=order).map(|r| -> Result<_, Error> {
                let w = unrank(&BigUint::from(r), m, n)?;
                Ok((r, w.to_string(), inversion_table(&w).to_string()))
            });
            if cli.format == Some(Format::Json) {
                let rows = rows
                    .map(|row| row.map(|(r, w, t)| json!({"rank": r, "window": w, "inv_table": t})))
                    .collect::<Result<Vec<_>, _>>()?;
                println!("{}", Value::Array(rows));
            } else {
                let mut csv = String::from("rank,window,inv_table\n");
                for row in rows {
                    let (r, w, t) = row?;
                    csv.push_str(&format!("{r},{w},{t}\n"));
                }
                print!("{csv}");
            }
        }
        Command::Poincare { m, n } => {
            if m == 0 {
                return Err(Error::ZeroRadix.into());
            }
            let p = poincare(m, n);
            if cli.format == Some(Format::Json) {
                let coeffs: Vec<Value> = p.coefficients().iter().map(number).collect();
                println!("{}", Value::Array(coeffs));
            } else {
                println!("{p}");
            }
        }
        Command::Verify { m, n, sequential } => {
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let checks = verify_group(m, n, cli.budget, exec)?;
            for c in &checks {
                println!("{c}");
            }
            if !checks.iter().all(|c| c.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::TextEncode { m, text } => {
            let t = encode_text(&text, m)?;
            if cli.format == Some(Format::Json) {
                let out = json!({
                    "integer": number(&t.integer),
                    "digits": t.digits.to_string(),
                    "n": t.digits.len(),
                });
                println!("{out}");
            } else {
                println!("integer {}", t.integer);
                println!("digits {}", t.digits);
                println!("n {}", t.digits.len());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
