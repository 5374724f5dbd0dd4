//! `hns4`: a calculator for six non-commutative 4-dimensional hypercomplex
//! number systems.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on evaluation errors
//! (syntax errors, division by a zero divisor).

use std::io::{BufRead, Write};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use hns4_cli::eval_str;
use hns4_cli::output::{table_text, OutputRecord};
use hns4_core::{SquareSign, System, SystemKind};

#[derive(Parser)]
#[command(
    name = "hns4",
    about = "Arithmetic in 4-dimensional hypercomplex number systems",
    long_about = "Arithmetic in the six 4-dimensional hypercomplex number systems obtained by \
doubling the complex (C), double (W) and dual (D) numbers: H, AH, CD, WW, DD, WD.\n\n\
Expressions use e1..e4 for the basis, + - * for ring operations, a / b for the right \
quotient (solves x*b = a) and b \\ a for the left quotient (solves b*x = a), and the \
functions exp, conj, pnorm, norm. Multiplication is always explicit: write 2*e2, not 2e2."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cayley table of a named system or of a generic square pair
    Table {
        /// Named system: H, AH, CD, WW, DD or WD
        #[arg(
            value_name = "SYSTEM",
            required_unless_present = "mu",
            conflicts_with = "mu"
        )]
        system: Option<String>,
        /// Build the system from two square signs, each -1, 0 or 1
        #[arg(long, num_args = 2, value_names = ["M1", "M2"], allow_negative_numbers = true)]
        mu: Option<Vec<i8>>,
    },
    /// Evaluate an expression
    Eval {
        /// System to evaluate in: H, AH, CD, WW, DD or WD
        #[arg(long, value_name = "SYSTEM")]
        system: String,
        /// Emit {"system", "coeffs"} JSON instead of canonical text
        #[arg(long)]
        json: bool,
        /// Expression, e.g. "1 + 2*e2 - exp(e3)"
        #[arg(value_name = "EXPR", allow_hyphen_values = true)]
        expr: String,
    },
    /// Exponential of a1*e1 + a2*e2 + a3*e3 + a4*e4
    Exp {
        /// System to evaluate in: H, AH, CD, WW, DD or WD
        #[arg(long, value_name = "SYSTEM")]
        system: String,
        /// Emit {"system", "coeffs"} JSON instead of canonical text
        #[arg(long)]
        json: bool,
        #[arg(value_name = "A1", allow_negative_numbers = true)]
        a1: f64,
        #[arg(value_name = "A2", allow_negative_numbers = true)]
        a2: f64,
        #[arg(value_name = "A3", allow_negative_numbers = true)]
        a3: f64,
        #[arg(value_name = "A4", allow_negative_numbers = true)]
        a4: f64,
    },
    /// Read expressions line by line; :system <S> switches, :table prints,
    /// :quit exits
    Repl {
        /// Initial system: H, AH, CD, WW, DD or WD
        #[arg(long, value_name = "SYSTEM")]
        system: String,
    },
}

enum AppError {
    /// Bad invocation: exit 1.
    Usage(String),
    /// Failed evaluation: exit 2.
    Eval(String),
}

fn named_system(name: &str) -> Result<System, AppError> {
    let kind: SystemKind = name
        .parse()
        .map_err(|e: hns4_core::Error| AppError::Usage(e.to_string()))?;
    System::builtin(kind).map_err(|e| AppError::Usage(e.to_string()))
}

fn print_value(value: &hns4_core::HNum, json: bool) {
    let record = OutputRecord::new(value);
    if json {
        println!("{}", record.to_json());
    } else {
        println!("{}", record.rendering);
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Table { system, mu } => {
            let sys = match (system, mu) {
                (Some(name), None) => named_system(&name)?,
                (None, Some(values)) => {
                    let signs: Result<Vec<SquareSign>, _> =
                        values.iter().map(|v| SquareSign::new(*v)).collect();
                    let signs = signs.map_err(|e| AppError::Usage(e.to_string()))?;
                    System::from_squares(signs[0], signs[1])
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            println!("{}", table_text(&sys));
            Ok(())
        }
        Command::Eval { system, json, expr } => {
            let sys = named_system(&system)?;
            let value = eval_str(&expr, &sys).map_err(|e| AppError::Eval(e.to_string()))?;
            print_value(&value, json);
            Ok(())
        }
        Command::Exp {
            system,
            json,
            a1,
            a2,
            a3,
            a4,
        } => {
            let sys = named_system(&system)?;
            let w = sys
                .num([a1, a2, a3, a4])
                .map_err(|e| AppError::Usage(e.to_string()))?;
            print_value(&hns4_core::exp_closed(&w), json);
            Ok(())
        }
        Command::Repl { system } => {
            let sys = named_system(&system)?;
            repl(sys);
            Ok(())
        }
    }
}

fn repl(mut system: System) {
    let stdin = std::io::stdin();
    let mut stderr = std::io::stderr();
    loop {
        let _ = write!(stderr, "{}> ", system.label());
        let _ = stderr.flush();
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(command) = line.strip_prefix(':') {
            let mut parts = command.split_whitespace();
            match parts.next() {
                Some("quit") | Some("q") => break,
                Some("table") => println!("{}", table_text(&system)),
                Some("system") => match parts.next() {
                    Some(name) => match name.parse::<SystemKind>().and_then(System::builtin) {
                        Ok(sys) => system = sys,
                        Err(e) => eprintln!("error: {e}"),
                    },
                    None => eprintln!("usage: :system <H|AH|CD|WW|DD|WD>"),
                },
                _ => eprintln!("unknown command; available: :system <S>, :table, :quit"),
            }
            continue;
        }
        match eval_str(line, &system) {
            Ok(value) => print_value(&value, false),
            Err(e) => eprintln!("error: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(message)) => {
            eprintln!("error: {message}");
            let _ = Cli::command().print_help();
            ExitCode::from(1)
        }
        Err(AppError::Eval(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
