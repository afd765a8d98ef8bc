//! `nambu3` — verifier for bracket identities of cubic matrices, cubic
//! supermatrices, and cochain-induced n-ary brackets.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check fails
//! (the report carries a witness), 2 on configuration or input errors.

mod args;
mod gen;
mod show;
mod sqmat;
mod suites;

use args::{Cli, Command, ReportArg};
use clap::Parser;
use nambu3_core::Result;

fn main() {
    // Clap itself exits with code 2 on unparseable command lines, matching
    // the config-error contract.
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify(args) => {
            let rep = suites::run(&args)?;
            let text = match args.report {
                ReportArg::Json => rep.to_canonical_json()?,
                ReportArg::Text => rep.to_text(),
            };
            match &args.out {
                Some(p) => std::fs::write(p, &text)?,
                None => print!("{text}"),
            }
            Ok(if rep.pass { 0 } else { 1 })
        }
        Command::Gen { what } => {
            gen::run(&what)?;
            Ok(0)
        }
        Command::Show { what } => {
            show::run(&what)?;
            Ok(0)
        }
    }
}
