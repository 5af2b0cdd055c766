use std::process::ExitCode;

use clap::Parser;
use thermocad_cli::args::{Cli, Command};
use thermocad_cli::{run_compare, run_eval, run_extract, run_predict, run_train, CliError};
use thermocad_core::report::render_comparison;

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Extract(args) => {
            let summary = run_extract(&args)?;
            for (id, reason) in &summary.failures {
                eprintln!("skipped {id}: {reason}");
            }
            eprintln!(
                "extracted {} of {} images",
                summary.written,
                summary.written + summary.failures.len()
            );
            Ok(summary.exit_code())
        }
        Command::Eval(args) => {
            let report = run_eval(&args)?;
            let name = report.classifier.clone();
            print!("{}", render_comparison(&[(name, report)], false).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare(args) => {
            print!("{}", run_compare(&args)?.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Train(args) => {
            let doc = run_train(&args)?;
            eprintln!("saved {} model to {}", doc.model.name(), args.out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Predict(args) => {
            let (id, p) = run_predict(&args)?;
            println!("{id} {} {}", p.label, p.score);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("THERMOCAD_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
