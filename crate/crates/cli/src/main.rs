mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Format};
use report::{ErrorInfo, Report, Timings, Verdict, SCHEMA_VERSION};

fn elapsed(start: Instant) -> Timings {
    Timings {
        elapsed_us: start.elapsed().as_micros().try_into().unwrap_or(u64::MAX),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e.render());
            let report = Report {
                schema_version: SCHEMA_VERSION,
                command: "usage".into(),
                inputs: json!({"argv": std::env::args().skip(1).collect::<Vec<_>>()}),
                verdict: Verdict::Error,
                result: None,
                error: Some(ErrorInfo {
                    kind: "usage",
                    message: e.render().to_string().trim_end().to_string(),
                    witness: None,
                }),
                timings: elapsed(start),
            };
            println!("{}", report.to_json());
            return ExitCode::from(Verdict::Error.exit_code());
        }
    };
    let outcome = commands::run(&cli.command);
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: cli.command.name().into(),
        inputs: outcome.inputs,
        verdict: outcome.verdict,
        result: outcome.result,
        error: outcome.error,
        timings: elapsed(start),
    };
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text(&outcome.summary)),
    }
    ExitCode::from(report.verdict.exit_code())
}
