use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use relcone_cli::{run, text, CliError, Format, Job};

/// Runs a relcone job and prints its report.
#[derive(Parser)]
#[command(name = "relcone", version)]
struct Args {
    /// Job file (JSON).
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    job: Option<PathBuf>,
    /// Name of a built-in space, map, nerve or cover map.
    #[arg(long)]
    builtin: Option<String>,
    /// Output format; overrides the job file.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let job = match (&args.job, &args.builtin) {
        (Some(path), _) => Job::read(path),
        (None, Some(name)) => Job::builtin(name),
        (None, None) => unreachable!("clap requires one"),
    };
    let format = args
        .format
        .or_else(|| job.as_ref().ok().and_then(|j| j.format))
        .unwrap_or(Format::Text);
    match job.and_then(|j| run(&j)) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize")),
                Format::Text => print!("{}", text::render(&report)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e, format),
    }
}

fn fail(e: &CliError, format: Format) -> ExitCode {
    eprintln!("relcone: {e}");
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("errors serialize"));
    }
    ExitCode::from(e.exit_code())
}
