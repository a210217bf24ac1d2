//! Command-line front end: select identities, run sweeps, emit the report,
//! and return a CI-friendly exit status.
//!
//! Exit codes: 0 all records pass, 1 verification failure, 2 bad selection
//! or usage, 3 I/O error.

use std::io::Write;
use std::process::ExitCode;

use quadcheck::harness::{list_registry, run, RunError, RunOptions};

const USAGE: &str = "\
quadcheck — numerical verification of a catalog of definite-integral identities

USAGE:
    quadcheck [--select <glob>] [--samples <n>] [--tol <real>]
              [--seed <integer>] [--out <path>] [--list]

OPTIONS:
    --select <glob>    identity ids to run, with * and ? wildcards [default: *]
    --samples <n>      samples per continuous parameter [default: 5]
    --tol <real>       override every tolerance class with one tolerance
    --seed <integer>   sampling seed [default: 42]
    --out <path>       write the report to a file instead of standard output
    --list             print the identity registry and exit
    --help             print this message
";

struct Cli {
    opts: RunOptions,
    out: Option<String>,
    list: bool,
}

fn parse_args(args: &[String]) -> Result<Cli, String> {
    let mut cli = Cli {
        opts: RunOptions::default(),
        out: None,
        list: false,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut take = |name: &str| -> Result<&String, String> {
            it.next().ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--select" => cli.opts.selection = take("--select")?.clone(),
            "--samples" => {
                cli.opts.samples = take("--samples")?
                    .parse()
                    .map_err(|_| "--samples needs a positive integer".to_string())?;
                if cli.opts.samples == 0 {
                    return Err("--samples needs a positive integer".to_string());
                }
            }
            "--tol" => {
                let t: f64 = take("--tol")?
                    .parse()
                    .map_err(|_| "--tol needs a real number".to_string())?;
                if !t.is_finite() || t <= 0.0 {
                    return Err("--tol needs a positive real number".to_string());
                }
                cli.opts.tol_override = Some(t);
            }
            "--seed" => {
                cli.opts.seed = take("--seed")?
                    .parse()
                    .map_err(|_| "--seed needs an integer".to_string())?;
            }
            "--out" => cli.out = Some(take("--out")?.clone()),
            "--list" => cli.list = true,
            "--help" | "-h" => return Err(String::new()),
            other => return Err(format!("unknown flag `{other}`")),
        }
    }
    Ok(cli)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match parse_args(&args) {
        Ok(cli) => cli,
        Err(msg) => {
            if msg.is_empty() {
                print!("{USAGE}");
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            return ExitCode::from(2);
        }
    };

    if cli.list {
        print!("{}", list_registry());
        return ExitCode::SUCCESS;
    }

    let report = match run(&cli.opts) {
        Ok(report) => report,
        Err(RunError::NoMatch(glob)) => {
            eprintln!("error: selection `{glob}` matches no identity (see --list)");
            return ExitCode::from(2);
        }
    };

    let text = report.render();
    match &cli.out {
        Some(path) => {
            let write_all =
                std::fs::File::create(path).and_then(|mut f| f.write_all(text.as_bytes()));
            if let Err(e) = write_all {
                eprintln!("error: cannot write report to `{path}`: {e}");
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_status() as u8)
}
