use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sdcheck_cli::check::{run_check, CheckArgs, CheckKind, Side, EXIT_ERROR, EXIT_FAIL, EXIT_OK, REPORT_VERSION};
use sdcheck_cli::examples;
use sdcheck_cli::suite::{run_suite, Suite, SuiteConfig};
use sdcheck_cli::workspace::{load_workspace, Workspace, WorkspaceError};

#[derive(Parser)]
#[command(name = "sdcheck", version, about = "Exact checks for semidualizing bimodules over F_p")]
struct Cli {
    /// JSON workspace whose objects can be named in checks
    #[arg(long, short, global = true)]
    workspace: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate a workspace file
    Validate { file: PathBuf },
    /// Run one check against a bimodule
    Check {
        kind: CheckKind,
        /// workspace name or builder expression, e.g. regular(F2), morita(3,2), Rsquared
        #[arg(long, short)]
        bimodule: String,
        /// workspace name, or k, regular, free(n), zero, cogenerator, random(seed,dim)
        #[arg(long, short)]
        module: Option<String>,
        /// algebra the module lives over (for foxby-roundtrip and theorem-complex)
        #[arg(long, value_enum)]
        over: Option<Side>,
        /// F_C, P_C or I_C (for cclass)
        #[arg(long)]
        class: Option<String>,
        /// length of the spliced complex (for theorem-complex)
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// List example builders or build one into a workspace fragment
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Run the randomized property battery
    Suite {
        #[arg(long, env = "SDCHECK_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        bound: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// run only these properties
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
    Build {
        name: String,
        params: Vec<String>,
        /// write the fragment here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn emit_error(format: Format, message: &str) {
    match format {
        Format::Json => out(&format!("{}\n", json!({ "report_version": REPORT_VERSION, "error": message }))),
        Format::Text => eprintln!("error: {message}"),
    }
}

fn load(path: &Option<PathBuf>) -> Result<Workspace, WorkspaceError> {
    match path {
        Some(p) => Ok(load_workspace(p)?.1),
        None => Ok(Workspace::default()),
    }
}

fn run(cli: Cli) -> Result<i32> {
    let format = cli.format;
    let print = |text: &str, value: &serde_json::Value| match format {
        Format::Text => out(text),
        Format::Json => out(&format!("{}\n", serde_json::to_string_pretty(value).expect("json values serialize"))),
    };
    match cli.command {
        Command::Validate { file } => match load_workspace(&file) {
            Ok((doc, _)) => {
                let text = format!(
                    "{}: valid ({} algebras, {} modules, {} bimodules)\n",
                    file.display(),
                    doc.algebras.len(),
                    doc.modules.len(),
                    doc.bimodules.len()
                );
                let value = json!({
                    "report_version": REPORT_VERSION,
                    "command": "validate",
                    "valid": true,
                    "algebras": doc.algebras.keys().collect::<Vec<_>>(),
                    "modules": doc.modules.keys().collect::<Vec<_>>(),
                    "bimodules": doc.bimodules.keys().collect::<Vec<_>>(),
                });
                print(&text, &value);
                Ok(EXIT_OK)
            }
            Err(WorkspaceError::Io { path, source }) => {
                emit_error(format, &format!("cannot read {path}: {source}"));
                Ok(EXIT_ERROR)
            }
            Err(e) => {
                let value = json!({
                    "report_version": REPORT_VERSION,
                    "command": "validate",
                    "valid": false,
                    "witness": e.to_string(),
                });
                print(&format!("{}: invalid: {e}\n", file.display()), &value);
                Ok(EXIT_FAIL)
            }
        },
        Command::Check {
            kind,
            bimodule,
            module,
            over,
            class,
            length,
            bound,
        } => {
            let ws = load(&cli.workspace)?;
            let args = CheckArgs {
                kind,
                bimodule,
                module,
                over,
                class,
                length,
                bound,
            };
            let out = run_check(&ws, &args)?;
            print(&out.text, &out.json);
            Ok(out.exit_code)
        }
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                let names: Vec<_> = examples::BUILDERS
                    .iter()
                    .map(|b| json!({ "name": b.name, "params": b.params, "about": b.about }))
                    .collect();
                print(&examples::list(), &json!({ "report_version": REPORT_VERSION, "builders": names }));
                Ok(EXIT_OK)
            }
            ExamplesAction::Build { name, params, output } => {
                let ws = load(&cli.workspace)?;
                let doc = examples::build(&ws, &name, &params)?;
                match output {
                    Some(path) => std::fs::write(&path, doc.to_json() + "\n")?,
                    None => out(&format!("{}\n", doc.to_json())),
                }
                Ok(EXIT_OK)
            }
        },
        Command::Suite {
            seed,
            bound,
            trials,
            max_dim,
            only,
        } => {
            let cfg = SuiteConfig {
                seed,
                bound,
                trials,
                max_dim,
            };
            let report = if only.is_empty() {
                run_suite(cfg)
            } else {
                Suite::new(cfg).run_all_of(&only)
            };
            let mut text = format!("suite: seed {seed}, bound {bound}, trials {trials}, max-dim {max_dim}\n");
            for p in &report.properties {
                text += &format!(
                    "{:>3} {} {:<58} {:>6} checks {:>4} failures {:>7} ms\n",
                    p.id,
                    if p.passed() { "PASS" } else { "FAIL" },
                    p.name,
                    p.checks,
                    p.failures,
                    p.elapsed_ms
                );
                for w in &p.witnesses {
                    text += &format!("      witness: {w}\n");
                }
            }
            text += &format!(
                "{} in {} ms\n",
                if report.passed { "all properties pass" } else { "FAILURES" },
                report.wall_clock_ms
            );
            print(&text, &serde_json::to_value(&report)?);
            Ok(if report.passed { EXIT_OK } else { EXIT_ERROR })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let format = cli.format;
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            emit_error(format, &format!("{e:#}"));
            EXIT_ERROR
        }
    };
    ExitCode::from(code as u8)
}
