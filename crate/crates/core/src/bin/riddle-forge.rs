use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use riddle_forge::classics::SURVEY_HEADER;
use riddle_forge::report::{solve, SolveOptions, SolveReport};
use riddle_forge::speck::{parse_puzzles, serialize_puzzle};
use riddle_forge::sweep::{self, PigeonholeBounds, SweepSummary};
use riddle_forge::weighing::{build_strategy, WeighingInstance};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_DISAGREE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "riddle-forge",
    version,
    about = "Solve and verify classic counting puzzles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve every puzzle in the given speck files.
    Solve {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Run the independent oracles and report agreement.
        #[arg(long)]
        check: bool,
        /// Print the worked steps for each answer.
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Round rate answers for subjects up to a whole number.
        #[arg(long)]
        ceil_subjects: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a closed formula with its oracle over a whole range.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Print the balance-scale decision tree for N objects.
    Strategy {
        objects: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite speck files in canonical form.
    Fmt { paths: Vec<PathBuf> },
}

#[derive(Subcommand)]
enum SweepKind {
    Weighing {
        #[arg(long, default_value_t = sweep::MAX_WEIGHING_OBJECTS)]
        max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Pigeonhole {
        #[arg(long, default_value_t = sweep::MAX_PIGEONHOLE_COLORS)]
        max_colors: u64,
        #[arg(long, default_value_t = sweep::MAX_PIGEONHOLE_COUNT)]
        max_count: u64,
        #[arg(long, default_value_t = sweep::MAX_PIGEONHOLE_REQUIRED)]
        max_required: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Transfer {
        #[arg(long, default_value_t = 4)]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        max_d: u64,
        /// Where to write the per-instance survey rows (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_solve(paths: &[PathBuf], opts: SolveOptions, format: Format, out: &Option<PathBuf>) -> u8 {
    let mut input_error = false;
    let mut reports: Vec<(String, SolveReport)> = Vec::new();
    for path in paths {
        let source = match fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                input_error = true;
                continue;
            }
        };
        let specs = match parse_puzzles(&source) {
            Ok(specs) => specs,
            Err(errors) => {
                for e in errors {
                    eprintln!("{}:{e}", path.display());
                }
                input_error = true;
                continue;
            }
        };
        for (i, spec) in specs.iter().enumerate() {
            let fallback = format!("{}#{}", path.display(), i + 1);
            match solve(spec, &opts) {
                Ok(report) => reports.push((fallback, report)),
                Err(e) => {
                    eprintln!("error: {fallback}: {e}");
                    input_error = true;
                }
            }
        }
    }
    let text = match format {
        Format::Text => reports
            .iter()
            .map(|(f, r)| r.to_text(f))
            .collect::<String>(),
        Format::Json => to_json(&reports.iter().map(|(_, r)| r).collect::<Vec<_>>()),
    };
    if let Err(e) = emit(out, &text) {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    if input_error {
        EXIT_INPUT
    } else if reports.iter().any(|(_, r)| r.disagrees()) {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    }
}

fn render_summary(summary: &SweepSummary, format: Format) -> String {
    match format {
        Format::Text => summary.to_text(),
        Format::Json => to_json(summary),
    }
}

fn cmd_sweep(kind: SweepKind) -> Result<u8, String> {
    let pool = sweep::thread_pool().map_err(|e| e.to_string())?;
    pool.install(|| match kind {
        SweepKind::Weighing { max, format } => {
            let summary = sweep::sweep_weighing(max).map_err(|e| e.to_string())?;
            emit(&None, &render_summary(&summary, format))?;
            Ok(if summary.all_match() {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            })
        }
        SweepKind::Pigeonhole {
            max_colors,
            max_count,
            max_required,
            format,
        } => {
            let bounds = PigeonholeBounds {
                max_colors,
                max_count,
                max_required,
            };
            let summary = sweep::sweep_pigeonhole(bounds).map_err(|e| e.to_string())?;
            emit(&None, &render_summary(&summary, format))?;
            Ok(if summary.all_match() {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            })
        }
        SweepKind::Transfer {
            max_n,
            max_d,
            out,
            format,
        } => {
            let (summary, rows) = sweep::sweep_transfer(max_n, max_d).map_err(|e| e.to_string())?;
            let report = match format {
                Format::Text => {
                    let mut s = String::from(SURVEY_HEADER);
                    s.push('\n');
                    for r in &rows {
                        s.push_str(&r.to_line());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => to_json(&rows),
            };
            match &out {
                Some(_) => {
                    emit(&out, &report)?;
                    emit(&None, &render_summary(&summary, format))?;
                }
                None => emit(&None, &report)?,
            }
            Ok(EXIT_OK)
        }
    })
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve {
            paths,
            check,
            explain,
            format,
            ceil_subjects,
            out,
        } => {
            let opts = SolveOptions {
                check,
                explain,
                ceil_subjects,
            };
            Ok(cmd_solve(&paths, opts, format, &out))
        }
        Command::Sweep { kind } => cmd_sweep(kind),
        Command::Strategy {
            objects,
            format,
            out,
        } => {
            let inst = WeighingInstance::new(objects).map_err(|e| e.to_string())?;
            if objects > sweep::MAX_WEIGHING_OBJECTS {
                return Err(format!(
                    "strategy trees are limited to {} objects",
                    sweep::MAX_WEIGHING_OBJECTS
                ));
            }
            let tree = build_strategy(&inst);
            let text = match format {
                Format::Text => tree.to_text(),
                Format::Json => to_json(&tree),
            };
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Fmt { paths } => {
            let mut status = EXIT_OK;
            for path in paths {
                let source =
                    fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                match parse_puzzles(&source) {
                    Ok(specs) => {
                        let text: String =
                            specs.iter().map(|s| serialize_puzzle(s) + "\n").collect();
                        fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    }
                    Err(errors) => {
                        for e in errors {
                            eprintln!("{}:{e}", path.display());
                        }
                        status = EXIT_INPUT;
                    }
                }
            }
            Ok(status)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
