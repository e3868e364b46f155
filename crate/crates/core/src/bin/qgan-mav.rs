use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qgan_mav::bench::{self, ExperimentConfig, Report, ReportFormat};
use qgan_mav::navdata::{self, AttackKind};
use qgan_mav::photonic::MeasureMode;
use qgan_mav::qgan::{DiscriminatorParams, GradMethod};
use qgan_mav::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qgan-mav",
    version,
    about = "Quantum GAN over MAV navigation data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the six genuine reference traces as CSV.
    Synth {
        /// Output directory.
        #[arg(long, default_value = "data")]
        out: PathBuf,
        /// Uniform velocity noise, m/s.
        #[arg(long, default_value_t = navdata::GENUINE_NOISE)]
        noise: f64,
    },
    /// Apply a spoofing transform to a trace file.
    Attack {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: AttackKind,
        /// Defaults to `<stem>.<kind>.csv` next to the input.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Train the discriminator only; writes its parameters and history as JSON.
    TrainDisc(Experiment),
    /// Train the generator against a discriminator.
    TrainGen {
        #[command(flatten)]
        exp: Experiment,
        /// Discriminator parameters from `train-disc`; trained first when absent.
        #[arg(long)]
        disc: Option<PathBuf>,
    },
    /// Full pipeline: discriminator then generator.
    Run {
        #[command(flatten)]
        exp: Experiment,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: ReportFormat,
    },
    /// Run the pipeline for n = 1 … max-qubits and emit a CSV table.
    Sweep {
        #[command(flatten)]
        exp: Experiment,
        #[arg(long, default_value_t = 5)]
        max_qubits: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct Experiment {
    #[arg(long, default_value_t = 2)]
    qubits: usize,
    #[arg(long, default_value_t = 2)]
    layers: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0.1)]
    lr: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value = "mean-photon", value_parser = parse_mode)]
    measure_mode: MeasureMode,
    #[arg(long, default_value = "shift", value_parser = parse_grad)]
    grad: GradMethod,
    /// Directory of `*.genuine.csv` traces.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Experiment {
    fn config(&self, rounds: usize) -> ExperimentConfig {
        ExperimentConfig {
            qubits: self.qubits,
            layers: self.layers,
            iterations: self.iters,
            learning_rate: self.lr,
            seed: self.seed,
            measure_mode: self.measure_mode,
            grad_method: self.grad,
            data_dir: self.data.clone(),
            rounds,
        }
    }
}

fn parse_kind(s: &str) -> std::result::Result<AttackKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> std::result::Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> std::result::Result<MeasureMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_grad(s: &str) -> std::result::Result<GradMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let line = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{line}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Synth { out, noise } => {
            let traces = navdata::GENUINE_SEEDS
                .iter()
                .map(|&seed| navdata::synth_trace(seed, noise))
                .collect::<Result<Vec<_>>>()?;
            for path in bench::write_reference_sets(&out, &traces)? {
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::Attack { input, kind, out } => {
            let trace = navdata::load_trace(&input)?;
            let faked = navdata::apply_attack(&trace, kind);
            let out = out.unwrap_or_else(|| attacked_path(&input, kind));
            navdata::save_trace(&faked, &out)?;
            println!("{}", out.display());
            Ok(())
        }
        Command::TrainDisc(exp) => {
            let config = exp.config(1);
            let prep = bench::prepare(&config)?;
            let phase = bench::run_disc_phase(&config, &prep.real_states, &prep.disc, &prep.gen)?;
            write_json(&phase, exp.out.as_deref())
        }
        Command::TrainGen { exp, disc } => {
            let config = exp.config(1);
            let prep = bench::prepare(&config)?;
            let disc = match disc {
                Some(path) => read_disc(&path)?,
                None => {
                    bench::run_disc_phase(&config, &prep.real_states, &prep.disc, &prep.gen)?.params
                }
            };
            let phase = bench::run_gen_phase(&config, &prep.gen, &disc)?;
            write_json(&phase, exp.out.as_deref())
        }
        Command::Run {
            exp,
            rounds,
            format,
        } => {
            let report = bench::run_single(&exp.config(rounds))?;
            write_report(&report, format, exp.out.as_deref())
        }
        Command::Sweep {
            exp,
            max_qubits,
            reps,
            format,
        } => {
            let report = bench::run_sweep(&exp.config(1), max_qubits, reps)?;
            for row in &report.rows {
                if let Some(err) = &row.error {
                    let line = serde_json::json!({ "row_error": row.n, "message": err });
                    eprintln!("{line}");
                }
            }
            write_report(&report, format, exp.out.as_deref())
        }
    }
}

fn attacked_path(input: &Path, kind: AttackKind) -> PathBuf {
    let name = input
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("trace.csv");
    let stem = name.strip_suffix(".csv").unwrap_or(name);
    let stem = stem.strip_suffix(".genuine").unwrap_or(stem);
    input.with_file_name(navdata::TraceLabel::Fake(kind).file_name(stem))
}

#[derive(serde::Deserialize)]
struct DiscFile {
    params: DiscriminatorParams,
}

fn read_disc(path: &Path) -> Result<DiscriminatorParams> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    // Accept either a bare parameter object or a `train-disc` report.
    serde_json::from_str::<DiscriminatorParams>(&text)
        .or_else(|_| serde_json::from_str::<DiscFile>(&text).map(|f| f.params))
        .map_err(|e| Error::Parse {
            line: e.line() as u64,
            msg: format!("{}: {e}", path.display()),
        })
}

fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Serialize(e.to_string()))?;
    // serde_json writes non-finite floats as null
    if text.contains("null") {
        return Err(Error::Serialize("non-finite value in output".into()));
    }
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn write_report<R: Report>(report: &R, format: ReportFormat, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => bench::emit_report(report, format, path),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            bench::write_report(report, format, &mut lock)?;
            lock.flush().map_err(|e| Error::Serialize(e.to_string()))
        }
    }
}
