//! End-to-end experiment driver: data preparation, discriminator then
//! generator training, wall-clock timing, qubit sweeps and reports.
//!
//! Learning time covers the optimizer loops only. Trace synthesis, loading,
//! windowing and the one-off amplitude encoding of genuine data happen
//! before the clock starts.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::encoding::{encode_values, normalize, DataVector};
use crate::error::{Error, Result};
use crate::navdata::{self, NavTrace, TraceLabel};
use crate::photonic::MeasureMode;
use crate::qgan::{
    encode_real_sets, generator_forward, mean_disc_cost, mean_prob_real_true, prob_fake_true,
    train_discriminator_states, train_generator, DiscriminatorParams, GeneratorParams, GradMethod,
    TrainConfig,
};
use crate::statevec::StateVector;

/// Largest register a sweep or run will accept.
pub const MAX_BENCH_QUBITS: usize = 8;

/// CSV columns of run and sweep reports.
pub const CSV_COLUMNS: [&str; 9] = [
    "n",
    "m",
    "iters",
    "lr",
    "seed",
    "disc_ms",
    "gen_ms",
    "p_real_true",
    "p_fake_true",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub qubits: usize,
    pub layers: usize,
    pub iterations: usize,
    pub learning_rate: f64,
    pub seed: u64,
    pub measure_mode: MeasureMode,
    pub grad_method: GradMethod,
    /// Directory of `*.genuine.csv` traces. Missing or empty directories
    /// are filled with the six reference traces.
    pub data_dir: Option<PathBuf>,
    /// Discriminator-then-generator passes.
    pub rounds: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            qubits: 2,
            layers: 2,
            iterations: 100,
            learning_rate: 0.1,
            seed: 42,
            measure_mode: MeasureMode::MeanPhoton,
            grad_method: GradMethod::ParameterShift,
            data_dir: None,
            rounds: 1,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_BENCH_QUBITS).contains(&self.qubits) {
            return Err(Error::Config(format!(
                "qubits must be in 1..={MAX_BENCH_QUBITS}, got {}",
                self.qubits
            )));
        }
        if self.layers == 0 {
            return Err(Error::Config("layers must be at least 1".into()));
        }
        if self.rounds == 0 {
            return Err(Error::Config("rounds must be at least 1".into()));
        }
        self.train_config().validate()
    }

    pub fn train_config(&self) -> TrainConfig {
        TrainConfig {
            learning_rate: self.learning_rate,
            iterations: self.iterations,
            seed: self.seed,
            measure_mode: self.measure_mode,
            grad_method: self.grad_method,
        }
    }
}

/// Genuine data and initial parameters for one run.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub real_sets: Vec<DataVector>,
    pub real_states: Vec<StateVector>,
    pub disc: DiscriminatorParams,
    pub gen: GeneratorParams,
}

/// Loads or synthesizes the genuine traces, windows and encodes them, and
/// draws the seeded initial parameters.
pub fn prepare(config: &ExperimentConfig) -> Result<Prepared> {
    config.validate()?;
    let traces = genuine_traces(config.data_dir.as_deref())?;
    let n = config.qubits;
    let mut real_sets = Vec::new();
    for trace in &traces {
        for chunk in navdata::window(trace, n) {
            real_sets.push(normalize(&chunk)?);
        }
    }
    if real_sets.is_empty() {
        let longest = traces.iter().map(NavTrace::scalar_count).max().unwrap_or(0);
        return Err(Error::Config(format!(
            "no {}-scalar window fits in traces of at most {longest} scalars; use fewer qubits",
            1usize << n
        )));
    }
    let real_states = encode_real_sets(&real_sets, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let disc = DiscriminatorParams::random(config.layers, n, &mut rng)?;
    let gen = GeneratorParams::random(n, &mut rng)?;
    Ok(Prepared {
        real_sets,
        real_states,
        disc,
        gen,
    })
}

/// Genuine traces from `dir`, or the six reference traces when `dir` is
/// `None` or holds none. Synthesized traces are written into `dir`.
pub fn genuine_traces(dir: Option<&Path>) -> Result<Vec<NavTrace>> {
    let Some(dir) = dir else {
        return navdata::genuine_reference_sets();
    };
    let mut paths = Vec::new();
    if dir.is_dir() {
        for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
            let path = entry.map_err(|e| Error::io(dir, e))?.path();
            let genuine = path
                .file_name()
                .and_then(|n| n.to_str())
                .and_then(TraceLabel::from_file_name)
                == Some(TraceLabel::Genuine);
            if genuine {
                paths.push(path);
            }
        }
    }
    paths.sort();
    if paths.is_empty() {
        let traces = navdata::genuine_reference_sets()?;
        write_reference_sets(dir, &traces)?;
        return Ok(traces);
    }
    paths.iter().map(navdata::load_trace).collect()
}

/// Writes traces as `flight<k>.genuine.csv`, `k` starting at 1.
pub fn write_reference_sets(dir: &Path, traces: &[NavTrace]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    traces
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let path = dir.join(t.label().file_name(&format!("flight{}", k + 1)));
            navdata::save_trace(t, &path)?;
            Ok(path)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscPhase {
    pub params: DiscriminatorParams,
    pub history: Vec<f64>,
    /// p_F − mean p_R over all genuine windows, before and after training.
    pub initial_cost: f64,
    pub final_cost: f64,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenPhase {
    pub params: GeneratorParams,
    pub history: Vec<f64>,
    pub initial_p_fake_true: f64,
    pub final_p_fake_true: f64,
    pub reseeds: usize,
    pub elapsed_ms: f64,
}

/// Trains `disc` against the encoded output of `gen`; only the optimizer
/// loop is timed.
pub fn run_disc_phase(
    config: &ExperimentConfig,
    real_states: &[StateVector],
    disc: &DiscriminatorParams,
    gen: &GeneratorParams,
) -> Result<DiscPhase> {
    let cfg = config.train_config();
    let fake_state = encode_values(&generator_forward(gen, cfg.measure_mode)?, disc.qubits())?;
    let initial_cost = mean_disc_cost(disc, real_states, &fake_state)?;
    let start = Instant::now();
    let trained = train_discriminator_states(disc, real_states, &fake_state, &cfg)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let final_cost = mean_disc_cost(&trained.params, real_states, &fake_state)?;
    Ok(DiscPhase {
        params: trained.params,
        history: trained.history,
        initial_cost,
        final_cost,
        elapsed_ms,
    })
}

pub fn run_gen_phase(
    config: &ExperimentConfig,
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
) -> Result<GenPhase> {
    let cfg = config.train_config();
    let initial_p_fake_true = prob_fake_true(gen, disc, cfg.measure_mode).unwrap_or(0.0);
    let start = Instant::now();
    let trained = train_generator(gen, disc, &cfg)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let final_p_fake_true = prob_fake_true(&trained.params, disc, cfg.measure_mode)?;
    Ok(GenPhase {
        params: trained.params,
        history: trained.history,
        initial_p_fake_true,
        final_p_fake_true,
        reseeds: trained.reseeds,
        elapsed_ms,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub config: ExperimentConfig,
    pub seed: u64,
    pub windows: usize,
    pub disc_history: Vec<f64>,
    pub gen_history: Vec<f64>,
    pub initial_disc_cost: f64,
    pub final_disc_cost: f64,
    pub initial_p_fake_true: f64,
    pub p_real_true: f64,
    pub p_fake_true: f64,
    pub disc_ms: f64,
    pub gen_ms: f64,
    pub disc_params: DiscriminatorParams,
    pub gen_params: GeneratorParams,
}

impl RunReport {
    /// The report with its wall-clock fields zeroed, for reproducibility
    /// comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            disc_ms: 0.0,
            gen_ms: 0.0,
            ..self.clone()
        }
    }

    fn csv_row(&self) -> CsvRow {
        CsvRow {
            n: self.config.qubits,
            m: self.config.layers,
            iters: self.config.iterations,
            lr: self.config.learning_rate,
            seed: self.seed,
            disc_ms: Some(self.disc_ms),
            gen_ms: Some(self.gen_ms),
            p_real_true: Some(self.p_real_true),
            p_fake_true: Some(self.p_fake_true),
        }
    }
}

/// One full experiment: prepare data, then `rounds` passes of
/// discriminator training followed by generator training.
pub fn run_single(config: &ExperimentConfig) -> Result<RunReport> {
    let prep = prepare(config)?;
    let mut disc = prep.disc;
    let mut gen = prep.gen;
    let mut disc_history = Vec::new();
    let mut gen_history = Vec::new();
    let (mut disc_ms, mut gen_ms) = (0.0, 0.0);
    let mut first_disc: Option<(f64, f64)> = None;
    let mut first_p_fake = None;

    for _ in 0..config.rounds {
        let dp = run_disc_phase(config, &prep.real_states, &disc, &gen)?;
        first_disc.get_or_insert((dp.initial_cost, dp.final_cost));
        disc_history.extend(dp.history);
        disc_ms += dp.elapsed_ms;
        disc = dp.params;

        let gp = run_gen_phase(config, &gen, &disc)?;
        first_p_fake.get_or_insert(gp.initial_p_fake_true);
        gen_history.extend(gp.history);
        gen_ms += gp.elapsed_ms;
        gen = gp.params;
    }

    let (initial_disc_cost, final_disc_cost) = first_disc.unwrap_or_default();
    let report = RunReport {
        config: config.clone(),
        seed: config.seed,
        windows: prep.real_sets.len(),
        disc_history,
        gen_history,
        initial_disc_cost,
        final_disc_cost,
        initial_p_fake_true: first_p_fake.unwrap_or_default(),
        p_real_true: mean_prob_real_true(&disc, &prep.real_states)?,
        p_fake_true: prob_fake_true(&gen, &disc, config.measure_mode)?,
        disc_ms,
        gen_ms,
        disc_params: disc,
        gen_params: gen,
    };
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub iters: usize,
    pub lr: f64,
    pub seed: u64,
    /// Minimum over repetitions.
    pub disc_ms: Option<f64>,
    pub gen_ms: Option<f64>,
    pub disc_ms_mean: Option<f64>,
    pub gen_ms_mean: Option<f64>,
    pub p_real_true: Option<f64>,
    pub p_fake_true: Option<f64>,
    pub error: Option<String>,
}

impl SweepRow {
    fn csv_row(&self) -> CsvRow {
        CsvRow {
            n: self.n,
            m: self.m,
            iters: self.iters,
            lr: self.lr,
            seed: self.seed,
            disc_ms: self.disc_ms,
            gen_ms: self.gen_ms,
            p_real_true: self.p_real_true,
            p_fake_true: self.p_fake_true,
        }
    }

    /// Generator learning time per optimizer iteration, ms.
    pub fn gen_ms_per_iter(&self) -> Option<f64> {
        self.gen_ms
            .filter(|_| self.iters > 0)
            .map(|t| t / self.iters as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct SweepReport {
    pub repetitions: usize,
    pub rows: Vec<SweepRow>,
}

/// Runs `base` at every `n` in `1..=n_max`, `repetitions` times each.
/// Failed points become rows carrying the error message.
pub fn run_sweep(base: &ExperimentConfig, n_max: usize, repetitions: usize) -> Result<SweepReport> {
    if n_max > MAX_BENCH_QUBITS {
        return Err(Error::Config(format!(
            "sweep limit is {MAX_BENCH_QUBITS} qubits, got {n_max}"
        )));
    }
    if repetitions == 0 {
        return Err(Error::Config("repetitions must be at least 1".into()));
    }
    let rows = (1..=n_max)
        .map(|n| {
            let config = ExperimentConfig {
                qubits: n,
                ..base.clone()
            };
            sweep_point(&config, repetitions)
        })
        .collect();
    Ok(SweepReport { repetitions, rows })
}

fn sweep_point(config: &ExperimentConfig, repetitions: usize) -> SweepRow {
    let mut row = SweepRow {
        n: config.qubits,
        m: config.layers,
        iters: config.iterations,
        lr: config.learning_rate,
        seed: config.seed,
        disc_ms: None,
        gen_ms: None,
        disc_ms_mean: None,
        gen_ms_mean: None,
        p_real_true: None,
        p_fake_true: None,
        error: None,
    };
    let mut reports = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        match run_single(config) {
            Ok(r) => reports.push(r),
            Err(e) => {
                row.error = Some(e.to_string());
                return row;
            }
        }
    }
    let stats = |f: fn(&RunReport) -> f64| {
        let values: Vec<f64> = reports.iter().map(f).collect();
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        (min, values.iter().sum::<f64>() / values.len() as f64)
    };
    let (disc_min, disc_mean) = stats(|r| r.disc_ms);
    let (gen_min, gen_mean) = stats(|r| r.gen_ms);
    row.disc_ms = Some(disc_min);
    row.gen_ms = Some(gen_min);
    row.disc_ms_mean = Some(disc_mean);
    row.gen_ms_mean = Some(gen_mean);
    row.p_real_true = Some(reports[0].p_real_true);
    row.p_fake_true = Some(reports[0].p_fake_true);
    row
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Config(format!("unknown report format '{other}'"))),
        }
    }
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    m: usize,
    iters: usize,
    lr: f64,
    seed: u64,
    disc_ms: Option<f64>,
    gen_ms: Option<f64>,
    p_real_true: Option<f64>,
    p_fake_true: Option<f64>,
}

/// Anything the harness can write out.
pub trait Report: Serialize {
    fn csv_rows(&self) -> Vec<impl Serialize>;
    fn floats(&self) -> Vec<(&'static str, f64)>;
}

impl Report for RunReport {
    fn csv_rows(&self) -> Vec<impl Serialize> {
        vec![self.csv_row()]
    }

    fn floats(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("learning_rate", self.config.learning_rate),
            ("initial_disc_cost", self.initial_disc_cost),
            ("final_disc_cost", self.final_disc_cost),
            ("initial_p_fake_true", self.initial_p_fake_true),
            ("p_real_true", self.p_real_true),
            ("p_fake_true", self.p_fake_true),
            ("disc_ms", self.disc_ms),
            ("gen_ms", self.gen_ms),
        ];
        out.extend(self.disc_history.iter().map(|&c| ("disc_history", c)));
        out.extend(self.gen_history.iter().map(|&c| ("gen_history", c)));
        out.extend(
            self.disc_params
                .as_slice()
                .iter()
                .map(|&w| ("disc_params", w)),
        );
        out.extend(
            self.gen_params
                .to_flat()
                .into_iter()
                .map(|x| ("gen_params", x)),
        );
        out
    }
}

impl Report for SweepReport {
    fn csv_rows(&self) -> Vec<impl Serialize> {
        self.rows.iter().map(SweepRow::csv_row).collect()
    }

    fn floats(&self) -> Vec<(&'static str, f64)> {
        let mut out = Vec::new();
        for row in &self.rows {
            out.push(("lr", row.lr));
            let fields = [
                ("disc_ms", row.disc_ms),
                ("gen_ms", row.gen_ms),
                ("disc_ms_mean", row.disc_ms_mean),
                ("gen_ms_mean", row.gen_ms_mean),
                ("p_real_true", row.p_real_true),
                ("p_fake_true", row.p_fake_true),
            ];
            out.extend(fields.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))));
        }
        out
    }
}

/// Serializes `report` to `out`. Non-finite numbers abort with a
/// serialization error instead of being written.
pub fn write_report<R: Report, W: Write>(report: &R, format: ReportFormat, out: W) -> Result<()> {
    if let Some((field, value)) = report.floats().into_iter().find(|(_, v)| !v.is_finite()) {
        return Err(Error::Serialize(format!(
            "non-finite value {value} in field '{field}'"
        )));
    }
    match format {
        ReportFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)
                .map_err(|e| Error::Serialize(e.to_string()))?;
            out.write_all(b"\n")
                .map_err(|e| Error::Serialize(e.to_string()))
        }
        ReportFormat::Csv => {
            let ser = |e: csv::Error| Error::Serialize(e.to_string());
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(CSV_COLUMNS).map_err(ser)?;
            for row in report.csv_rows() {
                w.serialize(row).map_err(ser)?;
            }
            w.flush().map_err(|e| Error::Serialize(e.to_string()))
        }
    }
}

/// [`write_report`] into a file at `path`.
pub fn emit_report<R: Report>(
    report: &R,
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_report(report, format, &mut out)?;
    out.flush().map_err(|e| Error::io(path, e))
}
