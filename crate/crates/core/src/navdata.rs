//! Synthetic MAV velocity traces, spoofing transforms and windowing.
//!
//! The reference flight takes off one metre, flies two horizontal circles
//! and lands, sampled as 21 `(vx, vy, vz)` triples (63 scalars).

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sampling period of the reference scenario, seconds.
pub const SAMPLE_PERIOD: f64 = 0.5;
pub const TAKEOFF_SAMPLES: usize = 4;
pub const CIRCLE_SAMPLES: usize = 13;
pub const LANDING_SAMPLES: usize = 4;
/// Horizontal speed during the circles, m/s.
pub const CIRCLE_SPEED: f64 = 0.5;
/// Climb height, metres.
pub const TAKEOFF_HEIGHT: f64 = 1.0;
pub const CIRCLE_TURNS: f64 = 2.0;

/// Noise amplitude and seeds of the six genuine reference data sets.
pub const GENUINE_NOISE: f64 = 0.02;
pub const GENUINE_SEEDS: [u64; 6] = [1, 2, 3, 4, 5, 6];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub vx: f64,
    pub vy: f64,
    pub vz: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AttackKind {
    SwapX,
    SwapY,
    SwapXZ,
    SwapXYZ,
}

impl AttackKind {
    pub const ALL: [AttackKind; 4] = [
        AttackKind::SwapX,
        AttackKind::SwapY,
        AttackKind::SwapXZ,
        AttackKind::SwapXYZ,
    ];

    /// Sign applied to (vx, vy, vz).
    fn signs(self) -> [f64; 3] {
        match self {
            AttackKind::SwapX => [-1.0, 1.0, 1.0],
            AttackKind::SwapY => [1.0, -1.0, 1.0],
            AttackKind::SwapXZ => [-1.0, 1.0, -1.0],
            AttackKind::SwapXYZ => [-1.0, -1.0, -1.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceLabel {
    Genuine,
    Fake(AttackKind),
}

impl TraceLabel {
    /// Label encoded in a `<name>.<label>.csv` file name, if any.
    pub fn from_file_name(name: &str) -> Option<Self> {
        let stem = name.strip_suffix(".csv")?;
        let (_, tag) = stem.rsplit_once('.')?;
        tag.parse().ok()
    }

    pub fn file_name(&self, name: &str) -> String {
        format!("{name}.{self}.csv")
    }
}

impl fmt::Display for TraceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceLabel::Genuine => f.pad("genuine"),
            TraceLabel::Fake(kind) => kind.fmt(f),
        }
    }
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            AttackKind::SwapX => "swapx",
            AttackKind::SwapY => "swapy",
            AttackKind::SwapXZ => "swapxz",
            AttackKind::SwapXYZ => "swapxyz",
        })
    }
}

impl FromStr for AttackKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AttackKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Config(format!("unknown attack kind '{s}'")))
    }
}

impl FromStr for TraceLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "genuine" {
            Ok(TraceLabel::Genuine)
        } else {
            s.parse().map(TraceLabel::Fake)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NavTrace {
    samples: Vec<Sample>,
    label: TraceLabel,
}

impl NavTrace {
    /// Timestamps must be strictly increasing.
    pub fn new(samples: Vec<Sample>, label: TraceLabel) -> Result<Self> {
        for (i, w) in samples.windows(2).enumerate() {
            if w[1].t.partial_cmp(&w[0].t) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::Domain(format!(
                    "timestamps not strictly increasing at sample {}",
                    i + 1
                )));
            }
        }
        Ok(Self { samples, label })
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn label(&self) -> TraceLabel {
        self.label
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn scalar_count(&self) -> usize {
        self.samples.len() * 3
    }

    /// vx, vy, vz, vx, … in time order.
    pub fn flatten(&self) -> Vec<f64> {
        self.samples
            .iter()
            .flat_map(|s| [s.vx, s.vy, s.vz])
            .collect()
    }
}

/// Reference flight: takeoff, two circles, landing, plus seeded uniform
/// noise in `[-noise_amp, noise_amp]` on every velocity component.
///
/// The seed also picks the starting heading of the circles.
pub fn synth_trace(seed: u64, noise_amp: f64) -> Result<NavTrace> {
    if !(noise_amp.is_finite() && noise_amp >= 0.0) {
        return Err(Error::Domain(format!(
            "noise amplitude must be non-negative, got {noise_amp}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heading = rng.gen_range(0.0..TAU);

    // Half-sine climb profile scaled so Σ vz·Δt = TAKEOFF_HEIGHT.
    let profile: Vec<f64> = (0..TAKEOFF_SAMPLES)
        .map(|k| (PI * (k as f64 + 0.5) / TAKEOFF_SAMPLES as f64).sin())
        .collect();
    let scale = TAKEOFF_HEIGHT / (profile.iter().sum::<f64>() * SAMPLE_PERIOD);
    let climb: Vec<f64> = profile.iter().map(|p| p * scale).collect();

    // First and last circle samples coincide: exactly CIRCLE_TURNS periods.
    let step = CIRCLE_TURNS * TAU / (CIRCLE_SAMPLES - 1) as f64;

    let mut velocities = Vec::with_capacity(TAKEOFF_SAMPLES + CIRCLE_SAMPLES + LANDING_SAMPLES);
    velocities.extend(climb.iter().map(|&vz| [0.0, 0.0, vz]));
    velocities.extend((0..CIRCLE_SAMPLES).map(|j| {
        let angle = heading + step * j as f64;
        [CIRCLE_SPEED * angle.cos(), CIRCLE_SPEED * angle.sin(), 0.0]
    }));
    velocities.extend(climb.iter().map(|&vz| [0.0, 0.0, -vz]));

    let samples = velocities
        .into_iter()
        .enumerate()
        .map(|(k, [vx, vy, vz])| {
            let mut jitter = || {
                if noise_amp > 0.0 {
                    rng.gen_range(-noise_amp..=noise_amp)
                } else {
                    0.0
                }
            };
            Sample {
                t: k as f64 * SAMPLE_PERIOD,
                vx: vx + jitter(),
                vy: vy + jitter(),
                vz: vz + jitter(),
            }
        })
        .collect();
    NavTrace::new(samples, TraceLabel::Genuine)
}

/// The six genuine data sets: seeds 1…6 at [`GENUINE_NOISE`].
pub fn genuine_reference_sets() -> Result<Vec<NavTrace>> {
    GENUINE_SEEDS
        .iter()
        .map(|&seed| synth_trace(seed, GENUINE_NOISE))
        .collect()
}

/// Negates the velocity components named by `kind`.
pub fn apply_attack(trace: &NavTrace, kind: AttackKind) -> NavTrace {
    let [sx, sy, sz] = kind.signs();
    let samples = trace
        .samples
        .iter()
        .map(|s| Sample {
            t: s.t,
            vx: sx * s.vx,
            vy: sy * s.vy,
            vz: sz * s.vz,
        })
        .collect();
    NavTrace {
        samples,
        label: TraceLabel::Fake(kind),
    }
}

/// Consecutive `2^n`-scalar chunks of the flattened trace. A trailing
/// partial chunk and all-zero chunks are dropped.
pub fn window(trace: &NavTrace, n: usize) -> Vec<Vec<f64>> {
    let size = match 1usize.checked_shl(n as u32) {
        Some(size) if n >= 1 => size,
        _ => return Vec::new(),
    };
    trace
        .flatten()
        .chunks_exact(size)
        .filter(|chunk| chunk.iter().any(|&x| x != 0.0))
        .map(<[f64]>::to_vec)
        .collect()
}

const HEADER: [&str; 4] = ["t", "vx", "vy", "vz"];

/// Writes the `t,vx,vy,vz` CSV form in plain decimal notation, using the shortest
/// round-trip digits so reloading is exact.
pub fn write_trace<W: Write>(trace: &NavTrace, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let ser = |e: csv::Error| Error::Serialize(e.to_string());
    w.write_record(HEADER).map_err(ser)?;
    for s in &trace.samples {
        w.write_record([s.t, s.vx, s.vy, s.vz].map(format_value))
            .map_err(ser)?;
    }
    w.flush()
        .map_err(|e| Error::Serialize(format!("flushing trace: {e}")))
}

fn format_value(x: f64) -> String {
    format!("{x}")
}

/// Parses the CSV form; `label` is supplied by the caller.
pub fn read_trace<R: Read>(input: R, label: TraceLabel) -> Result<NavTrace> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(input);
    let mut records = r.records();

    let header = match records.next() {
        Some(rec) => rec.map_err(|e| csv_parse_error(&e))?,
        None => {
            return Err(Error::Parse {
                line: 1,
                msg: "empty file, expected header".into(),
            })
        }
    };
    if header.iter().map(str::trim).ne(HEADER) {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "expected header 't,vx,vy,vz', got '{}'",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut samples: Vec<Sample> = Vec::new();
    for rec in records {
        let rec = rec.map_err(|e| csv_parse_error(&e))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 4 {
            return Err(Error::Parse {
                line,
                msg: format!("expected 4 fields, found {}", rec.len()),
            });
        }
        let mut vals = [0.0; 4];
        for (v, (field, name)) in vals.iter_mut().zip(rec.iter().zip(HEADER)) {
            *v = field
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("invalid {name} value '{field}'"),
                })?;
        }
        let [t, vx, vy, vz] = vals;
        if let Some(prev) = samples.last() {
            if t.partial_cmp(&prev.t) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::Parse {
                    line,
                    msg: format!("timestamp {t} does not increase past {}", prev.t),
                });
            }
        }
        samples.push(Sample { t, vx, vy, vz });
    }
    if samples.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "trace has a header but no samples".into(),
        });
    }
    NavTrace::new(samples, label)
}

fn csv_parse_error(e: &csv::Error) -> Error {
    Error::Parse {
        line: e.position().map_or(0, |p| p.line()),
        msg: e.to_string(),
    }
}

pub fn save_trace(trace: &NavTrace, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_trace(trace, file)
}

/// Loads a trace file; the label comes from the file-name convention and
/// defaults to genuine.
pub fn load_trace(path: impl AsRef<Path>) -> Result<NavTrace> {
    let path = path.as_ref();
    let label = path
        .file_name()
        .and_then(|n| n.to_str())
        .and_then(TraceLabel::from_file_name)
        .unwrap_or(TraceLabel::Genuine);
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_trace(file, label)
}
