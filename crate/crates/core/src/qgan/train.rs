use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::encoding::{amplitude_encode, encode_values, DataVector};
use crate::error::{Error, Result};
use crate::photonic::MeasureMode;
use crate::statevec::StateVector;

use super::circuit::{discriminator_forward, generator_forward};
use super::cost::gen_cost;
use super::gradient::{gradient, GradMethod, ParamFamily};
use super::params::{DiscriminatorParams, GeneratorParams};

/// Generator outputs with a Euclidean norm below this are re-seeded.
pub const DEGENERATE_OUTPUT_NORM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub iterations: usize,
    pub seed: u64,
    pub measure_mode: MeasureMode,
    pub grad_method: GradMethod,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            learning_rate: 0.1,
            iterations: 100,
            seed: 42,
            measure_mode: MeasureMode::MeanPhoton,
            grad_method: GradMethod::ParameterShift,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate.is_finite() && self.learning_rate > 0.0) {
            return Err(Error::Config(format!(
                "learning rate must be positive, got {}",
                self.learning_rate
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscTraining {
    pub params: DiscriminatorParams,
    /// p_F − p_R on the sampled genuine set, before each step.
    pub history: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenTraining {
    pub params: GeneratorParams,
    /// −p_F before each step.
    pub history: Vec<f64>,
    /// Number of times α was re-seeded out of a degenerate point.
    pub reseeds: usize,
}

/// Amplitude encodes every genuine set into `n` qubits.
pub fn encode_real_sets(real_sets: &[DataVector], n: usize) -> Result<Vec<StateVector>> {
    real_sets.iter().map(|d| amplitude_encode(d, n)).collect()
}

/// Gradient descent on ω minimizing p_F − p_R. The fake state is the
/// encoded output of `fake_source`; one genuine set is drawn per iteration.
pub fn train_discriminator(
    disc: &DiscriminatorParams,
    real_sets: &[DataVector],
    fake_source: &GeneratorParams,
    cfg: &TrainConfig,
) -> Result<DiscTraining> {
    if real_sets.is_empty() {
        return Err(Error::Domain("no genuine data sets to train on".into()));
    }
    let real_states = encode_real_sets(real_sets, disc.qubits())?;
    let fake = generator_forward(fake_source, cfg.measure_mode)?;
    let fake_state = encode_values(&fake, disc.qubits())?;
    train_discriminator_states(disc, &real_states, &fake_state, cfg)
}

/// [`train_discriminator`] on already-encoded states.
pub fn train_discriminator_states(
    disc: &DiscriminatorParams,
    real_states: &[StateVector],
    fake_state: &StateVector,
    cfg: &TrainConfig,
) -> Result<DiscTraining> {
    cfg.validate()?;
    if real_states.is_empty() {
        return Err(Error::Domain("no genuine data sets to train on".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut omega = disc.as_slice().to_vec();
    let mut history = Vec::with_capacity(cfg.iterations);

    for _ in 0..cfg.iterations {
        let real = &real_states[rng.gen_range(0..real_states.len())];
        let cost = |angles: &[f64]| {
            let d = disc.with_angles(angles)?;
            let p_fake = discriminator_forward(fake_state, &d)?.p();
            let p_real = discriminator_forward(real, &d)?.p();
            Ok(p_fake - p_real)
        };
        history.push(cost(&omega)?);
        let grad = gradient(cost, &omega, cfg.grad_method, ParamFamily::QubitRotation)?;
        for (w, g) in omega.iter_mut().zip(&grad) {
            *w -= cfg.learning_rate * g;
        }
    }

    Ok(DiscTraining {
        params: disc.with_angles(&omega)?,
        history,
    })
}

/// Gradient descent on (α, φ) minimizing −p_F against a fixed
/// discriminator, using central finite differences.
pub fn train_generator(
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
    cfg: &TrainConfig,
) -> Result<GenTraining> {
    cfg.validate()?;
    if gen.qubits() != disc.qubits() {
        return Err(Error::Domain(format!(
            "{}-qubit generator for a {}-qubit discriminator",
            gen.qubits(),
            disc.qubits()
        )));
    }
    let n = gen.qubits();
    let mode = cfg.measure_mode;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut current = gen.clone();
    let mut history = Vec::with_capacity(cfg.iterations);
    let mut reseeds = 0;

    // Degenerate points evaluate to the worst cost (p_F = 0) so the
    // finite-difference stencil never aborts the run.
    let cost = |flat: &[f64]| -> Result<f64> {
        let g = GeneratorParams::from_flat(n, flat)?;
        match gen_cost(&g, disc, mode) {
            Err(Error::Degenerate(_)) => Ok(0.0),
            other => other,
        }
    };

    for _ in 0..cfg.iterations {
        if output_norm(&current, mode)? < DEGENERATE_OUTPUT_NORM {
            let alpha = (0..current.modes())
                .map(|_| rng.gen_range(0.1..1.0))
                .collect();
            current.set_alpha(alpha);
            reseeds += 1;
        }
        let flat = current.to_flat();
        history.push(cost(&flat)?);
        let grad = gradient(
            cost,
            &flat,
            GradMethod::FiniteDifference,
            ParamFamily::Photonic,
        )?;
        let next: Vec<f64> = flat
            .iter()
            .zip(&grad)
            .map(|(x, g)| x - cfg.learning_rate * g)
            .collect();
        current = GeneratorParams::from_flat(n, &next)?;
    }

    Ok(GenTraining {
        params: current,
        history,
        reseeds,
    })
}

fn output_norm(gen: &GeneratorParams, mode: MeasureMode) -> Result<f64> {
    Ok(generator_forward(gen, mode)?
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt())
}
