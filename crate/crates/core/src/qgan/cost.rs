use crate::encoding::encode_values;
use crate::error::{Error, Result};
use crate::photonic::MeasureMode;
use crate::statevec::StateVector;

use super::circuit::{discriminator_forward, generator_forward, qubit_generator_forward};
use super::params::{DiscriminatorParams, GeneratorParams};

/// p_F: probability the discriminator accepts the photonic generator's
/// output after normalization and amplitude encoding.
pub fn prob_fake_true(
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
    mode: MeasureMode,
) -> Result<f64> {
    let fake = generator_forward(gen, mode)?;
    let state = encode_values(&fake, disc.qubits())?;
    Ok(discriminator_forward(&state, disc)?.p())
}

/// p_F − p_R for one genuine and one fake state.
pub fn disc_cost(
    disc: &DiscriminatorParams,
    real_state: &StateVector,
    fake_state: &StateVector,
) -> Result<f64> {
    let p_fake = discriminator_forward(fake_state, disc)?.p();
    let p_real = discriminator_forward(real_state, disc)?.p();
    Ok(p_fake - p_real)
}

/// −p_F
pub fn gen_cost(
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
    mode: MeasureMode,
) -> Result<f64> {
    Ok(-prob_fake_true(gen, disc, mode)?)
}

/// −p_F for the qubit-circuit generator, whose state feeds the
/// discriminator without encoding.
pub fn qubit_gen_cost(gen: &DiscriminatorParams, disc: &DiscriminatorParams) -> Result<f64> {
    let state = qubit_generator_forward(gen)?;
    Ok(-discriminator_forward(&state, disc)?.p())
}

/// Mean p_R over a set of genuine states.
pub fn mean_prob_real_true(disc: &DiscriminatorParams, real_states: &[StateVector]) -> Result<f64> {
    if real_states.is_empty() {
        return Err(Error::Domain("no genuine states".into()));
    }
    let mut total = 0.0;
    for s in real_states {
        total += discriminator_forward(s, disc)?.p();
    }
    Ok(total / real_states.len() as f64)
}

/// p_F − mean p_R, averaged over every genuine state.
pub fn mean_disc_cost(
    disc: &DiscriminatorParams,
    real_states: &[StateVector],
    fake_state: &StateVector,
) -> Result<f64> {
    let p_fake = discriminator_forward(fake_state, disc)?.p();
    Ok(p_fake - mean_prob_real_true(disc, real_states)?)
}
