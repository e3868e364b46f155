use crate::error::{Error, Result};
use crate::photonic::{MeasureMode, QumodeState};
use crate::statevec::{RotTriple, StateVector};

use super::params::{DiscriminatorParams, GeneratorParams, Verdict};

/// One elementary layer: a `Rot` on every qubit, then a ring of CNOTs
/// `i → (i+1) mod n` in ascending `i`. A single qubit has no ring.
pub fn elementary_layer(state: &mut StateVector, layer_angles: &[f64]) -> Result<()> {
    let n = state.num_qubits();
    if layer_angles.len() != n * 3 {
        return Err(Error::Domain(format!(
            "layer has {} angles, expected {n}×3",
            layer_angles.len()
        )));
    }
    for (wire, angles) in layer_angles.chunks_exact(3).enumerate() {
        state.apply_rot(wire, RotTriple::from_slice(angles)?)?;
    }
    if n > 1 {
        for i in 0..n {
            state.apply_cnot(i, (i + 1) % n)?;
        }
    }
    Ok(())
}

fn apply_layers(state: &mut StateVector, params: &DiscriminatorParams) -> Result<()> {
    if state.num_qubits() != params.qubits() {
        return Err(Error::Domain(format!(
            "{}-qubit input for a {}-qubit circuit",
            state.num_qubits(),
            params.qubits()
        )));
    }
    for l in 0..params.layers() {
        elementary_layer(state, params.layer(l))?;
    }
    Ok(())
}

/// Runs the layered circuit on `input` and reads ⟨Z⟩ on wire 0.
pub fn discriminator_forward(input: &StateVector, params: &DiscriminatorParams) -> Result<Verdict> {
    let mut state = input.clone();
    apply_layers(&mut state, params)?;
    Verdict::from_expectation(state.expect_z(0)?)
}

/// Classical outputs of the `2^n` qumode lines `|0⟩ → D(α_k) → R(φ_k) → readout`.
pub fn generator_forward(params: &GeneratorParams, mode: MeasureMode) -> Result<Vec<f64>> {
    params
        .alpha()
        .iter()
        .zip(params.phi())
        .map(|(&alpha, &phi)| {
            Ok(QumodeState::vacuum()
                .displace(alpha)?
                .rotate(phi)?
                .measure(mode))
        })
        .collect()
}

/// Qubit-circuit generator: the layered circuit applied to `|0…0⟩`.
pub fn qubit_generator_forward(params: &DiscriminatorParams) -> Result<StateVector> {
    let mut state = StateVector::zero(params.qubits())?;
    apply_layers(&mut state, params)?;
    Ok(state)
}
