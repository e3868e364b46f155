//! Runs a four-qumode generator under both readouts.
//!
//! With the mean-photon readout the phases have no effect; the
//! x-quadrature readout makes them matter and allows negative outputs.

use std::f64::consts::PI;

use qgan_mav::photonic::{MeasureMode, QumodeState};
use qgan_mav::qgan::{generator_forward, GeneratorParams};

fn main() -> qgan_mav::Result<()> {
    let mode = QumodeState::vacuum().displace(1.5)?.rotate(PI / 3.0)?;
    println!("D(1.5) R(π/3) |0⟩ → α = {:.4}", mode.displacement());
    println!("  ⟨n⟩ = {:.4}", mode.measure(MeasureMode::MeanPhoton));
    println!("  ⟨x⟩ = {:.4}", mode.measure(MeasureMode::XQuadrature));

    let gen = GeneratorParams::new(2, vec![0.4, 0.8, 1.0, 0.6], vec![0.0, PI / 2.0, PI, 1.0])?;
    for readout in [MeasureMode::MeanPhoton, MeasureMode::XQuadrature] {
        let out = generator_forward(&gen, readout)?;
        println!("{readout:>13}: {out:.4?}");
    }
    Ok(())
}
