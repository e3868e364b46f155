//! Trains a two-layer, two-qubit discriminator on the six genuine traces
//! against an untrained photonic generator.

use qgan_mav::bench::{prepare, run_disc_phase, ExperimentConfig};
use qgan_mav::photonic::MeasureMode;
use qgan_mav::qgan::mean_prob_real_true;

fn main() -> qgan_mav::Result<()> {
    let config = ExperimentConfig {
        measure_mode: MeasureMode::XQuadrature,
        ..ExperimentConfig::default()
    };
    let prep = prepare(&config)?;
    println!("{} genuine windows", prep.real_states.len());

    let phase = run_disc_phase(&config, &prep.real_states, &prep.disc, &prep.gen)?;
    for (i, cost) in phase.history.iter().enumerate().step_by(10) {
        println!("iter {i:>3}  sampled p_F − p_R = {cost:+.4}");
    }
    println!(
        "mean cost {:+.4} → {:+.4} in {:.2} ms",
        phase.initial_cost, phase.final_cost, phase.elapsed_ms
    );
    println!(
        "p_R = {:.4}",
        mean_prob_real_true(&phase.params, &prep.real_states)?
    );
    Ok(())
}
