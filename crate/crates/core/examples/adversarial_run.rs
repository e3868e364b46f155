//! Full pipeline: discriminator, then generator, then a JSON report.
//!
//! ```bash
//! cargo run --example adversarial_run -- 7
//! ```

use qgan_mav::bench::{run_single, write_report, ExperimentConfig, ReportFormat};
use qgan_mav::photonic::MeasureMode;

fn main() -> qgan_mav::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    let config = ExperimentConfig {
        seed,
        measure_mode: MeasureMode::XQuadrature,
        ..ExperimentConfig::default()
    };
    let report = run_single(&config)?;
    println!(
        "disc cost {:+.4} → {:+.4}   p_F {:.4} → {:.4}   ({})",
        report.initial_disc_cost,
        report.final_disc_cost,
        report.initial_p_fake_true,
        report.p_fake_true,
        if report.p_fake_true >= 0.5 {
            "adversary wins"
        } else {
            "defender wins"
        }
    );
    let fake = qgan_mav::qgan::generator_forward(&report.gen_params, config.measure_mode)?;
    println!("generated velocities: {fake:.4?}");
    write_report(&report, ReportFormat::Csv, std::io::stdout().lock())
}
