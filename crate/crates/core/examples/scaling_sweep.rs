//! Learning time versus qubit count, as CSV on stdout.
//!
//! ```bash
//! cargo run --release --example scaling_sweep -- 5 10
//! ```

use qgan_mav::bench::{run_sweep, write_report, ExperimentConfig, ReportFormat};

fn main() -> qgan_mav::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let n_max = args.next().flatten().unwrap_or(5);
    let iterations = args.next().flatten().unwrap_or(10);
    let base = ExperimentConfig {
        iterations,
        ..ExperimentConfig::default()
    };
    let sweep = run_sweep(&base, n_max, 3)?;
    for row in &sweep.rows {
        match (row.gen_ms_per_iter(), &row.error) {
            (Some(t), _) => eprintln!("n = {}: generator {:.4} ms/iter", row.n, t),
            (None, Some(e)) => eprintln!("n = {}: {e}", row.n),
            _ => {}
        }
    }
    write_report(&sweep, ReportFormat::Csv, std::io::stdout().lock())
}
