//! Quantum generative adversarial networks for faking and discriminating
//! micro aerial vehicle navigation data, on a small self-contained
//! simulator.
//!
//! - [`statevec`]: dense qubit state vectors with `Rx`/`Ry`/`Rz`/`Rot`/`CNOT`
//! - [`photonic`]: single-qumode coherent-state circuits `D(α)`, `R(φ)`
//! - [`encoding`]: normalization and probability-amplitude encoding
//! - [`qgan`]: discriminator and generator circuits, costs, gradients and
//!   training loops
//! - [`navdata`]: synthetic flight traces, spoofing transforms, CSV I/O
//! - [`bench`]: experiment driver, qubit sweeps and reports
//!
//! ## Examples
//!
//! Each capability has a runnable example:
//!
//! ```bash
//! cargo run --example statevector
//! cargo run --example photonic_generator
//! cargo run --example amplitude_encoding
//! cargo run --example spoofing_traces
//! cargo run --example train_discriminator
//! cargo run --example adversarial_run
//! cargo run --release --example scaling_sweep
//! ```
//!
//! The `qgan-mav` binary wraps the same pipeline behind subcommands.

pub mod bench;
pub mod encoding;
pub mod error;
pub mod navdata;
pub mod photonic;
pub mod qgan;
pub mod statevec;

pub use error::{Error, Result};
