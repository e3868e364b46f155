//! Builds a Bell pair and runs one elementary layer on three qubits.
//!
//! ```bash
//! cargo run --example statevector
//! ```

use std::f64::consts::FRAC_PI_2;

use qgan_mav::qgan::elementary_layer;
use qgan_mav::statevec::{RotTriple, StateVector};

fn main() -> qgan_mav::Result<()> {
    let mut bell = StateVector::zero(2)?;
    bell.apply_rot(0, RotTriple::new(0.0, FRAC_PI_2, 0.0)?)?;
    bell.apply_cnot(0, 1)?;
    println!("Bell pair amplitudes:");
    for (i, a) in bell.amplitudes().iter().enumerate() {
        println!("  |{i:02b}⟩  {a:.6}");
    }
    println!("⟨Z₀⟩ = {:.6}", bell.expect_z(0)?);

    let mut state = StateVector::zero(3)?;
    let angles = [0.3, 0.2, 0.1, 1.2, -0.4, 0.0, 0.0, 2.0, 0.5];
    elementary_layer(&mut state, &angles)?;
    println!("\nthree-qubit elementary layer:");
    for (i, a) in state.amplitudes().iter().enumerate() {
        println!("  |{i:03b}⟩  {a:.6}");
    }
    println!("norm = {:.12}", state.norm_sqr());
    Ok(())
}
