//! Windows a synthetic flight into 2^n-scalar chunks and encodes each one.

use qgan_mav::encoding::{amplitude_encode, normalize};
use qgan_mav::navdata::{synth_trace, window};

fn main() -> qgan_mav::Result<()> {
    let trace = synth_trace(1, 0.02)?;
    println!("{} samples, {} scalars", trace.len(), trace.scalar_count());
    for n in 1..=6 {
        println!("n = {n}: {} windows of {}", window(&trace, n).len(), 1 << n);
    }

    let chunks = window(&trace, 3);
    let data = normalize(&chunks[2])?;
    let state = amplitude_encode(&data, 3)?;
    println!("\nwindow 2 at n = 3, μ = {:.6}", data.mu());
    for (x, a) in data.values().iter().zip(state.amplitudes()) {
        println!("  {x:>10.6}  →  {:>10.6}", a.re);
    }
    println!("Σ|a|² = {:.12}", state.norm_sqr());
    Ok(())
}
