//! The qubit-circuit generator variant: a layered circuit on |0…0⟩ whose
//! output state feeds the discriminator directly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgan_mav::qgan::{
    gradient, qubit_gen_cost, qubit_generator_forward, DiscriminatorParams, GradMethod, ParamFamily,
};

fn main() -> qgan_mav::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let disc = DiscriminatorParams::random(2, 2, &mut rng)?;
    let omega: Vec<f64> = (0..12).map(|k| 0.7 * (k as f64).sin() + 1.5).collect();
    let mut gen = DiscriminatorParams::from_flat(2, 2, omega)?;

    for step in 0..=60 {
        let cost = qubit_gen_cost(&gen, &disc)?;
        if step % 10 == 0 {
            println!("step {step:>2}  p_F = {:.4}", -cost);
        }
        let grad = gradient(
            |w| qubit_gen_cost(&gen.with_angles(w)?, &disc),
            gen.as_slice(),
            GradMethod::ParameterShift,
            ParamFamily::QubitRotation,
        )?;
        let next: Vec<f64> = gen
            .as_slice()
            .iter()
            .zip(&grad)
            .map(|(w, g)| w - 0.2 * g)
            .collect();
        gen = gen.with_angles(&next)?;
    }
    let state = qubit_generator_forward(&gen)?;
    println!("generated state: {:.4?}", state.amplitudes());
    Ok(())
}
