//! Quantum GAN over navigation data.
//!
//! The discriminator is an `m`-layer qubit circuit whose wire-0 Z
//! expectation `r` is read as a probability `p = (r + 1) / 2` that its input
//! is genuine. The generator is a bank of `2^n` single-qumode photonic
//! circuits whose classical outputs are normalized, amplitude encoded and
//! handed to the discriminator.

mod circuit;
mod cost;
mod gradient;
mod params;
mod train;

pub use circuit::{
    discriminator_forward, elementary_layer, generator_forward, qubit_generator_forward,
};
pub use cost::{
    disc_cost, gen_cost, mean_disc_cost, mean_prob_real_true, prob_fake_true, qubit_gen_cost,
};
pub use gradient::{gradient, GradMethod, ParamFamily, FD_STEP};
pub use params::{DiscriminatorParams, GeneratorParams, Verdict};
pub use train::{
    encode_real_sets, train_discriminator, train_discriminator_states, train_generator,
    DiscTraining, GenTraining, TrainConfig, DEGENERATE_OUTPUT_NORM,
};
