//! Normalization and probability-amplitude encoding of real data.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevec::StateVector;

/// Real data together with its Euclidean norm and unit-norm form.
#[derive(Debug, Clone, PartialEq)]
pub struct DataVector {
    values: Vec<f64>,
    normalized: Vec<f64>,
    mu: f64,
}

impl DataVector {
    /// Raw values as supplied.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `values / mu`
    pub fn normalized(&self) -> &[f64] {
        &self.normalized
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Divides every entry by `sqrt(Σ x_i²)`.
pub fn normalize(values: &[f64]) -> Result<DataVector> {
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite data value {bad}")));
    }
    let mu = values.iter().map(|x| x * x).sum::<f64>().sqrt();
    if mu == 0.0 {
        return Err(Error::Degenerate(format!(
            "cannot normalize a zero vector of length {}",
            values.len()
        )));
    }
    Ok(DataVector {
        values: values.to_vec(),
        normalized: values.iter().map(|x| x / mu).collect(),
        mu,
    })
}

/// Places the normalized values directly into the first amplitudes of an
/// `n`-qubit register, padding with zeros.
pub fn amplitude_encode(data: &DataVector, n: usize) -> Result<StateVector> {
    let capacity = 1usize
        .checked_shl(n as u32)
        .filter(|_| n > 0 && n <= crate::statevec::MAX_QUBITS)
        .ok_or_else(|| Error::Domain(format!("unsupported qubit count {n}")))?;
    if data.len() > capacity {
        return Err(Error::Capacity {
            len: data.len(),
            qubits: n,
            capacity,
        });
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); capacity];
    for (a, v) in amps.iter_mut().zip(data.normalized()) {
        a.re = *v;
    }
    StateVector::from_amplitudes(n, amps)
}

/// `normalize` followed by `amplitude_encode`.
pub fn encode_values(values: &[f64], n: usize) -> Result<StateVector> {
    amplitude_encode(&normalize(values)?, n)
}
