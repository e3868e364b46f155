use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevec::{RotTriple, MAX_QUBITS};

/// Rotation angles ω of an `m × n × 3` layered circuit, stored flat in
/// layer-major, then qubit, then axis order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NestedOmega", into = "NestedOmega")]
pub struct DiscriminatorParams {
    layers: usize,
    qubits: usize,
    omega: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct NestedOmega {
    layers: usize,
    qubits: usize,
    omega: Vec<Vec<[f64; 3]>>,
}

impl From<DiscriminatorParams> for NestedOmega {
    fn from(p: DiscriminatorParams) -> Self {
        let omega = p
            .omega
            .chunks(p.qubits * 3)
            .map(|layer| {
                layer
                    .chunks(3)
                    .map(|r| [r[0], r[1], r[2]])
                    .collect::<Vec<_>>()
            })
            .collect();
        NestedOmega {
            layers: p.layers,
            qubits: p.qubits,
            omega,
        }
    }
}

impl TryFrom<NestedOmega> for DiscriminatorParams {
    type Error = Error;

    fn try_from(n: NestedOmega) -> Result<Self> {
        if n.omega.len() != n.layers || n.omega.iter().any(|l| l.len() != n.qubits) {
            return Err(Error::Domain(format!(
                "omega shape does not match {} layers × {} qubits",
                n.layers, n.qubits
            )));
        }
        let flat = n.omega.into_iter().flatten().flatten().collect();
        DiscriminatorParams::from_flat(n.layers, n.qubits, flat)
    }
}

impl DiscriminatorParams {
    pub fn zeros(layers: usize, qubits: usize) -> Result<Self> {
        Self::from_flat(layers, qubits, vec![0.0; layers * qubits * 3])
    }

    pub fn from_flat(layers: usize, qubits: usize, omega: Vec<f64>) -> Result<Self> {
        if layers == 0 || qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::Domain(format!(
                "invalid circuit shape {layers} layers × {qubits} qubits"
            )));
        }
        if omega.len() != layers * qubits * 3 {
            return Err(Error::Domain(format!(
                "omega has {} entries, expected {layers}×{qubits}×3",
                omega.len()
            )));
        }
        if omega.iter().any(|w| !w.is_finite()) {
            return Err(Error::Domain("non-finite rotation angle in omega".into()));
        }
        Ok(Self {
            layers,
            qubits,
            omega,
        })
    }

    /// Angles drawn uniformly from (−0.1, 0.1).
    pub fn random<R: Rng + ?Sized>(layers: usize, qubits: usize, rng: &mut R) -> Result<Self> {
        let omega = (0..layers * qubits * 3)
            .map(|_| rng.gen_range(-0.1..0.1))
            .collect();
        Self::from_flat(layers, qubits, omega)
    }

    pub fn layers(&self) -> usize {
        self.layers
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.omega
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.omega
    }

    /// Sub-matrix ω_l, `n × 3` angles laid out flat.
    pub fn layer(&self, l: usize) -> &[f64] {
        let width = self.qubits * 3;
        &self.omega[l * width..(l + 1) * width]
    }

    pub fn rot(&self, layer: usize, qubit: usize) -> RotTriple {
        let base = (layer * self.qubits + qubit) * 3;
        RotTriple {
            ax: self.omega[base],
            ay: self.omega[base + 1],
            az: self.omega[base + 2],
        }
    }

    /// Same shape, new angles.
    pub fn with_angles(&self, omega: &[f64]) -> Result<Self> {
        Self::from_flat(self.layers, self.qubits, omega.to_vec())
    }
}

/// Displacements α and phases φ for `2^n` qumodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorParams {
    qubits: usize,
    alpha: Vec<f64>,
    phi: Vec<f64>,
}

impl GeneratorParams {
    pub fn new(qubits: usize, alpha: Vec<f64>, phi: Vec<f64>) -> Result<Self> {
        if qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::Domain(format!("invalid qubit count {qubits}")));
        }
        let modes = 1usize << qubits;
        if alpha.len() != modes || phi.len() != modes {
            return Err(Error::Domain(format!(
                "generator for {qubits} qubits needs {modes} displacements and phases, got {} and {}",
                alpha.len(),
                phi.len()
            )));
        }
        if alpha.iter().chain(&phi).any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite generator parameter".into()));
        }
        Ok(Self { qubits, alpha, phi })
    }

    /// α ~ U(0.1, 1.0), φ ~ U(0, 2π).
    pub fn random<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<Self> {
        let modes = 1usize
            .checked_shl(qubits as u32)
            .ok_or_else(|| Error::Domain(format!("invalid qubit count {qubits}")))?;
        let alpha = (0..modes).map(|_| rng.gen_range(0.1..1.0)).collect();
        let phi = (0..modes).map(|_| rng.gen_range(0.0..TAU)).collect();
        Self::new(qubits, alpha, phi)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn modes(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    /// α followed by φ.
    pub fn to_flat(&self) -> Vec<f64> {
        self.alpha.iter().chain(&self.phi).copied().collect()
    }

    pub fn from_flat(qubits: usize, flat: &[f64]) -> Result<Self> {
        let modes = flat.len() / 2;
        Self::new(qubits, flat[..modes].to_vec(), flat[modes..].to_vec())
    }

    pub(crate) fn set_alpha(&mut self, alpha: Vec<f64>) {
        debug_assert_eq!(alpha.len(), self.alpha.len());
        self.alpha = alpha;
    }
}

/// Discriminator output: raw expectation `r` and probability `p = (r+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Verdict {
    r: f64,
    p: f64,
}

impl Verdict {
    pub fn from_expectation(r: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("expectation {r} outside [-1, 1]")));
        }
        Ok(Self {
            r,
            p: (r + 1.0) / 2.0,
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}
