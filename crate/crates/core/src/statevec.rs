//! Dense state-vector simulator for small qubit registers.
//!
//! Qubit 0 is the most significant bit of the basis index, so the basis
//! state `|b_0 b_1 … b_{n-1}⟩` lives at index `Σ b_k · 2^{n-1-k}`.
//!
//! Only the gates needed by the discriminator and generator circuits are
//! provided: `Rx`, `Ry`, `Rz`, their composition `Rot`, and `CNOT`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest register the simulator will allocate.
pub const MAX_QUBITS: usize = 20;

/// 2×2 complex matrix, row-major.
pub type Gate2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tolerance used when accepting caller-supplied amplitudes as a pure state.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Three rotation angles applied as `Rz(az) · Ry(ay) · Rx(ax)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RotTriple {
    pub ax: f64,
    pub ay: f64,
    pub az: f64,
}

impl RotTriple {
    pub fn new(ax: f64, ay: f64, az: f64) -> Result<Self> {
        let rot = Self { ax, ay, az };
        rot.validate()?;
        Ok(rot)
    }

    pub fn from_slice(angles: &[f64]) -> Result<Self> {
        match angles {
            [ax, ay, az] => Self::new(*ax, *ay, *az),
            _ => Err(Error::Domain(format!(
                "rotation needs 3 angles, got {}",
                angles.len()
            ))),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.ax.is_finite() && self.ay.is_finite() && self.az.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!("non-finite rotation angle {self:?}")))
        }
    }

    /// The combined single-qubit unitary `Rz · Ry · Rx`.
    pub fn matrix(&self) -> Gate2 {
        matmul(
            &rz_matrix(self.az),
            &matmul(&ry_matrix(self.ay), &rx_matrix(self.ax)),
        )
    }
}

pub fn rx_matrix(theta: f64) -> Gate2 {
    let (s, c) = (theta / 2.0).sin_cos();
    let m = Complex64::new(0.0, -s);
    [[Complex64::new(c, 0.0), m], [m, Complex64::new(c, 0.0)]]
}

pub fn ry_matrix(theta: f64) -> Gate2 {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ]
}

pub fn rz_matrix(theta: f64) -> Gate2 {
    [
        [Complex64::from_polar(1.0, -theta / 2.0), ZERO],
        [ZERO, Complex64::from_polar(1.0, theta / 2.0)],
    ]
}

pub fn matmul(a: &Gate2, b: &Gate2) -> Gate2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Pure state of `n` qubits as `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|index⟩`.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        check_qubits(n)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::Domain(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Ok(Self { n, amps })
    }

    /// `|0…0⟩`
    pub fn zero(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// Wraps caller-supplied amplitudes; they must already have unit norm.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_qubits(n)?;
        if amps.len() != 1usize << n {
            return Err(Error::Domain(format!(
                "{} amplitudes given for {n} qubits (need {})",
                amps.len(),
                1usize << n
            )));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Domain("non-finite amplitude".into()));
        }
        let state = Self { n, amps };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Domain(format!(
                "amplitudes are not normalized (Σ|a|² = {norm})"
            )));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    /// Σ |a_i|²
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn mask(&self, wire: usize) -> Result<usize> {
        if wire >= self.n {
            return Err(Error::Domain(format!(
                "wire {wire} out of range for {} qubits",
                self.n
            )));
        }
        Ok(1usize << (self.n - 1 - wire))
    }

    /// Applies an arbitrary 2×2 matrix to one wire.
    pub fn apply_gate(&mut self, wire: usize, gate: &Gate2) -> Result<()> {
        let mask = self.mask(wire)?;
        for i in 0..self.amps.len() {
            if i & mask != 0 {
                continue;
            }
            let j = i | mask;
            let a0 = self.amps[i];
            let a1 = self.amps[j];
            self.amps[i] = gate[0][0] * a0 + gate[0][1] * a1;
            self.amps[j] = gate[1][0] * a0 + gate[1][1] * a1;
        }
        Ok(())
    }

    pub fn apply_rx(&mut self, wire: usize, theta: f64) -> Result<()> {
        check_angle(theta)?;
        self.apply_gate(wire, &rx_matrix(theta))
    }

    pub fn apply_ry(&mut self, wire: usize, theta: f64) -> Result<()> {
        check_angle(theta)?;
        self.apply_gate(wire, &ry_matrix(theta))
    }

    pub fn apply_rz(&mut self, wire: usize, theta: f64) -> Result<()> {
        check_angle(theta)?;
        self.apply_gate(wire, &rz_matrix(theta))
    }

    /// `Rz(az) · Ry(ay) · Rx(ax)` on `wire`, i.e. the x rotation acts first.
    pub fn apply_rot(&mut self, wire: usize, angles: RotTriple) -> Result<()> {
        angles.validate()?;
        self.apply_gate(wire, &angles.matrix())
    }

    /// Flips `target` on every basis state whose `control` bit is 1.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        if control == target {
            return Err(Error::Domain(format!(
                "CNOT control and target are both wire {control}"
            )));
        }
        let cmask = self.mask(control)?;
        let tmask = self.mask(target)?;
        for i in 0..self.amps.len() {
            if i & cmask != 0 && i & tmask == 0 {
                self.amps.swap(i, i | tmask);
            }
        }
        Ok(())
    }

    /// ⟨Z⟩ on `wire`: +|a|² where the wire's bit is 0, −|a|² where it is 1.
    pub fn expect_z(&self, wire: usize) -> Result<f64> {
        let mask = self.mask(wire)?;
        let value: f64 = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i & mask == 0 {
                    a.norm_sqr()
                } else {
                    -a.norm_sqr()
                }
            })
            .sum();
        Ok(value.clamp(-1.0, 1.0))
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Domain(format!(
            "qubit count must be in 1..={MAX_QUBITS}, got {n}"
        )));
    }
    Ok(())
}

fn check_angle(theta: f64) -> Result<()> {
    if theta.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("non-finite angle {theta}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, PI};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn basis_states() {
        let s = StateVector::basis_state(1, 0).unwrap();
        assert_eq!(s.amplitudes(), &[ONE, ZERO]);
        let s = StateVector::basis_state(2, 3).unwrap();
        assert_eq!(s.amplitudes(), &[ZERO, ZERO, ZERO, ONE]);
        assert!(matches!(
            StateVector::basis_state(3, 8),
            Err(Error::Domain(_))
        ));
        assert!(StateVector::basis_state(0, 0).is_err());
    }

    #[test]
    fn zero_rotation_is_exact_identity() {
        let mut s = StateVector::from_amplitudes(
            2,
            vec![
                Complex64::new(0.5, 0.1),
                Complex64::new(-0.3, 0.4),
                Complex64::new(0.2, -0.5),
                Complex64::new(0.0, 0.0),
            ]
            .into_iter()
            .map(|a| a / (0.26f64 + 0.25 + 0.29).sqrt())
            .collect(),
        )
        .unwrap();
        let before = s.clone();
        s.apply_rot(1, RotTriple::default()).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn rx_pi_on_zero() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply_rot(0, RotTriple::new(PI, 0.0, 0.0).unwrap())
            .unwrap();
        assert!(close(s.amplitudes()[0], ZERO));
        assert!(close(s.amplitudes()[1], Complex64::new(0.0, -1.0)));
    }

    #[test]
    fn ry_half_pi_on_zero() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply_rot(0, RotTriple::new(0.0, FRAC_PI_2, 0.0).unwrap())
            .unwrap();
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        assert!(close(s.amplitudes()[0], h));
        assert!(close(s.amplitudes()[1], h));
    }

    #[test]
    fn rot_rejects_bad_wire_and_nan() {
        let mut s = StateVector::zero(2).unwrap();
        assert!(s.apply_rot(2, RotTriple::default()).is_err());
        assert!(RotTriple::new(f64::NAN, 0.0, 0.0).is_err());
        let bad = RotTriple {
            ax: 0.0,
            ay: f64::INFINITY,
            az: 0.0,
        };
        assert!(s.apply_rot(0, bad).is_err());
    }

    #[test]
    fn cnot_truth_table() {
        let mut s = StateVector::basis_state(2, 0b10).unwrap();
        s.apply_cnot(0, 1).unwrap();
        assert_eq!(s, StateVector::basis_state(2, 0b11).unwrap());

        let mut s = StateVector::basis_state(2, 0b01).unwrap();
        s.apply_cnot(0, 1).unwrap();
        assert_eq!(s, StateVector::basis_state(2, 0b01).unwrap());

        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let mut s = StateVector::from_amplitudes(2, vec![h, ZERO, h, ZERO]).unwrap();
        s.apply_cnot(0, 1).unwrap();
        assert_eq!(s.amplitudes(), &[h, ZERO, ZERO, h]);

        assert!(matches!(s.apply_cnot(1, 1), Err(Error::Domain(_))));
        assert!(s.apply_cnot(0, 2).is_err());
    }

    #[test]
    fn z_expectations() {
        let s = StateVector::zero(1).unwrap();
        assert_eq!(s.expect_z(0).unwrap(), 1.0);
        let s = StateVector::basis_state(1, 1).unwrap();
        assert_eq!(s.expect_z(0).unwrap(), -1.0);
        let mut s = StateVector::zero(1).unwrap();
        s.apply_ry(0, FRAC_PI_3).unwrap();
        assert!((s.expect_z(0).unwrap() - 0.5).abs() < 1e-12);
        assert!(s.expect_z(1).is_err());
    }

    #[test]
    fn from_amplitudes_checks_shape_and_norm() {
        assert!(StateVector::from_amplitudes(1, vec![ONE]).is_err());
        assert!(StateVector::from_amplitudes(1, vec![ONE, ONE]).is_err());
    }
}
