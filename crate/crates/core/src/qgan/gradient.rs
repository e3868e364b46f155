use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Central-difference step.
pub const FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradMethod {
    /// `[f(θ + π/2) − f(θ − π/2)] / 2`, exact for Pauli rotation angles.
    #[default]
    ParameterShift,
    /// `[f(θ + h) − f(θ − h)] / 2h` with `h = FD_STEP`.
    FiniteDifference,
}

/// What kind of parameter vector is being differentiated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamFamily {
    /// Angles of Rx/Ry/Rz gates.
    QubitRotation,
    /// Displacements and phases of qumode gates.
    Photonic,
}

/// Gradient of `cost` at `params`.
///
/// The shift rule only holds for rotation angles, so it is refused for
/// photonic parameters.
pub fn gradient<F>(
    mut cost: F,
    params: &[f64],
    method: GradMethod,
    family: ParamFamily,
) -> Result<Vec<f64>>
where
    F: FnMut(&[f64]) -> Result<f64>,
{
    let (shift, denom) = match (method, family) {
        (GradMethod::ParameterShift, ParamFamily::QubitRotation) => (FRAC_PI_2, 2.0),
        (GradMethod::ParameterShift, ParamFamily::Photonic) => {
            return Err(Error::UnsupportedMethod(
                "parameter shift applies to qubit rotation angles only".into(),
            ))
        }
        (GradMethod::FiniteDifference, _) => (FD_STEP, 2.0 * FD_STEP),
    };
    let mut probe = params.to_vec();
    let mut grad = Vec::with_capacity(params.len());
    for i in 0..params.len() {
        let theta = params[i];
        probe[i] = theta + shift;
        let plus = cost(&probe)?;
        probe[i] = theta - shift;
        let minus = cost(&probe)?;
        probe[i] = theta;
        grad.push((plus - minus) / denom);
    }
    Ok(grad)
}

impl fmt::Display for GradMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            GradMethod::ParameterShift => "shift",
            GradMethod::FiniteDifference => "fd",
        })
    }
}

impl FromStr for GradMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shift" => Ok(GradMethod::ParameterShift),
            "fd" => Ok(GradMethod::FiniteDifference),
            other => Err(Error::Config(format!("unknown gradient method '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::StateVector;

    fn ry_expectation(theta: &[f64]) -> Result<f64> {
        let mut s = StateVector::zero(1)?;
        s.apply_ry(0, theta[0])?;
        s.expect_z(0)
    }

    #[test]
    fn constant_cost_has_zero_gradient() {
        for method in [GradMethod::ParameterShift, GradMethod::FiniteDifference] {
            let g = gradient(
                |_| Ok(3.5),
                &[0.1, 0.2, 0.3],
                method,
                ParamFamily::QubitRotation,
            )
            .unwrap();
            assert_eq!(g, vec![0.0; 3]);
        }
    }

    #[test]
    fn cosine_derivative() {
        let shift = |t: f64| {
            gradient(
                ry_expectation,
                &[t],
                GradMethod::ParameterShift,
                ParamFamily::QubitRotation,
            )
            .unwrap()[0]
        };
        assert!(shift(0.0).abs() < 1e-15);
        assert!((shift(FRAC_PI_2) + 1.0).abs() < 1e-15);
        let fd = gradient(
            ry_expectation,
            &[FRAC_PI_2],
            GradMethod::FiniteDifference,
            ParamFamily::QubitRotation,
        )
        .unwrap()[0];
        assert!((fd + 1.0).abs() < 1e-9);
    }

    #[test]
    fn shift_rule_refused_for_photonic() {
        let err = gradient(
            |_| Ok(0.0),
            &[1.0],
            GradMethod::ParameterShift,
            ParamFamily::Photonic,
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnsupportedMethod(_)));
        assert!(gradient(
            |_| Ok(0.0),
            &[1.0],
            GradMethod::FiniteDifference,
            ParamFamily::Photonic
        )
        .is_ok());
    }

    #[test]
    fn names_parse() {
        assert_eq!(
            "shift".parse::<GradMethod>().unwrap(),
            GradMethod::ParameterShift
        );
        assert_eq!(
            "fd".parse::<GradMethod>().unwrap(),
            GradMethod::FiniteDifference
        );
        assert!("adam".parse::<GradMethod>().is_err());
    }
}
