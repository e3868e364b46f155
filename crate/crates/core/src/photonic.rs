//! Single-qumode Gaussian circuit: vacuum → D(α) → R(φ) → readout.
//!
//! A displaced and rotated vacuum is a coherent state, so the whole mode is
//! carried by its complex displacement.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coherent state of one qumode.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QumodeState {
    disp: Complex64,
}

/// Classical readout applied at the end of a qumode line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureMode {
    /// ⟨n⟩ = |α|²
    #[default]
    MeanPhoton,
    /// ⟨x⟩ = 2·Re(α), with ħ = 2.
    XQuadrature,
}

impl QumodeState {
    pub fn vacuum() -> Self {
        Self::default()
    }

    pub fn coherent(disp: Complex64) -> Result<Self> {
        if !disp.re.is_finite() || !disp.im.is_finite() {
            return Err(Error::Domain(format!("non-finite displacement {disp}")));
        }
        Ok(Self { disp })
    }

    pub fn displacement(&self) -> Complex64 {
        self.disp
    }

    pub fn is_vacuum(&self) -> bool {
        self.disp == Complex64::new(0.0, 0.0)
    }

    /// D(α) with real α: shifts the displacement by α.
    pub fn displace(self, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("non-finite displacement {alpha}")));
        }
        Ok(Self {
            disp: self.disp + alpha,
        })
    }

    /// R(φ): multiplies the displacement by e^{iφ}.
    pub fn rotate(self, phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::Domain(format!("non-finite rotation angle {phi}")));
        }
        Ok(Self {
            disp: self.disp * Complex64::from_polar(1.0, phi),
        })
    }

    pub fn measure(&self, mode: MeasureMode) -> f64 {
        match mode {
            MeasureMode::MeanPhoton => self.disp.norm_sqr(),
            MeasureMode::XQuadrature => 2.0 * self.disp.re,
        }
    }
}

impl fmt::Display for MeasureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            MeasureMode::MeanPhoton => "mean-photon",
            MeasureMode::XQuadrature => "x-quadrature",
        })
    }
}

impl FromStr for MeasureMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean-photon" => Ok(MeasureMode::MeanPhoton),
            "x-quadrature" => Ok(MeasureMode::XQuadrature),
            other => Err(Error::Config(format!("unknown measure mode '{other}'"))),
        }
    }
}
