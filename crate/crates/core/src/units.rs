//! Energy quantities and exact unit conversions.
//!
//! Annual energies arrive in EJ or PJ and are accumulated internally in kWh;
//! the conversion table is fixed SI (1 kWh = 3.6 MJ exactly).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnergyUnit {
    Ej,
    Pj,
    Gwh,
    Mwh,
    Kwh,
    Mj,
}

impl EnergyUnit {
    /// Exact factor to megajoules.
    fn to_mj(self) -> f64 {
        match self {
            EnergyUnit::Ej => 1e12,
            EnergyUnit::Pj => 1e9,
            EnergyUnit::Gwh => 3.6e6,
            EnergyUnit::Mwh => 3.6e3,
            EnergyUnit::Kwh => 3.6,
            EnergyUnit::Mj => 1.0,
        }
    }

    pub fn all() -> [EnergyUnit; 6] {
        [
            EnergyUnit::Ej,
            EnergyUnit::Pj,
            EnergyUnit::Gwh,
            EnergyUnit::Mwh,
            EnergyUnit::Kwh,
            EnergyUnit::Mj,
        ]
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EnergyUnit::Ej => "EJ",
            EnergyUnit::Pj => "PJ",
            EnergyUnit::Gwh => "GWh",
            EnergyUnit::Mwh => "MWh",
            EnergyUnit::Kwh => "kWh",
            EnergyUnit::Mj => "MJ",
        };
        f.write_str(s)
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ej" => Ok(EnergyUnit::Ej),
            "pj" => Ok(EnergyUnit::Pj),
            "gwh" => Ok(EnergyUnit::Gwh),
            "mwh" => Ok(EnergyUnit::Mwh),
            "kwh" => Ok(EnergyUnit::Kwh),
            "mj" => Ok(EnergyUnit::Mj),
            other => Err(Error::Config(format!(
                "unsupported energy unit {other:?} (expected one of EJ, PJ, GWh, MWh, kWh, MJ)"
            ))),
        }
    }
}

/// A nonnegative amount of energy with an explicit unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyQuantity {
    magnitude: f64,
    unit: EnergyUnit,
}

impl EnergyQuantity {
    pub fn new(magnitude: f64, unit: EnergyUnit) -> Result<Self> {
        if !magnitude.is_finite() || magnitude < 0.0 {
            return Err(Error::Domain(format!(
                "energy magnitude must be finite and nonnegative, got {magnitude}"
            )));
        }
        Ok(EnergyQuantity { magnitude, unit })
    }

    pub fn kwh(amount: f64) -> Result<Self> {
        EnergyQuantity::new(amount, EnergyUnit::Kwh)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn unit(&self) -> EnergyUnit {
        self.unit
    }

    /// Convert to `target` using the fixed SI table.
    pub fn convert(&self, target: EnergyUnit) -> EnergyQuantity {
        let mag = self.magnitude * (self.unit.to_mj() / target.to_mj());
        EnergyQuantity {
            magnitude: mag,
            unit: target,
        }
    }

    /// Magnitude expressed in kWh.
    pub fn as_kwh(&self) -> f64 {
        self.convert(EnergyUnit::Kwh).magnitude
    }
}

impl fmt::Display for EnergyQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.magnitude, self.unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ej_to_gwh() {
        let q = EnergyQuantity::new(1.0, EnergyUnit::Ej).unwrap();
        let g = q.convert(EnergyUnit::Gwh);
        assert_relative_eq!(g.magnitude(), 277_777.777_777_777_8, max_relative = 1e-12);
    }

    #[test]
    fn mj_to_kwh_definition() {
        let q = EnergyQuantity::new(3.6, EnergyUnit::Mj).unwrap();
        assert_relative_eq!(q.as_kwh(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn zero_is_zero_everywhere() {
        let q = EnergyQuantity::new(0.0, EnergyUnit::Pj).unwrap();
        assert_eq!(q.convert(EnergyUnit::Kwh).magnitude(), 0.0);
    }

    #[test]
    fn round_trips_are_identity() {
        let units = EnergyUnit::all();
        for &a in &units {
            for &b in &units {
                let q = EnergyQuantity::new(123.456, a).unwrap();
                let back = q.convert(b).convert(a);
                assert_relative_eq!(back.magnitude(), 123.456, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn negative_magnitude_rejected() {
        assert!(EnergyQuantity::new(-1.0, EnergyUnit::Kwh).is_err());
        assert!(EnergyQuantity::new(f64::NAN, EnergyUnit::Kwh).is_err());
    }

    #[test]
    fn unit_parse() {
        assert_eq!("EJ".parse::<EnergyUnit>().unwrap(), EnergyUnit::Ej);
        assert_eq!("kWh".parse::<EnergyUnit>().unwrap(), EnergyUnit::Kwh);
        assert!("BTU".parse::<EnergyUnit>().is_err());
    }
}
