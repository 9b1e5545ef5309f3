//! Geography identifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeoLevel {
    State,
    County,
    Ba,
    Interconnection,
}

impl fmt::Display for GeoLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GeoLevel::State => "state",
            GeoLevel::County => "county",
            GeoLevel::Ba => "ba",
            GeoLevel::Interconnection => "interconnection",
        };
        f.write_str(s)
    }
}

/// A geography at a declared level: two-letter state codes, 5-digit county
/// FIPS, balancing-authority abbreviations (e.g. "CISO"), or an
/// interconnection label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeoId {
    level: GeoLevel,
    code: String,
}

impl GeoId {
    pub fn state(code: &str) -> Result<Self> {
        let code = code.trim();
        if code.len() != 2 || !code.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(Error::Config(format!(
                "state code must be two letters, got {code:?}"
            )));
        }
        Ok(GeoId {
            level: GeoLevel::State,
            code: code.to_ascii_uppercase(),
        })
    }

    /// County FIPS; short codes are zero-padded to five digits.
    pub fn county(fips: &str) -> Result<Self> {
        let fips = fips.trim();
        if fips.is_empty() || fips.len() > 5 || !fips.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Config(format!(
                "county FIPS must be 1-5 digits, got {fips:?}"
            )));
        }
        Ok(GeoId {
            level: GeoLevel::County,
            code: format!("{:0>5}", fips),
        })
    }

    pub fn ba(code: &str) -> Result<Self> {
        let code = code.trim();
        if code.is_empty() || code.len() > 16 || !code.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(Error::Config(format!(
                "BA code must be 1-16 alphanumeric characters, got {code:?}"
            )));
        }
        Ok(GeoId {
            level: GeoLevel::Ba,
            code: code.to_ascii_uppercase(),
        })
    }

    pub fn interconnection(code: &str) -> Result<Self> {
        let code = code.trim();
        if code.is_empty() {
            return Err(Error::Config("interconnection code must be non-empty".into()));
        }
        Ok(GeoId {
            level: GeoLevel::Interconnection,
            code: code.to_string(),
        })
    }

    pub fn level(&self) -> GeoLevel {
        self.level
    }

    pub fn code(&self) -> &str {
        &self.code
    }
}

impl fmt::Display for GeoId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level, self.code)
    }
}
