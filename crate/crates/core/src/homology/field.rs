use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HomologyError;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub const DEFAULT: FieldSpec = FieldSpec::PrimeField(32003);

    /// Validated constructor; the modulus must be a prime below `2^32`.
    pub fn prime(p: u64) -> Result<Self, HomologyError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::DEFAULT
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = HomologyError;

    /// Accepts `QQ`, `Q`, `rationals`, a bare prime such as `32003`, or `GF(p)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "q" | "qq" | "rationals" | "rational" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let digits =
            t.strip_prefix("GF(").or_else(|| t.strip_prefix("gf(")).and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let p = digits.parse::<u64>().map_err(|_| HomologyError::UnknownField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = HomologyError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> Self {
        f.to_string()
    }
}
