use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Hilbert function of an Artinian quotient, stored up to its first zero.
///
/// `values` holds `H(0), ..., H(sigma - 1)`, all positive. The zero
/// function (of the unit ideal) is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    /// Accepts any list that is positive up to its first zero and zero after it.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        let sigma = values.iter().position(|&v| v == 0).unwrap_or(values.len());
        if let Some(i) = values[sigma..].iter().position(|&v| v != 0) {
            return Err(Error::HilbertFunction(format!(
                "nonzero value {} at degree {} after H({sigma}) = 0",
                values[sigma + i],
                sigma + i
            )));
        }
        let mut values = values;
        values.truncate(sigma);
        Ok(HilbertFunction { values })
    }

    pub fn zero() -> Self {
        HilbertFunction { values: Vec::new() }
    }

    pub fn at(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    /// The nonzero prefix `H(0), ..., H(sigma - 1)`.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Least `i` with `H(i) = 0`.
    pub fn sigma(&self) -> usize {
        self.values.len()
    }

    /// `rho = sigma - 1`; `None` for the zero function.
    pub fn regularity(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    /// Sum of all values, the length of the quotient.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl TryFrom<Vec<u64>> for HilbertFunction {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        HilbertFunction::new(v)
    }
}

impl From<HilbertFunction> for Vec<u64> {
    fn from(h: HilbertFunction) -> Self {
        h.values
    }
}

/// Space separated values ending in the trailing 0, e.g. `1 3 5 3 1 0`.
impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{v} ")?;
        }
        f.write_str("0")
    }
}

/// Whitespace or comma separated values; the trailing 0 is optional.
impl FromStr for HilbertFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>().map_err(|_| Error::Parse {
                    token: t.to_string(),
                    reason: "expected a nonnegative integer".into(),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        HilbertFunction::new(values)
    }
}
