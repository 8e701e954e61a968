use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{QctError, Result};
use crate::lincode::DistanceResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    Pure,
    Degenerate,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExactFlags {
    pub dz: bool,
    pub dx: bool,
}

/// Upper bounds known for distances that are not exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct UpperBounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dz: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dx: Option<usize>,
}

/// A named verification performed while building a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    #[serde(default)]
    pub inputs: Vec<String>,
    /// The (z, x) pair as the construction produced it, before ordering.
    pub raw_pair: [usize; 2],
    pub swapped: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
}

/// One side of a distance pair as produced by a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Side {
    pub value: usize,
    pub exact: bool,
    pub upper: Option<usize>,
}

impl Side {
    pub fn exact(value: usize) -> Side {
        Side {
            value,
            exact: true,
            upper: None,
        }
    }

    /// A value that is not certified exact (a lower bound or a formula value).
    pub fn bound(value: usize, upper: Option<usize>) -> Side {
        Side {
            value,
            exact: false,
            upper,
        }
    }
}

/// Exact results keep their value; anything else keeps only what it
/// certifies.
impl From<&DistanceResult> for Side {
    fn from(d: &DistanceResult) -> Side {
        if d.is_exact() {
            Side::exact(d.value)
        } else {
            Side::bound(d.certified_lower(), d.upper_bound)
        }
    }
}

/// Parameters [[n, k, {dz, dx}]]_q of an asymmetric quantum code, with
/// dz >= dx after normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AqcParams {
    pub n: usize,
    pub k: usize,
    pub dz: usize,
    pub dx: usize,
    pub q: u32,
    pub purity: Purity,
    pub exact: ExactFlags,
    #[serde(default, skip_serializing_if = "is_default_upper")]
    pub upper: UpperBounds,
    pub provenance: Provenance,
}

fn is_default_upper(u: &UpperBounds) -> bool {
    *u == UpperBounds::default()
}

impl fmt::Display for AqcParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |exact: bool| if exact { "" } else { ">=" };
        write!(
            f,
            "[[{},{},{{{}{},{}{}}}]]_{}",
            self.n,
            self.k,
            mark(self.exact.dz),
            self.dz,
            mark(self.exact.dx),
            self.dx,
            self.q
        )
    }
}

impl AqcParams {
    /// Orders the pair so that dz >= dx, recording whether a swap happened.
    pub fn new(
        n: usize,
        k: usize,
        q: u32,
        z: Side,
        x: Side,
        construction: impl Into<String>,
    ) -> Result<AqcParams> {
        if n == 0 || k == 0 || k > n {
            return Err(QctError::Degenerate(format!(
                "[[{n},{k}]] is not a valid quantum code size"
            )));
        }
        if z.value == 0 || x.value == 0 {
            return Err(QctError::Degenerate("distances must be positive".into()));
        }
        let swapped = z.value < x.value;
        let (hi, lo) = if swapped { (x, z) } else { (z, x) };
        let mut provenance = Provenance {
            construction: construction.into(),
            raw_pair: [z.value, x.value],
            swapped,
            ..Provenance::default()
        };
        if swapped {
            provenance
                .notes
                .push("construction gave dz < dx; pair reordered".into());
        }
        Ok(AqcParams {
            n,
            k,
            dz: hi.value,
            dx: lo.value,
            q,
            purity: Purity::Unknown,
            exact: ExactFlags {
                dz: hi.exact,
                dx: lo.exact,
            },
            upper: UpperBounds {
                dz: hi.upper,
                dx: lo.upper,
            },
            provenance,
        })
    }

    pub fn is_exact(&self) -> bool {
        self.exact.dz && self.exact.dx
    }

    pub fn is_symmetric(&self) -> bool {
        self.dz == self.dx
    }

    pub fn checks_passed(&self) -> bool {
        self.provenance.checks.iter().all(|c| c.passed)
    }

    pub fn with_inputs(mut self, inputs: impl IntoIterator<Item = String>) -> Self {
        self.provenance.inputs.extend(inputs);
        self
    }

    pub fn with_check(mut self, check: Check) -> Self {
        self.provenance.checks.push(check);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.provenance.notes.push(note.into());
        self
    }

    pub fn with_purity(mut self, purity: Purity) -> Self {
        self.purity = purity;
        self
    }

    /// Same n, k and (normalized) pair.
    pub fn same_parameters(&self, n: usize, k: usize, a: usize, b: usize) -> bool {
        self.n == n && self.k == k && (self.dz, self.dx) == (a.max(b), a.min(b))
    }
}
