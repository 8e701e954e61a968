use serde::{Deserialize, Serialize};

use super::code::LinearCode;
use super::distance::{DistanceMethod, DistanceResult, Exactness};
use crate::error::{QctError, Result};
use crate::galois::{Field, FieldDescriptor};
use crate::polyalg::DefiningSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceSummary {
    pub value: usize,
    pub exactness: Exactness,
    pub method: DistanceMethod,
}

/// Serialized form of a linear code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_set: Option<DefiningSet>,
    #[serde(default)]
    pub provenance: String,
}

impl CodeRecord {
    pub fn from_code(code: &LinearCode) -> CodeRecord {
        CodeRecord {
            field: code.field().descriptor(),
            n: code.len(),
            k: code.k(),
            generator: code.rows(),
            distance: code.distance().map(|d| DistanceSummary {
                value: d.value,
                exactness: d.exactness,
                method: d.method,
            }),
            defining_set: code.defining_set().cloned(),
            provenance: code.provenance().to_string(),
        }
    }

    /// Rebuilds the code. The stored distance is kept only as a declared
    /// value, since a record carries no certificate for it.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Field::from_descriptor(&self.field)
            .map_err(|e| QctError::MalformedRecord(format!("field: {e}")))?;
        let mut code = if self.generator.is_empty() {
            LinearCode::zero(&field, self.n)
        } else {
            LinearCode::from_generator(&field, &self.generator)
                .map_err(|e| QctError::MalformedRecord(e.to_string()))?
        };
        if code.len() != self.n || code.k() != self.k {
            return Err(QctError::MalformedRecord(format!(
                "generator spans [{},{}], record says [{},{}]",
                code.len(),
                code.k(),
                self.n,
                self.k
            )));
        }
        if let Some(d) = &self.distance {
            code = code.with_distance(DistanceResult::declared(d.value));
        }
        if let Some(t) = &self.defining_set {
            if t.n as usize != self.n || t.q != field.order() || t.dimension() != self.k {
                return Err(QctError::MalformedRecord(
                    "defining set disagrees with the generator".into(),
                ));
            }
            code = code.with_defining_set(t.clone());
        }
        Ok(code.with_provenance(self.provenance.clone()))
    }
}
