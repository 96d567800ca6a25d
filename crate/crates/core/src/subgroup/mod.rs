//! Subgroups of `G^m`, `G = Z wr Z`, given by a gain graph of conjugation
//! constraints, and a complete finite-generation decision for them.

mod analyze;
mod sample;
mod spec;
mod witness;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::wreath::WreathElement;

pub use analyze::{analyze, Classification, ComponentReport, SubgroupAnalysis};
pub use sample::{random_base, sample};
pub use spec::{Edge, SubgroupSpec};
pub use witness::{nonfg_witness, NonFgWitness};

/// Componentwise product in `G^m`.
pub fn tuple_mul(x: &[WreathElement], y: &[WreathElement]) -> Vec<WreathElement> {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a.multiply(b)).collect()
}

pub fn tuple_inverse(x: &[WreathElement]) -> Vec<WreathElement> {
    x.iter().map(WreathElement::inverse).collect()
}

pub fn tuple_to_json(x: &[WreathElement]) -> Value {
    Value::Array(x.iter().map(WreathElement::to_json).collect())
}

pub fn tuple_from_json(value: &Value) -> Result<Vec<WreathElement>> {
    value
        .as_array()
        .ok_or_else(|| Error::Malformed("a tuple is an array of wreath elements".into()))?
        .iter()
        .map(WreathElement::from_json)
        .collect()
}
