use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};

/// An element of the restricted wreath product `Z wr Z = (⊕_Z Z) ⋊ Z`.
///
/// The base is a finitely supported integer sequence, stored sorted by index
/// with zero coefficients removed, so structural equality is group equality.
/// The acting `Z` translates indices: `σ^s(δ_i) = δ_{i+s}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    base: BTreeMap<i64, BigInt>,
    shift: i64,
}

impl WreathElement {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds an element from `(index, coefficient)` pairs; repeated indices are summed.
    pub fn new<I, C>(base: I, shift: i64) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map = BTreeMap::new();
        for (index, coeff) in base {
            add_coeff(&mut map, index, coeff.into());
        }
        Self { base: map, shift }
    }

    pub fn from_base<I, C>(base: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        Self::new(base, 0)
    }

    /// `coeff · δ_index` in the base.
    pub fn delta(index: i64, coeff: impl Into<BigInt>) -> Self {
        Self::new([(index, coeff)], 0)
    }

    /// The pure shift `(0, s)`.
    pub fn translation(shift: i64) -> Self {
        Self {
            base: BTreeMap::new(),
            shift,
        }
    }

    pub(crate) fn from_parts(base: BTreeMap<i64, BigInt>, shift: i64) -> Self {
        debug_assert!(base.values().all(|c| !c.is_zero()));
        Self { base, shift }
    }

    pub fn base(&self) -> &BTreeMap<i64, BigInt> {
        &self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.base.is_empty()
    }

    /// True when the element lies in `⊕_Z Z`.
    pub fn is_base(&self) -> bool {
        self.shift == 0
    }

    /// Largest absolute index in the support, `None` for an empty base.
    pub fn support_radius(&self) -> Option<i64> {
        let lo = self.base.keys().next()?;
        let hi = self.base.keys().next_back()?;
        Some(lo.abs().max(hi.abs()))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut base = self.base.clone();
        for (&index, coeff) in &other.base {
            add_coeff(&mut base, index + self.shift, coeff.clone());
        }
        Self {
            base,
            shift: self.shift + other.shift,
        }
    }

    pub fn inverse(&self) -> Self {
        let base = self
            .base
            .iter()
            .map(|(&index, coeff)| (index - self.shift, -coeff))
            .collect();
        Self {
            base,
            shift: -self.shift,
        }
    }

    pub fn pow(&self, exponent: i64) -> Self {
        let mut acc = Self::identity();
        let mut square = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.multiply(&square);
            }
        }
        acc
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Self) -> Self {
        self.multiply(x).multiply(&self.inverse())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.multiply(other) == other.multiply(self)
    }

    pub fn to_json(&self) -> Value {
        let base: Vec<Value> = self
            .base
            .iter()
            .map(|(index, coeff)| json!([index, bigint_to_json(coeff)]))
            .collect();
        json!({ "base": base, "shift": self.shift })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Malformed("wreath element must be an object".into()))?;
        let shift = obj
            .get("shift")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Malformed("wreath element needs an integer \"shift\"".into()))?;
        let entries = obj
            .get("base")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("wreath element needs a \"base\" array".into()))?;
        let mut base = BTreeMap::new();
        for entry in entries {
            let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                Error::Malformed("base entries must be [index, coefficient] pairs".into())
            })?;
            let index = pair[0]
                .as_i64()
                .ok_or_else(|| Error::Malformed("base index must be an integer".into()))?;
            if base.contains_key(&index) {
                return Err(Error::Malformed(format!("repeated base index {index}")));
            }
            let coeff = bigint_from_json(&pair[1])?;
            if !coeff.is_zero() {
                base.insert(index, coeff);
            }
        }
        Ok(Self { base, shift })
    }
}

fn add_coeff(map: &mut BTreeMap<i64, BigInt>, index: i64, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    let entry = map.entry(index).or_insert_with(BigInt::zero);
    *entry += coeff;
    if entry.is_zero() {
        map.remove(&index);
    }
}

fn bigint_to_json(value: &BigInt) -> Value {
    let number: Number = value
        .to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers");
    Value::Number(number)
}

fn bigint_from_json(value: &Value) -> Result<BigInt> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        _ => return Err(Error::Malformed("coefficient must be an integer".into())),
    };
    text.parse::<BigInt>()
        .map_err(|_| Error::Malformed(format!("coefficient {text} is not an integer")))
}

impl Mul for &WreathElement {
    type Output = WreathElement;

    fn mul(self, rhs: &WreathElement) -> WreathElement {
        self.multiply(rhs)
    }
}

impl Mul for WreathElement {
    type Output = WreathElement;

    fn mul(self, rhs: WreathElement) -> WreathElement {
        self.multiply(&rhs)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.base.is_empty() {
            write!(f, "0")?;
        }
        for (i, (index, coeff)) in self.base.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if coeff.is_one() {
                write!(f, "d{index}")?;
            } else if coeff.is_negative() && (-coeff).is_one() {
                write!(f, "-d{index}")?;
            } else {
                write!(f, "{coeff}*d{index}")?;
            }
        }
        write!(f, " | {})", self.shift)
    }
}
