//! Configurations: total 0/1 maps on the nonempty subsets of `[n]`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Largest `n` accepted by the public API.
pub const MAX_N: usize = 16;

/// A nonempty subset of `[n]`, element `i` stored at bit `i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u32);

impl Subset {
    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut mask = 0u32;
        for e in elements {
            if e == 0 || e > MAX_N {
                return Err(Error::InvalidSubset(format!(
                    "element {e} outside 1..={MAX_N}"
                )));
            }
            mask |= 1 << (e - 1);
        }
        if mask == 0 {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        Ok(Subset(mask))
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=32).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, or 0 for the empty mask.
    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=32).filter(move |&i| mask & (1 << (i - 1)) != 0)
    }

    /// Every nonempty subset of `[n]`, ascending by mask.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (1..=Subset::full(n).0).map(Subset)
    }

    pub fn to_json(self) -> Value {
        json!(self.elements().collect::<Vec<_>>())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Parses `"1,3"` style element lists.
impl std::str::FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(format!("cannot parse {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subset::from_elements(elements)
    }
}

/// An `n`-configuration. `values[mask - 1]` is the value at the subset `mask`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    n: usize,
    values: Vec<bool>,
}

impl Configuration {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            values: vec![false; table_len(n)],
        })
    }

    /// The configuration that is 1 exactly on the listed subsets.
    pub fn from_ones<I: IntoIterator<Item = Subset>>(n: usize, ones: I) -> Result<Self> {
        let mut c = Self::zero(n)?;
        for s in ones {
            c.set(s, true)?;
        }
        Ok(c)
    }

    pub fn atom(n: usize, subset: Subset) -> Result<Self> {
        Self::from_ones(n, [subset])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, subset: Subset) -> bool {
        self.values[subset.mask() as usize - 1]
    }

    pub fn set(&mut self, subset: Subset, value: bool) -> Result<()> {
        if subset.is_empty() || subset.max_element() > self.n {
            return Err(Error::InvalidSubset(format!(
                "{subset} is not a nonempty subset of [{}]",
                self.n
            )));
        }
        self.values[subset.mask() as usize - 1] = value;
        Ok(())
    }

    /// Subsets mapped to 1, ascending by mask.
    pub fn ones(&self) -> Vec<Subset> {
        Subset::all(self.n).filter(|&s| self.get(s)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| !v)
    }

    /// Pointwise OR.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedN(self.n, other.n));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Self { n: self.n, values })
    }

    /// One atom per subset mapped to 1, ascending by mask. Their join is `self`.
    pub fn atoms(&self) -> Vec<Configuration> {
        self.ones()
            .into_iter()
            .map(|s| Configuration::atom(self.n, s).expect("subset of [n]"))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let ones: Vec<Value> = self.ones().into_iter().map(Subset::to_json).collect();
        json!({ "n": self.n, "ones": ones })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(|| {
            Error::Malformed("configuration needs a positive integer \"n\"".into())
        })? as usize;
        check_n(n)?;
        let ones = value
            .get("ones")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("configuration needs a \"ones\" array".into()))?;
        let mut c = Self::zero(n)?;
        for entry in ones {
            let subset = parse_subset(entry, n)?;
            c.set(subset, true)?;
        }
        Ok(c)
    }
}

/// Parses a JSON element list as a nonempty subset of `[n]`.
pub(crate) fn parse_subset(value: &Value, n: usize) -> Result<Subset> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::Malformed("subsets are arrays of elements".into()))?;
    let mut elements = Vec::with_capacity(list.len());
    for e in list {
        let e = e
            .as_u64()
            .ok_or_else(|| Error::Malformed("subset elements must be positive integers".into()))?
            as usize;
        if e == 0 || e > n {
            return Err(Error::InvalidSubset(format!("element {e} outside 1..={n}")));
        }
        elements.push(e);
    }
    Subset::from_elements(elements)
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones: Vec<String> = self.ones().iter().map(|s| s.to_string()).collect();
        write!(f, "n={} ones=[{}]", self.n, ones.join(" "))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidN { n, max: MAX_N });
    }
    Ok(())
}

fn table_len(n: usize) -> usize {
    (1usize << n) - 1
}

/// All `2^(2^n - 1)` configurations on `[n]`, in lexicographic order of the
/// value table `(c({1}), c({2}), c({1,2}), ...)`.
pub fn enumerate_configurations(n: usize) -> Result<ConfigurationIter> {
    let first = Configuration::zero(n)?;
    Ok(ConfigurationIter { next: Some(first) })
}

pub struct ConfigurationIter {
    next: Option<Configuration>,
}

impl Iterator for ConfigurationIter {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer on the table, last entry least significant
        let mut carry = true;
        for v in succ.values.iter_mut().rev() {
            if !*v {
                *v = true;
                carry = false;
                break;
            }
            *v = false;
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(current)
    }
}
