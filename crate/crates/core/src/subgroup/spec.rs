use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::wreath::{ConjugationAut, WreathElement};

/// The constraint `g_dst = label(g_src)`, coordinates 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: ConjugationAut,
}

impl Edge {
    pub fn new(src: usize, dst: usize, label: ConjugationAut) -> Self {
        Self { src, dst, label }
    }

    /// The equality `g_src = g_dst`.
    pub fn equal(src: usize, dst: usize) -> Self {
        Self::new(src, dst, ConjugationAut::identity())
    }

    /// The same constraint oriented with `src <= dst`. Self-loops keep
    /// whichever of `h`, `h⁻¹` is smaller, since both give the same fixed set.
    pub(crate) fn canonical(&self) -> Edge {
        if self.src > self.dst {
            Edge::new(self.dst, self.src, self.label.inverse())
        } else if self.src == self.dst {
            let inv = self.label.inverse();
            let label = if inv < self.label {
                inv
            } else {
                self.label.clone()
            };
            Edge::new(self.src, self.dst, label)
        } else {
            self.clone()
        }
    }

    pub fn holds(&self, x: &[WreathElement]) -> bool {
        x[self.dst - 1] == self.label.apply(&x[self.src - 1])
    }
}

/// A subgroup of `G^m` cut out by edge constraints and identity pins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    m: usize,
    edges: Vec<Edge>,
    pins: BTreeSet<usize>,
}

impl SubgroupSpec {
    /// The whole of `G^m`.
    pub fn free(m: usize) -> Self {
        assert!(m >= 1, "ambient power must be positive");
        Self {
            m,
            edges: Vec::new(),
            pins: BTreeSet::new(),
        }
    }

    /// The trivial subgroup of `G^m`.
    pub fn all_pinned(m: usize) -> Self {
        let mut spec = Self::free(m);
        spec.pins = (1..=m).collect();
        spec
    }

    pub fn new(m: usize, edges: Vec<Edge>, pins: impl IntoIterator<Item = usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Malformed("ambient power must be positive".into()));
        }
        let mut spec = Self::free(m);
        for e in edges {
            spec.add_edge(e)?;
        }
        for p in pins {
            spec.pin(p)?;
        }
        Ok(spec)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn pins(&self) -> &BTreeSet<usize> {
        &self.pins
    }

    pub fn add_edge(&mut self, edge: Edge) -> Result<()> {
        self.check_coordinate(edge.src)?;
        self.check_coordinate(edge.dst)?;
        self.edges.push(edge);
        Ok(())
    }

    pub fn pin(&mut self, coordinate: usize) -> Result<()> {
        self.check_coordinate(coordinate)?;
        self.pins.insert(coordinate);
        Ok(())
    }

    fn check_coordinate(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.m {
            return Err(Error::CoordinateOutOfRange { index, m: self.m });
        }
        Ok(())
    }

    /// Edges in canonical orientation with duplicates removed, first occurrence kept.
    pub(crate) fn canonical_edges(&self) -> Vec<Edge> {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .map(Edge::canonical)
            .filter(|e| seen.insert(e.clone()))
            .collect()
    }

    /// Intersection: the union of both constraint sets.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::MismatchedAmbient(self.m, other.m));
        }
        let mut edges = self.edges.clone();
        for e in &other.edges {
            let c = e.canonical();
            if !edges.iter().any(|x| x.canonical() == c) {
                edges.push(e.clone());
            }
        }
        let pins = self.pins.union(&other.pins).copied().collect();
        Ok(Self {
            m: self.m,
            edges,
            pins,
        })
    }

    pub fn member(&self, x: &[WreathElement]) -> Result<bool> {
        if x.len() != self.m {
            return Err(Error::LengthMismatch {
                got: x.len(),
                expected: self.m,
            });
        }
        Ok(self.pins.iter().all(|&p| x[p - 1].is_identity())
            && self.edges.iter().all(|e| e.holds(x)))
    }

    /// Places `self` into `G^m_total` at coordinates `offset + 1 ..= offset + m`.
    pub fn translated(&self, offset: usize, m_total: usize) -> Result<Self> {
        if offset + self.m > m_total {
            return Err(Error::CoordinateOutOfRange {
                index: offset + self.m,
                m: m_total,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.src + offset, e.dst + offset, e.label.clone()))
            .collect();
        let pins = self.pins.iter().map(|p| p + offset).collect();
        Ok(Self {
            m: m_total,
            edges,
            pins,
        })
    }

    /// Constraints of `other` added to `self`; both must share the ambient power.
    pub fn merge(&mut self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MismatchedAmbient(self.m, other.m));
        }
        self.edges.extend(other.edges.iter().cloned());
        self.pins.extend(other.pins.iter().copied());
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({ "src": e.src, "dst": e.dst, "conjugator": e.label.conjugator().to_json() }))
            .collect();
        json!({ "m": self.m, "edges": edges, "pins": self.pins.iter().collect::<Vec<_>>() })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let m = value
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Malformed("subgroup spec needs an integer \"m\"".into()))?
            as usize;
        let edges = value
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("subgroup spec needs an \"edges\" array".into()))?
            .iter()
            .map(|e| {
                let coord = |key: &str| {
                    e.get(key)
                        .and_then(Value::as_u64)
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::Malformed(format!("edge needs an integer \"{key}\"")))
                };
                let conj = e
                    .get("conjugator")
                    .ok_or_else(|| Error::Malformed("edge needs a \"conjugator\"".into()))?;
                Ok(Edge::new(
                    coord("src")?,
                    coord("dst")?,
                    WreathElement::from_json(conj)?.into(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let pins = value
            .get("pins")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("subgroup spec needs a \"pins\" array".into()))?
            .iter()
            .map(|p| {
                p.as_u64()
                    .map(|v| v as usize)
                    .ok_or_else(|| Error::Malformed("pins must be integers".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, edges, pins)
    }
}
