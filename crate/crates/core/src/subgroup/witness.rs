use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::wreath::{free_abelian_membership, WreathElement};

use super::analyze::{analyze, Classification};
use super::spec::SubgroupSpec;
use super::tuple_to_json;

/// A member of the subgroup lying outside the subgroup generated by the candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonFgWitness {
    pub candidate_generators: Vec<Vec<WreathElement>>,
    pub witness: Vec<WreathElement>,
    /// Root coordinate of the component the witness lives on.
    pub root: usize,
}

impl NonFgWitness {
    /// Re-checks both halves of the claim against `spec`.
    pub fn check(&self, spec: &SubgroupSpec) -> Result<bool> {
        if !spec.member(&self.witness)? {
            return Ok(false);
        }
        let projected: Vec<WreathElement> = self
            .candidate_generators
            .iter()
            .map(|c| c[self.root - 1].clone())
            .collect();
        let target = &self.witness[self.root - 1];
        if !target.is_base() || !projected.iter().all(WreathElement::is_base) {
            return Ok(false);
        }
        Ok(!free_abelian_membership(target, &projected))
    }

    pub fn to_json(&self) -> Value {
        let candidates: Vec<Value> = self
            .candidate_generators
            .iter()
            .map(|c| tuple_to_json(c))
            .collect();
        json!({
            "candidates": candidates,
            "root": self.root,
            "witness": tuple_to_json(&self.witness),
        })
    }
}

/// Refutes that `candidates` generate `spec`.
///
/// On the first component with base-type solution set, every candidate's root
/// value lies in `⊕_Z Z` with support in `[-N+1, N-1]`, hence so does everything
/// they generate. The witness carries `δ_N` at the root.
pub fn nonfg_witness(
    spec: &SubgroupSpec,
    candidates: &[Vec<WreathElement>],
) -> Result<NonFgWitness> {
    let analysis = analyze(spec);
    let (index, component) = analysis
        .iter()
        .enumerate()
        .find(|(_, c)| c.classification == Classification::BaseNotFg)
        .ok_or(Error::NoBaseNotFg)?;
    for (i, c) in candidates.iter().enumerate() {
        if !spec.member(c)? {
            return Err(Error::NotAMember(i));
        }
    }
    let root = component.root;
    let bound = candidates
        .iter()
        .filter_map(|c| c[root - 1].support_radius())
        .max()
        .map_or(1, |r| r + 1);
    let mut roots = vec![WreathElement::identity(); analysis.len()];
    roots[index] = WreathElement::delta(bound, 1);
    let witness = analysis.propagate(&roots);
    Ok(NonFgWitness {
        candidate_generators: candidates.to_vec(),
        witness,
        root,
    })
}
