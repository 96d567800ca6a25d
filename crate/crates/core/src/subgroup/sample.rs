use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::wreath::WreathElement;

use super::analyze::{analyze, Classification};
use super::spec::SubgroupSpec;

/// Deterministic pseudo-random member of `spec`.
///
/// Root values are drawn from each component's solution set with all
/// indices, coefficients, shifts and cyclic exponents in `[-size_bound, size_bound]`,
/// then propagated along the spanning tree.
pub fn sample(spec: &SubgroupSpec, seed: u64, size_bound: u32) -> Vec<WreathElement> {
    let analysis = analyze(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(size_bound);
    let roots: Vec<WreathElement> = analysis
        .iter()
        .map(|comp| match &comp.classification {
            Classification::Trivial => WreathElement::identity(),
            Classification::FullFactor => {
                let base = random_base(&mut rng, bound);
                let shift = rng.gen_range(-bound..=bound);
                WreathElement::new(base.base().clone(), shift)
            }
            Classification::Cyclic(g) => g.pow(rng.gen_range(-bound..=bound)),
            Classification::BaseNotFg => random_base(&mut rng, bound),
        })
        .collect();
    analysis.propagate(&roots)
}

/// Random element of `⊕_Z Z` with support and coefficients in `[-bound, bound]`.
pub fn random_base<R: Rng>(rng: &mut R, bound: i64) -> WreathElement {
    let mut terms = Vec::new();
    for index in -bound..=bound {
        if rng.gen_bool(0.5) {
            terms.push((index, rng.gen_range(-bound..=bound)));
        }
    }
    WreathElement::from_base(terms)
}
