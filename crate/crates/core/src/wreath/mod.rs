//! Exact arithmetic in `Z wr Z`, inner automorphisms and centralizers.

mod centralizer;
mod element;
mod lattice;
mod laurent;

pub use centralizer::{classify_centralizer, cyclic_centralizer_generator, CentralizerClass};
pub use element::WreathElement;
pub use lattice::free_abelian_membership;

/// The inner automorphism `x ↦ h·x·h⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjugationAut {
    conjugator: WreathElement,
}

impl ConjugationAut {
    pub fn new(conjugator: WreathElement) -> Self {
        Self { conjugator }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn conjugator(&self) -> &WreathElement {
        &self.conjugator
    }

    pub fn is_identity(&self) -> bool {
        self.conjugator.is_identity()
    }

    pub fn apply(&self, x: &WreathElement) -> WreathElement {
        self.conjugator.conjugate(x)
    }

    /// `self ∘ other`, i.e. conjugation by the product of the conjugators.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.conjugator.multiply(&other.conjugator))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.conjugator.inverse())
    }
}

impl From<WreathElement> for ConjugationAut {
    fn from(conjugator: WreathElement) -> Self {
        Self::new(conjugator)
    }
}

/// Applies conjugation by `aut`'s conjugator to `x`.
pub fn apply_aut(aut: &ConjugationAut, x: &WreathElement) -> WreathElement {
    aut.apply(x)
}
