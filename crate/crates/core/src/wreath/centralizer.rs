use crate::error::{Error, Result};

use super::laurent::Laurent;
use super::WreathElement;

/// Centralizer `C_G(⟨S⟩)` of a finite set in `G = Z wr Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralizerClass {
    /// Every conjugator is trivial, so nothing is constrained.
    WholeGroup,
    /// The base `⊕_Z Z`, which is not finitely generated.
    BaseOnly,
    /// The cyclic subgroup generated by the element. An identity generator
    /// stands for the trivial group.
    Cyclic(WreathElement),
}

impl CentralizerClass {
    pub fn is_finitely_generated(&self) -> bool {
        !matches!(self, CentralizerClass::BaseOnly)
    }

    pub fn contains(&self, x: &WreathElement) -> bool {
        match self {
            CentralizerClass::WholeGroup => true,
            CentralizerClass::BaseOnly => x.is_base(),
            CentralizerClass::Cyclic(g) => {
                if g.is_identity() {
                    return x.is_identity();
                }
                let step = g.shift();
                x.shift() % step == 0 && g.pow(x.shift() / step) == *x
            }
        }
    }
}

/// Classifies the joint centralizer of `set`.
///
/// With an element `h` of nonzero shift present, `C(h) = ⟨g⟩` is infinite
/// cyclic and the shift projection is injective on it. A nonzero power
/// `g^e` commutes with some `y` exactly when `g` does (the factor
/// `(1 - x^{e·s})/(1 - x^s)` cancels from the commutation equation), so the
/// joint centralizer is either `⟨g⟩` or trivial.
pub fn classify_centralizer(set: &[WreathElement]) -> CentralizerClass {
    if set.iter().all(WreathElement::is_identity) {
        return CentralizerClass::WholeGroup;
    }
    match set.iter().find(|h| h.shift() != 0) {
        Some(h) => {
            let g = cyclic_centralizer_generator(h).expect("shift is nonzero");
            if set.iter().all(|y| g.commutes_with(y)) {
                CentralizerClass::Cyclic(g)
            } else {
                CentralizerClass::Cyclic(WreathElement::identity())
            }
        }
        // C((v, 0)) = ⊕_Z Z for v ≠ 0
        None => CentralizerClass::BaseOnly,
    }
}

/// Generator `(w, s0)` of `C(h)` for `h = (v, t)` with `t ≠ 0`, with `s0 > 0`.
///
/// `(b, s)` commutes with `(v, t)` iff `b·(1 - x^t) = v·(1 - x^s)`. The shifts
/// occurring in `C(h)` form the subgroup `s0·Z` of `Z` containing `t`, so `s0`
/// is the least positive divisor of `|t|` for which `1 - x^t` divides
/// `v·(1 - x^{s0})`; the quotient is `w`.
pub fn cyclic_centralizer_generator(h: &WreathElement) -> Result<WreathElement> {
    let t = h.shift();
    if t == 0 {
        return Err(Error::ZeroShift);
    }
    let v = Laurent::from_map(h.base());
    let modulus = Laurent::one_minus_monomial(t);
    let abs = t.unsigned_abs();
    for s0 in (1..=abs).filter(|d| abs.is_multiple_of(*d)) {
        let s0 = s0 as i64;
        let numerator = v.mul(&Laurent::one_minus_monomial(s0));
        if let Some(w) = numerator.div_exact(&modulus) {
            return Ok(WreathElement::from_parts(w.into_map(), s0));
        }
    }
    unreachable!("s0 = |t| always divides")
}
