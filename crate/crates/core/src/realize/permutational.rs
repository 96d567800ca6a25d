//! Automorphisms of `G^k` that permute factors with an inner twist on each,
//! and the orbit decomposition of their fixed subgroups.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::subgroup::{Edge, SubgroupSpec};
use crate::wreath::{ConjugationAut, WreathElement};

/// `(x_j)_j ↦ y` with `y_{perm(j)} = labels[j](x_j)`; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationalAut {
    perm: Vec<usize>,
    labels: Vec<ConjugationAut>,
}

impl PermutationalAut {
    /// `perm[j - 1]` is the image of `j`.
    pub fn new(perm: Vec<usize>, labels: Vec<ConjugationAut>) -> Result<Self> {
        let k = perm.len();
        if k == 0 {
            return Err(Error::NotBijection(0));
        }
        if labels.len() != k {
            return Err(Error::LengthMismatch {
                got: labels.len(),
                expected: k,
            });
        }
        let mut seen = vec![false; k + 1];
        for &p in &perm {
            if p == 0 || p > k || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotBijection(k));
            }
        }
        Ok(Self { perm, labels })
    }

    pub fn k(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, j: usize) -> usize {
        self.perm[j - 1]
    }

    pub fn label(&self, j: usize) -> &ConjugationAut {
        &self.labels[j - 1]
    }

    pub fn apply(&self, x: &[WreathElement]) -> Result<Vec<WreathElement>> {
        if x.len() != self.k() {
            return Err(Error::LengthMismatch {
                got: x.len(),
                expected: self.k(),
            });
        }
        let mut y = vec![WreathElement::identity(); self.k()];
        for j in 1..=self.k() {
            y[self.image(j) - 1] = self.label(j).apply(&x[j - 1]);
        }
        Ok(y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest index in the orbit.
    pub representative: usize,
    pub size: usize,
    /// Composite twist once around the orbit, starting at the representative.
    pub holonomy: WreathElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    /// Number of orbits.
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

/// Orbits of `a`'s permutation and the fixed subgroup of `a` as a spec over `G^k`.
///
/// A fixed point satisfies `x_{perm(j)} = labels[j](x_j)`; along an orbit of
/// size `o` this determines everything from `x_j`, which must in turn commute
/// with the composite twist of the `o` steps around the orbit.
pub fn fixed_subgroup(a: &PermutationalAut) -> (OrbitDecomposition, SubgroupSpec) {
    let k = a.k();
    let edges = (1..=k)
        .map(|j| Edge::new(j, a.image(j), a.label(j).clone()))
        .collect();
    let spec = SubgroupSpec::new(k, edges, []).expect("indices lie in 1..=k");

    let mut visited = vec![false; k + 1];
    let mut orbits = Vec::new();
    for rep in 1..=k {
        if visited[rep] {
            continue;
        }
        let mut holonomy = WreathElement::identity();
        let mut size = 0;
        let mut j = rep;
        loop {
            visited[j] = true;
            holonomy = a.label(j).conjugator().multiply(&holonomy);
            size += 1;
            j = a.image(j);
            if j == rep {
                break;
            }
        }
        orbits.push(Orbit {
            representative: rep,
            size,
            holonomy,
        });
    }
    (OrbitDecomposition { orbits }, spec)
}

/// Embeds one root value per orbit as a fixed point of `a`: the root sits at
/// the representative and each step along the orbit applies that position's
/// twist. Representatives absent from `roots` get the identity.
pub fn psi_embed(
    a: &PermutationalAut,
    roots: &BTreeMap<usize, WreathElement>,
) -> Result<Vec<WreathElement>> {
    let (decomposition, _) = fixed_subgroup(a);
    let mut x = vec![WreathElement::identity(); a.k()];
    for orbit in &decomposition.orbits {
        let Some(root) = roots.get(&orbit.representative) else {
            continue;
        };
        if !root.commutes_with(&orbit.holonomy) {
            return Err(Error::RootNotFixed(orbit.representative));
        }
        let mut j = orbit.representative;
        let mut value = root.clone();
        for _ in 0..orbit.size {
            x[j - 1] = value.clone();
            value = a.label(j).apply(&value);
            j = a.image(j);
        }
    }
    Ok(x)
}

/// Reads a fixed point back as its orbit root values; errors when `x` is not
/// fixed by `a`.
pub fn decompose(
    a: &PermutationalAut,
    x: &[WreathElement],
) -> Result<BTreeMap<usize, WreathElement>> {
    if a.apply(x)? != x {
        return Err(Error::NotAMember(0));
    }
    let (decomposition, _) = fixed_subgroup(a);
    let mut roots = BTreeMap::new();
    for orbit in &decomposition.orbits {
        let root = x[orbit.representative - 1].clone();
        if !root.commutes_with(&orbit.holonomy) {
            return Err(Error::RootNotFixed(orbit.representative));
        }
        roots.insert(orbit.representative, root);
    }
    Ok(roots)
}
