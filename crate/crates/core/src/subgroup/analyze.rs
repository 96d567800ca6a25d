use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::wreath::{classify_centralizer, CentralizerClass, ConjugationAut, WreathElement};

use super::spec::SubgroupSpec;

/// Isomorphism type of one component's solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Trivial,
    /// A full copy of `G`.
    FullFactor,
    /// The cyclic group generated by the element (trivial if it is the identity).
    Cyclic(WreathElement),
    /// `⊕_Z Z`, not finitely generated.
    BaseNotFg,
}

impl Classification {
    pub fn is_finitely_generated(&self) -> bool {
        !matches!(self, Classification::BaseNotFg)
    }

    /// Stable name used in reports and certificates.
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Trivial => "Trivial",
            Classification::FullFactor => "FullFactor",
            Classification::Cyclic(_) => "Cyclic",
            Classification::BaseNotFg => "BaseNotFG",
        }
    }

    /// Whether `x` is an admissible root value.
    pub fn admits(&self, x: &WreathElement) -> bool {
        match self {
            Classification::Trivial => x.is_identity(),
            Classification::FullFactor => true,
            Classification::Cyclic(g) => CentralizerClass::Cyclic(g.clone()).contains(x),
            Classification::BaseNotFg => x.is_base(),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cyclic(g) => write!(f, "Cyclic<{g}>"),
            other => f.write_str(other.tag()),
        }
    }
}

/// One connected component of the constraint graph.
///
/// Every solution restricted to `nodes` is `g_v = tree_auts[v](g_root)`, with
/// `g_root` ranging over the joint centralizer of `holonomy` (or the identity
/// when `pinned`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub nodes: Vec<usize>,
    pub root: usize,
    pub tree_auts: BTreeMap<usize, ConjugationAut>,
    pub holonomy: Vec<WreathElement>,
    pub pinned: bool,
    pub classification: Classification,
}

impl ComponentReport {
    pub fn is_finitely_generated(&self) -> bool {
        self.classification.is_finitely_generated()
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

/// Output of [`analyze`]: the subgroup is the direct product of the components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupAnalysis {
    pub m: usize,
    pub components: Vec<ComponentReport>,
}

impl SubgroupAnalysis {
    pub fn is_finitely_generated(&self) -> bool {
        self.components
            .iter()
            .all(ComponentReport::is_finitely_generated)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ComponentReport> {
        self.components.iter()
    }

    /// Root coordinate values of `x`, one per component.
    pub fn root_values(&self, x: &[WreathElement]) -> Vec<WreathElement> {
        self.components
            .iter()
            .map(|c| x[c.root - 1].clone())
            .collect()
    }

    /// Inverse of [`Self::root_values`] on the subgroup: propagates one root
    /// value per component along the spanning trees.
    pub fn propagate(&self, roots: &[WreathElement]) -> Vec<WreathElement> {
        assert_eq!(roots.len(), self.components.len());
        let mut x = vec![WreathElement::identity(); self.m];
        for (comp, root) in self.components.iter().zip(roots) {
            for (&node, aut) in &comp.tree_auts {
                x[node - 1] = aut.apply(root);
            }
        }
        x
    }
}

impl<'a> IntoIterator for &'a SubgroupAnalysis {
    type Item = &'a ComponentReport;
    type IntoIter = std::slice::Iter<'a, ComponentReport>;

    fn into_iter(self) -> Self::IntoIter {
        self.components.iter()
    }
}

/// Decomposes the subgroup into components of its constraint graph.
///
/// Each component is rooted at its smallest coordinate and explored breadth
/// first with neighbours in ascending order; `c_v` is the conjugator with
/// `g_v = c_v·g_root·c_v⁻¹`. A non-tree edge `g_v = h·g_u·h⁻¹` forces `g_root`
/// to commute with `c_v⁻¹·h·c_u`, its holonomy.
pub fn analyze(spec: &SubgroupSpec) -> SubgroupAnalysis {
    let m = spec.m();
    let edges = spec.canonical_edges();
    let mut adjacency: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); m + 1];
    for (i, e) in edges.iter().enumerate() {
        if e.src != e.dst {
            adjacency[e.src].entry(e.dst).or_insert(i);
            adjacency[e.dst].entry(e.src).or_insert(i);
        }
    }

    let mut conj: Vec<Option<WreathElement>> = vec![None; m + 1];
    let mut component_of = vec![usize::MAX; m + 1];
    let mut tree_edge = vec![false; edges.len()];
    let mut components = Vec::new();

    for root in 1..=m {
        if conj[root].is_some() {
            continue;
        }
        let id = components.len();
        let mut nodes = Vec::new();
        conj[root] = Some(WreathElement::identity());
        component_of[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            nodes.push(u);
            let cu = conj[u].clone().expect("visited");
            for (&v, &ei) in &adjacency[u] {
                if conj[v].is_some() {
                    continue;
                }
                let e = &edges[ei];
                let h = e.label.conjugator();
                let cv = if e.src == u {
                    h.multiply(&cu)
                } else {
                    h.inverse().multiply(&cu)
                };
                conj[v] = Some(cv);
                component_of[v] = id;
                tree_edge[ei] = true;
                queue.push_back(v);
            }
        }
        nodes.sort_unstable();
        components.push((root, nodes, Vec::new()));
    }

    for (ei, e) in edges.iter().enumerate() {
        if tree_edge[ei] {
            continue;
        }
        let cu = conj[e.src].as_ref().expect("visited");
        let cv = conj[e.dst].as_ref().expect("visited");
        let hol = cv.inverse().multiply(e.label.conjugator()).multiply(cu);
        components[component_of[e.src]].2.push(hol);
    }

    let components = components
        .into_iter()
        .map(|(root, nodes, holonomy)| {
            let pinned = nodes.iter().any(|v| spec.pins().contains(v));
            let classification = if pinned {
                Classification::Trivial
            } else {
                match classify_centralizer(&holonomy) {
                    CentralizerClass::WholeGroup => Classification::FullFactor,
                    CentralizerClass::BaseOnly => Classification::BaseNotFg,
                    CentralizerClass::Cyclic(g) => Classification::Cyclic(g),
                }
            };
            let tree_auts = nodes
                .iter()
                .map(|&v| (v, ConjugationAut::new(conj[v].clone().expect("visited"))))
                .collect();
            ComponentReport {
                nodes,
                root,
                tree_auts,
                holonomy,
                pinned,
                classification,
            }
        })
        .collect();
    SubgroupAnalysis { m, components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::Edge;

    fn f() -> ConjugationAut {
        WreathElement::delta(0, 1).into()
    }

    #[test]
    fn chain_intersection_is_one_tree() {
        let h1 = SubgroupSpec::new(3, vec![Edge::equal(1, 2)], []).unwrap();
        let h2 = SubgroupSpec::new(3, vec![Edge::equal(2, 3)], []).unwrap();
        let a = analyze(&h1.intersect(&h2).unwrap());
        assert_eq!(a.len(), 1);
        assert_eq!(a.components[0].nodes, vec![1, 2, 3]);
        assert_eq!(a.components[0].classification, Classification::FullFactor);
        assert!(a.is_finitely_generated());
    }

    #[test]
    fn two_coordinate_twist_cycle() {
        let h1 = SubgroupSpec::new(2, vec![Edge::equal(1, 2)], []).unwrap();
        let h2 = SubgroupSpec::new(2, vec![Edge::new(1, 2, f())], []).unwrap();
        let a = analyze(&h1.intersect(&h2).unwrap());
        assert_eq!(a.len(), 1);
        assert_eq!(a.components[0].holonomy, vec![WreathElement::delta(0, 1)]);
        assert_eq!(a.components[0].classification, Classification::BaseNotFg);
        assert!(!a.is_finitely_generated());
    }

    #[test]
    fn chain_twist_full_intersection() {
        for n in 2..=5 {
            let mut spec = SubgroupSpec::free(n);
            for i in 1..n {
                spec.add_edge(Edge::equal(i, i + 1)).unwrap();
            }
            spec.add_edge(Edge::new(1, n, f())).unwrap();
            let a = analyze(&spec);
            assert_eq!(a.len(), 1);
            // for n >= 3 the tree reaches n through the twist, so the chain edge closes the cycle
            let expected = if n == 2 {
                WreathElement::delta(0, 1)
            } else {
                WreathElement::delta(0, -1)
            };
            assert_eq!(a.components[0].holonomy, vec![expected]);
            assert_eq!(a.components[0].classification, Classification::BaseNotFg);
        }
    }

    #[test]
    fn all_pinned_is_trivial() {
        let a = analyze(&SubgroupSpec::all_pinned(3));
        assert_eq!(a.len(), 3);
        assert!(a
            .iter()
            .all(|c| c.classification == Classification::Trivial && c.pinned));
        assert!(a.is_finitely_generated());
    }

    #[test]
    fn pin_overrides_holonomy() {
        let spec =
            SubgroupSpec::new(2, vec![Edge::equal(1, 2), Edge::new(1, 2, f())], [2]).unwrap();
        let a = analyze(&spec);
        assert_eq!(a.components[0].classification, Classification::Trivial);
        assert!(a.components[0].pinned);
    }

    #[test]
    fn empty_spec_has_free_factors() {
        let a = analyze(&SubgroupSpec::free(2));
        assert_eq!(a.len(), 2);
        assert!(a
            .iter()
            .all(|c| c.classification == Classification::FullFactor));
    }

    #[test]
    fn duplicates_and_reverses_collapse() {
        let spec = SubgroupSpec::new(
            2,
            vec![
                Edge::new(1, 2, f()),
                Edge::new(1, 2, f()),
                Edge::new(2, 1, f().inverse()),
            ],
            [],
        )
        .unwrap();
        let a = analyze(&spec);
        assert!(a.components[0].holonomy.is_empty());
        assert_eq!(a.components[0].classification, Classification::FullFactor);
    }

    #[test]
    fn self_loop_with_translation_is_cyclic() {
        let spec = SubgroupSpec::new(
            1,
            vec![Edge::new(1, 1, WreathElement::translation(2).into())],
            [],
        )
        .unwrap();
        let a = analyze(&spec);
        assert_eq!(
            a.components[0].classification,
            Classification::Cyclic(WreathElement::translation(1))
        );
    }

    #[test]
    fn tree_auts_propagate_members() {
        let g = WreathElement::new([(1, 2)], 1);
        let spec = SubgroupSpec::new(
            3,
            vec![Edge::new(2, 1, g.clone().into()), Edge::equal(3, 2)],
            [],
        )
        .unwrap();
        let a = analyze(&spec);
        let root = WreathElement::new([(0, 3), (2, -1)], -1);
        let x = a.propagate(std::slice::from_ref(&root));
        assert!(spec.member(&x).unwrap());
        assert_eq!(a.root_values(&x), vec![root]);
    }
}
