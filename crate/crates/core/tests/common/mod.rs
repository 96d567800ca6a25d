#![allow(dead_code)]

use std::collections::BTreeSet;

use configforge::{ConjugationAut, Edge, SubgroupSpec, WreathElement};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every element with support, coefficients and shift in `[-r, r]`.
pub fn box_elements(r: i64) -> Vec<WreathElement> {
    let width = (2 * r + 1) as usize;
    let indices: Vec<i64> = (-r..=r).collect();
    let mut out = Vec::new();
    let combos = width.pow(width as u32);
    for code in 0..combos {
        let mut c = code;
        let mut terms = Vec::with_capacity(width);
        for &i in &indices {
            terms.push((i, (c % width) as i64 - r));
            c /= width;
        }
        for shift in -r..=r {
            out.push(WreathElement::new(terms.clone(), shift));
        }
    }
    out
}

pub fn random_element<R: Rng>(rng: &mut R, support: i64, coeff: i64, shift: i64) -> WreathElement {
    let mut terms = Vec::new();
    for i in -support..=support {
        if rng.gen_bool(0.4) {
            terms.push((i, rng.gen_range(-coeff..=coeff)));
        }
    }
    WreathElement::new(terms, rng.gen_range(-shift..=shift))
}

/// A conjugator from the small box, biased toward the interesting shapes:
/// identity, pure base, pure translation, mixed.
pub fn random_conjugator<R: Rng>(rng: &mut R) -> WreathElement {
    match rng.gen_range(0..6) {
        0 => WreathElement::identity(),
        1 | 2 => random_element(rng, 1, 2, 0),
        3 => WreathElement::translation(*[-2, -1, 1, 2].choose(rng).unwrap()),
        _ => random_element(rng, 1, 1, 2),
    }
}

pub fn random_conjugator_set<R: Rng>(rng: &mut R) -> Vec<WreathElement> {
    let len = rng.gen_range(0..=3);
    (0..len).map(|_| random_conjugator(rng)).collect()
}

pub fn random_spec<R: Rng>(rng: &mut R, max_m: usize, max_edges: usize) -> SubgroupSpec {
    let m = rng.gen_range(1..=max_m);
    let mut spec = SubgroupSpec::free(m);
    for _ in 0..rng.gen_range(0..=max_edges) {
        let src = rng.gen_range(1..=m);
        let dst = rng.gen_range(1..=m);
        spec.add_edge(Edge::new(
            src,
            dst,
            ConjugationAut::new(random_conjugator(rng)),
        ))
        .unwrap();
    }
    if rng.gen_bool(0.25) {
        spec.pin(rng.gen_range(1..=m)).unwrap();
    }
    spec
}

/// Independent finite-generation decision by explicit path enumeration.
///
/// Components come from a fixpoint flood fill. In each component every simple
/// path from the smallest node to every node is walked; two paths to the same
/// node force the root to commute with their quotient, and a self-loop with
/// label `h` at `v` forces commutation with `p⁻¹·h·p` for a path `p` to `v`.
/// The solution set is the centralizer of those elements: the whole group if
/// all are trivial, the base (not f.g.) if all lie in the base, and a subgroup
/// of an infinite cyclic group otherwise.
pub fn naive_analyze(spec: &SubgroupSpec) -> (bool, usize) {
    let m = spec.m();
    let edges = spec.edges();
    let mut label: Vec<usize> = (0..=m).collect();
    loop {
        let mut changed = false;
        for e in edges {
            let low = label[e.src].min(label[e.dst]);
            for v in [e.src, e.dst] {
                if label[v] != low {
                    label[v] = low;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: BTreeSet<usize> = (1..=m).map(|v| label[v]).collect();

    let mut fg = true;
    for &root in &roots {
        let nodes: Vec<usize> = (1..=m).filter(|&v| label[v] == root).collect();
        if nodes.iter().any(|v| spec.pins().contains(v)) {
            continue;
        }
        let mut paths: Vec<Vec<WreathElement>> = vec![Vec::new(); m + 1];
        let mut on_path = vec![false; m + 1];
        walk(
            edges,
            root,
            WreathElement::identity(),
            &mut on_path,
            &mut paths,
        );

        let mut constraints = Vec::new();
        for &v in &nodes {
            let first = &paths[v][0];
            for other in &paths[v][1..] {
                constraints.push(other.inverse().multiply(first));
            }
        }
        for e in edges
            .iter()
            .filter(|e| e.src == e.dst && label[e.src] == root)
        {
            let p = &paths[e.src][0];
            constraints.push(p.inverse().multiply(e.label.conjugator()).multiply(p));
        }
        let all_trivial = constraints.iter().all(WreathElement::is_identity);
        let any_shift = constraints.iter().any(|c| c.shift() != 0);
        if !all_trivial && !any_shift {
            fg = false;
        }
    }
    (fg, roots.len())
}

fn walk(
    edges: &[Edge],
    at: usize,
    conj: WreathElement,
    on_path: &mut Vec<bool>,
    paths: &mut Vec<Vec<WreathElement>>,
) {
    paths[at].push(conj.clone());
    on_path[at] = true;
    for e in edges {
        let (next, step) = if e.src == at && e.dst != at {
            (e.dst, e.label.conjugator().clone())
        } else if e.dst == at && e.src != at {
            (e.src, e.label.conjugator().inverse())
        } else {
            continue;
        };
        if !on_path[next] {
            walk(edges, next, step.multiply(&conj), on_path, paths);
        }
    }
    on_path[at] = false;
}

/// All integer combinations of `gens` with multipliers in `[-bound, bound]`.
pub fn combinations(gens: &[WreathElement], bound: i64) -> Vec<WreathElement> {
    let mut acc = vec![WreathElement::identity()];
    for g in gens {
        let mut next = Vec::with_capacity(acc.len() * (2 * bound as usize + 1));
        for a in &acc {
            for k in -bound..=bound {
                next.push(a.multiply(&g.pow(k)));
            }
        }
        acc = next;
    }
    acc
}
