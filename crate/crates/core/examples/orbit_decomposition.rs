//! Fixed points of a permutational automorphism of G^k, orbit by orbit.
use std::collections::BTreeMap;

use configforge::realize::decompose;
use configforge::{fixed_subgroup, psi_embed, ConjugationAut, PermutationalAut, WreathElement};

fn main() -> configforge::Result<()> {
    // 1 -> 2 -> 3 -> 1 with a twist on the last step, and 4 fixed under conjugation by t
    let labels = vec![
        ConjugationAut::identity(),
        ConjugationAut::identity(),
        ConjugationAut::new(WreathElement::delta(0, 1)),
        ConjugationAut::new(WreathElement::translation(1)),
    ];
    let a = PermutationalAut::new(vec![2, 3, 1, 4], labels)?;
    let (orbits, spec) = fixed_subgroup(&a);
    for o in &orbits.orbits {
        println!(
            "orbit of {} (size {}), holonomy {}",
            o.representative, o.size, o.holonomy
        );
    }

    let roots = BTreeMap::from([
        (1, WreathElement::delta(3, 2)),
        (4, WreathElement::translation(5)),
    ]);
    let x = psi_embed(&a, &roots)?;
    let shown: Vec<String> = x.iter().map(|g| g.to_string()).collect();
    println!("psi(roots) = ({})", shown.join(", "));
    println!("fixed: {}, member: {}", a.apply(&x)? == x, spec.member(&x)?);
    println!("roots recovered: {}", decompose(&a, &x)? == roots);
    Ok(())
}
