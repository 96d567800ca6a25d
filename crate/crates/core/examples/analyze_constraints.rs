//! Components, holonomy and finite generation of constraint subgroups.
use configforge::{analyze, ConjugationAut, Edge, SubgroupSpec, WreathElement};

fn main() -> configforge::Result<()> {
    let delta = ConjugationAut::new(WreathElement::delta(0, 1));
    let shift = ConjugationAut::new(WreathElement::translation(1));

    let specs = [
        ("free pair", SubgroupSpec::free(2)),
        ("pinned", SubgroupSpec::all_pinned(2)),
        (
            "chain + twist",
            SubgroupSpec::new(
                3,
                vec![Edge::equal(1, 2), Edge::equal(2, 3), Edge::new(3, 1, delta)],
                [],
            )?,
        ),
        (
            "shift loop",
            SubgroupSpec::new(
                2,
                vec![Edge::new(1, 2, shift.clone()), Edge::new(2, 1, shift)],
                [],
            )?,
        ),
    ];
    for (name, spec) in &specs {
        let analysis = analyze(spec);
        println!("{name}: f.g. = {}", analysis.is_finitely_generated());
        for c in &analysis {
            let hol: Vec<String> = c.holonomy.iter().map(|h| h.to_string()).collect();
            println!(
                "  nodes {:?} holonomy [{}] -> {}",
                c.nodes,
                hol.join(", "),
                c.classification
            );
        }
    }
    Ok(())
}
