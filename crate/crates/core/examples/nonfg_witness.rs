//! Refute a proposed finite generating set of a non-f.g. intersection.
use configforge::{nonfg_witness, realize, sample, Configuration};

fn main() -> configforge::Result<()> {
    let config = Configuration::atom(2, "1,2".parse()?)?;
    let cert = realize(&config)?;
    let subset = "1,2".parse()?;
    let spec = cert.intersection(subset)?;

    let candidates: Vec<_> = (0..4).map(|seed| sample(&spec, seed, 3)).collect();
    for (i, x) in candidates.iter().enumerate() {
        let shown: Vec<String> = x.iter().map(|g| g.to_string()).collect();
        println!("candidate {i}: ({})", shown.join(", "));
    }
    let w = nonfg_witness(&spec, &candidates)?;
    let shown: Vec<String> = w.witness.iter().map(|g| g.to_string()).collect();
    println!(
        "witness ({}) at root {}; refutes candidates: {}",
        shown.join(", "),
        w.root,
        w.check(&spec)?
    );
    Ok(())
}
