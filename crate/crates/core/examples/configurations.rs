//! Building, joining and enumerating configurations.
use configforge::{enumerate_configurations, Configuration, Subset};

fn main() -> configforge::Result<()> {
    let c1 = Configuration::atom(3, "1,2".parse::<Subset>()?)?;
    let c2 = Configuration::from_ones(3, ["3".parse()?, "1,2,3".parse()?])?;
    let joined = c1.join(&c2)?;
    println!("c1 = {c1}\nc2 = {c2}\nc1 v c2 = {joined}");
    for atom in joined.atoms() {
        println!("  atom {atom}");
    }
    println!("{}", serde_json::to_string(&joined.to_json())?);
    for n in 1..=3 {
        println!(
            "n={n}: {} configurations",
            enumerate_configurations(n)?.count()
        );
    }
    Ok(())
}
