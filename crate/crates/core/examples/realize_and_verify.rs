//! Realize a configuration and check the certificate.
use configforge::realize::{join_certificates, verify_detailed};
use configforge::{realize, Configuration, Subset};

fn main() -> configforge::Result<()> {
    let config = Configuration::from_ones(
        3,
        ["1,2".parse::<Subset>()?, "2,3".parse()?, "1,2,3".parse()?],
    )?;
    let cert = realize(&config)?;
    println!("{config} lives in G^{}", cert.ambient_m);
    for report in &cert.reports {
        let classes: Vec<String> = report
            .components
            .iter()
            .map(|c| format!("{}x{}", c.class, c.size))
            .collect();
        println!(
            "  {}\tfg={}\t{}",
            report.subset,
            report.fg,
            classes.join(" ")
        );
    }
    let check = verify_detailed(&cert, 16, 1)?;
    println!("verified: {}", check.is_ok());

    let a = realize(&Configuration::atom(3, "1".parse()?)?)?;
    let b = realize(&Configuration::atom(3, "2,3".parse()?)?)?;
    let joined = join_certificates(&a, &b)?;
    println!(
        "joined {} in G^{}, verified: {}",
        joined.config,
        joined.ambient_m,
        verify_detailed(&joined, 4, 0)?.is_ok()
    );
    Ok(())
}
