//! Products, inverses and centralizers in Z wr Z.
use configforge::{
    classify_centralizer, cyclic_centralizer_generator, CentralizerClass, WreathElement,
};

fn main() -> configforge::Result<()> {
    let a = WreathElement::new([(0, 1), (2, -3)], 1);
    let t = WreathElement::translation(2);
    println!("a = {a}, t = {t}");
    println!("a*t = {}", &a * &t);
    println!("t*a = {}", &t * &a);
    println!("a^-1 = {}, a^3 = {}", a.inverse(), a.pow(3));
    println!("t a t^-1 = {}", t.conjugate(&a));

    // centralizer of (delta_0, 2) is generated by a square root of itself
    let h = WreathElement::new([(0, 1)], 2);
    let g = cyclic_centralizer_generator(&h)?;
    println!("C({h}) = <{g}>, g^2 = {}", g.pow(2));

    for set in [
        vec![],
        vec![WreathElement::delta(0, 1)],
        vec![h.clone(), WreathElement::translation(1)],
    ] {
        let shown: Vec<String> = set.iter().map(|x| x.to_string()).collect();
        let class = match classify_centralizer(&set) {
            CentralizerClass::WholeGroup => "whole group".to_string(),
            CentralizerClass::BaseOnly => "base subgroup (not f.g.)".to_string(),
            CentralizerClass::Cyclic(g) if g.is_identity() => "trivial".to_string(),
            CentralizerClass::Cyclic(g) => format!("<{g}>"),
        };
        println!("C({}) = {class}", shown.join(", "));
    }
    Ok(())
}
