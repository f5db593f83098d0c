//! Cantor normal form ordinals: arithmetic, classification and canonical
//! sequences of epsilon numbers.

use surreal_kernel::{Ordinal, Result};

fn main() -> Result<()> {
    let w = Ordinal::omega();
    let one = Ordinal::one();
    println!("1 + w = {}", one.add(&w)?);
    println!("w + 1 = {}", w.add(&one)?);
    println!("natural sum 1 (+) w = {}", one.nat_add(&w)?);
    let a: Ordinal = "w^2 + w*3 + 1".parse()?;
    println!("({a}) * w = {}", a.mul(&w)?);
    println!("w ^ ({a}) = {}", w.pow(&a)?);
    println!("natural product ({a}) (x) ({a}) = {}", a.nat_mul(&a)?);
    for o in ["w^w", "w^2", "eps_0", "w*2"] {
        let c = o.parse::<Ordinal>()?.classify();
        println!(
            "{o}: additive {}, multiplicative {}, epsilon {}",
            c.is_additive, c.is_multiplicative, c.is_epsilon
        );
    }
    let eps0 = Ordinal::eps(0);
    let seq: Vec<String> = eps0.canonical_prefix(4)?.iter().map(|o| o.to_string()).collect();
    println!("canonical sequence of eps_0: {}", seq.join(", "));
    let eps1 = Ordinal::eps(1);
    let seq: Vec<String> = eps1.canonical_prefix(3)?.iter().map(|o| o.to_string()).collect();
    println!("canonical sequence of eps_1: {}", seq.join(", "));
    println!("w^eps_0 = {}", w.pow(&eps0)?);
    Ok(())
}
