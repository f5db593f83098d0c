//! Sign expansions: conversion between normal forms and sign sequences,
//! lengths, and the simplest number in a cut.

use surreal_kernel::convert::{length_of, nf_to_signseq, signseq_to_nf};
use surreal_kernel::signseq::simplest_between;
use surreal_kernel::{NormalForm, Result, SignSeq};

fn main() -> Result<()> {
    for s in ["3/4", "-5/2", "w", "w^(-1)", "w^w + 1", "w^(1/2)", "eps_0 - 1", "w - w^(-1)"] {
        let x: NormalForm = s.parse()?;
        println!("{:>12}  signs {:<24} length {}", x.to_string(), nf_to_signseq(&x)?.to_string(), length_of(&x)?);
    }
    let seq: SignSeq = "+^2 -^1 +^1".parse()?;
    println!("{seq} is {}", signseq_to_nf(&seq)?);
    let half: SignSeq = "+^1 -^1".parse()?;
    let one: SignSeq = "+^1".parse()?;
    let mid = simplest_between(&[half], &[one])?;
    println!("simplest between 1/2 and 1: {} = {}", mid, signseq_to_nf(&mid)?);
    match "1/3".parse::<NormalForm>().and_then(|x| nf_to_signseq(&x)) {
        Ok(s) => println!("1/3: {s}"),
        Err(e) => println!("1/3: refused ({e})"),
    }
    Ok(())
}
