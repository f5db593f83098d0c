//! Exponential and logarithm, exact on purely infinite arguments and
//! truncated (flagged approximate) otherwise.

use surreal_kernel::explog::{exp, ln, ln_iter, EvalMode};
use surreal_kernel::{NormalForm, Result};

fn main() -> Result<()> {
    let w = NormalForm::omega();
    println!("exp(w) = {}", exp(&w, EvalMode::Exact)?.value);
    for n in 1..=4 {
        println!("ln_{n}(w) = {}", ln_iter(&w, n)?);
    }
    let x: NormalForm = "w^2 - 3*w".parse()?;
    let e = exp(&x, EvalMode::Exact)?.value;
    println!("exp({x}) = {e}, ln of that = {}", ln(&e, EvalMode::Exact)?.value);
    let y: NormalForm = "w + 1".parse()?;
    match exp(&y, EvalMode::Exact) {
        Ok(v) => println!("exp({y}) = {}", v.value),
        Err(e) => println!("exact exp({y}) refused: {e}"),
    }
    let t = exp(&y, EvalMode::Truncated(4))?;
    println!("exp({y}) ~ {} (approximate: {})", t.value, t.approximate);
    let l = ln(&"2*w + 1".parse()?, EvalMode::Truncated(3))?;
    println!("ln(2w + 1) ~ {}", l.value);
    Ok(())
}
