//! Field arithmetic on normal forms, truncated inversion, and the Conway
//! recursion used as an independent oracle.

use surreal_kernel::convert::{nf_to_signseq, signseq_to_nf};
use surreal_kernel::field::{conway_add, conway_mul, div_exact, inv_truncated, TruncationPolicy};
use surreal_kernel::{NormalForm, Result};

fn main() -> Result<()> {
    let x: NormalForm = "w + 1".parse()?;
    let y: NormalForm = "w - 1/2".parse()?;
    println!("({x}) + ({y}) = {}", &x + &y);
    println!("({x}) * ({y}) = {}", &x * &y);
    println!("({x}) / w = {}", div_exact(&x, &NormalForm::omega())?);
    let inv = inv_truncated(&x, TruncationPolicy::new(4)?)?;
    println!("1/({x}) ~ {} (approximate: {})", inv.value, inv.approximate);
    println!("residual ({x}) * that - 1 = {}", &(&x * &inv.value) - &NormalForm::one());

    let a = nf_to_signseq(&"3/4".parse()?)?;
    let b = nf_to_signseq(&"-3/2".parse()?)?;
    let s = conway_add(&a, &b, 7)?;
    let p = conway_mul(&a, &b, 7)?;
    println!("Conway: 3/4 + -3/2 = {}, 3/4 * -3/2 = {}", signseq_to_nf(&s)?, signseq_to_nf(&p)?);
    Ok(())
}
