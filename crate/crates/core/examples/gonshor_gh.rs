//! Gonshor's g and h, with the branch of the closed form that applies.

use surreal_kernel::gonshor::{g, g_branch, h, h_branch};
use surreal_kernel::{NormalForm, Result};

fn main() -> Result<()> {
    for s in ["3", "w", "eps_0 + 2", "w^(-1)/4", "w^2 + 1", "1/2", "w^(-1)"] {
        let a: NormalForm = s.parse()?;
        let ga = g(&a)?;
        println!("g({a}) = {ga}  [{:?}], h(g(a)) = {}", g_branch(&a)?, h(&ga)?);
    }
    for s in ["-1", "-w", "-1/2", "2", "w"] {
        let b: NormalForm = s.parse()?;
        println!("h({b}) = {}  [{:?}]", h(&b)?, h_branch(&b)?);
    }
    match g(&"w^(w^(-1))".parse()?) {
        Ok(v) => println!("g(w^(w^-1)) = {v}"),
        Err(e) => println!("g(w^(w^-1)): {e}"),
    }
    Ok(())
}
