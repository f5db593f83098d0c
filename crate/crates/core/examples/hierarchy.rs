//! The SRF / Gamma^up hierarchy: membership, certificates, paths and the
//! instability and strictness witnesses.

use surreal_kernel::hierarchy::{
    certify, check_certificate, derive_ln_certificates, enumerate_paths, instability_witness_check,
    log_atomic_depth, membership_report, strictness_witness_check, Certificate, FieldSpec,
    GroupSpec,
};
use surreal_kernel::{NormalForm, Ordinal, Result};

fn main() -> Result<()> {
    let eps0 = Ordinal::eps(0);
    let x: NormalForm = "w^(w^(-(w^w)))".parse()?;
    for mu in ["w^w", "w^(w^2)"] {
        let field = FieldSpec::Srf {
            lambda: eps0.clone(),
            group: GroupSpec::NoLt { mu: mu.parse()? },
        };
        print!("{}", membership_report(&x, &field)?);
    }

    let group = GroupSpec::GammaUp {
        base: Box::new(GroupSpec::NoLt { mu: "w^w".parse()? }),
        lambda: eps0.clone(),
        level: 1,
    };
    let base = Certificate::base("w^(-1)".parse()?);
    for c in derive_ln_certificates(&base)? {
        println!("h-image {} certified: {}", c.claim, check_certificate(&c.claim, &group, &c)?);
    }
    if let Some(c) = certify(&"w^(w^w)".parse()?, &group)? {
        println!("certificate found:\n{}", c.to_json());
    }

    for p in enumerate_paths(&"w^w + w".parse()?, 2) {
        println!("path {p}");
    }
    println!("w^(w^(-(w^w))) log-atomic to depth 3: {}", log_atomic_depth(&x, 3)?);

    print!("{}", instability_witness_check(&Ordinal::omega(), &eps0)?);
    print!("{}", strictness_witness_check(&"w^w".parse()?, &"w^(w^2)".parse()?, &eps0, 4)?);
    Ok(())
}
