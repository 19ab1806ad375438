//! Wick's theorem and the factorization of mixed neutral expectation values,
//! checked on concrete words.
//!
//! ```text
//! cargo run --example wick_theorem
//! ```

use schurq::fock::{check_factorization, check_wick, vev, OperatorWord};

fn word(s: &str) -> OperatorWord {
    s.parse().expect("operator word")
}

fn main() {
    let w = 7;
    for s in [
        "phi+(3,t) phi+(2,t) phi+(1,t) phi+(0,t)",
        "phi+(3,t) phi-(2,t) phi+(1,t) phi-(1,t)",
        "psi(2,t) psidag(-1,t) psi(0,t) psidag(-3,t)",
        "psi(3,t) psidag(-2,t) psi(1,t) psidag(-1,t)",
    ] {
        let wd = word(s);
        println!("{s}\n  <0|..|0> = {}\n  Wick holds: {}", vev(&wd, w).unwrap(), check_wick(&wd, w).unwrap());
    }

    // Generators that fail to anticommute are rejected rather than checked.
    let bad = word("psi(1) psidag(1)");
    println!("\npsi(1) psidag(1): {}", check_wick(&bad, w).unwrap_err());

    println!("\nfactorization of <0| u+ u- |0>:");
    for (plus, minus) in [
        ("phi+(3,t) phi+(1,t)", "phi-(2,t) phi-(1,t)"),
        ("phi+(3,t)", "phi-(2,t)"),
        ("phi+(3,t) phi+(2,t)", "phi-(1,t)"),
    ] {
        let ok = check_factorization(&word(plus), &word(minus), w).unwrap();
        println!("  [{plus}] [{minus}]: {ok}");
    }
}
