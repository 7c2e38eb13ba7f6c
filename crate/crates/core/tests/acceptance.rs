//! Acceptance suite: one test per pinned criterion, exact equality
//! throughout (tolerance zero). Each test prints its pass/fail line; run
//! with `cargo test --test acceptance -- --nocapture` to see them.

use tautcalc::verify::{self, CriterionResult, VerifyConfig};

fn check(result: CriterionResult) {
    println!("{}", result.summary_line());
    for line in &result.details {
        println!("    {line}");
    }
    assert!(result.passed, "{}:\n{}", result.name, result.details.join("\n"));
}

fn config() -> VerifyConfig {
    VerifyConfig {
        r_max: 4,
        parallel: false,
    }
}

#[test]
fn criterion_01_identity_suite() {
    check(verify::criterion_01_identities());
}

#[test]
fn criterion_02_mu_nu_and_sigma_relation() {
    check(verify::criterion_02_mu_nu());
}

#[test]
fn criterion_03_ring_cross_check() {
    check(verify::criterion_03_chern_cross_check(&config()));
}

#[test]
fn criterion_04_degeneracy_oracle() {
    // r = 5 (g = 14) is included: the full 6x6 expansion runs in
    // milliseconds with normal-form monomial maps.
    check(verify::criterion_04_degeneracy_oracle(&VerifyConfig {
        r_max: 5,
        parallel: false,
    }));
}

#[test]
fn criterion_05_theta_pure_determinant() {
    check(verify::criterion_05_theta_pure());
}

#[test]
fn criterion_06_prym_divisor_class() {
    check(verify::criterion_06_prym_class());
}

#[test]
fn criterion_07_strongly_bn_and_normalization() {
    check(verify::criterion_07_strongly_bn(&config()));
}

#[test]
fn criterion_08_kodaira_r14_2() {
    check(verify::criterion_08_kodaira());
}

#[test]
fn criterion_09_nikulin_pairing() {
    check(verify::criterion_09_nikulin());
}

#[test]
fn criterion_10_rho_suite() {
    check(verify::criterion_10_rho_suite());
}
