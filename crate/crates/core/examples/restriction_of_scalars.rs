// Good elements of restrictions of scalars `Wⁿ·σ` and of the eigenvalues
// `ζ_d^k`.

use garside::periodic::{construct_classical, construct_for_power, restriction_of_scalars, Limits};
use garside::CoxeterSystem;

pub fn run_example() {
    let a2 = CoxeterSystem::build("A2").unwrap();
    for d in [6, 4, 3, 2] {
        let r = restriction_of_scalars(&a2, 2, d, &Limits::default()).unwrap();
        let blocks: Vec<String> = r.blocks.iter().map(|b| a2.element_string(b)).collect();
        println!(
            "{} at d = {d}: m = {}, blocks ({}), I = {}, maximal = {:?}",
            r.system.name,
            r.m,
            blocks.join(", "),
            r.cert.i,
            r.cert.checks.maximal
        );
        assert!(r.cert.checks.good());
    }

    let b4 = CoxeterSystem::build("B4").unwrap();
    let base = construct_classical(&b4.with_twist_power(3), 8).unwrap();
    let p = construct_for_power(&b4, 3, 8, &base).unwrap();
    println!("B4, ζ8³: w = {} of length {}", b4.element_string(&p.w), p.w.length());
    assert_eq!(p.w.length(), 12);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
