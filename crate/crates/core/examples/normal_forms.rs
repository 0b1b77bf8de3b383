// Greedy normal forms, divisibility, gcds and lcms in positive braid
// monoids, checked against the rewriting oracle.

use garside::format::parse_word;
use garside::verify::oracle_normal_form;
use garside::{Artin, CoxeterSystem, Side};

pub fn run_example() {
    let a2 = CoxeterSystem::build("A2").unwrap();
    let a = Artin::new(&a2);
    let b = |w: &str| a.from_word(&parse_word(w, 2).unwrap()).unwrap();

    let x = b("1211");
    println!("A2: 1211 = {}", a.show(&x));
    assert_eq!(a.show(&x).to_string(), "121 . 1");
    assert_eq!(oracle_normal_form(&a2, &parse_word("1211", 2).unwrap(), 8).unwrap(), x);

    println!("A2: gcd(12, 21) = {}", a.show(&a.left_gcd(&b("12"), &b("21"))));
    println!("A2: lcm(1, 2) = {}", a.show(&a.right_lcm(&b("1"), &b("2"))));
    assert_eq!(a.right_lcm(&b("1"), &b("2")), a.delta());
    assert!(a.divides(&b("2"), &b("12"), Side::Right));

    let b3 = CoxeterSystem::build("B3").unwrap();
    let a = Artin::new(&b3);
    let w = parse_word("1212323", 3).unwrap();
    let x = a.from_word(&w).unwrap();
    println!("B3: 1212323 = {}", a.show(&x));
    assert_eq!(oracle_normal_form(&b3, &w, 8).unwrap(), x);

    let pi = a.pi(garside::Subset::full(3));
    println!("B3: Δ² has {} atoms and canonical length {}", pi.length(), pi.canonical_length());
    assert_eq!(pi.length(), 18);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
