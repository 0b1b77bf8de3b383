// The explicit good maximal elements of the classical types.

use garside::periodic::construct_classical;
use garside::CoxeterSystem;

pub fn run_example() {
    for t in ["A5", "2A5", "B4", "D5", "2D5"] {
        let s = CoxeterSystem::build(t).unwrap();
        for d in (1..=12).rev() {
            match construct_classical(&s, d) {
                Ok(c) => {
                    println!("{t:>3} d = {d:>2}: w = {:<16} I = {}", s.element_string(&c.w), c.i);
                    assert_eq!(c.checks.maximal, Some(true));
                }
                Err(_) => assert_eq!(s.coset_zeta_rank(1, d as u64), 0, "{t} d = {d}"),
            }
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
