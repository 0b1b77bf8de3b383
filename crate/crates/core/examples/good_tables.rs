// Enumeration of all `ζ_d`-good maximal elements of `H3` and `³D4`, with
// the orders of the relative reflection groups.

use garside::periodic::{classify_good, Limits};
use garside::CoxeterSystem;

pub fn run_example() {
    for t in ["H3", "3D4"] {
        let s = CoxeterSystem::build(t).unwrap();
        println!("{t}");
        let mut total = 0;
        for d in (1..=30).rev() {
            if s.coset_zeta_rank(1, d) == 0 {
                continue;
            }
            let table = classify_good(&s, d as u32, &Limits::default()).unwrap();
            for r in &table.rows {
                println!(
                    "  d = {d:>2}  I = {:<6} #good = {:>2}  relative order = {}  representative {}",
                    r.i.to_string(),
                    r.count,
                    r.relative_order.map_or("?".into(), |o| o.to_string()),
                    s.element_string(&r.representatives[0])
                );
                total += 1;
            }
        }
        assert!(total >= 5);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
