// Posets of decompositions into simples: connectivity and vanishing first
// homology.

use garside::verify::{check_simply_connected_evidence, decomposition_poset};
use garside::{Artin, CoxeterSystem};

pub fn run_example() {
    let a2 = CoxeterSystem::build("A2").unwrap();
    let a = Artin::new(&a2);
    let p = decomposition_poset(&a, &a.delta(), 8).unwrap();
    for e in &p.elements {
        let parts: Vec<String> = e.iter().map(|x| a2.element_string(x)).collect();
        println!("({})", parts.join(","));
    }
    let t = check_simply_connected_evidence(&p);
    println!("E(Δ) in A2: {} elements, connected {}, H1 rank {}", p.elements.len(), t.connected, t.h1_rank);
    assert_eq!(p.elements.len(), 7);

    let a3 = CoxeterSystem::build("A3").unwrap();
    let a = Artin::new(&a3);
    let g = a.from_word(&[0, 1, 2, 1, 0]).unwrap();
    let p = decomposition_poset(&a, &g, 8).unwrap();
    let t = check_simply_connected_evidence(&p);
    println!("E(12321) in A3: {} elements, connected {}, H1 rank {}", p.elements.len(), t.connected, t.h1_rank);
    assert!(t.connected && t.h1_rank == 0);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
