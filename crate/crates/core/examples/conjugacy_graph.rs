// Components of cyclic conjugacy categories: the `Φ`-fixed component of
// `123423` in `D4` and the `Φ`-twisted component of `21325` in `A5`.

use garside::conjcat::{delta_automorphism, ConjObject, CycCategory, DEFAULT_MAX_NODES};
use garside::format::parse_word;
use garside::CoxeterSystem;

pub fn run_example() {
    let d4 = CoxeterSystem::build("D4").unwrap();
    let c = CycCategory::new(&d4);
    let start = c.artin.from_word(&parse_word("123423", 4).unwrap()).unwrap();
    let phi = delta_automorphism(&d4);
    let g = c.explore_component(&ConjObject::plain(start), Some(&phi), DEFAULT_MAX_NODES);
    println!("D4 component of 123423: {} nodes, {} edges", g.nodes.len(), g.edges.len());
    assert_eq!(g.nodes.len(), 12);
    print!("{}", c.to_dot(&g));

    let a5 = CoxeterSystem::build("A5").unwrap();
    let c = CycCategory::with_twist(&a5, delta_automorphism(&a5));
    let start = c.artin.from_word(&parse_word("21325", 5).unwrap()).unwrap();
    let g = c.explore_component(&ConjObject::plain(start), None, DEFAULT_MAX_NODES);
    let words: Vec<String> = g.nodes.iter().map(|o| c.artin.word_string(&o.braid)).collect();
    println!("A5 Φ-twisted component of 21325: {} nodes", words.len());
    println!("{}", words.join(" "));
    assert_eq!(words.len(), 22);

    let obj = ConjObject::plain(c.artin.from_word(&parse_word("21325", 5).unwrap()).unwrap());
    let endo = c.endo_generators(&obj, None, 2);
    println!("endomorphism generators up to canonical length 2: {}", endo.generators.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
