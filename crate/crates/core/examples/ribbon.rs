// The ribbon category: the splitting `b = α_I(b)·ω_I(b)`, atoms, the
// Garside map and normal decompositions of morphisms.

use garside::format::parse_word;
use garside::ribbon::Ribbon;
use garside::{CoxeterSystem, Subset};

pub fn run_example() {
    let a4 = CoxeterSystem::build("A4").unwrap();
    let r = Ribbon::new(&a4);
    let a = r.artin;
    let b = |w: &str| a.from_word(&parse_word(w, 4).unwrap()).unwrap();

    let i = Subset::from_labels(&[3]);
    let (alpha, omega) = r.alpha(i, &b("3234"));
    println!("A4, I = {i}: 3234 = ({}) · ({})", a.word_string(&alpha), a.word_string(&omega));

    for m in r.atoms_from(i) {
        println!("atom {} --{}--> {}", m.source, a.word_string(&m.braid), m.target);
    }
    let m = r.atom(i, 1);
    assert_eq!((a.word_string(&m.braid).as_str(), m.target), ("23", Subset::from_labels(&[2])));

    let g = r.garside_map(i);
    println!("Garside map {} --{}--> {}", g.source, a.word_string(&g.braid), g.target);
    let back = r.garside_map(g.target);
    let sq = r.compose(&g, &back).unwrap();
    assert_eq!(sq.braid, a.pi_over(i));

    let chain = r.category_normal_form(&sq);
    for s in &chain {
        println!("  {} --{}--> {}", s.source, a.word_string(&s.braid), s.target);
    }
    println!("orbit of {i}: {:?}", r.orbit(i).iter().map(|j| j.to_string()).collect::<Vec<_>>());
    assert_eq!(r.orbit(i).len(), 4);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
