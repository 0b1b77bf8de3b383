// Periodic braids and good maximal elements: certificates, the
// counterexamples to maximality in `A3`, triality in `D4`, and sliding a
// periodic braid to a good one.

use garside::format::parse_word;
use garside::periodic::{
    braid_identity, certificate_from_braid, certify, garside_image, is_periodic, maximality, slide_to_good,
    BRUTE_FORCE_BOUND,
};
use garside::{Artin, CoxeterSystem, Subset};

pub fn run_example() {
    let h3 = CoxeterSystem::build("H3").unwrap();
    let w = h3.element(&parse_word("123", 3).unwrap()).unwrap();
    let c = certify(&h3, 10, Subset::EMPTY, &w).unwrap();
    println!("H3: 123 is ζ10-good, maximal = {:?}, ζ-rank = {}", c.checks.maximal, c.zeta_rank);

    let a3 = CoxeterSystem::build("A3").unwrap();
    for labels in [&[2][..], &[1, 3][..]] {
        let i = Subset::from_labels(labels);
        let w = garside_image(&a3, i);
        let b = Artin::new(&a3).simple(&w);
        let m = maximality(&a3, 2, i, &w, BRUTE_FORCE_BOUND).unwrap();
        println!(
            "A3, I = {i}: periodic = {}, eigenspace dim {} of {}, roots ⊥ V = {}, maximal = {:?}",
            is_periodic(&a3, i, &b, 2, &a3.phi),
            m.eigenspace_dim,
            m.coset_rank,
            m.orthogonal_roots,
            m.brute_force
        );
        assert_eq!(m.brute_force, Some(false));
    }

    let d4 = CoxeterSystem::build("D4").unwrap();
    let tri = d4.automorphism(&[3, 0, 2, 1]).unwrap();
    let s = d4.with_twist(tri.clone(), d4.factors.clone());
    let a = Artin::new(&s);
    let head = a.right_quotient(&a.delta(), &a.from_word(&[0, 1, 3]).unwrap()).unwrap();
    let b = a.product(&head, &a.from_word(&[3, 3]).unwrap());
    let i = Subset::from_labels(&[1]);
    println!(
        "D4 with triality, b = {}: identity {}, I^b = {:?}, φ(I) = {}, accepted = {}",
        a.show(&b),
        braid_identity(&s, i, &b, 2, &tri),
        a.conjugate_subset(i, &b).map(|j| j.to_string()),
        i.map(&tri.perm),
        certificate_from_braid(&s, 2, i, &b).is_ok()
    );

    let a = Artin::new(&a3);
    let b = a.from_word(&[0, 1, 2]).unwrap();
    let (x, obj) = slide_to_good(&a3, Subset::EMPTY, &b, 4, &a3.phi).unwrap();
    println!("A3, d = 4: 123 slides by {} to {}", a.word_string(&x), a.word_string(&obj.braid));
    assert!(certify(&a3, 4, Subset::EMPTY, &a.image(&obj.braid)).is_ok());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
