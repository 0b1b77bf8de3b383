use std::collections::BTreeSet;

use garside::ribbon::Ribbon;
use garside::{Artin, Braid, CoxeterSystem, Side, Subset};
use proptest::prelude::*;

const ATOM_LENGTH: usize = 5;

fn case() -> impl Strategy<Value = (CoxeterSystem, Subset, Vec<usize>, Vec<usize>)> {
    prop::sample::select(vec!["A3", "B3", "A4", "D4"]).prop_flat_map(|t| {
        let sys = CoxeterSystem::build(t).unwrap();
        let r = sys.rank();
        let w = || prop::collection::vec(0..r, 0..=10);
        (Just(sys), (0..(1u64 << r)).prop_map(Subset), w(), w())
    })
}

/// Strips `α_I` so the braid is `I`-reduced.
fn reduced(r: &Ribbon<'_>, i: Subset, b: &Braid) -> Braid {
    r.alpha(i, b).1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alpha_splits((sys, i, u, _) in case()) {
        let r = Ribbon::new(&sys);
        let a = r.artin;
        let b = a.from_word(&u).unwrap();
        let (al, om) = r.alpha(i, &b);
        prop_assert!(al.factors.iter().all(|f| sys.in_parabolic(f, i)));
        prop_assert!(r.is_reduced(i, &om));
        prop_assert_eq!(a.product(&al, &om), b.clone());
        // b conjugates I into S iff α_I(b) normalizes I and ω_I(b) conjugates I into S
        let whole = a.conjugate_subset(i, &b).is_some();
        let split = a.conjugate_subset(i, &al) == Some(i) && a.conjugate_subset(i, &om).is_some();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn composition_is_safe((sys, i, u, v) in case()) {
        let r = Ribbon::new(&sys);
        let a = r.artin;
        let Ok(f) = r.make_morphism(i, &reduced(&r, i, &a.from_word(&u).unwrap())) else { return Ok(()) };
        let Ok(g) = r.make_morphism(f.target, &reduced(&r, f.target, &a.from_word(&v).unwrap())) else {
            return Ok(());
        };
        let h = r.compose(&f, &g).unwrap();
        prop_assert!(r.is_reduced(i, &h.braid));
        prop_assert_eq!(&h.braid, &a.product(&f.braid, &g.braid));
        prop_assert_eq!(h.target, g.target);
        let chain = r.category_normal_form(&h);
        prop_assert_eq!(a.product_all(chain.iter().map(|m| &m.braid)), h.braid.clone());
        prop_assert!(chain.windows(2).all(|p| p[0].target == p[1].source));
    }

    #[test]
    fn quotients_and_lcms_stay_in_the_category((sys, i, u, v) in case()) {
        let r = Ribbon::new(&sys);
        let a = r.artin;
        let Ok(f) = r.make_morphism(i, &reduced(&r, i, &a.from_word(&u).unwrap())) else { return Ok(()) };
        let Ok(g) = r.make_morphism(i, &reduced(&r, i, &a.from_word(&v).unwrap())) else { return Ok(()) };
        let l = a.right_lcm(&f.braid, &g.braid);
        prop_assert!(r.make_morphism(i, &l).is_ok());
        let q = a.left_quotient(&f.braid, &l).unwrap();
        prop_assert!(r.make_morphism(f.target, &q).is_ok());
        let gcd = a.left_gcd(&f.braid, &g.braid);
        prop_assert!(r.make_morphism(i, &gcd).is_ok());
    }

    #[test]
    fn alpha_is_multiplicative((sys, i, u, v) in case()) {
        let r = Ribbon::new(&sys);
        let a = r.artin;
        let Ok(w) = r.make_morphism(i, &reduced(&r, i, &a.from_word(&u).unwrap())) else { return Ok(()) };
        let inside: Vec<usize> = v.into_iter().filter(|&s| i.contains(s)).collect();
        let p = a.from_word(&inside).unwrap();
        prop_assert!(r.parabolic_split_check(i, &p, &w));
    }
}

fn words_up_to(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| (0..rank).map(move |s| [w.clone(), vec![s]].concat())).collect();
        all.extend(layer.iter().cloned());
    }
    all
}

#[test]
fn atoms_generate_short_morphisms() {
    for t in ["A2", "A3"] {
        let sys = CoxeterSystem::build(t).unwrap();
        let r = Ribbon::new(&sys);
        let a = Artin::new(&sys);
        let braids: BTreeSet<Braid> = words_up_to(sys.rank(), ATOM_LENGTH).iter().map(|w| a.from_word(w).unwrap()).collect();
        for bits in 0..(1u64 << sys.rank()) {
            let i = Subset(bits);
            let expected: BTreeSet<Braid> = braids
                .iter()
                .filter(|b| r.is_reduced(i, b) && a.conjugate_subset(i, b).is_some())
                .cloned()
                .collect();
            let listed: BTreeSet<Braid> = r
                .morphisms_from(i, ATOM_LENGTH)
                .into_iter()
                .map(|m| m.braid)
                .filter(|b| b.length() <= ATOM_LENGTH)
                .collect();
            assert_eq!(listed, expected, "{t} I={i}");
            let mut generated = BTreeSet::from([Braid::identity()]);
            let mut frontier = vec![r.identity(i)];
            while let Some(m) = frontier.pop() {
                for atom in r.atoms_from(m.target) {
                    let next = r.compose(&m, &atom).unwrap();
                    if next.braid.length() <= ATOM_LENGTH && generated.insert(next.braid.clone()) {
                        frontier.push(next);
                    }
                }
            }
            assert_eq!(generated, expected, "{t} I={i}");
        }
    }
}

#[test]
fn simple_morphisms_divide_the_garside_map() {
    for t in ["A3", "B3", "D4"] {
        let sys = CoxeterSystem::build(t).unwrap();
        let r = Ribbon::new(&sys);
        for bits in 0..(1u64 << sys.rank()) {
            let i = Subset(bits);
            let d = r.garside_map(i);
            for s in r.simple_morphisms_from(i) {
                assert!(r.artin.divides(&s.braid, &d.braid, Side::Left));
            }
        }
    }
}
