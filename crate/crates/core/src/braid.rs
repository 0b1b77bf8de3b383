//! The positive braid monoid `B⁺` with its Garside structure.
//!
//! Braids are kept in left greedy normal form: a sequence of non-identity
//! simple elements `(x₁, …, x_k)` where every left descent of `x_{i+1}` is a
//! right descent of `x_i`.

use std::fmt;

use crate::coxeter::{Automorphism, CoxeterSystem, Element, Side, Subset};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Braid {
    pub factors: Vec<Element>,
}

impl Braid {
    pub fn identity() -> Braid {
        Braid { factors: vec![] }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Canonical length `lS`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Number of atoms.
    pub fn length(&self) -> usize {
        self.factors.iter().map(|f| f.length()).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() <= 1
    }
}

/// Garside operations of `B⁺` for a fixed system.
#[derive(Clone, Copy)]
pub struct Artin<'a> {
    pub sys: &'a CoxeterSystem,
}

pub struct Shown<'a> {
    artin: Artin<'a>,
    braid: &'a Braid,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.braid.is_identity() {
            return write!(f, ".");
        }
        let parts: Vec<String> = self.braid.factors.iter().map(|x| self.artin.sys.element_string(x)).collect();
        write!(f, "{}", parts.join(" . "))
    }
}

impl<'a> Artin<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Artin<'a> {
        Artin { sys }
    }

    /// Normal form rendered as factor words separated by `" . "`.
    pub fn show(self, b: &'a Braid) -> Shown<'a> {
        Shown { artin: self, braid: b }
    }

    /// Concatenated least reduced words of the factors.
    pub fn word(&self, b: &Braid) -> Vec<usize> {
        b.factors.iter().flat_map(|f| self.sys.reduced_word(f)).collect()
    }

    pub fn word_string(&self, b: &Braid) -> String {
        self.sys.word_string(&self.word(b))
    }

    /// Reduced words of the factors, as used in JSON output.
    pub fn factor_words(&self, b: &Braid) -> Vec<String> {
        b.factors.iter().map(|f| self.sys.element_string(f)).collect()
    }

    pub fn atom(&self, i: usize) -> Braid {
        Braid { factors: vec![self.sys.gen(i).clone()] }
    }

    /// The lift of a group element.
    pub fn simple(&self, w: &Element) -> Braid {
        if w.is_identity() {
            Braid::identity()
        } else {
            Braid { factors: vec![w.clone()] }
        }
    }

    pub fn delta(&self) -> Braid {
        self.simple(&self.sys.w0())
    }

    pub fn delta_of(&self, i: Subset) -> Braid {
        self.simple(&self.sys.longest(i))
    }

    /// `π_I = Δ_I²`.
    pub fn pi(&self, i: Subset) -> Braid {
        let wi = self.sys.longest(i);
        if wi.is_identity() {
            Braid::identity()
        } else {
            Braid { factors: vec![wi.clone(), wi] }
        }
    }

    /// `π/π_I`, the positive quotient `π_I⁻¹π`.
    pub fn pi_over(&self, i: Subset) -> Braid {
        let full = Subset::full(self.sys.rank());
        self.left_quotient(&self.pi(i), &self.pi(full)).expect("π_I divides π")
    }

    pub fn from_word(&self, word: &[usize]) -> Result<Braid> {
        let mut f = Vec::with_capacity(word.len());
        for &i in word {
            if i >= self.sys.rank() {
                return Err(Error::IndexOutOfRange(i + 1));
            }
            self.push_simple(&mut f, self.sys.gen(i).clone());
        }
        Ok(Braid { factors: f })
    }

    /// Normal form of a sequence of simples.
    pub fn from_simples<I: IntoIterator<Item = Element>>(&self, it: I) -> Braid {
        let mut f = Vec::new();
        for x in it {
            self.push_simple(&mut f, x);
        }
        Braid { factors: f }
    }

    /// The element of W represented by `b`.
    pub fn image(&self, b: &Braid) -> Element {
        b.factors.iter().fold(self.sys.identity(), |acc, f| acc.compose(f))
    }

    /// Makes `(x, y)` normal by moving left descents of `y` into `x`.
    pub fn normalize_pair(&self, x: &Element, y: &Element) -> (Element, Element) {
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            let ly = self.sys.left_descents(&y);
            match ly.iter().find(|&s| !x.has_right_descent(s)) {
                None => return (x, y),
                Some(s) => {
                    x = self.sys.rmul_gen(&x, s);
                    y = self.sys.lmul_gen(s, &y);
                }
            }
        }
    }

    /// Right multiplication of a normal form by a simple, with the domino
    /// pass from the right.
    fn push_simple(&self, f: &mut Vec<Element>, s: Element) {
        if s.is_identity() {
            return;
        }
        f.push(s);
        let mut i = f.len() - 1;
        while i > 0 {
            let (a, b) = self.normalize_pair(&f[i - 1], &f[i]);
            if a == f[i - 1] {
                break;
            }
            f[i - 1] = a;
            f[i] = b;
            i -= 1;
        }
        while f.last().is_some_and(|x| x.is_identity()) {
            f.pop();
        }
        debug_assert!(f.iter().all(|x| !x.is_identity()));
    }

    pub fn product(&self, a: &Braid, b: &Braid) -> Braid {
        let mut f = a.factors.clone();
        for x in &b.factors {
            self.push_simple(&mut f, x.clone());
        }
        Braid { factors: f }
    }

    pub fn product_all<'b, I: IntoIterator<Item = &'b Braid>>(&self, it: I) -> Braid {
        it.into_iter().fold(Braid::identity(), |acc, b| self.product(&acc, b))
    }

    pub fn power(&self, a: &Braid, n: usize) -> Braid {
        let mut acc = Braid::identity();
        for _ in 0..n {
            acc = self.product(&acc, a);
        }
        acc
    }

    /// `u ≼ v` for simples (prefix in the weak order).
    pub fn simple_prefix(&self, u: &Element, v: &Element) -> bool {
        u.inverse().compose(v).length() + u.length() == v.length()
    }

    /// Left gcd of two simples.
    pub fn simple_gcd(&self, u: &Element, v: &Element) -> Element {
        let mut g = self.sys.identity();
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            let common = Subset(self.sys.left_descents(&u).0 & self.sys.left_descents(&v).0);
            match common.iter().next() {
                None => return g,
                Some(s) => {
                    g = self.sys.rmul_gen(&g, s);
                    u = self.sys.lmul_gen(s, &u);
                    v = self.sys.lmul_gen(s, &v);
                }
            }
        }
    }

    /// Right gcd of two simples.
    pub fn simple_right_gcd(&self, u: &Element, v: &Element) -> Element {
        self.simple_gcd(&u.inverse(), &v.inverse()).inverse()
    }

    /// Right lcm of two simples in the prefix order.
    pub fn simple_join(&self, u: &Element, v: &Element) -> Element {
        let w0 = self.sys.w0();
        let du = u.inverse().compose(&w0);
        let dv = v.inverse().compose(&w0);
        let g = self.simple_right_gcd(&du, &dv);
        w0.compose(&g.inverse())
    }

    /// `u\v = u⁻¹·(u ∨ v)`.
    pub fn simple_complement(&self, u: &Element, v: &Element) -> Element {
        u.inverse().compose(&self.simple_join(u, v))
    }

    pub fn head(&self, a: &Braid) -> Result<Element> {
        a.factors.first().cloned().ok_or(Error::HeadOfIdentity)
    }

    pub fn tail(&self, a: &Braid) -> Braid {
        Braid { factors: a.factors.iter().skip(1).cloned().collect() }
    }

    /// `α(a)`, the left gcd with `Δ`; identity for the identity braid.
    pub fn alpha(&self, a: &Braid) -> Element {
        a.factors.first().cloned().unwrap_or_else(|| self.sys.identity())
    }

    /// `h⁻¹a` for a simple `h` with `h ≼ a`.
    pub fn left_div_simple(&self, a: &Braid, h: &Element) -> Option<Braid> {
        if h.is_identity() {
            return Some(a.clone());
        }
        let first = a.factors.first()?;
        if !self.simple_prefix(h, first) {
            return None;
        }
        let rest = h.inverse().compose(first);
        let mut f = Vec::with_capacity(a.factors.len());
        self.push_simple(&mut f, rest);
        for x in &a.factors[1..] {
            self.push_simple(&mut f, x.clone());
        }
        Some(Braid { factors: f })
    }

    /// `c` with `b = a·c`.
    pub fn left_quotient(&self, a: &Braid, b: &Braid) -> Result<Braid> {
        let mut cur = b.clone();
        for x in &a.factors {
            cur = self.left_div_simple(&cur, x).ok_or(Error::NotADivisor)?;
        }
        Ok(cur)
    }

    /// Reverse–invert anti-automorphism.
    pub fn reverse(&self, a: &Braid) -> Braid {
        self.from_simples(a.factors.iter().rev().map(|x| x.inverse()))
    }

    /// `c` with `b = c·a`.
    pub fn right_quotient(&self, b: &Braid, a: &Braid) -> Result<Braid> {
        let c = self.left_quotient(&self.reverse(a), &self.reverse(b))?;
        Ok(self.reverse(&c))
    }

    pub fn divides(&self, a: &Braid, b: &Braid, side: Side) -> bool {
        match side {
            Side::Left => self.left_quotient(a, b).is_ok(),
            Side::Right => self.right_quotient(b, a).is_ok(),
        }
    }

    /// Left case: `c` with `b = a·c`; right case: `c` with `b = c·a`.
    pub fn quotient(&self, a: &Braid, b: &Braid, side: Side) -> Result<Braid> {
        match side {
            Side::Left => self.left_quotient(a, b),
            Side::Right => self.right_quotient(b, a),
        }
    }

    pub fn left_gcd(&self, a: &Braid, b: &Braid) -> Braid {
        let mut a = a.clone();
        let mut b = b.clone();
        let mut g = Vec::new();
        loop {
            if a.is_identity() || b.is_identity() {
                break;
            }
            let h = self.simple_gcd(&a.factors[0], &b.factors[0]);
            if h.is_identity() {
                break;
            }
            a = self.left_div_simple(&a, &h).unwrap();
            b = self.left_div_simple(&b, &h).unwrap();
            self.push_simple(&mut g, h);
        }
        Braid { factors: g }
    }

    /// `(x\b, b\x)` for a simple `x` and a braid `b`.
    fn complement_simple_braid(&self, x: &Element, b: &Braid) -> (Braid, Element) {
        let mut cur = x.clone();
        let mut out = Vec::new();
        for bi in &b.factors {
            let c = self.simple_complement(&cur, bi);
            let back = self.simple_complement(bi, &cur);
            self.push_simple(&mut out, c);
            cur = back;
        }
        (Braid { factors: out }, cur)
    }

    /// Right complement `a\b`, so that `a·(a\b)` is the right lcm.
    pub fn complement(&self, a: &Braid, b: &Braid) -> Braid {
        let mut cur = b.clone();
        for x in &a.factors {
            cur = self.complement_simple_braid(x, &cur).0;
        }
        cur
    }

    pub fn right_lcm(&self, a: &Braid, b: &Braid) -> Braid {
        self.product(a, &self.complement(a, b))
    }

    pub fn right_gcd(&self, a: &Braid, b: &Braid) -> Braid {
        self.reverse(&self.left_gcd(&self.reverse(a), &self.reverse(b)))
    }

    pub fn left_lcm(&self, a: &Braid, b: &Braid) -> Braid {
        self.reverse(&self.right_lcm(&self.reverse(a), &self.reverse(b)))
    }

    pub fn apply_automorphism(&self, f: &Automorphism, a: &Braid) -> Braid {
        if f.is_identity() {
            return a.clone();
        }
        Braid { factors: a.factors.iter().map(|x| f.apply(x)).collect() }
    }

    /// `φ^k(a)`.
    pub fn apply_phi(&self, k: i64, a: &Braid) -> Braid {
        Braid { factors: a.factors.iter().map(|x| self.sys.phi_apply(k, x)).collect() }
    }

    /// The braid part of `(bψ)^n`, that is `b·ψ(b)·…·ψ^{n−1}(b)`.
    pub fn twisted_power(&self, b: &Braid, n: usize, f: &Automorphism) -> Braid {
        let mut acc = Braid::identity();
        let mut cur = b.clone();
        for _ in 0..n {
            acc = self.product(&acc, &cur);
            cur = self.apply_automorphism(f, &cur);
        }
        acc
    }

    /// Right conjugate `I^b = b⁻¹Ib`; `None` if some atom of `I` is not
    /// conjugated to an atom. Each normal-form factor of a conjugating braid
    /// conjugates its source into `S`, so the check is done factor by factor.
    pub fn conjugate_subset(&self, i: Subset, b: &Braid) -> Option<Subset> {
        let mut cur = i;
        for f in &b.factors {
            cur = self.sys.conjugate_subset(cur, f)?;
        }
        Some(cur)
    }

    /// All simple prefixes of a simple element, in canonical order
    /// (lexicographic on least reduced words), identity excluded.
    pub fn simple_prefixes(&self, w: &Element) -> Vec<Element> {
        let r = self.sys.rank();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![self.sys.identity()];
        while let Some(u) = stack.pop() {
            for s in 0..r {
                if u.has_right_descent(s) {
                    continue;
                }
                let us = self.sys.rmul_gen(&u, s);
                if self.simple_prefix(&us, w) && seen.insert(us.key(r)) {
                    out.push(us.clone());
                    stack.push(us);
                }
            }
        }
        let mut keyed: Vec<(Vec<usize>, Element)> = out.into_iter().map(|u| (self.sys.reduced_word(&u), u)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|x| x.1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with<F: FnOnce(Artin)>(t: &str, f: F) {
        let s = CoxeterSystem::build(t).unwrap();
        f(Artin::new(&s));
    }

    fn b(a: &Artin, w: &str) -> Braid {
        a.from_word(&crate::format::parse_word(w, a.sys.rank()).unwrap()).unwrap()
    }

    #[test]
    fn normal_forms_a2() {
        with("A2", |a| {
            assert_eq!(a.show(&b(&a, "1211")).to_string(), "121 . 1");
            assert_eq!(b(&a, "121"), b(&a, "212"));
            assert_eq!(a.product(&b(&a, "1"), &b(&a, "21")), a.delta());
            assert_eq!(a.show(&a.product(&b(&a, "12"), &b(&a, "12"))).to_string(), "121 . 2");
            assert_eq!(a.power(&b(&a, "12"), 3), a.pi(Subset::full(2)));
        });
    }

    #[test]
    fn divisibility_a2() {
        with("A2", |a| {
            assert_eq!(a.left_quotient(&b(&a, "1"), &b(&a, "121")).unwrap(), b(&a, "21"));
            assert!(!a.divides(&b(&a, "2"), &b(&a, "12"), Side::Left));
            assert!(a.divides(&b(&a, "2"), &b(&a, "12"), Side::Right));
            assert_eq!(a.right_quotient(&b(&a, "12"), &b(&a, "2")).unwrap(), b(&a, "1"));
            assert!(a.left_gcd(&b(&a, "12"), &b(&a, "21")).is_identity());
            assert_eq!(a.right_lcm(&b(&a, "1"), &b(&a, "2")), a.delta());
            let x = b(&a, "1221");
            assert_eq!(a.right_lcm(&x, &x), x);
        });
    }

    #[test]
    fn head_and_tail() {
        with("A2", |a| {
            let x = b(&a, "112");
            assert_eq!(a.sys.element_string(&a.head(&x).unwrap()), "1");
            assert_eq!(a.tail(&x), b(&a, "12"));
            assert!(a.head(&Braid::identity()).is_err());
        });
    }

    #[test]
    fn pi_is_central() {
        for t in ["B2", "A3"] {
            with(t, |a| {
                let pi = a.pi(Subset::full(a.sys.rank()));
                for s in 0..a.sys.rank() {
                    let x = a.atom(s);
                    assert_eq!(a.product(&pi, &x), a.product(&x, &pi));
                }
            });
        }
    }

    #[test]
    fn phi_on_braids() {
        with("2A3", |a| {
            assert_eq!(a.apply_phi(1, &b(&a, "12")), b(&a, "32"));
            assert_eq!(a.apply_phi(1, &a.delta()), a.delta());
        });
    }

    #[test]
    fn conjugate_subset_a2() {
        with("A2", |a| {
            assert_eq!(a.conjugate_subset(Subset::single(0), &b(&a, "21")), Some(Subset::single(1)));
            assert_eq!(a.conjugate_subset(Subset::single(0), &b(&a, "2")), None);
        });
    }

    #[test]
    fn prefixes() {
        with("A2", |a| {
            let p = a.simple_prefixes(&a.sys.element(&[0, 1]).unwrap());
            let words: Vec<String> = p.iter().map(|x| a.sys.element_string(x)).collect();
            assert_eq!(words, vec!["1", "12"]);
        });
    }
}
