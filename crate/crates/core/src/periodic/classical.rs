//! Explicit good maximal elements in types `A`, `²A`, `B`, `D`, `²D`.
//!
//! Words are 1-based generator labels until they are turned into elements.

use crate::coxeter::{CoxeterSystem, Element, Family, Subset, Twisted};
use crate::error::{Error, Result};

use super::{certify, GoodCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classical {
    A,
    TwistedA,
    B,
    D,
    TwistedD,
}

impl Classical {
    pub fn of(sys: &CoxeterSystem) -> Option<(Classical, usize)> {
        let t = sys.cartan?;
        let twisted = !sys.phi.is_identity();
        let fam = match (t.family, twisted) {
            (Family::A, false) => Classical::A,
            (Family::A, true) => Classical::TwistedA,
            (Family::B, false) => Classical::B,
            (Family::D, false) => Classical::D,
            (Family::D, true) if t.twist == 2 => Classical::TwistedD,
            _ => return None,
        };
        Some((fam, t.rank))
    }
}

fn range_down(a: usize, b: usize) -> Vec<usize> {
    if a < b {
        vec![]
    } else {
        (b..=a).rev().collect()
    }
}

fn labels(lo: usize, hi: usize) -> Vec<usize> {
    if lo > hi {
        vec![]
    } else {
        (lo..=hi).collect()
    }
}

/// Type `A_n`: `v_d = s₁…s_{n−⌊d/2⌋}·s_n…s_{⌊(d+1)/2⌋}`.
pub fn a_v(n: usize, d: usize) -> Vec<usize> {
    let mut w = labels(1, n - d / 2);
    w.extend(range_down(n, d.div_ceil(2)));
    w
}

/// Type `A_n`, odd `d`: `v'_d = s₁…s_{n−⌊d/2⌋}`.
pub fn a_v_prime(n: usize, d: usize) -> Vec<usize> {
    labels(1, n - d / 2)
}

/// Type `A_n`: `J_d`.
pub fn a_j(n: usize, d: usize) -> Vec<usize> {
    labels(d.div_ceil(2) + 1, n - d / 2)
}

/// Type `B_n`, even `d`: `v_d = s_{n+1−d/2}…s₂·s₁·s₂…s_n`.
pub fn b_v(n: usize, d: usize) -> Vec<usize> {
    let mut w = range_down(n + 1 - d / 2, 2);
    w.push(1);
    w.extend(labels(2, n));
    w
}

pub fn b_j(n: usize, d: usize) -> Vec<usize> {
    labels(1, n - d / 2)
}

/// Type `D_n`, even `d`: `v_d = s_{n+1−d/2}…s₃·s₂s₁·s₃…s_n`.
pub fn d_v(n: usize, d: usize) -> Vec<usize> {
    let mut w = range_down(n + 1 - d / 2, 3);
    w.extend([2, 1]);
    w.extend(labels(3, n));
    w
}

pub fn d_j(n: usize, d: usize) -> Vec<usize> {
    if d == 2 * (n - 1) {
        vec![]
    } else {
        labels(1, n - d / 2)
    }
}

fn element(sys: &CoxeterSystem, word: &[usize]) -> Element {
    let w: Vec<usize> = word.iter().map(|l| l - 1).collect();
    sys.element(&w).expect("labels in range")
}

/// `w'_e` of type `A_n` (odd `e`): `(v'_{ke}φ)^k` when `k` is odd,
/// `v_{ke}^{k/2}` when `k` is even, with `k = ⌊(n+1)/e⌋`.
fn a_w_prime(sys: &CoxeterSystem, n: usize, e: usize) -> (Element, Subset) {
    let k = (n + 1) / e;
    let i = Subset::from_labels(&a_j(n, k * e));
    if k % 2 == 1 {
        let vp = Twisted { w: element(sys, &a_v_prime(n, k * e)), k: 1 };
        (sys.twisted_pow(&vp, k).w, i)
    } else {
        (element(sys, &a_v(n, k * e)).pow(k / 2), i)
    }
}

fn a_w(sys: &CoxeterSystem, n: usize, d: usize) -> (Element, Subset) {
    let k = (n + 1) / d;
    (element(sys, &a_v(n, k * d)).pow(k), Subset::from_labels(&a_j(n, k * d)))
}

fn bd_w(sys: &CoxeterSystem, k: usize, v: &[usize], j: &[usize]) -> (Element, Subset) {
    (element(sys, v).pow(k), Subset::from_labels(j))
}

/// The explicit element and subset for `d`, as group data.
pub fn classical_word(sys: &CoxeterSystem, d: u32) -> Result<(Element, Subset)> {
    let (fam, n) = Classical::of(sys).ok_or_else(|| Error::UnknownType(sys.name.clone()))?;
    let d = d as usize;
    let none = || Error::NotAdmissible(d as u32);
    if d == 0 {
        return Err(none());
    }
    if d == 1 {
        if sys.coset_zeta_rank(1, 1) == 0 {
            return Err(none());
        }
        return Ok((sys.identity(), Subset::EMPTY));
    }
    match fam {
        Classical::A => {
            if d > n + 1 {
                return Err(none());
            }
            Ok(a_w(sys, n, d))
        }
        Classical::TwistedA => {
            if d.is_multiple_of(4) && d <= n + 1 {
                Ok(a_w(sys, n, d))
            } else if d % 4 == 2 && d <= 2 * (n + 1) {
                Ok(a_w_prime(sys, n, d / 2))
            } else if d % 2 == 1 && 2 * d <= n + 1 {
                let (w, i) = a_w(sys, n, 2 * d);
                Ok((w.pow(2), i))
            } else {
                Err(none())
            }
        }
        Classical::B => {
            if (d % 2 == 1 && d > n) || d > 2 * n {
                return Err(none());
            }
            let k = if d.is_multiple_of(2) { 2 * n / d } else { 2 * (n / d) };
            Ok(bd_w(sys, k, &b_v(n, k * d), &b_j(n, k * d)))
        }
        Classical::D => {
            if (d % 2 == 1 && d > n) || d > 2 * (n - 1) && n % d != 0 {
                return Err(none());
            }
            if n % d == 0 {
                let mut wn = labels(1, n);
                wn.extend(labels(2, n - 1));
                return Ok((element(sys, &wn).pow(n / d), Subset::EMPTY));
            }
            let k = if d.is_multiple_of(2) { (2 * n - 2) / d } else { 2 * ((n - 1) / d) };
            Ok(bd_w(sys, k, &d_v(n, k * d), &d_j(n, k * d)))
        }
        Classical::TwistedD => {
            if sys.coset_zeta_rank(1, d as u64) == 0 {
                return Err(none());
            }
            if (2 * n) % d == 0 && (2 * n / d) % 2 == 1 {
                let mut w2n = vec![1];
                w2n.extend(labels(3, n));
                let x = Twisted { w: element(sys, &w2n), k: 1 };
                return Ok((sys.twisted_pow(&x, 2 * n / d).w, Subset::EMPTY));
            }
            let k = if d.is_multiple_of(2) { (2 * n - 2) / d } else { 2 * ((n - 1) / d) };
            if k == 0 {
                return Err(none());
            }
            Ok(bd_w(sys, k, &d_v(n, k * d), &d_j(n, k * d)))
        }
    }
}

/// Verified certificate for the explicit element.
pub fn construct_classical(sys: &CoxeterSystem, d: u32) -> Result<GoodCertificate> {
    let (w, i) = classical_word(sys, d)?;
    certify(sys, d, i, &w)
}
