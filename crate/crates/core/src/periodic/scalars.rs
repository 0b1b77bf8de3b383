//! Restriction of scalars `Wⁿ·σ` and good elements for the eigenvalues
//! `ζ_d^k`.

use crate::braid::{Artin, Braid};
use crate::coxeter::{gcd, CoxeterSystem, Element, Frac, Subset, Twisted};
use crate::error::{Error, Result};

use super::{certify, coset_element, even_odd_structure, good_certificate, GoodCertificate, Limits, Structure};

/// The coset `Wⁿ·σ` where `σ(w₀, …, w_{n−1}) = (w₁, …, w_{n−1}, φ(w₀))σ`.
/// Generator `s` of block `b` has index `b·r + s`.
pub fn product_coset(sys: &CoxeterSystem, n: usize) -> Result<CoxeterSystem> {
    if n == 0 {
        return Err(Error::Other("empty product".into()));
    }
    let r = sys.rank();
    let mut m = vec![vec![2u32; n * r]; n * r];
    for b in 0..n {
        for i in 0..r {
            for j in 0..r {
                m[b * r + i][b * r + j] = sys.coxeter_matrix[i][j];
            }
        }
    }
    let perm: Vec<usize> =
        (0..n * r).map(|g| if g >= r { g - r } else { (n - 1) * r + sys.phi.perm[g] }).collect();
    let mut degrees = Vec::new();
    let mut factors = Vec::new();
    for (&deg, &eps) in sys.degrees.iter().zip(&sys.factors) {
        for j in 0..n {
            degrees.push(deg);
            let root = Frac::new(eps.num as i64, eps.den * n as u64);
            factors.push(root.mul(Frac::new(j as i64, n as u64)));
        }
    }
    let name = format!("{}^{}.σ", sys.name, n);
    CoxeterSystem::from_matrix(&name, m, &perm, degrees, factors)
}

/// Element of `Wⁿ` from its coordinates.
fn block_element(prod: &CoxeterSystem, sys: &CoxeterSystem, blocks: &[Element]) -> Element {
    let r = sys.rank();
    let word: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, w)| sys.reduced_word(w).into_iter().map(move |s| b * r + s))
        .collect();
    prod.element(&word).expect("generators in range")
}

#[derive(Clone, Debug)]
pub struct ScalarRestriction {
    pub system: CoxeterSystem,
    /// The power `m` of `φ` used for the base coset.
    pub m: u32,
    pub base: GoodCertificate,
    /// Coordinates `(w₀, …, w_{n−1})`.
    pub blocks: Vec<Element>,
    pub cert: GoodCertificate,
}

/// `m` with `m(n/k) ≡ 1 (mod d/k)` and `gcd(m, δ) = 1`.
fn choose_m(n: u64, d: u64, delta: u64) -> u64 {
    let k = gcd(n, d);
    let (nn, dd) = (n / k, d / k);
    (1..=dd * delta.max(1) + 1).find(|&m| (m * nn) % dd == 1 % dd && gcd(m, delta) == 1).expect("m exists")
}

/// A `ζ_d`-good element of `Wⁿ·σ` built from one of `W·φ^m` at `d/k`.
pub fn restriction_of_scalars(sys: &CoxeterSystem, n: usize, d: u32, limits: &Limits) -> Result<ScalarRestriction> {
    let k = gcd(n as u64, d as u64) as usize;
    let dk = d as usize / k;
    let nk = n / k;
    let m = choose_m(n as u64, d as u64, sys.delta() as u64) as i64;
    let base_sys = sys.with_twist_power(m);
    let base = good_certificate(&base_sys, dk as u32, limits)?;
    let prod = product_coset(sys, n)?;
    let v = base.w.clone();
    let mut blocks = vec![sys.identity(); n];
    if k == 1 || dk.is_multiple_of(2) {
        for i in 0..nk {
            blocks[i * k] = sys.phi_apply(i as i64 * m, &v);
        }
    } else {
        let Structure::Odd { u: v1, .. } = even_odd_structure(&base_sys, &base)? else {
            return Err(Error::Other("expected an odd structure".into()));
        };
        let half = (dk as i64 - 1) / 2;
        let delta = crate::conjcat::delta_automorphism(sys);
        let v2 = delta.apply(&sys.phi_apply(m * half, &v1));
        if v1.compose(&sys.phi_apply(m, &v2)) != v {
            return Err(Error::Other("odd splitting does not recover v".into()));
        }
        for i in 0..nk {
            blocks[i * k] = sys.phi_apply(i as i64 * m, &v2);
            blocks[i * k + k / 2] = sys.phi_apply((i as i64 + 1) * m, &v1);
        }
    }
    let r = sys.rank();
    let mut cur = base.i;
    let mut subset = Subset::EMPTY;
    for (j, b) in blocks.iter().enumerate() {
        subset = subset.union(Subset(cur.0 << (j * r)));
        cur = sys.conjugate_subset(cur, b).ok_or(Error::ConjugatesOutOfS)?;
    }
    let w = block_element(&prod, sys, &blocks);
    let cert = certify(&prod, d, subset, &w)?;
    Ok(ScalarRestriction { system: prod, m: m as u32, base, blocks, cert })
}

/// Lift for the eigenvalue `ζ_d^k`.
#[derive(Clone, Debug)]
pub struct PowerCertificate {
    pub k: u32,
    pub d: u32,
    pub i: Subset,
    pub w: Element,
    pub braid: Braid,
}

/// `k'` with `kk' ≡ 1 (mod d)`.
pub fn inverse_mod(k: u32, d: u32) -> Option<u32> {
    (1..=d).find(|&x| (k as u64 * x as u64) % d as u64 == 1 % d as u64)
}

/// From a `ζ_d`-good element `w₁φ₁` of `W·φ^{k'}`, the element `w` with
/// `(w₁φ₁)^k = wφ^{1+dd'}`, checked against `l(w) = (2k/d)·l(w_I⁻¹w₀)`,
/// `l((wφ)^i φ^{-i}) = i·l(w)` for `2ik ≤ d` and `(bφ)^d = φ^d(π/π_I)^k`.
pub fn construct_for_power(sys: &CoxeterSystem, k: u32, d: u32, base: &GoodCertificate) -> Result<PowerCertificate> {
    let bad = |m: &str| Error::InvalidCertificate(m.to_string());
    if k == 0 || gcd(k as u64, d as u64) != 1 || 2 * k > d {
        return Err(Error::Other(format!("k = {k} is not prime to d = {d} with 2k ≤ d")));
    }
    let kp = inverse_mod(k, d).expect("k is invertible");
    let phi1 = sys.phi.pow(kp as i64);
    if base.d != d || base.twist != phi1.perm {
        return Err(bad("base certificate is not for W·φ^k' at d"));
    }
    let a = Artin::new(sys);
    let x1 = Twisted { w: base.w.clone(), k: kp % sys.delta() };
    let w = sys.twisted_pow(&x1, k as usize).w;
    let braid = a.twisted_power(&base.braid, k as usize, &phi1);
    if braid != a.simple(&w) {
        return Err(bad("braid is not the lift of w"));
    }
    let i = base.i;
    let x = coset_element(sys, &w);
    if !i.iter().all(|s| sys.simple_image(&x, s).is_some_and(|t| i.contains(t))) {
        return Err(bad("wφ does not stabilize I"));
    }
    let big = sys.npos() - sys.parabolic_npos(i);
    if w.length() * d as usize != 2 * k as usize * big {
        return Err(bad("length law"));
    }
    let lw = w.length();
    if !(1..).take_while(|e| 2 * e * k as usize <= d as usize).all(|e| sys.twisted_pow(&x, e).w.length() == e * lw) {
        return Err(bad("power lengths"));
    }
    let target = a.power(&a.pi_over(i), k as usize);
    if a.twisted_power(&braid, d as usize, &sys.phi) != target {
        return Err(bad("braid identity"));
    }
    Ok(PowerCertificate { k, d, i, w, braid })
}
