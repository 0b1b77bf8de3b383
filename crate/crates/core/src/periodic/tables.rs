//! Enumeration of all `ζ_d`-good maximal elements of a coset, grouped by
//! `I`, with the orders of the relative groups.

use std::collections::BTreeMap;

use nalgebra::{Complex, DMatrix};
use rayon::prelude::*;

use crate::braid::Artin;
use crate::coxeter::{eigen_multiplicity, ClassEnumeration, CoxeterSystem, Element, Frac, Subset, Twisted};
use crate::error::{Error, Result};

use super::{certify, classical_word, coset_element, fixed_on_parabolic, good_checks, GoodCertificate, TOLERANCE};

#[derive(Clone, Debug)]
pub struct Limits {
    pub class_cap: usize,
    pub centralizer_cap: usize,
    pub max_representatives: usize,
    /// Compute relative-group orders and the mismatch flag.
    pub sections: bool,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { class_cap: 5_000_000, centralizer_cap: 2_000_000, max_representatives: 3, sections: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodRow {
    pub i: Subset,
    pub length: usize,
    pub count: usize,
    /// Canonical representatives (least reduced words, sorted).
    pub representatives: Vec<Element>,
    pub relative_order: Option<u128>,
    /// `|C_{W'}(wφ)|` is smaller than the relative group, `W' = C_W(V₁)`.
    pub mismatch: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct GoodTable {
    pub system: String,
    pub d: u32,
    pub zeta_rank: usize,
    pub class_size: usize,
    pub rows: Vec<GoodRow>,
}

impl GoodTable {
    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.count).sum()
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "I": r.i.labels(),
                    "length": r.length,
                    "count": r.count,
                    "representatives": r.representatives.iter().map(|w| sys.element_string(w)).collect::<Vec<_>>(),
                    "relative_order": r.relative_order.map(|o| o.to_string()),
                    "mismatch": r.mismatch,
                })
            })
            .collect();
        serde_json::json!({
            "type": self.system,
            "d": self.d,
            "zeta_rank": self.zeta_rank,
            "class_size": self.class_size,
            "count": self.total(),
            "rows": rows,
        })
    }
}

/// Key for the choice of the target class: an element of `Wφ` with the
/// largest `ζ_d`-eigenspace and, among those, the largest fixed space.
fn class_key(sys: &CoxeterSystem, w: &Element, d: u32, rank: usize) -> Option<(usize, Box<[u16]>)> {
    let x = coset_element(sys, w);
    let m = sys.matrix_of(&x);
    let z = eigen_multiplicity(&m, Frac::new(1, d as u64), TOLERANCE).ok()?.multiplicity;
    if z != rank {
        return None;
    }
    let f = eigen_multiplicity(&m, Frac::one(), TOLERANCE).ok()?.multiplicity;
    Some((f, w.key(sys.rank())))
}

fn better(a: Option<(usize, Box<[u16]>)>, b: Option<(usize, Box<[u16]>)>) -> Option<(usize, Box<[u16]>)> {
    match (a, b) {
        (None, y) => y,
        (x, None) => x,
        (Some(x), Some(y)) => {
            // larger fixed space first, then smaller key
            if (y.0, std::cmp::Reverse(&y.1)) > (x.0, std::cmp::Reverse(&x.1)) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Representative of the class of `ζ_d`-maximal elements with the largest
/// fixed space.
pub fn target_class_representative(sys: &CoxeterSystem, d: u32) -> Result<Twisted> {
    let r = sys.coset_zeta_rank(1, d as u64);
    if r == 0 {
        return Err(Error::NotAdmissible(d));
    }
    let best = sys.fold_elements(|| None, |acc, w| better(acc, class_key(sys, w, d, r)), better);
    let (_, key) = best.ok_or_else(|| Error::Other(format!("no element with ζ_{d}-rank {r}")))?;
    Ok(coset_element(sys, &sys.from_key(&key)))
}

/// The subset `I` pinned by `(bφ)^d = φ^d·π/π_I`, if any.
fn subset_from_braid_identity(sys: &CoxeterSystem, w: &Element, d: u32) -> Option<Subset> {
    let a = Artin::new(sys);
    let x = a.twisted_power(&a.simple(w), d as usize, &sys.phi);
    let full = Subset::full(sys.rank());
    let pi_i = a.right_quotient(&a.pi(full), &x).ok()?;
    let i = match pi_i.factors.first() {
        None => Subset::EMPTY,
        Some(f) => sys.left_descents(f),
    };
    (a.pi(i) == pi_i).then_some(i)
}

/// All `ζ_d`-good maximal elements of `Wφ`, grouped by `I`.
pub fn classify_good(sys: &CoxeterSystem, d: u32, limits: &Limits) -> Result<GoodTable> {
    let r = sys.coset_zeta_rank(1, d as u64);
    if r == 0 {
        return Err(Error::NotAdmissible(d));
    }
    if d == 1 {
        let x = coset_element(sys, &sys.identity());
        let class = sys.enumerate_class(&x, limits.class_cap)?;
        let relative_order = limits.sections.then(|| sys.order() / class.len() as u128);
        return Ok(GoodTable {
            system: sys.name.clone(),
            d,
            zeta_rank: r,
            class_size: class.len(),
            rows: vec![GoodRow {
                i: Subset::EMPTY,
                length: 0,
                count: 1,
                representatives: vec![sys.identity()],
                relative_order,
                mismatch: limits.sections.then_some(false),
            }],
        });
    }
    let x0 = target_class_representative(sys, d)?;
    let e = eigen_multiplicity(&sys.matrix_of(&x0), Frac::new(1, d as u64), TOLERANCE)?;
    let n_i = sys.roots_orthogonal_to(&e.basis, 1e-6).len();
    let twice = 2 * (sys.npos() - n_i);
    if !twice.is_multiple_of(d as usize) {
        return Err(Error::Other("length 2(N − N_I)/d is not an integer".into()));
    }
    let length = twice / d as usize;
    let class = sys.enumerate_class(&x0, limits.class_cap)?;
    let candidates = sys.class_elements_at_length(&class, length);
    let found: Vec<Option<(Subset, Element)>> = candidates
        .par_iter()
        .map(|x| {
            let w = &x.w;
            if !sys.twisted_pow(x, d as usize).w.is_identity() {
                return None;
            }
            let half = d as usize / 2;
            if !(1..=half).all(|e| sys.twisted_pow(x, e).w.length() == e * length) {
                return None;
            }
            let i = subset_from_braid_identity(sys, w, d)?;
            if sys.parabolic_npos(i) != n_i || !good_checks(sys, d, i, w).good() {
                return None;
            }
            let m = super::maximality(sys, d, i, w, 0).ok()?;
            m.eigen_criterion.then(|| (i, w.clone()))
        })
        .collect();
    let mut groups: BTreeMap<Subset, Vec<Element>> = BTreeMap::new();
    for (i, w) in found.into_iter().flatten() {
        groups.entry(i).or_default().push(w);
    }
    let mut rows = Vec::new();
    for (i, ws) in groups {
        let (relative_order, mismatch) = if limits.sections {
            let s = section_in_class(sys, &class, i, &ws[0], limits.centralizer_cap)?;
            (Some(s.order), s.mismatch)
        } else {
            (None, None)
        };
        rows.push(GoodRow {
            i,
            length,
            count: ws.len(),
            representatives: ws.into_iter().take(limits.max_representatives).collect(),
            relative_order,
            mismatch,
        });
    }
    Ok(GoodTable { system: sys.name.clone(), d, zeta_rank: r, class_size: class.len(), rows })
}

/// A certificate for some `ζ_d`-good maximal element: the explicit one for
/// classical types, else the first representative of the enumeration.
pub fn good_certificate(sys: &CoxeterSystem, d: u32, limits: &Limits) -> Result<GoodCertificate> {
    if let Ok((w, i)) = classical_word(sys, d) {
        if let Ok(c) = certify(sys, d, i, &w) {
            return Ok(c);
        }
    }
    let quiet = Limits { sections: false, ..limits.clone() };
    let t = classify_good(sys, d, &quiet)?;
    let row = t.rows.first().ok_or(Error::NotAdmissible(d))?;
    certify(sys, d, row.i, &row.representatives[0])
}

/// Section of `N_W(V)/C_W(V)` inside `C_W(wφ)`: the `v ∈ C_W(wφ)` mapping
/// the simple roots of `I` onto themselves.
#[derive(Clone, Debug)]
pub struct Section {
    pub order: u128,
    pub centralizer_order: u128,
    /// Listed when the centralizer was enumerated.
    pub elements: Option<Vec<Element>>,
    /// `|C_{W'}(wφ)| < order`, with `W' = C_W(V₁)`; `None` when not computed.
    pub mismatch: Option<bool>,
}

pub fn relative_section(sys: &CoxeterSystem, cert: &GoodCertificate, cap: usize) -> Result<Section> {
    let x = coset_element(sys, &cert.w);
    let class = sys.enumerate_class(&x, cap.max(1 << 22))?;
    section_in_class(sys, &class, cert.i, &cert.w, cap)
}

fn section_in_class(
    sys: &CoxeterSystem,
    class: &ClassEnumeration,
    i: Subset,
    w: &Element,
    cap: usize,
) -> Result<Section> {
    let centralizer_order = sys.order() / class.len() as u128;
    if i.is_empty() && centralizer_order > cap as u128 {
        return Ok(Section { order: centralizer_order, centralizer_order, elements: None, mismatch: Some(false) });
    }
    let x = coset_element(sys, w);
    let idx = class.position(&w.key(sys.rank())).ok_or_else(|| Error::Other("element not in class".into()))?;
    let t = sys.transversal(class, idx);
    let ti = t.inverse();
    let cent: Vec<Element> =
        sys.centralizer(class, cap)?.par_iter().map(|c| t.compose(c).compose(&ti)).collect();
    debug_assert!(cent.iter().all(|c| sys.conjugate(c, &x) == x));
    let rank = sys.rank();
    let elements: Vec<Element> = cent
        .iter()
        .filter(|v| {
            let inv = v.inverse();
            i.iter().all(|s| {
                let t = inv.apply(s as u16) as usize;
                t < rank && i.contains(t)
            })
        })
        .cloned()
        .collect();
    let order = elements.len() as u128;
    let v1 = fixed_on_parabolic(sys, &x, i)?;
    let fixing = cent
        .par_iter()
        .filter(|g| {
            let m = sys.matrix_of(&Twisted { w: (*g).clone(), k: 0 });
            let mc: DMatrix<Complex<f64>> = m.map(|a| Complex::new(a, 0.0));
            v1.iter().all(|v| (&mc * v - v).norm() < 1e-6)
        })
        .count() as u128;
    Ok(Section { order, centralizer_order, elements: Some(elements), mismatch: Some(fixing < order) })
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Order of a named reflection group: `Zn`, `G(de,e,r)`, Shephard–Todd
/// `Gk` for the exceptional groups that occur as relative groups of real
/// cosets, or a Coxeter type descriptor.
pub fn named_group_order(name: &str) -> Option<u128> {
    let name = name.trim();
    if let Some(n) = name.strip_prefix('Z') {
        return n.parse().ok();
    }
    if let Some(args) = name.strip_prefix("G(").and_then(|s| s.strip_suffix(')')) {
        let v: Vec<u128> = args.split(',').map(|p| p.trim().parse().ok()).collect::<Option<_>>()?;
        let [m, p, r] = v[..] else { return None };
        if m == 0 || p == 0 || m % p != 0 {
            return None;
        }
        return Some(m.pow(r as u32) * factorial(r) / p);
    }
    if let Some(k) = name.strip_prefix('G').and_then(|s| s.parse::<u32>().ok()) {
        let degrees: &[u128] = match k {
            4 => &[4, 6],
            5 => &[6, 12],
            6 => &[4, 12],
            8 => &[8, 12],
            9 => &[8, 24],
            10 => &[12, 12],
            12 => &[6, 8],
            14 => &[6, 24],
            16 => &[20, 30],
            20 => &[12, 30],
            22 => &[12, 20],
            24 => &[4, 6, 14],
            25 => &[6, 9, 12],
            26 => &[6, 12, 18],
            31 => &[8, 12, 20, 24],
            32 => &[12, 18, 24, 30],
            _ => &[],
        };
        if !degrees.is_empty() {
            return Some(degrees.iter().product());
        }
    }
    CoxeterSystem::build(name).ok().map(|s| s.order())
}
