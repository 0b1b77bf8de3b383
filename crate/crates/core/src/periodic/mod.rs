//! Periodic morphisms `I --b--> φ(I)` with `(bφ)^d = φ^d·π/π_I`, and the
//! `ζ_d`-good elements of a coset `Wφ` that lift to them.
//!
//! Conditions checked for a pair `(I, w)` at `d`:
//!
//! * (i) `wφ` maps the simple roots of `I` onto themselves and `w` is
//!   `I`-reduced;
//! * (ii) `l((wφ)^i φ^{-i}) = 2i·l(w_I w₀)/d` for `0 < i ≤ ⌊d/2⌋`;
//! * (iii) `(wφ)^d = φ^d`;
//! * (iv) no element of `W_I wφ` has the eigenvalue `ζ_d` on the span of the
//!   roots of `W_I` (maximality).

mod classical;
mod scalars;
mod tables;

pub use classical::{a_v, a_v_prime, b_j, b_v, classical_word, construct_classical, Classical};
pub use scalars::{construct_for_power, product_coset, restriction_of_scalars, PowerCertificate, ScalarRestriction};
pub use tables::{
    classify_good, good_certificate, named_group_order, relative_section, GoodRow, GoodTable, Limits, Section,
};

use nalgebra::{Complex, DVector};

use crate::braid::{Artin, Braid};
use crate::conjcat::{delta_automorphism, ConjObject, CycCategory};
use crate::coxeter::{eigen_multiplicity, Automorphism, CoxeterSystem, Element, Frac, Side, Subset, Twisted};
use crate::error::{Error, Result};

/// Numeric tolerance for eigenvalue decisions.
pub const TOLERANCE: f64 = 1e-8;

/// Largest `|W_I|` for which maximality is decided by running over `W_I`.
pub const BRUTE_FORCE_BOUND: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks {
    /// (i)
    pub stable: bool,
    /// (ii)
    pub lengths: bool,
    /// (iii)
    pub power: bool,
    /// `(bφ)^d = φ^d·π/π_I` and `I^b = φ(I)` in normal form.
    pub braid_identity: bool,
    /// (iv), when evaluated.
    pub maximal: Option<bool>,
}

impl Checks {
    pub fn good(&self) -> bool {
        self.stable && self.lengths && self.power && self.braid_identity
    }
}

#[derive(Clone, Debug)]
pub struct GoodCertificate {
    pub system: String,
    /// Permutation of the generators induced by `φ`.
    pub twist: Vec<usize>,
    pub d: u32,
    pub i: Subset,
    pub w: Element,
    pub braid: Braid,
    pub checks: Checks,
    /// Dimension of the `ζ_d`-eigenspace of `wφ`.
    pub zeta_rank: usize,
    pub relative_order: Option<u128>,
}

/// `wφ` in the coset of the system.
pub fn coset_element(sys: &CoxeterSystem, w: &Element) -> Twisted {
    Twisted { w: w.clone(), k: 1 % sys.delta() }
}

/// The braid attached to `(I, w)` at `d`: the lift of `w`, or `π/π_I` when
/// `d = 1`.
pub fn lift(sys: &CoxeterSystem, d: u32, i: Subset, w: &Element) -> Braid {
    let a = Artin::new(sys);
    if d == 1 {
        a.pi_over(i)
    } else {
        a.simple(w)
    }
}

/// `w_I⁻¹w₀`, the image of the ribbon Garside map at `I`.
pub fn garside_image(sys: &CoxeterSystem, i: Subset) -> Element {
    sys.longest(i).compose(&sys.w0())
}

/// `(bφ)^d = φ^d·π/π_I` in normal form, with no condition on `I^b`.
pub fn braid_identity(sys: &CoxeterSystem, i: Subset, b: &Braid, d: u32, phi: &Automorphism) -> bool {
    let a = Artin::new(sys);
    a.twisted_power(b, d as usize, phi) == a.pi_over(i)
}

/// Periodicity of `I --b--> φ(I)`: `φ^d(I) = I`, `I^b = φ(I)` and
/// `(bφ)^d = φ^d·π/π_I`.
pub fn is_periodic(sys: &CoxeterSystem, i: Subset, b: &Braid, d: u32, phi: &Automorphism) -> bool {
    if d == 0 || i.map(&phi.pow(d as i64).perm) != i {
        return false;
    }
    let a = Artin::new(sys);
    a.conjugate_subset(i, b) == Some(i.map(&phi.perm)) && braid_identity(sys, i, b, d, phi)
}

/// Evaluates (i)–(iii) and the braid identity; (iv) is left unset.
pub fn good_checks(sys: &CoxeterSystem, d: u32, i: Subset, w: &Element) -> Checks {
    let x = coset_element(sys, w);
    let stable = i.iter().all(|s| sys.simple_image(&x, s).is_some_and(|t| i.contains(t)))
        && sys.is_reduced(w, i, Side::Left);
    let big = sys.npos() - sys.parabolic_npos(i);
    let lengths = d == 1
        || (1..=d as usize / 2).all(|e| sys.twisted_pow(&x, e).w.length() * d as usize == 2 * e * big);
    let power = d > 0 && sys.twisted_pow(&x, d as usize).w.is_identity();
    let braid = lift(sys, d, i, w);
    let braid_identity = power && is_periodic(sys, i, &braid, d, &sys.phi);
    Checks { stable, lengths, power, braid_identity, maximal: None }
}

/// Verifies (i)–(iii), the braid identity and (iv).
pub fn certify(sys: &CoxeterSystem, d: u32, i: Subset, w: &Element) -> Result<GoodCertificate> {
    sys.check(w)?;
    if d == 0 {
        return Err(Error::NotAdmissible(0));
    }
    if d == 1 && !w.is_identity() {
        return Err(Error::InvalidCertificate("d = 1 requires w = 1".into()));
    }
    let mut checks = good_checks(sys, d, i, w);
    let failed: Vec<&str> = [
        ("stability", checks.stable),
        ("length law", checks.lengths),
        ("power law", checks.power),
        ("braid identity", checks.braid_identity),
    ]
    .iter()
    .filter(|(_, ok)| !ok)
    .map(|(n, _)| *n)
    .collect();
    if !failed.is_empty() {
        return Err(Error::InvalidCertificate(failed.join(", ")));
    }
    checks.maximal = Some(is_maximal(sys, d, i, w, BRUTE_FORCE_BOUND)?);
    let zeta_rank = sys.zeta_rank(&coset_element(sys, w), 1, d as u64, TOLERANCE)?;
    Ok(GoodCertificate {
        system: sys.name.clone(),
        twist: sys.phi.perm.clone(),
        d,
        i,
        w: w.clone(),
        braid: lift(sys, d, i, w),
        checks,
        zeta_rank,
        relative_order: None,
    })
}

/// Certificate from a braid: the braid must be the lift of a good element
/// (simple when `d > 1`, `π/π_I` when `d = 1`).
pub fn certificate_from_braid(sys: &CoxeterSystem, d: u32, i: Subset, b: &Braid) -> Result<GoodCertificate> {
    let a = Artin::new(sys);
    let w = if d == 1 {
        if *b != a.pi_over(i) {
            return Err(Error::InvalidCertificate("d = 1 requires the braid π/π_I".into()));
        }
        sys.identity()
    } else {
        if !b.is_simple() {
            return Err(Error::InvalidCertificate("braid is not simple".into()));
        }
        a.image(b)
    };
    certify(sys, d, i, &w)
}

/// Data behind the maximality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Maximality {
    /// Dimension of the `ζ_d`-eigenspace `V` of `wφ`.
    pub eigenspace_dim: usize,
    /// `ζ_d`-rank of the coset.
    pub coset_rank: usize,
    /// Positive roots orthogonal to `V`.
    pub orthogonal_roots: usize,
    /// Positive roots of `W_I`.
    pub parabolic_roots: usize,
    /// `V` has maximal dimension and its centralizer is exactly `W_I`.
    pub eigen_criterion: bool,
    /// Verdict of the run over `W_I`, when `|W_I|` is within the bound.
    pub brute_force: Option<bool>,
}

pub fn maximality(sys: &CoxeterSystem, d: u32, i: Subset, w: &Element, bound: usize) -> Result<Maximality> {
    maximality_with_tolerance(sys, d, i, w, bound, TOLERANCE)
}

/// [`maximality`] with an explicit eigenvalue tolerance.
pub fn maximality_with_tolerance(
    sys: &CoxeterSystem,
    d: u32,
    i: Subset,
    w: &Element,
    bound: usize,
    tol: f64,
) -> Result<Maximality> {
    let x = coset_element(sys, w);
    let z = Frac::new(1, d as u64);
    let e = eigen_multiplicity(&sys.matrix_of(&x), z, tol)?;
    let orth = sys.roots_orthogonal_to(&e.basis, 1e-6);
    let par = sys.parabolic_roots(i);
    let coset_rank = sys.coset_zeta_rank(1, d as u64);
    let eigen_criterion = e.multiplicity == coset_rank && orth == par;
    let brute_force = if i.is_empty() {
        Some(true)
    } else if parabolic_order_at_most(sys, i, bound) {
        let mut ok = true;
        for v in sys.parabolic_elements(i) {
            let y = Twisted { w: v.compose(w), k: x.k };
            let m = sys.restricted_matrix(&y, i);
            if eigen_multiplicity(&m, z, tol)?.multiplicity > 0 {
                ok = false;
                break;
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(Maximality {
        eigenspace_dim: e.multiplicity,
        coset_rank,
        orthogonal_roots: orth.len(),
        parabolic_roots: par.len(),
        eigen_criterion,
        brute_force,
    })
}

fn parabolic_order_at_most(sys: &CoxeterSystem, i: Subset, bound: usize) -> bool {
    // |W_I| ≤ (l(w_I) + 1)! is too crude; count with an early stop instead
    let r = sys.rank();
    let mut seen = std::collections::HashSet::new();
    seen.insert(sys.identity().key(r));
    let mut stack = vec![sys.identity()];
    while let Some(w) = stack.pop() {
        for s in i.iter() {
            let ws = sys.rmul_gen(&w, s);
            if seen.insert(ws.key(r)) {
                if seen.len() > bound {
                    return false;
                }
                stack.push(ws);
            }
        }
    }
    true
}

/// Condition (iv) for a good element.
pub fn is_maximal(sys: &CoxeterSystem, d: u32, i: Subset, w: &Element, bound: usize) -> Result<bool> {
    let m = maximality(sys, d, i, w, bound)?;
    Ok(m.brute_force.unwrap_or(m.eigen_criterion))
}

/// Conjugates a periodic morphism until its `⌊d/2⌋`-th twisted power is a
/// simple morphism. Returns the accumulated conjugator and the new object.
pub fn slide_to_good(
    sys: &CoxeterSystem,
    i: Subset,
    b: &Braid,
    d: u32,
    phi: &Automorphism,
) -> Result<(Braid, ConjObject)> {
    if !is_periodic(sys, i, b, d, phi) {
        return Err(Error::NotPeriodic);
    }
    let a = Artin::new(sys);
    let cat = CycCategory::with_twist(sys, phi.clone());
    let mut obj = ConjObject { source: i, braid: b.clone() };
    let mut conj = Braid::identity();
    let half = d as usize / 2;
    let mut step = 0;
    while step < half {
        let g = a.simple(&garside_image(sys, obj.source));
        let next = a.twisted_power(&obj.braid, step + 1, phi);
        if a.divides(&next, &g, Side::Left) {
            step += 1;
            continue;
        }
        let cur = a.twisted_power(&obj.braid, step, phi);
        let head = a.left_gcd(&next, &g);
        let v = a.left_quotient(&cur, &head)?;
        obj = cat.cyc_step(&obj, &v)?;
        conj = a.product(&conj, &v);
        step += 1;
    }
    if !is_good_object(sys, &obj, d, phi) {
        return Err(Error::Other("sliding did not reach a good object".into()));
    }
    Ok((conj, obj))
}

/// `(bφ)^{⌊d/2⌋}` divides the ribbon Garside map at the source.
pub fn is_good_object(sys: &CoxeterSystem, obj: &ConjObject, d: u32, phi: &Automorphism) -> bool {
    let a = Artin::new(sys);
    let g = a.simple(&garside_image(sys, obj.source));
    a.divides(&a.twisted_power(&obj.braid, d as usize / 2, phi), &g, Side::Left)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    /// `d` even: `(bφ)^{d/2} = w_I⁻¹w₀·φ^{d/2}`.
    Even { half_power: Braid },
    /// `d` odd: `bφ = uφ·^{w₀φ^{d'}}u` and `(bφ)^{d'}u = w_I⁻¹w₀φ^{d'}`.
    Odd { u: Element, half_power: Braid },
}

/// Even/odd decomposition of a good certificate.
pub fn even_odd_structure(sys: &CoxeterSystem, cert: &GoodCertificate) -> Result<Structure> {
    let a = Artin::new(sys);
    let phi = &sys.phi;
    let dd = cert.d as usize / 2;
    let power = a.twisted_power(&cert.braid, dd, phi);
    let g = a.simple(&garside_image(sys, cert.i));
    let bad = |m: &str| Error::InvalidCertificate(m.to_string());
    if cert.d.is_multiple_of(2) {
        return if power == g { Ok(Structure::Even { half_power: power }) } else { Err(bad("half power law")) };
    }
    let q = a.left_quotient(&power, &g).map_err(|_| bad("half power does not divide the Garside map"))?;
    if !q.is_simple() {
        return Err(bad("quotient is not simple"));
    }
    let u = sys.phi_apply(-(dd as i64), &a.image(&q));
    if sys.phi_apply(cert.d as i64, &u) != u {
        return Err(bad("u is not φ^d-stable"));
    }
    if sys.conjugate_subset(cert.i, &u).is_none() {
        return Err(bad("I^u is not in S"));
    }
    let twist = phi.compose(&delta_automorphism(sys)).compose(&phi.pow(dd as i64));
    let ub = a.simple(&u);
    if a.product(&ub, &a.apply_automorphism(&twist, &ub)) != cert.braid {
        return Err(bad("odd decomposition fails"));
    }
    Ok(Structure::Odd { u, half_power: power })
}

/// Multiplicity of `exp(2πi·k/d)` as an eigenvalue of `x`.
pub fn zeta_rank(sys: &CoxeterSystem, x: &Twisted, k: i64, d: u64) -> Result<usize> {
    sys.zeta_rank(x, k, d, TOLERANCE)
}

/// Fixed vectors of `x` on the span of the roots of `I`, embedded in the
/// simple-root coordinates.
pub(crate) fn fixed_on_parabolic(sys: &CoxeterSystem, x: &Twisted, i: Subset) -> Result<Vec<DVector<Complex<f64>>>> {
    let m = sys.restricted_matrix(x, i);
    let e = eigen_multiplicity(&m, Frac::one(), TOLERANCE)?;
    let idx: Vec<usize> = i.iter().collect();
    Ok(e.basis
        .iter()
        .map(|b| {
            let mut v = DVector::from_element(sys.rank(), Complex::new(0.0, 0.0));
            for (k, &j) in idx.iter().enumerate() {
                v[j] = b[k];
            }
            v
        })
        .collect())
}
