//! The ribbon category `B⁺(𝓘)`: objects are subsets of `S` in one conjugacy
//! orbit, morphisms `I → J` are `I`-reduced braids `b` with `Iᵇ = J`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Mutex;

use crate::braid::{Artin, Braid};
use crate::coxeter::{CoxeterSystem, Side, Subset};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RibbonMorphism {
    pub source: Subset,
    pub braid: Braid,
    pub target: Subset,
}

pub struct Ribbon<'a> {
    pub artin: Artin<'a>,
    orbits: Mutex<HashMap<Subset, Vec<Subset>>>,
}

impl<'a> Ribbon<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Ribbon<'a> {
        Ribbon { artin: Artin::new(sys), orbits: Mutex::new(HashMap::new()) }
    }

    pub fn sys(&self) -> &'a CoxeterSystem {
        self.artin.sys
    }

    /// `(α_I(b), ω_I(b))`: the maximal left divisor of `b` in `B⁺_I` and the
    /// remaining right factor.
    pub fn alpha(&self, i: Subset, b: &Braid) -> (Braid, Braid) {
        let a = self.artin;
        let wi = self.sys().longest(i);
        let mut left = Vec::new();
        let mut rest = b.clone();
        while let Some(h) = rest.factors.first() {
            let g = a.simple_gcd(h, &wi);
            if g.is_identity() {
                break;
            }
            rest = a.left_div_simple(&rest, &g).expect("gcd divides");
            left.push(g);
        }
        (a.from_simples(left), rest)
    }

    pub fn is_reduced(&self, i: Subset, b: &Braid) -> bool {
        match b.factors.first() {
            None => true,
            Some(h) => self.sys().left_descents(h).0 & i.0 == 0,
        }
    }

    pub fn make_morphism(&self, i: Subset, b: &Braid) -> Result<RibbonMorphism> {
        if !self.is_reduced(i, b) {
            return Err(Error::NotIReduced);
        }
        let target = self.artin.conjugate_subset(i, b).ok_or(Error::ConjugatesOutOfS)?;
        Ok(RibbonMorphism { source: i, braid: b.clone(), target })
    }

    pub fn identity(&self, i: Subset) -> RibbonMorphism {
        RibbonMorphism { source: i, braid: Braid::identity(), target: i }
    }

    pub fn compose(&self, f: &RibbonMorphism, g: &RibbonMorphism) -> Result<RibbonMorphism> {
        if f.target != g.source {
            return Err(Error::Other("morphisms are not composable".into()));
        }
        Ok(RibbonMorphism { source: f.source, braid: self.artin.product(&f.braid, &g.braid), target: g.target })
    }

    /// Connected component of `s` in the Coxeter graph restricted to `j`.
    fn component(&self, j: Subset, s: usize) -> Subset {
        let m = &self.sys().coxeter_matrix;
        let mut comp = Subset::single(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in j.iter() {
                if !comp.contains(y) && m[x][y] > 2 {
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        comp
    }

    /// The atom `v(I ∪ {s}, I)`, realized on the component `K` of `s` in
    /// `I ∪ {s}` as `w_{K∖s}⁻¹ w_K`.
    pub fn atom(&self, i: Subset, s: usize) -> RibbonMorphism {
        let sys = self.sys();
        let k = self.component(i.union(Subset::single(s)), s);
        let v = sys.longest(k.minus(Subset::single(s))).compose(&sys.longest(k));
        self.make_morphism(i, &self.artin.simple(&v)).expect("atoms are morphisms")
    }

    /// Atoms of `B⁺(𝓘)` with source `I`, one for each `s ∉ I`, keeping
    /// those not strictly divisible by another.
    pub fn atoms_from(&self, i: Subset) -> Vec<RibbonMorphism> {
        let all: Vec<RibbonMorphism> =
            (0..self.sys().rank()).filter(|&s| !i.contains(s)).map(|s| self.atom(i, s)).collect();
        all.iter()
            .filter(|f| {
                !all.iter().any(|g| {
                    g.braid != f.braid && self.artin.divides(&g.braid, &f.braid, Side::Left)
                })
            })
            .cloned()
            .collect()
    }

    /// `I --w_I⁻¹w₀--> I^{w₀}`.
    pub fn garside_map(&self, i: Subset) -> RibbonMorphism {
        let sys = self.sys();
        let v = sys.longest(i).compose(&sys.w0());
        self.make_morphism(i, &self.artin.simple(&v)).expect("Garside map is a morphism")
    }

    /// Simple morphisms with source `I`, identity excluded, in canonical order.
    pub fn simple_morphisms_from(&self, i: Subset) -> Vec<RibbonMorphism> {
        let d = self.garside_map(i);
        let Some(top) = d.braid.factors.first() else { return vec![] };
        self.artin
            .simple_prefixes(top)
            .into_iter()
            .filter_map(|v| {
                let target = self.sys().conjugate_subset(i, &v)?;
                Some(RibbonMorphism { source: i, braid: self.artin.simple(&v), target })
            })
            .collect()
    }

    /// Normal decomposition of a morphism as a chain of simple morphisms.
    pub fn category_normal_form(&self, m: &RibbonMorphism) -> Vec<RibbonMorphism> {
        let mut cur = m.source;
        let mut out = Vec::with_capacity(m.braid.factors.len());
        for f in &m.braid.factors {
            let next = self.sys().conjugate_subset(cur, f).expect("factors of a morphism conjugate into S");
            out.push(RibbonMorphism { source: cur, braid: self.artin.simple(f), target: next });
            cur = next;
        }
        out
    }

    /// Checks `α(vw) = α(v)α(w)` and that the factorwise quotients of the
    /// normal form of `vw` by that of `w`, conjugated back, give the normal
    /// form of `v`.
    pub fn parabolic_split_check(&self, i: Subset, v: &Braid, w: &RibbonMorphism) -> bool {
        let sys = self.sys();
        let a = self.artin;
        if w.source != i || v.factors.iter().any(|f| !sys.in_parabolic(f, i)) {
            return false;
        }
        let vw = a.product(v, &w.braid);
        if a.alpha(&vw) != a.alpha(v).compose(&a.alpha(&w.braid)) {
            return false;
        }
        let k = vw.factors.len();
        let one = sys.identity();
        let mut prefix = sys.identity();
        let mut got = Vec::with_capacity(k);
        for idx in 0..k {
            let u = &vw.factors[idx];
            let wi = w.braid.factors.get(idx).unwrap_or(&one);
            let vi = u.compose(&wi.inverse());
            if vi.length() + wi.length() != u.length() {
                return false;
            }
            got.push(prefix.compose(&vi).compose(&prefix.inverse()));
            prefix = prefix.compose(wi);
        }
        while got.last().is_some_and(|x| x.is_identity()) {
            got.pop();
        }
        got == v.factors
    }

    /// The objects reachable from `I` through atoms.
    pub fn orbit(&self, i: Subset) -> Vec<Subset> {
        if let Some(o) = self.orbits.lock().unwrap().get(&i) {
            return o.clone();
        }
        let mut seen = BTreeSet::from([i]);
        let mut queue = VecDeque::from([i]);
        while let Some(j) = queue.pop_front() {
            for s in 0..self.sys().rank() {
                if j.contains(s) {
                    continue;
                }
                let t = self.atom(j, s).target;
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let orbit: Vec<Subset> = seen.into_iter().collect();
        let mut cache = self.orbits.lock().unwrap();
        for &j in &orbit {
            cache.insert(j, orbit.clone());
        }
        orbit
    }

    /// All morphisms with source `I` of canonical length at most `bound`,
    /// generated as chains of simple morphisms in normal form.
    pub fn morphisms_from(&self, i: Subset, bound: usize) -> Vec<RibbonMorphism> {
        let mut simples: HashMap<Subset, Vec<RibbonMorphism>> = HashMap::new();
        let mut out = vec![self.identity(i)];
        let mut layer = vec![self.identity(i)];
        for _ in 0..bound {
            let mut next = Vec::new();
            for m in &layer {
                let list = simples.entry(m.target).or_insert_with(|| self.simple_morphisms_from(m.target));
                for s in list.iter() {
                    let x = &s.braid.factors[0];
                    if let Some(last) = m.braid.factors.last() {
                        let ok = self.sys().left_descents(x).0 & !self.sys().right_descents(last).0 == 0;
                        if !ok {
                            continue;
                        }
                    }
                    let mut f = m.braid.factors.clone();
                    f.push(x.clone());
                    next.push(RibbonMorphism { source: i, braid: Braid { factors: f }, target: s.target });
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}
