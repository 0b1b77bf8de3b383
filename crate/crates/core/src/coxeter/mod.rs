//! Finite Coxeter systems and twisted cosets `Wφ`.

mod cartan;
mod class;
mod element;
mod enumerate;
mod matrix;
mod roots;
mod subset;

use std::collections::VecDeque;

pub use cartan::{gcd, CartanType, Family, Frac};
pub use class::ClassEnumeration;
pub use element::Element;
pub use matrix::{eigen_multiplicity, Eigen};
pub use subset::Subset;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `w·φ^k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Twisted {
    pub w: Element,
    pub k: u32,
}

/// A diagram automorphism, stored both on generators and on roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub perm: Vec<usize>,
    pub(crate) psi: Element,
}

impl Automorphism {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `ψ w ψ⁻¹`.
    pub fn apply(&self, w: &Element) -> Element {
        if self.is_identity() {
            return w.clone();
        }
        w.conjugate_by(&self.psi)
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
            psi: self.psi.compose(&other.psi),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        Automorphism { perm, psi: self.psi.inverse() }
    }

    pub fn pow(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Automorphism {
            perm: (0..self.perm.len()).collect(),
            psi: Element::identity(self.psi.npos()),
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    pub fn order(&self) -> u32 {
        let mut p = self.perm.clone();
        let mut k = 1;
        while p.iter().enumerate().any(|(i, &x)| i != x) {
            p = p.iter().map(|&i| self.perm[i]).collect();
            k += 1;
        }
        k
    }
}

/// A finite Coxeter system with its root system and a distinguished diagram
/// automorphism `φ`.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    pub name: String,
    pub cartan: Option<CartanType>,
    pub coxeter_matrix: Vec<Vec<u32>>,
    rank: usize,
    npos: usize,
    /// `act[i]` is the root permutation of `s_i`.
    act: Vec<Element>,
    /// `(j, p)` with root `= s_j(p)`, for non-simple positive roots.
    parent: Vec<Option<(usize, usize)>>,
    /// Reflection along each positive root.
    refl: Vec<Element>,
    /// Support of each positive root as a subset of S.
    support: Vec<Subset>,
    /// Positive roots in the basis of unit simple roots.
    vectors: Vec<Vec<f64>>,
    pub gram: Vec<Vec<f64>>,
    pub degrees: Vec<u32>,
    pub factors: Vec<Frac>,
    pub phi: Automorphism,
    delta: u32,
}

impl CoxeterSystem {
    /// Builds a system from a descriptor such as `E6`, `2A5` or `I2(7)`.
    pub fn build(descriptor: &str) -> Result<CoxeterSystem> {
        let t: CartanType = descriptor.parse()?;
        let mut sys = CoxeterSystem::from_matrix(
            &t.to_string(),
            t.coxeter_matrix(),
            &t.twist_permutation(),
            t.degrees(),
            t.factors(),
        )?;
        sys.cartan = Some(t);
        Ok(sys)
    }

    pub fn from_matrix(
        name: &str,
        m: Vec<Vec<u32>>,
        twist: &[usize],
        degrees: Vec<u32>,
        factors: Vec<Frac>,
    ) -> Result<CoxeterSystem> {
        let rank = m.len();
        if rank == 0 || rank > 64 {
            return Err(Error::RankOutOfRange(name.to_string()));
        }
        // connected components
        let mut comp = vec![usize::MAX; rank];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..rank {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let a = members[k];
                for b in 0..rank {
                    if m[a][b] > 2 && comp[b] == usize::MAX {
                        comp[b] = id;
                        members.push(b);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            comps.push(members);
        }
        let locals: Vec<roots::LocalRoots> = comps
            .iter()
            .map(|c| {
                let sub: Vec<Vec<u32>> =
                    c.iter().map(|&a| c.iter().map(|&b| m[a][b]).collect()).collect();
                roots::component_roots(&sub)
            })
            .collect();
        // global numbering: all simple roots first, then the rest component by component
        let npos: usize = locals.iter().map(|l| l.npos).sum();
        if 2 * npos > u16::MAX as usize {
            return Err(Error::RankOutOfRange(name.to_string()));
        }
        let mut global: Vec<Vec<usize>> = locals.iter().map(|l| vec![0; l.npos]).collect();
        for (ci, c) in comps.iter().enumerate() {
            for (li, &g) in c.iter().enumerate() {
                global[ci][li] = g;
            }
        }
        let mut next = rank;
        for (ci, l) in locals.iter().enumerate() {
            for li in comps[ci].len()..l.npos {
                global[ci][li] = next;
                next += 1;
            }
        }
        let mut act = Vec::with_capacity(rank);
        for s in 0..rank {
            let ci = comp[s];
            let li = comps[ci].iter().position(|&x| x == s).unwrap();
            let mut img: Vec<u16> = (0..npos as u16).collect();
            let l = &locals[ci];
            for r in 0..l.npos {
                let t = l.act[li][r] as usize;
                let g = if t < l.npos { global[ci][t] } else { global[ci][t - l.npos] + npos };
                img[global[ci][r]] = g as u16;
            }
            act.push(Element(img.into_boxed_slice()));
        }
        // parents by breadth-first search from the simple roots
        let mut parent = vec![None; npos];
        let mut seen = vec![false; npos];
        let mut queue: VecDeque<usize> = (0..rank).collect();
        for s in 0..rank {
            seen[s] = true;
        }
        while let Some(r) = queue.pop_front() {
            for (j, a) in act.iter().enumerate() {
                let t = a.0[r] as usize;
                if t < npos && !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((j, r));
                    queue.push_back(t);
                }
            }
        }
        debug_assert!(seen.iter().all(|&b| b));
        let order = root_order(&parent, rank);
        let mut refl: Vec<Option<Element>> = vec![None; npos];
        let mut support = vec![Subset::EMPTY; npos];
        let gram: Vec<Vec<f64>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| if x == 1 { 1.0 } else { -(std::f64::consts::PI / x as f64).cos() })
                    .collect()
            })
            .collect();
        let mut vectors = vec![vec![0.0; rank]; npos];
        for &r in &order {
            match parent[r] {
                None => {
                    refl[r] = Some(act[r].clone());
                    support[r] = Subset::single(r);
                    vectors[r][r] = 1.0;
                }
                Some((j, p)) => {
                    let sp = refl[p].as_ref().unwrap();
                    refl[r] = Some(act[j].compose(sp).compose(&act[j]));
                    let mut sup = support[p];
                    sup.insert(j);
                    support[r] = sup;
                    let v = vectors[p].clone();
                    let b: f64 = (0..rank).map(|k| v[k] * gram[k][j]).sum();
                    let mut out = v;
                    out[j] -= 2.0 * b;
                    vectors[r] = out;
                }
            }
        }
        let refl: Vec<Element> = refl.into_iter().map(|e| e.unwrap()).collect();
        let mut sys = CoxeterSystem {
            name: name.to_string(),
            cartan: None,
            coxeter_matrix: m,
            rank,
            npos,
            act,
            parent,
            refl,
            support,
            vectors,
            gram,
            degrees,
            factors,
            phi: Automorphism { perm: (0..rank).collect(), psi: Element::identity(npos) },
            delta: 1,
        };
        let phi = sys.automorphism(twist).map_err(|_| Error::InvalidTwist(name.to_string()))?;
        sys.delta = phi.order();
        sys.phi = phi;
        Ok(sys)
    }

    /// Diagram automorphism from a permutation of the generators.
    pub fn automorphism(&self, perm: &[usize]) -> Result<Automorphism> {
        let r = self.rank;
        let valid = perm.len() == r
            && (0..r).all(|i| (0..r).all(|j| self.coxeter_matrix[perm[i]][perm[j]] == self.coxeter_matrix[i][j]));
        if !valid {
            return Err(Error::InvalidTwist(format!("{perm:?}")));
        }
        let n = self.npos;
        let mut img = vec![u16::MAX; n];
        for &x in &root_order(&self.parent, r) {
            img[x] = match self.parent[x] {
                None => perm[x] as u16,
                Some((j, p)) => self.act[perm[j]].apply(img[p]),
            };
        }
        let psi = Element(img.into_boxed_slice());
        // ψ must intertwine every generator with its image
        for j in 0..r {
            if psi.compose(&self.act[j]) != self.act[perm[j]].compose(&psi) || psi.length() != 0 {
                return Err(Error::InvalidTwist(format!("{perm:?}")));
            }
        }
        Ok(Automorphism { perm: perm.to_vec(), psi })
    }

    /// Same group with `φ` replaced by `φ^m`.
    pub fn with_twist_power(&self, m: i64) -> CoxeterSystem {
        let mut s = self.clone();
        s.phi = self.phi.pow(m);
        s.delta = s.phi.order();
        s.factors = self.factors.iter().map(|f| f.pow(m)).collect();
        if m.rem_euclid(self.delta as i64) != 1 {
            s.name = format!("{}^{}", self.name, m);
        }
        s
    }

    /// Same group with the given twist.
    pub fn with_twist(&self, phi: Automorphism, factors: Vec<Frac>) -> CoxeterSystem {
        let mut s = self.clone();
        s.delta = phi.order();
        s.phi = phi;
        s.factors = factors;
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn npos(&self) -> usize {
        self.npos
    }

    /// Order of `φ`.
    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn order(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.npos)
    }

    pub fn gen(&self, i: usize) -> &Element {
        &self.act[i]
    }

    pub fn support(&self, root: usize) -> Subset {
        self.support[root]
    }

    pub fn root_vector(&self, root: u16) -> Vec<f64> {
        let r = root as usize;
        if r < self.npos {
            self.vectors[r].clone()
        } else {
            self.vectors[r - self.npos].iter().map(|x| -x).collect()
        }
    }

    /// Reflection along a signed root.
    pub fn reflection(&self, root: u16) -> &Element {
        &self.refl[root as usize % self.npos]
    }

    pub fn check(&self, w: &Element) -> Result<()> {
        if w.npos() == self.npos {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    /// Element from 0-based generator indices.
    pub fn element(&self, word: &[usize]) -> Result<Element> {
        let mut w = self.identity();
        for &i in word {
            if i >= self.rank {
                return Err(Error::IndexOutOfRange(i + 1));
            }
            w = w.compose(&self.act[i]);
        }
        Ok(w)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.compose(b))
    }

    /// `s_i · w`.
    pub fn lmul_gen(&self, i: usize, w: &Element) -> Element {
        self.act[i].compose(w)
    }

    /// `w · s_i`.
    pub fn rmul_gen(&self, w: &Element, i: usize) -> Element {
        w.compose(&self.act[i])
    }

    pub fn left_descents(&self, w: &Element) -> Subset {
        let n = self.npos as u16;
        let mut d = Subset::EMPTY;
        for &x in w.0.iter() {
            if x >= n && ((x - n) as usize) < self.rank {
                d.insert((x - n) as usize);
            }
        }
        d
    }

    pub fn right_descents(&self, w: &Element) -> Subset {
        Subset::from_indices((0..self.rank).filter(|&i| w.has_right_descent(i)))
    }

    pub fn descents(&self, w: &Element, side: Side) -> Subset {
        match side {
            Side::Left => self.left_descents(w),
            Side::Right => self.right_descents(w),
        }
    }

    /// Lexicographically least reduced word (0-based).
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut x = w.clone();
        while !x.is_identity() {
            let i = self.first_left_descent(&x);
            word.push(i);
            x = self.lmul_gen(i, &x);
        }
        word
    }

    fn first_left_descent(&self, w: &Element) -> usize {
        let n = self.npos as u16;
        let mut best = usize::MAX;
        for &x in w.0.iter() {
            if x >= n && ((x - n) as usize) < self.rank {
                best = best.min((x - n) as usize);
            }
        }
        best
    }

    /// Longest element `w_I` of the parabolic subgroup `W_I`.
    pub fn longest(&self, i: Subset) -> Element {
        let mut w = self.identity();
        loop {
            match i.iter().find(|&s| !w.has_right_descent(s)) {
                Some(s) => w = self.rmul_gen(&w, s),
                None => return w,
            }
        }
    }

    pub fn w0(&self) -> Element {
        self.longest(Subset::full(self.rank))
    }

    /// Number of positive roots of `Φ_I`, that is `l(w_I)`.
    pub fn parabolic_npos(&self, i: Subset) -> usize {
        self.support.iter().filter(|s| s.is_subset(i)).count()
    }

    /// `w = v·u` (left) or `w = u·v` (right) with `v ∈ W_I` and `u` I-reduced.
    pub fn coset_decompose(&self, w: &Element, i: Subset, side: Side) -> (Element, Element) {
        let mut v = self.identity();
        let mut u = w.clone();
        loop {
            let d = self.descents(&u, side);
            match i.iter().find(|&s| d.contains(s)) {
                None => return (v, u),
                Some(s) => match side {
                    Side::Left => {
                        u = self.lmul_gen(s, &u);
                        v = self.rmul_gen(&v, s);
                    }
                    Side::Right => {
                        u = self.rmul_gen(&u, s);
                        v = self.lmul_gen(s, &v);
                    }
                },
            }
        }
    }

    pub fn is_reduced(&self, w: &Element, i: Subset, side: Side) -> bool {
        self.descents(w, side).0 & i.0 == 0
    }

    pub fn in_parabolic(&self, w: &Element, i: Subset) -> bool {
        self.coset_decompose(w, i, Side::Left).1.is_identity()
    }

    /// `φ^k(w)`.
    pub fn phi_apply(&self, k: i64, w: &Element) -> Element {
        if self.delta == 1 {
            return w.clone();
        }
        self.phi.pow(k.rem_euclid(self.delta as i64)).apply(w)
    }

    /// Root permutation of `w·φ^k`.
    pub fn twisted_action(&self, x: &Twisted) -> Element {
        if x.k.is_multiple_of(self.delta) {
            return x.w.clone();
        }
        x.w.compose(&self.phi.pow(x.k as i64).psi)
    }

    /// `(aφ^i)(bφ^j) = a·φ^i(b)·φ^{i+j}`.
    pub fn twisted_mul(&self, a: &Twisted, b: &Twisted) -> Twisted {
        Twisted {
            w: a.w.compose(&self.phi_apply(a.k as i64, &b.w)),
            k: (a.k + b.k) % self.delta.max(1),
        }
    }

    /// `(wφ^k)^n`.
    pub fn twisted_pow(&self, x: &Twisted, n: usize) -> Twisted {
        let mut acc = Twisted { w: self.identity(), k: 0 };
        for _ in 0..n {
            acc = self.twisted_mul(&acc, x);
        }
        acc
    }

    /// `s_i · x · φ^k(s_i)` for `x = wφ^k`.
    pub fn conjugate_by_gen(&self, i: usize, x: &Twisted) -> Twisted {
        let j = if x.k.is_multiple_of(self.delta) { i } else { self.phi.pow(x.k as i64).perm[i] };
        Twisted { w: self.act[i].compose(&x.w).compose(&self.act[j]), k: x.k }
    }

    /// `v · x · φ^k(v)⁻¹` for `x = wφ^k`.
    pub fn conjugate(&self, v: &Element, x: &Twisted) -> Twisted {
        let fv = self.phi_apply(x.k as i64, v);
        Twisted { w: v.compose(&x.w).compose(&fv.inverse()), k: x.k }
    }

    /// Rebuilds an element from the images of the simple roots.
    pub fn from_key(&self, key: &[u16]) -> Element {
        let mut img = vec![0u16; self.npos];
        img[..self.rank].copy_from_slice(key);
        for &r in &root_order(&self.parent, self.rank) {
            if let Some((j, p)) = self.parent[r] {
                // w(s_j p) = s_{w(α_j)}(w(p))
                img[r] = self.reflection(img[j]).apply(img[p]);
            }
        }
        Element(img.into_boxed_slice())
    }

    /// Image of `S` under `wφ^k` when it lands in `S`: `Some(t)` iff
    /// `wφ^k(α_s) = α_t`.
    pub fn simple_image(&self, x: &Twisted, s: usize) -> Option<usize> {
        let a = self.twisted_action(x);
        let t = a.0[s] as usize;
        (t < self.rank).then_some(t)
    }

    /// Right conjugate `I^v = v⁻¹ I v` at the group level, when it is a set of
    /// simple reflections reached through simple roots.
    pub fn conjugate_subset(&self, i: Subset, v: &Element) -> Option<Subset> {
        let inv = v.inverse();
        let mut out = Subset::EMPTY;
        for s in i.iter() {
            let t = inv.0[s] as usize % self.npos;
            if t >= self.rank {
                return None;
            }
            out.insert(t);
        }
        Some(out)
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        crate::format::word_to_string(word, self.rank)
    }

    pub fn element_string(&self, w: &Element) -> String {
        self.word_string(&self.reduced_word(w))
    }

    /// Roots `Φ_I` (positive indices).
    pub fn parabolic_roots(&self, i: Subset) -> Vec<usize> {
        (0..self.npos).filter(|&r| self.support[r].is_subset(i)).collect()
    }
}

/// Positive roots ordered so that parents come first.
fn root_order(parent: &[Option<(usize, usize)>], rank: usize) -> Vec<usize> {
    let n = parent.len();
    let mut depth = vec![usize::MAX; n];
    fn d(r: usize, parent: &[Option<(usize, usize)>], depth: &mut [usize]) -> usize {
        if depth[r] != usize::MAX {
            return depth[r];
        }
        let v = match parent[r] {
            None => 0,
            Some((_, p)) => d(p, parent, depth) + 1,
        };
        depth[r] = v;
        v
    }
    for r in 0..n {
        d(r, parent, &mut depth);
    }
    let _ = rank;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&r| (depth[r], r));
    order
}
