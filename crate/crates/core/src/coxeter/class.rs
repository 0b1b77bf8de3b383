//! Twisted conjugacy classes by closure under generator conjugation, and
//! centralizers through Schreier generators.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{CoxeterSystem, Element, Twisted};
use crate::error::{Error, Result};

/// A full twisted conjugacy class, stored by keys with a spanning tree of
/// generator conjugations rooted at the starting element.
pub struct ClassEnumeration {
    pub k: u32,
    pub keys: Vec<Box<[u16]>>,
    pub lengths: Vec<u16>,
    /// `(parent index, generator)`; the root points to itself.
    pub parent: Vec<(u32, u8)>,
    index: HashMap<Box<[u16]>, u32>,
}

impl ClassEnumeration {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn position(&self, key: &[u16]) -> Option<usize> {
        self.index.get(key).map(|&i| i as usize)
    }

    pub fn min_length(&self) -> usize {
        self.lengths.iter().copied().min().unwrap_or(0) as usize
    }
}

impl CoxeterSystem {
    fn twisted_length(&self, x: &Twisted) -> usize {
        x.w.length()
    }

    /// A conjugate of minimal length, reached by conjugations that never
    /// increase the length.
    pub fn minimal_length_conjugate(&self, x: &Twisted) -> Twisted {
        let r = self.rank();
        let mut cur = x.clone();
        'outer: loop {
            let l = self.twisted_length(&cur);
            let mut seen: HashSet<Box<[u16]>> = HashSet::new();
            seen.insert(cur.w.key(r));
            let mut stack = vec![cur.clone()];
            while let Some(y) = stack.pop() {
                for i in 0..r {
                    let z = self.conjugate_by_gen(i, &y);
                    let lz = self.twisted_length(&z);
                    if lz < l {
                        cur = z;
                        continue 'outer;
                    }
                    if lz == l && seen.insert(z.w.key(r)) {
                        stack.push(z);
                    }
                }
            }
            return cur;
        }
    }

    /// Whole twisted class of `x`.
    pub fn enumerate_class(&self, x: &Twisted, cap: usize) -> Result<ClassEnumeration> {
        let r = self.rank();
        let start = self.minimal_length_conjugate(x);
        let mut out = ClassEnumeration {
            k: x.k,
            keys: vec![start.w.key(r)],
            lengths: vec![start.w.length() as u16],
            parent: vec![(0, 0)],
            index: HashMap::new(),
        };
        out.index.insert(start.w.key(r), 0);
        let mut frontier: Vec<(u32, Twisted)> = vec![(0, start)];
        while !frontier.is_empty() {
            let found: Vec<Vec<(Box<[u16]>, u16, u8)>> = frontier
                .par_iter()
                .map(|(_, y)| {
                    (0..r)
                        .map(|i| {
                            let z = self.conjugate_by_gen(i, y);
                            (z.w.key(r), z.w.length() as u16, i as u8)
                        })
                        .collect()
                })
                .collect();
            let mut next_idx = Vec::new();
            for ((pi, _), cands) in frontier.iter().zip(found) {
                for (key, len, g) in cands {
                    if out.index.contains_key(&key) {
                        continue;
                    }
                    let id = out.keys.len() as u32;
                    out.index.insert(key.clone(), id);
                    out.keys.push(key);
                    out.lengths.push(len);
                    out.parent.push((*pi, g));
                    next_idx.push(id);
                    if out.keys.len() > cap {
                        return Err(Error::BoundExceeded(format!("class larger than {cap}")));
                    }
                }
            }
            frontier = next_idx
                .into_par_iter()
                .map(|id| (id, Twisted { w: self.from_key(&out.keys[id as usize]), k: x.k }))
                .collect();
        }
        Ok(out)
    }

    /// Class elements of the given length in canonical order (lexicographic on
    /// the least reduced word).
    pub fn enumerate_class_at_length(&self, x: &Twisted, length: usize, cap: usize) -> Result<Vec<Twisted>> {
        let start = self.minimal_length_conjugate(x);
        if length < start.w.length() {
            return Ok(vec![]);
        }
        let class = self.enumerate_class(&start, cap)?;
        Ok(self.class_elements_at_length(&class, length))
    }

    pub fn class_elements_at_length(&self, class: &ClassEnumeration, length: usize) -> Vec<Twisted> {
        let mut out: Vec<(Vec<usize>, Twisted)> = class
            .keys
            .par_iter()
            .zip(class.lengths.par_iter())
            .filter(|(_, &l)| l as usize == length)
            .map(|(key, _)| {
                let w = self.from_key(key);
                (self.reduced_word(&w), Twisted { w, k: class.k })
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter().map(|(_, t)| t).collect()
    }

    /// `t` with `t · x₀ · φ^k(t)⁻¹ = x` where `x₀` is the root of the class.
    pub fn transversal(&self, class: &ClassEnumeration, mut idx: usize) -> Element {
        let mut gens = Vec::new();
        while idx != 0 {
            let (p, g) = class.parent[idx];
            gens.push(g as usize);
            idx = p as usize;
        }
        // x = s_{g1} (s_{g2} (... x0 ...)) with g1 the last step
        let mut t = self.identity();
        for &g in gens.iter() {
            t = t.compose(self.gen(g));
        }
        t
    }

    /// Centralizer `{v : v·x₀·φ^k(v)⁻¹ = x₀}` of the class root, as a full list
    /// of elements. Fails beyond `cap` elements.
    pub fn centralizer(&self, class: &ClassEnumeration, cap: usize) -> Result<Vec<Element>> {
        let target = self.order() / class.len() as u128;
        if target > cap as u128 {
            return Err(Error::BoundExceeded(format!("centralizer of order {target}")));
        }
        let r = self.rank();
        let x0 = Twisted { w: self.from_key(&class.keys[0]), k: class.k };
        let mut gens: Vec<Element> = Vec::new();
        let mut group: Vec<Element> = vec![self.identity()];
        let mut members: HashSet<Box<[u16]>> = HashSet::new();
        members.insert(self.identity().key(r));
        'scan: for idx in 0..class.len() {
            let tx = self.transversal(class, idx);
            let x = self.conjugate(&tx, &x0);
            for s in 0..r {
                if group.len() as u128 == target {
                    break 'scan;
                }
                let z = self.conjugate_by_gen(s, &x);
                let zi = class.position(&z.w.key(r)).expect("class is closed");
                let tz = self.transversal(class, zi);
                let g = tz.inverse().compose(self.gen(s)).compose(&tx);
                if members.contains(&g.key(r)) {
                    continue;
                }
                debug_assert_eq!(self.conjugate(&g, &x0), x0);
                gens.push(g);
                // closure under right multiplication by the generators
                let mut k = 0;
                while k < group.len() {
                    let h = group[k].clone();
                    for gen in &gens {
                        let p = h.compose(gen);
                        if members.insert(p.key(r)) {
                            group.push(p);
                            if group.len() > cap {
                                return Err(Error::BoundExceeded("centralizer".into()));
                            }
                        }
                    }
                    k += 1;
                }
            }
        }
        debug_assert_eq!(group.len() as u128, target);
        Ok(group)
    }
}
