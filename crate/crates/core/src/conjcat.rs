//! Cyclic (twisted) conjugacy categories over `B⁺` and `B⁺(𝓘)`.
//!
//! An object is a morphism `I --w--> ψ(I)` of the ribbon category, where `ψ`
//! is the twisting automorphism; over `B⁺` the source is empty. A simple
//! conjugator `v ≼ w` with `Iᵛ ⊆ S` sends it to `Iᵛ --(v\w)·ψ(v)--> ψ(Iᵛ)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde_json::json;

use crate::braid::{Artin, Braid};
use crate::coxeter::{Automorphism, CoxeterSystem, Side, Subset};
use crate::error::{Error, Result};
use crate::ribbon::Ribbon;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ConjObject {
    pub source: Subset,
    pub braid: Braid,
}

impl ConjObject {
    pub fn plain(braid: Braid) -> ConjObject {
        ConjObject { source: Subset::EMPTY, braid }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub conjugator: Braid,
    pub simple: bool,
}

#[derive(Clone, Debug)]
pub struct CategoryGraph {
    pub nodes: Vec<ConjObject>,
    pub edges: Vec<Edge>,
    pub fixed: Option<Automorphism>,
    /// BFS depth reached.
    pub depth: usize,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct EndoReport {
    /// Indecomposable endomorphisms found.
    pub generators: Vec<Braid>,
    /// All endomorphisms within the bound, identity included.
    pub loops: Vec<Braid>,
    /// Whether some twisted power of the object is divisible by the
    /// ribbon Garside map.
    pub hypothesis_verified: bool,
}

pub const DEFAULT_MAX_NODES: usize = 1_000_000;

/// The cyclic conjugacy category for a twisting automorphism `ψ`.
#[derive(Clone)]
pub struct CycCategory<'a> {
    pub artin: Artin<'a>,
    pub twist: Automorphism,
}

/// The automorphism `Φ` induced by conjugation by `w₀`.
pub fn delta_automorphism(sys: &CoxeterSystem) -> Automorphism {
    let w0 = sys.w0();
    let perm: Vec<usize> = (0..sys.rank()).map(|i| w0.apply(i as u16) as usize % sys.npos()).collect();
    sys.automorphism(&perm).expect("conjugation by w0 permutes S")
}

pub fn identity_automorphism(sys: &CoxeterSystem) -> Automorphism {
    let perm: Vec<usize> = (0..sys.rank()).collect();
    sys.automorphism(&perm).expect("identity")
}

impl<'a> CycCategory<'a> {
    /// Twisted by the system's own `φ`.
    pub fn new(sys: &'a CoxeterSystem) -> CycCategory<'a> {
        CycCategory { artin: Artin::new(sys), twist: sys.phi.clone() }
    }

    pub fn with_twist(sys: &'a CoxeterSystem, twist: Automorphism) -> CycCategory<'a> {
        CycCategory { artin: Artin::new(sys), twist }
    }

    fn sys(&self) -> &'a CoxeterSystem {
        self.artin.sys
    }

    /// Checks that `I --w--> ψ(I)` is a ribbon morphism.
    pub fn object(&self, source: Subset, braid: Braid) -> Result<ConjObject> {
        let m = Ribbon::new(self.sys()).make_morphism(source, &braid)?;
        if m.target != source.map(&self.twist.perm) {
            return Err(Error::Other("target is not the twisted source".into()));
        }
        Ok(ConjObject { source, braid })
    }

    /// `(v\w)·ψ(v)` with source `Iᵛ`.
    pub fn cyc_step(&self, obj: &ConjObject, v: &Braid) -> Result<ConjObject> {
        let a = self.artin;
        let q = a.left_quotient(v, &obj.braid)?;
        let source = a.conjugate_subset(obj.source, v).ok_or(Error::ConjugatesOutOfS)?;
        Ok(ConjObject { source, braid: a.product(&q, &a.apply_automorphism(&self.twist, v)) })
    }

    /// General conjugation `x⁻¹·w·ψ(x)` when `x ≼ w·ψ(x)`.
    pub fn ad_step(&self, obj: &ConjObject, x: &Braid) -> Result<ConjObject> {
        let a = self.artin;
        let rhs = a.product(&obj.braid, &a.apply_automorphism(&self.twist, x));
        let q = a.left_quotient(x, &rhs)?;
        let source = a.conjugate_subset(obj.source, x).ok_or(Error::ConjugatesOutOfS)?;
        Ok(ConjObject { source, braid: q })
    }

    /// Non-identity simple left divisors `v` of `w` with `Iᵛ ⊆ S`, optionally
    /// restricted to those fixed by `fixed`, in canonical order.
    pub fn simple_conjugators(&self, obj: &ConjObject, fixed: Option<&Automorphism>) -> Vec<Braid> {
        let Some(h) = obj.braid.factors.first() else { return vec![] };
        self.artin
            .simple_prefixes(h)
            .into_iter()
            .filter(|v| self.sys().conjugate_subset(obj.source, v).is_some())
            .filter(|v| fixed.is_none_or(|f| &f.apply(v) == v))
            .map(|v| self.artin.simple(&v))
            .collect()
    }

    /// Breadth-first closure under simple cyclic conjugations.
    pub fn explore_component(
        &self,
        start: &ConjObject,
        fixed: Option<&Automorphism>,
        max_nodes: usize,
    ) -> CategoryGraph {
        let mut nodes = vec![start.clone()];
        let mut index: HashMap<ConjObject, usize> = HashMap::from([(start.clone(), 0)]);
        let mut depth_of = vec![0usize];
        let mut edges = Vec::new();
        let mut complete = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let obj = nodes[i].clone();
            for v in self.simple_conjugators(&obj, fixed) {
                let next = self.cyc_step(&obj, &v).expect("simple conjugators divide");
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        if nodes.len() >= max_nodes {
                            complete = false;
                            continue;
                        }
                        let j = nodes.len();
                        index.insert(next.clone(), j);
                        nodes.push(next);
                        depth_of.push(depth_of[i] + 1);
                        queue.push_back(j);
                        j
                    }
                };
                edges.push(Edge { from: i, to: j, conjugator: v, simple: true });
            }
        }
        CategoryGraph {
            nodes,
            edges,
            fixed: fixed.cloned(),
            depth: depth_of.into_iter().max().unwrap_or(0),
            complete,
        }
    }

    /// Whether some twisted power `(wψ)ⁿ`, `n ≤ max_power`, is left-divisible
    /// by the ribbon Garside map at the source.
    pub fn divisibility_hypothesis(&self, obj: &ConjObject, max_power: usize) -> bool {
        let a = self.artin;
        let g = Ribbon::new(self.sys()).garside_map(obj.source).braid;
        let mut acc = Braid::identity();
        let mut cur = obj.braid.clone();
        for _ in 0..max_power {
            acc = a.product(&acc, &cur);
            if a.divides(&g, &acc, Side::Left) {
                return true;
            }
            cur = a.apply_automorphism(&self.twist, &cur);
        }
        false
    }

    /// All cyc conjugators from `obj` of canonical length at most `bound`,
    /// with their target objects, in discovery order.
    pub fn cyc_conjugators(
        &self,
        obj: &ConjObject,
        fixed: Option<&Automorphism>,
        bound: usize,
    ) -> Vec<(Braid, ConjObject)> {
        let a = self.artin;
        let mut seen: HashSet<Braid> = HashSet::from([Braid::identity()]);
        let mut out = vec![(Braid::identity(), obj.clone())];
        let mut pos = 0;
        while pos < out.len() {
            let (x, o) = out[pos].clone();
            pos += 1;
            for v in self.simple_conjugators(&o, fixed) {
                let y = a.product(&x, &v);
                if y.canonical_length() > bound || seen.contains(&y) {
                    continue;
                }
                let next = self.cyc_step(&o, &v).expect("simple conjugators divide");
                seen.insert(y.clone());
                out.push((y, next));
            }
        }
        out
    }

    /// Indecomposable endomorphisms at `obj` up to canonical length `bound`.
    pub fn endo_generators(&self, obj: &ConjObject, fixed: Option<&Automorphism>, bound: usize) -> EndoReport {
        let a = self.artin;
        let mut loops: Vec<Braid> = self
            .cyc_conjugators(obj, fixed, bound)
            .into_iter()
            .filter(|(_, o)| o == obj)
            .map(|(x, _)| x)
            .collect();
        loops.sort_by(|x, y| x.length().cmp(&y.length()).then_with(|| x.cmp(y)));
        let generators = loops
            .iter()
            .filter(|e| !e.is_identity())
            .filter(|e| {
                !loops.iter().any(|f| !f.is_identity() && f != *e && a.divides(f, e, Side::Left))
            })
            .cloned()
            .collect();
        let hypothesis_verified = self.divisibility_hypothesis(obj, 4 * self.sys().npos().max(1) + 4);
        EndoReport { generators, loops, hypothesis_verified }
    }

    /// Whether `x` is a composite of simple cyc conjugations starting at `obj`.
    pub fn is_cyc_conjugator(&self, obj: &ConjObject, x: &Braid, fixed: Option<&Automorphism>) -> bool {
        let mut failed = HashSet::new();
        self.reach(obj, x, fixed, &mut failed)
    }

    fn reach(
        &self,
        obj: &ConjObject,
        x: &Braid,
        fixed: Option<&Automorphism>,
        failed: &mut HashSet<(ConjObject, Braid)>,
    ) -> bool {
        if x.is_identity() {
            return true;
        }
        if failed.contains(&(obj.clone(), x.clone())) {
            return false;
        }
        for v in self.simple_conjugators(obj, fixed) {
            if let Ok(rest) = self.artin.left_quotient(&v, x) {
                let next = self.cyc_step(obj, &v).expect("simple conjugators divide");
                if self.reach(&next, &rest, fixed, failed) {
                    return true;
                }
            }
        }
        failed.insert((obj.clone(), x.clone()));
        false
    }

    /// Left gcd of two conjugators from the same object.
    pub fn gcd_in_cyc(&self, x: &Braid, y: &Braid) -> Braid {
        self.artin.left_gcd(x, y)
    }

    fn node_label(&self, o: &ConjObject) -> String {
        let w = self.artin.word_string(&o.braid);
        let w = if w.is_empty() { ".".to_string() } else { w };
        if o.source.is_empty() {
            w
        } else {
            format!("{} {}", o.source, w)
        }
    }

    pub fn to_dot(&self, g: &CategoryGraph) -> String {
        let mut s = String::from("digraph cyc {\n");
        for (i, o) in g.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{} [label=\"{}\"];", i, self.node_label(o));
        }
        for e in &g.edges {
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                self.artin.word_string(&e.conjugator)
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, g: &CategoryGraph) -> serde_json::Value {
        let nodes: Vec<_> = g
            .nodes
            .iter()
            .map(|o| json!({"source": o.source.labels(), "word": self.artin.word_string(&o.braid)}))
            .collect();
        let edges: Vec<_> = g
            .edges
            .iter()
            .map(|e| {
                json!({
                    "from": e.from,
                    "to": e.to,
                    "conjugator": self.artin.word_string(&e.conjugator),
                    "simple": e.simple,
                })
            })
            .collect();
        json!({"nodes": nodes, "edges": edges, "complete": g.complete})
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_word;

    fn b(a: &Artin<'_>, w: &str) -> Braid {
        a.from_word(&parse_word(w, a.sys.rank()).unwrap()).unwrap()
    }

    #[test]
    fn a2_component() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let c = CycCategory::new(&sys);
        let a = c.artin;
        let start = ConjObject::plain(b(&a, "12"));
        let next = c.cyc_step(&start, &b(&a, "1")).unwrap();
        assert_eq!(a.word_string(&next.braid), "21");
        assert_eq!(c.cyc_step(&start, &start.braid).unwrap(), start);
        let conj: Vec<_> = c.simple_conjugators(&start, None).iter().map(|v| a.word_string(v)).collect();
        assert_eq!(conj, vec!["1", "12"]);
        let g = c.explore_component(&start, None, DEFAULT_MAX_NODES);
        assert_eq!((g.nodes.len(), g.edges.len(), g.complete), (2, 4, true));
        let dot = c.to_dot(&g);
        assert!(dot.contains("[label=\"1\"]") && dot.contains("[label=\"2\"]"));
    }

    #[test]
    fn ribbon_object_filter() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let c = CycCategory::new(&sys);
        let a = c.artin;
        let obj = c.object(Subset::single(0), b(&a, "2112")).unwrap();
        let conj: Vec<_> = c.simple_conjugators(&obj, None).iter().map(|v| a.word_string(v)).collect();
        assert_eq!(conj, vec!["21"]);
    }

    #[test]
    fn delta_squared_endos() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let c = CycCategory::new(&sys);
        let a = c.artin;
        let d = a.delta();
        let obj = ConjObject::plain(a.product(&d, &d));
        let r = c.endo_generators(&obj, None, 1);
        assert!(r.hypothesis_verified);
        assert!(r.loops.contains(&d));
    }

    #[test]
    fn empty_dot() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let c = CycCategory::new(&sys);
        let g = CategoryGraph { nodes: vec![], edges: vec![], fixed: None, depth: 0, complete: true };
        assert_eq!(c.to_dot(&g), "digraph cyc {\n}\n");
    }
}
