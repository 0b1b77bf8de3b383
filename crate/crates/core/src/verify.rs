//! Independent oracles: normal forms by exhaustive rewriting, brute-force
//! conjugator sets, and homology of decomposition posets.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;

use crate::braid::{Artin, Braid};
use crate::conjcat::{ConjObject, CycCategory};
use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};

/// Words longer than this are refused by the rewriting oracle.
pub const ORACLE_WORD_BOUND: usize = 10;

/// The alternating word `i j i …` of length `m`.
fn alternating(i: usize, j: usize, m: usize) -> Vec<usize> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// All words obtained from `word` by braid relations.
pub fn equivalence_class(sys: &CoxeterSystem, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let r = sys.rank();
    let mut rels = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let m = sys.coxeter_matrix[i][j] as usize;
            if i != j && m >= 2 && m <= word.len() {
                rels.push((alternating(i, j, m), alternating(j, i, m)));
            }
        }
    }
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for (lhs, rhs) in &rels {
            for p in 0..=w.len().saturating_sub(lhs.len()) {
                if w[p..p + lhs.len()] == lhs[..] {
                    let mut v = w.clone();
                    v[p..p + lhs.len()].copy_from_slice(rhs);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    seen
}

/// Normal form computed from the rewriting class alone: the head is the
/// longest prefix that is a reduced word, over all equivalent words.
pub fn oracle_normal_form(sys: &CoxeterSystem, word: &[usize], bound: usize) -> Result<Braid> {
    if word.len() > bound {
        return Err(Error::BoundExceeded(format!("word length {} > {bound}", word.len())));
    }
    if let Some(&g) = word.iter().find(|&&g| g >= sys.rank()) {
        return Err(Error::IndexOutOfRange(g + 1));
    }
    let mut factors = Vec::new();
    let mut cur = word.to_vec();
    while !cur.is_empty() {
        let class = equivalence_class(sys, &cur);
        let mut best: Option<(usize, &Vec<usize>)> = None;
        for w in &class {
            let mut e = sys.identity();
            let mut k = 0;
            for &g in w {
                let next = sys.rmul_gen(&e, g);
                if next.length() <= e.length() {
                    break;
                }
                e = next;
                k += 1;
            }
            if best.is_none_or(|(b, _)| k > b) {
                best = Some((k, w));
            }
        }
        let (k, w) = best.expect("class is non-empty");
        factors.push(sys.element(&w[..k])?);
        cur = w[k..].to_vec();
    }
    Ok(Braid { factors })
}

/// Every element of `W`, breadth first.
pub fn all_simples(sys: &CoxeterSystem) -> Vec<Element> {
    sys.parabolic_elements(crate::coxeter::Subset::full(sys.rank()))
}

/// All braids of canonical length at most `bound`, as normal sequences.
pub fn braids_up_to(sys: &CoxeterSystem, bound: usize) -> Vec<Braid> {
    let simples: Vec<Element> = all_simples(sys).into_iter().filter(|x| !x.is_identity()).collect();
    let mut out = vec![Braid::identity()];
    let mut layer = vec![Braid::identity()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for b in &layer {
            for x in &simples {
                if let Some(last) = b.factors.last() {
                    if !sys.left_descents(x).is_subset(sys.right_descents(last)) {
                        continue;
                    }
                }
                let mut f = b.factors.clone();
                f.push(x.clone());
                next.push(Braid { factors: f });
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `I`-reduced conjugators `x` with `lS(x) ≤ bound`, `x ≼ w·ψ(x)` and
/// `Iˣ ⊆ S`, found by filtering all braids of that length.
pub fn ad_conjugators(cat: &CycCategory<'_>, obj: &ConjObject, bound: usize) -> BTreeSet<Braid> {
    let a = cat.artin;
    let ribbon = crate::ribbon::Ribbon::new(a.sys);
    braids_up_to(a.sys, bound)
        .into_iter()
        .filter(|x| ribbon.is_reduced(obj.source, x))
        .filter(|x| a.conjugate_subset(obj.source, x).is_some())
        .filter(|x| {
            let rhs = a.product(&obj.braid, &a.apply_automorphism(&cat.twist, x));
            a.divides(x, &rhs, crate::coxeter::Side::Left)
        })
        .collect()
}

/// Factorizations of a braid into non-identity simples, ordered by
/// refinement: splitting a factor gives a smaller element.
#[derive(Clone, Debug)]
pub struct DecompositionPoset {
    pub elements: Vec<Vec<Element>>,
    /// `(x, y)` for `x < y`, transitively closed.
    pub relations: Vec<(usize, usize)>,
}

fn decompositions(a: &Artin<'_>, g: &Braid, memo: &mut HashMap<Braid, Vec<Vec<Element>>>) -> Vec<Vec<Element>> {
    if g.is_identity() {
        return vec![vec![]];
    }
    if let Some(v) = memo.get(g) {
        return v.clone();
    }
    let mut out = Vec::new();
    for x in a.simple_prefixes(&g.factors[0]) {
        let rest = a.left_div_simple(g, &x).expect("prefix of the head divides");
        for mut tail in decompositions(a, &rest, memo) {
            tail.insert(0, x.clone());
            out.push(tail);
        }
    }
    memo.insert(g.clone(), out.clone());
    out
}

/// Whether `fine` refines `coarse`: consecutive blocks of `fine` multiply,
/// with lengths adding, to the factors of `coarse`.
fn refines(fine: &[Element], coarse: &[Element]) -> bool {
    if fine.len() < coarse.len() {
        return false;
    }
    let mut k = 0;
    for c in coarse {
        let mut acc: Option<Element> = None;
        let mut len = 0;
        while len < c.length() {
            let Some(f) = fine.get(k) else { return false };
            len += f.length();
            acc = Some(match acc {
                None => f.clone(),
                Some(x) => x.compose(f),
            });
            k += 1;
        }
        if len != c.length() || acc.as_ref() != Some(c) {
            return false;
        }
    }
    k == fine.len()
}

pub fn decomposition_poset(a: &Artin<'_>, g: &Braid, bound: usize) -> Result<DecompositionPoset> {
    if g.length() > bound {
        return Err(Error::BoundExceeded(format!("atom length {} > {bound}", g.length())));
    }
    let mut elements = decompositions(a, g, &mut HashMap::new());
    elements.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let mut relations = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if x.len() > y.len() && refines(x, y) {
                relations.push((i, j));
            }
        }
    }
    Ok(DecompositionPoset { elements, relations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopologyEvidence {
    pub connected: bool,
    pub h1_rank: usize,
}

/// Rank over `ℚ` of a sparse matrix given by rows of `(column, ±1)` entries.
fn rank(rows: Vec<Vec<(usize, i64)>>) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigRational)>> = HashMap::new();
    let mut r = 0;
    for row in rows {
        let mut v: std::collections::BTreeMap<usize, BigRational> = row
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(j, c)| (j, BigRational::from_integer(c.into())))
            .collect();
        while let Some((j, c)) = v.iter().next().map(|(&j, c)| (j, c.clone())) {
            let Some(p) = pivots.get(&j) else {
                let normalized: Vec<(usize, BigRational)> = v.into_iter().map(|(k, x)| (k, x / &c)).collect();
                pivots.insert(j, normalized);
                r += 1;
                break;
            };
            for (k, x) in p {
                let e = v.entry(*k).or_insert_with(BigRational::zero);
                *e -= &c * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }
    r
}

/// Connectivity and first rational Betti number of the order complex.
pub fn check_simply_connected_evidence(p: &DecompositionPoset) -> TopologyEvidence {
    let n = p.elements.len();
    let less: HashSet<(usize, usize)> = p.relations.iter().copied().collect();
    let edges: Vec<(usize, usize)> = {
        let mut e: Vec<(usize, usize)> = p.relations.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        e.sort();
        e.dedup();
        e
    };
    let edge_index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut triangles = Vec::new();
    for &(x, y) in &p.relations {
        for &(y2, z) in &p.relations {
            if y2 == y && less.contains(&(x, z)) {
                triangles.push((x, y, z));
            }
        }
    }
    let edge = |u: usize, v: usize| edge_index[&(u.min(v), u.max(v))];
    let d1: Vec<Vec<(usize, i64)>> = edges.iter().map(|&(u, v)| vec![(u, -1), (v, 1)]).collect();
    let d2: Vec<Vec<(usize, i64)>> = triangles
        .iter()
        .map(|&(x, y, z)| {
            // oriented along the chain x < y < z
            let sign = |u: usize, v: usize| if u < v { 1 } else { -1 };
            vec![(edge(y, z), sign(y, z)), (edge(x, z), -sign(x, z)), (edge(x, y), sign(x, y))]
        })
        .collect();
    let r1 = rank(d1);
    let r2 = rank(d2);
    let components = n - r1;
    TopologyEvidence { connected: n > 0 && components == 1, h1_rank: edges.len() - r1 - r2 }
}
