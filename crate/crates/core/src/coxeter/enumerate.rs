//! Enumeration of whole groups and parabolic subgroups.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{CoxeterSystem, Element, Subset};

impl CoxeterSystem {
    /// All elements of `W_I`, breadth first from the identity.
    pub fn parabolic_elements(&self, i: Subset) -> Vec<Element> {
        let r = self.rank();
        let mut seen = HashSet::new();
        seen.insert(self.identity().key(r));
        let mut out = vec![self.identity()];
        let mut k = 0;
        while k < out.len() {
            let w = out[k].clone();
            for s in i.iter() {
                let ws = self.rmul_gen(&w, s);
                if seen.insert(ws.key(r)) {
                    out.push(ws);
                }
            }
            k += 1;
        }
        out
    }

    /// Children of `w` in the tree where the parent of `v ≠ 1` is `v·s` for
    /// the least right descent `s` of `v`.
    fn tree_children(&self, w: &Element) -> impl Iterator<Item = Element> + '_ {
        let w = w.clone();
        (0..self.rank()).filter_map(move |s| {
            if w.has_right_descent(s) {
                return None;
            }
            let ws = self.rmul_gen(&w, s);
            (0..s).all(|t| !ws.has_right_descent(t)).then_some(ws)
        })
    }

    fn tree_fold<A, F>(&self, w: &Element, acc: A, f: &F) -> A
    where
        F: Fn(A, &Element) -> A,
    {
        let mut acc = f(acc, w);
        for c in self.tree_children(w) {
            acc = self.tree_fold(&c, acc, f);
        }
        acc
    }

    /// Folds over every element of `W` without storing the group. Subtrees
    /// are processed in parallel, so `reduce` must be associative and
    /// commutative for the result to be deterministic.
    pub fn fold_elements<A, I, F, R>(&self, init: I, f: F, reduce: R) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &Element) -> A + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        // split at a small length so that the parallel roots are plentiful
        let split = 4.min(self.npos());
        let mut acc = init();
        let mut layer = vec![self.identity()];
        for _ in 0..split {
            let mut next = Vec::new();
            for w in &layer {
                acc = f(acc, w);
                next.extend(self.tree_children(w));
            }
            layer = next;
        }
        let rest = layer
            .par_iter()
            .fold(&init, |a, w| self.tree_fold(w, a, &f))
            .reduce(&init, &reduce);
        reduce(acc, rest)
    }
}
