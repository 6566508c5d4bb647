//! Polarized relations between period-domain classes.
//!
//! `d1 ⪯ d2` holds when every primitive piece of `d1` can be given a Hodge
//! diamond on its own period domain so that the shifted sum of those diamonds
//! is `d2`. The search is a finite product over the pieces.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use crate::budget::{Budget, Counter};
use crate::diamonds::{enumerate_diamonds, primitive_decomposition, HodgeDiamond, HodgeNumbers};
use crate::error::{Error, Result};
use crate::fixtures::Family;

type Shifted = BTreeMap<(i64, i64), u64>;

fn shifted_sum(d: &HodgeDiamond, k: u32) -> Shifted {
    let mut out = Shifted::new();
    for (&(p, q), &v) in &d.entries {
        for a in 0..=k as i64 {
            *out.entry((p as i64 - a, q as i64 - a)).or_default() += v;
        }
    }
    out
}

pub fn is_polarized(d1: &HodgeDiamond, d2: &HodgeDiamond, h: &HodgeNumbers, budget: &Budget) -> Result<bool> {
    if d1.weight != h.weight || d2.weight != h.weight {
        return Err(Error::Mismatch("diamonds and Hodge numbers have different weights".into()));
    }
    let prim = primitive_decomposition(d1)?;
    let target: Shifted = d2.entries.iter().map(|(&(p, q), &v)| ((p as i64, q as i64), v)).collect();
    // largest strings first: they have the fewest choices and prune hardest
    let mut choices: Vec<Vec<Shifted>> = Vec::new();
    for &k in prim.pieces.keys().rev() {
        let hk = prim.piece_hodge_numbers(k);
        let cands: Vec<Shifted> =
            enumerate_diamonds(&hk, budget)?.iter().map(|d| shifted_sum(d, k)).filter(|s| fits(s, &target)).collect();
        if cands.is_empty() {
            return Ok(false);
        }
        choices.push(cands);
    }
    let mut counter = budget.counter("polarized search");
    search(&choices, 0, &mut Shifted::new(), &target, &mut counter)
}

fn fits(s: &Shifted, target: &Shifted) -> bool {
    s.iter().all(|(k, &v)| target.get(k).is_some_and(|&t| v <= t))
}

fn search(
    choices: &[Vec<Shifted>],
    i: usize,
    acc: &mut Shifted,
    target: &Shifted,
    counter: &mut Counter,
) -> Result<bool> {
    counter.tick()?;
    if i == choices.len() {
        return Ok(acc == target);
    }
    for c in &choices[i] {
        for (k, &v) in c {
            *acc.entry(*k).or_default() += v;
        }
        let ok = fits(acc, target) && search(choices, i + 1, acc, target, counter)?;
        for (k, &v) in c {
            let e = acc.get_mut(k).expect("entry added above");
            *e -= v;
            if *e == 0 {
                acc.remove(k);
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A strict relation on a list of named classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub classes: Vec<String>,
    /// `(i, j)`: class `i` relates to class `j`, never `i == j`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl RelationSet {
    pub fn new(classes: Vec<String>) -> Self {
        RelationSet { classes, edges: BTreeSet::new() }
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c == name)
    }

    /// Edges not implied by a two-step path; the arrows worth drawing.
    pub fn generating(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, c)| !(0..self.classes.len()).any(|b| self.holds(a, b) && self.holds(b, c)))
            .collect()
    }

    pub fn named_edges(&self) -> BTreeSet<(String, String)> {
        self.edges.iter().map(|&(a, b)| (self.classes[a].clone(), self.classes[b].clone())).collect()
    }

    /// Every total order on these classes, seen through the edges.
    pub fn is_total_order(&self) -> bool {
        let n = self.classes.len();
        transitivity_report(self).is_empty()
            && (0..n).all(|i| (0..n).all(|j| i == j || self.holds(i, j) != self.holds(j, i)))
    }

    pub fn to_json(&self, key: &str) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        let mut v = json!({ "classes": self.classes });
        v[key] = json!(edges);
        v
    }

    /// Solid arrows for generating edges; `dashed` adds relations drawn dashed.
    pub fn to_dot(&self, name: &str, dashed: &[(usize, usize)]) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, c) in self.classes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", c.replace('"', "\\\"")));
        }
        for (a, b) in self.generating() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        for &(a, b) in dashed {
            if !self.holds(a, b) {
                s.push_str(&format!("  n{a} -> n{b} [style=dashed];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Triples `a ⪯ b ⪯ c` with `a ⪯̸ c`.
pub fn transitivity_report(r: &RelationSet) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &(a, b) in &r.edges {
        for &(b2, c) in r.edges.range((b, 0)..(b + 1, 0)) {
            debug_assert_eq!(b, b2);
            if a != c && !r.holds(a, c) {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Enumerated classes with their display names.
pub fn named_classes(h: &HodgeNumbers, budget: &Budget) -> Result<Vec<(String, HodgeDiamond)>> {
    let ds = enumerate_diamonds(h, budget)?;
    let fam = Family::detect(h);
    Ok(ds
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            let name = fam.and_then(|f| f.name_of(&d)).unwrap_or_else(|| format!("D{i}"));
            (name, d)
        })
        .collect())
}

pub fn polarized_digraph(h: &HodgeNumbers, budget: &Budget) -> Result<RelationSet> {
    let classes = named_classes(h, budget)?;
    let mut r = RelationSet::new(classes.iter().map(|(n, _)| n.clone()).collect());
    for (i, (_, a)) in classes.iter().enumerate() {
        for (j, (_, b)) in classes.iter().enumerate() {
            if i != j && is_polarized(a, b, h, budget)? {
                r.edges.insert((i, j));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hn(w: u32, h: &[u64]) -> HodgeNumbers {
        HodgeNumbers::new(w, h.to_vec()).unwrap()
    }

    #[test]
    fn cy2_non_transitive() {
        let r = polarized_digraph(&hn(3, &[1, 2, 2, 1]), &Budget::default()).unwrap();
        assert_eq!(r.edges.len(), 14);
        let w: Vec<(String, String, String)> = transitivity_report(&r)
            .into_iter()
            .map(|(a, b, c)| (r.classes[a].clone(), r.classes[b].clone(), r.classes[c].clone()))
            .collect();
        assert!(w.contains(&("II0".into(), "II1".into(), "IV2".into())));
    }

    #[test]
    fn curves_chain() {
        let r = polarized_digraph(&hn(1, &[3, 3]), &Budget::default()).unwrap();
        assert!(r.is_total_order());
        assert_eq!(r.generating(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn self_relation_found_by_search() {
        let h = hn(2, &[2, 4, 2]);
        for (_, d) in named_classes(&h, &Budget::default()).unwrap() {
            assert!(is_polarized(&d, &d, &h, &Budget::default()).unwrap());
        }
    }

    #[test]
    fn dot_shape() {
        let r = polarized_digraph(&hn(2, &[1, 3, 1]), &Budget::default()).unwrap();
        let dot = r.to_dot("k3", &[]);
        assert!(dot.contains("label=\"II\""));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
