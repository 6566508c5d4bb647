//! Capacities, admissible n-cubes and the secondary poset.
//!
//! An n-cube labels the Boolean lattice `{0,1}^n` by classes: the bottom gets
//! the trivial class and nothing else does, labels grow along `⪯` (equality
//! allowed) and `|e|` never exceeds the capacity of the label at `e`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use serde_json::json;

use crate::budget::{Budget, Counter};
use crate::error::{Error, Result};
use crate::polarized::RelationSet;
use crate::psid::Psi;

/// Largest abelian set of roots in `l~^{-1,-1}`: roots of the diagonal Levi
/// with `a(E) = -1`, pairwise sums not roots.
pub fn capacity(psi: &Psi, i: usize) -> usize {
    let rs = &psi.spec.rs;
    let minus_one = -num_rational::BigRational::one();
    let verts: Vec<usize> =
        psi.diagonal_levi(i).roots.into_iter().filter(|&r| psi.spec.root_grade(r) == minus_one).collect();
    let adj: Vec<Vec<bool>> = verts
        .iter()
        .map(|&a| verts.iter().map(|&b| a != b && !rs.sum_is_root(&rs.roots[a], &rs.roots[b])).collect())
        .collect();
    max_clique(&adj)
}

/// Exact maximum clique size by branch and bound.
pub fn max_clique(adj: &[Vec<bool>]) -> usize {
    fn grow(adj: &[Vec<bool>], size: usize, cand: Vec<usize>, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (k, &v) in cand.iter().enumerate() {
            if size + cand.len() - k <= *best {
                return;
            }
            let next: Vec<usize> = cand[k + 1..].iter().copied().filter(|&u| adj[v][u]).collect();
            grow(adj, size + 1, next, best);
        }
    }
    let mut best = 0;
    grow(adj, 0, (0..adj.len()).collect(), &mut best);
    best
}

/// Classes, their strict polarized relation and capacities.
#[derive(Debug, Clone)]
pub struct CubeContext {
    pub names: Vec<String>,
    pub trivial: usize,
    pub pol: RelationSet,
    pub cap: Vec<usize>,
}

impl CubeContext {
    pub fn from_psi(psi: &Psi) -> Self {
        let trivial = psi.classes.iter().position(|c| c.is_trivial()).expect("trivial class is always present");
        CubeContext {
            names: psi.names(),
            trivial,
            pol: psi.polarized_relation(),
            cap: (0..psi.classes.len()).map(|i| capacity(psi, i)).collect(),
        }
    }

    fn weakly_below(&self, a: usize, b: usize) -> bool {
        a == b || self.pol.holds(a, b)
    }
}

/// Values indexed by the bitmask of `e`; bit `i` is coordinate `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCube {
    pub n: usize,
    pub values: Vec<usize>,
}

impl NCube {
    pub fn trivial(class: usize) -> Self {
        NCube { n: 0, values: vec![class] }
    }

    /// Least relabeling under coordinate permutations.
    pub fn canonical(&self) -> NCube {
        let mut best: Option<Vec<usize>> = None;
        for perm in permutations(self.n) {
            let v = self.permuted(&perm);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        NCube { n: self.n, values: best.unwrap_or_else(|| self.values.clone()) }
    }

    fn permuted(&self, perm: &[usize]) -> Vec<usize> {
        (0..1usize << self.n)
            .map(|e| {
                let src = (0..self.n).filter(|&i| e & (1 << i) != 0).fold(0, |acc, i| acc | (1 << perm[i]));
                self.values[src]
            })
            .collect()
    }

    pub fn top(&self) -> usize {
        self.values[self.values.len() - 1]
    }

    /// `<mu(e1)|mu(11)|mu(e2)>` for 2-cubes, `<mu(1)>` for 1-cubes.
    pub fn label(&self, names: &[String]) -> String {
        match self.n {
            0 => format!("<{}>", names[self.values[0]]),
            1 => format!("<{}>", names[self.values[1]]),
            2 => format!("<{}|{}|{}>", names[self.values[1]], names[self.values[3]], names[self.values[2]]),
            _ => {
                let parts: Vec<&str> = self.values[1..].iter().map(|&v| names[v].as_str()).collect();
                format!("<{}>", parts.join("|"))
            }
        }
    }

    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let mut values = serde_json::Map::new();
        for (e, &v) in self.values.iter().enumerate() {
            let key: String = (0..self.n).map(|i| if e & (1 << i) != 0 { '1' } else { '0' }).collect();
            values.insert(key, json!(names[v]));
        }
        json!({ "n": self.n, "values": values })
    }

    /// Checks the three defining conditions against a context.
    pub fn is_admissible(&self, ctx: &CubeContext) -> bool {
        let full = 1usize << self.n;
        if self.values.len() != full || self.values[0] != ctx.trivial {
            return false;
        }
        (1..full).all(|e| {
            let v = self.values[e];
            v != ctx.trivial
                && ctx.cap[v] >= e.count_ones() as usize
                && (0..e).filter(|s| s & e == *s).all(|s| ctx.weakly_below(self.values[s], v))
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Admissible `n`-cubes, one per symmetric-group class, sorted.
pub fn enumerate_admissible(ctx: &CubeContext, n: usize, budget: &Budget) -> Result<Vec<NCube>> {
    if n > 16 {
        return Err(Error::Unsupported(format!("cube dimension {n} is too large")));
    }
    let full = 1usize << n;
    let mut order: Vec<usize> = (1..full).collect();
    order.sort_by_key(|&e| (e.count_ones(), e));
    let mut values = vec![usize::MAX; full];
    values[0] = ctx.trivial;
    let mut found: BTreeSet<NCube> = BTreeSet::new();
    let mut counter = budget.counter("cube enumeration");
    fill(ctx, n, &order, 0, &mut values, &mut found, &mut counter)?;
    Ok(found.into_iter().collect())
}

fn fill(
    ctx: &CubeContext,
    n: usize,
    order: &[usize],
    k: usize,
    values: &mut Vec<usize>,
    found: &mut BTreeSet<NCube>,
    counter: &mut Counter,
) -> Result<()> {
    counter.tick()?;
    if k == order.len() {
        found.insert(NCube { n, values: values.clone() }.canonical());
        return Ok(());
    }
    let e = order[k];
    let size = e.count_ones() as usize;
    for v in 0..ctx.names.len() {
        if v == ctx.trivial || ctx.cap[v] < size {
            continue;
        }
        // every proper subface is already filled: they come earlier in `order`
        if (1..e).filter(|s| s & e == *s).all(|s| ctx.weakly_below(values[s], v)) {
            values[e] = v;
            fill(ctx, n, order, k + 1, values, found, counter)?;
        }
    }
    values[e] = usize::MAX;
    Ok(())
}

/// `small` is the pullback of `big` along some injection of axes.
pub fn cube_leq(small: &NCube, big: &NCube) -> bool {
    if small.n > big.n {
        return false;
    }
    injections(small.n, big.n).into_iter().any(|inj| {
        (0..1usize << small.n).all(|e| {
            let img = (0..small.n).filter(|&i| e & (1 << i) != 0).fold(0, |acc, i| acc | (1 << inj[i]));
            big.values[img] == small.values[e]
        })
    })
}

fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, n, &mut Vec::new(), &mut out);
    out
}

/// External verdict on a cube: `Some(false)` removes it.
pub type StrongFilter<'a> = dyn Fn(&NCube, &[String]) -> Option<bool> + 'a;

#[derive(Debug, Clone)]
pub struct SecondaryPoset {
    pub names: Vec<String>,
    pub cubes: Vec<NCube>,
    /// Hasse edges `(i, j)` with `cubes[i] < cubes[j]`.
    pub hasse: Vec<(usize, usize)>,
    /// Cubes dropped by the strong filter.
    pub removed: Vec<NCube>,
}

pub fn secondary_poset(
    ctx: &CubeContext,
    max_n: usize,
    filter: Option<&StrongFilter>,
    budget: &Budget,
) -> Result<SecondaryPoset> {
    let mut cubes = vec![NCube::trivial(ctx.trivial)];
    let mut removed = Vec::new();
    for n in 1..=max_n {
        for c in enumerate_admissible(ctx, n, budget)? {
            match filter.and_then(|f| f(&c, &ctx.names)) {
                Some(false) => removed.push(c),
                _ => cubes.push(c),
            }
        }
    }
    let m = cubes.len();
    let lt: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| i != j && cubes[i].n < cubes[j].n && cube_leq(&cubes[i], &cubes[j])).collect())
        .collect();
    let mut hasse = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if lt[i][j] && !(0..m).any(|k| lt[i][k] && lt[k][j]) {
                hasse.push((i, j));
            }
        }
    }
    Ok(SecondaryPoset { names: ctx.names.clone(), cubes, hasse, removed })
}

impl SecondaryPoset {
    pub fn labels(&self) -> Vec<String> {
        self.cubes.iter().map(|c| c.label(&self.names)).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph secondary {\n  rankdir=BT;\n");
        for (i, l) in self.labels().iter().enumerate() {
            s.push_str(&format!("  c{i} [label=\"{l}\"];\n"));
        }
        for (a, b) in &self.hasse {
            s.push_str(&format!("  c{a} -> c{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "cubes": self.cubes.iter().map(|c| c.to_json(&self.names)).collect::<Vec<_>>(),
            "labels": self.labels(),
            "hasse": self.hasse.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "removedByStrongFilter": self.removed.iter().map(|c| c.label(&self.names)).collect::<Vec<_>>(),
        })
    }
}

/// Capacity per class name; zero for the trivial class.
pub fn capacity_table(psi: &Psi) -> BTreeMap<String, usize> {
    (0..psi.classes.len()).map(|i| (psi.classes[i].name.clone(), capacity(psi, i))).collect()
}

/// Classes whose diagonal Levi is all of `g`.
pub fn full_classes(psi: &Psi) -> Vec<usize> {
    let total = psi.spec.rs.num_roots();
    (0..psi.classes.len())
        .filter(|&i| psi.diagonal_levi(i).roots.len() == total && !psi.classes[i].is_trivial())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psid::{compute_psi, DomainSpec};
    use crate::rational::q;

    fn ctx(root: &str, e: &[i64]) -> (Psi, CubeContext) {
        let psi = compute_psi(&DomainSpec::new(root, e.iter().map(|&x| q(x)).collect()).unwrap(), &Budget::default())
            .unwrap();
        let c = CubeContext::from_psi(&psi);
        (psi, c)
    }

    #[test]
    fn clique_basics() {
        assert_eq!(max_clique(&[]), 0);
        let tri = vec![vec![false, true, true], vec![true, false, true], vec![true, true, false]];
        assert_eq!(max_clique(&tri), 3);
    }

    #[test]
    fn g2_capacities() {
        let (psi, _) = ctx("G2", &[0, 1]);
        let caps = capacity_table(&psi);
        assert_eq!(caps["III"], 2);
        assert_eq!(caps["I"], 1);
        assert_eq!(caps["II"], 1);
        assert_eq!(caps["0"], 0);
    }

    #[test]
    fn g2_c_two_cubes() {
        let (_, c) = ctx("G2", &[0, 1]);
        let cubes = enumerate_admissible(&c, 2, &Budget::default()).unwrap();
        let labels: BTreeSet<String> = cubes.iter().map(|x| x.label(&c.names)).collect();
        let want: BTreeSet<String> =
            ["<I|III|I>", "<I|III|II>", "<I|III|III>", "<II|III|II>", "<II|III|III>", "<III|III|III>"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(labels, want);
        for x in &cubes {
            assert!(x.is_admissible(&c));
        }
    }

    #[test]
    fn fan_for_g2_a() {
        let (_, c) = ctx("G2", &[1, 1]);
        let p = secondary_poset(&c, 2, None, &Budget::default()).unwrap();
        assert_eq!(p.cubes.len(), 4);
        assert_eq!(p.hasse, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn leq_is_partial_order() {
        let (_, c) = ctx("G2", &[0, 1]);
        let p = secondary_poset(&c, 2, None, &Budget::default()).unwrap();
        let cs = &p.cubes;
        for a in cs {
            assert!(cube_leq(a, a));
            for b in cs {
                if a != b && cube_leq(a, b) {
                    assert!(!cube_leq(b, a));
                }
                for d in cs {
                    if cube_leq(a, b) && cube_leq(b, d) {
                        assert!(cube_leq(a, d));
                    }
                }
            }
        }
    }

    #[test]
    fn json_keys() {
        let names: Vec<String> = ["0", "I", "II", "III"].iter().map(|s| s.to_string()).collect();
        let c = NCube { n: 2, values: vec![0, 1, 2, 3] };
        assert_eq!(c.to_json(&names), json!({"n":2,"values":{"00":"0","10":"I","01":"II","11":"III"}}));
    }
}
