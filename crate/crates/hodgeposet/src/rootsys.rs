//! Root systems in simple-root coordinates.
//!
//! A root is an integer vector over the simple roots. The only metric data is
//! the symmetric form `(a_i, a_j)`; coroot pairings are derived from it, so no
//! Euclidean model is ever built. Grading vectors are rational covectors
//! `c_i = a_i(v)`, which makes `root(v)` a plain dot product.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, solve, Matrix, Q};

pub type Root = Vec<i64>;
/// A Weyl group element stored as the permutation it induces on root indices.
pub type Perm = Vec<usize>;

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub name: String,
    pub rank: usize,
    /// `form[i][j] = (a_i, a_j)`, integral with the shortest roots of length 2.
    pub form: Vec<Vec<i64>>,
    /// `cartan[i][j] = <a_i, a_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    pub positive: Vec<Root>,
    /// Positive roots followed by their negatives, in the same order.
    pub roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

fn chain(n: usize, diag: i64, off: i64) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0; n]; n];
    for i in 0..n {
        b[i][i] = diag;
        if i + 1 < n {
            b[i][i + 1] = off;
            b[i + 1][i] = off;
        }
    }
    b
}

fn link(b: &mut [Vec<i64>], i: usize, j: usize, v: i64) {
    b[i][j] = v;
    b[j][i] = v;
}

fn symmetric_form(letter: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let unsupported = || Error::Unsupported(format!("root system {letter}{n}"));
    let b = match letter {
        'A' if (1..=8).contains(&n) => chain(n, 2, -1),
        'B' if (2..=8).contains(&n) => {
            let mut b = chain(n, 4, -2);
            b[n - 1][n - 1] = 2;
            b
        }
        'C' if (2..=8).contains(&n) => {
            let mut b = chain(n, 2, -1);
            b[n - 1][n - 1] = 4;
            link(&mut b, n - 2, n - 1, -2);
            b
        }
        'D' if (4..=8).contains(&n) => {
            let mut b = chain(n - 1, 2, -1);
            for row in b.iter_mut() {
                row.push(0);
            }
            b.push(vec![0; n]);
            b[n - 1][n - 1] = 2;
            link(&mut b, n - 3, n - 1, -1);
            b
        }
        'E' if (6..=8).contains(&n) => {
            // 1-3-4-5-6-7-8 with 2 hanging off 4
            let mut b = vec![vec![0; n]; n];
            for (i, row) in b.iter_mut().enumerate() {
                row[i] = 2;
            }
            link(&mut b, 0, 2, -1);
            link(&mut b, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
            b
        }
        'F' if n == 4 => {
            let mut b = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
            b[0][0] = 4;
            b
        }
        'G' if n == 2 => vec![vec![2, -3], vec![-3, 6]],
        _ => return Err(unsupported()),
    };
    Ok(b)
}

impl RootSystem {
    /// Builds the system named like "G2", "C4", "D4", "F4", "E6".
    pub fn build(name: &str) -> Result<Self> {
        let name = name.trim().to_ascii_uppercase();
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(|| Error::Config("empty root system name".into()))?;
        let n: usize =
            chars.as_str().parse().map_err(|_| Error::Config(format!("cannot parse root system name {name:?}")))?;
        let form = symmetric_form(letter, n)?;
        let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * form[i][j] / form[j][j]).collect()).collect();
        let mut rs =
            RootSystem { name, rank: n, form, cartan, positive: Vec::new(), roots: Vec::new(), index: HashMap::new() };
        rs.generate();
        Ok(rs)
    }

    fn generate(&mut self) {
        let n = self.rank;
        let simple: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        let mut seen: BTreeSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.into();
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let s = self.reflect_simple(i, &b);
                if s.iter().all(|&c| c >= 0) && s.iter().any(|&c| c > 0) && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut pos: Vec<Root> = seen.into_iter().collect();
        pos.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let neg: Vec<Root> = pos.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
        self.positive = pos.clone();
        self.roots = pos.into_iter().chain(neg).collect();
        self.index = self.roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    /// `<a, b^vee> = 2(a,b)/(b,b)`; integral whenever both are roots.
    pub fn coroot_pairing(&self, a: &[i64], b: &[i64]) -> Q {
        Q::new((2 * self.inner(a, b)).into(), self.inner(b, b).into())
    }

    fn reflect_simple(&self, i: usize, v: &[i64]) -> Root {
        let c: i64 = (0..self.rank).map(|j| v[j] * self.cartan[j][i]).sum();
        let mut out = v.to_vec();
        out[i] -= c;
        out
    }

    /// `s_a(v) = v - <v, a^vee> a` for a root `a`.
    pub fn reflect(&self, a: &[i64], v: &[i64]) -> Root {
        let c = 2 * self.inner(v, a) / self.inner(a, a);
        v.iter().zip(a).map(|(x, y)| x - c * y).collect()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.positive.len()
    }

    pub fn negate(&self, idx: usize) -> usize {
        let p = self.positive.len();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    pub fn sum_is_root(&self, a: &[i64], b: &[i64]) -> bool {
        let s: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.is_root(&s)
    }

    /// Neither `a+b` nor `a-b` is a root; a root is never strongly orthogonal to `+-` itself.
    pub fn strongly_orthogonal(&self, a: &[i64], b: &[i64]) -> bool {
        let neg: Root = b.iter().map(|x| -x).collect();
        if a == b || a == neg.as_slice() {
            return false;
        }
        !self.sum_is_root(a, b) && !self.sum_is_root(a, &neg)
    }

    /// `root(v)` for a grading covector given by its values on simple roots.
    pub fn pair(&self, root: &[i64], v: &[Q]) -> Q {
        let mut s = Q::zero();
        for (c, x) in root.iter().zip(v) {
            if *c != 0 {
                s += Q::from_integer((*c).into()) * x;
            }
        }
        s
    }

    pub fn reflection_perm(&self, a: &[i64]) -> Perm {
        self.roots.iter().map(|r| self.index[&self.reflect(a, r)]).collect()
    }

    pub fn simple_reflections(&self) -> Vec<Perm> {
        (0..self.rank).map(|i| self.reflection_perm(&unit(self.rank, i))).collect()
    }

    /// Closure of `gens` under composition, breadth first from the identity.
    pub fn generate_group(&self, gens: &[Perm], limit: usize) -> Result<Vec<Perm>> {
        let id: Perm = (0..self.roots.len()).collect();
        let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in gens {
                let gw: Perm = w.iter().map(|&i| g[i]).collect();
                if seen.insert(gw.clone()) {
                    if seen.len() > limit {
                        return Err(Error::Budget {
                            what: format!("Weyl group of {}", self.name),
                            limit: limit as u64,
                        });
                    }
                    order.push(gw.clone());
                    queue.push_back(gw);
                }
            }
        }
        Ok(order)
    }

    pub fn weyl_group(&self, limit: usize) -> Result<Vec<Perm>> {
        self.generate_group(&self.simple_reflections(), limit)
    }

    /// Fundamental weights in simple-root coordinates.
    pub fn fundamental_weights(&self) -> Result<Vec<Vec<Q>>> {
        let n = self.rank;
        // <w_i, a_k^vee> = sum_j c_ij <a_j, a_k^vee> = delta_ik
        let a: Matrix = (0..n).map(|k| (0..n).map(|j| q(self.cartan[j][k])).collect()).collect();
        (0..n)
            .map(|i| {
                let e: Vec<Q> = (0..n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect();
                solve(&a, &e)
            })
            .collect()
    }

    /// True when `roots` (indices) equal `R` intersected with their rational span.
    pub fn is_span_closed(&self, roots: &[usize]) -> bool {
        let base: Matrix = roots.iter().map(|&i| self.roots[i].iter().map(|&c| q(c)).collect()).collect();
        let r = crate::rational::rank(&base);
        let set: BTreeSet<usize> = roots.iter().copied().collect();
        (0..self.roots.len()).filter(|i| !set.contains(i)).all(|i| {
            let mut m = base.clone();
            m.push(self.roots[i].iter().map(|&c| q(c)).collect());
            crate::rational::rank(&m) > r
        })
    }
}

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A Levi sub-root-system `R ∩ span`, with the simple system cut out by `R+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviSubsystem {
    /// Sorted root indices, closed under negation.
    pub roots: Vec<usize>,
    pub simple: Vec<usize>,
}

impl LeviSubsystem {
    pub fn from_roots(rs: &RootSystem, roots: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = roots.into_iter().collect();
        let pos: Vec<usize> = set.iter().copied().filter(|&i| rs.is_positive(i)).collect();
        let simple = pos
            .iter()
            .copied()
            .filter(|&i| {
                !pos.iter().any(|&j| {
                    let d: Root = rs.roots[i].iter().zip(&rs.roots[j]).map(|(a, b)| a - b).collect();
                    rs.index_of(&d).is_some_and(|k| set.contains(&k) && rs.is_positive(k))
                })
            })
            .collect();
        LeviSubsystem { roots: set.into_iter().collect(), simple }
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn apply(&self, rs: &RootSystem, w: &Perm) -> LeviSubsystem {
        LeviSubsystem::from_roots(rs, self.roots.iter().map(|&i| w[i]))
    }

    /// Simple roots printed as coordinate vectors.
    pub fn simple_roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a Root> {
        self.simple.iter().map(|&i| &rs.roots[i]).collect()
    }
}

/// Every Levi subsystem: the Weyl translates of the standard ones `R_J`.
pub fn levi_subsystems(rs: &RootSystem, weyl: &[Perm]) -> Vec<LeviSubsystem> {
    let n = rs.rank;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let base: Vec<usize> = (0..rs.roots.len())
            .filter(|&i| rs.roots[i].iter().enumerate().all(|(k, &c)| c == 0 || mask & (1 << k) != 0))
            .collect();
        for w in weyl {
            let mut img: Vec<usize> = base.iter().map(|&i| w[i]).collect();
            img.sort_unstable();
            seen.insert(img);
        }
    }
    seen.into_iter().map(|r| LeviSubsystem::from_roots(rs, r)).collect()
}

/// `Z = 2 E^ss`, returned by its values on the simple roots of `g`.
///
/// `E^ss = sum_j x_j b_j^vee` over the simple roots `b_j` of `l`, with
/// `b_i(E^ss) = b_i(E)`.
pub fn semisimple_projection(rs: &RootSystem, l: &LeviSubsystem, e: &[Q]) -> Result<Vec<Q>> {
    let simple = l.simple_roots(rs);
    let k = simple.len();
    if k == 0 {
        return Ok(vec![Q::zero(); rs.rank]);
    }
    let a: Matrix = (0..k).map(|i| (0..k).map(|j| rs.coroot_pairing(simple[i], simple[j])).collect()).collect();
    let b: Vec<Q> = simple.iter().map(|s| rs.pair(s, e)).collect();
    let x = solve(&a, &b)?;
    Ok((0..rs.rank)
        .map(|m| {
            let am = unit(rs.rank, m);
            let s: Q = simple.iter().zip(&x).map(|(bj, xj)| xj * rs.coroot_pairing(&am, bj)).sum();
            s * q(2)
        })
        .collect())
}

/// Distinguished test for a grading element `z` of `l`.
pub fn is_distinguished(rs: &RootSystem, l: &LeviSubsystem, z: &[Q]) -> Result<bool> {
    if l.is_empty() {
        return Ok(true);
    }
    let mut vals = Vec::with_capacity(l.roots.len());
    for &i in &l.roots {
        let v = rs.pair(&rs.roots[i], z);
        if !v.is_integer() {
            return Err(Error::Invariant(format!("grading element pairs to {v} with root {:?}", rs.roots[i])));
        }
        vals.push(v);
    }
    let zero = vals.iter().filter(|v| v.is_zero()).count();
    let two: BTreeSet<usize> = l.roots.iter().zip(&vals).filter(|(_, v)| **v == q(2)).map(|(&i, _)| i).collect();
    if zero + l.rank() != two.len() {
        return Ok(false);
    }
    let target: BTreeSet<usize> = l.roots.iter().zip(&vals).filter(|(_, v)| **v > Q::zero()).map(|(&i, _)| i).collect();
    let mut got = two.clone();
    loop {
        let mut grew = false;
        let cur: Vec<usize> = got.iter().copied().collect();
        for &a in &cur {
            for &b in &two {
                let s: Root = rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
                if let Some(k) = rs.index_of(&s) {
                    if target.contains(&k) && got.insert(k) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(got == target)
}
