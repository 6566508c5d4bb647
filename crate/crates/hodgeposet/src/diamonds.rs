//! Hodge diamonds of R-split limiting mixed Hodge structures on a period domain.
//!
//! A diamond of weight `n` is a function `(p,q) -> i^{p,q}`. Every diamond is
//! determined by its primitive pieces: for each `k >= 0` the numbers
//! `j^{p,q}` with `p+q = n+k`, one N-string of length `k+1` per unit.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HodgeNumbers {
    pub weight: u32,
    /// `h[p] = h^{p,n-p}` for `p = 0..=n`.
    pub h: Vec<u64>,
}

impl HodgeNumbers {
    pub fn new(weight: u32, h: Vec<u64>) -> Result<Self> {
        let hn = HodgeNumbers { weight, h };
        hn.validate()?;
        Ok(hn)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.weight as usize;
        if self.h.len() != n + 1 {
            return Err(Error::Config(format!(
                "weight {} needs {} Hodge numbers, got {}",
                self.weight,
                n + 1,
                self.h.len()
            )));
        }
        if (0..=n).any(|p| self.h[p] != self.h[n - p]) {
            return Err(Error::Config(format!("Hodge numbers {:?} are not symmetric", self.h)));
        }
        if self.total() == 0 {
            return Err(Error::Config("total dimension must be positive".into()));
        }
        Ok(())
    }

    pub fn total(&self) -> u64 {
        self.h.iter().sum()
    }

    /// Like `new` but allows the zero space; used for primitive sub-domains.
    pub(crate) fn sub_domain(weight: u32, h: Vec<u64>) -> Self {
        HodgeNumbers { weight, h }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HodgeDiamond {
    pub weight: u32,
    /// Nonzero entries only.
    pub entries: BTreeMap<(u32, u32), u64>,
}

impl HodgeDiamond {
    pub fn new(weight: u32) -> Self {
        HodgeDiamond { weight, entries: BTreeMap::new() }
    }

    pub fn from_entries(weight: u32, entries: &[(u32, u32, u64)]) -> Self {
        let mut d = HodgeDiamond::new(weight);
        for &(p, q, v) in entries {
            d.add(p, q, v);
        }
        d
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, p: u32, q: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((p, q)).or_insert(0) += v;
        }
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The pure diamond: all of `h^{p,n-p}` sits on the anti-diagonal.
    pub fn pure(h: &HodgeNumbers) -> Self {
        let n = h.weight;
        let mut d = HodgeDiamond::new(n);
        for p in 0..=n {
            d.add(p, n - p, h.h[p as usize]);
        }
        d
    }

    pub fn is_pure(&self) -> bool {
        self.entries.keys().all(|&(p, q)| p + q == self.weight)
    }

    /// Flattened p-major vector over `[0..=n]^2`; the canonical sort key.
    pub fn entry_vector(&self) -> Vec<u64> {
        let n = self.weight;
        let mut v = Vec::with_capacity(((n + 1) * (n + 1)) as usize);
        for p in 0..=n {
            for q in 0..=n {
                v.push(self.get(p, q));
            }
        }
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<[u64; 3]> = self.entries.iter().map(|(&(p, q), &v)| [p as u64, q as u64, v]).collect();
        serde_json::json!({ "weight": self.weight, "entries": entries })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Config("diamond JSON must be {\"weight\":n,\"entries\":[[p,q,i],...]}".into());
        let weight = v.get("weight").and_then(|w| w.as_u64()).ok_or_else(bad)? as u32;
        let mut d = HodgeDiamond::new(weight);
        for e in v.get("entries").and_then(|e| e.as_array()).ok_or_else(bad)? {
            let t: Vec<u64> = e.as_array().ok_or_else(bad)?.iter().filter_map(|x| x.as_u64()).collect();
            if t.len() != 3 || t[0] > weight as u64 || t[1] > weight as u64 {
                return Err(bad());
            }
            d.add(t[0] as u32, t[1] as u32, t[2]);
        }
        Ok(d)
    }
}

/// Per-weight primitive Hodge-Deligne numbers, keyed by `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveSubDiamond {
    pub weight: u32,
    pub pieces: BTreeMap<u32, BTreeMap<(u32, u32), u64>>,
}

impl PrimitiveSubDiamond {
    pub fn get(&self, k: u32, p: u32, q: u32) -> u64 {
        self.pieces.get(&k).and_then(|m| m.get(&(p, q))).copied().unwrap_or(0)
    }

    /// Number of N-strings of length `k+1`.
    pub fn strings(&self, k: u32) -> u64 {
        self.pieces.get(&k).map_or(0, |m| m.values().sum())
    }

    /// Hodge numbers of the weight `n+k` piece, as a (possibly degenerate) domain.
    pub fn piece_hodge_numbers(&self, k: u32) -> HodgeNumbers {
        let w = self.weight + k;
        let h = (0..=w).map(|p| self.get(k, p, w - p)).collect();
        HodgeNumbers::sub_domain(w, h)
    }
}

pub fn check_diamond(d: &HodgeDiamond, h: &HodgeNumbers) -> bool {
    let n = h.weight;
    if d.weight != n || h.validate().is_err() {
        return false;
    }
    if d.entries.iter().any(|(&(p, q), &v)| p > n || q > n || v == 0) {
        return false;
    }
    for p in 0..=n {
        let col: u64 = (0..=n).map(|q| d.get(p, q)).sum();
        if col != h.h[p as usize] {
            return false;
        }
    }
    for p in 0..=n {
        for q in 0..=n {
            let v = d.get(p, q);
            if v != d.get(q, p) || v != d.get(n - q, n - p) {
                return false;
            }
            if p >= 1 && q >= 1 && p + q <= n && d.get(p - 1, q - 1) > v {
                return false;
            }
        }
    }
    true
}

pub fn primitive_decomposition(d: &HodgeDiamond) -> Result<PrimitiveSubDiamond> {
    let n = d.weight;
    let mut pieces: BTreeMap<u32, BTreeMap<(u32, u32), u64>> = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            if p + q < n {
                continue;
            }
            let a = d.get(p, q);
            let b = if p < n && q < n { d.get(p + 1, q + 1) } else { 0 };
            if b > a {
                return Err(Error::Invariant(format!("i^{{{},{}}} = {b} exceeds i^{{{p},{q}}} = {a}", p + 1, q + 1)));
            }
            if a > b {
                pieces.entry(p + q - n).or_default().insert((p, q), a - b);
            }
        }
    }
    Ok(PrimitiveSubDiamond { weight: n, pieces })
}

pub fn reconstruct(prim: &PrimitiveSubDiamond) -> HodgeDiamond {
    let mut d = HodgeDiamond::new(prim.weight);
    for (&k, piece) in &prim.pieces {
        for (&(p, q), &v) in piece {
            for a in 0..=k {
                d.add(p - a, q - a, v);
            }
        }
    }
    d
}

/// `(rk N, rk N^2, ..., rk N^n)`.
pub fn rank_profile(d: &HodgeDiamond) -> Result<Vec<u64>> {
    let prim = primitive_decomposition(d)?;
    Ok((1..=d.weight as u64)
        .map(|l| prim.pieces.keys().filter(|&&k| k as u64 >= l).map(|&k| (k as u64 + 1 - l) * prim.strings(k)).sum())
        .collect())
}

/// Primitive variable: a conjugate pair `(P,Q), (Q,P)` of weight `n+k`, `P >= Q`.
#[derive(Debug, Clone, Copy)]
struct Slot {
    k: u32,
    p: u32,
    q: u32,
}

impl Slot {
    /// Columns hit by one unit, with multiplicity.
    fn columns(&self) -> Vec<u32> {
        let mut c: Vec<u32> = (self.p - self.k..=self.p).collect();
        if self.p != self.q {
            c.extend(self.q - self.k..=self.q);
        }
        c
    }
}

fn slots(n: u32) -> Vec<Slot> {
    let mut out = Vec::new();
    for k in (1..=n).rev() {
        for p in (0..=n).rev() {
            let Some(q) = (n + k).checked_sub(p) else { continue };
            if q > p || q > n || q < k {
                continue;
            }
            out.push(Slot { k, p, q });
        }
    }
    out
}

/// All diamonds compatible with `h`, sorted ascending by the p-major entry vector.
///
/// Zero Hodge numbers at the ends are allowed so that primitive sub-domains
/// can be enumerated with the same routine.
pub fn enumerate_diamonds(h: &HodgeNumbers, budget: &Budget) -> Result<Vec<HodgeDiamond>> {
    let n = h.weight;
    if h.h.len() != n as usize + 1 || (0..=n as usize).any(|p| h.h[p] != h.h[n as usize - p]) {
        return Err(Error::Config(format!("invalid Hodge numbers {:?} for weight {n}", h.h)));
    }
    let slots = slots(n);
    let cols: Vec<Vec<u32>> = slots.iter().map(Slot::columns).collect();
    let mut residual: Vec<u64> = h.h.clone();
    let mut values = vec![0u64; slots.len()];
    let mut out = Vec::new();
    let mut counter = budget.counter("diamond enumeration");
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: u32,
        slots: &[Slot],
        cols: &[Vec<u32>],
        residual: &mut Vec<u64>,
        values: &mut Vec<u64>,
        out: &mut Vec<HodgeDiamond>,
        counter: &mut crate::budget::Counter,
    ) -> Result<()> {
        counter.tick()?;
        if i == slots.len() {
            let mut pieces: BTreeMap<u32, BTreeMap<(u32, u32), u64>> = BTreeMap::new();
            for (s, &v) in slots.iter().zip(values.iter()) {
                if v > 0 {
                    let m = pieces.entry(s.k).or_default();
                    m.insert((s.p, s.q), v);
                    m.insert((s.q, s.p), v);
                }
            }
            for p in 0..=n {
                let r = residual[p as usize];
                if r > 0 {
                    pieces.entry(0).or_default().insert((p, n - p), r);
                }
            }
            out.push(reconstruct(&PrimitiveSubDiamond { weight: n, pieces }));
            return Ok(());
        }
        let mut v = 0u64;
        loop {
            values[i] = v;
            rec(i + 1, n, slots, cols, residual, values, out, counter)?;
            // take one more unit if every touched column has room
            let mut ok = true;
            for (j, &c) in cols[i].iter().enumerate() {
                if residual[c as usize] == 0 {
                    for &c2 in &cols[i][..j] {
                        residual[c2 as usize] += 1;
                    }
                    ok = false;
                    break;
                }
                residual[c as usize] -= 1;
            }
            if !ok {
                break;
            }
            v += 1;
        }
        for _ in 0..v {
            for &c in &cols[i] {
                residual[c as usize] += 1;
            }
        }
        values[i] = 0;
        Ok(())
    }
    rec(0, n, &slots, &cols, &mut residual, &mut values, &mut out, &mut counter)?;
    out.sort_by_key(|d| d.entry_vector());
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hn(w: u32, h: &[u64]) -> HodgeNumbers {
        HodgeNumbers::new(w, h.to_vec()).unwrap()
    }

    fn count(w: u32, h: &[u64]) -> usize {
        enumerate_diamonds(&hn(w, h), &Budget::default()).unwrap().len()
    }

    #[test]
    fn counts_small() {
        assert_eq!(count(1, &[3, 3]), 4);
        assert_eq!(count(2, &[1, 1, 1]), 2);
        assert_eq!(count(2, &[1, 5, 1]), 3);
        assert_eq!(count(3, &[1, 3, 3, 1]), 12);
        assert_eq!(count(0, &[4]), 1);
        assert_eq!(count(7, &[1; 8]), 16);
    }

    #[test]
    fn pure_first() {
        let h = hn(3, &[1, 2, 2, 1]);
        let ds = enumerate_diamonds(&h, &Budget::default()).unwrap();
        assert_eq!(ds[0], HodgeDiamond::pure(&h));
        for d in &ds {
            assert!(check_diamond(d, &h));
        }
    }

    #[test]
    fn check_rejects_asymmetry() {
        let h = hn(2, &[1, 3, 1]);
        let d = HodgeDiamond::from_entries(2, &[(0, 0, 1), (1, 1, 2), (0, 2, 1)]);
        assert!(!check_diamond(&d, &h));
    }

    #[test]
    fn horikawa_type_one_primitive() {
        let m = 5;
        let d = HodgeDiamond::from_entries(
            2,
            &[(0, 2, 1), (2, 0, 1), (0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (1, 1, m - 2)],
        );
        assert!(check_diamond(&d, &hn(2, &[2, m, 2])));
        let p = primitive_decomposition(&d).unwrap();
        assert_eq!(p.pieces[&0], BTreeMap::from([((0, 2), 1), ((1, 1), m - 2), ((2, 0), 1)]));
        assert_eq!(p.pieces[&1], BTreeMap::from([((1, 2), 1), ((2, 1), 1)]));
        assert_eq!(reconstruct(&p), d);
    }

    #[test]
    fn budget_trips() {
        let err = enumerate_diamonds(&hn(3, &[1, 4, 4, 1]), &Budget::new(3)).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn json_round_trip() {
        let d = HodgeDiamond::from_entries(1, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)]);
        assert_eq!(HodgeDiamond::from_json(&d.to_json()).unwrap(), d);
    }
}
