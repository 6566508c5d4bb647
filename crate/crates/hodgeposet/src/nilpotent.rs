//! Partially signed Young diagrams and the closure order on nilpotent classes.
//!
//! Each primitive unit `j^{p,q}` with `p+q = n+k` is one Jordan string of
//! length `k+1`. Rows from `p = q mod 2` carry a sign; the others come in
//! conjugate pairs and stay unsigned.

use std::collections::BTreeMap;
use std::fmt;

use crate::budget::Budget;
use crate::diamonds::{enumerate_diamonds, primitive_decomposition, HodgeDiamond, HodgeNumbers};
use crate::error::{Error, Result};
use crate::fixtures::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormType {
    Symplectic,
    Orthogonal,
}

impl FormType {
    pub fn for_weight(n: u32) -> Self {
        if n % 2 == 1 {
            FormType::Symplectic
        } else {
            FormType::Orthogonal
        }
    }

    /// Rows of this length carry a sign.
    fn signed_length(&self, len: u32) -> bool {
        match self {
            FormType::Symplectic => len.is_multiple_of(2),
            FormType::Orthogonal => len % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowSign {
    Plus,
    Minus,
    Unsigned,
}

impl RowSign {
    fn symbol(&self) -> char {
        match self {
            RowSign::Plus => '+',
            RowSign::Minus => '-',
            RowSign::Unsigned => 'u',
        }
    }

    fn parse(c: &str) -> Option<Self> {
        match c {
            "+" => Some(RowSign::Plus),
            "-" => Some(RowSign::Minus),
            "u" => Some(RowSign::Unsigned),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Row {
    pub len: u32,
    /// Sign of the first box; later boxes alternate.
    pub sign: RowSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedYoungDiagram {
    pub form: FormType,
    /// Sorted by decreasing length, then `+`, `-`, unsigned.
    pub rows: Vec<Row>,
}

impl SignedYoungDiagram {
    pub fn new(form: FormType, mut rows: Vec<Row>) -> Result<Self> {
        rows.sort_by(|a, b| b.len.cmp(&a.len).then(a.sign.cmp(&b.sign)));
        let y = SignedYoungDiagram { form, rows };
        y.validate()?;
        Ok(y)
    }

    pub fn validate(&self) -> Result<()> {
        let mut unsigned: BTreeMap<u32, usize> = BTreeMap::new();
        for r in &self.rows {
            if r.len == 0 {
                return Err(Error::Parity("empty row".into()));
            }
            let signed = r.sign != RowSign::Unsigned;
            if signed != self.form.signed_length(r.len) {
                return Err(Error::Parity(format!(
                    "row of length {} has the wrong signedness for {:?}",
                    r.len, self.form
                )));
            }
            if !signed {
                *unsigned.entry(r.len).or_default() += 1;
            }
        }
        if let Some((len, _)) = unsigned.iter().find(|(_, &c)| c % 2 == 1) {
            return Err(Error::Parity(format!("odd number of unsigned rows of length {len}")));
        }
        Ok(())
    }

    pub fn boxes(&self) -> u32 {
        self.rows.iter().map(|r| r.len).sum()
    }

    /// Underlying partition, decreasing.
    pub fn partition(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len).collect()
    }

    /// `(#plus, #minus)` over all boxes; unsigned pairs count one of each per box.
    pub fn signature(&self) -> (u32, u32) {
        let mut s = (0, 0);
        for r in self.expanded() {
            for c in 0..r.len {
                if box_sign(&r, c) {
                    s.0 += 1;
                } else {
                    s.1 += 1;
                }
            }
        }
        s
    }

    /// Unsigned pairs replaced by one `+`-start row and one `-`-start row.
    fn expanded(&self) -> Vec<Row> {
        let mut out = Vec::with_capacity(self.rows.len());
        let mut flip = false;
        for r in &self.rows {
            if r.sign == RowSign::Unsigned {
                out.push(Row { len: r.len, sign: if flip { RowSign::Minus } else { RowSign::Plus } });
                flip = !flip;
            } else {
                out.push(*r);
            }
        }
        out
    }

    /// Cumulative `(+, -)` box counts over columns `1..=c`.
    fn column_counts(&self, c: u32) -> (u32, u32) {
        let mut s = (0, 0);
        for r in self.expanded() {
            for i in 0..r.len.min(c) {
                if box_sign(&r, i) {
                    s.0 += 1;
                } else {
                    s.1 += 1;
                }
            }
        }
        s
    }

    pub fn parse(form: FormType, s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse diagram {s:?}"));
        let rows = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let (l, sg) = t.trim().split_once(':').ok_or_else(bad)?;
                Ok(Row { len: l.parse().map_err(|_| bad())?, sign: RowSign::parse(sg).ok_or_else(bad)? })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedYoungDiagram::new(form, rows)
    }
}

/// True for `+`.
fn box_sign(r: &Row, i: u32) -> bool {
    (r.sign == RowSign::Plus) == i.is_multiple_of(2)
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| format!("{}:{}", r.len, r.sign.symbol())).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn diamond_to_diagram(d: &HodgeDiamond, f: FormType) -> Result<SignedYoungDiagram> {
    if FormType::for_weight(d.weight) != f {
        return Err(Error::Parity(format!("weight {} does not carry a {:?} form", d.weight, f)));
    }
    let prim = primitive_decomposition(d)?;
    let mut rows = Vec::new();
    for (&k, piece) in &prim.pieces {
        for (&(p, q), &j) in piece {
            let sign = if p.abs_diff(q) % 2 == 1 {
                RowSign::Unsigned
            } else {
                let e = (q as i64 - p as i64) / 2 + (k as i64) * (k as i64 - 1) / 2;
                if e.rem_euclid(2) == 0 {
                    RowSign::Plus
                } else {
                    RowSign::Minus
                }
            };
            for _ in 0..j {
                rows.push(Row { len: k + 1, sign });
            }
        }
    }
    SignedYoungDiagram::new(f, rows)
}

/// `y1` lies in the closure of `y2`.
///
/// Criterion: after splitting unsigned pairs, the cumulative `+` and `-` box
/// counts of `y1` dominate those of `y2` column by column.
pub fn closure_leq(y1: &SignedYoungDiagram, y2: &SignedYoungDiagram) -> Result<bool> {
    if y1.boxes() != y2.boxes() || y1.form != y2.form {
        return Err(Error::Mismatch(format!(
            "diagrams with {} and {} boxes cannot be compared",
            y1.boxes(),
            y2.boxes()
        )));
    }
    let width = y1.rows.iter().chain(&y2.rows).map(|r| r.len).max().unwrap_or(0);
    Ok((1..=width).all(|c| {
        let (p1, m1) = y1.column_counts(c);
        let (p2, m2) = y2.column_counts(c);
        p1 >= p2 && m1 >= m2
    }))
}

/// Dominance order `a <= b` on partitions of the same size.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// Closure results outside the fixture families carry no correctness claim.
pub fn closure_is_validated(h: &HodgeNumbers) -> bool {
    matches!(
        Family::detect(h),
        Some(Family::Curves { .. } | Family::K3 { .. } | Family::Horikawa { .. } | Family::CalabiYau { .. })
    )
}

/// Strict closure order on the enumerated classes.
pub fn closure_relation(h: &HodgeNumbers, budget: &Budget) -> Result<crate::polarized::RelationSet> {
    let classes = crate::polarized::named_classes(h, budget)?;
    let f = FormType::for_weight(h.weight);
    let ys = classes.iter().map(|(_, d)| diamond_to_diagram(d, f)).collect::<Result<Vec<_>>>()?;
    let mut r = crate::polarized::RelationSet::new(classes.iter().map(|(n, _)| n.clone()).collect());
    for i in 0..ys.len() {
        for j in 0..ys.len() {
            if i != j && closure_leq(&ys[i], &ys[j])? {
                r.edges.insert((i, j));
            }
        }
    }
    Ok(r)
}

/// Groups of enumeration indices that share a diagram, by first occurrence.
pub fn pi_fibers(h: &HodgeNumbers, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let ds = enumerate_diamonds(h, budget)?;
    let f = FormType::for_weight(h.weight);
    let mut groups: Vec<(SignedYoungDiagram, Vec<usize>)> = Vec::new();
    for (i, d) in ds.iter().enumerate() {
        let y = diamond_to_diagram(d, f)?;
        match groups.iter_mut().find(|(x, _)| *x == y) {
            Some((_, v)) => v.push(i),
            None => groups.push((y, vec![i])),
        }
    }
    Ok(groups.into_iter().map(|(_, v)| v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hn(w: u32, h: &[u64]) -> HodgeNumbers {
        HodgeNumbers::new(w, h.to_vec()).unwrap()
    }

    fn diagram_of(fam: Family, name: &str, w: u32) -> SignedYoungDiagram {
        let d = fam.classes().into_iter().find(|(n, _)| n == name).unwrap().1;
        diamond_to_diagram(&d, FormType::for_weight(w)).unwrap()
    }

    #[test]
    fn k3_type_zero_signs() {
        let y = diagram_of(Family::K3 { m: 3 }, "0", 2);
        assert_eq!(y.to_string(), "1:+,1:+,1:+,1:-,1:-");
    }

    #[test]
    fn horikawa_type_v() {
        let y = diagram_of(Family::Horikawa { m: 6 }, "V", 2);
        assert_eq!(y.to_string(), "3:-,3:-,1:+,1:+,1:+,1:+");
    }

    #[test]
    fn curves_rows() {
        let y = diagram_of(Family::Curves { g: 3 }, "I2", 1);
        assert_eq!(y.to_string(), "2:+,2:+,1:u,1:u");
        let y = diagram_of(Family::Curves { g: 2 }, "I0", 1);
        assert_eq!(y.partition(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn cy_diagrams() {
        let fam = Family::CalabiYau { m: 3 };
        assert_eq!(diagram_of(fam, "I1", 3).to_string(), "2:+,1:u,1:u,1:u,1:u,1:u,1:u");
        assert_eq!(diagram_of(fam, "II1", 3).to_string(), "2:+,2:-,2:-,1:u,1:u");
        assert_eq!(diagram_of(fam, "III0", 3).to_string(), "3:u,3:u,1:u,1:u");
        assert_eq!(diagram_of(fam, "IV2", 3).to_string(), "4:-,2:+,1:u,1:u");
    }

    #[test]
    fn parse_round_trip() {
        let y = diagram_of(Family::CalabiYau { m: 2 }, "IV1", 3);
        assert_eq!(SignedYoungDiagram::parse(FormType::Symplectic, &y.to_string()).unwrap(), y);
        assert!(SignedYoungDiagram::parse(FormType::Symplectic, "1:u").is_err());
        assert!(SignedYoungDiagram::parse(FormType::Symplectic, "1:+,1:+").is_err());
    }

    #[test]
    fn dominance() {
        assert!(dominated(&[2, 1, 1], &[3, 1]));
        assert!(!dominated(&[3, 1], &[2, 2]) || dominated(&[2, 2], &[3, 1]));
        assert!(!dominated(&[4], &[2, 2]));
    }

    #[test]
    fn mismatched_sizes() {
        let a = diagram_of(Family::Curves { g: 1 }, "I0", 1);
        let b = diagram_of(Family::Curves { g: 2 }, "I0", 1);
        assert!(closure_leq(&a, &b).is_err());
    }

    #[test]
    fn fibers() {
        let b = Budget::default();
        assert!(pi_fibers(&hn(2, &[1, 4, 1]), &b).unwrap().iter().all(|f| f.len() == 1));
        let f = pi_fibers(&hn(7, &[1; 8]), &b).unwrap();
        assert_eq!(f.iter().filter(|g| g.len() == 2).count(), 2);
        assert_eq!(f.len(), 14);
    }
}
