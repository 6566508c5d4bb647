//! Bundled reference tables: class names for the named families, closed-form
//! relation lists, root-data class tables and the printed monodromy matrices.
//!
//! Everything here is data typed in by hand. The computing modules never read
//! these tables except to attach names; tests and `verify` compare against them.

use crate::diamonds::{HodgeDiamond, HodgeNumbers};
use crate::rational::{q, qf, Matrix, Q};

/// A parametrized family of Hodge numbers with its customary class names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `h = (g,g)`, weight 1.
    Curves { g: u64 },
    /// `h = (1,m,1)`, weight 2.
    K3 { m: u64 },
    /// `h = (2,m,2)`, weight 2, `m >= 4`.
    Horikawa { m: u64 },
    /// `h = (1,m,m,1)`, weight 3.
    CalabiYau { m: u64 },
    /// `h = (1,...,1)`, weight 7.
    Borel7,
}

impl Family {
    pub fn detect(h: &HodgeNumbers) -> Option<Family> {
        match (h.weight, h.h.as_slice()) {
            (1, &[g, _]) if g >= 1 => Some(Family::Curves { g }),
            (2, &[1, m, 1]) if m >= 1 => Some(Family::K3 { m }),
            (2, &[2, m, 2]) if m >= 4 => Some(Family::Horikawa { m }),
            (3, &[1, m, _, 1]) if m >= 1 => Some(Family::CalabiYau { m }),
            (7, hs) if hs.iter().all(|&x| x == 1) => Some(Family::Borel7),
            _ => None,
        }
    }

    /// Named classes with their diamonds, in no particular order.
    pub fn classes(&self) -> Vec<(String, HodgeDiamond)> {
        match *self {
            Family::Curves { g } => (0..=g)
                .map(|a| {
                    (
                        format!("I{a}"),
                        HodgeDiamond::from_entries(1, &[(0, 0, a), (1, 0, g - a), (0, 1, g - a), (1, 1, a)]),
                    )
                })
                .collect(),
            Family::K3 { m } => {
                let mut v = vec![("0".to_string(), HodgeDiamond::from_entries(2, &[(0, 2, 1), (2, 0, 1), (1, 1, m)]))];
                if m >= 2 {
                    v.push((
                        "I".into(),
                        HodgeDiamond::from_entries(2, &[(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (1, 1, m - 2)]),
                    ));
                }
                v.push(("II".into(), HodgeDiamond::from_entries(2, &[(0, 0, 1), (1, 1, m), (2, 2, 1)])));
                v
            }
            Family::Horikawa { m } => vec![
                ("0".into(), HodgeDiamond::from_entries(2, &[(0, 2, 2), (1, 1, m), (2, 0, 2)])),
                (
                    "I".into(),
                    HodgeDiamond::from_entries(
                        2,
                        &[(0, 1, 1), (0, 2, 1), (1, 0, 1), (1, 2, 1), (2, 0, 1), (2, 1, 1), (1, 1, m - 2)],
                    ),
                ),
                ("II".into(), HodgeDiamond::from_entries(2, &[(0, 0, 1), (0, 2, 1), (2, 0, 1), (2, 2, 1), (1, 1, m)])),
                (
                    "III".into(),
                    HodgeDiamond::from_entries(2, &[(0, 1, 2), (1, 0, 2), (1, 2, 2), (2, 1, 2), (1, 1, m - 4)]),
                ),
                (
                    "IV".into(),
                    HodgeDiamond::from_entries(
                        2,
                        &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1), (1, 1, m - 2)],
                    ),
                ),
                ("V".into(), HodgeDiamond::from_entries(2, &[(0, 0, 2), (1, 1, m), (2, 2, 2)])),
            ],
            Family::CalabiYau { m } => {
                let mut v = Vec::new();
                for a in 0..=m {
                    let a2 = m - a;
                    v.push((
                        format!("I{a}"),
                        HodgeDiamond::from_entries(
                            3,
                            &[(3, 0, 1), (0, 3, 1), (2, 1, a2), (1, 2, a2), (1, 1, a), (2, 2, a)],
                        ),
                    ));
                }
                for b in 0..m {
                    let b2 = m - 1 - b;
                    v.push((
                        format!("II{b}"),
                        HodgeDiamond::from_entries(
                            3,
                            &[(0, 2, 1), (2, 0, 1), (1, 3, 1), (3, 1, 1), (1, 1, b), (2, 2, b), (1, 2, b2), (2, 1, b2)],
                        ),
                    ));
                }
                for c in 0..m.saturating_sub(1) {
                    let c2 = m - 1 - c;
                    v.push((
                        format!("III{c}"),
                        HodgeDiamond::from_entries(
                            3,
                            &[(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1), (1, 1, c), (2, 2, c), (2, 1, c2), (1, 2, c2)],
                        ),
                    ));
                }
                for d in 1..=m {
                    let d2 = m - d;
                    v.push((
                        format!("IV{d}"),
                        HodgeDiamond::from_entries(
                            3,
                            &[(0, 0, 1), (3, 3, 1), (1, 1, d), (2, 2, d), (1, 2, d2), (2, 1, d2)],
                        ),
                    ));
                }
                v
            }
            Family::Borel7 => BOREL7
                .iter()
                .map(|row| {
                    let e: Vec<(u32, u32, u64)> =
                        row.sigma.iter().enumerate().map(|(p, &q)| (p as u32, q, 1)).collect();
                    (row.name.to_string(), HodgeDiamond::from_entries(7, &e))
                })
                .collect(),
        }
    }

    pub fn name_of(&self, d: &HodgeDiamond) -> Option<String> {
        self.classes().into_iter().find(|(_, x)| x == d).map(|(n, _)| n)
    }

    /// Strict closure order `N_a < N_b` as listed for the family.
    pub fn closure_lt(&self, a: &str, b: &str) -> Option<bool> {
        if a == b {
            return Some(false);
        }
        match *self {
            Family::Curves { .. } => Some(index(a, "I")? < index(b, "I")?),
            Family::K3 { .. } => Some(chain_pos(&["0", "I", "II"], a)? < chain_pos(&["0", "I", "II"], b)?),
            Family::Horikawa { .. } => {
                let rank = |s: &str| chain_pos(&["0", "I", "II", "III", "IV", "V"], s);
                let (x, y) = (rank(a)?, rank(b)?);
                // II and III are the only incomparable pair
                Some(x < y && !(x == 2 && y == 3))
            }
            Family::CalabiYau { .. } => {
                let (fa, ia) = cy_parse(a)?;
                let (fb, ib) = cy_parse(b)?;
                Some(match (fa, fb) {
                    _ if fa == fb => ia < ib,
                    (1, 2) => ia <= ib,
                    (1, 3) | (2, 3) => ia <= ib + 2,
                    (1, 4) | (2, 4) => ia <= ib,
                    (3, 4) => ia + 2 <= ib,
                    _ => false,
                })
            }
            Family::Borel7 => None,
        }
    }

    /// Strict polarized relation `a < b` as listed for the family.
    pub fn polarized_lt(&self, a: &str, b: &str) -> Option<bool> {
        if a == b {
            return Some(false);
        }
        match *self {
            Family::Curves { .. } | Family::K3 { .. } => self.closure_lt(a, b),
            Family::Horikawa { .. } => {
                let rank = |s: &str| chain_pos(&["0", "I", "II", "III", "IV", "V"], s);
                let (x, y) = (rank(a)?, rank(b)?);
                Some(x < y && !(x == 2 && y == 3))
            }
            Family::CalabiYau { m } => {
                let (fa, ia) = cy_parse(a)?;
                let (fb, ib) = cy_parse(b)?;
                let m = m as i64;
                Some(match (fa, fb) {
                    _ if fa == fb => ia < ib,
                    (1, 2) | (1, 3) => ia <= ib && ia < m,
                    (1, 4) => ia < ib && ia < m,
                    (2, 3) => 2 <= ia && ia <= ib + 2,
                    (2, 4) => 1 <= ia && ia < ib,
                    (3, 4) => ia + 2 <= ib,
                    _ => false,
                })
            }
            Family::Borel7 => None,
        }
    }
}

fn index(s: &str, prefix: &str) -> Option<i64> {
    s.strip_prefix(prefix)?.parse().ok()
}

fn chain_pos(chain: &[&str], s: &str) -> Option<usize> {
    chain.iter().position(|c| *c == s)
}

/// `("III2") -> (3, 2)`.
fn cy_parse(s: &str) -> Option<(u8, i64)> {
    for (f, p) in [(4, "IV"), (3, "III"), (2, "II"), (1, "I")] {
        if let Some(i) = index(s, p) {
            return Some((f, i));
        }
    }
    None
}

/// Every arrow of the polarized diagram for `(1,2,2,1)`; there are 14.
pub const CY2_POLARIZED: &[(&str, &str)] = &[
    ("I0", "I1"),
    ("I0", "I2"),
    ("I0", "II0"),
    ("I0", "II1"),
    ("I0", "III0"),
    ("I0", "IV1"),
    ("I0", "IV2"),
    ("I1", "I2"),
    ("I1", "II1"),
    ("I1", "IV2"),
    ("II0", "II1"),
    ("II1", "IV2"),
    ("III0", "IV2"),
    ("IV1", "IV2"),
];

/// One row of the torus-case table for `h = (1,...,1)`, weight 7.
#[derive(Debug, Clone, Copy)]
pub struct Borel7Row {
    pub name: &'static str,
    pub subset: &'static [usize],
    pub z: [i64; 4],
    /// Display only; never computed.
    pub codim: u32,
    /// `i^{p, sigma[p]} = 1`.
    pub sigma: [u32; 8],
}

pub const BOREL7: &[Borel7Row] = &[
    Borel7Row { name: "{}", subset: &[], z: [0, 0, 0, 0], codim: 0, sigma: [7, 6, 5, 4, 3, 2, 1, 0] },
    Borel7Row { name: "{4}", subset: &[4], z: [0, 0, -1, 2], codim: 1, sigma: [7, 6, 5, 3, 4, 2, 1, 0] },
    Borel7Row { name: "{1}", subset: &[1], z: [2, -1, 0, 0], codim: 1, sigma: [6, 7, 5, 4, 3, 2, 0, 1] },
    Borel7Row { name: "{2}", subset: &[2], z: [-1, 2, -1, 0], codim: 1, sigma: [7, 5, 6, 4, 3, 1, 2, 0] },
    Borel7Row { name: "{3}", subset: &[3], z: [0, -1, 2, -2], codim: 1, sigma: [7, 6, 4, 5, 2, 3, 1, 0] },
    Borel7Row { name: "{1,3}", subset: &[1, 3], z: [2, -2, 2, -2], codim: 2, sigma: [6, 7, 4, 5, 2, 3, 0, 1] },
    Borel7Row { name: "{1,4}", subset: &[1, 4], z: [2, -1, -1, 2], codim: 2, sigma: [6, 7, 5, 3, 4, 2, 0, 1] },
    Borel7Row { name: "{2,4}", subset: &[2, 4], z: [-1, 2, -2, 2], codim: 2, sigma: [7, 5, 6, 3, 4, 1, 2, 0] },
    Borel7Row { name: "{1,2}", subset: &[1, 2], z: [2, 2, -2, 0], codim: 3, sigma: [5, 6, 7, 4, 3, 0, 1, 2] },
    Borel7Row { name: "{2,3}", subset: &[2, 3], z: [-2, 2, 2, -4], codim: 3, sigma: [7, 4, 5, 6, 1, 2, 3, 0] },
    Borel7Row { name: "{3,4}", subset: &[3, 4], z: [0, -3, 2, 2], codim: 4, sigma: [7, 6, 2, 3, 4, 5, 1, 0] },
    Borel7Row { name: "{1,3,4}", subset: &[1, 3, 4], z: [2, -4, 2, 2], codim: 5, sigma: [6, 7, 2, 3, 4, 5, 0, 1] },
    Borel7Row { name: "{1,2,4}", subset: &[1, 2, 4], z: [2, 2, -3, 2], codim: 5, sigma: [5, 6, 7, 3, 4, 0, 1, 2] },
    Borel7Row { name: "{1,2,3}", subset: &[1, 2, 3], z: [2, 2, 2, -6], codim: 6, sigma: [4, 5, 6, 7, 0, 1, 2, 3] },
    Borel7Row { name: "{2,3,4}", subset: &[2, 3, 4], z: [-5, 2, 2, 2], codim: 9, sigma: [7, 1, 2, 3, 4, 5, 6, 0] },
    Borel7Row { name: "{1,2,3,4}", subset: &[1, 2, 3, 4], z: [2, 2, 2, 2], codim: 16, sigma: [0, 1, 2, 3, 4, 5, 6, 7] },
];

/// One nontrivial class of a root-data domain: name, simple roots, `Z`.
#[derive(Debug, Clone)]
pub struct RootClassRow {
    pub name: &'static str,
    pub simple: Vec<Vec<i64>>,
    pub z: Vec<Q>,
}

/// A root-data domain with its printed class table (trivial class omitted).
#[derive(Debug, Clone)]
pub struct RootDomainFixture {
    pub preset: &'static str,
    pub root: &'static str,
    pub grading: Vec<Q>,
    pub classes: Vec<RootClassRow>,
    /// Generators of `W^0` as simple-reflection indices (1-based), for display.
    pub w0_simple: Vec<usize>,
}

fn row(name: &'static str, simple: &[&[i64]], z: &[i64]) -> RootClassRow {
    RootClassRow { name, simple: simple.iter().map(|s| s.to_vec()).collect(), z: z.iter().map(|&x| q(x)).collect() }
}

fn all_g2() -> Vec<&'static [i64]> {
    vec![&[1, 0], &[0, 1]]
}

/// G2 with `E = S^1 + S^2`.
pub fn g2_a() -> RootDomainFixture {
    RootDomainFixture {
        preset: "g2-a",
        root: "G2",
        grading: vec![q(1), q(1)],
        classes: vec![row("I", &[&[0, 1]], &[-1, 2]), row("II", &[&[1, 0]], &[2, -3]), row("III", &all_g2(), &[2, 2])],
        w0_simple: vec![],
    }
}

/// G2 with `E = S^1`.
pub fn g2_b() -> RootDomainFixture {
    RootDomainFixture {
        preset: "g2-b",
        root: "G2",
        grading: vec![q(1), q(0)],
        classes: vec![row("I", &[&[1, 0]], &[2, -3])],
        w0_simple: vec![2],
    }
}

/// G2 with `E = S^2`.
pub fn g2_c() -> RootDomainFixture {
    RootDomainFixture {
        preset: "g2-c",
        root: "G2",
        grading: vec![q(0), q(1)],
        classes: vec![row("I", &[&[0, 1]], &[-1, 2]), row("II", &[&[2, 1]], &[1, 0]), row("III", &all_g2(), &[0, 2])],
        w0_simple: vec![1],
    }
}

/// D4 with `E = S^2`, the `(2,4,2)` domain; class III splits in two.
pub fn d4_242() -> RootDomainFixture {
    RootDomainFixture {
        preset: "d4-242",
        root: "D4",
        grading: vec![q(0), q(1), q(0), q(0)],
        classes: vec![
            row("I", &[&[0, 1, 0, 0]], &[-1, 2, -1, -1]),
            row("II", &[&[0, 1, 0, 0], &[0, 1, 1, 1]], &[-2, 2, 0, 0]),
            row("III_a", &[&[0, 1, 0, 0], &[1, 1, 1, 0]], &[0, 2, 0, -2]),
            row("III_b", &[&[0, 1, 0, 0], &[1, 1, 0, 1]], &[0, 2, -2, 0]),
            row("IV", &[&[0, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 1, 1]], &[-1, 2, 1, -1]),
            row("V", &[&[0, 1, 0, 0], &[1, 1, 1, 1]], &[0, 2, 0, 0]),
        ],
        w0_simple: vec![1, 3, 4],
    }
}

/// C4 torus case: every `a_i(E) = 1`.
pub fn sp8_borel() -> RootDomainFixture {
    RootDomainFixture {
        preset: "sp8-borel",
        root: "C4",
        grading: vec![q(1); 4],
        classes: BOREL7
            .iter()
            .skip(1)
            .map(|r| RootClassRow {
                name: r.name,
                simple: r
                    .subset
                    .iter()
                    .map(|&i| {
                        let mut v = vec![0; 4];
                        v[i - 1] = 1;
                        v
                    })
                    .collect(),
                z: r.z.iter().map(|&x| q(x)).collect(),
            })
            .collect(),
        w0_simple: vec![],
    }
}

pub fn root_fixtures() -> Vec<RootDomainFixture> {
    vec![g2_a(), g2_b(), g2_c(), d4_242(), sp8_borel()]
}

/// Fixture whose root system and grading equal the given ones.
pub fn root_fixture_for(root: &str, grading: &[Q]) -> Option<RootDomainFixture> {
    root_fixtures().into_iter().find(|f| f.root.eq_ignore_ascii_case(root) && f.grading == grading)
}

/// Printed Hodge diamonds of the G2 classes, as `(p,q)` lists with all entries 1
/// unless noted. Keyed by preset and class name.
pub fn g2_diamond(preset: &str, name: &str) -> Option<HodgeDiamond> {
    let ones = |w: u32, pts: &[(u32, u32)]| {
        HodgeDiamond::from_entries(w, &pts.iter().map(|&(p, q)| (p, q, 1)).collect::<Vec<_>>())
    };
    Some(match (preset, name) {
        ("g2-a", "I") => ones(6, &[(0, 6), (1, 4), (2, 5), (3, 3), (4, 1), (5, 2), (6, 0)]),
        ("g2-a", "II") => ones(6, &[(0, 5), (1, 6), (2, 2), (3, 3), (4, 4), (5, 0), (6, 1)]),
        ("g2-a", "III") => ones(6, &[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6)]),
        ("g2-b", "I") => ones(4, &[(0, 3), (1, 1), (1, 4), (2, 2), (3, 0), (3, 3), (4, 1)]),
        ("g2-c", "I") => ones(2, &[(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]),
        ("g2-c", "II") => ones(2, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)]),
        ("g2-c", "III") => HodgeDiamond::from_entries(2, &[(0, 0, 2), (1, 1, 3), (2, 2, 2)]),
        _ => return None,
    })
}

/// Grading on C3 whose class diamonds are those of `h = (1,2,2,1)`.
pub fn c3_cy_grading() -> Vec<Q> {
    vec![q(1), q(0), q(1)]
}

/// Capacities listed for the eight `(1,2,2,1)` classes.
pub const CY2_CAPACITIES: &[(&str, usize)] =
    &[("I0", 0), ("I1", 1), ("I2", 2), ("II0", 1), ("II1", 2), ("III0", 1), ("IV1", 1), ("IV2", 3)];

/// Intersection numbers `J_0^3, J_0^2 J_1, J_0 J_1^2, J_1^3` of the mirror example.
pub const CY_TRIPLE: [i64; 4] = [9, 3, 1, 0];

pub const CY_TRIPLE_FILE: &str = "0 0 0 9\n0 0 1 3\n0 1 1 1\n1 1 1 0\n";

fn mat(rows: &[[(i64, i64); 6]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&(n, d)| qf(n, d)).collect()).collect()
}

const O: (i64, i64) = (0, 1);

/// `N_0` exactly as printed, including the `+3/2` in the last row.
pub fn printed_n0() -> Matrix {
    mat(&[
        [O; 6],
        [(-1, 1), O, O, O, O, O],
        [O; 6],
        [(-9, 2), (-9, 1), (-3, 1), O, O, O],
        [(-3, 2), (-3, 1), (-1, 1), O, O, O],
        [(-3, 1), (-9, 2), (3, 2), (-1, 1), O, O],
    ])
}

pub fn printed_n1() -> Matrix {
    mat(&[
        [O; 6],
        [O; 6],
        [(-1, 1), O, O, O, O, O],
        [(-1, 2), (-3, 1), (-1, 1), O, O, O],
        [O, (-1, 1), O, O, O, O],
        [O, (-1, 2), O, O, (-1, 1), O],
    ])
}

/// Rank profiles and class names listed for the mirror example.
pub const MIRROR_PROFILES: &[(&str, [u64; 3], &str)] =
    &[("N0", [3, 2, 1], "IV1"), ("N1", [4, 2, 0], "III0"), ("N0+N1", [4, 2, 1], "IV2"), ("Nc", [1, 0, 0], "I1")];

/// Frozen strong-admissibility witnesses: `(pair, v, g)` with `w = g . generator`.
pub struct StrongWitness {
    pub pair: (&'static str, &'static str),
    pub v: [(i64, i64); 4],
    pub w: [(i64, i64); 4],
}

pub const STRONG_WITNESSES: &[StrongWitness] = &[
    StrongWitness { pair: ("II", "II"), v: [(0, 1), (0, 1), (1, 1), (0, 1)], w: [(-1, 3), (0, 1), (1, 1), (2, 3)] },
    StrongWitness { pair: ("I", "II"), v: [(1, 1), (0, 1), (0, 1), (0, 1)], w: [(0, 1), (0, 1), (-1, 1), (0, 1)] },
    StrongWitness { pair: ("II", "I"), v: [(0, 1), (0, 1), (1, 1), (0, 1)], w: [(1, 1), (0, 1), (0, 1), (0, 1)] },
];

/// The published strongly admissible 2-cubes over G2 with `E = S^2`, in `<e1|11|e2>` notation.
pub const G2_C_STRONG_DIAGRAM: &[&str] = &["<I|III|II>", "<II|III|II>", "<I|III|III>", "<II|III|III>"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamonds::check_diamond;

    #[test]
    fn family_diamonds_are_valid() {
        for (h, fam) in [
            (HodgeNumbers::new(1, vec![3, 3]).unwrap(), Family::Curves { g: 3 }),
            (HodgeNumbers::new(2, vec![1, 4, 1]).unwrap(), Family::K3 { m: 4 }),
            (HodgeNumbers::new(2, vec![2, 5, 2]).unwrap(), Family::Horikawa { m: 5 }),
            (HodgeNumbers::new(3, vec![1, 3, 3, 1]).unwrap(), Family::CalabiYau { m: 3 }),
            (HodgeNumbers::new(7, vec![1; 8]).unwrap(), Family::Borel7),
        ] {
            assert_eq!(Family::detect(&h), Some(fam));
            for (name, d) in fam.classes() {
                assert!(check_diamond(&d, &h), "{name}");
            }
        }
    }

    #[test]
    fn cy2_list_matches_closed_form() {
        let fam = Family::CalabiYau { m: 2 };
        let names: Vec<String> = fam.classes().into_iter().map(|(n, _)| n).collect();
        let mut got = Vec::new();
        for a in &names {
            for b in &names {
                if fam.polarized_lt(a, b).unwrap() {
                    got.push((a.clone(), b.clone()));
                }
            }
        }
        assert_eq!(got.len(), CY2_POLARIZED.len());
        for (a, b) in CY2_POLARIZED {
            assert!(got.contains(&(a.to_string(), b.to_string())));
        }
    }
}
