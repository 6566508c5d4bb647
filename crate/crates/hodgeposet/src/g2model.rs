//! Binary-cubic model of the G2 piece `l~^{-1,-1}` for the `(2,3,2)` domain.
//!
//! `A_j` is the coefficient of `u^{3-j} w^j`, matching the root vectors
//! `X_{a2 + j a1}`. `GL2` acts by the substitution `u -> au+bw, w -> cu+dw`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cubes::NCube;
use crate::error::{Error, Result};
use crate::fixtures::STRONG_WITNESSES;
use crate::rational::{fmt_q_short, q, qf, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubic {
    pub a: [Q; 4],
}

impl BinaryCubic {
    pub fn new(a0: Q, a1: Q, a2: Q, a3: Q) -> Self {
        BinaryCubic { a: [a0, a1, a2, a3] }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        BinaryCubic { a: v.map(q) }
    }

    pub fn from_fracs(v: [(i64, i64); 4]) -> Self {
        BinaryCubic { a: v.map(|(n, d)| qf(n, d)) }
    }

    pub fn zero() -> Self {
        BinaryCubic::from_ints([0; 4])
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        BinaryCubic { a: std::array::from_fn(|i| &self.a[i] + &o.a[i]) }
    }

    pub fn scale(&self, s: &Q) -> Self {
        BinaryCubic { a: std::array::from_fn(|i| &self.a[i] * s) }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v = crate::rational::parse_q_list(s)?;
        let arr: [Q; 4] = v.try_into().map_err(|_| Error::Config("a cubic needs four coefficients".into()))?;
        Ok(BinaryCubic { a: arr })
    }

    /// The two vectors span a line (or less).
    pub fn dependent(&self, o: &Self) -> bool {
        (0..4).all(|i| (0..4).all(|j| &self.a[i] * &o.a[j] == &self.a[j] * &o.a[i]))
    }
}

impl fmt::Display for BinaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(fmt_q_short).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GL2Element {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl GL2Element {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Self {
        GL2Element { a, b, c, d }
    }

    pub fn identity() -> Self {
        GL2Element::new(q(1), q(0), q(0), q(1))
    }

    pub fn det(&self) -> Q {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `k` with `act(k, v) = act(self, act(h, v))`: the matrix product `h * self`.
    pub fn compose(&self, h: &GL2Element) -> GL2Element {
        GL2Element {
            a: &h.a * &self.a + &h.b * &self.c,
            b: &h.a * &self.b + &h.b * &self.d,
            c: &h.c * &self.a + &h.d * &self.c,
            d: &h.c * &self.b + &h.d * &self.d,
        }
    }
}

impl fmt::Display for GL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            fmt_q_short(&self.a),
            fmt_q_short(&self.b),
            fmt_q_short(&self.c),
            fmt_q_short(&self.d)
        )
    }
}

fn mul_forms(x: &[Q], y: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Substitution action for any invertible `g`.
pub fn act_any(g: &GL2Element, v: &BinaryCubic) -> BinaryCubic {
    let l1 = [g.a.clone(), g.b.clone()];
    let l2 = [g.c.clone(), g.d.clone()];
    let mut out = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
    for j in 0..4 {
        if v.a[j].is_zero() {
            continue;
        }
        let mut f = vec![Q::one()];
        for _ in 0..3 - j {
            f = mul_forms(&f, &l1);
        }
        for _ in 0..j {
            f = mul_forms(&f, &l2);
        }
        for (k, c) in f.iter().enumerate() {
            out[k] += &v.a[j] * c;
        }
    }
    BinaryCubic { a: out }
}

/// The `GL2^+` action; rejects nonpositive determinant.
pub fn act(g: &GL2Element, v: &BinaryCubic) -> Result<BinaryCubic> {
    if !g.det().is_positive() {
        return Err(Error::Config(format!("group element {g} has nonpositive determinant")));
    }
    Ok(act_any(g, v))
}

/// `4(A2^2 - 3A1A3)(A1^2 - 3A0A2) - (A2A1 - 9A0A3)^2`; zero exactly on the surface.
pub fn surface_defect(v: &BinaryCubic) -> Q {
    let [a0, a1, a2, a3] = &v.a;
    let lhs = a2 * a1 - q(9) * a0 * a3;
    q(4) * (a2 * a2 - q(3) * a1 * a3) * (a1 * a1 - q(3) * a0 * a2) - &lhs * &lhs
}

pub fn on_closure_surface(v: &BinaryCubic) -> bool {
    surface_defect(v).is_zero()
}

/// Apolar pairing `A0B3 - A1B2/3 + A2B1/3 - A3B0`.
pub fn pairing(v: &BinaryCubic, w: &BinaryCubic) -> Q {
    let t = qf(1, 3);
    &v.a[0] * &w.a[3] - &t * &v.a[1] * &w.a[2] + &t * &v.a[2] * &w.a[1] - &v.a[3] * &w.a[0]
}

pub fn commutes(v: &BinaryCubic, w: &BinaryCubic) -> bool {
    pairing(v, w).is_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicClass {
    Zero,
    I,
    II,
    III,
}

impl CubicClass {
    pub fn name(&self) -> &'static str {
        match self {
            CubicClass::Zero => "zero",
            CubicClass::I => "I",
            CubicClass::II => "II",
            CubicClass::III => "III",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "I" => Ok(CubicClass::I),
            "II" => Ok(CubicClass::II),
            "III" => Ok(CubicClass::III),
            other => Err(Error::Config(format!("unknown cubic class {other:?}, expected I, II or III"))),
        }
    }

    /// Canonical orbit representative.
    pub fn generator(&self) -> BinaryCubic {
        match self {
            CubicClass::Zero => BinaryCubic::zero(),
            CubicClass::I => BinaryCubic::from_ints([1, 0, 0, 0]),
            CubicClass::II => BinaryCubic::from_ints([0, 0, 1, 0]),
            CubicClass::III => BinaryCubic::from_ints([1, 0, 0, 1]),
        }
    }
}

pub fn classify(v: &BinaryCubic) -> CubicClass {
    if v.is_zero() {
        return CubicClass::Zero;
    }
    if !on_closure_surface(v) {
        return CubicClass::III;
    }
    let t = qf(1, 3);
    let [a0, a1, a2, a3] = &v.a;
    let row1 = [a0.clone(), a1 * &t, a2 * &t];
    let row2 = [a1 * &t, a2 * &t, a3.clone()];
    let rank_one = (0..3).all(|i| (i + 1..3).all(|j| &row1[i] * &row2[j] == &row1[j] * &row2[i]));
    if rank_one {
        CubicClass::I
    } else {
        CubicClass::II
    }
}

/// Dense univariate polynomial, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    fn trimmed(mut v: Vec<Q>) -> Poly {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Poly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::trimmed(
            (0..n)
                .map(|i| self.0.get(i).cloned().unwrap_or_default() + o.0.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(vec![]);
        }
        Poly::trimmed(mul_forms(&self.0, &o.0))
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn derivative(&self) -> Poly {
        Poly::trimmed(self.0.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    fn rem(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let dl = d.0.last().expect("division by zero polynomial").clone();
        let dd = d.0.len() - 1;
        while r.len() > dd && !r.is_empty() {
            let f = r.last().unwrap().clone() / &dl;
            let shift = r.len() - 1 - dd;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly::trimmed(r)
    }

    /// Divides out the largest power of the variable.
    fn strip_zero_roots(&self) -> Poly {
        let k = self.0.iter().take_while(|c| c.is_zero()).count();
        Poly(self.0[k..].to_vec())
    }

    fn sign_changes_at_zero(seq: &[Poly]) -> usize {
        // every member is evaluated just right of 0: first nonzero coefficient
        count_changes(seq.iter().filter_map(|p| p.0.iter().find(|c| !c.is_zero()).map(|c| c.signum())))
    }

    fn sign_changes_at_infinity(seq: &[Poly]) -> usize {
        count_changes(seq.iter().filter_map(|p| p.0.last().map(|c| c.signum())))
    }

    /// Number of distinct roots in `(0, inf)`, by Sturm's theorem.
    pub fn positive_roots(&self) -> usize {
        let p = self.strip_zero_roots();
        if p.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        Poly::sign_changes_at_zero(&seq) - Poly::sign_changes_at_infinity(&seq)
    }

    /// Sign on all of `(0, inf)` when it is constant and nonzero.
    pub fn sign_on_positive_ray(&self) -> Option<Ordering> {
        if self.is_zero() || self.positive_roots() > 0 {
            return None;
        }
        let s = self.eval(&q(1));
        Some(if s.is_positive() { Ordering::Greater } else { Ordering::Less })
    }
}

fn count_changes(signs: impl Iterator<Item = Q>) -> usize {
    let mut prev: Option<bool> = None;
    let mut n = 0;
    for s in signs {
        let pos = s.is_positive();
        if prev.is_some_and(|p| p != pos) {
            n += 1;
        }
        prev = Some(pos);
    }
    n
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_q_short(c),
                1 => format!("{}*r", fmt_q_short(c)),
                _ => format!("{}*r^{i}", fmt_q_short(c)),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Surface defect of `r v + w` as a polynomial in `r`.
pub fn pencil_defect(v: &BinaryCubic, w: &BinaryCubic) -> Poly {
    let c: Vec<Poly> = (0..4).map(|j| Poly::trimmed(vec![w.a[j].clone(), v.a[j].clone()])).collect();
    let k = |x: i64| Poly::trimmed(vec![q(x)]);
    let t = c[2].mul(&c[1]).add(&k(-9).mul(&c[0]).mul(&c[3]));
    let f1 = c[2].mul(&c[2]).add(&k(-3).mul(&c[1]).mul(&c[3]));
    let f2 = c[1].mul(&c[1]).add(&k(-3).mul(&c[0]).mul(&c[2]));
    k(4).mul(&f1).mul(&f2).add(&t.mul(&t).neg())
}

#[derive(Debug, Clone)]
pub struct StrongVerdict {
    pub pair: (CubicClass, CubicClass),
    pub holds: bool,
    pub v: Option<BinaryCubic>,
    pub w: Option<BinaryCubic>,
    /// Defect of `r v + w`; nonvanishing on `r > 0` means type III throughout.
    pub defect: Option<Poly>,
    pub reason: String,
}

impl StrongVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pair": [self.pair.0.name(), self.pair.1.name()],
            "stronglyAdmissible": self.holds,
            "v": self.v.as_ref().map(|x| x.a.iter().map(crate::rational::fmt_q).collect::<Vec<_>>()),
            "w": self.w.as_ref().map(|x| x.a.iter().map(crate::rational::fmt_q).collect::<Vec<_>>()),
            "defect": self.defect.as_ref().map(|p| p.to_string()),
            "reason": self.reason,
        })
    }
}

/// Checks that `(v, w)` witnesses the pair: right classes, commuting,
/// independent, and every `r1 v + r2 w` with `r1, r2 > 0` of type III.
pub fn verify_witness(t1: CubicClass, t2: CubicClass, v: &BinaryCubic, w: &BinaryCubic) -> Option<Poly> {
    if classify(v) != t1 || classify(w) != t2 || !commutes(v, w) || v.dependent(w) {
        return None;
    }
    let p = pencil_defect(v, w);
    p.sign_on_positive_ray().map(|_| p)
}

fn search_grid() -> Vec<Q> {
    let mut g = vec![q(0), q(1), q(-1), qf(1, 3), qf(-1, 3), qf(2, 3), qf(-2, 3), q(2), q(-2)];
    g.dedup();
    g
}

/// Bounded search over `GL2^+` elements with small entries.
pub fn search_witness(t1: CubicClass, t2: CubicClass) -> Option<(BinaryCubic, BinaryCubic, GL2Element)> {
    let v = t1.generator();
    let base = t2.generator();
    let grid = search_grid();
    for a in &grid {
        for b in &grid {
            for c in &grid {
                for d in &grid {
                    let g = GL2Element::new(a.clone(), b.clone(), c.clone(), d.clone());
                    if !g.det().is_positive() {
                        continue;
                    }
                    let w = act_any(&g, &base);
                    if verify_witness(t1, t2, &v, &w).is_some() {
                        return Some((v, w, g));
                    }
                }
            }
        }
    }
    None
}

pub fn strong_2cube_verdict(t1: CubicClass, t2: CubicClass) -> Result<StrongVerdict> {
    if !matches!(t1, CubicClass::I | CubicClass::II) || !matches!(t2, CubicClass::I | CubicClass::II) {
        return Err(Error::Unsupported("strong verdicts are decided for the labels I and II only".into()));
    }
    if t1 == CubicClass::I && t2 == CubicClass::I {
        // pairing of (1,0,0,0) with g.(1,0,0,0) = (a^3, 3a^2b, 3ab^2, b^3) is b^3
        return Ok(StrongVerdict {
            pair: (t1, t2),
            holds: false,
            v: None,
            w: None,
            defect: None,
            reason: "commuting with (1,0,0,0) forces b^3 = 0, so g.(1,0,0,0) = (a^3,0,0,0) is dependent".into(),
        });
    }
    for fw in STRONG_WITNESSES {
        if (CubicClass::parse(fw.pair.0)?, CubicClass::parse(fw.pair.1)?) != (t1, t2) {
            continue;
        }
        let (v, w) = (BinaryCubic::from_fracs(fw.v), BinaryCubic::from_fracs(fw.w));
        let Some(p) = verify_witness(t1, t2, &v, &w) else {
            return Err(Error::FixtureMismatch(format!(
                "stored witness for ({},{}) does not verify",
                t1.name(),
                t2.name()
            )));
        };
        return Ok(StrongVerdict {
            pair: (t1, t2),
            holds: true,
            v: Some(v),
            w: Some(w),
            defect: Some(p),
            reason: "stored witness verified exactly".into(),
        });
    }
    Ok(match search_witness(t1, t2) {
        Some((v, w, g)) => StrongVerdict {
            pair: (t1, t2),
            holds: true,
            defect: Some(pencil_defect(&v, &w)),
            v: Some(v),
            w: Some(w),
            reason: format!("witness found by search with g = {g}"),
        },
        None => StrongVerdict {
            pair: (t1, t2),
            holds: false,
            v: None,
            w: None,
            defect: None,
            reason: "no witness in the search grid".into(),
        },
    })
}

/// `N_2(t) = (1,t,1,-2t) . (0,1,0,0) = (1, 0, -3t^2, -2t^3)`.
pub fn n2_family(t: &Q) -> BinaryCubic {
    let g = GL2Element::new(q(1), t.clone(), q(1), -(q(2) * t));
    act_any(&g, &BinaryCubic::from_ints([0, 1, 0, 0]))
}

/// Strong-admissibility filter for 2-cubes over G2 with `E = S^2`: only
/// cubes topped by III with both edges in {I, II} get a verdict.
pub fn strong_filter(cube: &NCube, names: &[String]) -> Option<bool> {
    if cube.n != 2 || names[cube.top()] != "III" {
        return None;
    }
    let t1 = CubicClass::parse(&names[cube.values[1]]).ok()?;
    let t2 = CubicClass::parse(&names[cube.values[2]]).ok()?;
    if t1 == CubicClass::III || t2 == CubicClass::III {
        return None;
    }
    strong_2cube_verdict(t1, t2).ok().map(|v| v.holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> GL2Element {
        GL2Element::new(qf(a.0, a.1), qf(b.0, b.1), qf(c.0, c.1), qf(d.0, d.1))
    }

    #[test]
    fn stored_witness_image() {
        let w = act(&g((1, 1), (1, 1), (-1, 3), (2, 3)), &BinaryCubic::from_ints([0, 1, 0, 0])).unwrap();
        assert_eq!(w, BinaryCubic::from_fracs([(-1, 3), (0, 1), (1, 1), (2, 3)]));
        assert!(act(&g((0, 1), (1, 1), (1, 1), (0, 1)), &w).is_err());
    }

    #[test]
    fn generator_formulas() {
        let x = g((2, 1), (3, 1), (5, 1), (7, 1));
        assert_eq!(act_any(&x, &BinaryCubic::from_ints([1, 0, 0, 0])), BinaryCubic::from_ints([8, 36, 54, 27]));
        // (a^2c, 2abc + a^2d, 2abd + b^2c, b^2d)
        assert_eq!(act_any(&x, &BinaryCubic::from_ints([0, 1, 0, 0])), BinaryCubic::from_ints([20, 88, 129, 63]));
    }

    #[test]
    fn compose_is_action() {
        let x = g((2, 1), (1, 3), (-1, 1), (1, 1));
        let y = g((1, 1), (2, 1), (0, 1), (3, 1));
        let v = BinaryCubic::from_fracs([(1, 2), (-1, 1), (3, 1), (2, 5)]);
        assert_eq!(act_any(&x.compose(&y), &v), act_any(&x, &act_any(&y, &v)));
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&BinaryCubic::from_ints([1, 0, 0, 0])), CubicClass::I);
        assert_eq!(classify(&BinaryCubic::from_ints([0, 0, 1, 0])), CubicClass::II);
        assert_eq!(classify(&BinaryCubic::from_ints([1, 0, 1, 0])), CubicClass::III);
        assert_eq!(classify(&BinaryCubic::zero()), CubicClass::Zero);
        assert!(on_closure_surface(&BinaryCubic::from_ints([0, 1, 0, 0])));
    }

    #[test]
    fn witness_defect_is_positive() {
        let p = pencil_defect(
            &BinaryCubic::from_ints([0, 0, 1, 0]),
            &BinaryCubic::from_fracs([(-1, 3), (0, 1), (1, 1), (2, 3)]),
        );
        // 4(1+r)^3 - 4
        assert_eq!(p, Poly(vec![q(0), q(12), q(12), q(4)]));
        assert_eq!(p.sign_on_positive_ray(), Some(Ordering::Greater));
    }

    #[test]
    fn sturm_counts() {
        // (r-1)(r-2)(r+3)
        let p = Poly(vec![q(6), q(-7), q(0), q(1)]);
        assert_eq!(p.positive_roots(), 2);
        assert_eq!(Poly(vec![q(1), q(0), q(1)]).positive_roots(), 0);
        assert_eq!(Poly(vec![q(1), q(-2), q(1)]).sign_on_positive_ray(), None);
    }

    #[test]
    fn verdicts() {
        assert!(!strong_2cube_verdict(CubicClass::I, CubicClass::I).unwrap().holds);
        for (a, b) in
            [(CubicClass::II, CubicClass::II), (CubicClass::I, CubicClass::II), (CubicClass::II, CubicClass::I)]
        {
            assert!(strong_2cube_verdict(a, b).unwrap().holds);
            assert!(search_witness(a, b).is_some());
        }
        assert!(search_witness(CubicClass::I, CubicClass::I).is_none());
    }

    #[test]
    fn n2_family_limit() {
        for t in [qf(-1, 2), q(-3), q(2), qf(1, 5)] {
            let n2 = n2_family(&t);
            assert_eq!(classify(&n2), CubicClass::II);
            assert_eq!(classify(&BinaryCubic::from_ints([1, 0, 0, 0]).add(&n2)), CubicClass::III);
        }
        assert_eq!(n2_family(&q(1)), BinaryCubic::from_ints([1, 0, -3, -2]));
    }
}
