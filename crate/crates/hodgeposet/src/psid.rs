//! Classes of a Mumford-Tate domain presented by root data and a grading.
//!
//! A class is a `W^0`-orbit of Levi subsystems `L` whose grading element
//! `Z = 2 pi_L(E)` is distinguished. `W^0` is generated by the reflections in
//! roots with `a(E) = 0`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::diamonds::{HodgeDiamond, HodgeNumbers};
use crate::error::{Error, Result};
use crate::fixtures::{root_fixture_for, Family};
use crate::polarized::RelationSet;
use crate::rational::{fmt_q_short, q, qf, to_i64, Q};
use crate::rootsys::{is_distinguished, levi_subsystems, semisimple_projection, LeviSubsystem, Perm, RootSystem};

pub const MAX_RANK: usize = 4;

#[derive(Debug, Clone)]
pub struct DomainSpec {
    pub rs: RootSystem,
    /// `E` by its values on the simple roots.
    pub e: Vec<Q>,
}

impl DomainSpec {
    pub fn new(root: &str, e: Vec<Q>) -> Result<Self> {
        let rs = RootSystem::build(root)?;
        if e.len() != rs.rank {
            return Err(Error::Config(format!("{} needs {} grading coordinates, got {}", rs.name, rs.rank, e.len())));
        }
        if let Some(x) = e.iter().find(|x| !x.is_integer()) {
            return Err(Error::Config(format!("grading must pair integrally with every root, found {x}")));
        }
        Ok(DomainSpec { rs, e })
    }

    pub fn grading_string(&self) -> String {
        self.e.iter().map(fmt_q_short).collect::<Vec<_>>().join(",")
    }

    /// All simple roots have `a(E) = 1`.
    pub fn is_torus_case(&self) -> bool {
        self.e.iter().all(|x| x.is_one())
    }

    pub fn root_grade(&self, idx: usize) -> Q {
        self.rs.pair(&self.rs.roots[idx], &self.e)
    }
}

#[derive(Debug, Clone)]
pub struct LeviClass {
    pub name: String,
    pub representative: LeviSubsystem,
    pub z: Vec<Q>,
    /// Every `W^0`-translate with its own `Z`, sorted by root set.
    pub orbit: Vec<(LeviSubsystem, Vec<Q>)>,
}

impl LeviClass {
    pub fn is_trivial(&self) -> bool {
        self.representative.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Psi {
    pub spec: DomainSpec,
    pub w0: Vec<Perm>,
    /// Trivial class first.
    pub classes: Vec<LeviClass>,
}

fn apply_z(rs: &RootSystem, l: &LeviSubsystem, e: &[Q]) -> Result<Vec<Q>> {
    semisimple_projection(rs, l, e)
}

pub fn compute_psi(spec: &DomainSpec, budget: &Budget) -> Result<Psi> {
    let rs = &spec.rs;
    if rs.rank > MAX_RANK {
        return Err(Error::Unsupported(format!("class computation is limited to rank {MAX_RANK}, got {}", rs.name)));
    }
    let limit = budget.limit.min(usize::MAX as u64) as usize;
    let weyl = rs.weyl_group(limit)?;
    let gens: Vec<Perm> = rs
        .positive
        .iter()
        .enumerate()
        .filter(|(i, _)| spec.root_grade(*i).is_zero())
        .map(|(_, r)| rs.reflection_perm(r))
        .collect();
    let w0 = rs.generate_group(&gens, limit)?;

    let mut admitted: Vec<LeviSubsystem> = Vec::new();
    for l in levi_subsystems(rs, &weyl) {
        let z = apply_z(rs, &l, &spec.e)?;
        if is_distinguished(rs, &l, &z)? {
            admitted.push(l);
        }
    }

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = Vec::new();
    for l in &admitted {
        if seen.contains(&l.roots) {
            continue;
        }
        let mut orbit: Vec<LeviSubsystem> = w0.iter().map(|w| l.apply(rs, w)).collect();
        orbit.sort();
        orbit.dedup();
        for m in &orbit {
            seen.insert(m.roots.clone());
        }
        let orbit = orbit
            .into_iter()
            .map(|m| {
                let z = apply_z(rs, &m, &spec.e)?;
                Ok((m, z))
            })
            .collect::<Result<Vec<_>>>()?;
        let (rep, z) = orbit[0].clone();
        classes.push(LeviClass { name: String::new(), representative: rep, z, orbit });
    }
    classes.sort_by(|a, b| {
        (a.representative.rank(), a.representative.roots.len(), &a.representative.roots).cmp(&(
            b.representative.rank(),
            b.representative.roots.len(),
            &b.representative.roots,
        ))
    });
    let mut psi = Psi { spec: spec.clone(), w0, classes };
    name_classes(&mut psi);
    Ok(psi)
}

/// Fixture table first, then period-domain family names, then positional.
fn name_classes(psi: &mut Psi) {
    let rs = &psi.spec.rs;
    if let Some(fx) = root_fixture_for(&rs.name, &psi.spec.e) {
        for c in psi.classes.iter_mut() {
            if c.is_trivial() {
                c.name = "0".into();
                continue;
            }
            for row in &fx.classes {
                let simple: BTreeSet<&Vec<i64>> = row.simple.iter().collect();
                if let Some((m, z)) = c
                    .orbit
                    .iter()
                    .find(|(m, z)| *z == row.z && m.simple_roots(rs).into_iter().collect::<BTreeSet<_>>() == simple)
                {
                    c.name = row.name.to_string();
                    c.representative = m.clone();
                    c.z = z.clone();
                }
            }
        }
    }
    let family = standard_weights(rs).and_then(|_| {
        let trivial = psi.classes.iter().find(|c| c.is_trivial())?;
        let d = class_diamond(&psi.spec, &trivial.z).ok()?;
        let h = hodge_numbers_of(&d);
        Family::detect(&h)
    });
    for (i, c) in psi.classes.iter_mut().enumerate() {
        if !c.name.is_empty() {
            continue;
        }
        let by_family = family.and_then(|f| class_diamond(&psi.spec, &c.z).ok().and_then(|d| f.name_of(&d)));
        c.name = by_family.unwrap_or_else(|| if c.is_trivial() { "0".into() } else { format!("L{i}") });
    }
}

fn hodge_numbers_of(d: &HodgeDiamond) -> HodgeNumbers {
    let n = d.weight;
    HodgeNumbers { weight: n, h: (0..=n).map(|p| (0..=n).map(|q| d.get(p, q)).sum()).collect() }
}

impl Psi {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn names(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.name.clone()).collect()
    }

    pub fn diagonal_levi(&self, i: usize) -> LeviSubsystem {
        diagonal_levi(&self.spec, &self.classes[i].representative, &self.classes[i].z)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        let target: BTreeSet<usize> = self.diagonal_levi(j).roots.into_iter().collect();
        let l1 = &self.classes[i].representative.roots;
        self.w0.iter().any(|w| l1.iter().all(|&r| target.contains(&w[r])))
    }

    /// Sufficient test for `i ⪯ j`; exact in the torus case.
    pub fn polarized_by_orthogonality(&self, i: usize, j: usize) -> bool {
        if i == j || !self.leq(i, j) {
            return i == j;
        }
        let ci = &self.classes[i];
        if ci.is_trivial() {
            return true;
        }
        let rs = &self.spec.rs;
        let targets = &self.classes[j].orbit;
        for (a, za) in &ci.orbit {
            for other in self.classes.iter().filter(|c| !c.is_trivial()) {
                for (b, zb) in &other.orbit {
                    let ortho = a
                        .roots
                        .iter()
                        .all(|&x| b.roots.iter().all(|&y| rs.strongly_orthogonal(&rs.roots[x], &rs.roots[y])));
                    if !ortho {
                        continue;
                    }
                    let z: Vec<Q> = za.iter().zip(zb).map(|(x, y)| x + y).collect();
                    let hit = targets.iter().any(|(c, zc)| {
                        *zc == z && a.roots.iter().chain(&b.roots).all(|r| c.roots.binary_search(r).is_ok())
                    });
                    if hit {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn leq_relation(&self) -> RelationSet {
        let n = self.classes.len();
        let mut r = RelationSet::new(self.names());
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) {
                    r.edges.insert((i, j));
                }
            }
        }
        r
    }

    pub fn polarized_relation(&self) -> RelationSet {
        let n = self.classes.len();
        let mut r = RelationSet::new(self.names());
        for i in 0..n {
            for j in 0..n {
                if i != j && self.polarized_by_orthogonality(i, j) {
                    r.edges.insert((i, j));
                }
            }
        }
        r
    }

    /// Diamond of each class on the standard representation, if one is known.
    pub fn class_diamond(&self, i: usize) -> Result<HodgeDiamond> {
        class_diamond(&self.spec, &self.classes[i].z)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rs = &self.spec.rs;
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "simpleRoots": c.representative.simple_roots(rs),
                    "Z": c.z.iter().map(crate::rational::fmt_q).collect::<Vec<_>>(),
                    "orbitSize": c.orbit.len(),
                })
            })
            .collect();
        let leq = self.leq_relation();
        let pol = self.polarized_relation();
        serde_json::json!({
            "root": rs.name,
            "grading": self.spec.e.iter().map(crate::rational::fmt_q).collect::<Vec<_>>(),
            "classes": classes,
            "leq": leq.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "polarized": pol.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "polarizedCriterion": if self.spec.is_torus_case() { "exact" } else { "sufficient" },
        })
    }
}

/// `{a : a(2E - Z) = 0}`.
pub fn diagonal_levi(spec: &DomainSpec, _l: &LeviSubsystem, z: &[Q]) -> LeviSubsystem {
    let rs = &spec.rs;
    let v: Vec<Q> = spec.e.iter().zip(z).map(|(e, z)| e * q(2) - z).collect();
    LeviSubsystem::from_roots(rs, (0..rs.num_roots()).filter(|&i| rs.pair(&rs.roots[i], &v).is_zero()))
}

/// Weights of the standard representation in simple-root coordinates.
pub fn standard_weights(rs: &RootSystem) -> Option<Vec<Vec<Q>>> {
    let n = rs.rank;
    let letter = rs.name.chars().next()?;
    let zero = || vec![Q::zero(); n];
    let unit = |i: usize| {
        let mut v = zero();
        v[i] = Q::one();
        v
    };
    let add = |a: &[Q], b: &[Q]| -> Vec<Q> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let neg = |a: &[Q]| -> Vec<Q> { a.iter().map(|x| -x).collect() };
    let mut e: Vec<Vec<Q>> = vec![zero(); n];
    let mut out = Vec::new();
    match letter {
        'A' => {
            let w = rs.fundamental_weights().ok()?;
            let mut cur = w[0].clone();
            out.push(cur.clone());
            for i in 0..n {
                cur = add(&cur, &neg(&unit(i)));
                out.push(cur.clone());
            }
            return Some(out);
        }
        'B' => {
            let mut acc = zero();
            for i in (0..n).rev() {
                acc = add(&acc, &unit(i));
                e[i] = acc.clone();
            }
        }
        'C' => {
            let mut acc = zero();
            acc[n - 1] = qf(1, 2);
            e[n - 1] = acc.clone();
            for i in (0..n - 1).rev() {
                acc = add(&acc, &unit(i));
                e[i] = acc.clone();
            }
        }
        'D' => {
            e[n - 1] = (0..n)
                .map(|k| {
                    if k == n - 1 {
                        qf(1, 2)
                    } else if k == n - 2 {
                        qf(-1, 2)
                    } else {
                        Q::zero()
                    }
                })
                .collect();
            e[n - 2] = (0..n).map(|k| if k >= n - 2 { qf(1, 2) } else { Q::zero() }).collect();
            for i in (0..n - 2).rev() {
                e[i] = add(&unit(i), &e[i + 1]);
            }
        }
        'G' => {
            for r in rs.roots.iter().filter(|r| rs.inner(r, r) == 2) {
                out.push(r.iter().map(|&c| q(c)).collect());
            }
            out.push(zero());
            return Some(out);
        }
        _ => return None,
    }
    for w in &e {
        out.push(w.clone());
        out.push(neg(w));
    }
    if letter == 'B' {
        out.push(zero());
    }
    Some(out)
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `i^{p,q} = #{mu : mu(E) = p - n/2, mu(Z) = p + q - n}` over standard weights.
pub fn class_diamond(spec: &DomainSpec, z: &[Q]) -> Result<HodgeDiamond> {
    let rs = &spec.rs;
    let ws = standard_weights(rs)
        .ok_or_else(|| Error::Unsupported(format!("no standard representation for {}", rs.name)))?;
    let max = ws.iter().map(|w| dot(w, &spec.e)).max().unwrap_or_else(Q::zero);
    let n2 = max * q(2);
    let n = to_i64(&n2).ok_or_else(|| Error::Unsupported("grading gives a non-integral weight".into()))?;
    let half = qf(n, 2);
    let mut d = HodgeDiamond::new(n as u32);
    for w in &ws {
        let pe = dot(w, &spec.e) + &half;
        let pz = dot(w, z);
        let p = to_i64(&pe).ok_or_else(|| Error::Unsupported("weight grading is not a Hodge grading".into()))?;
        let s = to_i64(&(pz + q(n))).ok_or_else(|| Error::Unsupported("Z gives a non-integral grading".into()))?;
        let qq = s - p;
        if p < 0 || qq < 0 || p > n || qq > n {
            return Err(Error::Invariant(format!("bidegree ({p},{qq}) outside weight {n}")));
        }
        d.add(p as u32, qq as u32, 1);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c3_cy_grading, g2_diamond};

    fn psi(root: &str, e: &[i64]) -> Psi {
        compute_psi(&DomainSpec::new(root, e.iter().map(|&x| q(x)).collect()).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn g2_counts_and_names() {
        let mut names = psi("G2", &[1, 1]).names();
        names.sort();
        assert_eq!(names, ["0", "I", "II", "III"]);
        assert_eq!(psi("G2", &[1, 0]).classes.len(), 2);
        let p = psi("G2", &[0, 1]);
        assert_eq!(p.classes.len(), 4);
        assert_eq!(p.w0.len(), 2);
        for name in ["I", "II", "III"] {
            let i = p.index_of(name).unwrap();
            assert_eq!(p.class_diamond(i).unwrap(), g2_diamond("g2-c", name).unwrap(), "{name}");
        }
    }

    #[test]
    fn g2_c_relations() {
        let p = psi("G2", &[0, 1]);
        let [i1, i2, i3] = ["I", "II", "III"].map(|n| p.index_of(n).unwrap());
        assert!(p.leq(i1, i3) && p.leq(i2, i3));
        assert!(!p.leq(i1, i2) && !p.leq(i2, i1));
        assert!(p.polarized_by_orthogonality(i1, i3));
        assert!(p.polarized_by_orthogonality(i2, i3));
        let d = p.diagonal_levi(i1);
        assert_eq!(d.simple_roots(&p.spec.rs), vec![&vec![0, 1]]);
    }

    #[test]
    fn g2_a_nothing_polarized() {
        let p = psi("G2", &[1, 1]);
        let pol = p.polarized_relation();
        assert!(pol.edges.iter().all(|&(a, _)| p.classes[a].is_trivial()));
    }

    #[test]
    fn c3_calibration_names() {
        let spec = DomainSpec::new("C3", c3_cy_grading()).unwrap();
        let p = compute_psi(&spec, &Budget::default()).unwrap();
        let mut names = p.names();
        names.sort();
        assert_eq!(names, vec!["I0", "I1", "I2", "II0", "II1", "III0", "IV1", "IV2"]);
    }

    #[test]
    fn rank_bound() {
        let spec = DomainSpec::new("A5", vec![q(1); 5]).unwrap();
        assert!(matches!(compute_psi(&spec, &Budget::default()), Err(Error::Unsupported(_))));
        assert!(DomainSpec::new("G2", vec![qf(1, 2), q(0)]).is_err());
    }
}
