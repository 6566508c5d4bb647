//! One PASS/FAIL line per acceptance criterion.
//!
//! A FAIL line means the computed result disagrees with the published value.
//! Those disagreements are pinned exactly, so the test itself only fails when
//! the computation drifts from what is recorded here.

use std::collections::BTreeSet;

use hodgeposet::budget::Budget;
use hodgeposet::cubes::{
    capacity, capacity_table, cube_leq, enumerate_admissible, full_classes, secondary_poset, CubeContext,
};
use hodgeposet::diamonds::{enumerate_diamonds, primitive_decomposition, reconstruct, HodgeNumbers};
use hodgeposet::fixtures::{self, Family};
use hodgeposet::g2model::{
    self, act, classify, on_closure_surface, pencil_defect, BinaryCubic, CubicClass, GL2Element, Poly,
};
use hodgeposet::mirror::{
    self, analyze_pairings, build_nj, classify_type, commutator, rank_profile_matrix, IntersectionData,
};
use hodgeposet::nilpotent::{closure_relation, pi_fibers};
use hodgeposet::polarized::{polarized_digraph, transitivity_report};
use hodgeposet::psid::{compute_psi, DomainSpec, Psi};
use hodgeposet::rational::{is_zero_matrix, mat_add, mat_mul, q, qf, transpose, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn budget() -> Budget {
    Budget::default()
}

fn curves() -> Vec<HodgeNumbers> {
    [1, 2, 3, 5].iter().map(|&g| HodgeNumbers::new(1, vec![g, g]).unwrap()).collect()
}

fn k3s() -> Vec<HodgeNumbers> {
    [1, 2, 3, 5, 20].iter().map(|&m| HodgeNumbers::new(2, vec![1, m, 1]).unwrap()).collect()
}

fn horikawas() -> Vec<HodgeNumbers> {
    [4, 5].iter().map(|&m| HodgeNumbers::new(2, vec![2, m, 2]).unwrap()).collect()
}

fn cys() -> Vec<HodgeNumbers> {
    [2, 3, 4].iter().map(|&m| HodgeNumbers::new(3, vec![1, m, m, 1]).unwrap()).collect()
}

fn families() -> Vec<HodgeNumbers> {
    [curves(), k3s(), horikawas(), cys()].concat()
}

fn psi(root: &str, e: &[i64]) -> Psi {
    compute_psi(&DomainSpec::new(root, e.iter().map(|&x| q(x)).collect()).unwrap(), &budget()).unwrap()
}

fn c1_counts() -> Outcome {
    let mut rows = Vec::new();
    let mut expect = |h: HodgeNumbers, want: usize| {
        let got = enumerate_diamonds(&h, &budget()).unwrap().len();
        assert_eq!(got, want, "{:?}", h.h);
        rows.push(format!("{:?}:{got}", h.h));
    };
    for h in curves() {
        let g = h.h[0] as usize;
        expect(h, g + 1);
    }
    for h in k3s() {
        let want = if h.h[1] == 1 { 2 } else { 3 };
        expect(h, want);
    }
    for h in horikawas() {
        expect(h, 6);
    }
    for h in cys() {
        let m = h.h[1] as usize;
        expect(h, 4 * m);
    }
    pass(rows.join(" "))
}

fn c2_polarized_closed_forms() -> Outcome {
    let mut off = Vec::new();
    for h in families() {
        let fam = Family::detect(&h).unwrap();
        let r = polarized_digraph(&h, &budget()).unwrap();
        for (i, a) in r.classes.iter().enumerate() {
            for (j, b) in r.classes.iter().enumerate() {
                if fam.polarized_lt(a, b) != Some(r.holds(i, j)) {
                    off.push(format!("m={} {a}->{b}", h.h[1]));
                }
            }
        }
    }
    // the listed rule for II_b -> III_c omits c <= m-3: the length-1 partner of each
    // new length-3 string lands in weight 3, which III_{m-2} does not have
    assert_eq!(off, ["m=3 II2->III1", "m=4 II2->III2", "m=4 II3->III2"]);
    let h = HodgeNumbers::new(3, vec![1, 2, 2, 1]).unwrap();
    let got = polarized_digraph(&h, &budget()).unwrap().named_edges();
    let want: BTreeSet<(String, String)> =
        fixtures::CY2_POLARIZED.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(got, want);
    Outcome {
        pass: false,
        detail: format!(
            "curves, K3, Horikawa and CY m=2 match exactly; (1,2,2,1) gives {} arrows, equal to the printed diagram \
             (which draws 14, not 15); CY m>=3 lacks the listed II_b -> III_(m-2): {}",
            got.len(),
            off.join(", ")
        ),
    }
}

fn c3_transitivity() -> Outcome {
    let h = HodgeNumbers::new(3, vec![1, 2, 2, 1]).unwrap();
    let r = polarized_digraph(&h, &budget()).unwrap();
    let w: Vec<_> = transitivity_report(&r)
        .into_iter()
        .map(|(a, b, c)| format!("({},{},{})", r.classes[a], r.classes[b], r.classes[c]))
        .collect();
    assert_eq!(w, ["(II0,II1,IV2)"]);
    for h in [curves(), k3s(), horikawas()].concat() {
        let r = polarized_digraph(&h, &budget()).unwrap();
        assert!(transitivity_report(&r).is_empty(), "{:?}", h.h);
    }
    pass(format!("witness {}", w[0]))
}

fn c4_closure() -> Outcome {
    let mut pairs = 0;
    for h in families() {
        let fam = Family::detect(&h).unwrap();
        let r = closure_relation(&h, &budget()).unwrap();
        for (i, a) in r.classes.iter().enumerate() {
            for (j, b) in r.classes.iter().enumerate() {
                assert_eq!(fam.closure_lt(a, b), Some(r.holds(i, j)), "{:?}: {a} < {b}", h.h);
                pairs += 1;
            }
        }
    }
    pass(format!("{pairs} ordered pairs checked"))
}

fn c5_total_order() -> Outcome {
    for h in [curves(), k3s()].concat() {
        assert!(polarized_digraph(&h, &budget()).unwrap().is_total_order(), "{:?}", h.h);
    }
    pass("curves and K3 types are chains")
}

fn c6_torus() -> Outcome {
    let p = psi("C4", &[1, 1, 1, 1]);
    assert_eq!(p.classes.len(), 16);
    let rs = &p.spec.rs;
    let subset = |i: usize| -> BTreeSet<usize> {
        let name = if p.classes[i].is_trivial() { "{}" } else { p.classes[i].name.as_str() };
        fixtures::BOREL7.iter().find(|r| r.name == name).unwrap().subset.iter().copied().collect()
    };
    for row in fixtures::BOREL7 {
        let i = p.index_of(if row.subset.is_empty() { "0" } else { row.name }).unwrap();
        assert_eq!(p.classes[i].z, row.z.iter().map(|&x| q(x)).collect::<Vec<Q>>(), "{}", row.name);
    }
    let simple = |k: usize| {
        let mut v = vec![0; 4];
        v[k - 1] = 1;
        v
    };
    for i in 0..16 {
        for j in 0..16 {
            if i == j {
                continue;
            }
            let (s1, s2) = (subset(i), subset(j));
            assert_eq!(p.leq(i, j), s1.is_subset(&s2), "{} {}", p.classes[i].name, p.classes[j].name);
            let orth = s1.is_subset(&s2)
                && s1.iter().all(|&a| s2.difference(&s1).all(|&b| rs.strongly_orthogonal(&simple(a), &simple(b))));
            assert_eq!(p.polarized_by_orthogonality(i, j), orth, "{} {}", p.classes[i].name, p.classes[j].name);
        }
    }
    let h = HodgeNumbers::new(7, vec![1; 8]).unwrap();
    let ds = enumerate_diamonds(&h, &budget()).unwrap();
    let fam = Family::Borel7;
    let named: Vec<BTreeSet<String>> = pi_fibers(&h, &budget())
        .unwrap()
        .into_iter()
        .filter(|g| g.len() > 1)
        .map(|g| g.into_iter().map(|i| fam.name_of(&ds[i]).unwrap()).collect())
        .collect();
    let want = |a: &str, b: &str| -> BTreeSet<String> { [a.to_string(), b.to_string()].into() };
    assert!(named.contains(&want("{1}", "{3}")));
    assert!(named.contains(&want("{1,2}", "{2,3}")));
    pass("16 classes, Z table exact, fibers {1}~{3} and {1,2}~{2,3}")
}

fn c7_g2() -> Outcome {
    let counts: Vec<usize> = [fixtures::g2_a(), fixtures::g2_b(), fixtures::g2_c()]
        .iter()
        .map(|fx| {
            let e: Vec<i64> = fx.grading.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
            let p = psi("G2", &e);
            for row in &fx.classes {
                let i = p.index_of(row.name).unwrap();
                assert_eq!(p.classes[i].z, row.z, "{} {}", fx.preset, row.name);
            }
            p.classes.len()
        })
        .collect();
    assert_eq!(counts, [4, 2, 4]);

    let nontrivial = |p: &Psi| -> Vec<usize> { (0..p.classes.len()).filter(|&i| !p.classes[i].is_trivial()).collect() };
    let a = psi("G2", &[1, 1]);
    let none =
        nontrivial(&a).iter().all(|&i| nontrivial(&a).iter().all(|&j| !a.polarized_by_orthogonality(i, j) || i == j));
    let b = psi("G2", &[1, 0]);
    let chain = b.polarized_relation().named_edges() == [("0".to_string(), "I".to_string())].into();
    let c = psi("G2", &[0, 1]);
    let [i1, i2, i3] = ["I", "II", "III"].map(|n| c.index_of(n).unwrap());
    assert!(c.leq(i1, i3) && c.leq(i2, i3) && !c.leq(i1, i2) && !c.leq(i2, i1));
    let pair = c.polarized_by_orthogonality(i1, i3) && c.polarized_by_orthogonality(i2, i3);
    assert!(none && chain && pair);
    pass("counts 4/2/4; E=S^2: I,II < III polarized; E=S^1: chain; E=S^1+S^2: no relation among nontrivial classes")
}

fn c8_d4() -> Outcome {
    let fx = fixtures::d4_242();
    let p = psi("D4", &[0, 1, 0, 0]);
    assert_eq!(p.classes.len(), 7);
    for row in &fx.classes {
        let i = p.index_of(row.name).unwrap();
        assert_eq!(p.classes[i].z, row.z, "{}", row.name);
    }
    let zs: BTreeSet<Vec<Q>> = p.classes.iter().map(|c| c.z.clone()).collect();
    assert!(zs.contains(&vec![q(0), q(2), q(0), q(-2)]) && zs.contains(&vec![q(0), q(2), q(-2), q(0)]));
    pass("7 classes, split pair present")
}

fn c9_capacities() -> Outcome {
    let f4 = psi("F4", &[1, 0, 0, 0]);
    let full = full_classes(&f4);
    assert_eq!(full.len(), 1);
    assert_eq!(capacity(&f4, full[0]), 7);
    let rs = &f4.spec.rs;
    let simple: BTreeSet<Vec<i64>> = f4.classes[full[0]].representative.simple_roots(rs).into_iter().cloned().collect();
    assert_eq!(simple, [vec![1, 0, 0, 0], vec![1, 3, 4, 2]].into());
    assert!(!rs.is_root(&[1, 3, 4, 1]));

    let g = psi("G2", &[1, 1]);
    assert!((0..g.classes.len()).filter(|&i| !g.classes[i].is_trivial()).all(|i| capacity(&g, i) == 1));

    let c3 = compute_psi(&DomainSpec::new("C3", fixtures::c3_cy_grading()).unwrap(), &budget()).unwrap();
    let got = capacity_table(&c3);
    let mut off = Vec::new();
    for &(name, want) in fixtures::CY2_CAPACITIES {
        if got[name] != want {
            off.push(format!("{name}: computed {} vs published {want}", got[name]));
        }
    }
    // l~^{-1,-1} of I2 is Sym^2 of a 2-plane: three pairwise commuting roots
    assert_eq!(off, ["I2: computed 3 vs published 2"]);
    Outcome {
        pass: false,
        detail: format!(
            "F4 full class 7 (its second simple root is a1+3a2+4a3+2a4; a1+3a2+4a3+a4 is not a root); G2 E=S^1+S^2 all 1; C3 E=S^1+S^3 {}",
            off.join(", ")
        ),
    }
}

fn c10_cubes() -> Outcome {
    let a = psi("G2", &[1, 1]);
    let pa = secondary_poset(&CubeContext::from_psi(&a), 2, None, &budget()).unwrap();
    assert_eq!(pa.cubes.len(), 4);
    assert_eq!(pa.hasse, [(0, 1), (0, 2), (0, 3)]);

    let c = psi("G2", &[0, 1]);
    let ctx = CubeContext::from_psi(&c);
    let two: BTreeSet<String> =
        enumerate_admissible(&ctx, 2, &budget()).unwrap().iter().map(|x| x.label(&ctx.names)).collect();
    for l in ["<I|III|I>", "<I|III|II>", "<II|III|II>"] {
        assert!(two.contains(l), "{l}");
    }
    let strong = secondary_poset(&ctx, 2, Some(&g2model::strong_filter), &budget()).unwrap();
    let removed: Vec<String> = strong.removed.iter().map(|x| x.label(&strong.names)).collect();
    assert_eq!(removed, ["<I|III|I>"]);
    let kept: BTreeSet<String> = strong.labels().into_iter().collect();
    assert!(kept.contains("<II|III|II>"));
    for i in 0..strong.cubes.len() {
        for j in 0..strong.cubes.len() {
            if cube_leq(&strong.cubes[i], &strong.cubes[j]) && cube_leq(&strong.cubes[j], &strong.cubes[i]) {
                assert_eq!(i, j);
            }
        }
    }

    let w = &fixtures::STRONG_WITNESSES[0];
    let defect = g2model::verify_witness(
        CubicClass::II,
        CubicClass::II,
        &BinaryCubic::from_fracs(w.v),
        &BinaryCubic::from_fracs(w.w),
    )
    .expect("witness for <II|III|II>");
    assert_eq!(defect, Poly(vec![q(0), q(12), q(12), q(4)]));

    let printed: BTreeSet<&str> = fixtures::G2_C_STRONG_DIAGRAM.iter().copied().collect();
    let extra: Vec<&String> = kept.iter().filter(|l| l.contains('|') && !printed.contains(l.as_str())).collect();
    assert_eq!(extra, [&"<III|III|III>".to_string()]);
    pass("fan of 4; strong filter drops <I|III|I>, keeps <II|III|II> with witness verified; flagged: <III|III|III> is admissible and kept but absent from the printed diagram")
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    qf(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_g(rng: &mut ChaCha8Rng) -> GL2Element {
    loop {
        let g = GL2Element::new(random_q(rng), random_q(rng), random_q(rng), random_q(rng));
        if g.det() > q(0) {
            return g;
        }
    }
}

fn c11_g2model() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6732);
    let classes = [CubicClass::Zero, CubicClass::I, CubicClass::II, CubicClass::III];
    let samples = 1200;
    for k in 0..samples {
        let v = if k % 2 == 0 {
            BinaryCubic::new(random_q(&mut rng), random_q(&mut rng), random_q(&mut rng), random_q(&mut rng))
        } else {
            let h = random_g(&mut rng);
            act(&h, &classes[k % 4].generator()).unwrap()
        };
        let g = random_g(&mut rng);
        assert_eq!(classify(&act(&g, &v).unwrap()), classify(&v), "g={g:?} v={v:?}");
    }
    assert!(on_closure_surface(&CubicClass::I.generator()));
    assert!(on_closure_surface(&CubicClass::II.generator()));
    let defect = pencil_defect(
        &BinaryCubic::from_ints([0, 0, 1, 0]),
        &BinaryCubic::from_fracs([(-1, 3), (0, 1), (1, 1), (2, 3)]),
    );
    let closed = Poly(vec![q(0), q(12), q(12), q(4)]);
    assert_eq!(defect, closed);
    assert_eq!(defect.positive_roots(), 0);
    assert_eq!(defect.sign_on_positive_ray(), Some(std::cmp::Ordering::Greater));
    pass(format!(
        "{samples} invariance samples; both generators on the surface; 4(1+r)^3-4 has no positive root and is positive"
    ))
}

fn c12_mirror() -> Outcome {
    let data = IntersectionData::mirror_cy();
    let n0 = build_nj(&data, 0).unwrap();
    let n1 = build_nj(&data, 1).unwrap();
    assert_eq!(n1, fixtures::printed_n1());
    let diff = mirror::matrix_diff(&n0, &fixtures::printed_n0());
    assert_eq!(diff, [(5, 2, qf(-3, 2), qf(3, 2))]);

    let h = HodgeNumbers::new(3, vec![1, 2, 2, 1]).unwrap();
    let sum = mat_add(&n0, &n1);
    for (m, (name, prof, class)) in [&n0, &n1, &sum].into_iter().zip(fixtures::MIRROR_PROFILES) {
        let p = rank_profile_matrix(m).unwrap();
        assert_eq!(&p, prof, "{name}");
        assert_eq!(classify_type(&p, &h, &budget()).unwrap(), *class, "{name}");
    }
    assert_eq!(classify_type(&[1, 0, 0], &h, &budget()).unwrap(), "I1");
    assert!(is_zero_matrix(&commutator(&n0, &n1)));
    assert!(!is_zero_matrix(&commutator(&fixtures::printed_n0(), &fixtures::printed_n1())));

    for m in [&n0, &n1] {
        let r = analyze_pairings(std::slice::from_ref(m), true);
        let qm = r.witness.expect("single-matrix pairing");
        assert!(is_zero_matrix(&mat_add(&mat_mul(&transpose(m), &qm), &mat_mul(&qm, m))));
    }
    let joint = analyze_pairings(&[n0.clone(), n1.clone()], true);
    assert!(joint.witness.is_none());
    let kernel = joint.common_kernel.expect("kernel vector");
    for b in mirror::invariant_pairings(&[n0, n1], true) {
        assert!(b.iter().all(|row| row.iter().zip(&kernel).map(|(x, y)| x * y).sum::<Q>() == q(0)));
    }
    Outcome {
        pass: false,
        detail: format!(
            "N1 matches; N0 differs only at row 5 col 2 (rebuilt -3/2, printed 3/2); profiles, types, I1 and [N0,N1]=0 match; \
             each N admits a nondegenerate skew Q alone, but the {}-dim space of jointly invariant skew forms is degenerate (common kernel found)",
            joint.solution_dim
        ),
    }
}

fn c13_roundtrip() -> Outcome {
    let mut n = 0;
    for h in [families(), vec![HodgeNumbers::new(7, vec![1; 8]).unwrap()]].concat() {
        for d in enumerate_diamonds(&h, &budget()).unwrap() {
            assert_eq!(reconstruct(&primitive_decomposition(&d).unwrap()), d);
            n += 1;
        }
    }
    assert!(n >= 60);
    pass(format!("{n} diamonds"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 13] = [
        ("diamond counts", c1_counts),
        ("polarized relation sets", c2_polarized_closed_forms),
        ("non-transitivity witness", c3_transitivity),
        ("nilpotent closure order", c4_closure),
        ("linear order for curves and K3", c5_total_order),
        ("torus case C4", c6_torus),
        ("G2 domains", c7_g2),
        ("D4 (2,4,2)", c8_d4),
        ("capacities", c9_capacities),
        ("cube suite", c10_cubes),
        ("g2model properties", c11_g2model),
        ("mirror suite", c12_mirror),
        ("round trip", c13_roundtrip),
    ];
    let mut passed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        passed += usize::from(o.pass);
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!(
        "{passed}/{} criteria pass; every FAIL above is a pinned disagreement with a published value",
        criteria.len()
    );
}
