//! Command-line front end. `run` is the whole program minus process exit.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::budget::Budget;
use crate::cubes::{capacity, secondary_poset, CubeContext, StrongFilter};
use crate::diamonds::{check_diamond, primitive_decomposition, rank_profile, reconstruct, HodgeNumbers};
use crate::error::{Error, Result};
use crate::fixtures::{self, Family};
use crate::g2model::{self, BinaryCubic, CubicClass};
use crate::mirror::{self, IntersectionData};
use crate::nilpotent::{closure_is_validated, closure_relation, diamond_to_diagram, FormType};
use crate::polarized::{named_classes, polarized_digraph, transitivity_report, RelationSet};
use crate::psid::{compute_psi, DomainSpec, Psi};
use crate::rational::{fmt_q_short, parse_q_list, Q};
use crate::SCHEMA_VERSION;

#[derive(Parser, Debug)]
#[command(name = "hodgeposet", version, about = "Classification posets for degenerations of Hodge structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the Hodge diamonds of a period domain.
    Diamonds(DomainArgs),
    /// Emit a relation digraph.
    Poset {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, value_enum, default_value_t = Relation::Polarized)]
        relation: Relation,
    },
    /// Class table of a root-data domain.
    Psi(DomainArgs),
    /// Admissible cubes and the secondary poset.
    Cubes {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        /// Source of strong-admissibility verdicts; only `g2model` exists.
        #[arg(long)]
        strong_filter: Option<String>,
    },
    /// The binary-cubic model of G2.
    G2 {
        #[command(subcommand)]
        action: G2Action,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
    /// Monodromy matrices from intersection numbers.
    Mirror {
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// File of lines `a b c value`; defaults to the bundled example.
        #[arg(long)]
        triple: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check every bundled table; exits 5 on a mismatch.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum G2Action {
    /// Strong admissibility of a 2-cube with edge labels `t1,t2`.
    Strong {
        #[arg(long)]
        pair: String,
    },
    /// Orbit type of a cubic.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct DomainArgs {
    /// Named example: curves-g, k3-m, horikawa-m, cy-m, sp8-borel, d4-242,
    /// g2-a, g2-b, g2-c, f4-adjoint, c3-cy.
    #[arg(long)]
    pub preset: Option<String>,
    /// Value of g or m for the parametrized presets.
    #[arg(long)]
    pub param: Option<u64>,
    /// Hodge numbers, comma separated.
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub weight: Option<u32>,
    /// Root system such as G2, C4, D4.
    #[arg(long)]
    pub root: Option<String>,
    /// Grading coordinates in the S-basis, e.g. `0,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub grading: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Polarized,
    Nilpotent,
    Leq,
}

#[derive(Debug, Clone)]
pub enum DomainConfig {
    Period { name: String, h: HodgeNumbers },
    RootData { name: String, root: String, grading: Vec<Q> },
}

impl DomainConfig {
    pub fn name(&self) -> &str {
        match self {
            DomainConfig::Period { name, .. } | DomainConfig::RootData { name, .. } => name,
        }
    }
}

fn preset(name: &str, param: Option<u64>) -> Result<DomainConfig> {
    let need = |default: u64| param.unwrap_or(default).max(1);
    let period = |w: u32, h: Vec<u64>| -> Result<DomainConfig> {
        Ok(DomainConfig::Period { name: name.to_string(), h: HodgeNumbers::new(w, h)? })
    };
    let root =
        |r: &str, g: Vec<Q>| Ok(DomainConfig::RootData { name: name.to_string(), root: r.to_string(), grading: g });
    match name {
        "curves-g" => {
            let g = need(2);
            period(1, vec![g, g])
        }
        "k3-m" => {
            let m = need(20);
            period(2, vec![1, m, 1])
        }
        "horikawa-m" => {
            let m = param.unwrap_or(4);
            if m < 4 {
                return Err(Error::Config("horikawa-m needs m >= 4".into()));
            }
            period(2, vec![2, m, 2])
        }
        "cy-m" => {
            let m = need(2);
            period(3, vec![1, m, m, 1])
        }
        "sp8-borel" => root("C4", fixtures::sp8_borel().grading),
        "d4-242" => root("D4", fixtures::d4_242().grading),
        "g2-a" => root("G2", fixtures::g2_a().grading),
        "g2-b" => root("G2", fixtures::g2_b().grading),
        "g2-c" => root("G2", fixtures::g2_c().grading),
        "f4-adjoint" => root("F4", vec![Q::from_integer(1.into()), Q::default(), Q::default(), Q::default()]),
        "c3-cy" => root("C3", fixtures::c3_cy_grading()),
        other => Err(Error::Config(format!("unknown preset {other:?}"))),
    }
}

impl DomainArgs {
    pub fn config(&self) -> Result<DomainConfig> {
        if let Some(p) = &self.preset {
            return preset(p, self.param);
        }
        match (&self.h, &self.root) {
            (Some(h), None) => {
                let hs: Vec<u64> = h
                    .split(',')
                    .map(|s| s.trim().parse::<u64>().map_err(|_| Error::Config(format!("bad Hodge number {s:?}"))))
                    .collect::<Result<_>>()?;
                let w = self.weight.unwrap_or(hs.len().saturating_sub(1) as u32);
                Ok(DomainConfig::Period { name: format!("h={h}"), h: HodgeNumbers::new(w, hs)? })
            }
            (None, Some(r)) => {
                let g = self.grading.as_deref().ok_or_else(|| Error::Config("--root needs --grading".into()))?;
                Ok(DomainConfig::RootData { name: format!("{r}[{g}]"), root: r.clone(), grading: parse_q_list(g)? })
            }
            _ => Err(Error::Config("give exactly one of --preset, --h or --root".into())),
        }
    }
}

fn with_schema(mut v: serde_json::Value) -> serde_json::Value {
    if let Some(obj) = v.as_object_mut() {
        obj.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn emit_json(out: &mut dyn Write, v: serde_json::Value) -> Result<()> {
    let s = serde_json::to_string_pretty(&with_schema(v)).map_err(|e| Error::Invariant(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Error::OutputClosed;
    }
    Error::Invariant(format!("write failed: {e}"))
}

fn entries_text(d: &crate::diamonds::HodgeDiamond) -> String {
    d.entries.iter().map(|(&(p, q), v)| format!("({p},{q}):{v}")).collect::<Vec<_>>().join(" ")
}

fn psi_of(cfg: &DomainConfig, budget: &Budget) -> Result<Psi> {
    match cfg {
        DomainConfig::RootData { root, grading, .. } => compute_psi(&DomainSpec::new(root, grading.clone())?, budget),
        DomainConfig::Period { .. } => {
            Err(Error::Unsupported("this command needs root data (--root/--grading)".into()))
        }
    }
}

fn cmd_diamonds(args: &DomainArgs, budget: &Budget, out: &mut dyn Write) -> Result<()> {
    let cfg = args.config()?;
    let DomainConfig::Period { h, .. } = &cfg else {
        return Err(Error::Unsupported("diamonds needs Hodge numbers".into()));
    };
    let f = FormType::for_weight(h.weight);
    let mut rows = Vec::new();
    for (i, (name, d)) in named_classes(h, budget)?.into_iter().enumerate() {
        let y = diamond_to_diagram(&d, f)?;
        let rp = rank_profile(&d)?;
        rows.push((i, name, d, y, rp));
    }
    if args.format == Format::Json {
        let classes: Vec<_> = rows
            .iter()
            .map(|(i, name, d, y, rp)| json!({"index": i, "name": name, "diamond": d.to_json(), "diagram": y.to_string(), "rankProfile": rp}))
            .collect();
        return emit_json(out, json!({"domain": cfg.name(), "weight": h.weight, "h": h.h, "classes": classes}));
    }
    writeln!(out, "# {} weight {} h={:?}: {} classes", cfg.name(), h.weight, h.h, rows.len()).map_err(io_err)?;
    for (i, name, d, y, rp) in &rows {
        writeln!(out, "{i}\t{name}\t{}\t{y}\t{rp:?}", entries_text(d)).map_err(io_err)?;
    }
    Ok(())
}

fn emit_relation(
    out: &mut dyn Write,
    r: &RelationSet,
    key: &str,
    fmt: Format,
    name: &str,
    dashed: &[(usize, usize)],
    extra: serde_json::Value,
) -> Result<()> {
    match fmt {
        Format::Dot => write!(out, "{}", r.to_dot(name, dashed)).map_err(io_err),
        Format::Json => {
            let mut v = r.to_json(key);
            v["generating"] = json!(r.generating().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>());
            if let (Some(o), Some(e)) = (v.as_object_mut(), extra.as_object()) {
                for (k, x) in e {
                    o.insert(k.clone(), x.clone());
                }
            }
            emit_json(out, v)
        }
        Format::Text => {
            writeln!(out, "# {name}: {key}, {} edges", r.edges.len()).map_err(io_err)?;
            for (a, b) in r.generating() {
                writeln!(out, "{} -> {}", r.classes[a], r.classes[b]).map_err(io_err)?;
            }
            for (k, x) in extra.as_object().into_iter().flatten() {
                writeln!(out, "# {k}: {x}").map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn cmd_poset(args: &DomainArgs, relation: Relation, budget: &Budget, out: &mut dyn Write) -> Result<()> {
    let cfg = args.config()?;
    match (&cfg, relation) {
        (DomainConfig::Period { h, .. }, Relation::Polarized) => {
            let r = polarized_digraph(h, budget)?;
            let witnesses: Vec<[String; 3]> = transitivity_report(&r)
                .into_iter()
                .map(|(a, b, c)| [r.classes[a].clone(), r.classes[b].clone(), r.classes[c].clone()])
                .collect();
            let dashed = closure_relation(h, budget)?.edges.into_iter().collect::<Vec<_>>();
            emit_relation(out, &r, "polarized", args.format, cfg.name(), &dashed, json!({"nonTransitive": witnesses}))
        }
        (DomainConfig::Period { h, .. }, Relation::Nilpotent) => {
            let r = closure_relation(h, budget)?;
            let flag = if closure_is_validated(h) { "validated" } else { "heuristic" };
            emit_relation(out, &r, "closure", args.format, cfg.name(), &[], json!({"criterion": flag}))
        }
        (DomainConfig::RootData { .. }, Relation::Leq) => {
            let psi = psi_of(&cfg, budget)?;
            emit_relation(out, &psi.leq_relation(), "leq", args.format, cfg.name(), &[], json!({}))
        }
        (DomainConfig::RootData { .. }, Relation::Polarized) => {
            let psi = psi_of(&cfg, budget)?;
            let crit = if psi.spec.is_torus_case() { "exact" } else { "sufficient" };
            let dashed: Vec<_> = psi.leq_relation().edges.into_iter().collect();
            emit_relation(
                out,
                &psi.polarized_relation(),
                "polarized",
                args.format,
                cfg.name(),
                &dashed,
                json!({"criterion": crit}),
            )
        }
        (DomainConfig::Period { .. }, Relation::Leq) => {
            Err(Error::Unsupported("the relation leq is computed from root data only".into()))
        }
        (DomainConfig::RootData { .. }, Relation::Nilpotent) => {
            Err(Error::Unsupported("the nilpotent closure order is computed from Hodge numbers only".into()))
        }
    }
}

fn cmd_psi(args: &DomainArgs, budget: &Budget, out: &mut dyn Write) -> Result<()> {
    let cfg = args.config()?;
    let psi = psi_of(&cfg, budget)?;
    if args.format == Format::Json {
        let mut v = psi.to_json();
        v["capacities"] = json!((0..psi.classes.len()).map(|i| capacity(&psi, i)).collect::<Vec<_>>());
        return emit_json(out, v);
    }
    let rs = &psi.spec.rs;
    writeln!(
        out,
        "# {} E=({}) |W0|={} classes={}",
        rs.name,
        psi.spec.grading_string(),
        psi.w0.len(),
        psi.classes.len()
    )
    .map_err(io_err)?;
    for (i, c) in psi.classes.iter().enumerate() {
        let s: Vec<String> = c.representative.simple_roots(rs).iter().map(|r| format!("{r:?}")).collect();
        let z: Vec<String> = c.z.iter().map(fmt_q_short).collect();
        writeln!(out, "{i}\t{}\tS'=[{}]\tZ=({})\tcap={}", c.name, s.join(" "), z.join(","), capacity(&psi, i))
            .map_err(io_err)?;
    }
    let show = |r: &RelationSet| {
        r.generating().iter().map(|&(a, b)| format!("{}<{}", r.classes[a], r.classes[b])).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "leq: {}", show(&psi.leq_relation())).map_err(io_err)?;
    let crit = if psi.spec.is_torus_case() { "exact" } else { "sufficient" };
    writeln!(out, "polarized ({crit}): {}", show(&psi.polarized_relation())).map_err(io_err)?;
    Ok(())
}

fn cmd_cubes(
    args: &DomainArgs,
    max_n: usize,
    strong: Option<&str>,
    budget: &Budget,
    out: &mut dyn Write,
) -> Result<()> {
    let cfg = args.config()?;
    let psi = psi_of(&cfg, budget)?;
    let ctx = CubeContext::from_psi(&psi);
    let filter: Option<&StrongFilter> = match strong {
        None => None,
        Some("g2model") => {
            if psi.spec.rs.name != "G2" || psi.spec.e != fixtures::g2_c().grading {
                return Err(Error::Unsupported("the g2model filter applies to G2 with grading 0,1 only".into()));
            }
            Some(&g2model::strong_filter)
        }
        Some(other) => return Err(Error::Unsupported(format!("unknown strong filter {other:?}"))),
    };
    let poset = secondary_poset(&ctx, max_n, filter, budget)?;
    match args.format {
        Format::Json => emit_json(out, poset.to_json()),
        Format::Dot => write!(out, "{}", poset.to_dot()).map_err(io_err),
        Format::Text => {
            writeln!(out, "# {} cubes up to n={max_n}: {}", cfg.name(), poset.cubes.len()).map_err(io_err)?;
            let labels = poset.labels();
            for (c, l) in poset.cubes.iter().zip(&labels) {
                writeln!(out, "n={}\t{l}", c.n).map_err(io_err)?;
            }
            for (a, b) in &poset.hasse {
                writeln!(out, "{} -> {}", labels[*a], labels[*b]).map_err(io_err)?;
            }
            for c in &poset.removed {
                writeln!(out, "# removed by strong filter: {}", c.label(&poset.names)).map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn cmd_g2(action: &G2Action, fmt: Format, out: &mut dyn Write) -> Result<()> {
    match action {
        G2Action::Strong { pair } => {
            let (a, b) = pair.split_once(',').ok_or_else(|| Error::Config("--pair expects t1,t2".into()))?;
            let v = g2model::strong_2cube_verdict(CubicClass::parse(a)?, CubicClass::parse(b)?)?;
            if fmt == Format::Json {
                return emit_json(out, v.to_json());
            }
            writeln!(out, "{}", v.holds).map_err(io_err)?;
            if let (Some(x), Some(y)) = (&v.v, &v.w) {
                writeln!(out, "v = {x}\nw = {y}").map_err(io_err)?;
            }
            if let Some(p) = &v.defect {
                writeln!(out, "defect(r v + w) = {p}").map_err(io_err)?;
            }
            writeln!(out, "{}", v.reason).map_err(io_err)
        }
        G2Action::Classify { cubic } => {
            let v = BinaryCubic::parse(cubic)?;
            let c = g2model::classify(&v);
            if fmt == Format::Json {
                return emit_json(
                    out,
                    json!({"cubic": v.a.iter().map(crate::rational::fmt_q).collect::<Vec<_>>(), "class": c.name(),
                           "onClosureSurface": g2model::on_closure_surface(&v)}),
                );
            }
            writeln!(out, "{}", c.name()).map_err(io_err)
        }
    }
}

fn cmd_mirror(
    r: usize,
    triple: Option<&std::path::Path>,
    fmt: Format,
    budget: &Budget,
    out: &mut dyn Write,
) -> Result<()> {
    let data = match triple {
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| Error::Config(format!("cannot read {}: {e}", p.display())))?;
            IntersectionData::parse(r, &text)?
        }
        None => IntersectionData::parse(r, fixtures::CY_TRIPLE_FILE)?,
    };
    let n = r - 1;
    let h = HodgeNumbers::new(3, vec![1, n as u64, n as u64, 1])?;
    let mats: Vec<Matrix> = (0..n).map(|j| mirror::build_nj(&data, j)).collect::<Result<_>>()?;
    let mut named: Vec<(String, Matrix)> = mats.iter().enumerate().map(|(j, m)| (format!("N{j}"), m.clone())).collect();
    if n > 1 {
        let sum = mats.iter().skip(1).fold(mats[0].clone(), |acc, m| crate::rational::mat_add(&acc, m));
        named.push(((0..n).map(|j| format!("N{j}")).collect::<Vec<_>>().join("+"), sum));
    }
    let mut rows = Vec::new();
    for (name, m) in &named {
        let prof = mirror::rank_profile_matrix(m)?;
        let class = mirror::classify_type(&prof, &h, budget)?;
        rows.push((name.clone(), m.clone(), prof, class));
    }
    let commute =
        (0..n).all(|a| (0..n).all(|b| crate::rational::is_zero_matrix(&mirror::commutator(&mats[a], &mats[b]))));
    if fmt == Format::Json {
        let items: Vec<_> = rows
            .iter()
            .map(
                |(name, m, p, c)| json!({"name": name, "matrix": mirror::matrix_json(m), "rankProfile": p, "class": c}),
            )
            .collect();
        return emit_json(out, json!({"r": r, "matrices": items, "commute": commute}));
    }
    for (name, m, p, c) in &rows {
        writeln!(out, "{name} rank profile {p:?} class {c}\n{}", mirror::matrix_text(m)).map_err(io_err)?;
    }
    writeln!(out, "pairwise commute: {commute}").map_err(io_err)
}

use crate::rational::Matrix;

/// One row of `verify`.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), ok, detail: detail.into() }
}

/// Compares the computation against every bundled table.
pub fn verify_checks(budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (w, h) in [(1, vec![2, 2]), (2, vec![1, 3, 1]), (2, vec![2, 4, 2]), (3, vec![1, 2, 2, 1]), (7, vec![1; 8])] {
        let h = HodgeNumbers::new(w, h)?;
        let fam = Family::detect(&h).expect("bundled families are detected");
        let got = named_classes(&h, budget)?;
        let mut want: Vec<_> = fam.classes();
        want.sort_by_key(|a| a.1.entry_vector());
        let same = got == want && got.iter().all(|(_, d)| check_diamond(d, &h));
        let rt = got.iter().all(|(_, d)| primitive_decomposition(d).map(|p| reconstruct(&p) == *d).unwrap_or(false));
        out.push(check(&format!("diamonds {:?}", h.h), same && rt, format!("{} classes", got.len())));
        if matches!(fam, Family::Borel7) {
            continue;
        }
        let pol = polarized_digraph(&h, budget)?;
        let clo = closure_relation(&h, budget)?;
        let mut bad = Vec::new();
        for a in &pol.classes {
            for b in &pol.classes {
                let (i, j) = (pol.index_of(a).unwrap(), pol.index_of(b).unwrap());
                if fam.polarized_lt(a, b) != Some(pol.holds(i, j)) {
                    bad.push(format!("pol {a},{b}"));
                }
                if fam.closure_lt(a, b) != Some(clo.holds(i, j)) {
                    bad.push(format!("closure {a},{b}"));
                }
            }
        }
        out.push(check(&format!("relations {:?}", h.h), bad.is_empty(), bad.join(" ")));
    }
    for fx in fixtures::root_fixtures() {
        let psi = compute_psi(&DomainSpec::new(fx.root, fx.grading.clone())?, budget)?;
        let mut bad = Vec::new();
        if psi.classes.len() != fx.classes.len() + 1 {
            bad.push(format!("{} classes", psi.classes.len()));
        }
        for row in &fx.classes {
            match psi.index_of(row.name) {
                Some(i) if psi.classes[i].z == row.z => {}
                _ => bad.push(row.name.to_string()),
            }
        }
        out.push(check(&format!("psi {}", fx.preset), bad.is_empty(), bad.join(" ")));
    }
    let d = IntersectionData::mirror_cy();
    let n0 = mirror::build_nj(&d, 0)?;
    let n1 = mirror::build_nj(&d, 1)?;
    out.push(check("mirror N1 printed", n1 == fixtures::printed_n1(), ""));
    let diff = mirror::matrix_diff(&n0, &fixtures::printed_n0());
    out.push(check(
        "mirror N0 printed up to the known entry",
        diff.len() == 1 && (diff[0].0, diff[0].1) == (5, 2),
        format!("{} differing entries", diff.len()),
    ));
    for w in fixtures::STRONG_WITNESSES {
        let ok = g2model::verify_witness(
            CubicClass::parse(w.pair.0)?,
            CubicClass::parse(w.pair.1)?,
            &BinaryCubic::from_fracs(w.v),
            &BinaryCubic::from_fracs(w.w),
        )
        .is_some();
        out.push(check(&format!("g2 witness {},{}", w.pair.0, w.pair.1), ok, ""));
    }
    Ok(out)
}

fn cmd_verify(budget: &Budget, out: &mut dyn Write) -> Result<()> {
    let checks = verify_checks(budget)?;
    for c in &checks {
        writeln!(
            out,
            "{} {}{}",
            if c.ok { "PASS" } else { "FAIL" },
            c.name,
            if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }
        )
        .map_err(io_err)?;
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::FixtureMismatch(failed.join(", ")))
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let budget = Budget::from_env()?;
    match &cli.command {
        Command::Diamonds(a) => cmd_diamonds(a, &budget, out),
        Command::Poset { domain, relation } => cmd_poset(domain, *relation, &budget, out),
        Command::Psi(a) => cmd_psi(a, &budget, out),
        Command::Cubes { domain, max_n, strong_filter } => {
            cmd_cubes(domain, *max_n, strong_filter.as_deref(), &budget, out)
        }
        Command::G2 { action, format } => cmd_g2(action, *format, out),
        Command::Mirror { r, triple, format } => cmd_mirror(*r, triple.as_deref(), *format, &budget, out),
        Command::Verify => cmd_verify(&budget, out),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) | Err(Error::OutputClosed) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
