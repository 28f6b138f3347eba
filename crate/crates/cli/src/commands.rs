use clap::ValueEnum;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use superu_core::cohomology::{
    e1_page_dims, ext_dims_bar, gr_cohomology_series, minimal_resolution, BarMode, BarOptions, CohomologyError,
    Resolution,
};
use superu_core::enveloping::{
    augmentation_filtration, build_uea, gr_algebra, hopf_structure, nilpotency_bound, pbw_filtration, pbw_series,
    EnvelopingError, Filtration, FiniteDimSuperalgebra,
};
use superu_core::linalg::Field;
use superu_core::liesuper::{AxiomStatus, LieSuperAlgebraSpec, Parity};
use superu_core::repcat::{dual, RepCategory, Supermodule};
use superu_core::varieties::{
    complexity_bound, estimate_complexity, property_suite, realize, standard_battery, ComplexityEstimate,
};

use crate::document::AlgebraDocument;
use crate::error::CliError;
use crate::modspec::{field_element, ModuleBuilder, ModuleSpec};
use crate::table::Table;

pub const ENGINE_NAME: &str = "superu";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Basis pairs sampled for the braided-homomorphism law.
pub const HOPF_PAIRS: usize = 200;
pub const HOPF_SEED: u64 = 0x5eed_0001;
/// Associativity is checked on every basis triple up to this dimension, else sampled.
const ASSOC_EXHAUSTIVE_DIM: usize = 40;
const ASSOC_SAMPLES: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Resolution,
    Bar,
    Both,
}

impl Oracle {
    fn name(self) -> &'static str {
        match self {
            Oracle::Resolution => "resolution",
            Oracle::Bar => "bar",
            Oracle::Both => "both",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub depth: usize,
    pub max_degree: usize,
    pub oracle: Oracle,
    pub field_ext: u32,
    pub bar_budget: usize,
    pub module: Option<String>,
}

#[derive(Clone, Debug)]
pub enum Command {
    Check,
    Build,
    Gr,
    Simples,
    Resolve,
    Ext,
    Complexity,
    Carlson { degree: usize, coords: Option<String> },
    Realize { classes: Vec<String> },
    Properties,
    E1page,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Build => "build",
            Command::Gr => "gr",
            Command::Simples => "simples",
            Command::Resolve => "resolve",
            Command::Ext => "ext",
            Command::Complexity => "complexity",
            Command::Carlson { .. } => "carlson",
            Command::Realize { .. } => "realize",
            Command::Properties => "properties",
            Command::E1page => "e1page",
        }
    }
}

/// Table for stdout, the command-specific JSON result, and the failure (if any) that
/// decides the exit code after both are written.
pub struct Report {
    pub table: String,
    pub result: Value,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(table: String, result: Value) -> Report {
        Report { table, result, failure: None }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Everything that determines the output of a run. No timestamps or paths.
pub fn manifest(command: &Command, input_sha256: Option<&str>, opts: &Options) -> Value {
    let mut params = json!({
        "depth": opts.depth,
        "max_degree": opts.max_degree,
        "oracle": opts.oracle.name(),
        "field_ext": opts.field_ext,
        "bar_budget": opts.bar_budget,
        "module": opts.module,
        "hopf_pairs": HOPF_PAIRS,
        "hopf_seed": HOPF_SEED,
    });
    match command {
        Command::Carlson { degree, coords } => {
            params["degree"] = json!(degree);
            params["coords"] = json!(coords);
        }
        Command::Realize { classes } => params["classes"] = json!(classes),
        _ => {}
    }
    json!({
        "command": command.name(),
        "input_sha256": input_sha256,
        "engine": { "name": ENGINE_NAME, "version": ENGINE_VERSION },
        "parameters": params,
        "outputs": ["table", "result"],
    })
}

pub fn load_spec(text: &str) -> Result<LieSuperAlgebraSpec, CliError> {
    let doc = AlgebraDocument::parse(text).map_err(|e| CliError::input(e.to_string()))?;
    doc.to_spec().map_err(|e| CliError::input(e.to_string()))
}

pub fn run(command: &Command, spec: &LieSuperAlgebraSpec, opts: &Options) -> Result<Report, CliError> {
    if opts.field_ext == 0 {
        return Err(CliError::input("--field-ext must be at least 1"));
    }
    if matches!(command, Command::Check) {
        return Ok(check(spec));
    }
    let alg = algebra(spec, opts)?;
    match command {
        Command::Check => unreachable!(),
        Command::Build => build(spec, &alg),
        Command::Gr => gr(spec, &alg),
        Command::Simples => simples(&alg),
        Command::Resolve => resolve(&alg, opts),
        Command::Ext => ext(&alg, opts),
        Command::Complexity => complexity(&alg, opts),
        Command::Carlson { degree, coords } => carlson(&alg, opts, *degree, coords.as_deref()),
        Command::Realize { classes } => realize_cmd(&alg, opts, classes),
        Command::Properties => properties(&alg, opts),
        Command::E1page => e1page(spec, &alg, opts),
    }
}

fn algebra(spec: &LieSuperAlgebraSpec, opts: &Options) -> Result<FiniteDimSuperalgebra, CliError> {
    let alg = build_uea(spec)?;
    if opts.field_ext == 1 {
        return Ok(alg);
    }
    let field = Field::with_degree(spec.p(), opts.field_ext)?;
    Ok(alg.extend_scalars(&field))
}

fn category(alg: &FiniteDimSuperalgebra) -> Result<RepCategory, CliError> {
    Ok(RepCategory::new(alg)?)
}

fn module_spec(opts: &Options) -> Result<ModuleSpec, CliError> {
    opts.module
        .as_deref()
        .unwrap_or("trivial")
        .parse()
        .map_err(|e: String| CliError::input(format!("--module: {e}")))
}

fn field_name(f: &Field) -> String {
    if f.is_prime_field() {
        format!("F_{}", f.characteristic())
    } else {
        format!("F_{}^{}", f.characteristic(), f.degree())
    }
}

fn top_label(i: usize, par: Parity) -> String {
    match par {
        Parity::Even => format!("S{i}"),
        Parity::Odd => format!("ΠS{i}"),
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn check(spec: &LieSuperAlgebraSpec) -> Report {
    let report = spec.check_axioms();
    let mut t = Table::new(&["axiom", "status", "witness"]);
    let mut entries = Vec::new();
    for e in &report.entries {
        let status = match e.status {
            AxiomStatus::Pass => "pass",
            AxiomStatus::Fail => "FAIL",
            AxiomStatus::ByConstruction => "by construction",
        };
        let witness = report.witness_names(&e.name).map(|w| w.to_vec());
        t.row([e.name.clone(), status.to_string(), witness.as_ref().map(|w| w.join(", ")).unwrap_or_default()]);
        entries.push(json!({ "name": e.name, "status": status, "witness": witness }));
    }
    let mut table = t.render();
    let all = report.all_pass();
    let failed: Vec<&str> = report.failures().map(|e| e.name.as_str()).collect();
    let failure = if all {
        table.push_str("all axioms pass\n");
        None
    } else {
        table.push_str(&format!("axioms fail: {}\n", failed.join(", ")));
        Some(CliError::input(format!("axioms fail: {}", failed.join(", "))))
    };
    Report {
        table,
        result: json!({ "all_pass": all, "axioms": entries, "failed": failed }),
        failure,
    }
}

fn build(spec: &LieSuperAlgebraSpec, alg: &FiniteDimSuperalgebra) -> Result<Report, CliError> {
    let (m, n, p) = (spec.even_dim(), spec.odd_dim(), spec.p());
    let expected = (p as usize).pow(m as u32) << n;
    let hopf = hopf_structure(alg)?;
    let hr = hopf.check(alg, HOPF_PAIRS, HOPF_SEED);
    let assoc = alg.associativity_witness(ASSOC_EXHAUSTIVE_DIM, ASSOC_SAMPLES, HOPF_SEED);
    let checks: Vec<(&str, bool)> = vec![
        ("dimension p^m 2^n", alg.dim() == expected),
        ("associativity", assoc.is_none()),
        ("unit laws", alg.unit_laws_hold()),
        ("parity is multiplicative", alg.parity_is_multiplicative()),
        ("coassociativity", hr.coassociative),
        ("counit", hr.counit),
        ("antipode", hr.antipode),
        ("braided homomorphism", hr.braided_homomorphism),
        ("super-cocommutativity", hr.super_cocommutative),
    ];
    let mut t = Table::new(&["property", "value"]);
    t.row(["field".to_string(), field_name(alg.field())]);
    t.row(["(m, n)".to_string(), format!("({m}, {n})")]);
    t.row(["dim u(g)".to_string(), alg.dim().to_string()]);
    t.row(["p^m 2^n".to_string(), expected.to_string()]);
    let assoc_scope = if alg.dim() <= ASSOC_EXHAUSTIVE_DIM {
        "all basis triples".to_string()
    } else {
        format!("{ASSOC_SAMPLES} sampled triples")
    };
    t.row(["associativity scope".to_string(), assoc_scope.clone()]);
    t.row(["homomorphism pairs".to_string(), hr.pairs_tested.to_string()]);
    for (name, ok) in &checks {
        t.row([name.to_string(), if *ok { "pass" } else { "FAIL" }.to_string()]);
    }
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let result = json!({
        "field": field_name(alg.field()),
        "m": m,
        "n": n,
        "dim": alg.dim(),
        "expected_dim": expected,
        "associativity_scope": assoc_scope,
        "hopf_pairs_tested": hr.pairs_tested,
        "checks": checks.iter().map(|(k, v)| json!({ "name": k, "pass": v })).collect::<Vec<_>>(),
    });
    let failure = (!failed.is_empty()).then(|| CliError::invariant("Hopf and algebra axioms", failed.join(", ")));
    Ok(Report { table: t.render(), result, failure })
}

fn gr(spec: &LieSuperAlgebraSpec, alg: &FiniteDimSuperalgebra) -> Result<Report, CliError> {
    let (m, n, p) = (spec.even_dim(), spec.odd_dim(), spec.p());
    let bound = nilpotency_bound(m, n, p);
    let series = pbw_series(m, n, p);
    let mut out = String::new();

    let mut summary = Table::new(&["filtration", "finding"]);
    let aug = augmentation_filtration(alg);
    let aug_json = match &aug {
        Ok(f) => {
            let index = f.nilpotency_index().unwrap_or(0);
            summary.row([
                "augmentation".to_string(),
                format!("I^{index} = 0; m(p-1)+n+1 = {bound}; index {} the formula", if index == bound { "matches" } else { "differs from" }),
            ]);
            json!({ "nilpotent": true, "index": index, "formula": bound, "piece_dims": f.dims() })
        }
        Err(EnvelopingError::NotNilpotent { stable_dim, power }) => {
            summary.row([
                "augmentation".to_string(),
                format!("not nilpotent: I^{power} = I^{} has dimension {stable_dim}; formula m(p-1)+n+1 = {bound}", power + 1),
            ]);
            json!({ "nilpotent": false, "stable_power": power, "stable_dim": stable_dim, "formula": bound })
        }
        Err(e) => return Err(e.clone().into()),
    };
    let pbw = pbw_filtration(alg)?;
    summary.row(["pbw degree".to_string(), format!("{} steps, top degree {}", pbw.pieces.len(), pbw.pieces.len() - 1)]);

    let graded = |filt: &Filtration| -> Result<(Vec<usize>, Option<(usize, usize)>), CliError> {
        let g = gr_algebra(alg, filt)?;
        Ok((g.graded_dims(), g.algebra.supercommutativity_witness()))
    };
    let aug_gr = match &aug {
        Ok(f) => Some(graded(f)?),
        Err(_) => None,
    };
    let pbw_gr = graded(&pbw)?;
    let witness_text = |w: &Option<(usize, usize)>| match w {
        None => "supercommutative on all basis pairs".to_string(),
        Some((i, j)) => format!("not supercommutative (basis pair {i}, {j})"),
    };
    if let Some((_, w)) = &aug_gr {
        summary.row(["gr by augmentation".to_string(), witness_text(w)]);
    }
    summary.row(["gr by pbw degree".to_string(), witness_text(&pbw_gr.1)]);
    out.push_str(&summary.render());
    out.push('\n');

    let top = series
        .len()
        .max(pbw_gr.0.len())
        .max(aug_gr.as_ref().map(|g| g.0.len()).unwrap_or(0));
    let mut t = Table::new(&["degree", "series", "gr (augmentation)", "gr (pbw)"]);
    let cell = |v: Option<&usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "0".into());
    for r in 0..top {
        t.row([
            r.to_string(),
            series.get(r).copied().unwrap_or(0).to_string(),
            match &aug_gr {
                Some((d, _)) => cell(d.get(r)),
                None => "-".to_string(),
            },
            cell(pbw_gr.0.get(r)),
        ]);
    }
    out.push_str(&t.render());
    let pad = |v: &[usize]| -> Vec<u64> { (0..top).map(|r| v.get(r).copied().unwrap_or(0) as u64).collect() };
    let target: Vec<u64> = (0..top).map(|r| series.get(r).copied().unwrap_or(0)).collect();
    let result = json!({
        "series": target,
        "augmentation": aug_json,
        "gr_augmentation": aug_gr.as_ref().map(|(d, w)| json!({
            "dims": d,
            "matches_series": pad(d) == target,
            "supercommutative": w.is_none(),
        })),
        "gr_pbw": json!({
            "dims": pbw_gr.0,
            "matches_series": pad(&pbw_gr.0) == target,
            "supercommutative": pbw_gr.1.is_none(),
        }),
    });
    Ok(Report::ok(out, result))
}

fn simples(alg: &FiniteDimSuperalgebra) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let triv = cat.trivial_index();
    let mut t = Table::new(&["index", "dim", "even|odd", "dim P(S)", "trivial"]);
    let mut rows = Vec::new();
    for (i, s) in cat.simples().iter().enumerate() {
        let m = &s.module;
        let is_triv = triv == Some(i);
        t.row([
            i.to_string(),
            m.dim().to_string(),
            format!("{}|{}", m.dim_even(), m.dim_odd()),
            s.projective.dim().to_string(),
            if is_triv { "yes" } else { "" }.to_string(),
        ]);
        rows.push(json!({
            "index": i,
            "dim": m.dim(),
            "dim_even": m.dim_even(),
            "dim_odd": m.dim_odd(),
            "projective_dim": s.projective.dim(),
            "trivial": is_triv,
        }));
    }
    let wedderburn: usize = cat.simples().iter().map(|s| s.module.dim().pow(2)).sum();
    let top = alg.dim() - cat.radical().dim();
    let mut table = t.render();
    table.push_str(&format!(
        "{} simples up to isomorphism and parity shift; dim A = {}, dim rad = {}, sum of (dim S)^2 = {} = dim A/rad\n",
        cat.simples().len(),
        alg.dim(),
        cat.radical().dim(),
        wedderburn
    ));
    let result = json!({
        "field": field_name(alg.field()),
        "algebra_dim": alg.dim(),
        "radical_dim": cat.radical().dim(),
        "simples": rows,
        "sum_dim_squared": wedderburn,
    });
    let failure = (wedderburn != top).then(|| {
        CliError::invariant("Wedderburn identity", format!("sum of (dim S)^2 = {wedderburn}, dim A/rad = {top}"))
    });
    Ok(Report { table, result, failure })
}

fn resolution_for(cat: &RepCategory, m: &Supermodule, steps: usize) -> Result<Resolution, CliError> {
    let res = minimal_resolution(cat, m, steps)?;
    res.verify(cat)?;
    Ok(res)
}

fn resolve(alg: &FiniteDimSuperalgebra, opts: &Options) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let spec = module_spec(opts)?;
    let m = ModuleBuilder::new(&cat).build(&spec)?;
    let res = resolution_for(&cat, &m, opts.depth)?;
    let mut t = Table::new(&["n", "dim P_n", "tops", "dim Ω^(n+1)"]);
    let mut rows = Vec::new();
    for n in 0..=res.length() {
        let tops: Vec<String> = res.tops[n].iter().map(|&(i, p)| top_label(i, p)).collect();
        t.row([
            n.to_string(),
            res.projectives[n].dim().to_string(),
            tops.join(" "),
            res.syzygies[n + 1].dim().to_string(),
        ]);
        rows.push(json!({
            "n": n,
            "dim": res.projectives[n].dim(),
            "tops": res.tops[n].iter().map(|&(i, p)| json!({ "simple": i, "shifted": p == Parity::Odd })).collect::<Vec<_>>(),
            "syzygy_dim": res.syzygies[n + 1].dim(),
        }));
    }
    let mut table = format!("module {spec} (dim {}), verified exact and minimal\n", m.dim());
    table.push_str(&t.render());
    Ok(Report::ok(table, json!({ "module": spec.to_string(), "module_dim": m.dim(), "terms": rows })))
}

fn ext(alg: &FiniteDimSuperalgebra, opts: &Options) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let triv = cat.trivial_index().ok_or(CohomologyError::NoTrivial)?;
    let spec = module_spec(opts)?;
    let m = ModuleBuilder::new(&cat).build(&spec)?;
    let want_res = opts.oracle != Oracle::Bar;
    let want_bar = opts.oracle != Oracle::Resolution;
    let res_dims = if want_res {
        Some(resolution_for(&cat, &m, opts.max_degree)?.ext_dims_by_parity(triv))
    } else {
        None
    };
    // Ext^n(M, k) = Ext^n(k, M^*)
    let md = dual(&m)?;
    let bar_opts = BarOptions { mode: BarMode::Auto, budget: opts.bar_budget };

    let mut t = Table::new(&["degree", "oracle", "even", "odd", "total", "detail"]);
    let mut rows = Vec::new();
    let mut failure = None;
    for n in 0..=opts.max_degree {
        let mut pair: [Option<(usize, usize)>; 2] = [None, None];
        if let Some(d) = &res_dims {
            let (e, o) = d[n];
            pair[0] = Some((e, o));
            t.row([n.to_string(), "resolution".into(), e.to_string(), o.to_string(), (e + o).to_string(), String::new()]);
            rows.push(json!({ "degree": n, "oracle": "resolution", "even": e, "odd": o, "total": e + o }));
        }
        if want_bar && failure.is_none() {
            match ext_dims_bar(&cat, &md, n, bar_opts) {
                Ok(b) => {
                    pair[1] = Some((b.even, b.odd));
                    let mode = match b.mode {
                        BarMode::Plain => "plain",
                        _ => "relative",
                    };
                    let detail = format!("{mode} complex, dim C^{} = {}", n + 1, b.cochain_dims[2]);
                    t.row([n.to_string(), "bar".into(), b.even.to_string(), b.odd.to_string(), b.total().to_string(), detail]);
                    rows.push(json!({
                        "degree": n, "oracle": "bar", "even": b.even, "odd": b.odd, "total": b.total(),
                        "complex": mode, "cochain_dims": b.cochain_dims,
                    }));
                }
                Err(CohomologyError::Budget { degree, size, limit }) => {
                    t.row([n.to_string(), "bar".into(), "-".into(), "-".into(), "-".into(), format!("over budget: {size} > {limit}")]);
                    rows.push(json!({ "degree": degree, "oracle": "bar", "over_budget": { "size": size, "limit": limit } }));
                    failure = Some(CliError::Budget(format!(
                        "bar complex in degree {degree} needs {size} cochains, over --bar-budget {limit}"
                    )));
                }
                Err(e) => return Err(e.into()),
            }
        }
        if let [Some(a), Some(b)] = pair {
            if a != b && !matches!(failure, Some(CliError::Invariant { .. })) {
                failure = Some(CliError::invariant(
                    "oracle equivalence",
                    format!("degree {n}: resolution gives {a:?}, bar gives {b:?} (even, odd)"),
                ));
            }
        }
    }
    let mut table = format!("dim Ext^n(M, k) for M = {spec} (dim {})\n", m.dim());
    table.push_str(&t.render());
    if opts.oracle == Oracle::Both && failure.is_none() {
        table.push_str("oracles agree in every degree\n");
    }
    Ok(Report { table, result: json!({ "module": spec.to_string(), "rows": rows }), failure })
}

fn estimate_json(est: &ComplexityEstimate) -> Value {
    json!({
        "complexity": est.complexity,
        "raw": est.raw,
        "window": est.window,
        "differences": est.differences,
        "confidence": est.confidence.to_string(),
        "bound": est.bound,
    })
}

fn complexity(alg: &FiniteDimSuperalgebra, opts: &Options) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let spec = module_spec(opts)?;
    let m = ModuleBuilder::new(&cat).build(&spec)?;
    let res = resolution_for(&cat, &m, opts.depth)?;
    let est = estimate_complexity(&res.dims(), complexity_bound(&cat));
    let mut t = Table::new(&["row", "values"]);
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    for (d, row) in est.differences.iter().enumerate() {
        let name = if d == 0 { "dim P_n".to_string() } else { format!("Δ^{d}") };
        t.row([name, join(row)]);
    }
    let mut table = format!("module {spec} (dim {}), window n = 0..{}\n", m.dim(), opts.depth);
    table.push_str(&t.render());
    table.push_str(&format!("complexity c = {} ({})\n", est.complexity, est.confidence));
    table.push_str(&format!("bound m + n = {}\n", est.bound));
    table.push_str(&format!("dim V(M) = {} (via cx = dim V)\n", est.complexity));
    let result = json!({
        "module": spec.to_string(),
        "module_dim": m.dim(),
        "estimate": estimate_json(&est),
        "support_dimension": { "dimension": est.complexity, "confidence": est.confidence.to_string(), "note": "via cx = dim V" },
    });
    Ok(Report::ok(table, result))
}

fn parse_coords(f: &Field, text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|c| {
            let v: i64 = c.trim().parse().map_err(|_| CliError::input(format!("bad coordinate `{c}`")))?;
            field_element(f, v)
        })
        .collect()
}

fn carlson(alg: &FiniteDimSuperalgebra, opts: &Options, degree: usize, coords: Option<&str>) -> Result<Report, CliError> {
    if degree == 0 {
        return Err(CliError::input("--degree must be positive"));
    }
    let cat = category(alg)?;
    let bound = complexity_bound(&cat);
    let mut builder = ModuleBuilder::new(&cat);
    let res = builder.trivial_resolution(degree)?.clone();
    let basis = res.cohomology_basis(&cat, degree)?;
    let f = cat.field().clone();
    let classes: Vec<(String, Vec<u32>)> = match coords {
        Some(text) => vec![(text.to_string(), parse_coords(&f, text)?)],
        None => (0..basis.len())
            .map(|i| {
                let mut c = vec![0u32; basis.len()];
                c[i] = 1;
                let label = c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                (label, c)
            })
            .collect(),
    };
    let mut t = Table::new(&["class", "parity", "dim Ω^n(k)", "dim L_ζ", "cx(L_ζ)", "confidence"]);
    let mut rows = Vec::new();
    for (label, c) in &classes {
        let zeta = res.class_from_coords(&cat, degree, c)?;
        let l = superu_core::varieties::carlson_module(&res, &zeta)?;
        let lr = resolution_for(&cat, &l, opts.depth)?;
        let est = estimate_complexity(&lr.dims(), bound);
        t.row([
            label.clone(),
            parity_name(zeta.parity).to_string(),
            res.syzygies[degree].dim().to_string(),
            l.dim().to_string(),
            est.complexity.to_string(),
            est.confidence.to_string(),
        ]);
        rows.push(json!({
            "coords": label,
            "parity": parity_name(zeta.parity),
            "syzygy_dim": res.syzygies[degree].dim(),
            "dim": l.dim(),
            "estimate": estimate_json(&est),
        }));
    }
    let mut table = format!("H^{degree}(A, k) has dimension {}\n", basis.len());
    table.push_str(&t.render());
    Ok(Report::ok(table, json!({ "degree": degree, "h_dim": basis.len(), "classes": rows })))
}

fn realize_cmd(alg: &FiniteDimSuperalgebra, opts: &Options, classes: &[String]) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let bound = complexity_bound(&cat);
    let f = cat.field().clone();
    let mut parsed = Vec::new();
    for c in classes {
        let (deg, coords) = c
            .split_once(':')
            .ok_or_else(|| CliError::input(format!("--class `{c}`: expected DEGREE:c1,c2,..")))?;
        let deg: usize = deg.trim().parse().map_err(|_| CliError::input(format!("--class `{c}`: bad degree")))?;
        if deg == 0 || deg % 2 == 1 {
            return Err(CliError::input(format!("--class `{c}`: realization uses classes of even positive degree")));
        }
        parsed.push((c.clone(), deg, parse_coords(&f, coords)?));
    }
    let top = parsed.iter().map(|p| p.1).max().unwrap_or(0);
    let res = minimal_resolution(&cat, &superu_core::repcat::trivial_module(alg)?, top)?;
    let mut zetas = Vec::new();
    let mut t = Table::new(&["class", "dim L_ζ"]);
    for (label, deg, coords) in &parsed {
        let z = res.class_from_coords(&cat, *deg, coords)?;
        let l = superu_core::varieties::carlson_module(&res, &z)?;
        t.row([label.clone(), l.dim().to_string()]);
        zetas.push(z);
    }
    let product = realize(&cat, &res, &zetas)?;
    let projective = cat.is_projective(&product)?;
    let est = estimate_complexity(&resolution_for(&cat, &product, opts.depth)?.dims(), bound);
    let mut table = t.render();
    table.push_str(&format!("dim of tensor product = {}\n", product.dim()));
    table.push_str(&format!("projective = {projective}\n"));
    table.push_str(&format!("complexity c = {} ({})\n", est.complexity, est.confidence));
    table.push_str(&format!("dim V = {} (via cx = dim V)\n", est.complexity));
    let failure = (est.is_stable() && (est.complexity == 0) != projective).then(|| {
        CliError::invariant("cx = 0 exactly for projectives", format!("cx = {}, projective = {projective}", est.complexity))
    });
    let result = json!({
        "classes": classes,
        "dim": product.dim(),
        "projective": projective,
        "estimate": estimate_json(&est),
    });
    Ok(Report { table, result, failure })
}

fn properties(alg: &FiniteDimSuperalgebra, opts: &Options) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let mut battery = standard_battery(&cat)?;
    if opts.module.is_some() {
        let spec = module_spec(opts)?;
        battery.push((spec.to_string(), ModuleBuilder::new(&cat).build(&spec)?));
    }
    let report = property_suite(&cat, &battery, opts.depth)?;
    let mut mods = Table::new(&["module", "dim", "cx", "confidence", "projective"]);
    for s in &report.modules {
        mods.row([
            s.label.clone(),
            s.dim.to_string(),
            s.complexity.complexity.to_string(),
            s.complexity.confidence.to_string(),
            s.projective.to_string(),
        ]);
    }
    let mut checks = Table::new(&["item", "subject", "holds", "detail"]);
    for c in &report.checks {
        let holds = match (c.holds, c.informational, c.settled) {
            (true, _, _) => "yes",
            (false, true, _) => "no (informational)",
            (false, false, false) => "unsettled",
            (false, false, true) => "NO",
        };
        checks.row([c.item.to_string(), c.subject.clone(), holds.to_string(), c.detail.clone()]);
    }
    let mut table = mods.render();
    table.push('\n');
    table.push_str(&checks.render());
    let failures = report.failures();
    let violations = report.violations();
    table.push_str(&format!(
        "{} modules, {} checks, {} failures ({} unsettled)\n",
        report.modules.len(),
        report.checks.len(),
        failures.len(),
        failures.len() - violations.len()
    ));
    if !report.out_of_scope.is_empty() {
        table.push_str(&format!("not checked: {}\n", report.out_of_scope.join("; ")));
    }
    let named = |cs: &[&superu_core::varieties::PropertyCheck]| {
        cs.iter().map(|c| format!("({}) {}", c.item, c.subject)).collect::<Vec<_>>().join(", ")
    };
    let failure = if !violations.is_empty() {
        Some(CliError::invariant("support-variety properties", named(&violations)))
    } else if !failures.is_empty() {
        Some(CliError::input(format!(
            "{} checks did not settle at --depth {}; rerun with a larger --depth: {}",
            failures.len(),
            opts.depth,
            named(&failures)
        )))
    } else {
        None
    };
    let result = json!({
        "modules": report.modules.iter().map(|s| json!({
            "label": s.label,
            "dim": s.dim,
            "projective": s.projective,
            "estimate": estimate_json(&s.complexity),
        })).collect::<Vec<_>>(),
        "checks": report.checks.iter().map(|c| json!({
            "item": c.item,
            "subject": c.subject,
            "holds": c.holds,
            "informational": c.informational,
            "settled": c.settled,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "out_of_scope": report.out_of_scope,
        "all_hold": report.all_hold(),
    });
    Ok(Report { table, result, failure })
}

fn e1page(spec: &LieSuperAlgebraSpec, alg: &FiniteDimSuperalgebra, opts: &Options) -> Result<Report, CliError> {
    let cat = category(alg)?;
    let mspec = module_spec(opts)?;
    let m = ModuleBuilder::new(&cat).build(&mspec)?;
    let (gm, gn) = (spec.even_dim(), spec.odd_dim());
    let series = gr_cohomology_series(gm, gn, opts.max_degree);
    let bar_opts = BarOptions { mode: BarMode::Auto, budget: opts.bar_budget };
    let mut t = Table::new(&["degree", "H(gr u(g), k)", "E_1 total", "dim Ext(k, M)", "E_1 >= Ext"]);
    let mut rows = Vec::new();
    let mut failure = None;
    for d in 0..=opts.max_degree {
        let e1 = e1_page_dims(gm, gn, m.dim(), d);
        match ext_dims_bar(&cat, &m, d, bar_opts) {
            Ok(b) => {
                let ok = e1 >= b.total() as u64;
                t.row([d.to_string(), series[d].to_string(), e1.to_string(), b.total().to_string(), if ok { "yes" } else { "NO" }.to_string()]);
                rows.push(json!({ "degree": d, "gr_series": series[d], "e1": e1, "ext": b.total(), "dominates": ok }));
                if !ok && failure.is_none() {
                    failure = Some(CliError::invariant("E_1 page dominates Ext", format!("degree {d}: E_1 = {e1} < Ext = {}", b.total())));
                }
            }
            Err(CohomologyError::Budget { size, limit, .. }) => {
                t.row([d.to_string(), series[d].to_string(), e1.to_string(), format!("over budget ({size} > {limit})"), "-".to_string()]);
                rows.push(json!({ "degree": d, "gr_series": series[d], "e1": e1, "over_budget": { "size": size, "limit": limit } }));
                failure = Some(CliError::Budget(format!("bar complex in degree {d} needs {size} cochains, over --bar-budget {limit}")));
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut table = format!("E_1 page totals for M = {mspec} (dim {}), m = {gm}, n = {gn}\n", m.dim());
    table.push_str(&t.render());
    Ok(Report { table, result: json!({ "module": mspec.to_string(), "rows": rows }), failure })
}
