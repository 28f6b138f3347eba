//! Acceptance criteria. Runs every criterion, prints one line each, and exits nonzero if
//! any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use superu_core::cohomology::{ext_dims_bar, gr_cohomology_series, minimal_resolution, BarOptions};
use superu_core::enveloping::{
    augmentation_filtration, build_uea, gr_algebra, hopf_structure, nilpotency_bound, pbw_filtration, pbw_series,
    FiniteDimSuperalgebra,
};
use superu_core::liesuper::{catalog, LieSuperAlgebraSpec, Parity};
use superu_core::repcat::{trivial_module, RepCategory};
use superu_core::varieties::{
    carlson_module, complexity_bound, estimate_complexity, property_suite, realize, standard_battery,
    trivial_resolution, ComplexityEstimate, Confidence,
};

/// Algebras the criteria quantify over.
const CATALOG: [&str; 6] = ["gl(1|1)", "abelian(1|0)", "abelian(0|1)", "abelian(1|1)", "abelian(0|2)", "odd_heisenberg"];
const PRIMES: [u32; 2] = [3, 5];

const HOPF_PAIRS: usize = 200;
const HOPF_SEED: u64 = 0x5eed_0001;
const RESOLUTION_DEPTH: usize = 6;
const EXT_MAX_DEGREE: usize = 3;
const GR_EXT_MAX_DEGREE: usize = 4;
const BATTERY_MIN: usize = 10;

const LIMIT_DIMENSION: Duration = Duration::from_secs(1);
const LIMIT_MINUTE: Duration = Duration::from_secs(60);
const LIMIT_ORACLES: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn spec(name: &str, p: u32) -> LieSuperAlgebraSpec {
    catalog(name, p).unwrap()
}

fn uea(name: &str, p: u32) -> FiniteDimSuperalgebra {
    build_uea(&spec(name, p)).unwrap()
}

fn dimension_formula() -> Outcome {
    let cases = [("gl(1|1)", 3, 36), ("gl(1|1)", 5, 100), ("abelian(0|2)", 3, 4), ("odd_heisenberg", 3, 6)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, p, expect) in cases {
        let s = spec(name, p);
        let start = Instant::now();
        let alg = build_uea(&s).unwrap();
        let took = start.elapsed();
        let formula = (p as usize).pow(s.even_dim() as u32) << s.odd_dim();
        let ok = alg.dim() == expect && formula == expect && took < LIMIT_DIMENSION;
        pass &= ok;
        parts.push(format!("{name} p={p}: {} (p^m 2^n = {formula}, {:.2}s)", alg.dim(), took.as_secs_f64()));
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn hopf_axioms() -> Outcome {
    let mut failed = Vec::new();
    let mut count = 0;
    for name in CATALOG {
        for p in PRIMES {
            let alg = uea(name, p);
            let report = hopf_structure(&alg).unwrap().check(&alg, HOPF_PAIRS, HOPF_SEED);
            count += 1;
            if !report.all_pass() || report.pairs_tested < HOPF_PAIRS.min(alg.dim() * alg.dim()) {
                failed.push(format!("{name} p={p}: {report:?}"));
            }
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("coassociativity, counit, antipode, braided homomorphism ({HOPF_PAIRS} pairs), super-cocommutativity on {count} algebras")
        } else {
            failed.join("; ")
        },
    }
}

fn nilpotency() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for name in CATALOG {
        for p in PRIMES {
            let s = spec(name, p);
            let alg = build_uea(&s).unwrap();
            let bound = nilpotency_bound(s.even_dim(), s.odd_dim(), p);
            match augmentation_filtration(&alg) {
                Ok(f) => {
                    let index = f.nilpotency_index().unwrap();
                    let ok = index == bound && index <= alg.dim();
                    pass &= ok;
                    if !ok {
                        parts.push(format!("{name} p={p}: index {index}, expected {bound}"));
                    }
                }
                Err(e) => {
                    pass = false;
                    parts.push(format!("{name} p={p}: {e}"));
                }
            }
        }
    }
    Outcome {
        pass,
        detail: if parts.is_empty() { "index m(p-1)+n+1 on every algebra".into() } else { parts.join("; ") },
    }
}

fn padded(v: &[usize], len: usize) -> Vec<u64> {
    (0..len).map(|i| v.get(i).copied().unwrap_or(0) as u64).collect()
}

fn gr_structure() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut pbw_ok = true;
    for name in CATALOG {
        for p in PRIMES {
            let s = spec(name, p);
            let alg = build_uea(&s).unwrap();
            let series = pbw_series(s.even_dim(), s.odd_dim(), p);
            let pbw = gr_algebra(&alg, &pbw_filtration(&alg).unwrap()).unwrap();
            let len = series.len().max(pbw.graded_dims().len());
            let target: Vec<u64> = (0..len).map(|i| series.get(i).copied().unwrap_or(0)).collect();
            pbw_ok &= padded(&pbw.graded_dims(), len) == target && pbw.algebra.supercommutativity_witness().is_none();
            match augmentation_filtration(&alg) {
                Ok(filt) => {
                    let gr = gr_algebra(&alg, &filt).unwrap();
                    let dims = gr.graded_dims();
                    let len = series.len().max(dims.len());
                    let target: Vec<u64> = (0..len).map(|i| series.get(i).copied().unwrap_or(0)).collect();
                    let dims_ok = padded(&dims, len) == target;
                    let comm_ok = gr.algebra.supercommutativity_witness().is_none();
                    if !dims_ok || !comm_ok {
                        pass = false;
                        parts.push(format!("{name} p={p}: gr dims {dims:?} vs series {series:?}, supercommutative {comm_ok}"));
                    }
                }
                Err(e) => {
                    pass = false;
                    parts.push(format!("{name} p={p}: no augmentation gr ({e})"));
                }
            }
        }
    }
    let alg = uea("abelian(0|2)", 3);
    let cat = RepCategory::new(&alg).unwrap();
    let k = trivial_module(&alg).unwrap();
    let bar: Vec<u64> = (0..=GR_EXT_MAX_DEGREE)
        .map(|n| ext_dims_bar(&cat, &k, n, BarOptions::default()).unwrap().total() as u64)
        .collect();
    let closed = gr_cohomology_series(0, 2, GR_EXT_MAX_DEGREE);
    let series_ok = bar == closed && closed == [1, 2, 3, 4, 5];
    pass &= series_ok;
    parts.push(format!("abelian(0|2) Ext by bar {bar:?} vs series {closed:?}"));
    parts.push(format!("pbw-degree gr matches on every algebra: {pbw_ok} (not the criterion)"));
    Outcome { pass, detail: parts.join("; ") }
}

fn worked_example() -> Outcome {
    let alg = uea("gl(1|1)", 5);
    let cat = RepCategory::new(&alg).unwrap();
    let triv = cat.trivial_index().unwrap();
    let pk = cat.simples()[triv].projective.clone();
    let mut layers = Vec::new();
    let mut current = pk.clone();
    while current.dim() > 0 {
        let rad = cat.module_radical(&current);
        layers.push(current.dim() - rad.len());
        current = current.submodule(rad).unwrap().0;
    }
    let k = trivial_module(&alg).unwrap();
    let res = minimal_resolution(&cat, &k, 2).unwrap();
    res.verify(&cat).unwrap();
    let dims = res.dims();
    let p1: Vec<usize> = res.tops[1].iter().map(|t| t.0).collect();
    let p1_ok = p1.len() == 2 && p1[0] != p1[1] && p1.iter().all(|&i| i != triv);
    let p2_trivial = res.tops[2].iter().filter(|t| t.0 == triv).count();
    let pass = pk.dim() == 4 && layers == [1, 2, 1] && dims == [4, 8, 12] && p1_ok && p2_trivial == 1;
    Outcome {
        pass,
        detail: format!(
            "dim P(k) = {}, radical layers {layers:?}, P_0..P_2 = {dims:?}, P_1 tops {p1:?} (trivial is {triv}), trivial tops in P_2: {p2_trivial}",
            pk.dim()
        ),
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut compared = 0;
    for name in CATALOG {
        for p in PRIMES {
            let alg = uea(name, p);
            let cat = RepCategory::new(&alg).unwrap();
            let triv = cat.trivial_index().unwrap();
            let k = trivial_module(&alg).unwrap();
            let res = minimal_resolution(&cat, &k, EXT_MAX_DEGREE).unwrap();
            let by_res = res.ext_dims_by_parity(triv);
            for (n, &(e, o)) in by_res.iter().enumerate().take(EXT_MAX_DEGREE + 1) {
                match ext_dims_bar(&cat, &k, n, BarOptions::default()) {
                    Ok(b) => {
                        compared += 1;
                        if (b.even, b.odd) != (e, o) {
                            failed.push(format!("{name} p={p} n={n}: resolution ({e},{o}) bar ({},{})", b.even, b.odd));
                        }
                    }
                    Err(err) => failed.push(format!("{name} p={p} n={n}: {err}")),
                }
            }
        }
    }
    let took = start.elapsed();
    let pass = failed.is_empty() && took < LIMIT_ORACLES;
    Outcome {
        pass,
        detail: if failed.is_empty() {
            format!("{compared} (algebra, p, degree) triples agree by parity in {:.1}s", took.as_secs_f64())
        } else {
            failed.join("; ")
        },
    }
}

/// Every estimate produced by criteria 7 and 8, for criterion 9.
type Estimates = Vec<(String, ComplexityEstimate)>;

fn property_battery(estimates: &mut Estimates) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for name in CATALOG {
        let alg = uea(name, 3);
        let cat = RepCategory::new(&alg).unwrap();
        let battery = standard_battery(&cat).unwrap();
        let report = property_suite(&cat, &battery, RESOLUTION_DEPTH).unwrap();
        for m in &report.modules {
            estimates.push((format!("{name}: {}", m.label), m.complexity.clone()));
        }
        let failures: Vec<String> = report
            .checks
            .iter()
            .filter(|c| ["a", "d", "e"].contains(&c.item) && !c.holds)
            .map(|c| format!("({}) {}: {}", c.item, c.subject, c.detail))
            .collect();
        let ok = battery.len() >= BATTERY_MIN && failures.is_empty() && report.count("a") > 0 && report.count("e") > 0;
        pass &= ok;
        parts.push(format!(
            "{name}: {} modules, {} (a) / {} (d) / {} (e) checks{}",
            battery.len(),
            report.count("a"),
            report.count("d"),
            report.count("e"),
            if failures.is_empty() { String::new() } else { format!(", failures {}", failures.join(", ")) }
        ));
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn carlson_realization(estimates: &mut Estimates) -> Outcome {
    let alg = uea("abelian(0|2)", 3);
    let cat = RepCategory::new(&alg).unwrap();
    let bound = complexity_bound(&cat);
    let cx = |m: &superu_core::repcat::Supermodule| {
        estimate_complexity(&minimal_resolution(&cat, m, RESOLUTION_DEPTH).unwrap().dims(), bound)
    };
    let k = trivial_module(&alg).unwrap();
    let cx_k = cx(&k);
    estimates.push(("abelian(0|2): k".into(), cx_k.clone()));
    let res = trivial_resolution(&cat, 2).unwrap();
    let basis = res.cohomology_basis(&cat, 2).unwrap();
    let mut carlson_cx = Vec::new();
    for (i, z) in basis.iter().enumerate() {
        let e = cx(&carlson_module(&res, z).unwrap());
        carlson_cx.push(e.complexity);
        estimates.push((format!("abelian(0|2): L_zeta{i}"), e));
    }
    // ζ_first and ζ_last are the squares of the two degree-one classes, with no common zero
    let (z1, z2) = (basis[0].clone(), basis[basis.len() - 1].clone());
    let independent = realize(&cat, &res, &[z1.clone(), z2]).unwrap();
    let independent_proj = cat.is_projective(&independent).unwrap();
    let independent_cx = cx(&independent);
    let repeated = realize(&cat, &res, &[z1.clone(), z1]).unwrap();
    let repeated_cx = cx(&repeated);
    let pass = cx_k.complexity == 2
        && cx_k.is_stable()
        && basis.len() >= 2
        && basis.iter().all(|z| z.parity == Parity::Even)
        && carlson_cx.iter().all(|&c| c == 1)
        && independent_proj
        && independent_cx.complexity == 0
        && repeated_cx.complexity == 1;
    let detail = format!(
        "cx(k) = {} ({}), dim H^2 = {}, cx(L_zeta) = {carlson_cx:?}, independent pair: projective {independent_proj}, cx {}; repeated class: cx {}",
        cx_k.complexity,
        cx_k.confidence,
        basis.len(),
        independent_cx.complexity,
        repeated_cx.complexity
    );
    estimates.push(("abelian(0|2): realize independent".into(), independent_cx));
    estimates.push(("abelian(0|2): realize repeated".into(), repeated_cx));
    Outcome { pass, detail }
}

fn complexity_bound_check(estimates: &Estimates) -> Outcome {
    let violations: Vec<String> = estimates
        .iter()
        .filter(|(_, e)| {
            e.complexity > e.bound || (e.raw.is_none_or(|r| r > e.bound) && e.confidence != Confidence::WindowTooSmall)
        })
        .map(|(label, e)| format!("{label}: {e:?}"))
        .collect();
    let flagged = estimates.iter().filter(|(_, e)| !e.is_stable()).count();
    Outcome {
        pass: !estimates.is_empty() && violations.is_empty(),
        detail: if violations.is_empty() {
            format!("{} estimates within m+n, {flagged} flagged", estimates.len())
        } else {
            violations.join("; ")
        },
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<(&str, Vec<&str>)> = vec![
        ("gl11.json", vec!["check"]),
        ("gl11.json", vec!["build"]),
        ("gl11.json", vec!["gr"]),
        ("gl11.json", vec!["simples"]),
        ("gl11.json", vec!["resolve", "--depth", "3"]),
        ("gl11.json", vec!["ext", "--module", "trivial", "--max-degree", "3", "--oracle", "both"]),
        ("ext2.json", vec!["complexity", "--module", "trivial", "--depth", "6"]),
        ("ext2.json", vec!["carlson", "--degree", "2"]),
        ("ext2.json", vec!["realize", "--class", "2:1,0,0", "--class", "2:0,0,1"]),
        ("ext2.json", vec!["properties"]),
        ("ext2.json", vec!["e1page", "--max-degree", "4"]),
        ("gl11.json", vec!["ext", "--bar-budget", "5"]),
    ];
    let mut failed = Vec::new();
    for (i, (input, args)) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let path = dir.path().join(format!("run{i}-{rep}.json"));
            let out = Command::new(env!("CARGO_BIN_EXE_superu"))
                .args(args)
                .arg("--json")
                .arg(&path)
                .arg(fixture(input))
                .output()
                .unwrap();
            outputs.push((out.status.code(), out.stdout, std::fs::read(&path).unwrap_or_default()));
        }
        if outputs[0] != outputs[1] || outputs[0].2.is_empty() {
            failed.push(args[0].to_string());
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} invocations byte-identical across reruns (JSON, stdout, exit code)", runs.len())
        } else {
            format!("differs: {}", failed.join(", "))
        },
    }
}

fn guarded(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Outcome { pass: false, detail: format!("panicked: {msg}") }
    });
    (out, start.elapsed())
}

fn main() {
    let mut estimates = Estimates::new();
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    let mut record = |id, title, (o, t): (Outcome, Duration)| results.push((id, title, o, t));
    record(1, "dimension formula", guarded(dimension_formula));
    record(2, "Hopf axioms", guarded(hopf_axioms));
    record(3, "augmentation nilpotency", guarded(nilpotency));
    record(4, "associated graded structure", guarded(gr_structure));
    record(5, "gl(1|1) worked example", guarded(worked_example));
    record(6, "oracle equivalence", guarded(oracle_equivalence));
    record(7, "support-variety properties", guarded(|| property_battery(&mut estimates)));
    record(8, "Carlson modules and realization", guarded(|| carlson_realization(&mut estimates)));
    record(9, "complexity bound", guarded(|| complexity_bound_check(&estimates)));
    record(10, "determinism", guarded(determinism));

    let limits = [(5, LIMIT_MINUTE), (4, LIMIT_MINUTE), (8, LIMIT_MINUTE)];
    let mut failures = 0;
    println!();
    for (id, title, outcome, took) in &mut results {
        if let Some((_, limit)) = limits.iter().find(|(i, _)| i == id) {
            if *took > *limit {
                outcome.pass = false;
                outcome.detail.push_str(&format!("; exceeded {}s", limit.as_secs()));
            }
        }
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failures += 1;
        }
        println!("criterion {id:>2} {verdict} [{title}] ({:.1}s) {}", took.as_secs_f64(), outcome.detail);
    }
    println!("\n{} of {} criteria pass", results.len() - failures, results.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
