use superu_core::cohomology::DEFAULT_DEPTH;
use superu_core::enveloping::build_uea;
use superu_core::liesuper::catalog;
use superu_core::repcat::RepCategory;
use superu_core::varieties::{property_suite, standard_battery};

#[test]
fn battery_satisfies_support_properties() {
    for (name, p) in [
        ("gl(1|1)", 3u32),
        ("abelian(1|0)", 3),
        ("abelian(0|1)", 3),
        ("abelian(1|1)", 3),
        ("odd_heisenberg", 3),
        ("abelian(0|2)", 5),
    ] {
        let a = build_uea(&catalog(name, p).unwrap()).unwrap();
        let cat = RepCategory::new(&a).unwrap();
        let battery = standard_battery(&cat).unwrap();
        assert!(battery.len() >= 10, "{name}: {}", battery.len());
        let report = property_suite(&cat, &battery, DEFAULT_DEPTH).unwrap();
        assert!(report.all_hold(), "{name} p={p}: {:#?}", report.failures());
        assert!(report.modules.iter().all(|m| m.complexity.is_stable()));
        // growth of Ext(M, S) over the simples recovers the complexity
        for c in report.checks.iter().filter(|c| c.item == "c-partial") {
            assert!(c.holds, "{name} p={p} {}: {}", c.subject, c.detail);
        }
    }
}
