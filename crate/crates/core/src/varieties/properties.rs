use super::{complexity_bound, estimate_complexity, estimate_growth, realize, trivial_resolution, ComplexityEstimate, VarietyError};
use crate::cohomology::{minimal_resolution, syzygy};
use crate::liesuper::Parity;
use crate::repcat::{direct_sum, dual, regular_module, tensor, trivial_module, RepCategory, Supermodule};

/// Largest module dimension the battery and the tensor checks will build.
const BATTERY_DIM_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct ModuleSummary {
    pub label: String,
    pub dim: usize,
    pub complexity: ComplexityEstimate,
    pub projective: bool,
}

#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub item: &'static str,
    pub subject: String,
    pub holds: bool,
    /// Recorded but not part of the pass/fail verdict.
    pub informational: bool,
    /// Every complexity estimate involved was stable. An unsettled check never holds, but
    /// its failure says the resolution window was too short, not that the property broke.
    pub settled: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub modules: Vec<ModuleSummary>,
    pub checks: Vec<PropertyCheck>,
    pub out_of_scope: Vec<&'static str>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds || c.informational)
    }

    pub fn failures(&self) -> Vec<&PropertyCheck> {
        self.checks.iter().filter(|c| !c.holds && !c.informational).collect()
    }

    /// Failures backed by stable estimates only.
    pub fn violations(&self) -> Vec<&PropertyCheck> {
        self.checks.iter().filter(|c| !c.holds && !c.informational && c.settled).collect()
    }

    pub fn count(&self, item: &str) -> usize {
        self.checks.iter().filter(|c| c.item == item).count()
    }
}

/// A fixed list of small modules: `k`, `Πk`, `P(k)`, syzygies of `k` and their duals and
/// sums, a Carlson module when `H^2(A, k) ≠ 0`, the regular module and a few non-trivial
/// simples.
pub fn standard_battery(cat: &RepCategory) -> Result<Vec<(String, Supermodule)>, VarietyError> {
    let alg = cat.algebra();
    let k = trivial_module(alg)?;
    let triv = cat.trivial_index().ok_or(crate::cohomology::CohomologyError::NoTrivial)?;
    let pk = cat.simples()[triv].projective.clone();
    let om1 = syzygy(cat, &k, 1)?;
    let om2 = syzygy(cat, &k, 2)?;
    let mut out = vec![
        ("trivial".to_string(), k.clone()),
        ("shift:trivial".to_string(), k.parity_shift()),
        ("projective:trivial".to_string(), pk.clone()),
        ("omega1".to_string(), om1.clone()),
        ("omega2".to_string(), om2.clone()),
        ("dual:omega1".to_string(), dual(&om1)?),
        ("sum:trivial:projective".to_string(), direct_sum(&k, &pk)?),
        ("sum:omega1:trivial".to_string(), direct_sum(&om1, &k)?),
    ];
    if om1.dim() * om1.dim() <= BATTERY_DIM_LIMIT {
        out.push(("tensor:omega1:omega1".to_string(), tensor(&om1, &om1)?));
    }
    let res = trivial_resolution(cat, 2)?;
    if let Some(z) = res
        .cohomology_basis(cat, 2)?
        .into_iter()
        .find(|z| z.parity == Parity::Even)
    {
        out.push(("carlson:2:first".to_string(), realize(cat, &res, &[z])?));
    }
    if alg.dim() <= BATTERY_DIM_LIMIT {
        out.push(("regular".to_string(), regular_module(alg)));
    }
    for (i, s) in cat.simples().iter().enumerate().filter(|&(i, _)| i != triv).take(2) {
        out.push((format!("simple:{i}"), s.module.clone()));
    }
    Ok(out)
}

/// Growth rate of a quasi-periodic sequence such as `n ↦ dim Ext^n(M, S)`: the complexity
/// rule applied to its moving sums of width `period`, after leading zeros are dropped. The
/// suite tries widths up to `p`, since the tops of `P_n` can cycle through a block.
pub fn growth_rate(seq: &[usize], period: usize, bound: usize) -> ComplexityEstimate {
    let sums: Vec<usize> = seq.windows(period.min(seq.len()).max(1)).map(|w| w.iter().sum()).collect();
    let start = sums.iter().position(|&x| x != 0).unwrap_or(sums.len());
    if start == sums.len() {
        return estimate_complexity(&[0], bound);
    }
    estimate_growth(&sums[start..], bound)
}

/// Dimension-level checks of the support-variety properties over a list of modules:
/// (a) `cx(M ⊕ N) = max`, (d) `cx(M) = 0` exactly for projectives, (e) `cx(M ⊗ N) ≤ min`,
/// projectivity of `M`, `M^*`, `M ⊗ M^*` and `M ⊗ M` together, and (informationally) `cx(M)`
/// against the growth of `Ext^•(M, S)` over the simples.
pub fn property_suite(
    cat: &RepCategory,
    modules: &[(String, Supermodule)],
    depth: usize,
) -> Result<PropertyReport, VarietyError> {
    let bound = complexity_bound(cat);
    let mut summaries = Vec::with_capacity(modules.len());
    let mut checks = Vec::new();
    let describe = |e: &ComplexityEstimate| format!("{} ({})", e.complexity, e.confidence);

    for (label, m) in modules {
        let res = minimal_resolution(cat, m, depth)?;
        let est = estimate_complexity(&res.dims(), bound);
        let projective = cat.is_projective(m)?;
        checks.push(PropertyCheck {
            item: "d",
            subject: label.clone(),
            holds: est.is_stable() && ((est.complexity == 0) == projective),
            informational: false,
            settled: est.is_stable(),
            detail: format!("cx = {}, projective = {projective}", describe(&est)),
        });
        checks.push(PropertyCheck {
            item: "bound",
            subject: label.clone(),
            holds: est.complexity <= bound,
            informational: false,
            settled: true,
            detail: format!("cx = {} <= m + n = {bound}", describe(&est)),
        });
        if m.dim() * m.dim() <= BATTERY_DIM_LIMIT {
            let md = dual(m)?;
            let flags = [
                projective,
                cat.is_projective(&md)?,
                cat.is_projective(&tensor(m, &md)?)?,
                cat.is_projective(&tensor(m, m)?)?,
            ];
            checks.push(PropertyCheck {
                item: "projective-equivalence",
                subject: label.clone(),
                holds: flags.iter().all(|&x| x == flags[0]),
                informational: false,
                settled: true,
                detail: format!("M, M*, M⊗M*, M⊗M projective: {flags:?}"),
            });
        }
        let period = cat.field().characteristic() as usize;
        let rates: Vec<ComplexityEstimate> = (0..cat.simples().len())
            .map(|i| {
                let seq = res.ext_dims(i);
                let mut widths = (1..=period).map(|w| growth_rate(&seq, w, bound));
                let first = widths.next().expect("period is positive");
                if first.is_stable() {
                    first
                } else {
                    widths.find(|r| r.is_stable()).unwrap_or(first)
                }
            })
            .collect();
        let max_rate = rates.iter().map(|r| r.complexity).max().unwrap_or(0);
        let stable = est.is_stable() && rates.iter().all(|r| r.is_stable());
        checks.push(PropertyCheck {
            item: "c-partial",
            subject: label.clone(),
            holds: stable && max_rate == est.complexity,
            informational: true,
            settled: stable,
            detail: format!("max growth of Ext(M, S) = {max_rate}, cx = {}", describe(&est)),
        });
        summaries.push(ModuleSummary { label: label.clone(), dim: m.dim(), complexity: est, projective });
    }

    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let (lm, m) = &modules[i];
            let (ln, n) = &modules[j];
            let (cm, cn) = (&summaries[i].complexity, &summaries[j].complexity);
            let sum = direct_sum(m, n)?;
            if sum.dim() <= BATTERY_DIM_LIMIT {
                let cs = estimate_complexity(&minimal_resolution(cat, &sum, depth)?.dims(), bound);
                checks.push(PropertyCheck {
                    item: "a",
                    subject: format!("{lm} ⊕ {ln}"),
                    holds: cs.is_stable() && cs.complexity == cm.complexity.max(cn.complexity),
                    informational: false,
                    settled: cs.is_stable() && cm.is_stable() && cn.is_stable(),
                    detail: format!("{} vs max({}, {})", describe(&cs), describe(cm), describe(cn)),
                });
            }
            if m.dim() * n.dim() <= BATTERY_DIM_LIMIT {
                let t = tensor(m, n)?;
                let ct = estimate_complexity(&minimal_resolution(cat, &t, depth)?.dims(), bound);
                checks.push(PropertyCheck {
                    item: "e",
                    subject: format!("{lm} ⊗ {ln}"),
                    holds: ct.is_stable() && ct.complexity <= cm.complexity.min(cn.complexity),
                    informational: false,
                    settled: ct.is_stable() && cm.is_stable() && cn.is_stable(),
                    detail: format!("{} vs min({}, {})", describe(&ct), describe(cm), describe(cn)),
                });
            }
        }
    }

    Ok(PropertyReport {
        modules: summaries,
        checks,
        out_of_scope: vec![
            "b: relative varieties V(M, N) are not computed as sets",
            "c: only the dimension of V(M) against the growth of Ext(M, S) is recorded",
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_of_staircase_sequences() {
        assert_eq!(growth_rate(&[1, 0, 1, 2, 1, 2, 3], 3, 4).complexity, 2);
        assert_eq!(growth_rate(&[0, 1, 1, 1, 2, 2, 2], 3, 4).complexity, 2);
        assert_eq!(growth_rate(&[0, 0, 0, 0, 0, 0, 0], 3, 4).complexity, 0);
        assert_eq!(growth_rate(&[1, 1, 1, 1, 1, 1, 1], 3, 4).complexity, 1);
        let alternating = growth_rate(&[1, 0, 1, 0, 1, 0, 1], 1, 4);
        assert_ne!((alternating.complexity, alternating.confidence), (0, super::super::Confidence::Stable));
        assert_eq!(growth_rate(&[1, 0, 1, 0, 1, 0, 1], 2, 4).complexity, 1);
        assert_eq!(growth_rate(&[2, 1, 0, 0, 0, 0, 0], 1, 4).complexity, 0);
    }
}
