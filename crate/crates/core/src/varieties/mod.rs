//! Complexity of modules from the growth of their minimal resolutions, support-variety
//! dimensions read off as complexities, Carlson modules `L_ζ`, and the realization of
//! intersections of hypersurfaces as tensor products of Carlson modules.

mod properties;

pub use properties::{growth_rate, property_suite, standard_battery, ModuleSummary, PropertyCheck, PropertyReport};

use thiserror::Error;

use crate::cohomology::{minimal_resolution, CohomologyClass, CohomologyError, Resolution};
use crate::repcat::{graded_kernel, tensor, trivial_module, RepCategory, RepError, Supermodule};
use crate::linalg::Matrix;

/// Trailing zeros needed before a difference sequence counts as eventually zero.
pub const MIN_ZERO_RUN: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarietyError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("the class is zero")]
    ZeroClass,
    #[error("classes must have even positive degree, got {0}")]
    BadDegree(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    Stable,
    WindowTooSmall,
}

impl std::fmt::Display for Confidence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Confidence::Stable => "stable",
            Confidence::WindowTooSmall => "window-too-small",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityEstimate {
    /// Reported complexity; never above `bound`.
    pub complexity: usize,
    /// Least `d` whose `d`-th differences end in a zero run, if any.
    pub raw: Option<usize>,
    /// `dim P_0, …, dim P_N`.
    pub window: Vec<usize>,
    /// Row `d` holds the `d`-th finite differences of the window.
    pub differences: Vec<Vec<i64>>,
    pub confidence: Confidence,
    /// `m + n`.
    pub bound: usize,
}

impl ComplexityEstimate {
    pub fn is_stable(&self) -> bool {
        self.confidence == Confidence::Stable
    }
}

/// Complexity from a window of dimensions: `0` if some entry vanishes, otherwise the least
/// `d ≥ 1` whose `d`-th differences end in at least `MIN_ZERO_RUN` zeros. Estimates above
/// `bound`, or windows where no order of differences settles, are flagged.
pub fn estimate_complexity(dims: &[usize], bound: usize) -> ComplexityEstimate {
    estimate(dims, bound, true)
}

/// The same rule for an arbitrary nonnegative sequence, where interior zeros carry no
/// meaning and only a trailing zero run gives growth `0`.
pub fn estimate_growth(seq: &[usize], bound: usize) -> ComplexityEstimate {
    estimate(seq, bound, false)
}

fn estimate(dims: &[usize], bound: usize, resolution: bool) -> ComplexityEstimate {
    let window = dims.to_vec();
    let mut differences = vec![dims.iter().map(|&x| x as i64).collect::<Vec<i64>>()];
    while differences.last().unwrap().len() > MIN_ZERO_RUN {
        let prev = differences.last().unwrap();
        let next: Vec<i64> = prev.windows(2).map(|w| w[1] - w[0]).collect();
        differences.push(next);
    }
    let done = |raw: Option<usize>, complexity: usize, confidence: Confidence, differences: Vec<Vec<i64>>| {
        ComplexityEstimate { complexity, raw, window: window.clone(), differences, confidence, bound }
    };
    if resolution && dims.contains(&0) {
        return done(Some(0), 0, Confidence::Stable, differences);
    }
    let settled = differences.iter().position(|row| {
        row.len() >= MIN_ZERO_RUN && row.iter().rev().take(MIN_ZERO_RUN).all(|&x| x == 0)
    });
    match settled {
        Some(d) if d <= bound => done(Some(d), d, Confidence::Stable, differences),
        Some(d) => done(Some(d), bound, Confidence::WindowTooSmall, differences),
        None => {
            let growth = observed_growth_degree(dims);
            done(None, (growth + 1).min(bound), Confidence::WindowTooSmall, differences)
        }
    }
}

/// Rounded log-log slope of the last two entries: `dim P_n ~ n^g`.
fn observed_growth_degree(dims: &[usize]) -> usize {
    let n = dims.len();
    if n < 3 {
        return 0;
    }
    let (a, b) = (dims[n - 2] as f64, dims[n - 1] as f64);
    if a == 0.0 || b == 0.0 {
        return 0;
    }
    let slope = (b / a).ln() / ((n - 1) as f64 / (n - 2) as f64).ln();
    slope.round().max(0.0) as usize
}

/// `m + n` for the Lie superalgebra behind the category, or the number of PBW generators
/// for other algebras.
pub fn complexity_bound(cat: &RepCategory) -> usize {
    let alg = cat.algebra();
    match alg.pbw() {
        Some(pbw) => pbw.spec.dim(),
        None => alg.generators().len(),
    }
}

pub fn complexity(cat: &RepCategory, m: &Supermodule, depth: usize) -> Result<ComplexityEstimate, VarietyError> {
    let res = minimal_resolution(cat, m, depth)?;
    Ok(estimate_complexity(&res.dims(), complexity_bound(cat)))
}

/// `dim V_g(M)`, obtained as the complexity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyReport {
    pub module: String,
    pub dimension: usize,
    pub confidence: Confidence,
    pub note: &'static str,
}

pub fn support_dimension(
    cat: &RepCategory,
    label: &str,
    m: &Supermodule,
    depth: usize,
) -> Result<VarietyReport, VarietyError> {
    let est = complexity(cat, m, depth)?;
    Ok(VarietyReport {
        module: label.to_string(),
        dimension: est.complexity,
        confidence: est.confidence,
        note: "via cx = dim V",
    })
}

/// `L_ζ = ker(ζ̂: Ω^n(k) → k)` for a class read from a resolution of `k`.
pub fn carlson_module(res: &Resolution, zeta: &CohomologyClass) -> Result<Supermodule, VarietyError> {
    if zeta.degree == 0 {
        return Err(VarietyError::BadDegree(0));
    }
    if zeta.is_zero() {
        return Err(VarietyError::ZeroClass);
    }
    let psi = res.induced_functional(zeta)?;
    let omega = &res.syzygies[zeta.degree];
    let row = Matrix::from_rows(omega.field(), omega.dim(), &[psi]);
    let kernel = graded_kernel(&row, omega.parities());
    Ok(omega.submodule(kernel)?.0)
}

/// `L_{ζ_1} ⊗ ⋯ ⊗ L_{ζ_s}` in the given order; `k` for an empty list.
pub fn realize(cat: &RepCategory, res: &Resolution, classes: &[CohomologyClass]) -> Result<Supermodule, VarietyError> {
    let mut out = trivial_module(cat.algebra())?;
    for z in classes {
        if z.degree == 0 || z.degree % 2 == 1 {
            return Err(VarietyError::BadDegree(z.degree));
        }
        let l = carlson_module(res, z)?;
        out = tensor(&out, &l)?;
    }
    Ok(out)
}

/// Resolution of the trivial module deep enough to read classes of degree `degree`.
pub fn trivial_resolution(cat: &RepCategory, degree: usize) -> Result<Resolution, VarietyError> {
    let k = trivial_module(cat.algebra())?;
    Ok(minimal_resolution(cat, &k, degree)?)
}
