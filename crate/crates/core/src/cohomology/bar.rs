use std::collections::HashMap;

use super::CohomologyError;
use crate::enveloping::FiniteDimSuperalgebra;
use crate::linalg::{CoordinateBasis, Field, SparseEchelon, SparseRow, Subspace};
use crate::liesuper::Parity;
use crate::repcat::{RepCategory, Supermodule};

/// Default cap on `dim C^{n+1}`, the number of rows of the last differential.
pub const DEFAULT_BAR_BUDGET: usize = 60_000;

const LIFT_ITERATIONS: usize = 64;

/// Which normalized bar complex computes `Ext^n(k, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarMode {
    /// Cochains `Hom(Ī^{⊗n}, M)` over the augmentation ideal.
    Plain,
    /// Cochains over the basic algebra `eAe`, relative to the span `S` of its orthogonal
    /// primitive idempotents: `Hom_S(rad^{⊗_S n} ⊗_S k, eM)`, a sum over paths
    /// `ê_{i_0} rad ê_{i_1} ⊗ ⋯`.
    Relative,
    /// `Plain` when it fits the budget, else `Relative`.
    Auto,
}

#[derive(Clone, Copy, Debug)]
pub struct BarOptions {
    pub mode: BarMode,
    pub budget: usize,
}

impl Default for BarOptions {
    fn default() -> Self {
        BarOptions { mode: BarMode::Auto, budget: DEFAULT_BAR_BUDGET }
    }
}

/// Dimensions of one cohomology group, split by parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarExt {
    pub degree: usize,
    pub even: usize,
    pub odd: usize,
    pub mode: BarMode,
    /// `dim C^{n-1}, dim C^n, dim C^{n+1}`.
    pub cochain_dims: [usize; 3],
}

impl BarExt {
    pub fn total(&self) -> usize {
        self.even + self.odd
    }
}

/// An augmented algebra over `S = k^r` presented by its arrows: the spaces `R_{ij}`, their
/// products, and the pieces `M_i = ê_i M` of a module with the action of each arrow.
struct PathData {
    field: Field,
    nodes: usize,
    /// Per arrow: (source i, target j, parity) for `a ∈ ê_i R ê_j`.
    arrows: Vec<(usize, usize, Parity)>,
    /// Arrows ending at each node; tuples grow on the left by these.
    by_target: Vec<Vec<u32>>,
    products: HashMap<(u32, u32), Vec<(u32, u32)>>,
    module_parities: Vec<Vec<Parity>>,
    /// Per arrow `a: i ← j`, the matrix `M_j → M_i` as rows over `M_j`.
    action: Vec<Vec<Vec<(u32, u32)>>>,
    target: usize,
}

impl PathData {
    fn module_dim(&self, i: usize) -> usize {
        self.module_parities[i].len()
    }

    /// `dim C^n` without enumerating.
    fn cochain_dim(&self, n: usize) -> usize {
        let mut count = vec![0usize; self.nodes];
        count[self.target] = 1;
        for _ in 0..n {
            let mut next = vec![0usize; self.nodes];
            for &(i, j, _) in &self.arrows {
                next[i] = next[i].saturating_add(count[j]);
            }
            count = next;
        }
        (0..self.nodes)
            .map(|i| count[i].saturating_mul(self.module_dim(i)))
            .fold(0usize, |a, b| a.saturating_add(b))
    }

    fn tuples(&self, n: usize) -> Vec<Vec<u32>> {
        let mut cur: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &cur {
                let start = t.first().map(|&a| self.arrows[a as usize].0).unwrap_or(self.target);
                for &a in &self.by_target[start] {
                    let mut v = Vec::with_capacity(t.len() + 1);
                    v.push(a);
                    v.extend_from_slice(t);
                    next.push(v);
                }
            }
            cur = next;
        }
        cur
    }

    fn start_node(&self, t: &[u32]) -> usize {
        t.first().map(|&a| self.arrows[a as usize].0).unwrap_or(self.target)
    }

    fn tuple_parity(&self, t: &[u32]) -> Parity {
        t.iter().fold(Parity::Even, |p, &a| p.plus(self.arrows[a as usize].2))
    }
}

struct Cochains {
    offsets: HashMap<Vec<u32>, usize>,
    tuples: Vec<Vec<u32>>,
    dim: usize,
}

impl Cochains {
    fn new(data: &PathData, n: usize) -> Cochains {
        let tuples = data.tuples(n);
        let mut offsets = HashMap::with_capacity(tuples.len());
        let mut dim = 0;
        for t in &tuples {
            offsets.insert(t.clone(), dim);
            dim += data.module_dim(data.start_node(t));
        }
        Cochains { offsets, tuples, dim }
    }
}

/// Rows of `d^n: C^n → C^{n+1}` indexed by `C^{n+1}`, with the parity of each row.
fn differential(data: &PathData, src: &Cochains, dst: &Cochains) -> Vec<(SparseRow, Parity)> {
    let f = &data.field;
    let mut rows = Vec::with_capacity(dst.dim);
    for t in &dst.tuples {
        let i0 = data.start_node(t);
        let tpar = data.tuple_parity(t);
        for m in 0..data.module_dim(i0) {
            let mut row: SparseRow = Vec::new();
            // a_1 · f(a_2, …), with the Koszul sign (-1)^{|a_1||f|}
            let a1 = t[0] as usize;
            let rest = &t[1..];
            if let Some(&off) = src.offsets.get(rest) {
                let rest_par = data.tuple_parity(rest);
                let a1_par = data.arrows[a1].2;
                for &(mp, c) in &data.action[a1][m] {
                    let fpar = data.module_parities[data.arrows[a1].1][mp as usize].plus(rest_par);
                    let c = if a1_par.koszul(fpar) { f.neg(c) } else { c };
                    row.push(((off + mp as usize) as u32, c));
                }
            }
            // Σ (-1)^i f(…, a_i a_{i+1}, …)
            for i in 0..t.len() - 1 {
                if let Some(prod) = data.products.get(&(t[i], t[i + 1])) {
                    let sign_neg = i % 2 == 0;
                    for &(b, c) in prod {
                        let mut merged = Vec::with_capacity(t.len() - 1);
                        merged.extend_from_slice(&t[..i]);
                        merged.push(b);
                        merged.extend_from_slice(&t[i + 2..]);
                        let off = src.offsets[&merged];
                        let c = if sign_neg { f.neg(c) } else { c };
                        row.push(((off + m) as u32, c));
                    }
                }
            }
            let par = data.module_parities[i0][m].plus(tpar);
            rows.push((row, par));
        }
    }
    rows
}

fn sparse_apply(f: &Field, row: &[(u32, u32)], rows: &[(SparseRow, Parity)]) -> HashMap<u32, u32> {
    let mut acc: HashMap<u32, u32> = HashMap::new();
    for &(j, c) in row {
        for &(k, x) in &rows[j as usize].0 {
            let e = acc.entry(k).or_insert(0);
            *e = f.add(*e, f.mul(c, x));
        }
    }
    acc.retain(|_, v| *v != 0);
    acc
}

fn ranks_by_parity(f: &Field, ncols: usize, rows: Vec<(SparseRow, Parity)>) -> (usize, usize) {
    let mut even = SparseEchelon::new(f, ncols);
    let mut odd = SparseEchelon::new(f, ncols);
    for (row, par) in rows {
        match par {
            Parity::Even => even.insert(row),
            Parity::Odd => odd.insert(row),
        };
    }
    (even.rank(), odd.rank())
}

fn cochain_parity_counts(data: &PathData, c: &Cochains) -> (usize, usize) {
    let (mut e, mut o) = (0, 0);
    for t in &c.tuples {
        let tp = data.tuple_parity(t);
        for p in &data.module_parities[data.start_node(t)] {
            match p.plus(tp) {
                Parity::Even => e += 1,
                Parity::Odd => o += 1,
            }
        }
    }
    (e, o)
}

fn run(data: &PathData, n: usize, mode: BarMode) -> Result<BarExt, CohomologyError> {
    let f = &data.field;
    let lower = if n > 0 { Some(Cochains::new(data, n - 1)) } else { None };
    let mid = Cochains::new(data, n);
    let upper = Cochains::new(data, n + 1);
    let d_n = differential(data, &mid, &upper);
    let d_prev = lower.as_ref().map(|l| differential(data, l, &mid));
    if let Some(dp) = &d_prev {
        for (row, _) in &d_n {
            if !sparse_apply(f, row, dp).is_empty() {
                return Err(CohomologyError::Invariant(format!("bar differential: d^{n} d^{} != 0", n - 1)));
            }
        }
    }
    let (ce, co) = cochain_parity_counts(data, &mid);
    let (re, ro) = ranks_by_parity(f, mid.dim, d_n);
    let (pe, po) = match (d_prev, &lower) {
        (Some(dp), Some(l)) => ranks_by_parity(f, l.dim, dp),
        _ => (0, 0),
    };
    Ok(BarExt {
        degree: n,
        even: ce - re - pe,
        odd: co - ro - po,
        mode,
        cochain_dims: [lower.map(|l| l.dim).unwrap_or(0), mid.dim, upper.dim],
    })
}

fn homogeneous_parts(m: &Supermodule, v: &[u32]) -> [Vec<u32>; 2] {
    let (e, o) = m.split_parity(v);
    [e, o]
}

fn plain_data(alg: &FiniteDimSuperalgebra, m: &Supermodule) -> Result<PathData, CohomologyError> {
    let f = alg.field().clone();
    let eps = alg.counit().ok_or(CohomologyError::NoTrivial)?;
    let unit = alg.unit();
    let idx: Vec<usize> = (0..alg.dim()).filter(|&b| b != unit).collect();
    let pos: HashMap<usize, u32> = idx.iter().enumerate().map(|(k, &b)| (b, k as u32)).collect();
    // basis of Ī: b - ε(b)·1 for b ≠ 1; coordinates of x ∈ Ī are its non-unit entries
    let arrows: Vec<(usize, usize, Parity)> = idx.iter().map(|&b| (0, 0, alg.parity(b))).collect();
    let mut products = HashMap::new();
    let vec_of = |b: usize| {
        let mut v = alg.basis_vector(b);
        v[unit] = f.sub(v[unit], eps[b]);
        v
    };
    let vecs: Vec<Vec<u32>> = idx.iter().map(|&b| vec_of(b)).collect();
    for (a, va) in vecs.iter().enumerate() {
        for (b, vb) in vecs.iter().enumerate() {
            let prod = alg.mul(va, vb);
            let sparse: Vec<(u32, u32)> = prod
                .iter()
                .enumerate()
                .filter(|&(k, &c)| c != 0 && k != unit)
                .map(|(k, &c)| (pos[&k], c))
                .collect();
            if !sparse.is_empty() {
                products.insert((a as u32, b as u32), sparse);
            }
        }
    }
    let action = vecs
        .iter()
        .map(|v| {
            let mat = m.action_of(v);
            (0..m.dim())
                .map(|r| {
                    (0..m.dim())
                        .filter_map(|c| {
                            let x = mat.get(r, c);
                            (x != 0).then_some((c as u32, x))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(PathData {
        field: f,
        nodes: 1,
        by_target: vec![(0..arrows.len() as u32).collect()],
        arrows,
        products,
        module_parities: vec![m.parities().to_vec()],
        action,
        target: 0,
    })
}

/// Orthogonal idempotents `ê_i`, one per simple, with `ê_i ≡ ẽ_i` modulo the radical. Each
/// is lifted inside the corner left by the previous ones. Their sum `e` is full, so `eAe`
/// is the basic algebra Morita equivalent to `A`.
pub fn orthogonal_idempotents(cat: &RepCategory) -> Result<Vec<Vec<u32>>, CohomologyError> {
    let alg = cat.algebra();
    let f = alg.field();
    let mut rest = alg.unit_vector();
    let mut out = Vec::new();
    for s in cat.simples() {
        let mut y = alg.mul(&alg.mul(&rest, &s.idempotent), &rest);
        let mut done = false;
        for _ in 0..LIFT_ITERATIONS {
            let y2 = alg.mul(&y, &y);
            if y2 == y {
                done = true;
                break;
            }
            let y3 = alg.mul(&y2, &y);
            let mut next: Vec<u32> = y2.iter().map(|&c| f.mul(3 % f.characteristic(), c)).collect();
            f.axpy(&mut next, f.neg(2 % f.characteristic()), &y3);
            y = next;
        }
        if !done || y.iter().all(|&c| c == 0) {
            return Err(CohomologyError::Invariant("idempotent lifting did not converge".into()));
        }
        for (r, c) in rest.iter_mut().zip(&y) {
            *r = f.sub(*r, *c);
        }
        out.push(y);
    }
    Ok(out)
}

fn relative_data(cat: &RepCategory, m: &Supermodule) -> Result<PathData, CohomologyError> {
    let alg = cat.algebra();
    let f = alg.field().clone();
    let target = cat.trivial_index().ok_or(CohomologyError::NoTrivial)?;
    let idem = orthogonal_idempotents(cat)?;
    let r = idem.len();
    let internal = |what: &str| CohomologyError::Invariant(what.to_string());

    let mut rad_parts = Vec::new();
    for v in cat.radical().basis() {
        let mut e = v.clone();
        let mut o = v.clone();
        for (k, c) in v.iter().enumerate() {
            if *c != 0 {
                match alg.parity(k) {
                    Parity::Even => o[k] = 0,
                    Parity::Odd => e[k] = 0,
                }
            }
        }
        rad_parts.push(e);
        rad_parts.push(o);
    }

    let mut arrows = Vec::new();
    let mut arrow_vecs: Vec<Vec<u32>> = Vec::new();
    let mut pieces: Vec<Vec<Option<(CoordinateBasis, usize)>>> = vec![vec![None; r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut span = Subspace::zero(&f, alg.dim());
            let mut basis = Vec::new();
            for v in &rad_parts {
                let w = alg.mul(&alg.mul(&idem[i], v), &idem[j]);
                if span.insert(&w) {
                    basis.push(w);
                }
            }
            if basis.is_empty() {
                continue;
            }
            let first = arrows.len();
            for w in &basis {
                let par = alg.element_parity(w).ok_or_else(|| internal("arrow is not homogeneous"))?;
                arrows.push((i, j, par));
                arrow_vecs.push(w.clone());
            }
            pieces[i][j] = Some((CoordinateBasis::new(&f, alg.dim(), basis), first));
        }
    }

    let mut products = HashMap::new();
    for (a, &(i, j, _)) in arrows.iter().enumerate() {
        for (b, &(j2, k, _)) in arrows.iter().enumerate() {
            if j != j2 {
                continue;
            }
            let prod = alg.mul(&arrow_vecs[a], &arrow_vecs[b]);
            if prod.iter().all(|&c| c == 0) {
                continue;
            }
            let (cb, first) = pieces[i][k].as_ref().ok_or_else(|| internal("product leaves the radical"))?;
            let coords = cb.coordinates(&prod).ok_or_else(|| internal("product leaves ê_i rad ê_k"))?;
            let sparse: Vec<(u32, u32)> = coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(t, &c)| ((first + t) as u32, c))
                .collect();
            products.insert((a as u32, b as u32), sparse);
        }
    }

    // M_i = ê_i M with homogeneous bases
    let mut module_parities = Vec::with_capacity(r);
    let mut module_bases = Vec::with_capacity(r);
    for e in &idem {
        let rho = m.action_of(e);
        let mut span = Subspace::zero(&f, m.dim());
        let mut basis = Vec::new();
        let mut pars = Vec::new();
        for c in 0..m.dim() {
            for part in homogeneous_parts(m, &rho.column(c)) {
                if span.insert(&part) {
                    pars.push(m.vector_parity(&part).unwrap_or(Parity::Even));
                    basis.push(part);
                }
            }
        }
        module_parities.push(pars);
        module_bases.push(CoordinateBasis::new(&f, m.dim(), basis));
    }
    let mut action = Vec::with_capacity(arrows.len());
    for (a, &(i, j, _)) in arrows.iter().enumerate() {
        let rho = m.action_of(&arrow_vecs[a]);
        let mut rows: Vec<Vec<(u32, u32)>> = vec![Vec::new(); module_bases[i].dim()];
        for (c, v) in module_bases[j].basis().iter().enumerate() {
            let img = rho.mul_vec(v);
            let coords = module_bases[i]
                .coordinates(&img)
                .ok_or_else(|| internal("arrow action leaves ê_i M"))?;
            for (row, &x) in coords.iter().enumerate() {
                if x != 0 {
                    rows[row].push((c as u32, x));
                }
            }
        }
        action.push(rows);
    }
    let mut by_target = vec![Vec::new(); r];
    for (a, &(_, j, _)) in arrows.iter().enumerate() {
        by_target[j].push(a as u32);
    }
    Ok(PathData {
        field: f,
        nodes: r,
        arrows,
        by_target,
        products,
        module_parities,
        action,
        target,
    })
}

/// `dim Ext^n_A(k, M)` from a normalized bar complex, with `d^n d^{n-1} = 0` checked before
/// any rank is taken.
pub fn ext_dims_bar(cat: &RepCategory, m: &Supermodule, n: usize, opts: BarOptions) -> Result<BarExt, CohomologyError> {
    let alg = cat.algebra();
    let plain_fits = alg.counit().is_some() && {
        let ibar = alg.dim().saturating_sub(1);
        ibar.checked_pow(n as u32 + 1)
            .and_then(|x| x.checked_mul(m.dim()))
            .is_some_and(|x| x <= opts.budget)
    };
    let mode = match opts.mode {
        BarMode::Auto if plain_fits => BarMode::Plain,
        BarMode::Auto => BarMode::Relative,
        other => other,
    };
    let data = match mode {
        BarMode::Plain => plain_data(alg, m)?,
        _ => relative_data(cat, m)?,
    };
    let size = data.cochain_dim(n + 1);
    if size > opts.budget {
        return Err(CohomologyError::Budget { degree: n, size, limit: opts.budget });
    }
    run(&data, n, mode)
}

/// `dim Ext^n(k, M)` for `n = 0..=max_degree`.
pub fn ext_series_bar(
    cat: &RepCategory,
    m: &Supermodule,
    max_degree: usize,
    opts: BarOptions,
) -> Result<Vec<BarExt>, CohomologyError> {
    (0..=max_degree).map(|n| ext_dims_bar(cat, m, n, opts)).collect()
}
