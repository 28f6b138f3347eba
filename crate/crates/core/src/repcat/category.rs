use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{graded_kernel, ModuleMap, Supermodule};
use super::radical::radical;
use super::RepError;
use crate::enveloping::FiniteDimSuperalgebra;
use crate::linalg::{CoordinateBasis, Field, Matrix, Poly, Subspace};
use crate::liesuper::Parity;

const SPLIT_ATTEMPTS: usize = 400;
const SPLIT_SEED: u64 = 0x5eed_1d3a;

/// The semisimple quotient `A / rad A` on the basis of standard vectors not in the
/// radical's pivot set.
struct Quotient {
    field: Field,
    rad: Subspace,
    idx: Vec<usize>,
    parities: Vec<Parity>,
    table: Vec<Vec<u32>>,
    unit: Vec<u32>,
}

impl Quotient {
    fn new(alg: &FiniteDimSuperalgebra, rad: Subspace) -> Quotient {
        let f = alg.field().clone();
        let idx = rad.standard_complement();
        let q = idx.len();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = rad.reduce(v);
            idx.iter().map(|&i| r[i]).collect()
        };
        let mut table = Vec::with_capacity(q * q);
        for &i in &idx {
            for &j in &idx {
                let mut dense = vec![0u32; alg.dim()];
                for &(k, c) in alg.mul_basis(i, j) {
                    dense[k as usize] = c;
                }
                table.push(project(&dense));
            }
        }
        let unit = project(&alg.unit_vector());
        let parities = idx.iter().map(|&i| alg.parity(i)).collect();
        Quotient {
            field: f,
            rad,
            idx,
            parities,
            table,
            unit,
        }
    }

    fn dim(&self) -> usize {
        self.idx.len()
    }

    fn project(&self, v: &[u32]) -> Vec<u32> {
        let r = self.rad.reduce(v);
        self.idx.iter().map(|&i| r[i]).collect()
    }

    fn lift(&self, v: &[u32], ambient: usize) -> Vec<u32> {
        let mut out = vec![0u32; ambient];
        for (&i, &c) in self.idx.iter().zip(v) {
            out[i] = c;
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[i] = 1;
        v
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let q = self.dim();
        let mut out = vec![0u32; q];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    f.axpy(&mut out, f.mul(x, y), &self.table[i * q + j]);
                }
            }
        }
        out
    }

    fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    fn indices_of(&self, par: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == par).collect()
    }

    /// Span of `x b y` over basis elements `b` of the given parity.
    fn sandwich(&self, x: &[u32], y: &[u32], par: Option<Parity>) -> Subspace {
        let mut s = Subspace::zero(&self.field, self.dim());
        for b in 0..self.dim() {
            if par.is_none_or(|p| self.parities[b] == p) {
                let xb = self.mul(x, &self.basis_vector(b));
                s.insert(&self.mul(&xb, y));
            }
        }
        s
    }

    /// Minimal polynomial of `x` inside the corner with unit `e`.
    fn min_poly(&self, x: &[u32], e: &[u32]) -> Poly {
        let f = &self.field;
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            powers.push(next);
            let m = Matrix::from_columns(f, self.dim(), &powers);
            if let Some(k) = m.kernel().first() {
                // normalize so the top coefficient is 1
                let d = k.iter().rposition(|&c| c != 0).expect("nonzero kernel vector");
                let inv = f.inv(k[d]);
                return Poly::new(k[..=d].iter().map(|&c| f.mul(c, inv)).collect());
            }
        }
    }

    fn eval_poly(&self, poly: &Poly, x: &[u32], e: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut acc = vec![0u32; self.dim()];
        for &c in poly.0.iter().rev() {
            acc = self.mul(&acc, x);
            f.axpy(&mut acc, c, e);
        }
        acc
    }
}

/// Data attached to one simple module.
#[derive(Clone, Debug)]
pub struct SimpleData {
    pub module: Supermodule,
    /// Primitive idempotent `ẽ` in `A` with `A ẽ` the projective cover of the simple.
    pub idempotent: Vec<u32>,
    pub projective: Supermodule,
    /// Basis of `A ẽ` as vectors of `A`, matching the basis of `projective`.
    pub projective_basis: Vec<Vec<u32>>,
}

/// A projective cover `π: P ↠ M` with `P = ⊕ Π^ε P(S_i)`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Supermodule,
    pub map: ModuleMap,
    /// `(simple index, parity shift)` of each indecomposable summand, in summand order.
    pub tops: Vec<(usize, Parity)>,
}

/// Radical, simples and projective covers for the modules over one algebra.
#[derive(Clone, Debug)]
pub struct RepCategory {
    algebra: FiniteDimSuperalgebra,
    radical: Subspace,
    simples: Vec<SimpleData>,
    trivial: Option<usize>,
}

impl RepCategory {
    /// Works over the given algebra's field. Fails with `EnlargeField` if `A / rad` does not
    /// split there.
    pub fn new(alg: &FiniteDimSuperalgebra) -> Result<RepCategory, RepError> {
        let f = alg.field().clone();
        let rad = radical(alg);
        let q = Quotient::new(alg, rad.clone());

        // center of the even part
        let even = q.indices_of(Parity::Even);
        let mut eqs = Vec::new();
        for &b in &even {
            let eb = q.basis_vector(b);
            for &u in &even {
                let eu = q.basis_vector(u);
                let comm: Vec<u32> = q
                    .mul(&eu, &eb)
                    .iter()
                    .zip(q.mul(&eb, &eu))
                    .map(|(&x, y)| f.sub(x, y))
                    .collect();
                eqs.push((u, comm));
            }
        }
        let mut sys = Matrix::zeros(&f, q.dim() * even.len(), even.len());
        for (col, &u) in even.iter().enumerate() {
            for (bi, _) in even.iter().enumerate() {
                let comm = &eqs[bi * even.len() + col].1;
                debug_assert_eq!(eqs[bi * even.len() + col].0, u);
                for (r, &c) in comm.iter().enumerate() {
                    sys.set(bi * q.dim() + r, col, c);
                }
            }
        }
        let to_q = |coeffs: &[u32]| -> Vec<u32> {
            let mut v = vec![0u32; q.dim()];
            for (&u, &c) in even.iter().zip(coeffs) {
                v[u] = c;
            }
            v
        };
        let center: Vec<Vec<u32>> = sys.kernel().iter().map(|k| to_q(k)).collect();

        // Frobenius-fixed part of the center: one dimension per simple factor of the even part
        let order = f.order() as u64;
        let frob_minus_id: Vec<Vec<u32>> = center
            .iter()
            .map(|z| {
                q.pow(z, order)
                    .iter()
                    .zip(z)
                    .map(|(&a, &b)| f.sub(a, b))
                    .collect()
            })
            .collect();
        let fixed: Vec<Vec<u32>> = if center.is_empty() {
            Vec::new()
        } else {
            Matrix::from_columns(&f, q.dim(), &frob_minus_id)
                .kernel()
                .iter()
                .map(|c| {
                    let mut v = vec![0u32; q.dim()];
                    for (z, &x) in center.iter().zip(c) {
                        f.axpy(&mut v, x, z);
                    }
                    v
                })
                .collect()
        };

        // primitive idempotents of the fixed part by eigenvalue splitting
        let mut idems: Vec<Vec<u32>> = vec![q.unit.clone()];
        for z in &fixed {
            let mut next = Vec::new();
            for e in &idems {
                let ze = q.mul(z, e);
                let mp = q.min_poly(&ze, e);
                let roots: Vec<u32> = mp.roots(&f).into_iter().map(|(r, _)| r).collect();
                if roots.len() <= 1 {
                    next.push(e.clone());
                    continue;
                }
                for &lam in &roots {
                    let mut prod = e.clone();
                    for &mu in roots.iter().filter(|&&m| m != lam) {
                        let inv = f.inv(f.sub(lam, mu));
                        let factor: Vec<u32> = ze
                            .iter()
                            .zip(e)
                            .map(|(&a, &b)| f.mul(f.sub(a, f.mul(mu, b)), inv))
                            .collect();
                        prod = q.mul(&prod, &factor);
                    }
                    next.push(prod);
                }
            }
            idems = next;
        }
        if idems.len() != fixed.len() {
            return Err(RepError::Internal(format!(
                "split {} central idempotents from a {}-dimensional split center",
                idems.len(),
                fixed.len()
            )));
        }
        let mut needed = 1u32;
        for e in &idems {
            let d = center
                .iter()
                .map(|z| q.mul(z, e))
                .fold(Subspace::zero(&f, q.dim()), |mut s, v| {
                    s.insert(&v);
                    s
                })
                .dim() as u32;
            needed = lcm(needed, d);
        }
        if needed > 1 {
            return Err(RepError::EnlargeField {
                degree: f.degree() * needed,
            });
        }

        // super-blocks: Q_0 blocks linked by odd elements
        let nb = idems.len();
        let mut parent: Vec<usize> = (0..nb).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for a in 0..nb {
            for b in a + 1..nb {
                if !q.sandwich(&idems[a], &idems[b], Some(Parity::Odd)).is_zero() {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..nb {
            if find(&mut parent, a) == a {
                reps.push(a);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
        let mut simples = Vec::with_capacity(reps.len());
        for &r in &reps {
            let e = primitive_idempotent(&q, &idems[r], &mut rng)?;
            if q.sandwich(&e, &e, None).dim() != 1 {
                return Err(RepError::Unsupported(
                    "simple component of queer type (odd endomorphisms of the simple module)".into(),
                ));
            }
            simples.push(build_simple(alg, &q, &e)?);
        }
        let trivial = alg
            .counit()
            .and_then(|eps| simples.iter().position(|s| f.dot(&eps, &s.idempotent) != 0));
        Ok(RepCategory {
            algebra: alg.clone(),
            radical: rad,
            simples,
            trivial,
        })
    }

    pub fn algebra(&self) -> &FiniteDimSuperalgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    pub fn simples(&self) -> &[SimpleData] {
        &self.simples
    }

    /// Index of the trivial module among the simples.
    pub fn trivial_index(&self) -> Option<usize> {
        self.trivial
    }

    /// Homogeneous basis of `rad(A) · M`.
    pub fn module_radical(&self, m: &Supermodule) -> Vec<Vec<u32>> {
        let f = self.field();
        let mut span = Subspace::zero(f, m.dim());
        let mut basis = Vec::new();
        for j in 0..m.dim() {
            let orbit = m.orbit(&m.basis_vector(j));
            for r in self.radical.basis() {
                let mut v = vec![0u32; m.dim()];
                for (k, &c) in r.iter().enumerate() {
                    if c != 0 {
                        f.axpy(&mut v, c, &orbit[k]);
                    }
                }
                for part in [m.split_parity(&v).0, m.split_parity(&v).1] {
                    if span.insert(&part) {
                        basis.push(part);
                    }
                }
            }
        }
        basis
    }

    /// `(simple index, parity)` of each summand of `M / rad M`, in simple order.
    pub fn top(&self, m: &Supermodule) -> Vec<(usize, Parity)> {
        self.top_generators(m).into_iter().map(|(i, p, _)| (i, p)).collect()
    }

    /// Homogeneous vectors `c ∈ ẽ_i M` whose images form a basis of `ẽ_i (M / rad M)`.
    fn top_generators(&self, m: &Supermodule) -> Vec<(usize, Parity, Vec<u32>)> {
        let f = self.field();
        let rad_m = Subspace::span(f, m.dim(), &self.module_radical(m));
        let orbits: Vec<Vec<Vec<u32>>> = (0..m.dim()).map(|j| m.orbit(&m.basis_vector(j))).collect();
        let mut out = Vec::new();
        for (i, s) in self.simples.iter().enumerate() {
            let mut acc = rad_m.clone();
            for orbit in &orbits {
                let mut v = vec![0u32; m.dim()];
                for (k, &c) in s.idempotent.iter().enumerate() {
                    if c != 0 {
                        f.axpy(&mut v, c, &orbit[k]);
                    }
                }
                let (ev, od) = m.split_parity(&v);
                for (part, par) in [(ev, Parity::Even), (od, Parity::Odd)] {
                    if acc.insert(&part) {
                        out.push((i, par, part));
                    }
                }
            }
        }
        out
    }

    pub fn projective_cover(&self, m: &Supermodule) -> Result<ProjectiveCover, RepError> {
        let f = self.field();
        let gens = self.top_generators(m);
        let mut parities = Vec::new();
        let mut columns: Vec<Vec<u32>> = Vec::new();
        let mut actions: Vec<Matrix> = self
            .algebra
            .generators()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        let mut tops = Vec::with_capacity(gens.len());
        for (i, par, c) in gens {
            let s = &self.simples[i];
            let orbit = m.orbit(&c);
            for w in &s.projective_basis {
                let mut img = vec![0u32; m.dim()];
                for (k, &x) in w.iter().enumerate() {
                    if x != 0 {
                        f.axpy(&mut img, x, &orbit[k]);
                    }
                }
                columns.push(img);
            }
            parities.extend(s.projective.parities().iter().map(|p| p.plus(par)));
            for (a, g) in actions.iter_mut().zip(s.projective.gen_actions()) {
                *a = a.direct_sum(g);
            }
            tops.push((i, par));
        }
        let p = Supermodule::new(&self.algebra, parities, actions)?;
        let matrix = Matrix::from_columns(f, m.dim(), &columns);
        let map = ModuleMap::new(&p, m, matrix, Parity::Even)?;
        if !map.is_surjective() {
            return Err(RepError::Internal("projective cover map is not surjective".into()));
        }
        Ok(ProjectiveCover { module: p, map, tops })
    }

    /// `Ω(M) = ker(P(M) ↠ M)` together with the cover.
    pub fn syzygy(&self, m: &Supermodule) -> Result<(Supermodule, ModuleMap, ProjectiveCover), RepError> {
        let cover = self.projective_cover(m)?;
        let kernel = graded_kernel(&cover.map.matrix, cover.module.parities());
        let (omega, inclusion) = cover.module.submodule(kernel)?;
        Ok((omega, inclusion, cover))
    }

    pub fn is_projective(&self, m: &Supermodule) -> Result<bool, RepError> {
        Ok(self.projective_cover(m)?.module.dim() == m.dim())
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Primitive idempotent below the central idempotent `f` of the even part, by repeatedly
/// splitting random corner elements along coprime factors of their minimal polynomials.
fn primitive_idempotent(q: &Quotient, f_idem: &[u32], rng: &mut ChaCha8Rng) -> Result<Vec<u32>, RepError> {
    let field = q.field.clone();
    let mut e = f_idem.to_vec();
    for _ in 0..SPLIT_ATTEMPTS {
        let corner = q.sandwich(&e, &e, Some(Parity::Even));
        if corner.dim() <= 1 {
            return Ok(e);
        }
        let mut x = vec![0u32; q.dim()];
        for b in corner.basis() {
            let c = rng.gen_range(0..field.order());
            field.axpy(&mut x, c, b);
        }
        let mp = q.min_poly(&x, &e);
        let Some(&(lam, mult)) = mp.roots(&field).first() else {
            continue;
        };
        let mut a = Poly(vec![1]);
        for _ in 0..mult {
            a = a.mul(&field, &Poly(vec![field.neg(lam), 1]));
        }
        let (b, rem) = mp.divrem(&field, &a);
        debug_assert!(rem.is_zero());
        if b.degree() == Some(0) {
            continue;
        }
        let (_, _, t) = Poly::ext_gcd(&field, &a, &b);
        // t b ≡ 1 mod a and ≡ 0 mod b: projection onto the generalized λ-eigenspace
        let tb = t.mul(&field, &b);
        let e1 = q.eval_poly(&tb, &x, &e);
        let e2: Vec<u32> = e.iter().zip(&e1).map(|(&u, &v)| field.sub(u, v)).collect();
        let d1 = q.sandwich(&e1, &e1, Some(Parity::Even)).dim();
        let d2 = q.sandwich(&e2, &e2, Some(Parity::Even)).dim();
        e = if d1 <= d2 { e1 } else { e2 };
    }
    Err(RepError::Internal("primitive idempotent search did not converge".into()))
}

fn build_simple(alg: &FiniteDimSuperalgebra, q: &Quotient, e: &[u32]) -> Result<SimpleData, RepError> {
    let f = alg.field().clone();
    // S = Q e on the homogeneous vectors b e
    let mut span = Subspace::zero(&f, q.dim());
    let mut basis = Vec::new();
    let mut parities = Vec::new();
    for b in 0..q.dim() {
        let v = q.mul(&q.basis_vector(b), e);
        if span.insert(&v) {
            basis.push(v);
            parities.push(q.parities[b]);
        }
    }
    let cb = CoordinateBasis::new(&f, q.dim(), basis);
    let mut actions = Vec::new();
    for &g in alg.generators() {
        let gq = q.project(&alg.basis_vector(g));
        let images: Vec<Vec<u32>> = cb.basis().iter().map(|s| q.mul(&gq, s)).collect();
        actions.push(
            cb.matrix_of_images(&images)
                .ok_or_else(|| RepError::Internal("Q e is not a left ideal".into()))?,
        );
    }
    let module = Supermodule::new(alg, parities, actions)?;

    // lift e to an idempotent of A
    let mut lifted = q.lift(e, alg.dim());
    let mut converged = false;
    for _ in 0..=alg.dim() {
        let sq = alg.mul(&lifted, &lifted);
        if sq == lifted {
            converged = true;
            break;
        }
        let cube = alg.mul(&sq, &lifted);
        lifted = sq
            .iter()
            .zip(&cube)
            .map(|(&s, &c)| f.sub(f.mul(3, s), f.mul(2, c)))
            .collect();
    }
    if !converged {
        return Err(RepError::Internal("idempotent lifting did not converge".into()));
    }

    // P = A ẽ on the homogeneous vectors b ẽ
    let mut span = Subspace::zero(&f, alg.dim());
    let mut pbasis = Vec::new();
    let mut pparities = Vec::new();
    for b in 0..alg.dim() {
        let v = alg.mul(&alg.basis_vector(b), &lifted);
        if span.insert(&v) {
            pbasis.push(v);
            pparities.push(alg.parity(b));
        }
    }
    let pcb = CoordinateBasis::new(&f, alg.dim(), pbasis);
    let mut pactions = Vec::new();
    for &g in alg.generators() {
        let images: Vec<Vec<u32>> = pcb.basis().iter().map(|w| alg.mul_basis_left(g, w)).collect();
        pactions.push(
            pcb.matrix_of_images(&images)
                .ok_or_else(|| RepError::Internal("A e is not a left ideal".into()))?,
        );
    }
    let projective = Supermodule::new(alg, pparities, pactions)?;
    Ok(SimpleData {
        module,
        idempotent: lifted,
        projective,
        projective_basis: pcb.into_basis(),
    })
}
