//! Restricted Lie superalgebras given by structure constants and a p-map on the even basis.
//!
//! Basis elements are indexed `0..m` (even) followed by `m..m+n` (odd). Elements are dense
//! coefficient vectors of length `m + n` over `F_p`.

use std::fmt;

use thiserror::Error;

use crate::linalg::{Field, LinalgError, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Field(#[from] LinalgError),
    #[error("malformed algebra at {location}: {message}")]
    Malformed { location: String, message: String },
    #[error("element has odd components; the p-map is only defined on the even part")]
    OddComponent,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("unknown catalog entry `{0}` (expected gl(m|n), abelian(m|n) or odd_heisenberg)")]
    UnknownCatalog(String),
}

/// Z/2 degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    #[inline]
    pub fn plus(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ other.bit())
    }

    /// Koszul sign `(-1)^{|a||b|}` as a boolean "is negative".
    #[inline]
    pub fn koszul(self, other: Parity) -> bool {
        self == Parity::Odd && other == Parity::Odd
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "0",
            Parity::Odd => "1",
        })
    }
}

/// A restricted Lie superalgebra `g = g_0 ⊕ g_1` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebraSpec {
    field: Field,
    even_names: Vec<String>,
    odd_names: Vec<String>,
    /// `bracket[i * dim + j]` is `[b_i, b_j]`.
    bracket: Vec<Vec<u32>>,
    /// `pmap[i]` is `b_i^{[p]}` for even `i`, stored over the full basis.
    pmap: Vec<Vec<u32>>,
}

impl LieSuperAlgebraSpec {
    /// An algebra with all brackets and the p-map zero.
    pub fn new(p: u32, even_names: Vec<String>, odd_names: Vec<String>) -> Result<Self, LieError> {
        let field = Field::prime(p)?;
        let mut seen = std::collections::HashSet::new();
        for (i, name) in even_names.iter().chain(&odd_names).enumerate() {
            if name.is_empty() || name.contains(',') {
                return Err(LieError::Malformed {
                    location: format!("basis[{i}]"),
                    message: format!("invalid basis name `{name}`"),
                });
            }
            if !seen.insert(name.clone()) {
                return Err(LieError::Malformed {
                    location: format!("basis[{i}]"),
                    message: format!("duplicate basis name `{name}`"),
                });
            }
        }
        let dim = even_names.len() + odd_names.len();
        Ok(LieSuperAlgebraSpec {
            field,
            bracket: vec![vec![0; dim]; dim * dim],
            pmap: vec![vec![0; dim]; even_names.len()],
            even_names,
            odd_names,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn even_dim(&self) -> usize {
        self.even_names.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_names.len()
    }

    pub fn dim(&self) -> usize {
        self.even_dim() + self.odd_dim()
    }

    pub fn even_names(&self) -> &[String] {
        &self.even_names
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd_names
    }

    pub fn name(&self, i: usize) -> &str {
        if i < self.even_dim() {
            &self.even_names[i]
        } else {
            &self.odd_names[i - self.even_dim()]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.even_names
            .iter()
            .chain(&self.odd_names)
            .position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even_dim() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i * self.dim() + j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<u32>) {
        assert_eq!(value.len(), self.dim());
        let d = self.dim();
        self.bracket[i * d + j] = value;
    }

    /// Sets `[b_i, b_j]` and the value forced on `[b_j, b_i]` by super-antisymmetry.
    pub fn set_bracket_antisymmetric(&mut self, i: usize, j: usize, value: Vec<u32>) {
        let f = self.field.clone();
        let sign_flip = !self.parity(i).koszul(self.parity(j));
        let other: Vec<u32> = if sign_flip {
            value.iter().map(|&c| f.neg(c)).collect()
        } else {
            value.clone()
        };
        self.set_bracket(i, j, value);
        self.set_bracket(j, i, other);
    }

    pub fn pmap_basis(&self, i: usize) -> &[u32] {
        &self.pmap[i]
    }

    pub fn set_pmap(&mut self, i: usize, value: Vec<u32>) {
        assert!(i < self.even_dim());
        assert_eq!(value.len(), self.dim());
        self.pmap[i] = value;
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Parity of a nonzero element, or an error if it mixes parities.
    pub fn element_parity(&self, v: &[u32]) -> Result<Parity, LieError> {
        let m = self.even_dim();
        let has_even = v[..m].iter().any(|&c| c != 0);
        let has_odd = v[m..].iter().any(|&c| c != 0);
        match (has_even, has_odd) {
            (true, true) => Err(LieError::NotHomogeneous),
            (false, true) => Ok(Parity::Odd),
            _ => Ok(Parity::Even),
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                f.axpy(&mut out, f.mul(a, b), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `[v, -]` on the full basis. The column `j` is `[v, b_j]`.
    pub fn adjoint_matrix(&self, v: &[u32]) -> Result<Matrix, LieError> {
        self.element_parity(v)?;
        Ok(self.adjoint_unchecked(v))
    }

    fn adjoint_unchecked(&self, v: &[u32]) -> Matrix {
        let d = self.dim();
        let f = &self.field;
        let mut m = Matrix::zeros(f, d, d);
        for j in 0..d {
            let mut col = vec![0; d];
            for (i, &a) in v.iter().enumerate() {
                if a != 0 {
                    f.axpy(&mut col, a, self.bracket_basis(i, j));
                }
            }
            for (r, &c) in col.iter().enumerate() {
                m.set(r, j, c);
            }
        }
        m
    }

    /// Sum of the correction terms `s_i(x, y)` in `(x + y)^{[p]}` for even `x`, `y`.
    ///
    /// `i s_i(x, y)` is the coefficient of `t^{i-1}` in `ad(tx + y)^{p-1}(x)`, computed in
    /// `F_p[t]/(t^p)`.
    pub fn s_terms(&self, x: &[u32], y: &[u32]) -> Vec<Vec<u32>> {
        let p = self.p() as usize;
        let f = &self.field;
        let d = self.dim();
        let ad_x = self.adjoint_unchecked(x);
        let ad_y = self.adjoint_unchecked(y);
        // poly[k] is the coefficient vector of t^k
        let mut poly = vec![vec![0u32; d]; p];
        poly[0] = x.to_vec();
        for _ in 0..p - 1 {
            let mut next = vec![vec![0u32; d]; p];
            for k in 0..p {
                if poly[k].iter().all(|&c| c == 0) {
                    continue;
                }
                let yk = ad_y.mul_vec(&poly[k]);
                for (n, c) in next[k].iter_mut().zip(&yk) {
                    *n = f.add(*n, *c);
                }
                if k + 1 < p {
                    let xk = ad_x.mul_vec(&poly[k]);
                    for (n, c) in next[k + 1].iter_mut().zip(&xk) {
                        *n = f.add(*n, *c);
                    }
                }
            }
            poly = next;
        }
        (1..p)
            .map(|i| {
                let inv_i = f.inv(i as u32 % self.p());
                poly[i - 1].iter().map(|&c| f.mul(c, inv_i)).collect()
            })
            .collect()
    }

    /// `(x + y)^{[p]}` given `x^{[p]}` and `y^{[p]}`.
    fn p_power_of_sum(&self, x: &[u32], px: &[u32], y: &[u32], py: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out: Vec<u32> = px.iter().zip(py).map(|(&a, &b)| f.add(a, b)).collect();
        for s in self.s_terms(x, y) {
            f.axpy(&mut out, 1, &s);
        }
        out
    }

    /// The p-map on an arbitrary even element, via semilinearity on each basis term and the
    /// correction terms for sums, accumulated in basis order.
    pub fn p_power(&self, v: &[u32]) -> Result<Vec<u32>, LieError> {
        if v.len() != self.dim() {
            return Err(LieError::Malformed {
                location: "element".into(),
                message: format!("expected {} coefficients, found {}", self.dim(), v.len()),
            });
        }
        if self.element_parity(v)? == Parity::Odd && v.iter().any(|&c| c != 0) {
            return Err(LieError::OddComponent);
        }
        let f = &self.field;
        let d = self.dim();
        let mut acc = vec![0u32; d];
        let mut p_acc = vec![0u32; d];
        let mut started = false;
        for i in 0..self.even_dim() {
            let c = v[i];
            if c == 0 {
                continue;
            }
            let mut w = vec![0u32; d];
            w[i] = c;
            let mut pw = vec![0u32; d];
            f.axpy(&mut pw, f.pow(c, self.p() as u64), &self.pmap[i]);
            if started {
                p_acc = self.p_power_of_sum(&acc, &p_acc, &w, &pw);
                acc[i] = c;
            } else {
                acc = w;
                p_acc = pw;
                started = true;
            }
        }
        Ok(p_acc)
    }

    /// Exhaustive axiom check over basis tuples in deterministic order.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let d = self.dim();
        let m = self.even_dim();
        let f = &self.field;
        let is_zero = |v: &[u32]| v.iter().all(|&c| c == 0);

        // grading
        let mut witness = None;
        'grading: for i in 0..d {
            for j in 0..d {
                let target = self.parity(i).plus(self.parity(j));
                let v = self.bracket_basis(i, j);
                let bad = (0..d).any(|k| v[k] != 0 && self.parity(k) != target);
                if bad {
                    witness = Some(vec![i, j]);
                    break 'grading;
                }
            }
        }
        report.push("grading", witness, self);

        let mut witness = None;
        for i in 0..m {
            if (m..d).any(|k| self.pmap[i][k] != 0) {
                witness = Some(vec![i]);
                break;
            }
        }
        report.push("pmap_even", witness, self);

        // super-antisymmetry
        let mut witness = None;
        'anti: for i in 0..d {
            for j in i..d {
                let a = self.bracket_basis(i, j);
                let b = self.bracket_basis(j, i);
                let koszul = self.parity(i).koszul(self.parity(j));
                let ok = a.iter().zip(b).all(|(&x, &y)| {
                    // [a,b] = -(-1)^{|a||b|} [b,a]
                    if koszul {
                        x == y
                    } else {
                        x == f.neg(y)
                    }
                });
                if !ok {
                    witness = Some(vec![i, j]);
                    break 'anti;
                }
            }
        }
        report.push("super_antisymmetry", witness, self);

        // super Jacobi in the cyclic form
        // (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]] = 0
        let mut witness = None;
        'jacobi: for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let (pa, pb, pc) = (self.parity(a), self.parity(b), self.parity(c));
                    let ea = self.basis_vector(a);
                    let eb = self.basis_vector(b);
                    let ec = self.basis_vector(c);
                    let t1 = self.bracket(&ea, self.bracket_basis(b, c));
                    let t2 = self.bracket(&eb, self.bracket_basis(c, a));
                    let t3 = self.bracket(&ec, self.bracket_basis(a, b));
                    let mut sum = vec![0u32; d];
                    let sgn = |neg: bool| if neg { f.neg(1) } else { 1 };
                    f.axpy(&mut sum, sgn(pa.koszul(pc)), &t1);
                    f.axpy(&mut sum, sgn(pb.koszul(pa)), &t2);
                    f.axpy(&mut sum, sgn(pc.koszul(pb)), &t3);
                    if !is_zero(&sum) {
                        witness = Some(vec![a, b, c]);
                        break 'jacobi;
                    }
                }
            }
        }
        // in characteristic 3 the cyclic identity does not force [y,[y,y]] = 0 for odd y
        if witness.is_none() && self.p() == 3 {
            for y in m..d {
                let ey = self.basis_vector(y);
                if !is_zero(&self.bracket(&ey, self.bracket_basis(y, y))) {
                    witness = Some(vec![y, y, y]);
                    break;
                }
            }
        }
        report.push("jacobi", witness, self);

        report.entries.push(AxiomCheck {
            name: "restriction_a".into(),
            status: AxiomStatus::ByConstruction,
            witness: None,
        });
        report.witness_names.push(None);

        // (b): ad(x^{[p]}) = (ad x)^p on all of g, and the odd block separately
        let p = self.p() as u64;
        let mut witness_b = None;
        let mut witness_odd = None;
        for i in 0..m {
            let lhs = self.adjoint_unchecked(&self.pmap[i]);
            let rhs = self.adjoint_unchecked(&self.basis_vector(i)).pow(p);
            if lhs != rhs {
                let odd_rows: Vec<usize> = (m..d).collect();
                if witness_odd.is_none() && lhs.select(&odd_rows, &odd_rows) != rhs.select(&odd_rows, &odd_rows) {
                    witness_odd = Some(vec![i]);
                }
                if witness_b.is_none() {
                    witness_b = Some(vec![i]);
                }
            }
        }
        report.push("restriction_b", witness_b, self);

        // (c): the p-map extended to x_i + x_j by the correction terms is order independent
        // and still satisfies (b)
        let mut witness = None;
        'c: for i in 0..m {
            for j in i + 1..m {
                let (ei, ej) = (self.basis_vector(i), self.basis_vector(j));
                let forward = self.p_power_of_sum(&ei, &self.pmap[i], &ej, &self.pmap[j]);
                let backward = self.p_power_of_sum(&ej, &self.pmap[j], &ei, &self.pmap[i]);
                let mut sum = ei.clone();
                sum[j] = 1;
                let ad_ok = self.adjoint_unchecked(&forward) == self.adjoint_unchecked(&sum).pow(p);
                if forward != backward || !ad_ok {
                    witness = Some(vec![i, j]);
                    break 'c;
                }
            }
        }
        report.push("restriction_c", witness, self);
        report.push("odd_part_restricted", witness_odd, self);
        report
    }

    /// Renders an element as a readable linear combination.
    pub fn format_element(&self, v: &[u32]) -> String {
        let f = &self.field;
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let s = f.to_signed(c).unwrap_or(c as i64);
                match s {
                    1 => self.name(i).to_string(),
                    -1 => format!("-{}", self.name(i)),
                    _ => format!("{}*{}", s, self.name(i)),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    Fail,
    ByConstruction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub status: AxiomStatus,
    /// Basis indices of the first failing tuple.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomCheck>,
    witness_names: Vec<Option<Vec<String>>>,
}

impl AxiomReport {
    fn push(&mut self, name: &str, witness: Option<Vec<usize>>, spec: &LieSuperAlgebraSpec) {
        self.witness_names.push(
            witness
                .as_ref()
                .map(|w| w.iter().map(|&i| spec.name(i).to_string()).collect()),
        );
        self.entries.push(AxiomCheck {
            name: name.into(),
            status: if witness.is_some() {
                AxiomStatus::Fail
            } else {
                AxiomStatus::Pass
            },
            witness,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != AxiomStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.entries.iter().filter(|e| e.status == AxiomStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Witness tuple of the named check, rendered with basis names.
    pub fn witness_names(&self, name: &str) -> Option<&[String]> {
        let idx = self.entries.iter().position(|e| e.name == name)?;
        self.witness_names.get(idx)?.as_deref()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, w) in self.entries.iter().zip(&self.witness_names) {
            let status = match e.status {
                AxiomStatus::Pass => "pass",
                AxiomStatus::Fail => "FAIL",
                AxiomStatus::ByConstruction => "by construction",
            };
            write!(f, "{:<22} {}", e.name, status)?;
            if let Some(w) = w {
                write!(f, "  witness ({})", w.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Built-in algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    /// Matrix units with the supercommutator and the p-th matrix power.
    Gl { m: usize, n: usize },
    Abelian { m: usize, n: usize },
    /// `x` even and central, `y` odd, `[y, y] = 2x`, `x^{[p]} = 0`.
    OddHeisenberg,
}

impl CatalogEntry {
    pub fn parse(name: &str) -> Result<CatalogEntry, LieError> {
        let name = name.trim();
        let unknown = || LieError::UnknownCatalog(name.to_string());
        if name == "odd_heisenberg" {
            return Ok(CatalogEntry::OddHeisenberg);
        }
        let (head, rest) = name.split_once('(').ok_or_else(unknown)?;
        let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
        let (a, b) = inner.split_once('|').ok_or_else(unknown)?;
        let m: usize = a.trim().parse().map_err(|_| unknown())?;
        let n: usize = b.trim().parse().map_err(|_| unknown())?;
        match head.trim() {
            "gl" => Ok(CatalogEntry::Gl { m, n }),
            "abelian" => Ok(CatalogEntry::Abelian { m, n }),
            _ => Err(unknown()),
        }
    }

    pub fn build(self, p: u32) -> Result<LieSuperAlgebraSpec, LieError> {
        match self {
            CatalogEntry::Gl { m, n } => gl(m, n, p),
            CatalogEntry::Abelian { m, n } => {
                let even = (1..=m).map(|i| format!("x{i}")).collect();
                let odd = (1..=n).map(|i| format!("y{i}")).collect();
                LieSuperAlgebraSpec::new(p, even, odd)
            }
            CatalogEntry::OddHeisenberg => {
                let mut s = LieSuperAlgebraSpec::new(p, vec!["x".into()], vec!["y".into()])?;
                let two = s.field().from_i64(2);
                s.set_bracket(1, 1, vec![two, 0]);
                Ok(s)
            }
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::Gl { m, n } => write!(f, "gl({m}|{n})"),
            CatalogEntry::Abelian { m, n } => write!(f, "abelian({m}|{n})"),
            CatalogEntry::OddHeisenberg => f.write_str("odd_heisenberg"),
        }
    }
}

/// Looks up a built-in algebra by name, e.g. `gl(1|1)`, `abelian(0|2)`, `odd_heisenberg`.
pub fn catalog(name: &str, p: u32) -> Result<LieSuperAlgebraSpec, LieError> {
    CatalogEntry::parse(name)?.build(p)
}

fn gl(m: usize, n: usize, p: u32) -> Result<LieSuperAlgebraSpec, LieError> {
    let size = m + n;
    let row_parity = |i: usize| if i < m { 0u8 } else { 1 };
    let label = |i: usize, j: usize| {
        if size < 10 {
            format!("E{}{}", i + 1, j + 1)
        } else {
            format!("E{}_{}", i + 1, j + 1)
        }
    };
    let mut even_units = Vec::new();
    let mut odd_units = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if row_parity(i) == row_parity(j) {
                even_units.push((i, j));
            } else {
                odd_units.push((i, j));
            }
        }
    }
    let units: Vec<(usize, usize)> = even_units.iter().chain(&odd_units).copied().collect();
    let mut spec = LieSuperAlgebraSpec::new(
        p,
        even_units.iter().map(|&(i, j)| label(i, j)).collect(),
        odd_units.iter().map(|&(i, j)| label(i, j)).collect(),
    )?;
    let index = |u: (usize, usize)| units.iter().position(|&v| v == u).expect("unit exists");
    let d = units.len();
    let f = spec.field().clone();
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            // [E_ij, E_kl] = δ_jk E_il - (-1)^{|a||b|} δ_li E_kj
            let mut v = vec![0u32; d];
            if j == k {
                v[index((i, l))] = f.add(v[index((i, l))], 1);
            }
            if l == i {
                let both_odd = spec.parity(a).koszul(spec.parity(b));
                let c = if both_odd { 1 } else { f.neg(1) };
                v[index((k, j))] = f.add(v[index((k, j))], c);
            }
            spec.set_bracket(a, b, v);
        }
    }
    for (a, &(i, j)) in even_units.iter().enumerate() {
        // E_ii^p = E_ii, E_ij^p = 0 for i != j
        let mut v = vec![0u32; d];
        if i == j {
            v[a] = 1;
        }
        spec.set_pmap(a, v);
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl11(p: u32) -> LieSuperAlgebraSpec {
        catalog("gl(1|1)", p).unwrap()
    }

    #[test]
    fn gl11_basis_order() {
        let g = gl11(5);
        assert_eq!(g.even_names(), ["E11", "E22"]);
        assert_eq!(g.odd_names(), ["E12", "E21"]);
        assert_eq!(g.dim(), 4);
    }

    #[test]
    fn gl11_passes_axioms() {
        let r = gl11(5).check_axioms();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn abelian_odd_passes() {
        assert!(catalog("abelian(0|3)", 3).unwrap().check_axioms().all_pass());
    }

    #[test]
    fn perturbed_gl11_fails_jacobi() {
        // Hand check: with [E11,E12] = 2 E12 (and [E12,E11] = -2 E12), the triple
        // (E11, E12, E21) gives [E11,[E12,E21]] = [E11, E11+E22] = 0 while
        // [[E11,E12],E21] + [E12,[E11,E21]] = 2(E11+E22) - (E11+E22) = E11+E22 != 0.
        let mut g = gl11(5);
        let f = g.field().clone();
        let two = f.from_i64(2);
        g.set_bracket_antisymmetric(0, 2, vec![0, 0, two, 0]);
        let r = g.check_axioms();
        assert!(!r.all_pass());
        let jac = r.get("jacobi").unwrap();
        assert_eq!(jac.status, AxiomStatus::Fail);
        assert_eq!(jac.witness.as_ref().unwrap().len(), 3);
        assert_eq!(r.get("super_antisymmetry").unwrap().status, AxiomStatus::Pass);
    }

    #[test]
    fn witness_names_follow_their_entries() {
        // E11^{[p]} = E22 breaks (b): (ad E11)^p = ad E11, which differs from ad E22 on E12
        let mut g = gl11(5);
        g.set_pmap(0, vec![0, 1, 0, 0]);
        let r = g.check_axioms();
        for e in &r.entries {
            let names = r.witness_names(&e.name).map(|w| w.len());
            assert_eq!(names, e.witness.as_ref().map(Vec::len), "{}", e.name);
        }
        assert!(r.witness_names("restriction_a").is_none());
    }

    #[test]
    fn adjoint_of_e11() {
        let g = gl11(5);
        let ad = g.adjoint_matrix(&g.basis_vector(0)).unwrap();
        let f = g.field();
        let mut expected = Matrix::zeros(f, 4, 4);
        expected.set(2, 2, 1);
        expected.set(3, 3, f.neg(1));
        assert_eq!(ad, expected);
        assert!(g.adjoint_matrix(&[1, 0, 1, 0]).is_err());
    }

    #[test]
    fn p_power_examples() {
        let g = gl11(5);
        let f = g.field().clone();
        // central element E11 + E22
        assert_eq!(g.p_power(&[1, 1, 0, 0]).unwrap(), vec![1, 1, 0, 0]);
        for (i, (s, _)) in g.s_terms(&[1, 0, 0, 0], &[0, 1, 0, 0]).iter().zip(0..).enumerate() {
            assert!(s.iter().all(|&c| c == 0), "s_{} nonzero", i + 1);
        }
        assert_eq!(g.p_power(&[0, 0, 0, 0]).unwrap(), vec![0; 4]);
        // (c x)^{[p]} = c^p x^{[p]}
        let c = 3;
        let expect: Vec<u32> = g.pmap_basis(0).iter().map(|&v| f.mul(f.pow(c, 5), v)).collect();
        assert_eq!(g.p_power(&[c, 0, 0, 0]).unwrap(), expect);
        assert_eq!(g.p_power(&[0, 0, 1, 0]), Err(LieError::OddComponent));
    }

    #[test]
    fn odd_heisenberg_bracket() {
        let h = catalog("odd_heisenberg", 3).unwrap();
        assert_eq!(h.bracket_basis(1, 1), &[2, 0]);
        assert!(h.check_axioms().all_pass());
    }

    #[test]
    fn catalog_passes_for_small_primes() {
        for p in [3, 5, 7, 11] {
            for name in ["gl(1|1)", "gl(2|1)", "gl(2|0)", "abelian(1|0)", "abelian(2|2)", "odd_heisenberg"] {
                let r = catalog(name, p).unwrap().check_axioms();
                assert!(r.all_pass(), "{name} p={p}\n{r}");
            }
        }
        assert!(catalog("sl(2)", 3).is_err());
    }

    fn matrix_of_gl(g: &LieSuperAlgebraSpec, v: &[u32], size: usize) -> Matrix {
        // E_ij names give the matrix position
        let mut m = Matrix::zeros(g.field(), size, size);
        for (k, &c) in v.iter().enumerate() {
            let name = g.name(k);
            let digits: Vec<usize> = name[1..].chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect();
            m.set(digits[0] - 1, digits[1] - 1, c);
        }
        m
    }

    #[test]
    fn p_power_matches_matrix_power_on_gl21() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for p in [3u32, 5] {
            let g = catalog("gl(2|1)", p).unwrap();
            for _ in 0..25 {
                let mut v = vec![0u32; g.dim()];
                for c in v.iter_mut().take(g.even_dim()) {
                    *c = rng.gen_range(0..p);
                }
                let pv = g.p_power(&v).unwrap();
                let mat = matrix_of_gl(&g, &v, 3).pow(p as u64);
                assert_eq!(matrix_of_gl(&g, &pv, 3), mat);
                // axiom (b) beyond the basis
                let lhs = g.adjoint_matrix(&pv).unwrap();
                let rhs = g.adjoint_matrix(&v).unwrap().pow(p as u64);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn adjoint_is_linear() {
        let g = gl11(7);
        let u = vec![1, 3, 0, 0];
        let v = vec![4, 6, 0, 0];
        let f = g.field();
        let sum: Vec<u32> = u.iter().zip(&v).map(|(&a, &b)| f.add(a, b)).collect();
        assert_eq!(
            g.adjoint_matrix(&sum).unwrap(),
            g.adjoint_matrix(&u).unwrap().add(&g.adjoint_matrix(&v).unwrap())
        );
    }
}
