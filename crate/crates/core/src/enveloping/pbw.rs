use std::collections::BTreeMap;
use std::rc::Rc;

use super::algebra::{FiniteDimSuperalgebra, PBWMonomial, PbwData, SparseVec};
use super::EnvelopingError;
use crate::linalg::Field;
use crate::liesuper::LieSuperAlgebraSpec;

/// Memoized left multiplication of PBW monomials by generators.
///
/// Monomials are addressed by a mixed-radix code: generator `i` has radix `p` if even and
/// `2` if odd, with generator 0 least significant.
pub(crate) struct Straightener<'a> {
    spec: &'a LieSuperAlgebraSpec,
    field: Field,
    radix: Vec<u32>,
    place: Vec<usize>,
    total: usize,
    memo: BTreeMap<(usize, usize), Rc<SparseVec>>,
    in_progress: std::collections::BTreeSet<(usize, usize)>,
    half: u32,
}

impl<'a> Straightener<'a> {
    pub fn new(spec: &'a LieSuperAlgebraSpec) -> Straightener<'a> {
        let p = spec.p();
        let radix: Vec<u32> = (0..spec.dim())
            .map(|i| if i < spec.even_dim() { p } else { 2 })
            .collect();
        let mut place = Vec::with_capacity(radix.len());
        let mut acc = 1usize;
        for &r in &radix {
            place.push(acc);
            acc = acc.saturating_mul(r as usize);
        }
        let field = spec.field().clone();
        let half = field.inv(2);
        Straightener {
            spec,
            field,
            radix,
            place,
            total: acc,
            memo: BTreeMap::new(),
            in_progress: Default::default(),
            half,
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn exponent(&self, code: usize, g: usize) -> u32 {
        ((code / self.place[g]) % self.radix[g] as usize) as u32
    }

    pub fn monomial(&self, code: usize) -> PBWMonomial {
        let m = self.spec.even_dim();
        let exps: Vec<u8> = (0..self.radix.len()).map(|g| self.exponent(code, g) as u8).collect();
        PBWMonomial {
            even: exps[..m].to_vec(),
            odd: exps[m..].to_vec(),
        }
    }

    pub fn code(&self, mono: &PBWMonomial) -> usize {
        mono.exponents()
            .enumerate()
            .map(|(g, a)| a as usize * self.place[g])
            .sum()
    }

    fn first_generator(&self, code: usize) -> Option<usize> {
        (0..self.radix.len()).find(|&g| self.exponent(code, g) != 0)
    }

    fn add_into(&self, acc: &mut BTreeMap<u32, u32>, c: u32, v: &[(u32, u32)]) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        for &(k, x) in v {
            let e = acc.entry(k).or_insert(0);
            *e = f.add(*e, f.mul(c, x));
        }
    }

    fn finish(acc: BTreeMap<u32, u32>) -> SparseVec {
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    /// `sum_k c_k g_k * code` for a Lie element `c`.
    fn lie_times(&mut self, lie: &[u32], code: usize) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (k, &c) in lie.iter().enumerate() {
            if c != 0 {
                let r = self.gen_times(k, code);
                self.add_into(&mut acc, c, &r);
            }
        }
        Self::finish(acc)
    }

    /// `g_g * v` for a sparse combination of monomials.
    pub fn gen_times_vec(&mut self, g: usize, v: &[(u32, u32)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for &(code, c) in v {
            let r = self.gen_times(g, code as usize);
            self.add_into(&mut acc, c, &r);
        }
        Self::finish(acc)
    }

    /// PBW normal form of `g_g * monomial(code)`.
    pub fn gen_times(&mut self, g: usize, code: usize) -> Rc<SparseVec> {
        if let Some(r) = self.memo.get(&(g, code)) {
            return r.clone();
        }
        assert!(
            self.in_progress.insert((g, code)),
            "straightening revisited generator {g} on monomial {code}"
        );
        let result = self.compute(g, code);
        self.in_progress.remove(&(g, code));
        let rc = Rc::new(result);
        self.memo.insert((g, code), rc.clone());
        rc
    }

    fn compute(&mut self, g: usize, code: usize) -> SparseVec {
        let spec = self.spec;
        let f = self.field.clone();
        let Some(h) = self.first_generator(code) else {
            return vec![(self.place[g] as u32, 1)];
        };
        if g < h {
            return vec![((code + self.place[g]) as u32, 1)];
        }
        if g == h {
            let a = self.exponent(code, g);
            if a + 1 < self.radix[g] {
                return vec![((code + self.place[g]) as u32, 1)];
            }
            let rest = code - a as usize * self.place[g];
            if g < spec.even_dim() {
                // x^p = x^{[p]}
                let pm = spec.pmap_basis(g).to_vec();
                return self.lie_times(&pm, rest);
            }
            // y y = ½ [y, y]
            let half_sq: Vec<u32> = spec
                .bracket_basis(g, g)
                .iter()
                .map(|&c| f.mul(c, self.half))
                .collect();
            return self.lie_times(&half_sq, rest);
        }
        // g > h: g h w' = (-1)^{|g||h|} h (g w') + [g, h] w'
        let rest = code - self.place[h];
        let gw = self.gen_times(g, rest);
        let moved = self.gen_times_vec(h, &gw);
        let sign = if spec.parity(g).koszul(spec.parity(h)) {
            f.neg(1)
        } else {
            1
        };
        let br = spec.bracket_basis(g, h).to_vec();
        let bracket_part = self.lie_times(&br, rest);
        let mut acc = BTreeMap::new();
        self.add_into(&mut acc, sign, &moved);
        self.add_into(&mut acc, 1, &bracket_part);
        Self::finish(acc)
    }
}

/// PBW normal form of `coefficient * g_{w_1} g_{w_2} ... g_{w_k}`.
pub fn normal_form(
    spec: &LieSuperAlgebraSpec,
    word: &[usize],
    coefficient: u32,
) -> Result<Vec<(PBWMonomial, u32)>, EnvelopingError> {
    if let Some(&bad) = word.iter().find(|&&g| g >= spec.dim()) {
        return Err(EnvelopingError::BadGenerator(bad));
    }
    let mut st = Straightener::new(spec);
    let mut cur: SparseVec = vec![(0, 1)];
    for &g in word.iter().rev() {
        cur = st.gen_times_vec(g, &cur);
    }
    let f = spec.field();
    let mut out: Vec<(PBWMonomial, u32)> = cur
        .into_iter()
        .map(|(code, c)| (st.monomial(code as usize), f.mul(c, coefficient)))
        .filter(|&(_, c)| c != 0)
        .collect();
    out.sort_by(|a, b| pbw_order(&a.0, &b.0));
    Ok(out)
}

/// Basis order: total degree, then lexicographically with earlier generators first.
pub(crate) fn pbw_order(a: &PBWMonomial, b: &PBWMonomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// Largest algebra `build_uea` will construct.
pub const MAX_UEA_DIM: usize = 4096;

/// Builds `u(g)` with its PBW basis and full multiplication table.
pub fn build_uea(spec: &LieSuperAlgebraSpec) -> Result<FiniteDimSuperalgebra, EnvelopingError> {
    let report = spec.check_axioms();
    if !report.all_pass() {
        return Err(EnvelopingError::AxiomsFailed(Box::new(report)));
    }
    let mut st = Straightener::new(spec);
    let total = st.total();
    if total > MAX_UEA_DIM {
        return Err(EnvelopingError::TooLarge { dim: total, limit: MAX_UEA_DIM });
    }
    let mut monomials: Vec<PBWMonomial> = (0..total).map(|c| st.monomial(c)).collect();
    monomials.sort_by(pbw_order);
    let mut index_of_code = vec![0u32; total];
    let codes: Vec<usize> = monomials.iter().map(|m| st.code(m)).collect();
    for (i, &c) in codes.iter().enumerate() {
        index_of_code[c] = i as u32;
    }
    let f = spec.field().clone();
    let to_index = |v: &[(u32, u32)]| -> SparseVec {
        let mut out: SparseVec = v.iter().map(|&(c, x)| (index_of_code[c as usize], x)).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    };

    // rows are filled in basis order, which is by increasing degree, so u' is always ready
    let mut table: Vec<SparseVec> = vec![Vec::new(); total * total];
    for (u, mono) in monomials.iter().enumerate() {
        let code_u = codes[u];
        let Some(g1) = st.first_generator(code_u) else {
            for w in 0..total {
                table[u * total + w] = vec![(w as u32, 1)];
            }
            continue;
        };
        let rest_code = code_u - st.place[g1];
        let rest = index_of_code[rest_code] as usize;
        debug_assert!(monomials[rest].degree() < mono.degree());
        for w in 0..total {
            // u w = g1 (u' w), with u' w read back in code space
            let uw: SparseVec = table[rest * total + w]
                .iter()
                .map(|&(k, c)| (codes[k as usize] as u32, c))
                .collect();
            let prod = st.gen_times_vec(g1, &uw);
            table[u * total + w] = to_index(&prod);
        }
    }
    let parities = monomials.iter().map(|m| m.parity()).collect();
    let labels = monomials.iter().map(|m| m.render(spec)).collect();
    let generator_index: Vec<usize> = (0..spec.dim())
        .map(|g| index_of_code[st.place[g]] as usize)
        .collect();
    let factors = codes
        .iter()
        .map(|&c| {
            st.first_generator(c)
                .map(|g| (g, index_of_code[c - st.place[g]] as usize))
        })
        .collect();
    let alg = FiniteDimSuperalgebra::from_table(&f, parities, labels, 0, table, generator_index.clone());
    Ok(alg.with_pbw(
        PbwData {
            spec: spec.clone(),
            monomials,
            generator_index,
        },
        factors,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::catalog;

    fn mono(even: &[u8], odd: &[u8]) -> PBWMonomial {
        PBWMonomial {
            even: even.to_vec(),
            odd: odd.to_vec(),
        }
    }

    #[test]
    fn odd_heisenberg_y_squared() {
        let h = catalog("odd_heisenberg", 3).unwrap();
        let nf = normal_form(&h, &[1, 1], 1).unwrap();
        assert_eq!(nf, vec![(mono(&[1], &[0]), 1)]);
    }

    #[test]
    fn gl11_e21_e12() {
        // E21 E12 = -E12 E21 + E11 + E22
        let g = catalog("gl(1|1)", 5).unwrap();
        let nf = normal_form(&g, &[3, 2], 1).unwrap();
        let f = g.field();
        let mut expect = vec![
            (mono(&[1, 0], &[0, 0]), 1),
            (mono(&[0, 1], &[0, 0]), 1),
            (mono(&[0, 0], &[1, 1]), f.neg(1)),
        ];
        expect.sort_by(|a, b| pbw_order(&a.0, &b.0));
        assert_eq!(nf, expect);
    }

    #[test]
    fn abelian_cube_vanishes() {
        let a = catalog("abelian(1|0)", 3).unwrap();
        assert!(normal_form(&a, &[0, 0, 0], 1).unwrap().is_empty());
        assert!(normal_form(&a, &[7], 1).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_uea(&catalog("gl(1|1)", 5).unwrap()).unwrap().dim(), 100);
        assert_eq!(build_uea(&catalog("abelian(0|2)", 3).unwrap()).unwrap().dim(), 4);
        assert_eq!(build_uea(&catalog("odd_heisenberg", 3).unwrap()).unwrap().dim(), 6);
    }

    #[test]
    fn table_agrees_with_normal_form_of_words() {
        // independent path: straighten the concatenated word from scratch
        let g = catalog("gl(1|1)", 3).unwrap();
        let a = build_uea(&g).unwrap();
        let pbw = a.pbw().unwrap();
        let word_of = |m: &PBWMonomial| -> Vec<usize> {
            m.exponents()
                .enumerate()
                .flat_map(|(i, e)| std::iter::repeat_n(i, e as usize))
                .collect()
        };
        for i in (0..a.dim()).step_by(5) {
            for j in (0..a.dim()).step_by(3) {
                let mut w = word_of(&pbw.monomials[i]);
                w.extend(word_of(&pbw.monomials[j]));
                let nf = normal_form(&g, &w, 1).unwrap();
                let expect: SparseVec = {
                    let mut v: Vec<(u32, u32)> = nf
                        .iter()
                        .map(|(m, c)| (pbw.index_of(m).unwrap() as u32, *c))
                        .collect();
                    v.sort();
                    v
                };
                assert_eq!(a.mul_basis(i, j), expect.as_slice());
            }
        }
    }

    #[test]
    fn rejects_failing_spec() {
        let mut g = catalog("gl(1|1)", 5).unwrap();
        g.set_bracket(0, 2, vec![0, 0, 2, 0]);
        assert!(matches!(build_uea(&g), Err(EnvelopingError::AxiomsFailed(_))));
    }
}
