use super::Field;

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<u32>);

impl Poly {
    pub fn new(mut c: Vec<u32>) -> Poly {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, f: &Field, x: u32) -> u32 {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![0u32; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).copied().unwrap_or(0);
        Poly::new((0..n).map(|i| f.sub(get(self, i), get(other, i))).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(d.0[dd]);
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut q = vec![0u32; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], lead_inv);
            q[k] = c;
            if c != 0 {
                for (j, &dj) in d.0.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(c, dj));
                }
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// `(g, s, t)` with `g = s a + t b` monic.
    pub fn ext_gcd(f: &Field, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly(vec![1]), Poly(Vec::new()));
        let (mut t0, mut t1) = (Poly(Vec::new()), Poly(vec![1]));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1);
            let s2 = s0.sub(f, &q.mul(f, &s1));
            let t2 = t0.sub(f, &q.mul(f, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if let Some(d) = r0.degree() {
            let inv = f.inv(r0.0[d]);
            let scale = |p: &Poly| Poly::new(p.0.iter().map(|&c| f.mul(c, inv)).collect());
            return (scale(&r0), scale(&s0), scale(&t0));
        }
        (r0, s0, t0)
    }

    /// Roots in the field with their multiplicities, by trial evaluation.
    pub fn roots(&self, f: &Field) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for x in f.elements() {
            let lin = Poly(vec![f.neg(x), 1]);
            let mut cur = self.clone();
            let mut mult = 0;
            while cur.degree().unwrap_or(0) > 0 && cur.eval(f, x) == 0 {
                cur = cur.divrem(f, &lin).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((x, mult));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_roots() {
        let f = Field::prime(5).unwrap();
        // (t-1)^2 (t-3)
        let a = Poly::new(vec![1, 3, 1]).mul(&f, &Poly::new(vec![2, 1]));
        assert_eq!(a.roots(&f), vec![(1, 2), (3, 1)]);
        let b = Poly::new(vec![2, 1]).mul(&f, &Poly::new(vec![1, 0, 1]));
        let (g, s, t) = Poly::ext_gcd(&f, &a, &b);
        assert_eq!(g, Poly::new(vec![2, 1]));
        let lhs = s.mul(&f, &a);
        let rhs = t.mul(&f, &b);
        let sum = Poly::new(
            (0..lhs.0.len().max(rhs.0.len()))
                .map(|i| f.add(*lhs.0.get(i).unwrap_or(&0), *rhs.0.get(i).unwrap_or(&0)))
                .collect(),
        );
        assert_eq!(sum, g);
    }
}
