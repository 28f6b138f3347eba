//! Finite fields `F_p` (p an odd prime) and their small extensions `F_{p^e}`.
//!
//! Elements are stored as plain `u32` values. For the prime field the value is the residue
//! itself. For an extension the value is the coefficient vector of a polynomial in the
//! adjoined root, written in base `p` (lowest coefficient first), so that the prime subfield
//! is embedded as the values `0..p` in every extension of the same characteristic.

use std::fmt;
use std::sync::Arc;

use super::LinalgError;

/// Largest extension degree accepted.
pub const MAX_EXTENSION_DEGREE: u32 = 4;

struct FieldInner {
    p: u32,
    degree: u32,
    /// Monic modulus, lowest coefficient first; `[0, 1]` for the prime field.
    modulus: Vec<u32>,
    order: u32,
    /// `exp[i] = g^i` for a primitive element `g`; empty for the prime field.
    exp: Vec<u32>,
    /// Discrete logarithm, `log[0]` unused.
    log: Vec<u32>,
}

/// A finite field of odd characteristic, shared cheaply by cloning.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.degree, self.0.modulus)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_odd_prime(p: u32) -> Result<(), LinalgError> {
    if p == 2 || !is_prime(p as u64) {
        return Err(LinalgError::BadCharacteristic(p));
    }
    // keeps every product of two residues inside u64 and leaves room for the 3-digit encodings
    if p > 46_000 {
        return Err(LinalgError::BadCharacteristic(p));
    }
    Ok(())
}

// Polynomials over F_p, lowest coefficient first, no trailing zeros.
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = pow_mod(m[dm] as u64, (p - 2) as u64, p as u64) as u32;
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&out, m, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(degree as usize + 1);
        for _ in 0..degree {
            coeffs.push((code % p as u64) as u32);
            code /= p as u64;
        }
        coeffs.push(1);
        coeffs
    })
}

/// Brute-force irreducibility test: no monic factor of degree at most half the degree.
pub fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let m = poly_trim(modulus.to_vec());
    if m.len() < 2 {
        return false;
    }
    let deg = (m.len() - 1) as u32;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for f in monic_polys(p, d) {
            if poly_rem(&m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field `F_p`; `p` must be an odd prime.
    pub fn prime(p: u32) -> Result<Field, LinalgError> {
        check_odd_prime(p)?;
        Ok(Field(Arc::new(FieldInner {
            p,
            degree: 1,
            modulus: vec![0, 1],
            order: p,
            exp: Vec::new(),
            log: Vec::new(),
        })))
    }

    /// `F_p[t]/(modulus)`; the modulus is monic, lowest coefficient first, and is checked for
    /// irreducibility.
    pub fn extension(p: u32, modulus: &[u32]) -> Result<Field, LinalgError> {
        check_odd_prime(p)?;
        let m = poly_trim(modulus.iter().map(|&c| c % p).collect());
        if m.len() < 2 || m[m.len() - 1] != 1 {
            return Err(LinalgError::BadModulus(modulus.to_vec()));
        }
        let degree = (m.len() - 1) as u32;
        if degree == 1 {
            return Field::prime(p);
        }
        if degree > MAX_EXTENSION_DEGREE {
            return Err(LinalgError::BadModulus(modulus.to_vec()));
        }
        if !is_irreducible(p, &m) {
            return Err(LinalgError::Reducible(m));
        }
        let order = p.pow(degree);
        let decode = |mut v: u32| -> Vec<u32> {
            let mut c = Vec::with_capacity(degree as usize);
            for _ in 0..degree {
                c.push(v % p);
                v /= p;
            }
            poly_trim(c)
        };
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0u32, |acc, &d| acc * p + d) };
        // search for a primitive element
        for g in 2..order {
            let gp = decode(g);
            let mut exp = Vec::with_capacity(order as usize - 1);
            let mut cur = vec![1u32];
            let mut ok = true;
            for i in 0..order - 1 {
                let v = encode(&cur);
                if i > 0 && v == 1 {
                    ok = false;
                    break;
                }
                exp.push(v);
                cur = poly_mul_mod(&cur, &gp, &m, p);
            }
            if !ok {
                continue;
            }
            let mut log = vec![0u32; order as usize];
            for (i, &v) in exp.iter().enumerate() {
                log[v as usize] = i as u32;
            }
            return Ok(Field(Arc::new(FieldInner {
                p,
                degree,
                modulus: m,
                order,
                exp,
                log,
            })));
        }
        Err(LinalgError::Reducible(m))
    }

    /// `F_{p^e}` using the first monic irreducible polynomial of degree `e` in lexicographic order.
    pub fn with_degree(p: u32, e: u32) -> Result<Field, LinalgError> {
        check_odd_prime(p)?;
        if e == 0 || e > MAX_EXTENSION_DEGREE {
            return Err(LinalgError::BadModulus(vec![]));
        }
        if e == 1 {
            return Field::prime(p);
        }
        let m = monic_polys(p, e)
            .find(|f| is_irreducible(p, f))
            .expect("irreducible polynomials exist in every degree");
        Field::extension(p, &m)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.0.degree == 1
    }

    /// The prime subfield.
    pub fn prime_subfield(&self) -> Field {
        if self.is_prime_field() {
            self.clone()
        } else {
            Field::prime(self.0.p).expect("characteristic already validated")
        }
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    /// Signed representative in `(-p/2, p/2]` of a prime-subfield element.
    pub fn to_signed(&self, v: u32) -> Option<i64> {
        if v >= self.0.p {
            return None;
        }
        let p = self.0.p as i64;
        let v = v as i64;
        Some(if v > p / 2 { v - p } else { v })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.degree == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.0.degree {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.degree == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.0.degree {
                out += ((p - a % p) % p) * place;
                a /= p;
                place *= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.0.degree == 1 {
            ((a as u64 * b as u64) % self.0.p as u64) as u32
        } else if a == 0 || b == 0 {
            0
        } else {
            let n = self.0.order as u64 - 1;
            let l = (self.0.log[a as usize] as u64 + self.0.log[b as usize] as u64) % n;
            self.0.exp[l as usize]
        }
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        if self.0.degree == 1 {
            pow_mod(a as u64, self.0.p as u64 - 2, self.0.p as u64) as u32
        } else {
            let n = self.0.order - 1;
            let l = self.0.log[a as usize];
            self.0.exp[((n - l) % n) as usize]
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All field elements in increasing value order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.order
    }

    /// `dst += c * src` elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [u32], c: u32, src: &[u32]) {
        if c == 0 {
            return;
        }
        if self.0.degree == 1 {
            let p = self.0.p as u64;
            let c = c as u64;
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = ((*d as u64 + c * s as u64) % p) as u32;
                }
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = self.add(*d, self.mul(c, s));
                }
            }
        }
    }

    /// `v *= c` elementwise.
    #[inline]
    pub fn scale_in_place(&self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        if self.0.degree == 1 {
            let p = self.0.p as u64;
            let mut acc = 0u64;
            for (&x, &y) in a.iter().zip(b) {
                acc = (acc + x as u64 * y as u64) % p;
            }
            acc as u32
        } else {
            a.iter()
                .zip(b)
                .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
        }
    }
}

/// A field element paired with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    pub field: Field,
    pub value: u32,
}

impl Scalar {
    pub fn new(field: &Field, value: u32) -> Result<Scalar, LinalgError> {
        if value >= field.order() {
            return Err(LinalgError::OutOfRange(value));
        }
        Ok(Scalar {
            field: field.clone(),
            value,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn extension_field_axioms() {
        let f = Field::with_degree(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, 4, 8] {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // prime subfield embeds as 0..p
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(f.mul(a, b), (a * b) % 3);
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 - 1 = (t - 1)(t + 1)
        assert!(matches!(
            Field::extension(5, &[4, 0, 1]),
            Err(LinalgError::Reducible(_))
        ));
        // t^2 + 1 is irreducible mod 3
        assert!(Field::extension(3, &[1, 0, 1]).is_ok());
        // t^4 + 1 = (t^2 + t + 2)(t^2 + 2t + 2) mod 3: no roots but reducible
        assert!(Field::extension(3, &[1, 0, 0, 0, 1]).is_err());
    }
}
