//! Table-driven arithmetic in GF(q) for prime powers q ≤ 32.
//!
//! Elements are the integers `0..q`. For `q = p^m` with `m > 1`, the
//! integer `Σ c_i p^i` stands for the polynomial `Σ c_i x^i` reduced
//! modulo a fixed irreducible polynomial of degree `m`.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub const MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} is outside the supported range 2..=32")]
    Unsupported(usize),
    #[error("tables for GF({q}) fail the field axiom: {axiom}")]
    Axiom { q: usize, axiom: &'static str },
}

/// Element of a [`FiniteField`]; only meaningful with the field it came from.
pub type FieldElement = u8;

/// Reduction polynomials, lowest coefficient first, monic leading term omitted.
fn reduction_polynomial(q: usize) -> Option<&'static [u8]> {
    Some(match q {
        4 => &[1, 1],          // x^2 + x + 1
        8 => &[1, 1, 0],       // x^3 + x + 1
        9 => &[1, 0],          // x^2 + 1
        16 => &[1, 1, 0, 0],   // x^4 + x + 1
        25 => &[2, 1],         // x^2 + x + 2
        27 => &[1, 2, 0],      // x^3 + 2x + 1
        32 => &[1, 0, 1, 0, 0], // x^5 + x^2 + 1
        _ => return None,
    })
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    q: usize,
    p: usize,
    m: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl core::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GF({}) = GF({}^{})", self.q, self.p, self.m)
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn digits(mut a: usize, p: usize, m: usize) -> Vec<usize> {
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(a: usize, b: usize, p: usize, m: usize, modulus: &[u8]) -> usize {
    let (da, db) = (digits(a, p, m), digits(b, p, m));
    let mut prod = vec![0usize; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    // x^m ≡ -(modulus) ; reduce from the top
    for deg in (m..2 * m).rev() {
        let c = prod[deg];
        if c != 0 {
            prod[deg] = 0;
            for (i, &r) in modulus.iter().enumerate() {
                let t = deg - m + i;
                prod[t] = (prod[t] + p * p - c * r as usize % p) % p;
            }
        }
    }
    undigits(&prod[..m], p)
}

impl FiniteField {
    /// Builds GF(q) and verifies the field axioms on the tables.
    pub fn new(q: usize) -> Result<Self, FieldError> {
        if !(2..=MAX_ORDER).contains(&q) {
            return Err(if prime_power(q).is_some() { FieldError::Unsupported(q) } else { FieldError::NotPrimePower(q) });
        }
        let (p, m) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (s, t) = if m == 1 {
                    ((a + b) % p, (a * b) % p)
                } else {
                    let modulus = reduction_polynomial(q).ok_or(FieldError::Unsupported(q))?;
                    let s: Vec<usize> =
                        digits(a, p, m).iter().zip(digits(b, p, m)).map(|(x, y)| (x + y) % p).collect();
                    (undigits(&s, p), poly_mul(a, b, p, m, modulus))
                };
                add[a * q + b] = s as u8;
                mul[a * q + b] = t as u8;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap_or(0) as u8).collect();
        let inv = (0..q).map(|a| (1..q).find(|&b| mul[a * q + b] == 1).unwrap_or(0) as u8).collect();
        let field = Self { q, p, m, add, mul, neg, inv };
        field.verify()?;
        Ok(field)
    }

    fn verify(&self) -> Result<(), FieldError> {
        let q = self.q;
        let fail = |axiom| Err(FieldError::Axiom { q, axiom });
        for a in 0..q as u8 {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return fail("identities");
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive inverse");
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return fail("multiplicative inverse");
            }
            for b in 0..q as u8 {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q as u8 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q as u8
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `inv(0)` is 0 by convention.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.inv[a as usize]
    }

    /// `Σ x_i y_i`
    pub fn dot(&self, x: &[FieldElement; 3], y: &[FieldElement; 3]) -> FieldElement {
        x.iter().zip(y).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

/// `make_field(q)`.
pub fn make_field(q: usize) -> Result<FiniteField, FieldError> {
    FiniteField::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = make_field(5).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(4, 4), 3);
        assert_eq!(f.inv(2), 3);
        assert_eq!((f.characteristic(), f.degree()), (5, 1));
    }

    #[test]
    fn gf4() {
        let f = make_field(4).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(2, 2), 3); // x^2 = x + 1
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(make_field(6), Err(FieldError::NotPrimePower(6)));
        assert_eq!(make_field(1), Err(FieldError::NotPrimePower(1)));
        assert_eq!(make_field(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(make_field(37), Err(FieldError::Unsupported(37)));
        assert_eq!(make_field(64), Err(FieldError::Unsupported(64)));
    }

    #[test]
    fn every_supported_order_builds() {
        let supported = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32];
        for q in 2..=32 {
            assert_eq!(make_field(q).is_ok(), supported.contains(&q), "q = {q}");
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [8, 9, 16, 25, 27, 32] {
            let f = make_field(q).unwrap();
            let has_generator = (1..q as u8).any(|g| {
                let mut x = 1u8;
                let mut order = 0;
                loop {
                    x = f.mul(x, g);
                    order += 1;
                    if x == 1 {
                        break;
                    }
                }
                order == q - 1
            });
            assert!(has_generator, "GF({q})");
        }
    }
}
