//! Exact arithmetic in the small fields GF(q), q in {2, 3, 4, 5, 7, 8, 9}.
//!
//! Elements are the integers `0..q`. For an extension field GF(p^m) the
//! integer `v = c0 + c1 p + ... + c_{m-1} p^{m-1}` stands for the polynomial
//! `c0 + c1 x + ... + c_{m-1} x^{m-1}` reduced modulo a fixed monic
//! irreducible polynomial of degree `m`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Largest field order with table support.
pub const MAX_ORDER: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} is not supported (q must be at most {MAX_ORDER})")]
    UnsupportedOrder(u32),
    #[error("element {value} is out of range for GF({q})")]
    OutOfRange { value: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

/// An element of a [`FieldSpec`], stored as its canonical integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u8);

impl FieldElement {
    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

type Table = [[u8; MAX_ORDER as usize]; MAX_ORDER as usize];

/// The alphabet GF(q) with precomputed operation tables.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    m: u8,
    // c0..cm of the modulus; only meaningful when m > 1.
    modulus: [u8; 4],
    add: Table,
    mul: Table,
    neg: [u8; MAX_ORDER as usize],
    inv: [u8; MAX_ORDER as usize],
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus())
            .finish()
    }
}

/// Splits `q` into `(p, m)` with `q = p^m`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
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

/// Returns `{ x^2 mod p : 1 <= x < p }` for an odd prime `p`.
pub fn quadratic_residues(p: u64) -> Result<BTreeSet<u64>, FieldError> {
    if p == 2 || !is_prime(p) {
        return Err(FieldError::NotOddPrime(p));
    }
    Ok((1..p).map(|x| x * x % p).collect())
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<FieldSpec, FieldError> {
        let (p, m) = prime_power(q as u64).ok_or(FieldError::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(FieldError::UnsupportedOrder(q));
        }
        let (p, m) = (p as u8, m as u8);
        let modulus = if m > 1 { smallest_irreducible(p, m) } else { [0; 4] };
        let mut spec =
            FieldSpec { q: q as u8, p, m, modulus, add: [[0; 9]; 9], mul: [[0; 9]; 9], neg: [0; 9], inv: [0; 9] };
        for a in 0..spec.q {
            for b in 0..spec.q {
                spec.add[a as usize][b as usize] = spec.poly_add(a, b);
                spec.mul[a as usize][b as usize] = spec.poly_mul(a, b);
            }
        }
        for a in 0..spec.q {
            spec.neg[a as usize] =
                (0..spec.q).find(|&b| spec.add[a as usize][b as usize] == 0).expect("additive inverse");
            if a != 0 {
                spec.inv[a as usize] =
                    (1..spec.q).find(|&b| spec.mul[a as usize][b as usize] == 1).expect("multiplicative inverse");
            }
        }
        debug_assert!(spec.check_axioms().is_ok());
        Ok(spec)
    }

    pub fn binary() -> FieldSpec {
        FieldSpec::new(2).expect("GF(2)")
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.m as u32
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Coefficients `c0 ..= cm` of the defining polynomial; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        if self.m > 1 {
            &self.modulus[..=self.m as usize]
        } else {
            &[]
        }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value < self.q as u32 {
            Ok(FieldElement(value as u8))
        } else {
            Err(FieldError::OutOfRange { value, q: self.q as u32 })
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.sum(a.0, b.0))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.product(a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(FieldElement(self.inv[a.0 as usize]))
        }
    }

    #[inline]
    pub(crate) fn sum(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    #[inline]
    pub(crate) fn product(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    #[inline]
    pub(crate) fn negate(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub(crate) fn inverse(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// Checks every field axiom over the full tables.
    pub fn check_axioms(&self) -> Result<(), String> {
        let q = self.q;
        for a in 0..q {
            if self.sum(a, 0) != a || self.product(a, 1) != a || self.product(a, 0) != 0 {
                return Err(format!("identity fails at {a}"));
            }
            if self.sum(a, self.negate(a)) != 0 {
                return Err(format!("additive inverse fails at {a}"));
            }
            if a != 0 && self.product(a, self.inverse(a)) != 1 {
                return Err(format!("multiplicative inverse fails at {a}"));
            }
            for b in 0..q {
                if self.sum(a, b) != self.sum(b, a) || self.product(a, b) != self.product(b, a) {
                    return Err(format!("commutativity fails at ({a}, {b})"));
                }
                for c in 0..q {
                    if self.sum(self.sum(a, b), c) != self.sum(a, self.sum(b, c)) {
                        return Err(format!("additive associativity fails at ({a}, {b}, {c})"));
                    }
                    if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)) {
                        return Err(format!("multiplicative associativity fails at ({a}, {b}, {c})"));
                    }
                    if self.product(a, self.sum(b, c)) != self.sum(self.product(a, b), self.product(a, c)) {
                        return Err(format!("distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    fn digits(&self, v: u8) -> [u8; 4] {
        let mut out = [0; 4];
        let mut v = v;
        for slot in out.iter_mut().take(self.m as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
        out
    }

    fn digits_value(&self, digits: &[u8]) -> u8 {
        digits.iter().take(self.m as usize).rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn poly_add(&self, a: u8, b: u8) -> u8 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u8> = (0..4).map(|i| (da[i] + db[i]) % self.p).collect();
        self.digits_value(&sum)
    }

    fn poly_mul(&self, a: u8, b: u8) -> u8 {
        let m = self.m as usize;
        let p = self.p as u32;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = [0u32; 8];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u32 * db[j] as u32) % p;
            }
        }
        // x^m = -(c0 + c1 x + ... + c_{m-1} x^{m-1})
        for deg in (m..2 * m - 1).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..m {
                let c = self.modulus[i] as u32;
                prod[deg - m + i] = (prod[deg - m + i] + (p - c % p) * lead) % p;
            }
        }
        let digits: Vec<u8> = prod[..m].iter().map(|&c| c as u8).collect();
        self.digits_value(&digits)
    }
}

/// Smallest monic irreducible polynomial of degree `m <= 3` over GF(p),
/// ordered by the integer `c0 + c1 p + ... + c_{m-1} p^{m-1}`.
fn smallest_irreducible(p: u8, m: u8) -> [u8; 4] {
    assert!((2..=3).contains(&m));
    let p32 = p as u32;
    for v in 0..p32.pow(m as u32) {
        let mut coeffs = [0u8; 4];
        let mut rest = v;
        for c in coeffs.iter_mut().take(m as usize) {
            *c = (rest % p32) as u8;
            rest /= p32;
        }
        coeffs[m as usize] = 1;
        // Degree 2 and 3 polynomials are irreducible iff they have no root.
        let has_root = (0..p32).any(|x| {
            let value = coeffs[..=m as usize].iter().rev().fold(0u32, |acc, &c| (acc * x + c as u32) % p32);
            value == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUPPORTED: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

    #[test]
    fn supported_orders_are_fields() {
        for q in SUPPORTED {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(f.check_axioms(), Ok(()), "GF({q})");
            for a in f.elements().filter(|a| a.value() != 0) {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.inv(inv).unwrap(), a);
                assert_eq!(f.mul(a, inv), f.one());
            }
        }
    }

    #[test]
    fn prime_fields_match_modular_arithmetic() {
        for q in [2u32, 3, 5, 7] {
            let f = FieldSpec::new(q).unwrap();
            for a in 0..q {
                for b in 0..q {
                    let (ea, eb) = (f.element(a).unwrap(), f.element(b).unwrap());
                    assert_eq!(f.add(ea, eb).value() as u32, (a + b) % q);
                    assert_eq!(f.mul(ea, eb).value() as u32, (a * b) % q);
                }
            }
        }
    }

    #[test]
    fn gf2_is_xor_and() {
        let f = FieldSpec::binary();
        for a in 0..2u8 {
            for b in 0..2u8 {
                assert_eq!(f.sum(a, b), a ^ b);
                assert_eq!(f.product(a, b), a & b);
            }
        }
        assert!(f.modulus().is_empty());
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = FieldSpec::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f.product(2, 2), 3);
        assert_eq!(f.neg(f.element(3).unwrap()).value(), 3);
    }

    #[test]
    fn extension_moduli() {
        assert_eq!(FieldSpec::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn small_examples() {
        let f3 = FieldSpec::new(3).unwrap();
        let two = f3.element(2).unwrap();
        assert_eq!(f3.add(two, two).value(), 1);
        let f5 = FieldSpec::new(5).unwrap();
        assert_eq!(f5.inv(f5.element(2).unwrap()).unwrap().value(), 3);
        assert_eq!(f5.inv(f5.zero()), Err(FieldError::DivisionByZero));
        assert!(f5.element(5).is_err());
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(FieldSpec::new(6), Err(FieldError::NotPrimePower(6)));
        assert_eq!(FieldSpec::new(1), Err(FieldError::NotPrimePower(1)));
        assert_eq!(FieldSpec::new(11), Err(FieldError::UnsupportedOrder(11)));
        assert_eq!(FieldSpec::new(16), Err(FieldError::UnsupportedOrder(16)));
    }

    #[test]
    fn residues() {
        assert_eq!(quadratic_residues(7).unwrap(), BTreeSet::from([1, 2, 4]));
        assert_eq!(quadratic_residues(3).unwrap(), BTreeSet::from([1]));
        // independent enumeration: x is a residue iff some y has y*y = x (mod 19)
        let brute: BTreeSet<u64> = (1..19u64).filter(|&x| (1..19u64).any(|y| (y * y) % 19 == x)).collect();
        let qr = quadratic_residues(19).unwrap();
        assert_eq!(qr.len(), 9);
        assert_eq!(qr, brute);
        assert!(quadratic_residues(2).is_err());
        assert!(quadratic_residues(15).is_err());
    }
}
