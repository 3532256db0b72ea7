//! Univariate polynomials over GF(p) in the delay indeterminate `d`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeField;
use crate::{Error, Result};

/// A polynomial `c0 + c1 d + c2 d^2 + ...` with no trailing zero
/// coefficients; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Coefficients low to high, checked to lie in `[0, p)`.
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&v) = coeffs.iter().find(|&&v| v >= field.modulus()) {
            return Err(Error::ValueOutOfRange { value: u64::from(v), modulus: field.modulus() });
        }
        Ok(Poly::from_raw(field, coeffs))
    }

    /// Coefficients low to high, reduced mod p.
    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Poly::from_raw(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub(crate) fn from_raw(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Poly::from_raw(field, vec![c % field.modulus()])
    }

    /// `c d^e`.
    pub fn monomial(field: PrimeField, c: u32, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c % field.modulus();
        Poly::from_raw(field, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `d^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn delay(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let k = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_raw(k, (0..len).map(|i| k.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let k = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_raw(k, (0..len).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let k = self.field;
        Poly::from_raw(k, self.coeffs.iter().map(|&x| k.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let k = self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                k.axpy(&mut out[i..i + other.coeffs.len()], a, &other.coeffs);
            }
        }
        Poly::from_raw(k, out)
    }

    /// Multiplies by `d^e`.
    pub fn shift_up(&self, e: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; e];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field, coeffs }
    }

    /// Divides by `d^e`; the low coefficients must be zero.
    pub fn shift_down(&self, e: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(e).all(|&c| c == 0));
        Poly::from_raw(self.field, self.coeffs.iter().skip(e).copied().collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let k = self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = k.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(k), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = k.mul(rem[i + dd], inv);
            quot[i] = c;
            if c != 0 {
                let nc = k.neg(c);
                k.axpy(&mut rem[i..=i + dd], nc, &divisor.coeffs);
            }
        }
        rem.truncate(dd);
        (Poly::from_raw(k, quot), Poly::from_raw(k, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient, `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple of nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        self.mul(other).div_exact(&g).expect("gcd divides the product").monic()
    }

    pub fn eval(&self, x: u32) -> u32 {
        let k = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, x), c))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Low to high with explicit powers: `3 + 5*d^2`, `d^1`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => write!(f, "d^{i}")?,
                _ => write!(f, "{c}*d^{i}")?,
            }
        }
        Ok(())
    }
}
