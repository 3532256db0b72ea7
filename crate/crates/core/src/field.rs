//! Exact linear algebra over prime fields GF(p).
//!
//! Matrix entries are stored as canonical residues `u32` in `[0, p)`, with
//! the field carried once per matrix. [`Fe`] is the standalone element type
//! with operator overloads, used where single values cross an API boundary.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Error, Result};

/// Largest supported modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// The prime field GF(p), `2 <= p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Checked conversion of a canonical residue.
    pub fn elem(self, value: u64) -> Result<Fe> {
        if value >= u64::from(self.p) {
            return Err(Error::ValueOutOfRange { value, modulus: self.p });
        }
        Ok(Fe { value: value as u32, field: self })
    }

    /// Reduces any integer into the field.
    pub fn from_i64(self, value: i64) -> Fe {
        Fe { value: self.reduce(value), field: self }
    }

    #[inline]
    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.p)) as u32
    }

    pub fn zero(self) -> Fe {
        Fe { value: 0, field: self }
    }

    pub fn one(self) -> Fe {
        Fe { value: 1 % self.p, field: self }
    }

    /// All elements in increasing residue order.
    pub fn elements(self) -> impl Iterator<Item = Fe> {
        (0..self.p).map(move |value| Fe { value, field: self })
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = u64::from(a) + u64::from(b);
        (s % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        let s = u64::from(a) + u64::from(self.p) - u64::from(b);
        (s % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in {self}");
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a % self.p));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce(t0)
    }

    #[inline]
    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        debug_assert_eq!(a.len(), b.len());
        let p = u64::from(self.p);
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + u64::from(x) * u64::from(y)) % p;
        }
        acc as u32
    }

    /// `dst += c * src`.
    pub fn axpy(self, dst: &mut [u32], c: u32, src: &[u32]) {
        debug_assert_eq!(dst.len(), src.len());
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(c, s));
        }
    }

    pub fn scale(self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// `p^e` as an unbounded count, saturating at `u128::MAX`.
    pub fn count(self, e: usize) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.saturating_mul(u128::from(self.p));
        }
        acc
    }
}

/// An element of a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fe {
    value: u32,
    field: PrimeField,
}

impl Fe {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Fe> {
        if self.value == 0 {
            None
        } else {
            Some(Fe { value: self.field.inv(self.value), field: self.field })
        }
    }

    pub fn pow(self, e: u64) -> Fe {
        Fe { value: self.field.pow(self.value, e), field: self.field }
    }

    #[inline]
    fn same_field(self, other: Fe) -> PrimeField {
        assert_eq!(self.field, other.field, "mixed-field arithmetic");
        self.field
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        let k = self.same_field(rhs);
        Fe { value: k.add(self.value, rhs.value), field: k }
    }
}

impl Sub for Fe {
    type Output = Fe;
    fn sub(self, rhs: Fe) -> Fe {
        let k = self.same_field(rhs);
        Fe { value: k.sub(self.value, rhs.value), field: k }
    }
}

impl Mul for Fe {
    type Output = Fe;
    fn mul(self, rhs: Fe) -> Fe {
        let k = self.same_field(rhs);
        Fe { value: k.mul(self.value, rhs.value), field: k }
    }
}

impl Div for Fe {
    type Output = Fe;
    /// Panics on division by zero.
    fn div(self, rhs: Fe) -> Fe {
        let k = self.same_field(rhs);
        Fe { value: k.div(self.value, rhs.value), field: k }
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe { value: self.field.neg(self.value), field: self.field }
    }
}

/// Dense row-major matrix over GF(p). Zero rows or zero columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form, same shape as the input; zero rows last.
    pub reduced: Matrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivot_cols: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in self.row_iter() {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    /// Builds a matrix from row-major residues, checking shape and range.
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: data.len() });
        }
        if let Some(&v) = data.iter().find(|&&v| v >= field.modulus()) {
            return Err(Error::ValueOutOfRange { value: u64::from(v), modulus: field.modulus() });
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a matrix from a list of equal-length rows.
    pub fn from_rows<R: AsRef<[u32]>>(field: PrimeField, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Fe {
        Fe { value: self.get(r, c), field: self.field }
    }

    /// Sets an entry; `v` is reduced mod p.
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch { left: self.field.modulus(), right: rhs.field.modulus() });
        }
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: rhs.rows });
        }
        let k = self.field;
        let mut out = Matrix::zeros(k, self.rows, rhs.cols);
        for r in 0..self.rows {
            for (i, &a) in self.row(r).iter().enumerate() {
                if a != 0 {
                    let src = &rhs.data[i * rhs.cols..(i + 1) * rhs.cols];
                    k.axpy(&mut out.data[r * rhs.cols..(r + 1) * rhs.cols], a, src);
                }
            }
        }
        Ok(out)
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix { field: self.field, rows: self.rows, cols: cols.len(), data }
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row-echelon form. Pivots are chosen leftmost-column first,
    /// taking the first row at or below the current position with a nonzero
    /// entry in that column.
    pub fn rref(&self) -> Rref {
        let k = self.field;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = k.inv(m.get(r, c));
            k.scale(m.row_mut(r), inv);
            let pivot_row: Vec<u32> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        k.axpy(m.row_mut(i), k.neg(f), &pivot_row);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: r, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rows spanning the right null space: every returned row `x` satisfies
    /// `self * x^T = 0`, equivalently `x` is orthogonal to every row of `self`.
    /// The result has `cols - rank` independent rows.
    pub fn kernel_basis(&self) -> Matrix {
        let k = self.field;
        let Rref { reduced, rank, pivot_cols } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(k, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, 1);
            for (r, &pc) in pivot_cols.iter().enumerate().take(rank) {
                let v = k.neg(reduced.get(r, f));
                out.set(i, pc, v);
            }
        }
        out
    }

    /// True when both matrices have the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rank == b.rank
            && (0..a.rank).all(|r| a.reduced.row(r) == b.reduced.row(r))
    }

    /// True when `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &[u32]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let base = self.rank();
        let mut ext = self.clone();
        ext.data.extend_from_slice(v);
        ext.rows += 1;
        ext.rank() == base
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1 << 31), Err(Error::ModulusTooLarge(1 << 31)));
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn large_modulus_products_are_exact() {
        let k = gf(2_147_483_647);
        let a = k.modulus() - 1;
        assert_eq!(k.mul(a, a), 1);
        assert_eq!(k.mul(a, k.inv(a)), 1);
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let k = gf(p);
            let els: Vec<Fe> = k.elements().collect();
            for &a in &els {
                assert_eq!(a + k.zero(), a);
                assert_eq!(a * k.one(), a);
                assert_eq!(a + (-a), k.zero());
                if let Some(i) = a.inv() {
                    assert_eq!(a * i, k.one());
                } else {
                    assert!(a.is_zero());
                }
                for &b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!(a - b + b, a);
                    for &c in &els {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn rref_identity() {
        let k = gf(2);
        let id = Matrix::identity(k, 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows_gf2() {
        let k = gf(2);
        let m = Matrix::from_rows(k, 3, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.reduced.row(0), &[1, 0, 1]);
        assert_eq!(r.reduced.row(1), &[0, 1, 1]);
        assert_eq!(r.reduced.row(2), &[0, 0, 0]);
    }

    #[test]
    fn kernel_of_repetition_is_parity() {
        let k = gf(2);
        let m = Matrix::from_rows(k, 2, &[[1, 1]]).unwrap();
        let h = m.kernel_basis();
        assert_eq!(h.nrows(), 1);
        assert_eq!(h.row(0), &[1, 1]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = gf(5);
        let h = Matrix::identity(k, 4).kernel_basis();
        assert_eq!((h.nrows(), h.ncols()), (0, 4));
    }

    #[test]
    fn zero_row_matrix() {
        let k = gf(3);
        let m = Matrix::zeros(k, 0, 4);
        assert_eq!(m.rank(), 0);
        assert!(m.kernel_basis().same_row_space(&Matrix::identity(k, 4)));
    }

    #[test]
    fn construction_checks() {
        let k = gf(3);
        assert!(matches!(Matrix::new(k, 2, 2, vec![0, 1, 2]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(Matrix::new(k, 1, 2, vec![0, 3]), Err(Error::ValueOutOfRange { .. })));
        assert!(matches!(k.elem(3), Err(Error::ValueOutOfRange { .. })));
    }

    #[test]
    fn transpose_and_mul() {
        let k = gf(7);
        let a = Matrix::from_rows(k, 3, &[[1, 2, 3], [4, 5, 6]]).unwrap();
        let at = a.transpose();
        let g = a.mul(&at).unwrap();
        assert_eq!(g.row(0), &[14 % 7, 32 % 7]);
        assert_eq!(g.row(1), &[32 % 7, 77 % 7]);
    }
}
