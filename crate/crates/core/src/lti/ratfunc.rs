//! Rational functions `num / den` over GF(p), used for rank and kernel
//! computations over the field of rational functions in `d`.

use alloc::vec::Vec;

use super::poly::Poly;
use crate::field::PrimeField;

/// Kept reduced with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let field = num.field();
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(field) };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let c = field.inv(den.leading());
        RatFunc { num: num.scale(c), den: den.scale(c) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let field = p.field();
        RatFunc { num: p, den: Poly::one(field) }
    }

    pub fn zero(field: PrimeField) -> Self {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

/// In-place reduced row-echelon form over the rational functions.
/// Returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<RatFunc>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.div(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Right kernel of a `rows x cols` matrix: one vector per free column.
pub(crate) fn kernel(field: PrimeField, mut m: Vec<Vec<RatFunc>>, cols: usize) -> Vec<Vec<RatFunc>> {
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![RatFunc::zero(field); cols];
            v[f] = RatFunc::from_poly(Poly::one(field));
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[r][f].neg();
            }
            v
        })
        .collect()
}
