//! Polynomial generator matrices of linear time-invariant systems.
//!
//! A system is given by an `n x k` matrix whose columns generate it over the
//! rational functions in the delay `d`. Each column is first cleared to its
//! shortest polynomial generator. The shifts of the columns form a shortest
//! basis exactly when the matrix is *minimal*: its constant-term matrix has
//! full rank (predictable delay), its per-column leading-coefficient matrix
//! has full rank (predictable degree), and its `k x k` minors have no common
//! factor (non-catastrophic). [`PolyMatrix::reduce_to_minimal`] repairs any
//! failure by replacing the longest column involved in a vanishing
//! combination with that combination divided by the common factor.

pub mod poly;
mod ratfunc;

use alloc::vec::Vec;
use core::fmt;

use crate::field::{Matrix, PrimeField};
use crate::{Error, Result};
pub use poly::Poly;
use ratfunc::RatFunc;

/// A rational entry `num / den`; `den` must have a nonzero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEntry {
    pub num: Poly,
    pub den: Poly,
}

impl RationalEntry {
    pub fn new(num: Poly, den: Poly) -> Self {
        RationalEntry { num, den }
    }

    pub fn poly(p: Poly) -> Self {
        let field = p.field();
        RationalEntry { num: p, den: Poly::one(field) }
    }

    fn to_ratfunc(&self) -> RatFunc {
        RatFunc::new(self.num.clone(), self.den.clone())
    }
}

/// A vector of polynomials times `d^delay`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentVec {
    pub delay: i64,
    pub entries: Vec<Poly>,
}

fn column_delay(col: &[Poly]) -> Option<usize> {
    col.iter().filter_map(Poly::delay).min()
}

fn shift_column_down(col: &[Poly]) -> Vec<Poly> {
    let s = column_delay(col).unwrap_or(0);
    col.iter().map(|p| p.shift_down(s)).collect()
}

fn clear_column(col: &[RationalEntry], column: usize) -> Result<LaurentVec> {
    let Some(first) = col.first() else {
        return Err(Error::ZeroColumn { column });
    };
    let field = first.num.field();
    let mut reduced = Vec::with_capacity(col.len());
    for (row, e) in col.iter().enumerate() {
        if e.den.constant_term() == 0 {
            return Err(Error::BadDenominator { row, column });
        }
        let g = e.num.gcd(&e.den);
        let (a, b) = if g.is_zero() || e.num.is_zero() {
            (Poly::zero(field), Poly::one(field))
        } else {
            (e.num.div_exact(&g).unwrap(), e.den.div_exact(&g).unwrap())
        };
        let c = field.inv(b.constant_term());
        reduced.push((a.scale(c), b.scale(c)));
    }
    if reduced.iter().all(|(a, _)| a.is_zero()) {
        return Err(Error::ZeroColumn { column });
    }
    let lcm = reduced.iter().fold(Poly::one(field), |acc, (_, b)| acc.lcm(b));
    let lcm = lcm.scale(field.inv(lcm.constant_term()));
    let gcd = reduced.iter().fold(Poly::zero(field), |acc, (a, _)| acc.gcd(a));
    let entries: Vec<Poly> = reduced
        .iter()
        .map(|(a, b)| {
            let m = lcm.div_exact(b).expect("lcm is a multiple");
            m.mul(&a.div_exact(&gcd).expect("gcd divides"))
        })
        .collect();
    Ok(LaurentVec { delay: 0, entries: shift_column_down(&entries) })
}

/// Scales a nonzero rational vector to a polynomial vector with coprime
/// entries. Denominators may vanish at `d = 0` here.
fn clear_ratfunc(v: &[RatFunc]) -> Vec<Poly> {
    let field = v[0].num.field();
    let lcm = v.iter().fold(Poly::one(field), |acc, r| acc.lcm(&r.den));
    let entries: Vec<Poly> = v.iter().map(|r| lcm.div_exact(&r.den).expect("lcm is a multiple").mul(&r.num)).collect();
    let gcd = entries.iter().fold(Poly::zero(field), |acc, a| acc.gcd(a));
    entries.iter().map(|a| a.div_exact(&gcd).expect("gcd divides")).collect()
}

/// The shortest polynomial generator `lcm(dens) * col / gcd(nums)` of the
/// system generated by one rational column, shifted to delay 0.
///
/// Each entry is first reduced to lowest terms. The denominator lcm is
/// normalized to constant term 1 and the numerator gcd is monic.
pub fn make_finite_generator(col: &[RationalEntry]) -> Result<LaurentVec> {
    clear_column(col, 0)
}

/// `n x k` matrix of rational entries with full column rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    field: PrimeField,
    n_rows: usize,
    k_cols: usize,
    entries: Vec<RationalEntry>,
}

impl RationalMatrix {
    /// `entries` in row-major order.
    pub fn new(field: PrimeField, n_rows: usize, k_cols: usize, entries: Vec<RationalEntry>) -> Result<Self> {
        if entries.len() != n_rows * k_cols {
            return Err(Error::LengthMismatch { expected: n_rows * k_cols, found: entries.len() });
        }
        for (i, e) in entries.iter().enumerate() {
            if e.num.field() != field || e.den.field() != field {
                return Err(Error::FieldMismatch { left: field.modulus(), right: e.num.field().modulus() });
            }
            if e.den.constant_term() == 0 {
                return Err(Error::BadDenominator { row: i / k_cols, column: i % k_cols });
            }
        }
        if k_cols > n_rows {
            return Err(Error::RankDeficient);
        }
        let m = RationalMatrix { field, n_rows, k_cols, entries };
        let mut rows: Vec<Vec<RatFunc>> =
            (0..n_rows).map(|i| (0..k_cols).map(|j| m.entry(i, j).to_ratfunc()).collect()).collect();
        if ratfunc::rref(&mut rows).len() < k_cols {
            return Err(Error::RankDeficient);
        }
        Ok(m)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn k_cols(&self) -> usize {
        self.k_cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalEntry {
        &self.entries[i * self.k_cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<RationalEntry> {
        (0..self.n_rows).map(|i| self.entry(i, j).clone()).collect()
    }

    /// Clears every column with [`make_finite_generator`].
    pub fn clear(&self) -> Result<PolyMatrix> {
        let cols = (0..self.k_cols)
            .map(|j| clear_column(&self.column(j), j).map(|v| v.entries))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(self.field, self.n_rows, cols)
    }
}

/// Outcome of the minimality tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Minimal,
    DelayDefect,
    DegreeDefect,
    Catastrophic,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Minimal => "minimal",
            Verdict::DelayDefect => "delay_defect",
            Verdict::DegreeDefect => "degree_defect",
            Verdict::Catastrophic => "catastrophic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub constant_term_rank: usize,
    pub leading_coeff_rank: usize,
    /// Monic gcd of all `k x k` minors.
    pub minor_gcd: Poly,
    /// Sum of column degrees, `mu`.
    pub expected_degree: usize,
    pub max_minor_degree: usize,
    pub verdict: Verdict,
}

/// A `k x k` minor on a set of rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub value: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepairKind {
    /// Constant terms were dependent; the combination is divided by a power of `d`.
    Delay,
    /// Leading coefficients were dependent.
    Degree,
    /// All minors shared this factor; the combination is divided by it.
    CommonFactor(Poly),
}

/// One column replacement: `column = (sum_j multipliers[j] * g_j) / divisor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairStep {
    pub kind: RepairKind,
    pub replaced: usize,
    pub multipliers: Vec<Poly>,
    pub divisor: Poly,
    pub column: Vec<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub minimal: PolyMatrix,
    pub log: Vec<RepairStep>,
}

/// State and transition dimensions of the time-invariant minimal realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LtiDims {
    pub state: usize,
    pub transition: usize,
    pub dual_transition: usize,
}

/// `n x k` polynomial matrix given by its columns, each shifted to delay 0,
/// with full column rank over the rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: PrimeField,
    n_rows: usize,
    columns: Vec<Vec<Poly>>,
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
fn det(field: PrimeField, m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(field),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero(field);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(field, &sub));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

impl PolyMatrix {
    /// Builds from columns of length `n_rows`. Columns are shifted to delay 0;
    /// zero columns, `k > n`, and rank deficiency are rejected.
    pub fn new(field: PrimeField, n_rows: usize, columns: Vec<Vec<Poly>>) -> Result<Self> {
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n_rows {
                return Err(Error::LengthMismatch { expected: n_rows, found: col.len() });
            }
            if let Some(p) = col.iter().find(|p| p.field() != field) {
                return Err(Error::FieldMismatch { left: field.modulus(), right: p.field().modulus() });
            }
            if col.iter().all(Poly::is_zero) {
                return Err(Error::ZeroColumn { column: j });
            }
        }
        if columns.len() > n_rows {
            return Err(Error::RankDeficient);
        }
        let columns = columns.iter().map(|c| shift_column_down(c)).collect();
        let m = PolyMatrix { field, n_rows, columns };
        if m.rational_rank() < m.k_cols() {
            return Err(Error::RankDeficient);
        }
        Ok(m)
    }

    /// `entries` in row-major order.
    pub fn from_row_major(field: PrimeField, n_rows: usize, k_cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != n_rows * k_cols {
            return Err(Error::LengthMismatch { expected: n_rows * k_cols, found: entries.len() });
        }
        let cols = (0..k_cols).map(|j| (0..n_rows).map(|i| entries[i * k_cols + j].clone()).collect()).collect();
        PolyMatrix::new(field, n_rows, cols)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn k_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Poly>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[Poly] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.columns[j][i]
    }

    pub fn column_degree(&self, j: usize) -> usize {
        self.columns[j].iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn column_degrees(&self) -> Vec<usize> {
        (0..self.k_cols()).map(|j| self.column_degree(j)).collect()
    }

    fn coefficient_matrix(&self, power: impl Fn(usize) -> usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.n_rows, self.k_cols());
        for (j, col) in self.columns.iter().enumerate() {
            let e = power(j);
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.coeff(e));
            }
        }
        m
    }

    /// `n x k` matrix of the `d^0` coefficients.
    pub fn constant_matrix(&self) -> Matrix {
        self.coefficient_matrix(|_| 0)
    }

    /// Column `j` holds the coefficients of `d^{deg g_j}`.
    pub fn leading_matrix(&self) -> Matrix {
        let degs = self.column_degrees();
        self.coefficient_matrix(|j| degs[j])
    }

    /// The matrix evaluated at `d = x`.
    pub fn eval(&self, x: u32) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.n_rows, self.k_cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.eval(x));
            }
        }
        m
    }

    fn ratfunc_rows(&self) -> Vec<Vec<RatFunc>> {
        (0..self.n_rows)
            .map(|i| self.columns.iter().map(|c| RatFunc::from_poly(c[i].clone())).collect())
            .collect()
    }

    /// Rank over the field of rational functions in `d`.
    pub fn rational_rank(&self) -> usize {
        ratfunc::rref(&mut self.ratfunc_rows()).len()
    }

    /// True when `col` lies in the rational column space.
    pub fn spans_column(&self, col: &[Poly]) -> bool {
        let mut rows = self.ratfunc_rows();
        for (row, p) in rows.iter_mut().zip(col) {
            row.push(RatFunc::from_poly(p.clone()));
        }
        ratfunc::rref(&mut rows).len() == self.rational_rank()
    }

    /// Both matrices generate the same system over the rational functions.
    pub fn same_system(&self, other: &PolyMatrix) -> bool {
        self.n_rows == other.n_rows
            && self.k_cols() == other.k_cols()
            && other.columns.iter().all(|c| self.spans_column(c))
    }

    /// All `k x k` minors, rows subsets in lexicographic order.
    pub fn minors(&self) -> Vec<Minor> {
        let k = self.k_cols();
        k_subsets(self.n_rows, k)
            .into_iter()
            .map(|rows| {
                let sub: Vec<Vec<Poly>> =
                    rows.iter().map(|&i| (0..k).map(|j| self.columns[j][i].clone()).collect()).collect();
                Minor { value: det(self.field, &sub), rows }
            })
            .collect()
    }

    pub fn minimality_report(&self) -> MinimalityReport {
        let k = self.k_cols();
        let minors = self.minors();
        let minor_gcd = minors.iter().fold(Poly::zero(self.field), |g, m| g.gcd(&m.value));
        let max_minor_degree = minors.iter().filter_map(|m| m.value.degree()).max().unwrap_or(0);
        let constant_term_rank = self.constant_matrix().rank();
        let leading_coeff_rank = self.leading_matrix().rank();
        let verdict = if constant_term_rank < k {
            Verdict::DelayDefect
        } else if leading_coeff_rank < k {
            Verdict::DegreeDefect
        } else if !minor_gcd.is_unit() {
            Verdict::Catastrophic
        } else {
            Verdict::Minimal
        };
        MinimalityReport {
            constant_term_rank,
            leading_coeff_rank,
            minor_gcd,
            expected_degree: self.column_degrees().iter().sum(),
            max_minor_degree,
            verdict,
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.minimality_report().verdict == Verdict::Minimal
    }

    fn require_minimal(&self) -> Result<()> {
        match self.minimality_report().verdict {
            Verdict::Minimal => Ok(()),
            v => Err(Error::NotMinimal(v)),
        }
    }

    /// Longest column among those with a nonzero multiplier, largest index on ties.
    fn longest_involved(&self, multipliers: &[Poly]) -> usize {
        (0..self.k_cols())
            .filter(|&j| !multipliers[j].is_zero())
            .max_by_key(|&j| (self.column_degree(j), j))
            .expect("nonzero combination")
    }

    fn combine(&self, multipliers: &[Poly]) -> Vec<Poly> {
        (0..self.n_rows)
            .map(|i| {
                multipliers
                    .iter()
                    .zip(&self.columns)
                    .fold(Poly::zero(self.field), |acc, (u, c)| acc.add(&u.mul(&c[i])))
            })
            .collect()
    }

    /// Finishes a repair: `combination / divisor`, shifted to delay 0.
    fn finish(&self, kind: RepairKind, multipliers: Vec<Poly>, divisor: Poly) -> RepairStep {
        let replaced = self.longest_involved(&multipliers);
        let combo: Vec<Poly> = self
            .combine(&multipliers)
            .iter()
            .map(|p| p.div_exact(&divisor).expect("combination divisible by the factor"))
            .collect();
        let shift = column_delay(&combo).expect("independent columns give a nonzero combination");
        let column = combo.iter().map(|p| p.shift_down(shift)).collect();
        let divisor = divisor.shift_up(shift);
        RepairStep { kind, replaced, multipliers, divisor, column }
    }

    fn constants_to_polys(&self, c: &[u32], scale: u32) -> Vec<Poly> {
        c.iter().map(|&x| Poly::constant(self.field, self.field.mul(x, scale))).collect()
    }

    fn delay_repair(&self) -> RepairStep {
        let ker = self.constant_matrix().kernel_basis();
        let c = ker.row(0);
        let raw = self.constants_to_polys(c, 1);
        let r = self.longest_involved(&raw);
        let multipliers = self.constants_to_polys(c, self.field.inv(c[r]));
        self.finish(RepairKind::Delay, multipliers, Poly::one(self.field))
    }

    fn degree_repair(&self) -> RepairStep {
        let ker = self.leading_matrix().kernel_basis();
        let c = ker.row(0);
        let raw = self.constants_to_polys(c, 1);
        let r = self.longest_involved(&raw);
        let top = self.column_degree(r);
        let inv = self.field.inv(c[r]);
        let multipliers = (0..self.k_cols())
            .map(|j| Poly::monomial(self.field, self.field.mul(c[j], inv), top - self.column_degree(j)))
            .collect();
        self.finish(RepairKind::Degree, multipliers, Poly::one(self.field))
    }

    /// Finds `u` with `deg u_j < deg p` and `G u = 0 mod p` by solving the
    /// GF(p)-linear system on the coefficients of `u`. Such `u` exists iff
    /// `p` divides every `k x k` minor.
    fn factor_repair(&self, p: &Poly) -> RepairStep {
        let m = p.degree().expect("nonzero factor");
        let (n, k) = (self.n_rows, self.k_cols());
        let mut sys = Matrix::zeros(self.field, n * m, k * m);
        for j in 0..k {
            for e in 0..m {
                for i in 0..n {
                    let r = self.columns[j][i].shift_up(e).rem(p);
                    for t in 0..m {
                        sys.set(i * m + t, j * m + e, r.coeff(t));
                    }
                }
            }
        }
        let ker = sys.kernel_basis();
        let u = ker.row(0);
        let multipliers: Vec<Poly> =
            (0..k).map(|j| Poly::from_raw(self.field, u[j * m..(j + 1) * m].to_vec())).collect();
        self.finish(RepairKind::CommonFactor(p.clone()), multipliers, p.clone())
    }

    /// Repairs delay, degree and common-factor defects until minimal.
    /// Every repair strictly lowers the total column degree.
    pub fn reduce_to_minimal(&self) -> Reduction {
        let mut cur = self.clone();
        let mut log = Vec::new();
        loop {
            let report = cur.minimality_report();
            let step = match report.verdict {
                Verdict::Minimal => break,
                Verdict::DelayDefect => cur.delay_repair(),
                Verdict::DegreeDefect => cur.degree_repair(),
                Verdict::Catastrophic => cur.factor_repair(&report.minor_gcd),
            };
            debug_assert!(
                step.column.iter().filter_map(Poly::degree).max().unwrap_or(0) < cur.column_degree(step.replaced)
            );
            cur.columns[step.replaced] = step.column.clone();
            log.push(step);
        }
        Reduction { minimal: cur, log }
    }

    /// Sorted column degrees of a minimal matrix.
    pub fn controllability_indices(&self) -> Result<Vec<usize>> {
        self.require_minimal()?;
        let mut d = self.column_degrees();
        d.sort_unstable();
        Ok(d)
    }

    pub fn lti_dims(&self) -> Result<LtiDims> {
        let mu: usize = self.controllability_indices()?.iter().sum();
        let (n, k) = (self.n_rows, self.k_cols());
        Ok(LtiDims { state: mu, transition: mu + k, dual_transition: mu + n - k })
    }

    /// `G^T H` as a `k x m` matrix of polynomials.
    pub fn transpose_mul(&self, h: &PolyMatrix) -> Vec<Vec<Poly>> {
        self.columns
            .iter()
            .map(|g| {
                h.columns
                    .iter()
                    .map(|c| g.iter().zip(c).fold(Poly::zero(self.field), |acc, (a, b)| acc.add(&a.mul(b))))
                    .collect()
            })
            .collect()
    }

    /// Minimal `n x (n-k)` generator matrix of the orthogonal system,
    /// with `G^T H = 0`.
    pub fn dual(&self) -> Result<PolyMatrix> {
        self.require_minimal()?;
        let n = self.n_rows;
        let rows: Vec<Vec<RatFunc>> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|p| RatFunc::from_poly(p.clone())).collect())
            .collect();
        let cols: Vec<Vec<Poly>> = ratfunc::kernel(self.field, rows, n).iter().map(|v| clear_ratfunc(v)).collect();
        let h = PolyMatrix::new(self.field, n, cols)?;
        Ok(h.reduce_to_minimal().minimal)
    }
}
