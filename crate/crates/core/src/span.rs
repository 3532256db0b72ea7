//! Linear systems on a finite time axis, given by generator matrices, and
//! their reduction to shortest (minimum-span) bases.
//!
//! Columns of a generator matrix are grouped left to right into symbol
//! times; the block of columns for time `k` holds the coordinates of the
//! symbol alphabet `A_k`. A basis is *shortest* exactly when it has the
//! predictable span property: for every time `k`, the time-`k` blocks of the
//! generators starting at `k` are linearly independent, and likewise for
//! the generators ending at `k`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Range;

use crate::field::{Matrix, PrimeField};
use crate::{Error, Result};

/// Time axis and symbol alphabets of a code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    field: PrimeField,
    sections: Vec<usize>,
    offsets: Vec<usize>,
}

impl CodeSpec {
    /// `sections[k]` is the dimension of the alphabet at symbol time `k`.
    pub fn new(field: PrimeField, sections: Vec<usize>) -> Result<Self> {
        if let Some(time) = sections.iter().position(|&s| s == 0) {
            return Err(Error::EmptySection { time });
        }
        let mut offsets = Vec::with_capacity(sections.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &s in &sections {
            acc += s;
            offsets.push(acc);
        }
        Ok(CodeSpec { field, sections, offsets })
    }

    /// `n` symbol times, each carrying a single field element.
    pub fn uniform(field: PrimeField, n: usize) -> Self {
        CodeSpec::new(field, vec![1; n]).expect("nonzero sections")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of symbol times `n`; state times run over `0..=n`.
    pub fn n_symbols(&self) -> usize {
        self.sections.len()
    }

    pub fn sections(&self) -> &[usize] {
        &self.sections
    }

    pub fn section_size(&self, k: usize) -> usize {
        self.sections[k]
    }

    pub fn total_cols(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Column range of symbol time `k`.
    pub fn block(&self, k: usize) -> Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    /// Columns of all symbol times in `times`.
    pub fn cols_of_times(&self, times: Range<usize>) -> Range<usize> {
        self.offsets[times.start]..self.offsets[times.end]
    }

    /// First and last symbol time with a nonzero block; `None` for the zero vector.
    pub fn span_of(&self, v: &[u32]) -> Result<Option<Span>> {
        if v.len() != self.total_cols() {
            return Err(Error::LengthMismatch { expected: self.total_cols(), found: v.len() });
        }
        Ok(self.span_unchecked(v))
    }

    pub(crate) fn span_unchecked(&self, v: &[u32]) -> Option<Span> {
        let nonzero = |k: &usize| v[self.block(*k)].iter().any(|&x| x != 0);
        let start = (0..self.n_symbols()).find(nonzero)?;
        let end = (0..self.n_symbols()).rev().find(nonzero)?;
        Some(Span { start, end })
    }
}

/// Support interval `[start, end]` (inclusive symbol times) of a nonzero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    /// Number of symbol times covered.
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Active at state time `k` (between symbol times `k-1` and `k`).
    pub fn active_at_state(&self, k: usize) -> bool {
        self.start < k && k <= self.end
    }

    /// Active at symbol time `k`.
    pub fn active_at_symbol(&self, k: usize) -> bool {
        self.start <= k && k <= self.end
    }

    pub fn within(&self, j: Interval) -> bool {
        j.start <= self.start && self.end <= j.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// Inclusive interval of symbol times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        Interval { start, end }
    }
}

/// A `k x total_cols` generator matrix on a [`CodeSpec`] time axis.
///
/// Construction checks shapes and the field only. Operations that need
/// independent rows report [`Error::DependentRows`] themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    spec: CodeSpec,
    rows: Matrix,
}

impl GeneratorMatrix {
    pub fn new(spec: CodeSpec, rows: Matrix) -> Result<Self> {
        if rows.field() != spec.field() {
            return Err(Error::FieldMismatch {
                left: spec.field().modulus(),
                right: rows.field().modulus(),
            });
        }
        if rows.ncols() != spec.total_cols() {
            return Err(Error::LengthMismatch { expected: spec.total_cols(), found: rows.ncols() });
        }
        Ok(GeneratorMatrix { spec, rows })
    }

    pub fn from_rows<R: AsRef<[u32]>>(spec: CodeSpec, rows: &[R]) -> Result<Self> {
        let m = Matrix::from_rows(spec.field(), spec.total_cols(), rows)?;
        GeneratorMatrix::new(spec, m)
    }

    pub fn empty(spec: CodeSpec) -> Self {
        let m = Matrix::zeros(spec.field(), 0, spec.total_cols());
        GeneratorMatrix { spec, rows: m }
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.spec.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.rows
    }

    /// Number of generators.
    pub fn k(&self) -> usize {
        self.rows.nrows()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        self.rows.row(i)
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.rows.row_iter()
    }

    pub fn spans(&self) -> Vec<Option<Span>> {
        self.row_iter().map(|r| self.spec.span_unchecked(r)).collect()
    }

    pub fn is_independent(&self) -> bool {
        self.rows.rank() == self.k()
    }

    pub(crate) fn require_independent(&self) -> Result<()> {
        if self.is_independent() {
            Ok(())
        } else {
            Err(Error::DependentRows)
        }
    }

    /// Same code (row space) as `other`, on the same time axis.
    pub fn same_code(&self, other: &GeneratorMatrix) -> bool {
        self.spec == other.spec && self.rows.same_row_space(&other.rows)
    }

    /// All `p^k` linear combinations of the rows, in coefficient order
    /// (first row most significant). Fails if `p^k > cap`.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        let k = self.field();
        let count = k.count(self.k());
        if count > u128::from(cap) {
            return Err(Error::EnumerationCapExceeded { count, cap });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0u32; self.k()];
        for _ in 0..count {
            let mut w = vec![0u32; self.spec.total_cols()];
            for (i, &c) in coeffs.iter().enumerate() {
                k.axpy(&mut w, c, self.row(i));
            }
            out.push(w);
            for c in coeffs.iter_mut().rev() {
                *c += 1;
                if *c < k.modulus() {
                    break;
                }
                *c = 0;
            }
        }
        Ok(out)
    }

    /// Per-time independence of the starting and ending symbol blocks.
    pub fn check_psp(&self) -> PspReport {
        let spans = self.spans();
        let mut violations = Vec::new();
        for which in [SpanEnd::Start, SpanEnd::End] {
            for t in 0..self.spec.n_symbols() {
                let rows: Vec<usize> = (0..self.k())
                    .filter(|&i| spans[i].is_some_and(|s| which.time(&s) == t))
                    .collect();
                if rows.len() < 2 {
                    continue;
                }
                let block = self.rows.select_rows(&rows).select_cols(&self.spec.block(t).collect::<Vec<_>>());
                if block.rank() < rows.len() {
                    violations.push(PspViolation { time: t, kind: which, rows });
                }
            }
        }
        PspReport {
            delay_ok: !violations.iter().any(|v| v.kind == SpanEnd::Start),
            degree_ok: !violations.iter().any(|v| v.kind == SpanEnd::End),
            violations,
        }
    }

    /// Reduces to a shortest basis of the same code.
    ///
    /// Repeatedly finds a time `k` where the starting (or ending) blocks of
    /// some generators are dependent, forms the vanishing combination, and
    /// substitutes it for the longest generator involved (largest row index
    /// on ties). Each substitution shortens that generator, so the total span
    /// length strictly decreases. Output rows are scaled to have leading
    /// coefficient 1 and sorted by `(start, end, content)`.
    pub fn to_shortest_basis(&self) -> Result<ShortestBasis> {
        let k = self.field();
        let spec = &self.spec;
        let mut rows: Vec<Vec<u32>> = self.row_iter().map(|r| r.to_vec()).collect();
        let mut spans: Vec<Span> = rows
            .iter()
            .map(|r| spec.span_unchecked(r).ok_or(Error::DependentRows))
            .collect::<Result<_>>()?;

        loop {
            let mut changed = false;
            for which in [SpanEnd::Start, SpanEnd::End] {
                while let Some((coeffs, members)) = find_collision(spec, &rows, &spans, which) {
                    let target = members
                        .iter()
                        .copied()
                        .max_by(|&a, &b| spans[a].len().cmp(&spans[b].len()).then(a.cmp(&b)))
                        .expect("a dependency involves at least one row");
                    let mut combo = vec![0u32; spec.total_cols()];
                    for (&i, &c) in members.iter().zip(&coeffs) {
                        k.axpy(&mut combo, c, &rows[i]);
                    }
                    let lead = coeffs[members.iter().position(|&i| i == target).unwrap()];
                    k.scale(&mut combo, k.inv(lead));
                    let span = spec.span_unchecked(&combo).ok_or(Error::DependentRows)?;
                    debug_assert!(span.len() < spans[target].len());
                    rows[target] = combo;
                    spans[target] = span;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        for (r, s) in rows.iter_mut().zip(&spans) {
            let lead = r[spec.block(s.start)].iter().copied().find(|&x| x != 0).unwrap();
            k.scale(r, k.inv(lead));
        }
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by(|&a, &b| {
            (spans[a].start, spans[a].end)
                .cmp(&(spans[b].start, spans[b].end))
                .then_with(|| rows[a].cmp(&rows[b]))
        });
        let sorted: Vec<&Vec<u32>> = order.iter().map(|&i| &rows[i]).collect();
        let g = GeneratorMatrix::from_rows(spec.clone(), &sorted)?;
        let b = ShortestBasis::certify(g);
        debug_assert!(b.certified);
        Ok(b)
    }
}

/// Which end of a span a PSP condition concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanEnd {
    /// Predictable delay (starts).
    Start,
    /// Predictable degree (ends).
    End,
}

impl SpanEnd {
    fn time(self, s: &Span) -> usize {
        match self {
            SpanEnd::Start => s.start,
            SpanEnd::End => s.end,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PspViolation {
    pub time: usize,
    pub kind: SpanEnd,
    /// Rows starting (or ending) at `time`, whose blocks there are dependent.
    pub rows: Vec<usize>,
}

/// Outcome of the predictable-span check. Zero rows are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PspReport {
    pub delay_ok: bool,
    pub degree_ok: bool,
    pub violations: Vec<PspViolation>,
}

impl PspReport {
    pub fn ok(&self) -> bool {
        self.delay_ok && self.degree_ok
    }
}

/// Finds a vanishing combination among the blocks of rows sharing a start
/// (or end) time. Returns coefficients and the rows they apply to.
fn find_collision(
    spec: &CodeSpec,
    rows: &[Vec<u32>],
    spans: &[Span],
    which: SpanEnd,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let field = spec.field();
    for t in 0..spec.n_symbols() {
        let members: Vec<usize> = (0..rows.len()).filter(|&i| which.time(&spans[i]) == t).collect();
        if members.len() < 2 {
            continue;
        }
        let block = spec.block(t);
        // Columns of `blocks_t` are the members' time-t blocks, so its kernel
        // holds the vanishing combinations.
        let mut blocks_t = Matrix::zeros(field, block.len(), members.len());
        for (j, &i) in members.iter().enumerate() {
            for (r, c) in block.clone().enumerate() {
                blocks_t.set(r, j, rows[i][c]);
            }
        }
        let ker = blocks_t.kernel_basis();
        if ker.nrows() == 0 {
            continue;
        }
        let coeffs = ker.row(0);
        let (c, m): (Vec<u32>, Vec<usize>) = coeffs
            .iter()
            .zip(&members)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, &i)| (c, i))
            .unzip();
        return Some((c, m));
    }
    None
}

/// A generator matrix together with its spans and PSP certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestBasis {
    pub matrix: GeneratorMatrix,
    /// One span per row; rows of a certified basis are nonzero.
    pub spans: Vec<Span>,
    pub certified: bool,
}

impl ShortestBasis {
    /// Wraps `g` without modifying it. `certified` holds iff the rows are
    /// nonzero, independent, and have the predictable span property.
    pub fn certify(g: GeneratorMatrix) -> Self {
        let raw = g.spans();
        let nonzero = raw.iter().all(Option::is_some);
        let certified = nonzero && g.is_independent() && g.check_psp().ok();
        let spans = raw.into_iter().flatten().collect();
        ShortestBasis { matrix: g, spans, certified }
    }

    pub fn spec(&self) -> &CodeSpec {
        self.matrix.spec()
    }

    pub fn k(&self) -> usize {
        self.matrix.k()
    }

    pub(crate) fn require_certified(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            Err(Error::Uncertified)
        }
    }

    /// Span lengths, sorted ascending.
    pub fn span_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.spans.iter().map(Span::len).collect();
        v.sort_unstable();
        v
    }

    /// Rows whose span lies inside `j`; they form a basis of the subcode
    /// of codewords supported on `j`.
    pub fn subsystem_basis(&self, j: Interval) -> Result<GeneratorMatrix> {
        self.require_certified()?;
        let n = self.spec().n_symbols();
        if j.start > j.end || j.end >= n {
            return Err(Error::InvalidInterval { start: j.start, end: j.end, len: n });
        }
        let keep: Vec<usize> = (0..self.k()).filter(|&i| self.spans[i].within(j)).collect();
        GeneratorMatrix::new(self.spec().clone(), self.matrix.matrix().select_rows(&keep))
    }
}

impl PartialOrd for Span {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Span {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.start, self.end).cmp(&(other.start, other.end))
    }
}
