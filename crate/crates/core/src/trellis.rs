//! Explicit trellis realizations.
//!
//! A controller realization is the sum of one atomic realization per
//! generator: the generator's coefficient is held in the state while it is
//! active, and each symbol is the sum of the active generators' blocks
//! scaled by their coefficients. An observer realization runs one inner
//! product accumulator ("checker") per dual generator and only admits a
//! transition at the generator's last time if the closing sum is zero.
//!
//! States at time `k` are labeled by a vector over the rows active at `k`
//! (in basis row order) and indexed in mixed radix with the first active row
//! most significant, so index 0 is the all-zero state.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Matrix, PrimeField};
use crate::span::{CodeSpec, GeneratorMatrix, ShortestBasis, Span};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationKind {
    Controller,
    Observer,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transition {
    pub from: usize,
    /// The symbol block `a_k`, `section_size(k)` entries.
    pub symbol: Vec<u32>,
    pub to: usize,
}

/// Size limits for building and enumerating realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrellisLimits {
    pub max_states: u64,
    pub max_transitions: u64,
    pub max_paths: u64,
}

impl Default for TrellisLimits {
    fn default() -> Self {
        TrellisLimits { max_states: 1 << 20, max_transitions: 1 << 24, max_paths: 1 << 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrellisRealization {
    spec: CodeSpec,
    kind: RealizationKind,
    /// `state_rows[k]`: basis rows labeling the state coordinates at time `k`.
    state_rows: Vec<Vec<usize>>,
    /// `states[k][i]`: label of state `i` at time `k`.
    states: Vec<Vec<Vec<u32>>>,
    transitions: Vec<Vec<Transition>>,
}

/// All vectors of length `m` in index order.
fn labels(field: PrimeField, m: usize) -> Vec<Vec<u32>> {
    let count = field.count(m) as usize;
    let mut out = Vec::with_capacity(count);
    let mut cur = vec![0u32; m];
    for _ in 0..count {
        out.push(cur.clone());
        for c in cur.iter_mut().rev() {
            *c += 1;
            if *c < field.modulus() {
                break;
            }
            *c = 0;
        }
    }
    out
}

fn index_of(field: PrimeField, label: &[u32]) -> usize {
    let p = field.modulus() as usize;
    label.iter().fold(0usize, |acc, &d| acc * p + d as usize)
}

fn active_rows(spans: &[Span], pred: impl Fn(&Span) -> bool) -> Vec<usize> {
    (0..spans.len()).filter(|&i| pred(&spans[i])).collect()
}

fn check_states(field: PrimeField, time: usize, dim: usize, limits: &TrellisLimits) -> Result<()> {
    let states = field.count(dim);
    if states > u128::from(limits.max_states) {
        return Err(Error::StateCapExceeded { time, states, cap: limits.max_states });
    }
    Ok(())
}

fn check_transitions(field: PrimeField, dim: usize, limits: &TrellisLimits) -> Result<()> {
    let count = field.count(dim);
    if count > u128::from(limits.max_transitions) {
        return Err(Error::EnumerationCapExceeded { count, cap: limits.max_transitions });
    }
    Ok(())
}

/// Controller canonical realization of a certified shortest basis.
pub fn build_controller(b: &ShortestBasis, limits: &TrellisLimits) -> Result<TrellisRealization> {
    b.require_certified()?;
    controller_from_basis(&b.matrix, limits)
}

/// The same construction applied to any basis with nonzero rows. The result
/// realizes the row space but is only minimal for shortest bases.
pub fn controller_from_basis(g: &GeneratorMatrix, limits: &TrellisLimits) -> Result<TrellisRealization> {
    let spec = g.spec().clone();
    let field = spec.field();
    let n = spec.n_symbols();
    let spans: Vec<Span> = g.spans().into_iter().collect::<Option<_>>().ok_or(Error::DependentRows)?;

    let state_rows: Vec<Vec<usize>> = (0..=n).map(|k| active_rows(&spans, |s| s.active_at_state(k))).collect();
    for (k, rows) in state_rows.iter().enumerate() {
        check_states(field, k, rows.len(), limits)?;
    }
    let states = state_rows.iter().map(|r| labels(field, r.len())).collect();

    let mut transitions = Vec::with_capacity(n);
    for k in 0..n {
        let live = active_rows(&spans, |s| s.active_at_symbol(k));
        check_transitions(field, live.len(), limits)?;
        let block = spec.block(k);
        let pos = |rows: &[usize]| -> Vec<usize> {
            rows.iter().map(|r| live.iter().position(|x| x == r).unwrap()).collect()
        };
        let from_pos = pos(&state_rows[k]);
        let to_pos = pos(&state_rows[k + 1]);
        let mut section = Vec::new();
        for alpha in labels(field, live.len()) {
            let mut symbol = vec![0u32; block.len()];
            for (&row, &a) in live.iter().zip(&alpha) {
                field.axpy(&mut symbol, a, &g.row(row)[block.clone()]);
            }
            let from: Vec<u32> = from_pos.iter().map(|&i| alpha[i]).collect();
            let to: Vec<u32> = to_pos.iter().map(|&i| alpha[i]).collect();
            section.push(Transition { from: index_of(field, &from), symbol, to: index_of(field, &to) });
        }
        transitions.push(section);
    }
    Ok(TrellisRealization { spec, kind: RealizationKind::Controller, state_rows, states, transitions })
}

/// Observer canonical realization of the code whose dual has the certified
/// shortest basis `b_dual`.
pub fn build_observer(b_dual: &ShortestBasis, limits: &TrellisLimits) -> Result<TrellisRealization> {
    b_dual.require_certified()?;
    let h = &b_dual.matrix;
    let spans = &b_dual.spans;
    let spec = h.spec().clone();
    let field = spec.field();
    let n = spec.n_symbols();

    let state_rows: Vec<Vec<usize>> = (0..=n).map(|k| active_rows(spans, |s| s.active_at_state(k))).collect();
    for (k, rows) in state_rows.iter().enumerate() {
        check_states(field, k, rows.len(), limits)?;
    }
    let states: Vec<Vec<Vec<u32>>> = state_rows.iter().map(|r| labels(field, r.len())).collect();

    let mut transitions = Vec::with_capacity(n);
    for k in 0..n {
        let block = spec.block(k);
        check_transitions(field, state_rows[k].len() + block.len(), limits)?;
        let live = active_rows(spans, |s| s.active_at_symbol(k));
        let symbols = labels(field, block.len());
        let mut section = Vec::new();
        for (from, sigma) in states[k].iter().enumerate() {
            'symbol: for a in &symbols {
                let mut next = Vec::with_capacity(state_rows[k + 1].len());
                for &j in &live {
                    let carried = state_rows[k].iter().position(|&r| r == j).map_or(0, |i| sigma[i]);
                    let sum = field.add(carried, field.dot(a, &h.row(j)[block.clone()]));
                    if spans[j].end == k {
                        if sum != 0 {
                            continue 'symbol;
                        }
                    } else {
                        next.push(sum);
                    }
                }
                section.push(Transition { from, symbol: a.clone(), to: index_of(field, &next) });
            }
        }
        transitions.push(section);
    }
    Ok(TrellisRealization { spec, kind: RealizationKind::Observer, state_rows, states, transitions })
}

/// Observer realization of `g` via a shortest basis of its dual.
pub fn observer_for_code(g: &GeneratorMatrix, limits: &TrellisLimits) -> Result<TrellisRealization> {
    let dual = crate::duality::dual_code(g)?;
    build_observer(&dual.to_shortest_basis()?, limits)
}

impl TrellisRealization {
    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn kind(&self) -> RealizationKind {
        self.kind
    }

    pub fn states(&self, k: usize) -> &[Vec<u32>] {
        &self.states[k]
    }

    /// Basis rows labeling the state coordinates at state time `k`.
    pub fn state_rows(&self, k: usize) -> &[usize] {
        &self.state_rows[k]
    }

    pub fn transitions(&self, k: usize) -> &[Transition] {
        &self.transitions[k]
    }

    pub fn state_counts(&self) -> Vec<usize> {
        self.states.iter().map(Vec::len).collect()
    }

    pub fn transition_counts(&self) -> Vec<usize> {
        self.transitions.iter().map(Vec::len).collect()
    }

    /// Number of complete paths from the initial to the final state.
    pub fn path_count(&self) -> u128 {
        let mut counts = vec![1u128; self.states[0].len()];
        for (k, section) in self.transitions.iter().enumerate() {
            let mut next = vec![0u128; self.states[k + 1].len()];
            for t in section {
                next[t.to] = next[t.to].saturating_add(counts[t.from]);
            }
            counts = next;
        }
        counts.iter().fold(0u128, |a, &c| a.saturating_add(c))
    }

    /// The realized code: label sequences of all complete paths.
    pub fn enumerate_paths(&self, limits: &TrellisLimits) -> Result<BTreeSet<Vec<u32>>> {
        let count = self.path_count();
        if count > u128::from(limits.max_paths) {
            return Err(Error::EnumerationCapExceeded { count, cap: limits.max_paths });
        }
        let n = self.spec.n_symbols();
        let by_from: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|k| {
                let mut adj = vec![Vec::new(); self.states[k].len()];
                for (i, t) in self.transitions[k].iter().enumerate() {
                    adj[t.from].push(i);
                }
                adj
            })
            .collect();
        let mut out = BTreeSet::new();
        let mut word = Vec::with_capacity(self.spec.total_cols());
        for s in 0..self.states[0].len() {
            self.walk(&by_from, 0, s, &mut word, &mut out);
        }
        Ok(out)
    }

    fn walk(
        &self,
        by_from: &[Vec<Vec<usize>>],
        k: usize,
        state: usize,
        word: &mut Vec<u32>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        if k == self.spec.n_symbols() {
            out.insert(word.clone());
            return;
        }
        for &i in &by_from[k][state] {
            let t = &self.transitions[k][i];
            let len = word.len();
            word.extend_from_slice(&t.symbol);
            self.walk(by_from, k + 1, t.to, word, out);
            word.truncate(len);
        }
    }

    /// True iff some state sequence is compatible with `word`.
    pub fn accepts(&self, word: &[u32]) -> Result<bool> {
        if word.len() != self.spec.total_cols() {
            return Err(Error::LengthMismatch { expected: self.spec.total_cols(), found: word.len() });
        }
        let mut current = vec![true; self.states[0].len()];
        for k in 0..self.spec.n_symbols() {
            let a = &word[self.spec.block(k)];
            let mut next = vec![false; self.states[k + 1].len()];
            for t in &self.transitions[k] {
                if current[t.from] && t.symbol == a {
                    next[t.to] = true;
                }
            }
            if !next.iter().any(|&x| x) {
                return Ok(false);
            }
            current = next;
        }
        Ok(current.iter().any(|&x| x))
    }

    /// The transitions at symbol time `k` as vectors `(from label, symbol, to label)`.
    pub fn transition_vectors(&self, k: usize) -> Matrix {
        let field = self.spec.field();
        let width = self.state_rows[k].len() + self.spec.section_size(k) + self.state_rows[k + 1].len();
        let rows: Vec<Vec<u32>> = self.transitions[k]
            .iter()
            .map(|t| {
                let mut v = self.states[k][t.from].clone();
                v.extend_from_slice(&t.symbol);
                v.extend_from_slice(&self.states[k + 1][t.to]);
                v
            })
            .collect();
        Matrix::from_rows(field, width, &rows).expect("labels are field elements")
    }

    /// Every transition set is a linear subspace: its distinct elements are
    /// exactly `p^rank` in number.
    pub fn is_linear(&self) -> bool {
        let field = self.spec.field();
        (0..self.spec.n_symbols()).all(|k| {
            let m = self.transition_vectors(k);
            let distinct: BTreeSet<&[u32]> = m.row_iter().collect();
            distinct.len() == m.nrows() && field.count(m.rank()) == m.nrows() as u128
        })
    }
}
