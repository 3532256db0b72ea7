//! State, transition, in- and out-space dimension profiles.
//!
//! Three routes compute the same numbers:
//!
//! * [`profiles_from_basis`] counts active generators of a shortest basis;
//! * [`oracle_profiles`] evaluates the quotient dimensions
//!   `dim C - dim C_{k-} - dim C_{k+}` with ranks of column blocks, without
//!   looking at spans;
//! * [`enumerated_profiles`] counts codewords supported in the past and in the
//!   future by exhaustive enumeration (small codes only).

use alloc::vec;
use alloc::vec::Vec;

use crate::span::{GeneratorMatrix, ShortestBasis};
use crate::Result;

/// Dimension profiles over state times `0..=n` and symbol times `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfiles {
    /// `n + 1` entries.
    pub state_dims: Vec<usize>,
    pub transition_dims: Vec<usize>,
    pub in_dims: Vec<usize>,
    pub out_dims: Vec<usize>,
}

impl DimensionProfiles {
    /// Derives in/out dimensions from `dim T_k = dim S_k + dim I_k = dim S_{k+1} + dim O_k`.
    pub fn from_state_and_transition(state_dims: Vec<usize>, transition_dims: Vec<usize>) -> Self {
        assert_eq!(state_dims.len(), transition_dims.len() + 1);
        let in_dims = transition_dims.iter().zip(&state_dims).map(|(t, s)| t - s).collect();
        let out_dims = transition_dims.iter().zip(&state_dims[1..]).map(|(t, s)| t - s).collect();
        DimensionProfiles { state_dims, transition_dims, in_dims, out_dims }
    }

    pub fn n_symbols(&self) -> usize {
        self.transition_dims.len()
    }

    /// Both sum rules at every symbol time, and trivial boundary states.
    pub fn sum_rules_hold(&self) -> bool {
        let n = self.n_symbols();
        self.state_dims.len() == n + 1
            && self.in_dims.len() == n
            && self.out_dims.len() == n
            && self.state_dims[0] == 0
            && self.state_dims[n] == 0
            && (0..n).all(|k| {
                self.transition_dims[k] == self.state_dims[k] + self.in_dims[k]
                    && self.transition_dims[k] == self.state_dims[k + 1] + self.out_dims[k]
            })
    }

    pub fn max_state_dim(&self) -> usize {
        self.state_dims.iter().copied().max().unwrap_or(0)
    }
}

/// Counts generators of a certified shortest basis active at each time.
pub fn profiles_from_basis(b: &ShortestBasis) -> Result<DimensionProfiles> {
    b.require_certified()?;
    let n = b.spec().n_symbols();
    let mut p = DimensionProfiles {
        state_dims: vec![0; n + 1],
        transition_dims: vec![0; n],
        in_dims: vec![0; n],
        out_dims: vec![0; n],
    };
    for s in &b.spans {
        for k in s.start + 1..=s.end {
            p.state_dims[k] += 1;
        }
        for k in s.start..=s.end {
            p.transition_dims[k] += 1;
        }
        p.in_dims[s.start] += 1;
        p.out_dims[s.end] += 1;
    }
    Ok(p)
}

/// Ranks of the past (`times < k`) and future (`times >= k`) column blocks
/// for every cut `k` in `0..=n`.
fn cut_ranks(g: &GeneratorMatrix) -> (Vec<usize>, Vec<usize>) {
    let spec = g.spec();
    let n = spec.n_symbols();
    let m = g.matrix();
    let cols = |r: core::ops::Range<usize>| m.select_cols(&spec.cols_of_times(r).collect::<Vec<_>>());
    let past = (0..=n).map(|k| cols(0..k).rank()).collect();
    let future = (0..=n).map(|k| cols(k..n).rank()).collect();
    (past, future)
}

/// `dim C - dim C_{k-} - dim C_{k+}` for `k` in `0..=n`.
///
/// With `r = rank G`, the subcode supported before `k` has dimension
/// `r - rank(G restricted to times >= k)`, and symmetrically for the future.
/// Works for any generator matrix, independent rows or not.
pub fn oracle_state_dims(g: &GeneratorMatrix) -> Vec<usize> {
    let r = g.matrix().rank();
    let n = g.spec().n_symbols();
    let (past, future) = cut_ranks(g);
    (0..=n).map(|k| past[k] + future[k] - r).collect()
}

/// `dim C - dim C_{k-} - dim C_{(k+1)+}` for `k` in `0..n`.
pub fn oracle_transition_dims(g: &GeneratorMatrix) -> Vec<usize> {
    let r = g.matrix().rank();
    let n = g.spec().n_symbols();
    let (past, future) = cut_ranks(g);
    (0..n).map(|k| past[k + 1] + future[k] - r).collect()
}

pub fn oracle_profiles(g: &GeneratorMatrix) -> DimensionProfiles {
    DimensionProfiles::from_state_and_transition(oracle_state_dims(g), oracle_transition_dims(g))
}

/// Profiles from exhaustive codeword enumeration. Requires independent rows
/// and `p^k <= cap`.
pub fn enumerated_profiles(g: &GeneratorMatrix, cap: u64) -> Result<DimensionProfiles> {
    g.require_independent()?;
    let spec = g.spec();
    let n = spec.n_symbols();
    let words = g.codewords(cap)?;
    // past[k]: codewords supported on times < k; future[k]: on times >= k.
    let mut past = vec![0u64; n + 2];
    let mut future = vec![0u64; n + 2];
    for w in &words {
        match spec.span_unchecked(w) {
            None => {
                past.iter_mut().for_each(|c| *c += 1);
                future.iter_mut().for_each(|c| *c += 1);
            }
            Some(s) => {
                (s.end + 1..=n + 1).for_each(|k| past[k] += 1);
                (0..=s.start).for_each(|k| future[k] += 1);
            }
        }
    }
    let p = u64::from(spec.field().modulus());
    let log = |mut c: u64| {
        let mut d = 0;
        while c > 1 {
            debug_assert_eq!(c % p, 0);
            c /= p;
            d += 1;
        }
        d
    };
    let dim = g.k();
    let state = (0..=n).map(|k| dim - log(past[k]) - log(future[k])).collect();
    let trans = (0..n).map(|k| dim - log(past[k]) - log(future[k + 1])).collect();
    Ok(DimensionProfiles::from_state_and_transition(state, trans))
}
