//! Dual (orthogonal) codes and the duality identities between the minimal
//! realizations of a code and of its dual.
//!
//! Both codes live on the same time axis. Dual profiles are computed from a
//! shortest basis of the dual itself, so every identity checked here compares
//! two independent computations.

use alloc::vec::Vec;

use crate::profiles::{profiles_from_basis, DimensionProfiles};
use crate::span::GeneratorMatrix;
use crate::Result;

/// Generator matrix of the dual code under the componentwise inner product.
pub fn dual_code(g: &GeneratorMatrix) -> Result<GeneratorMatrix> {
    g.require_independent()?;
    GeneratorMatrix::new(g.spec().clone(), g.matrix().kernel_basis())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `dim S_k = dim S^_k`.
    StateEqual,
    /// `dim T_k + dim T^_k = dim S_k + dim A_k + dim S_{k+1}`.
    TransitionSum,
    /// `dim I^_k = dim A_k - dim O_k`.
    InComplement,
    /// `dim O^_k = dim A_k - dim I_k`.
    OutComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: Identity,
    pub time: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub section_sizes: Vec<usize>,
    pub primal: DimensionProfiles,
    pub dual: DimensionProfiles,
    pub failures: Vec<IdentityFailure>,
    pub all_identities_hold: bool,
}

/// Computes profiles of `C` and `C^perp` from their own shortest bases and
/// checks the state, transition and in/out identities at every time.
pub fn verify_duality(g: &GeneratorMatrix) -> Result<DualityReport> {
    let h = dual_code(g)?;
    let primal = profiles_from_basis(&g.to_shortest_basis()?)?;
    let dual = profiles_from_basis(&h.to_shortest_basis()?)?;
    let a = g.spec().sections().to_vec();
    let n = a.len();

    let mut failures = Vec::new();
    let mut fail = |identity, time| failures.push(IdentityFailure { identity, time });
    for k in 0..=n {
        if primal.state_dims[k] != dual.state_dims[k] {
            fail(Identity::StateEqual, k);
        }
    }
    for (k, &ak) in a.iter().enumerate() {
        let lhs = primal.transition_dims[k] + dual.transition_dims[k];
        if lhs != primal.state_dims[k] + ak + primal.state_dims[k + 1] {
            fail(Identity::TransitionSum, k);
        }
        if dual.in_dims[k] + primal.out_dims[k] != ak {
            fail(Identity::InComplement, k);
        }
        if dual.out_dims[k] + primal.in_dims[k] != ak {
            fail(Identity::OutComplement, k);
        }
    }
    let all_identities_hold = failures.is_empty();
    Ok(DualityReport { section_sizes: a, primal, dual, failures, all_identities_hold })
}
