//! Size guards for the exponential parts of the crate.
//!
//! `STRONGDIM_MAX_N` raises (or lowers) the solver guards. Here be
//! exponential dragons: the brute-force routines are `O(2^n)`.

/// Hard cap on graph order; an `n x n` distance matrix must stay cheap.
pub const MAX_ORDER: usize = 4096;

/// Default order limit for the definitional strong metric dimension search.
pub const BRUTE_FORCE_DIMS: usize = 14;

/// Default order limit for subset-enumeration cross-checks of twins-free cliques.
pub const BRUTE_FORCE_VARPI: usize = 10;

/// Default order limit for exhaustive labeled-graph enumeration.
pub const LABELED_ENUMERATION: usize = 6;

/// Masks in the brute-force search are `u64`.
pub const BRUTE_FORCE_CEILING: usize = 63;

pub const ENV_OVERRIDE: &str = "STRONGDIM_MAX_N";

fn env_override() -> Option<usize> {
    std::env::var(ENV_OVERRIDE).ok()?.trim().parse().ok()
}

pub fn brute_force_dims_limit() -> usize {
    env_override()
        .unwrap_or(BRUTE_FORCE_DIMS)
        .min(BRUTE_FORCE_CEILING)
}

pub fn labeled_enumeration_limit() -> usize {
    env_override().unwrap_or(LABELED_ENUMERATION)
}

/// Most factor pairs one verification run may instantiate.
pub const VERIFY_PAIRS: usize = 100_000;

/// Largest factor order in generated verification corpora.
pub const VERIFY_FACTOR_ORDER: usize = 10;
