use std::sync::OnceLock;

/// Default bound on the order of groups handled by element-enumeration routines.
pub const DEFAULT_MAX_ORDER: u64 = 5000;

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "FORMATA_MAX_ORDER";

/// Seed used by the randomized phase of complement searches.
pub const DEFAULT_SEED: u64 = 0x5eed_f0a7;

/// Random complement-generation attempts before falling back to backtracking.
pub const COMPLEMENT_RANDOM_ATTEMPTS: usize = 512;

/// Above this order, projector verification skips the subgroup-interval checks.
pub const FULL_VERIFICATION_ORDER: u64 = 600;

/// Capacity bound for enumeration, read once from the environment.
pub fn max_order() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}
