//! Runtime budgets shared by the constructions and the CLI.

use serde::{Deserialize, Serialize};

/// Default number of codewords a full enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;
/// Default number of k-column subsets an MDS rank check may test.
pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;
/// Default largest field order the log/antilog tables are built for.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;
/// Default longest code length for which nesting is also checked on matrices.
pub const DEFAULT_MATRIX_LENGTH_CAP: usize = 255;
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub enumeration_cap: u64,
    pub subset_cap: u64,
    pub matrix_length_cap: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
            matrix_length_cap: DEFAULT_MATRIX_LENGTH_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

impl Config {
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.enumeration_cap = cap;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
