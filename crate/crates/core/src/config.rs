//! Size caps, search budgets and run-wide settings.

use serde::{Deserialize, Serialize};

/// Upper limits that keep exponential constructions from running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum vertex count of a Cartesian or strong product.
    pub product_vertices: usize,
    /// Maximum vertex count of the top of a prism tower.
    pub tower_vertices: usize,
    /// Maximum order accepted by the exact minimum leaf search.
    pub ml_vertices: usize,
    /// Maximum tower size that the exhaustive prism-power probe will verify.
    pub verify_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            product_vertices: 64,
            tower_vertices: 4096,
            ml_vertices: 14,
            verify_vertices: 16,
        }
    }
}

/// Work limits for exhaustive searches. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of pairings an exhaustive verification may examine.
    pub max_pairings: Option<u64>,
    /// Maximum backtracking nodes spent on a single search.
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_pairings: None,
        max_nodes: None,
    };

    pub fn with_max_pairings(mut self, max: u64) -> Self {
        self.max_pairings = Some(max);
        self
    }

    pub fn with_max_nodes(mut self, max: u64) -> Self {
        self.max_nodes = Some(max);
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Dot,
    Table,
}

/// Everything a command needs to run reproducibly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub caps: Caps,
    pub budget: Budget,
    pub workers: usize,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            caps: Caps::default(),
            budget: Budget::UNLIMITED,
            workers: 1,
            seed: 0,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    /// Seed for the `index`-th independent stream derived from the run seed.
    pub fn stream_seed(&self, index: u64) -> u64 {
        split_seed(self.seed, index)
    }
}

/// SplitMix64 step, used to derive per-worker seeds from one run seed.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_seeds_are_distinct() {
        let cfg = RunConfig { seed: 7, ..RunConfig::default() };
        let seeds: std::collections::HashSet<_> = (0..1000).map(|i| cfg.stream_seed(i)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_eq!(cfg.stream_seed(3), split_seed(7, 3));
    }
}
