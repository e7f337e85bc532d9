//! Size guards for the exponential-time enumerations.

use crate::error::{LppError, Result};

/// Caps applied before any exhaustive enumeration.
///
/// Every enumeration in this crate is exponential in the worst case, so each
/// guard fails fast with the offending count instead of running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Limits {
    /// Largest poset accepted for cone geometry.
    pub max_vertices: usize,
    /// Largest poset for which linear extensions are listed one by one.
    pub max_extension_vertices: usize,
    /// Largest number of order ideals visited by the extension-counting DP.
    pub max_ideals: usize,
    /// Largest number of items (paths, antichains, extensions) materialized.
    pub max_items: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: 64,
            max_extension_vertices: 20,
            max_ideals: 1 << 22,
            max_items: 2_000_000,
        }
    }
}

impl Limits {
    pub const ENV_MAX_VERTICES: &'static str = "LPP_CONES_MAX_VERTICES";
    pub const ENV_MAX_EXTENSION_VERTICES: &'static str = "LPP_CONES_MAX_EXTENSION_VERTICES";
    pub const ENV_MAX_IDEALS: &'static str = "LPP_CONES_MAX_IDEALS";
    pub const ENV_MAX_ITEMS: &'static str = "LPP_CONES_MAX_ITEMS";

    /// Defaults overridden by the `LPP_CONES_MAX_*` environment variables.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        let read = |name: &str, slot: &mut usize| -> Result<()> {
            if let Ok(raw) = std::env::var(name) {
                *slot = raw
                    .trim()
                    .parse()
                    .map_err(|_| LppError::Parse(format!("{name}={raw} is not a count")))?;
            }
            Ok(())
        };
        read(Self::ENV_MAX_VERTICES, &mut limits.max_vertices)?;
        read(Self::ENV_MAX_EXTENSION_VERTICES, &mut limits.max_extension_vertices)?;
        read(Self::ENV_MAX_IDEALS, &mut limits.max_ideals)?;
        read(Self::ENV_MAX_ITEMS, &mut limits.max_items)?;
        Ok(limits)
    }

    pub fn check_vertices(&self, count: usize) -> Result<()> {
        guard("poset size", count, self.max_vertices)
    }

    pub fn check_extension_vertices(&self, count: usize) -> Result<()> {
        guard("poset size for extension listing", count, self.max_extension_vertices)
    }
}

pub(crate) fn guard(what: &'static str, count: usize, limit: usize) -> Result<()> {
    if count > limit {
        Err(LppError::GuardExceeded { what, count, limit })
    } else {
        Ok(())
    }
}
