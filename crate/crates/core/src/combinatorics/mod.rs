//! Compositions, partitions, positional subsets and standard Young tableaux.
//!
//! Subsets of `[n-1]` are 1-based sorted sets, matching the `set(α)` encoding of
//! compositions.

mod composition;
mod partition;
mod tableau;

use std::collections::BTreeSet;

pub use composition::{compositions, Composition};
pub use partition::{enumerate_partitions, Partition};
pub use tableau::{enumerate_syt, hook_length_count, Tableau};

use crate::error::{Error, Result};

/// A subset of `[n-1]`, 1-based.
pub type PositionSet = BTreeSet<usize>;

/// `v(S)`: the sum of `v_s` over `s ∈ S`, with `v` indexed from 1.
pub fn weighted_sum(v: &[usize], s: &PositionSet) -> Result<usize> {
    s.iter()
        .map(|&i| {
            i.checked_sub(1)
                .and_then(|j| v.get(j).copied())
                .ok_or_else(|| {
                    Error::Domain(format!(
                        "position {i} is outside 1..={} of the weight list",
                        v.len()
                    ))
                })
        })
        .sum()
}
