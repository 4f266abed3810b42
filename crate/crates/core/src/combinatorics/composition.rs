use std::fmt;

use super::PositionSet;
use crate::error::{Error, Result};

/// An ordered list of positive integers. The empty composition is the unique
/// composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// The unique composition of `n` with `set(α) = s`.
    pub fn from_set(n: usize, s: &PositionSet) -> Result<Self> {
        if let Some(&bad) = s.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::Domain(format!(
                "position {bad} is outside [1, {}]",
                n.saturating_sub(1)
            )));
        }
        if n == 0 {
            return Ok(Self { parts: Vec::new() });
        }
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0;
        for &i in s.iter().chain(std::iter::once(&n)) {
            parts.push(i - prev);
            prev = i;
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `set(α) = {α₁, α₁+α₂, …, α₁+⋯+α_{ℓ-1}}`.
    pub fn set(&self) -> PositionSet {
        let mut acc = 0;
        let mut out = PositionSet::new();
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near concatenation: the last part of `self` merges with the first of `other`.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        match (self.parts.split_last(), other.parts.split_first()) {
            (Some((&last, init)), Some((&first, tail))) => {
                let mut parts = init.to_vec();
                parts.push(last + first);
                parts.extend_from_slice(tail);
                Composition { parts }
            }
            _ => self.concat(other),
        }
    }

    pub fn reverse(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All `2^{n-1}` compositions of `n`, ordered by the bitmask of `set(α)`.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition { parts: Vec::new() }];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let s: PositionSet = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_set(n, &s).expect("mask positions lie in [1, n-1]")
        })
        .collect()
}
