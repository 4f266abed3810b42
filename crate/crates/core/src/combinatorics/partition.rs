use std::cmp::Ordering;
use std::fmt;

use super::Composition;
use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// Partitions order reverse-lexicographically, so `(4) < (3,1) < (2,2) < …`.
/// For partitions of the same size this refines dominance order: if `λ`
/// strictly dominates `μ` then `λ < μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "partition parts must be positive and weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
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

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        (0..len).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        })
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone()).expect("partition parts are positive")
    }

    /// Comma-joined parts, as used for JSON keys: `"3,2"`.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_key(key: &str) -> Result<Self> {
        if key.is_empty() {
            return Ok(Self::empty());
        }
        let parts = key
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition key {key:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    /// Generate-and-count: every weakly decreasing list drawn from all
    /// compositions of `n`.
    fn brute_force_count(n: usize) -> usize {
        super::super::compositions(n)
            .into_iter()
            .filter(|c| c.parts().windows(2).all(|w| w[0] >= w[1]))
            .count()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(brute_force_count(8), 22);
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), brute_force_count(n), "n = {n}");
        }
    }

    #[test]
    fn order_is_sorted_and_refines_dominance() {
        for n in 0..=8 {
            let all = enumerate_partitions(n);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    assert!(!b.dominates(a) || a == b, "{b} dominates earlier {a}");
                }
            }
        }
    }

    #[test]
    fn validation_and_keys() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 2]).key(), "3,2");
        assert_eq!(Partition::from_key("3,2").unwrap(), p(&[3, 2]));
        assert_eq!(Partition::from_key("").unwrap(), Partition::empty());
        assert!(Partition::from_key("2,3").is_err());
        assert_eq!(Partition::from_unsorted(vec![0, 1, 3, 0, 2]), p(&[3, 2, 1]));
        assert_eq!(p(&[3, 2]).to_string(), "[3,2]");
    }
}
