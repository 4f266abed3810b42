//! Unit interval graphs, stored canonically as area sequences.
//!
//! A unit interval graph on `[n]` has the property that `(i,j) ∈ E` and
//! `i ≤ k < l ≤ j` imply `(k,l) ∈ E`. Its area sequence records, for each
//! vertex `i < n`, the furthest reach `j - i` of an edge leaving it.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Area sequence `(a_1, …, a_{n-1})` of a unit interval graph on `n ≥ 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AreaSequence {
    area: Vec<usize>,
}

impl AreaSequence {
    /// Checks `a_i ≤ n - i` and `a_{i+1} ≥ a_i - 1`.
    pub fn new(area: Vec<usize>) -> Result<Self> {
        let n = area.len() + 1;
        for (idx, &a) in area.iter().enumerate() {
            let i = idx + 1;
            if a > n - i {
                return Err(Error::Domain(format!(
                    "a_{i} = {a} reaches past vertex {n} in {area:?}"
                )));
            }
            if let Some(&next) = area.get(idx + 1) {
                if next + 1 < a {
                    return Err(Error::Domain(format!(
                        "a_{} = {next} < a_{i} - 1 = {} in {area:?}",
                        i + 1,
                        a - 1
                    )));
                }
            }
        }
        Ok(Self { area })
    }

    /// The one-vertex graph.
    pub fn single_vertex() -> Self {
        Self { area: Vec::new() }
    }

    pub fn values(&self) -> &[usize] {
        &self.area
    }

    pub fn vertex_count(&self) -> usize {
        self.area.len() + 1
    }

    /// `a_i` with 1-based `i`; `a_n` of the last vertex is 0 by definition.
    pub fn get(&self, i: usize) -> Option<usize> {
        match i {
            0 => None,
            i if i == self.vertex_count() => Some(0),
            i => self.area.get(i - 1).copied(),
        }
    }

    pub fn edges(&self) -> EdgeSet {
        let n = self.vertex_count();
        let edges = self
            .area
            .iter()
            .enumerate()
            .flat_map(|(idx, &a)| (1..=a).map(move |d| (idx + 1, idx + 1 + d)))
            .collect();
        EdgeSet { n, edges }
    }

    /// Area sequence of the reversed graph `G^r`.
    pub fn transpose(&self) -> Self {
        let n = self.vertex_count();
        let reversed = EdgeSet {
            n,
            edges: self.edges().edges.iter().map(|&(i, j)| (n + 1 - j, n + 1 - i)).collect(),
        };
        reversed.area().expect("reversal preserves the unit interval condition")
    }

    /// `G + H`: vertex `n` of `G` is identified with vertex 1 of `H`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut area = self.area.clone();
        area.extend_from_slice(&other.area);
        Self { area }
    }

    /// `G ∪ H` on `n + m` vertices.
    pub fn union(&self, other: &Self) -> Self {
        let mut area = self.area.clone();
        area.push(0);
        area.extend_from_slice(&other.area);
        Self { area }
    }

    /// `P_n`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a path needs at least one vertex".into()));
        }
        Ok(Self { area: vec![1; n - 1] })
    }

    /// `K_m`.
    pub fn complete(m: usize) -> Result<Self> {
        Self::melting_complete(m, 0)
    }

    /// `K_m^{(k)}`: `K_m` without the edges `(1,m), (1,m-1), …, (1,m-k+1)`.
    pub fn melting_complete(m: usize, k: usize) -> Result<Self> {
        if m == 0 || k >= m {
            return Err(Error::Domain(format!(
                "melting complete graph needs m ≥ 1 and 0 ≤ k ≤ m-1, got m = {m}, k = {k}"
            )));
        }
        if m == 1 {
            return Ok(Self::single_vertex());
        }
        let mut area = vec![m - 1 - k];
        area.extend((1..m - 1).rev());
        Ok(Self { area })
    }

    /// `L_{m,n}^{(k)} = P_{n+1} + K_m^{(k)}`.
    pub fn melting_lollipop(m: usize, n: usize, k: usize) -> Result<Self> {
        Ok(Self::path(n + 1)?.concat(&Self::melting_complete(m, k)?))
    }

    /// The two-headed melting lollipop `(K_{m1}^{(k1)})^r + P_{n+2} + K_{m2}^{(k2)}`.
    pub fn two_headed(m1: usize, k1: usize, n: i64, m2: usize, k2: usize) -> Result<Self> {
        TwoHeaded::new(m1, k1, n, m2, k2).map(|t| t.area())
    }
}

impl fmt::Display for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.area.iter().map(usize::to_string).collect();
        write!(f, "({})", vals.join(","))
    }
}

/// The edge set of a graph on `[n]`, pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let edges: BTreeSet<_> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i == 0 || i >= j || j > n) {
            return Err(Error::InvalidGraph(format!(
                "edge ({i},{j}) is not of the form 1 ≤ i < j ≤ {n}"
            )));
        }
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// `a_i = max({0} ∪ {j - i : (i,j) ∈ E})`, after checking closure.
    pub fn area(&self) -> Result<AreaSequence> {
        for &(i, j) in &self.edges {
            for k in i..j {
                for l in k + 1..=j {
                    if !self.edges.contains(&(k, l)) {
                        return Err(Error::InvalidGraph(format!(
                            "edge ({i},{j}) is present but ({k},{l}) is not"
                        )));
                    }
                }
            }
        }
        let mut area = vec![0; self.n - 1];
        for &(i, j) in &self.edges {
            area[i - 1] = area[i - 1].max(j - i);
        }
        AreaSequence::new(area)
    }
}

/// Parameters of a two-headed melting lollipop `_{m1}^{(k1)}L_{m2,n}^{(k2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoHeaded {
    pub m1: usize,
    pub k1: usize,
    pub n: i64,
    pub m2: usize,
    pub k2: usize,
}

impl TwoHeaded {
    pub fn new(m1: usize, k1: usize, n: i64, m2: usize, k2: usize) -> Result<Self> {
        if n < -1 {
            return Err(Error::Domain(format!("need n ≥ -1, got {n}")));
        }
        for (m, k) in [(m1, k1), (m2, k2)] {
            if m == 0 || k >= m {
                return Err(Error::Domain(format!(
                    "head needs m ≥ 1 and 0 ≤ k ≤ m-1, got m = {m}, k = {k}"
                )));
            }
        }
        Ok(Self { m1, k1, n, m2, k2 })
    }

    pub fn vertex_count(&self) -> usize {
        (self.m1 as i64 + self.n + self.m2 as i64) as usize
    }

    pub fn area(&self) -> AreaSequence {
        let left = AreaSequence::melting_complete(self.m1, self.k1)
            .expect("validated")
            .transpose();
        let middle = AreaSequence::path((self.n + 2) as usize).expect("n ≥ -1");
        let right = AreaSequence::melting_complete(self.m2, self.k2).expect("validated");
        left.concat(&middle).concat(&right)
    }

    /// The weight sequence `b`: the first `m1 - 1` area entries are replaced by
    /// `(1, 2, …, m1-2, m1-k1-1)`. For `m1 = 1`, `b` is the area sequence itself.
    pub fn modified_sequence(&self) -> Vec<usize> {
        let a = self.area();
        if self.m1 == 1 {
            return a.values().to_vec();
        }
        let mut b: Vec<usize> = (1..self.m1 - 1).collect();
        b.push(self.m1 - self.k1 - 1);
        b.extend_from_slice(&a.values()[self.m1 - 1..]);
        b
    }

    /// First parameter tuple (in [`TwoHeaded::all_with_vertices`] order) whose
    /// graph has area sequence `a`.
    pub fn recognize(a: &AreaSequence) -> Option<Self> {
        Self::all_with_vertices(a.vertex_count())
            .into_iter()
            .find(|t| &t.area() == a)
    }

    /// Every valid parameter tuple on exactly `total` vertices.
    pub fn all_with_vertices(total: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for m1 in 1..=total + 1 {
            for m2 in 1..=total + 1 - m1 {
                let n = total as i64 - (m1 + m2) as i64;
                for k1 in 0..m1 {
                    for k2 in 0..m2 {
                        if let Ok(t) = Self::new(m1, k1, n, m2, k2) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for TwoHeaded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{}", self.m1, self.k1, self.n, self.m2, self.k2)
    }
}

/// Parameters of a melting lollipop `L_{m,n}^{(k)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lollipop {
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl Lollipop {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        AreaSequence::melting_complete(m, k)?;
        Ok(Self { m, n, k })
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.n
    }

    pub fn area(&self) -> AreaSequence {
        AreaSequence::melting_lollipop(self.m, self.n, self.k).expect("validated")
    }

    /// Every valid `(m, n, k)` on exactly `total ≥ 1` vertices.
    pub fn all_with_vertices(total: usize) -> Vec<Self> {
        (1..=total)
            .flat_map(|m| (0..m).map(move |k| Self { m, n: total - m, k }))
            .collect()
    }
}

impl fmt::Display for Lollipop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.m, self.n, self.k)
    }
}

/// Every valid area sequence on `n ≥ 1` vertices.
pub fn all_area_sequences(n: usize) -> Vec<AreaSequence> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<AreaSequence>) {
        let i = cur.len() + 1;
        if i == n {
            out.push(AreaSequence { area: cur.clone() });
            return;
        }
        let lo = cur.last().map_or(0, |&a| a.saturating_sub(1));
        for a in lo..=n - i {
            cur.push(a);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}
