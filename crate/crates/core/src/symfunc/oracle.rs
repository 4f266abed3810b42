//! Brute-force expansions read straight off the coloring definitions.
//!
//! With `n` variables, the coefficient of `m_λ` in a degree-`n` symmetric
//! function equals the coefficient of `x_1^{λ_1} ⋯ x_ℓ^{λ_ℓ}`, so it suffices
//! to enumerate colorings `κ: [n] → [n]` and keep those whose color counts are
//! weakly decreasing. Colorings are split by the color of the first vertex and
//! processed in parallel; partial tables are merged by integer addition.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{Basis, SymFunc};
use crate::combinatorics::{enumerate_partitions, Composition};
use crate::error::{Error, Result};
use crate::graphs::AreaSequence;
use crate::polyq::QPoly;

pub const DEFAULT_MAX_VERTICES: usize = 8;

/// Size limit for the enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl OracleConfig {
    pub fn new(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    /// Reads `LLT_MAX_VERTICES`, falling back to the default on absence.
    pub fn from_env() -> Result<Self> {
        match std::env::var("LLT_MAX_VERTICES") {
            Ok(v) => v
                .trim()
                .parse()
                .map(Self::new)
                .map_err(|_| Error::Parse(format!("LLT_MAX_VERTICES={v:?} is not a number"))),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, size: usize) -> Result<()> {
        if size > self.max_vertices {
            return Err(Error::ResourceLimit {
                size,
                limit: self.max_vertices,
            });
        }
        Ok(())
    }
}

/// Number of colorings `[n] → [n]` the enumerators visit.
pub fn coloring_count(n: usize) -> BigInt {
    BigInt::from(n).pow(n as u32)
}

#[derive(Clone, Copy)]
enum Step {
    Free,
    /// `κ(i-1) < κ(i)`.
    Rise,
    /// `κ(i-1) ≥ κ(i)`.
    WeakFall,
}

struct Problem {
    n: usize,
    /// `back[v]`: neighbours `u < v` whose ascent into `v` is weighted.
    back: Vec<Vec<usize>>,
    steps: Vec<Step>,
    max_weight: usize,
    index: HashMap<Vec<usize>, usize>,
}

/// Per-partition weight histograms; the second table collects the weakly
/// increasing color-count vectors for the symmetry check.
#[derive(Clone)]
struct Tables {
    decreasing: Vec<Vec<u64>>,
    increasing: Vec<Vec<u64>>,
}

impl Tables {
    fn new(parts: usize, width: usize) -> Self {
        Self {
            decreasing: vec![vec![0; width]; parts],
            increasing: vec![vec![0; width]; parts],
        }
    }

    fn merge(mut self, other: Tables) -> Tables {
        for (a, b) in [
            (&mut self.decreasing, other.decreasing),
            (&mut self.increasing, other.increasing),
        ] {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
        }
        self
    }
}

impl Problem {
    fn new(n: usize, back: Vec<Vec<usize>>, steps: Vec<Step>) -> Self {
        let max_weight = back.iter().map(Vec::len).sum();
        let index = enumerate_partitions(n)
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                let mut v = p.parts().to_vec();
                v.resize(n, 0);
                (v, i)
            })
            .collect();
        Self {
            n,
            back,
            steps,
            max_weight,
            index,
        }
    }

    fn run(&self) -> Tables {
        let width = self.max_weight + 1;
        let parts = self.index.len();
        (0..self.n)
            .into_par_iter()
            .map(|first| {
                let mut tables = Tables::new(parts, width);
                let mut colors = vec![0; self.n];
                let mut counts = vec![0; self.n];
                colors[0] = first;
                counts[first] = 1;
                self.descend(1, 0, &mut colors, &mut counts, &mut tables);
                tables
            })
            .reduce(|| Tables::new(parts, width), Tables::merge)
    }

    fn descend(
        &self,
        v: usize,
        weight: usize,
        colors: &mut [usize],
        counts: &mut [usize],
        tables: &mut Tables,
    ) {
        if v == self.n {
            self.record(weight, counts, tables);
            return;
        }
        for c in 0..self.n {
            let prev = colors[v - 1];
            let allowed = match self.steps[v] {
                Step::Free => true,
                Step::Rise => prev < c,
                Step::WeakFall => prev >= c,
            };
            if !allowed {
                continue;
            }
            let w = weight + self.back[v].iter().filter(|&&u| colors[u] < c).count();
            colors[v] = c;
            counts[c] += 1;
            self.descend(v + 1, w, colors, counts, tables);
            counts[c] -= 1;
        }
    }

    fn record(&self, weight: usize, counts: &[usize], tables: &mut Tables) {
        if counts.windows(2).all(|w| w[0] >= w[1]) {
            tables.decreasing[self.index[counts]][weight] += 1;
        }
        if counts.windows(2).all(|w| w[0] <= w[1]) {
            let mut sorted = counts.to_vec();
            sorted.reverse();
            tables.increasing[self.index[&sorted]][weight] += 1;
        }
    }

    fn expand(&self, what: &str) -> Result<SymFunc> {
        let tables = self.run();
        let mut f = SymFunc::zero(self.n, Basis::Monomial);
        for (i, shape) in enumerate_partitions(self.n).into_iter().enumerate() {
            if tables.decreasing[i] != tables.increasing[i] {
                return Err(Error::NonSymmetric(format!(
                    "{what}: coefficient of x^{shape} differs from its reversed arrangement"
                )));
            }
            f.add_term(shape, &QPoly::from_dense(&tables.decreasing[i]));
        }
        Ok(f)
    }
}

/// Monomial expansion of the unicellular LLT polynomial
/// `Σ_κ q^{asc(κ)} x_{κ(1)} ⋯ x_{κ(n)}`, where `asc(κ)` counts edges
/// `(i,j)`, `i < j`, with `κ(i) < κ(j)`.
pub fn llt_bruteforce(a: &AreaSequence, config: &OracleConfig) -> Result<SymFunc> {
    let n = a.vertex_count();
    config.check(n)?;
    let mut back = vec![Vec::new(); n];
    for (i, j) in a.edges().iter() {
        back[j - 1].push(i - 1);
    }
    Problem::new(n, back, vec![Step::Free; n]).expand(&format!("LLT of {a}"))
}

/// Monomial expansion of the ribbon Schur function `r_α`: colorings rise at
/// each position of `set(α)` and weakly fall elsewhere.
pub fn ribbon_bruteforce(alpha: &Composition, config: &OracleConfig) -> Result<SymFunc> {
    let n = alpha.size();
    config.check(n)?;
    if n == 0 {
        return Ok(SymFunc::one(Basis::Monomial));
    }
    let set = alpha.set();
    let steps = (0..n)
        .map(|v| match v {
            0 => Step::Free,
            v if set.contains(&v) => Step::Rise,
            _ => Step::WeakFall,
        })
        .collect();
    Problem::new(n, vec![Vec::new(); n], steps).expand(&format!("ribbon {alpha}"))
}
