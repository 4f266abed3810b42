use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::{Basis, SymFunc};
use crate::combinatorics::{enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::polyq::QPoly;

/// Kostka numbers `K[λ][μ]` (SSYT of shape `λ` and content `μ`) for all
/// partitions of one degree, rows and columns in reverse-lex order.
#[derive(Debug)]
pub struct KostkaMatrix {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    pub fn new(degree: usize) -> Self {
        let partitions = enumerate_partitions(degree);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let entries = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| count_ssyt(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self {
            degree,
            partitions,
            index,
            entries,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> u64 {
        match (self.index.get(lambda), self.index.get(mu)) {
            (Some(&i), Some(&j)) => self.entries[i][j],
            _ => 0,
        }
    }
}

/// Counts SSYT of shape `shape` filled with `1^{c_1} 2^{c_2} …` for the
/// content `content`, by stripping the largest letter as a horizontal strip.
fn count_ssyt(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.to_vec(), content.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Choose how many cells to remove from each row: row i loses r_i ≤ shape[i] - shape[i+1].
    fn strips(
        shape: &[usize],
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == shape.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let next = shape.get(row + 1).copied().unwrap_or(0);
        let room = shape[row] - next;
        for r in 0..=room.min(left) {
            cur.push(shape[row] - r);
            strips(shape, row + 1, left - r, cur, out);
            cur.pop();
        }
    }
    let mut inner = Vec::new();
    strips(shape, 0, last, &mut Vec::new(), &mut inner);
    let total = inner.iter().map(|nu| count_ssyt(nu, rest, memo)).sum();
    memo.insert(key, total);
    total
}

/// Shared Kostka matrix for a degree, built once per process.
pub fn kostka_matrix(degree: usize) -> Arc<KostkaMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().expect("kostka cache poisoned").get(&degree) {
        return Arc::clone(k);
    }
    let built = Arc::new(KostkaMatrix::new(degree));
    let mut guard = cache.lock().expect("kostka cache poisoned");
    Arc::clone(guard.entry(degree).or_insert(built))
}

/// `s_λ = Σ_μ K[λ][μ] m_μ`.
pub fn schur_in_monomials(shape: &Partition) -> SymFunc {
    let k = kostka_matrix(shape.size());
    let mut f = SymFunc::zero(shape.size(), Basis::Monomial);
    for mu in k.partitions() {
        let c = k.get(shape, mu);
        if c != 0 {
            f.add_term(mu.clone(), &QPoly::from(c as i64));
        }
    }
    f
}

/// Schur expansion of a monomial-basis function by back-substitution through
/// the unitriangular Kostka system.
pub fn monomial_to_schur(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Monomial {
        return Err(Error::BasisMismatch {
            expected: "monomial",
            found: f.basis().name(),
        });
    }
    let k = kostka_matrix(f.degree());
    let parts = k.partitions();
    let mut residual: Vec<QPoly> = parts.iter().map(|p| f.coeff(p)).collect();
    let mut out = SymFunc::zero(f.degree(), Basis::Schur);
    for (i, lambda) in parts.iter().enumerate() {
        let c = std::mem::take(&mut residual[i]);
        if c.is_zero() {
            continue;
        }
        for (j, mu) in parts.iter().enumerate().skip(i + 1) {
            let kv = k.get(lambda, mu);
            if kv != 0 {
                residual[j] -= &c.scalar_mul(&BigInt::from(kv));
            }
        }
        out.add_term(lambda.clone(), &c);
    }
    Ok(out)
}

pub fn schur_to_monomial(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(Error::BasisMismatch {
            expected: "schur",
            found: f.basis().name(),
        });
    }
    let k = kostka_matrix(f.degree());
    let mut out = SymFunc::zero(f.degree(), Basis::Monomial);
    for (lambda, c) in f.terms() {
        for mu in k.partitions() {
            let kv = k.get(lambda, mu);
            if kv != 0 {
                out.add_term(mu.clone(), &c.scalar_mul(&BigInt::from(kv)));
            }
        }
    }
    Ok(out)
}
