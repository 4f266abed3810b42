use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{Partition, PositionSet};
use crate::error::{Error, Result};

/// A standard Young tableau, stored as its rows (English notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates a filling: shape is a partition, entries are `1..=n` once each,
    /// rows and columns strictly increase.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Domain(format!(
                    "entries must be 1..={n} exactly once: {rows:?}"
                )));
            }
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        if !rows_ok || !cols_ok {
            return Err(Error::Domain(format!("rows and columns must increase: {rows:?}")));
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `D(T)`: the `i` for which `i+1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> PositionSet {
        let n = self.size();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x] = r;
            }
        }
        (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All standard Young tableaux of shape `shape`, by backtracking over the
/// placements of `1..=n`.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    fn place(
        k: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k > n {
            out.push(Tableau {
                shape: Partition::new(shape.to_vec()).expect("shape is a partition"),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                place(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    place(1, shape.size(), shape.parts(), &mut rows, &mut out);
    out
}

/// `f^λ = n! / ∏ hooks`.
pub fn hook_length_count(shape: &Partition) -> BigInt {
    let n = shape.size();
    let mut num = BigInt::one();
    for i in 2..=n {
        num *= i;
    }
    let mut den = BigInt::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape.parts()[r + 1..].iter().take_while(|&&l| l > c).count();
            den *= arm + leg + 1;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_partitions;
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_shapes() {
        assert_eq!(enumerate_syt(&p(&[2, 2])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[5])).len(), 1);
        assert_eq!(enumerate_syt(&p(&[3, 2])).len(), 5);
        assert_eq!(enumerate_syt(&Partition::empty()).len(), 1);
    }

    #[test]
    fn descent_sets() {
        let row = Tableau::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.descent_set().is_empty());
        let square = Tableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(square.descent_set(), [2].into());
        let t = Tableau::new(vec![vec![1, 3, 5], vec![2, 4]]).unwrap();
        assert_eq!(t.descent_set(), [1, 3].into());
    }

    #[test]
    fn two_by_two_with_descent_two() {
        let with_two: Vec<_> = enumerate_partitions(4)
            .iter()
            .flat_map(enumerate_syt)
            .filter(|t| t.descent_set() == [2].into())
            .map(|t| t.rows().to_vec())
            .collect();
        assert_eq!(
            with_two,
            vec![vec![vec![1, 2, 4], vec![3]], vec![vec![1, 2], vec![3, 4]]]
        );
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 3], vec![2, 2]]).is_err());
        assert!(Tableau::new(vec![vec![1, 4], vec![3, 2]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn enumeration_matches_hook_lengths() {
        for n in 0..=8 {
            let mut sum_sq = BigInt::from(0);
            for shape in enumerate_partitions(n) {
                let all = enumerate_syt(&shape);
                for t in &all {
                    Tableau::new(t.rows().to_vec()).expect("enumerated tableau is valid");
                }
                let f = hook_length_count(&shape);
                assert_eq!(BigInt::from(all.len()), f, "shape {shape}");
                sum_sq += &f * &f;
            }
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(sum_sq, fact, "RSK count for n = {n}");
        }
    }
}
