use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{Basis, SymFunc};
use crate::combinatorics::{enumerate_partitions, enumerate_syt, Composition, Partition, PositionSet};
use crate::polyq::QPoly;

/// For one degree: SYT counts per shape, grouped by descent set.
type DescentIndex = HashMap<PositionSet, Vec<(Partition, i64)>>;

fn descent_index(n: usize) -> Arc<DescentIndex> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DescentIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ix) = cache.lock().expect("descent cache poisoned").get(&n) {
        return Arc::clone(ix);
    }
    let mut index: DescentIndex = HashMap::new();
    for shape in enumerate_partitions(n) {
        let mut by_set: HashMap<PositionSet, i64> = HashMap::new();
        for t in enumerate_syt(&shape) {
            *by_set.entry(t.descent_set()).or_default() += 1;
        }
        for (set, count) in by_set {
            index.entry(set).or_default().push((shape.clone(), count));
        }
    }
    let built = Arc::new(index);
    let mut guard = cache.lock().expect("descent cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// `r_α = Σ_λ #{T ∈ SYT(λ) : D(T) = set(α)} s_λ`.
pub fn ribbon_by_tableaux(alpha: &Composition) -> SymFunc {
    let n = alpha.size();
    let mut f = SymFunc::zero(n, Basis::Schur);
    if let Some(terms) = descent_index(n).get(&alpha.set()) {
        for (shape, count) in terms {
            f.add_term(shape.clone(), &QPoly::from(*count));
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn r22() {
        let r = ribbon_by_tableaux(&Composition::new(vec![2, 2]).unwrap());
        let mut expect = SymFunc::zero(4, Basis::Schur);
        expect.add_term(p(&[3, 1]), &QPoly::one());
        expect.add_term(p(&[2, 2]), &QPoly::one());
        assert_eq!(r, expect);
    }

    #[test]
    fn row_and_column() {
        for n in 1..=7 {
            assert_eq!(
                ribbon_by_tableaux(&Composition::new(vec![n]).unwrap()),
                SymFunc::basis_element(Basis::Schur, p(&[n]))
            );
            assert_eq!(
                ribbon_by_tableaux(&Composition::new(vec![1; n]).unwrap()),
                SymFunc::basis_element(Basis::Schur, p(&vec![1; n]))
            );
        }
    }

    #[test]
    fn empty_composition_is_one() {
        assert_eq!(ribbon_by_tableaux(&Composition::new(vec![]).unwrap()), SymFunc::one(Basis::Schur));
    }
}
