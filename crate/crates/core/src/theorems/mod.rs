//! Closed-form ribbon expansions and the checks that compare them against
//! the brute-force oracle.
//!
//! Every formula here has the shape `Σ_{α ⊨ N} q^{w(set(α))} r_α` for some
//! weight list `w` of length `N - 1`: the area sequence itself for paths and
//! melting lollipops, the modified sequence `b` for two-headed lollipops.

mod recurrence;
mod report;
pub mod verify;

pub use recurrence::{check_lee_recurrence, check_progression_lemma, check_union_lemma, RecurrenceTriple};
pub use report::Report;

use crate::combinatorics::{compositions, enumerate_partitions, enumerate_syt, weighted_sum};
use crate::error::Result;
use crate::graphs::{AreaSequence, Lollipop, TwoHeaded};
use crate::polyq::QPoly;
use crate::symfunc::{ribbon_by_tableaux, Basis, SymFunc};

/// `Σ_{α ⊨ n} q^{v(set(α))} r_α` in the Schur basis, with `n = v.len() + 1`.
pub fn weighted_ribbon_sum(v: &[usize]) -> SymFunc {
    let n = v.len() + 1;
    let mut out = SymFunc::zero(n, Basis::Schur);
    for alpha in compositions(n) {
        let e = weighted_sum(v, &alpha.set()).expect("set(α) ⊆ [n-1]");
        for (shape, c) in ribbon_by_tableaux(&alpha).terms() {
            out.add_term(shape.clone(), &c.shift(e));
        }
    }
    out
}

/// `Σ_{λ ⊢ n} Σ_{T ∈ SYT(λ)} q^{v(D(T))} s_λ`, summed tableau by tableau.
pub fn tableau_weighted_sum(v: &[usize]) -> SymFunc {
    let n = v.len() + 1;
    let mut out = SymFunc::zero(n, Basis::Schur);
    for shape in enumerate_partitions(n) {
        let mut c = QPoly::zero();
        for t in enumerate_syt(&shape) {
            c += &QPoly::monomial(weighted_sum(v, &t.descent_set()).expect("D(T) ⊆ [n-1]"));
        }
        out.add_term(shape, &c);
    }
    out
}

pub fn formula_path(n: usize) -> Result<SymFunc> {
    Ok(weighted_ribbon_sum(AreaSequence::path(n)?.values()))
}

pub fn formula_melting_lollipop(m: usize, n: usize, k: usize) -> Result<SymFunc> {
    Ok(weighted_ribbon_sum(Lollipop::new(m, n, k)?.area().values()))
}

/// Weighted by the modified sequence `b`, not by the area sequence.
pub fn formula_two_headed(params: &TwoHeaded) -> SymFunc {
    weighted_ribbon_sum(&params.modified_sequence())
}

pub fn corollary_schur_expansion(params: &TwoHeaded) -> SymFunc {
    tableau_weighted_sum(&params.modified_sequence())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::symfunc::{llt_bruteforce, monomial_to_schur, OracleConfig};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn oracle(a: &AreaSequence) -> SymFunc {
        monomial_to_schur(&llt_bruteforce(a, &OracleConfig::default()).unwrap()).unwrap()
    }

    #[test]
    fn small_sums() {
        assert_eq!(weighted_ribbon_sum(&[]), SymFunc::basis_element(Basis::Schur, p(&[1])));
        let mut expect = SymFunc::zero(2, Basis::Schur);
        expect.add_term(p(&[2]), &QPoly::one());
        expect.add_term(p(&[1, 1]), &QPoly::monomial(1));
        assert_eq!(weighted_ribbon_sum(&[1]), expect);
        assert_eq!(formula_path(2).unwrap(), expect);
        assert_eq!(formula_path(1).unwrap(), weighted_ribbon_sum(&[]));
    }

    #[test]
    fn two_headed_example_coefficient() {
        let expect = QPoly::from_coeffs([(2, 3), (3, 2)]);
        assert_eq!(weighted_ribbon_sum(&[1, 2, 2, 1]).coeff(&p(&[3, 2])), expect);
        let t = TwoHeaded::new(3, 0, -1, 3, 0).unwrap();
        assert_eq!(formula_two_headed(&t).coeff(&p(&[3, 2])), expect);
        assert_eq!(corollary_schur_expansion(&t).coeff(&p(&[3, 2])), expect);
        assert_eq!(corollary_schur_expansion(&t).coeff(&p(&[5])), QPoly::one());
    }

    #[test]
    fn formulas_match_oracle_on_small_graphs() {
        assert_eq!(formula_path(4).unwrap(), oracle(&AreaSequence::path(4).unwrap()));
        assert_eq!(formula_melting_lollipop(1, 0, 0).unwrap(), weighted_ribbon_sum(&[]));
        assert_eq!(formula_melting_lollipop(3, 0, 0).unwrap(), oracle(&AreaSequence::complete(3).unwrap()));
        assert_eq!(
            formula_melting_lollipop(3, 1, 1).unwrap(),
            oracle(&AreaSequence::melting_lollipop(3, 1, 1).unwrap())
        );
        let t = TwoHeaded::new(2, 0, 0, 2, 0).unwrap();
        assert_eq!(formula_two_headed(&t), oracle(&t.area()));
    }

    #[test]
    fn one_headed_case_is_the_lollipop_formula() {
        for total in 1..=7 {
            for t in TwoHeaded::all_with_vertices(total).into_iter().filter(|t| t.m1 == 1) {
                let lolli = formula_melting_lollipop(t.m2, (t.n + 1) as usize, t.k2).unwrap();
                assert_eq!(formula_two_headed(&t), lolli);
            }
        }
    }

    #[test]
    fn tableau_and_ribbon_routes_agree() {
        for total in 1..=6 {
            for t in TwoHeaded::all_with_vertices(total) {
                assert_eq!(corollary_schur_expansion(&t), formula_two_headed(&t), "{t}");
            }
        }
    }
}
