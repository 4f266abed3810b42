use serde_json::json;

use super::verify::LltOracle;
use super::{weighted_ribbon_sum, Report};
use crate::error::{Error, Result};
use crate::graphs::AreaSequence;
use crate::polyq::QPoly;
use crate::symfunc::{monomial_to_schur, mul, schur_to_monomial};

fn precondition(hypothesis: &'static str, detail: String) -> Error {
    Error::Precondition { hypothesis, detail }
}

/// Checks that `v`, `v'`, `v''` agree except at 1-based position `i`, where
/// `v_i = v'_i + 1 = v''_i + 2`.
fn check_progression(v: &[usize], v1: &[usize], v2: &[usize], i: usize) -> Result<()> {
    if v.len() != v1.len() || v.len() != v2.len() {
        return Err(precondition(
            "equal lengths",
            format!("lengths {}, {}, {}", v.len(), v1.len(), v2.len()),
        ));
    }
    if i == 0 || i > v.len() {
        return Err(precondition(
            "index bounds",
            format!("position {i} is outside [1, {}]", v.len()),
        ));
    }
    for j in 0..v.len() {
        let ok = if j + 1 == i {
            v[j] == v1[j] + 1 && v1[j] == v2[j] + 1
        } else {
            v[j] == v1[j] && v[j] == v2[j]
        };
        if !ok {
            return Err(precondition(
                "a_i = a'_i + 1 = a''_i + 2",
                format!(
                    "position {}: {} / {} / {} (triple differs only at {i})",
                    j + 1,
                    v[j],
                    v1[j],
                    v2[j]
                ),
            ));
        }
    }
    Ok(())
}

/// Unique position at which the lists differ, if there is exactly one.
fn differing_position(v: &[usize], v1: &[usize], v2: &[usize]) -> Result<usize> {
    if v.len() != v1.len() || v.len() != v2.len() {
        return Err(precondition(
            "equal lengths",
            format!("lengths {}, {}, {}", v.len(), v1.len(), v2.len()),
        ));
    }
    let diff: Vec<usize> = (0..v.len())
        .filter(|&j| v[j] != v1[j] || v[j] != v2[j])
        .map(|j| j + 1)
        .collect();
    match diff.as_slice() {
        [i] => Ok(*i),
        _ => Err(precondition(
            "a_i = a'_i + 1 = a''_i + 2",
            format!("sequences must differ in exactly one position, found {diff:?}"),
        )),
    }
}

/// Area sequences `a`, `a'`, `a''` satisfying the hypotheses of the Lee
/// recurrence `LLT_a + q LLT_{a''} = (1+q) LLT_{a'}` at position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTriple {
    a: AreaSequence,
    a1: AreaSequence,
    a2: AreaSequence,
    i: usize,
}

impl RecurrenceTriple {
    /// Checks, on the raw lists and in this order:
    /// - the triple differs only at `i` with `a_i = a'_i + 1 = a''_i + 2`;
    /// - H1: `a_{i-1} + 1 ≤ a_i`, with `a_0 = 0`;
    /// - H2: `a_{i+a_i-1} = a_{i+a_i} + 1`. The index `i + a_i` may equal the
    ///   vertex count `N`, where `a_N = 0` (the last vertex has no edge to its
    ///   right); anything further is rejected;
    ///
    /// and only then that all three are valid area sequences.
    pub fn new(a: Vec<usize>, a1: Vec<usize>, a2: Vec<usize>, i: usize) -> Result<Self> {
        check_progression(&a, &a1, &a2, i)?;
        let at = |j: usize| -> Option<usize> {
            match j {
                0 => None,
                j if j == a.len() + 1 => Some(0),
                j => a.get(j - 1).copied(),
            }
        };
        let ai = a[i - 1];
        let before = if i == 1 { 0 } else { a[i - 2] };
        if before + 1 > ai {
            return Err(precondition(
                "H1",
                format!("a_{} + 1 = {} exceeds a_{i} = {ai}", i - 1, before + 1),
            ));
        }
        let j = i + ai;
        let (Some(lo), Some(hi)) = (at(j - 1), at(j)) else {
            return Err(precondition(
                "index bounds",
                format!("H2 needs a_{} and a_{j}, beyond the {} vertices", j - 1, a.len() + 1),
            ));
        };
        if lo != hi + 1 {
            return Err(precondition(
                "H2",
                format!("a_{} = {lo} but a_{j} + 1 = {}", j - 1, hi + 1),
            ));
        }
        Ok(Self {
            a: AreaSequence::new(a)?,
            a1: AreaSequence::new(a1)?,
            a2: AreaSequence::new(a2)?,
            i,
        })
    }

    /// Like [`RecurrenceTriple::new`], with `i` taken as the one position where
    /// the lists differ.
    pub fn infer(a: Vec<usize>, a1: Vec<usize>, a2: Vec<usize>) -> Result<Self> {
        let i = differing_position(&a, &a1, &a2)?;
        Self::new(a, a1, a2, i)
    }

    pub fn position(&self) -> usize {
        self.i
    }

    pub fn sequences(&self) -> [&AreaSequence; 3] {
        [&self.a, &self.a1, &self.a2]
    }
}

/// Checks the Lee recurrence by brute force, and the progression lemma for
/// the same three lists used as ribbon weights.
pub fn check_lee_recurrence(t: &RecurrenceTriple, oracle: &LltOracle) -> Result<Report> {
    let [a, a1, a2] = t.sequences().map(|s| oracle.schur(s));
    let (a, a1, a2) = (a?, a1?, a2?);
    let lhs = &a + &a2.scale(&QPoly::monomial(1));
    let rhs = a1.scale(&QPoly::one_plus_q());
    let params = json!({
        "a": t.a.values(),
        "a_prime": t.a1.values(),
        "a_double_prime": t.a2.values(),
        "i": t.i,
    });
    let lemma = check_progression_lemma(t.a.values(), t.a1.values(), t.a2.values(), t.i)?;
    Ok(Report::new("lee-recurrence", params, lhs, rhs).require("progression_lemma_holds", lemma.holds))
}

/// `Σ q^{v(set α)} r_α + q Σ q^{v''(set α)} r_α = (1+q) Σ q^{v'(set α)} r_α`.
pub fn check_progression_lemma(v: &[usize], v1: &[usize], v2: &[usize], i: usize) -> Result<Report> {
    check_progression(v, v1, v2, i)?;
    let lhs = &weighted_ribbon_sum(v) + &weighted_ribbon_sum(v2).scale(&QPoly::monomial(1));
    let rhs = weighted_ribbon_sum(v1).scale(&QPoly::one_plus_q());
    let params = json!({"v": v, "v_prime": v1, "v_double_prime": v2, "i": i});
    Ok(Report::new("progression-lemma", params, lhs, rhs))
}

/// The product of the weighted sums for `v` and `w`, computed in the monomial
/// basis, against the weighted sum for `(v, 0, w)`.
pub fn check_union_lemma(v: &[usize], w: &[usize]) -> Result<Report> {
    let left = schur_to_monomial(&weighted_ribbon_sum(v))?;
    let right = schur_to_monomial(&weighted_ribbon_sum(w))?;
    let lhs = monomial_to_schur(&mul(&left, &right)?)?;
    let joined: Vec<usize> = v.iter().copied().chain([0]).chain(w.iter().copied()).collect();
    let rhs = weighted_ribbon_sum(&joined);
    Ok(Report::new("union-lemma", json!({"v": v, "w": w}), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::OracleConfig;

    fn oracle() -> LltOracle {
        LltOracle::new(OracleConfig::default())
    }

    #[test]
    fn lollipop_triple_holds() {
        // L_{4,1}^{(0)}, L_{4,1}^{(1)}, L_{4,1}^{(2)} at position n + 1 = 2.
        let [a, a1, a2] = [0, 1, 2].map(|k| AreaSequence::melting_lollipop(4, 1, k).unwrap().values().to_vec());
        let t = RecurrenceTriple::new(a, a1, a2, 2).unwrap();
        let r = check_lee_recurrence(&t, &oracle()).unwrap();
        assert!(r.holds, "{}", r.to_json());
    }

    #[test]
    fn two_headed_triple_holds() {
        let [a, a1, a2] = [0, 1, 2].map(|k| AreaSequence::two_headed(2, 1, 0, 4, k).unwrap().values().to_vec());
        let t = RecurrenceTriple::new(a, a1, a2, 3).unwrap();
        assert!(check_lee_recurrence(&t, &oracle()).unwrap().holds);
    }

    #[test]
    fn hypotheses_are_named() {
        let named = |r: Result<RecurrenceTriple>| match r {
            Err(Error::Precondition { hypothesis, .. }) => hypothesis,
            other => panic!("expected a precondition error, got {other:?}"),
        };
        assert_eq!(
            named(RecurrenceTriple::new(vec![2, 1], vec![2, 1], vec![0, 1], 1)),
            "a_i = a'_i + 1 = a''_i + 2"
        );
        assert_eq!(named(RecurrenceTriple::new(vec![2, 2, 1], vec![2, 1, 1], vec![2, 0, 1], 2)), "H1");
        assert_eq!(named(RecurrenceTriple::new(vec![2, 2, 2, 1], vec![1, 2, 2, 1], vec![0, 2, 2, 1], 1)), "H2");
        assert_eq!(named(RecurrenceTriple::new(vec![2, 1], vec![1, 1], vec![0, 1], 3)), "index bounds");
        assert_eq!(named(RecurrenceTriple::new(vec![2, 1], vec![1, 1], vec![0, 1, 1], 1)), "equal lengths");
        assert!(RecurrenceTriple::infer(vec![2, 1], vec![1, 1], vec![1, 0]).is_err());
        assert_eq!(RecurrenceTriple::infer(vec![2, 1], vec![1, 1], vec![0, 1]).unwrap().position(), 1);
    }

    #[test]
    fn invalid_area_sequences_are_rejected_after_hypotheses() {
        // Passes the hypotheses at position 1, but a_5 = 0 < a_4 - 1.
        let r = RecurrenceTriple::new(vec![2, 1, 0, 3, 0, 0], vec![1, 1, 0, 3, 0, 0], vec![0, 1, 0, 3, 0, 0], 1);
        assert!(matches!(r, Err(Error::Domain(_))), "{r:?}");
    }

    #[test]
    fn recurrence_at_the_last_vertex() {
        // K_3 at position 1: i + a_i = 3 = N, so a_3 is the last vertex's 0.
        let t = RecurrenceTriple::new(vec![2, 1], vec![1, 1], vec![0, 1], 1).unwrap();
        assert!(check_lee_recurrence(&t, &oracle()).unwrap().holds);
    }

    #[test]
    fn union_lemma_examples() {
        assert!(check_union_lemma(&[], &[]).unwrap().holds);
        assert!(check_union_lemma(&[1], &[1]).unwrap().holds);
        assert!(check_union_lemma(&[1, 1], &[1]).unwrap().holds);
        assert!(check_union_lemma(&[2, 0, 1], &[3]).unwrap().holds);
    }

    #[test]
    fn progression_lemma_examples() {
        assert!(check_progression_lemma(&[3, 1], &[2, 1], &[1, 1], 1).unwrap().holds);
        assert!(check_progression_lemma(&[0, 5, 2], &[0, 4, 2], &[0, 3, 2], 2).unwrap().holds);
        assert!(check_progression_lemma(&[3, 1], &[2, 1], &[2, 1], 1).is_err());
    }
}
