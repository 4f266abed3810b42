use super::{Basis, SymFunc};
use crate::combinatorics::{enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::polyq::QPoly;

/// Product of two monomial-basis functions.
///
/// The coefficient of `m_ν` in `f·g` is the coefficient of `x^ν` in the
/// product of the underlying polynomials in `|ν|` variables: the sum of
/// `f_λ g_μ` over exponent vectors `α` in the orbit of `λ` with `α ≤ ν`
/// whose complement `ν - α` lies in the orbit of `μ`.
pub fn mul(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    for h in [f, g] {
        if h.basis() != Basis::Monomial {
            return Err(Error::BasisMismatch {
                expected: "monomial",
                found: h.basis().name(),
            });
        }
    }
    let degree = f.degree() + g.degree();
    let mut out = SymFunc::zero(degree, Basis::Monomial);
    for nu in enumerate_partitions(degree) {
        let mut total = QPoly::zero();
        for (lambda, fc) in f.terms() {
            if lambda.len() > nu.len() {
                continue;
            }
            for_each_arrangement(lambda, nu.parts(), |alpha| {
                let rest: Vec<usize> = nu.parts().iter().zip(alpha).map(|(n, a)| n - a).collect();
                let gc = g.coeff(&Partition::from_unsorted(rest));
                if !gc.is_zero() {
                    total += &(fc * &gc);
                }
            });
        }
        out.add_term(nu, &total);
    }
    Ok(out)
}

/// Calls `visit` on every distinct rearrangement of `lambda`, padded with
/// zeros to `bound.len()`, that is bounded componentwise by `bound`.
fn for_each_arrangement(lambda: &Partition, bound: &[usize], mut visit: impl FnMut(&[usize])) {
    // Distinct values with multiplicities; zeros fill the padding.
    let mut values: Vec<(usize, usize)> = Vec::new();
    for &p in lambda.parts() {
        match values.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => values.push((p, 1)),
        }
    }
    values.push((0, bound.len() - lambda.len()));
    fn go(
        pos: usize,
        bound: &[usize],
        values: &mut [(usize, usize)],
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == bound.len() {
            visit(cur);
            return;
        }
        for i in 0..values.len() {
            let (v, m) = values[i];
            if m == 0 || v > bound[pos] {
                continue;
            }
            values[i].1 -= 1;
            cur.push(v);
            go(pos + 1, bound, values, cur, visit);
            cur.pop();
            values[i].1 += 1;
        }
    }
    go(0, bound, &mut values, &mut Vec::new(), &mut visit);
}
