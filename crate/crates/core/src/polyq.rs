//! Univariate polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

/// A polynomial in `q`, stored sparsely as degree → nonzero coefficient.
///
/// The zero polynomial is the empty map, so derived equality is exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The polynomial `q^e`.
    pub fn monomial(e: usize) -> Self {
        Self::term(BigInt::one(), e)
    }

    /// `q^e` for a signed exponent; negative exponents are rejected.
    pub fn monomial_checked(e: i64) -> Result<Self> {
        usize::try_from(e)
            .map(Self::monomial)
            .map_err(|_| Error::Domain(format!("negative exponent {e}")))
    }

    /// `c * q^e`.
    pub fn term(c: impl Into<BigInt>, e: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), e);
        p
    }

    /// `1 + q`.
    pub fn one_plus_q() -> Self {
        Self::from_coeffs([(0, 1), (1, 1)])
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_coeffs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (usize, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(c.into(), e);
        }
        p
    }

    /// Dense counts indexed by degree, as produced by the enumerators.
    pub fn from_dense(counts: &[u64]) -> Self {
        Self::from_coeffs(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e, c)),
        )
    }

    pub fn add_term(&mut self, c: BigInt, e: usize) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e + shift, v.clone())).collect(),
        }
    }

    /// The value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// LaTeX rendering, e.g. `3q^{2}+2q^{3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let show_mag = e == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match e {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{{{e}}}")),
            }
        }
        out
    }

    /// JSON object keyed by degree, e.g. `{"2":3,"3":2}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in self.terms() {
            let num: Number = c.to_string().parse().expect("integer literal is a JSON number");
            map.insert(e.to_string(), Value::Number(num));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected a q-polynomial object, got {value}")))?;
        let mut p = Self::zero();
        for (k, v) in map {
            let e: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree key {k:?}")))?;
            let c: BigInt = match v {
                Value::Number(n) => n.to_string().parse().ok(),
                _ => None,
            }
            .ok_or_else(|| Error::Parse(format!("bad coefficient {v}")))?;
            p.add_term(c, e);
        }
        Ok(p)
    }
}

/// Plain rendering in ascending degree, e.g. `3*q^2 + 2*q^3`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        Self::term(c, 0)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(c.clone(), e);
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(-c, e);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let p = QPoly::one_plus_q() * QPoly::monomial(2);
        assert_eq!(p, QPoly::from_coeffs([(2, 1), (3, 1)]));
        let sq = &QPoly::one_plus_q() * &QPoly::one_plus_q();
        assert_eq!(sq, QPoly::from_coeffs([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(&p + &QPoly::zero(), p);
    }

    #[test]
    fn monomials() {
        assert!(QPoly::monomial(0).is_one());
        assert_eq!(QPoly::monomial(3).degree(), Some(3));
        assert_eq!(QPoly::monomial(2) + QPoly::monomial(2), QPoly::term(2, 2));
        assert!(matches!(QPoly::monomial_checked(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn eval_at_one() {
        let p = QPoly::from_coeffs([(2, 3), (3, 2)]);
        assert_eq!(p.eval_at_one(), BigInt::from(5));
        assert_eq!(QPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(
            QPoly::from_coeffs([(0, 1), (1, 2), (2, 1)]).eval_at_one(),
            BigInt::from(4)
        );
    }

    #[test]
    fn cancellation_is_canonical() {
        let p = QPoly::from_coeffs([(0, 7), (5, -3)]);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z, QPoly::default());
        assert!(QPoly::from_coeffs([(1, 0)]).is_zero());
    }

    #[test]
    fn renderings() {
        let p = QPoly::from_coeffs([(2, 3), (3, 2)]);
        assert_eq!(p.to_string(), "3*q^2 + 2*q^3");
        assert_eq!(p.to_latex(), "3q^{2}+2q^{3}");
        assert_eq!(p.to_json().to_string(), r#"{"2":3,"3":2}"#);
        let r = QPoly::from_coeffs([(0, 1), (1, 1), (4, -2)]);
        assert_eq!(r.to_string(), "1 + q - 2*q^4");
        assert_eq!(r.to_latex(), "1+q-2q^{4}");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::monomial(1).to_string(), "q");
    }

    #[test]
    fn json_keeps_big_coefficients_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = QPoly::term(big, 7);
        let back = QPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        let reparsed: Value = serde_json::from_str(&p.to_json().to_string()).unwrap();
        assert_eq!(QPoly::from_json(&reparsed).unwrap(), p);
    }
}
