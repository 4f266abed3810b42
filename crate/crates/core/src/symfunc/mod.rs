//! Homogeneous symmetric functions with coefficients in `ℤ[q]`.
//!
//! A [`SymFunc`] is a finite expansion in either the monomial basis `m_λ` or
//! the Schur basis `s_λ`. Conversion goes through the Kostka matrix, and the
//! brute-force oracles compute expansions straight from coloring definitions.

mod kostka;
mod oracle;
mod product;
mod ribbon;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use serde_json::{Map, Value};

pub use kostka::{kostka_matrix, monomial_to_schur, schur_in_monomials, schur_to_monomial, KostkaMatrix};
pub use oracle::{coloring_count, llt_bruteforce, ribbon_bruteforce, OracleConfig, DEFAULT_MAX_VERTICES};
pub use product::mul;
pub use ribbon::ribbon_by_tableaux;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::polyq::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        }
    }

    fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "monomial" => Ok(Basis::Monomial),
            "schur" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// A symmetric function of fixed degree, keyed by partitions in
/// reverse-lexicographic order. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant function 1 (degree 0).
    pub fn one(basis: Basis) -> Self {
        let mut f = Self::zero(0, basis);
        f.add_term(Partition::empty(), &QPoly::one());
        f
    }

    /// A single basis element `b_λ`.
    pub fn basis_element(basis: Basis, shape: Partition) -> Self {
        let mut f = Self::zero(shape.size(), basis);
        f.add_term(shape, &QPoly::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, shape: &Partition) -> QPoly {
        self.coeffs.get(shape).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · b_λ`.
    ///
    /// # Panics
    /// If `|λ|` differs from the degree.
    pub fn add_term(&mut self, shape: Partition, c: &QPoly) {
        assert_eq!(
            shape.size(),
            self.degree,
            "partition {shape} does not match degree {}",
            self.degree
        );
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(shape).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (shape, v) in &self.coeffs {
            out.add_term(shape.clone(), &(v * c));
        }
        out
    }

    /// The expansion at `q = 1`.
    pub fn eval_at_one(&self) -> BTreeMap<Partition, BigInt> {
        self.coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v.eval_at_one()))
            .collect()
    }

    /// Whether every coefficient is a polynomial with nonnegative coefficients.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(QPoly::has_nonnegative_coeffs)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.basis == other.basis && self.degree == other.degree,
            "cannot combine degree {} {} with degree {} {}",
            self.degree,
            self.basis.name(),
            other.degree,
            other.basis.name()
        );
    }

    /// One `b[λ]: coefficient` line per nonzero term.
    pub fn listing(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|(k, v)| format!("{}{}: {}", self.basis.symbol(), k, v))
            .collect()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let sym = self.basis.symbol();
        self.coeffs
            .iter()
            .map(|(k, v)| {
                let b = format!("{sym}_{{({})}}", k.key());
                if v.is_one() {
                    b
                } else if v.terms().count() == 1 {
                    format!("{}{b}", v.to_latex())
                } else {
                    format!("({}){b}", v.to_latex())
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// `{"degree":5,"basis":"schur","coeffs":{"3,2":{"2":3,"3":2}}}`.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (k, v) in &self.coeffs {
            coeffs.insert(k.key(), v.to_json());
        }
        let mut obj = Map::new();
        obj.insert("degree".into(), Value::from(self.degree));
        obj.insert("basis".into(), Value::from(self.basis.name()));
        obj.insert("coeffs".into(), Value::Object(coeffs));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("symmetric function JSON: {what}"));
        let degree = value
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing degree"))? as usize;
        let basis = Basis::from_name(
            value
                .get("basis")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing basis"))?,
        )?;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing coeffs"))?;
        let mut f = Self::zero(degree, basis);
        for (k, v) in coeffs {
            let shape = Partition::from_key(k)?;
            if shape.size() != degree {
                return Err(bad(&format!("partition {k:?} has the wrong size")));
            }
            f.add_term(shape, &QPoly::from_json(v)?);
        }
        Ok(f)
    }
}

/// Plain rendering, e.g. `s[2] + q*s[1,1]`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if v.is_one() {
                write!(f, "{sym}{k}")?;
            } else if v.terms().count() == 1 {
                write!(f, "{v}*{sym}{k}")?;
            } else {
                write!(f, "({v})*{sym}{k}")?;
            }
        }
        Ok(())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v);
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), &-v);
        }
        out
    }
}

/// Scalar multiplication by a polynomial in `q`.
impl Mul<&SymFunc> for &QPoly {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example() -> SymFunc {
        let mut f = SymFunc::zero(5, Basis::Schur);
        f.add_term(p(&[3, 2]), &QPoly::from_coeffs([(2, 3), (3, 2)]));
        f.add_term(p(&[5]), &QPoly::one());
        f.add_term(p(&[2, 2, 1]), &QPoly::monomial(1));
        f
    }

    #[test]
    fn json_golden() {
        let mut f = SymFunc::zero(5, Basis::Schur);
        f.add_term(p(&[3, 2]), &QPoly::from_coeffs([(2, 3), (3, 2)]));
        assert_eq!(
            f.to_json().to_string(),
            r#"{"degree":5,"basis":"schur","coeffs":{"3,2":{"2":3,"3":2}}}"#
        );
        let g = example();
        assert_eq!(
            g.to_json().to_string(),
            r#"{"degree":5,"basis":"schur","coeffs":{"5":{"0":1},"3,2":{"2":3,"3":2},"2,2,1":{"1":1}}}"#
        );
        let back = SymFunc::from_json(&serde_json::from_str(&g.to_json().to_string()).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn plain_and_latex_golden() {
        let f = example();
        assert_eq!(f.to_string(), "s[5] + (3*q^2 + 2*q^3)*s[3,2] + q*s[2,2,1]");
        assert_eq!(f.to_latex(), "s_{(5)}+(3q^{2}+2q^{3})s_{(3,2)}+qs_{(2,2,1)}");
        assert_eq!(
            f.listing(),
            vec!["s[5]: 1", "s[3,2]: 3*q^2 + 2*q^3", "s[2,2,1]: q"]
        );
        assert_eq!(SymFunc::zero(3, Basis::Monomial).to_string(), "0");
    }

    #[test]
    fn from_json_rejects_bad_input() {
        let bad = serde_json::json!({"degree": 3, "basis": "schur", "coeffs": {"2,2": {"0": 1}}});
        assert!(SymFunc::from_json(&bad).is_err());
        let bad = serde_json::json!({"degree": 3, "basis": "power", "coeffs": {}});
        assert!(SymFunc::from_json(&bad).is_err());
    }

    #[test]
    fn arithmetic_cancels_to_canonical_zero() {
        let f = example();
        let z = &f - &f;
        assert!(z.is_zero());
        assert_eq!(z, SymFunc::zero(5, Basis::Schur));
        let doubled = &f + &f;
        assert_eq!(doubled, f.scale(&QPoly::from(2)));
        assert_eq!(&QPoly::one() * &f, f);
    }

    #[test]
    #[should_panic]
    fn mixing_bases_panics() {
        let _ = &SymFunc::zero(2, Basis::Schur) + &SymFunc::zero(2, Basis::Monomial);
    }
}
