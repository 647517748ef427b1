//! Exact Laurent polynomials in one variable `t` with arbitrary-precision
//! integer coefficients.
//!
//! Invariants:
//! - no stored coefficient is zero, so equality is structural;
//! - the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `t^exp`
    pub fn monomial(exp: i64) -> Self {
        Self::term(BigInt::one(), exp)
    }

    /// `coeff * t^exp`
    pub fn term(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some((coeff, exp))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * factor)).collect(),
        }
    }

    /// Exact division by a unit monomial `±t^k`. Returns `None` for any other
    /// divisor.
    pub fn div_unit_monomial(&self, divisor: &Self) -> Option<Self> {
        let (c, exp) = divisor.as_monomial()?;
        if c.is_one() {
            Some(self.shift(-exp))
        } else if (-c).is_one() {
            Some(-self.shift(-exp))
        } else {
            None
        }
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        assert!(
            !t.is_zero() || self.min_degree().is_none_or(|d| d >= 0),
            "t = 0 with a pole"
        );
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, (&e, c)| {
                let power = pow_rational(t, e);
                acc + BigRational::from_integer(c.clone()) * power
            })
    }

    /// `(1 - t^S)`: 1 for an empty `S`, otherwise the product of
    /// `1 - t^min(0, s)` over the multiset. Any `s >= 0` makes it zero.
    pub fn one_minus_t_set(set: &[i64]) -> Self {
        set.iter().fold(Self::one(), |acc, &s| {
            let factor = Self::one() - Self::monomial(s.min(0));
            &acc * &factor
        })
    }

    /// `(t^S - 1)`: 1 for an empty `S`, otherwise the product of `t^s - 1`
    /// over the multiset, taken verbatim.
    pub fn t_set_minus_one(set: &[i64]) -> Self {
        set.iter().fold(Self::one(), |acc, &s| {
            let factor = Self::monomial(s) - Self::one();
            &acc * &factor
        })
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.coeffs
            .iter()
            .map(|(&e, c)| c.to_i64().map(|c| (e, c)))
            .collect()
    }
}

fn pow_rational(t: &BigRational, exp: i64) -> BigRational {
    let base = if exp < 0 { t.recip() } else { t.clone() };
    num_traits::pow(base, exp.unsigned_abs() as usize)
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::term(c, 0)
    }
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        Self {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -self.clone()
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

/// Ascending exponent order: `-1 + t`, `t + t^2`, `t^-3 - t^-2 - t^-1 + 1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (e, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{magnitude}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{magnitude}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: object mapping exponent (as a string) to integer coefficient.
/// Coefficients beyond `i64` are emitted as decimal strings.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            match c.to_i64() {
                Some(small) => map.serialize_entry(&e.to_string(), &small)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, CoeffRepr>::deserialize(deserializer)?;
        let mut p = Self::zero();
        for (e, c) in raw {
            let exp: i64 = e.parse().map_err(de::Error::custom)?;
            let coeff = match c {
                CoeffRepr::Int(v) => BigInt::from(v),
                CoeffRepr::Text(s) => s.parse().map_err(de::Error::custom)?,
            };
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}
