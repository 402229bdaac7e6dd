//! Exact Laurent polynomials with integer coefficients in the six fixed
//! variables `x1, x2, x3, x4, y1, y2`.
//!
//! Only `x1` and `x2` may carry negative exponents; `x3, x4` (boundary arcs)
//! and `y1, y2` (principal coefficients) are ordinary polynomial variables.
//! Terms are kept in a `BTreeMap` keyed by graded-lexicographic order, so two
//! equal polynomials always have identical term maps and serialize to the same
//! bytes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Number of variables every polynomial is written in.
pub const NUM_VARS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NonExactDivision,
    #[error("variable {0} cannot carry a negative exponent")]
    NegativeExponent(Var),
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
}

/// The six ring variables, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X1,
    X2,
    X3,
    X4,
    Y1,
    Y2,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::X1, Var::X2, Var::X3, Var::X4, Var::Y1, Var::Y2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X4 => "x4",
            Var::Y1 => "y1",
            Var::Y2 => "y2",
        }
    }

    /// Whether negative exponents are allowed for this variable.
    pub fn is_laurent(self) -> bool {
        matches!(self, Var::X1 | Var::X2)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variable {s:?}"))
    }
}

/// Exponents of a monomial, ordered `(x1, x2, x3, x4, y1, y2)`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector([i32; NUM_VARS]);

impl ExponentVector {
    pub fn new(exponents: [i32; NUM_VARS]) -> Result<Self, AlgebraError> {
        for var in Var::ALL {
            if !var.is_laurent() && exponents[var.index()] < 0 {
                return Err(AlgebraError::NegativeExponent(var));
            }
        }
        Ok(ExponentVector(exponents))
    }

    pub fn zero() -> Self {
        ExponentVector([0; NUM_VARS])
    }

    pub fn var(var: Var, power: i32) -> Result<Self, AlgebraError> {
        let mut e = [0; NUM_VARS];
        e[var.index()] = power;
        Self::new(e)
    }

    pub fn exponents(&self) -> [i32; NUM_VARS] {
        self.0
    }

    pub fn get(&self, var: Var) -> i32 {
        self.0[var.index()]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    fn product(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        ExponentVector(e)
    }

    fn quotient(&self, other: &Self) -> Result<Self, AlgebraError> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Self::new(e)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExponentVector::zero(), BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zero(), c.into())
    }

    pub fn monomial(exp: ExponentVector, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef.into());
        p
    }

    /// `var^power`. Fails for negative powers of a non-Laurent variable.
    pub fn var_pow(var: Var, power: i32) -> Result<Self, AlgebraError> {
        Ok(Self::monomial(ExponentVector::var(var, power)?, 1))
    }

    pub fn var(var: Var) -> Self {
        Self::monomial(ExponentVector::var(var, 1).expect("positive power"), 1)
    }

    /// Monomial `x1^e1 ... y2^e6` with coefficient 1.
    pub fn from_exponents(exponents: [i32; NUM_VARS]) -> Result<Self, AlgebraError> {
        Ok(Self::monomial(ExponentVector::new(exponents)?, 1))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ([i32; NUM_VARS], C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(ExponentVector::new(e)?, c.into());
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exp: ExponentVector, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: leading (graded-lex largest) term first.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Multiplies every term by `exp` (a monomial shift).
    pub fn shift(&self, exp: &ExponentVector) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.product(exp), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Leading terms are eliminated under graded-lex order. Every quotient
    /// exponent must lie inside the box `[min(p) - min(q), max(p) - max(q)]`
    /// per variable, which bounds the loop; the result is checked by
    /// multiplying back before it is returned.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (lead_exp, lead_coef) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (p_lo, p_hi) = self.exponent_bounds();
        let (q_lo, q_hi) = divisor.exponent_bounds();
        let mut lo = [0; NUM_VARS];
        let mut hi = [0; NUM_VARS];
        for i in 0..NUM_VARS {
            lo[i] = p_lo[i] - q_lo[i];
            hi[i] = p_hi[i] - q_hi[i];
            if lo[i] > hi[i] {
                return Err(AlgebraError::NonExactDivision);
            }
        }

        let mut remainder = self.clone();
        let mut quotient = Self::zero();
        while let Some((r_exp, r_coef)) = remainder.leading_term() {
            let exp = r_exp
                .quotient(lead_exp)
                .map_err(|_| AlgebraError::NonExactDivision)?;
            let in_box = (0..NUM_VARS).all(|i| lo[i] <= exp.0[i] && exp.0[i] <= hi[i]);
            if !in_box || !(r_coef % lead_coef).is_zero() {
                return Err(AlgebraError::NonExactDivision);
            }
            let coef = r_coef / lead_coef;
            let step = divisor.shift(&exp).scale(&coef);
            quotient.add_term(exp, coef);
            remainder = &remainder - &step;
        }

        if &(&quotient * divisor) != self {
            return Err(AlgebraError::NonExactDivision);
        }
        Ok(quotient)
    }

    /// Substitutes 1 for each listed variable.
    pub fn specialize_ones(&self, vars: &[Var]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut exps = e.0;
            for v in vars {
                exps[v.index()] = 0;
            }
            out.add_term(ExponentVector(exps), c.clone());
        }
        out
    }

    /// Sum of all coefficients: the value at `x1 = ... = y2 = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// If the polynomial is a constant (possibly zero), its value.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&ExponentVector::zero()).cloned(),
            _ => None,
        }
    }

    /// Splits off the monomial denominator: `self = numerator / x^denominator`
    /// with `numerator` a polynomial and `denominator` nonnegative.
    pub fn as_fraction(&self) -> (Self, ExponentVector) {
        let (lo, _) = self.exponent_bounds();
        let mut den = [0; NUM_VARS];
        for i in 0..NUM_VARS {
            if !self.is_zero() && lo[i] < 0 {
                den[i] = -lo[i];
            }
        }
        let den = ExponentVector(den);
        (self.shift(&den), den)
    }

    /// Text with the denominator pulled out, e.g. `(x2^2 + y1)/x1`.
    pub fn to_fraction_string(&self) -> String {
        let (num, den) = self.as_fraction();
        if den == ExponentVector::zero() {
            return num.to_string();
        }
        let den_text = LaurentPolynomial::monomial(den, 1).to_string();
        let num_text = if num.num_terms() > 1 {
            format!("({num})")
        } else {
            num.to_string()
        };
        if den.0.iter().filter(|&&e| e != 0).count() > 1 || den_text.contains('^') {
            format!("{num_text}/({den_text})")
        } else {
            format!("{num_text}/{den_text}")
        }
    }

    fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    fn exponent_bounds(&self) -> ([i32; NUM_VARS], [i32; NUM_VARS]) {
        let mut lo = [i32::MAX; NUM_VARS];
        let mut hi = [i32::MIN; NUM_VARS];
        for e in self.terms.keys() {
            for i in 0..NUM_VARS {
                lo[i] = lo[i].min(e.0[i]);
                hi[i] = hi[i].max(e.0[i]);
            }
        }
        (lo, hi)
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for LaurentPolynomial {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.product(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Human-readable form, leading term first, e.g. `x1^-1*x2^2 + x1^-1*y1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let factors: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e.get(**v) != 0)
                .map(|v| match e.get(*v) {
                    1 => v.name().to_string(),
                    p => format!("{}^{}", v.name(), p),
                })
                .collect();
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Wire form of one term: `{"exp":[e1..e6],"coef":int}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermRecord {
    exp: [i32; NUM_VARS],
    coef: serde_json::Number,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms()
            .map(|(e, c)| TermRecord {
                exp: e.0,
                coef: serde_json::Number::from_str(&c.to_string())
                    .expect("integers are valid JSON numbers"),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = LaurentPolynomial::zero();
        for r in records {
            let text = r.coef.to_string();
            let coef = BigInt::from_str(&text)
                .map_err(|_| serde::de::Error::custom(AlgebraError::InvalidCoefficient(text)))?;
            let exp = ExponentVector::new(r.exp).map_err(serde::de::Error::custom)?;
            p.add_term(exp, coef);
        }
        Ok(p)
    }
}
