//! Truncated exponential generating functions `Σ_{n=0}^N c_n t^n/n!`.
//!
//! Composition and inversion go through the Bell-group coordinates in
//! [`crate::bell`]; the constant term is carried separately and must vanish
//! for any series used as a composition argument or inverted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::bell::{bell_inverse_recursive, bell_product, CoeffSeq};
use crate::error::{Error, Result};
use crate::ring::{factorial, parse_rational, rational_string, BinomialTable, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct ExpSeries<R> {
    /// `c_0..=c_N`, never empty.
    coeffs: Vec<R>,
}

/// Result of comparing two series of possibly different truncation orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesComparison {
    Equal,
    /// First index (as in `t^n/n!`) where the coefficients differ.
    Differ(usize),
    /// The overlap agrees but one series is longer than the other.
    OrderMismatch { left: usize, right: usize },
}

/// Series with known closed forms, all with integer coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedSeries {
    /// `e^t - 1`
    ExpMinusOne,
    /// `log(1 + t)`
    Log1p,
    /// `-log(1 - t)`
    NegLogOneMinus,
    /// `1 - e^{-t}`
    OneMinusExpNeg,
    /// `t`
    Identity,
}

impl NamedSeries {
    /// Coefficient of `t^n/n!` for `n ≥ 1`.
    fn coeff(self, n: usize) -> BigInt {
        let sign = |odd_positive: bool| if odd_positive == (n % 2 == 1) { 1 } else { -1 };
        match self {
            NamedSeries::ExpMinusOne => BigInt::from(1),
            NamedSeries::Log1p => factorial(n - 1) * sign(true),
            NamedSeries::NegLogOneMinus => factorial(n - 1),
            NamedSeries::OneMinusExpNeg => BigInt::from(sign(true)),
            NamedSeries::Identity => BigInt::from(u8::from(n == 1)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedSeries::ExpMinusOne => "exp_minus_one",
            NamedSeries::Log1p => "log1p",
            NamedSeries::NegLogOneMinus => "neg_log_one_minus",
            NamedSeries::OneMinusExpNeg => "one_minus_exp_neg",
            NamedSeries::Identity => "identity",
        }
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exp_minus_one" => NamedSeries::ExpMinusOne,
            "log1p" => NamedSeries::Log1p,
            "neg_log_one_minus" => NamedSeries::NegLogOneMinus,
            "one_minus_exp_neg" => NamedSeries::OneMinusExpNeg,
            "identity" => NamedSeries::Identity,
            other => return Err(Error::UnknownSeries(other.to_string())),
        })
    }
}

impl<R: Ring> ExpSeries<R> {
    /// From `c_0..=c_N`. An empty list is the zero series of order 0.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        ExpSeries { coeffs }
    }

    /// From a constant term and the Bell coordinates `c_1..c_N`.
    pub fn from_parts(constant: R, tail: CoeffSeq<R>) -> Self {
        let mut coeffs = vec![constant];
        coeffs.extend(tail.into_values());
        ExpSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        ExpSeries::new(vec![R::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        ExpSeries::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = ExpSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn identity(order: usize) -> Self {
        ExpSeries::named(NamedSeries::Identity, order)
    }

    pub fn named(name: NamedSeries, order: usize) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend((1..=order).map(|n| R::from_int(&name.coeff(n))));
        ExpSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_n`, the coefficient of `t^n/n!`.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    /// `c_1..c_N` as Bell coordinates.
    pub fn tail(&self) -> CoeffSeq<R> {
        CoeffSeq::new(self.coeffs[1..].to_vec())
    }

    pub fn truncate(&self, order: usize) -> Self {
        ExpSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExpSeries<S> {
        ExpSeries::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, factor: &R) -> Self {
        self.map(|c| c.clone() * factor)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        ExpSeries::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }

    /// Binomial convolution `Σ_i C(n,i) f_i g_{n-i}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let binom = BinomialTable::new(order);
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(R::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + &(R::from_int(binom.get(n, i)) * a * b)
                    }
                })
            })
            .collect();
        ExpSeries::new(coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ExpSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NonUnitConstant)?;
        let order = self.order();
        let binom = BinomialTable::new(order);
        let mut out = vec![inv0.clone()];
        for n in 1..=order {
            let sum = (1..=n).fold(R::zero(), |acc, i| {
                if self.coeffs[i].is_zero() {
                    acc
                } else {
                    acc + &(R::from_int(binom.get(n, i)) * &self.coeffs[i] * &out[n - i])
                }
            });
            out.push(-(inv0.clone() * &sum));
        }
        Ok(ExpSeries::new(out))
    }

    /// Integer powers, negative exponents through [`ExpSeries::reciprocal`].
    pub fn pow_signed(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.reciprocal()?.pow(k.unsigned_abs() as u32))
        }
    }

    /// `∫_0^t`: the coefficient of `t^n/n!` moves to `t^{n+1}/(n+1)!`.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        ExpSeries::new(coeffs)
    }

    /// `d/dt`, lowering the order by one.
    pub fn derivative(&self) -> Self {
        ExpSeries::new(self.coeffs[1..].to_vec())
    }

    /// `self(inner(t))`; the result has the smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let order = self.order().min(inner.order());
        let tail = bell_product(&self.truncate(order).tail(), &inner.truncate(order).tail());
        Ok(ExpSeries::from_parts(self.coeffs[0].clone(), tail))
    }

    /// Compositional inverse (series reversion).
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvertWithConstant);
        }
        let tail = bell_inverse_recursive(&self.tail())?;
        Ok(ExpSeries::from_parts(R::zero(), tail))
    }

    pub fn compare(&self, other: &Self) -> SeriesComparison {
        let overlap = self.order().min(other.order());
        if let Some(n) = (0..=overlap).find(|&n| self.coeffs[n] != other.coeffs[n]) {
            return SeriesComparison::Differ(n);
        }
        if self.order() == other.order() {
            SeriesComparison::Equal
        } else {
            SeriesComparison::OrderMismatch {
                left: self.order(),
                right: other.order(),
            }
        }
    }
}

impl ExpSeries<BigRational> {
    /// `{"order": N, "coeffs": ["c_1", …, "c_N"]}` with `"num/den"` strings;
    /// a nonzero constant term is added under `"constant"`.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<String> = self.coeffs[1..].iter().map(rational_string).collect();
        let mut v = json!({ "order": self.order(), "coeffs": coeffs });
        if !Ring::is_zero(&self.coeffs[0]) {
            v["constant"] = Value::String(rational_string(&self.coeffs[0]));
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("series json: {what}"));
        let order = v["order"].as_u64().ok_or_else(|| bad("missing order"))? as usize;
        let list = v["coeffs"].as_array().ok_or_else(|| bad("missing coeffs"))?;
        if list.len() != order {
            return Err(bad("coeffs length differs from order"));
        }
        let parse = |x: &Value| x.as_str().and_then(parse_rational).ok_or_else(|| bad("coefficient"));
        let constant = match v.get("constant") {
            Some(c) => parse(c)?,
            None => <BigRational as Ring>::zero(),
        };
        let mut coeffs = vec![constant];
        for c in list {
            coeffs.push(parse(c)?);
        }
        Ok(ExpSeries::new(coeffs))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for ExpSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}/{n}!")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
