//! Exact commutative rings.
//!
//! Everything in this crate (Bell polynomials, series composition, the tree
//! counting formulas) is written once against [`Ring`] and instantiated with
//! big integers, big rationals, dense univariate polynomials
//! ([`Poly`](crate::poly::Poly)) and sparse weight polynomials
//! ([`WeightPoly`](crate::weight::WeightPoly)). There is no floating point
//! anywhere.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// Equality is structural on canonical representatives, so two values that
/// compare equal denote the same ring element.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// The image of an integer under the unique ring map from ℤ.
    fn from_int(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// `self / divisor` when the quotient exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.unit_inverse().map(|inv| self.clone() * &inv)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.abs() == One::one()).then(|| self.clone())
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Row `0..=n_max` of Pascal's triangle as a lookup table.
pub(crate) struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub(crate) fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigInt::from(1); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub(crate) fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if Zero::is_zero(&den) {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Renders a rational as `"num/den"`, always with the denominator.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
