//! Dense univariate polynomials over an exact ring.
//!
//! [`PolyVar`] (integer coefficients) carries the counting polynomials in the
//! number of colors `m` and the refined tree polynomials in `t`; rational
//! coefficients are used for the transient `1/d` and `1/s!` factors of the
//! unlabeled recurrence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::ring::Ring;

/// Coefficients `c_0..c_d` of `Σ c_i v^i`, with `c_d ≠ 0` unless the
/// polynomial is zero (then the list is empty).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Integer polynomial in one formal variable.
pub type PolyVar = Poly<BigInt>;

impl<C: Ring> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `v^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, point: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * point + c)
    }

    /// Maps `v → v^power`, i.e. each `c·v^k` to `c·v^(k·power)`.
    pub fn substitute(&self, power: usize) -> Self {
        assert!(power >= 1, "substitution power must be positive");
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut out = vec![C::zero(); (self.coeffs.len() - 1) * power + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * power] = c.clone();
        }
        Poly::new(out)
    }

    /// `self(inner(v))`.
    pub fn compose(&self, inner: &Poly<C>) -> Poly<C> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::new(Vec::new()), |acc, c| {
                acc * inner + &Poly::constant(c.clone())
            })
    }

    pub fn scale(&self, factor: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * factor).collect())
    }

    /// Drops the constant term and lowers every exponent by one; `None`
    /// unless the variable divides the polynomial.
    pub fn div_by_var(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(self.clone()),
            Some(c0) if c0.is_zero() => Some(Poly::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    /// Exact long division; `None` if the remainder is nonzero or a leading
    /// coefficient does not divide.
    pub fn div_exact(&self, divisor: &Poly<C>) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero_poly().then(|| self.clone());
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].exact_div(&lead)?;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - &(c.clone() * dc);
            }
            quot[i] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Poly::new(quot))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl PolyVar {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Human-readable form in the named variable, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == BigInt::from(1);
            match k {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Poly<BigRational> {
    /// The integer polynomial with the same coefficients, if they are all
    /// integral.
    pub fn to_integer(&self) -> Option<PolyVar> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl fmt::Display for PolyVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<C: Ring> Add<&Poly<C>> for Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut lhs = self.coeffs;
        lhs.resize(n, C::zero());
        for (a, b) in lhs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b;
        }
        Poly::new(lhs)
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: Poly<C>) -> Poly<C> {
        self + &rhs
    }
}

impl<C: Ring> Sub<&Poly<C>> for Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self + &(-rhs.clone())
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        self - &rhs
    }
}

impl<C: Ring> Mul<&Poly<C>> for Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        self * &rhs
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::new(Vec::new())
    }

    fn one() -> Self {
        Poly::constant(C::one())
    }

    fn from_int(n: &BigInt) -> Self {
        Poly::constant(C::from_int(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.unit_inverse().map(Poly::constant),
            _ => None,
        }
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> PolyVar {
        PolyVar::from_i64s(c)
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p(&[0, 1, 2]).substitute(1), p(&[0, 1, 2]));
        // t + 2t^2 + 2t^3 with t -> t^2: exponents 1,2,3 map to 2,4,6
        assert_eq!(p(&[0, 1, 2, 2]).substitute(2), p(&[0, 0, 1, 0, 2, 0, 2]));
        assert_eq!(p(&[]).substitute(3), p(&[]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[0, 1, 2, 2]).eval(&BigInt::from(1)), BigInt::from(5));
        assert_eq!(p(&[7, 1, 2, 2]).eval(&BigInt::from(0)), BigInt::from(7));
        assert_eq!(p(&[0, 1, 1]).eval(&BigInt::from(2)), BigInt::from(6));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let z = p(&[1, 2, 0, 0]);
        assert_eq!(z.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), PolyVar::zero());
    }

    #[test]
    fn division() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        let prod = a.clone() * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
        assert_eq!(p(&[0, 3, 5]).div_by_var(), Some(p(&[3, 5])));
        assert_eq!(p(&[1, 3]).div_by_var(), None);
    }

    #[test]
    fn composition_and_display() {
        // (m-1)^2 = m^2 - 2m + 1
        let sq = p(&[0, 0, 1]).compose(&p(&[-1, 1]));
        assert_eq!(sq, p(&[1, -2, 1]));
        assert_eq!(p(&[0, -2, 3]).display_in("m"), "-2m + 3m^2");
        assert_eq!(p(&[1, 0, 0, -1]).display_in("m"), "1 - m^3");
        assert_eq!(p(&[]).display_in("m"), "0");
    }

    #[test]
    fn rational_to_integer() {
        let half = BigRational::new(1.into(), 2.into());
        let r = Poly::new(vec![half.clone(), half.clone()]);
        assert_eq!(r.to_integer(), None);
        assert_eq!((r.clone() + &r).to_integer(), Some(p(&[1, 1])));
    }

    fn small_poly() -> impl Strategy<Value = PolyVar> {
        prop::collection::vec(-9i64..10, 0..5).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn substitute_matches_power_evaluation(poly in small_poly(), d in 1usize..4, x in -4i64..5) {
            let x = BigInt::from(x);
            let xd = Ring::pow(&x, d as u32);
            prop_assert_eq!(poly.substitute(d).eval(&x), poly.eval(&xd));
        }

        #[test]
        fn polynomial_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            prop_assert_eq!(a.clone() * &PolyVar::one(), a.clone());
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((a.clone() * &b).degree(), Some(da + db));
            }
        }
    }
}
