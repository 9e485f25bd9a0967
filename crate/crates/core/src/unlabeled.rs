//! Rooted series-reduced trees with unlabeled leaves.
//!
//! `ā_s^ref(t)` counts such trees with `s` leaves by number of inner vertices
//! (coefficient of `t^k`). It satisfies
//!
//! ```text
//! ā_s^ref(t) = (t/s!) Σ_j B_{s,j}({ n! Σ_{d|n, n/d≠s} (1/d) ā_{n/d}^ref(t^d) }_n)
//! ```
//!
//! and the colored counts follow by evaluating at `m − 1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bell::{BellTable, CoeffSeq};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyVar};
use crate::ring::{factorial, Ring};

/// `ā_s^ref(t)`; the coefficient of `t^k` is the number of trees with `s`
/// leaves and `k` inner vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RefinedPoly {
    pub s: usize,
    pub poly: PolyVar,
}

impl RefinedPoly {
    /// Number of trees with `s` leaves and `k` inner vertices.
    pub fn count(&self, k: usize) -> BigInt {
        self.poly.coeff(k)
    }

    pub fn total(&self) -> BigInt {
        self.poly.eval(&BigInt::from(1))
    }

    /// `ā_s(m)` as a polynomial in `m`.
    pub fn multipartite_polynomial(&self) -> PolyVar {
        if self.s == 1 {
            return PolyVar::one();
        }
        let q = self
            .poly
            .div_by_var()
            .expect("t divides the refined polynomial for s >= 2");
        let shift = PolyVar::from_i64s(&[-1, 1]);
        PolyVar::var() * &q.compose(&shift)
    }

    /// `m(m−1)^{s−1} ā_s^ref(m−1)`, or `m` when `s = 1`.
    pub fn fully_colored(&self, m: u64) -> BigInt {
        let m = BigInt::from(m);
        if self.s == 1 {
            return m;
        }
        let m1 = m.clone() - 1;
        let r = self.poly.eval(&m1);
        m * Ring::pow(&m1, (self.s - 1) as u32) * r
    }
}

type RatPoly = Poly<BigRational>;

fn ratio(n: usize, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `ā_1^ref, …, ā_{up_to_s}^ref`, bottom-up.
pub fn refined_polys(up_to_s: usize) -> Result<Vec<RefinedPoly>> {
    let mut done: Vec<RatPoly> = Vec::with_capacity(up_to_s);
    let mut out = Vec::with_capacity(up_to_s);
    for s in 1..=up_to_s {
        let rat = if s == 1 {
            RatPoly::one()
        } else {
            next_refined(&done, s)
        };
        let poly = rat.to_integer().ok_or_else(|| {
            Error::Inconsistent(format!("refined polynomial for s = {s} is not integral"))
        })?;
        done.push(rat);
        out.push(RefinedPoly { s, poly });
    }
    Ok(out)
}

/// `ā_s^ref` from `ā_1^ref..ā_{s−1}^ref` (`done[i] = ā_{i+1}^ref`).
fn next_refined(done: &[RatPoly], s: usize) -> RatPoly {
    let x = CoeffSeq::from_fn(s, |n| {
        let mut acc = RatPoly::zero();
        for d in (1..=n).filter(|d| n % d == 0 && n / d != s) {
            let term = done[n / d - 1]
                .substitute(d)
                .scale(&ratio(1, d));
            acc = acc + &term;
        }
        acc.scale(&BigRational::from_integer(factorial(n)))
    });
    let table = BellTable::new(&x, s);
    let mut sum = RatPoly::zero();
    for j in 1..=s {
        sum = sum + &table.get(s, j).expect("x spans s");
    }
    let t = RatPoly::var();
    (t * &sum).scale(&BigRational::new(BigInt::from(1), factorial(s)))
}

pub fn refined_poly(s: usize) -> Result<RefinedPoly> {
    assert!(s >= 1, "trees have at least one leaf");
    Ok(refined_polys(s)?.pop().expect("s >= 1"))
}

/// `ā_s`, the number of rooted unlabeled series-reduced trees with `s` leaves.
pub fn unlabeled_count(s: usize) -> Result<BigInt> {
    Ok(refined_poly(s)?.total())
}

/// `ā_s(m) = m·q(m−1)` with `q = ā_s^ref / t`, expanded in `m`.
pub fn multipartite_unlabeled_polynomial(s: usize) -> Result<PolyVar> {
    Ok(refined_poly(s)?.multipartite_polynomial())
}

/// Number of `m`-partite unlabeled series-reduced trees with `s` leaves.
pub fn multipartite_unlabeled(s: usize, m: u64) -> Result<BigInt> {
    Ok(multipartite_unlabeled_polynomial(s)?.eval(&BigInt::from(m)))
}

/// Fully colored variant, `m(m−1)^{s−1} ā_s^ref(m−1)`: each of the `s`
/// leaves of an `m`-partite tree independently takes one of the `m − 1`
/// colors other than its parent's, without identifying colorings that differ
/// by a symmetry of the tree. A lone leaf takes any of the `m` colors.
pub fn fully_colored_unlabeled(s: usize, m: u64) -> Result<BigInt> {
    assert!(s >= 1, "trees have at least one leaf");
    Ok(refined_poly(s)?.fully_colored(m))
}

/// Table of `ā_{n,k}` laid out with rows `k = 1..max_n−1` and columns
/// `n = 2..max_n`, blank where `k ≥ n`, followed by a row of column sums.
pub fn riordan_triangle_csv(max_n: usize) -> Result<String> {
    let polys = refined_polys(max_n.max(2))?;
    let cols = 2..=max_n;
    let mut out = String::from("k\\n");
    for n in cols.clone() {
        out.push_str(&format!(",{n}"));
    }
    out.push('\n');
    for k in 1..max_n {
        out.push_str(&k.to_string());
        for n in cols.clone() {
            out.push(',');
            if k < n {
                out.push_str(&polys[n - 1].count(k).to_string());
            }
        }
        out.push('\n');
    }
    out.push_str("sum");
    for n in cols {
        out.push_str(&format!(",{}", polys[n - 1].total()));
    }
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> PolyVar {
        PolyVar::from_i64s(c)
    }

    #[test]
    fn refined_examples() {
        let all = refined_polys(7).unwrap();
        assert_eq!(all[0].poly, poly(&[1]));
        assert_eq!(all[1].poly, poly(&[0, 1]));
        assert_eq!(all[2].poly, poly(&[0, 1, 1]));
        assert_eq!(all[3].poly, poly(&[0, 1, 2, 2]));
        assert_eq!(all[6].count(5), BigInt::from(28));
    }

    #[test]
    fn refined_shape() {
        for r in refined_polys(12).unwrap() {
            if r.s >= 2 {
                assert_eq!(r.count(0), BigInt::from(0));
            }
            assert!(r.poly.degree().unwrap() < r.s.max(2));
            assert!(r.poly.coeffs().iter().all(|c| *c >= BigInt::from(0)));
        }
    }

    #[test]
    fn totals() {
        let expected = [1u64, 1, 2, 5, 12, 33, 90, 261, 766, 2312];
        for (s, e) in expected.iter().enumerate() {
            assert_eq!(unlabeled_count(s + 1).unwrap(), BigInt::from(*e));
        }
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(multipartite_unlabeled_polynomial(2).unwrap(), poly(&[0, 1]));
        assert_eq!(multipartite_unlabeled_polynomial(4).unwrap(), poly(&[0, 1, -2, 2]));
        assert_eq!(
            multipartite_unlabeled_polynomial(8).unwrap(),
            poly(&[0, 3, -15, 42, -79, 99, -72, 23])
        );
        assert_eq!(multipartite_unlabeled(4, 2).unwrap(), BigInt::from(10));
        assert_eq!(multipartite_unlabeled(8, 8).unwrap(), BigInt::from(32_301_144));
        for s in 1..=8 {
            assert_eq!(multipartite_unlabeled(s, 1).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn multipartite_matches_fraction_form() {
        // m ā_s^ref(m−1) / (m−1) for m ≥ 2
        for s in 2..=8 {
            let r = refined_poly(s).unwrap();
            for m in 2..=6u64 {
                let m_big = BigInt::from(m);
                let num = m_big.clone() * r.poly.eval(&(m_big.clone() - 1));
                assert_eq!(num / (m_big - 1), multipartite_unlabeled(s, m).unwrap());
            }
        }
    }

    #[test]
    fn fully_colored_examples() {
        assert_eq!(fully_colored_unlabeled(3, 3).unwrap(), BigInt::from(72));
        assert_eq!(fully_colored_unlabeled(6, 2).unwrap(), BigInt::from(66));
        assert_eq!(fully_colored_unlabeled(1, 4).unwrap(), BigInt::from(4));
        for s in 2..=6 {
            assert_eq!(fully_colored_unlabeled(s, 1).unwrap(), BigInt::from(0));
        }
        for s in 2..=8 {
            for m in 1..=6u64 {
                let m1 = BigInt::from(m) - 1;
                assert_eq!(
                    fully_colored_unlabeled(s, m).unwrap(),
                    Ring::pow(&m1, s as u32) * multipartite_unlabeled(s, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn triangle_csv_layout() {
        let csv = riordan_triangle_csv(5).unwrap();
        assert_eq!(
            csv,
            "k\\n,2,3,4,5\n1,1,1,1,1\n2,,1,2,3\n3,,,2,5\n4,,,,3\nsum,1,2,5,12\n"
        );
    }
}
