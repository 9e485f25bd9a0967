//! Labeled multipartite series-reduced trees and the families derived from
//! them.
//!
//! With one degree function `x_c(t) = t + Σ_{n≥2} x_{c,n} t^n/n!` per color,
//! the tree generating function is
//!
//! ```text
//! P(m, t, x) = ( t + Σ_c (x_c⁻¹(t) − t) )⁻¹
//! ```
//!
//! Three independent routes to its coefficients live here: series reversion
//! ([`p_series`]), the root-color forest recursion
//! ([`p_series_by_color_recursion`]) and the explicit Bell-polynomial formula
//! ([`p_closed_form`]). Specializing the weights gives the counting families:
//! all ones counts symbolic ultrametrics, `x_{c,k} = (k−1)!` counts mobiles.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bell::{bell_inverse_closed, special_tables, BellTable, CoeffSeq};
use crate::egf::{ExpSeries, NamedSeries, SeriesComparison};
use crate::error::Result;
use crate::poly::{Poly, PolyVar};
use crate::ring::{factorial, Ring};
use crate::weight::WeightPoly;

/// How the vertex weights `x_{c,k}` are instantiated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegreeAssignment {
    /// Free indeterminates.
    Symbolic,
    /// `x_{c,k} = 1`
    AllOnes,
    /// `x_{c,k} = (k−1)!`
    Factorial,
    /// `values[c−1][k−2]` is `x_{c,k}`; missing entries are zero.
    Custom(Vec<Vec<BigInt>>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSpec {
    pub colors: u32,
    pub assignment: DegreeAssignment,
}

impl DegreeSpec {
    pub fn symbolic(colors: u32) -> Self {
        DegreeSpec {
            colors,
            assignment: DegreeAssignment::Symbolic,
        }
    }

    pub fn all_ones(colors: u32) -> Self {
        DegreeSpec {
            colors,
            assignment: DegreeAssignment::AllOnes,
        }
    }

    pub fn factorial(colors: u32) -> Self {
        DegreeSpec {
            colors,
            assignment: DegreeAssignment::Factorial,
        }
    }

    /// `x_{c,k}` for `k ≥ 2`.
    pub fn weight(&self, color: u32, degree: u32) -> WeightPoly {
        match &self.assignment {
            DegreeAssignment::Symbolic => {
                WeightPoly::var(color, degree).expect("color >= 1 and degree >= 2")
            }
            DegreeAssignment::AllOnes => WeightPoly::one(),
            DegreeAssignment::Factorial => WeightPoly::constant(factorial(degree as usize - 1)),
            DegreeAssignment::Custom(values) => values
                .get(color as usize - 1)
                .and_then(|row| row.get(degree as usize - 2))
                .map(|v| WeightPoly::constant(v.clone()))
                .unwrap_or_default(),
        }
    }

    /// `x_c(t)` for every color, truncated at `order`.
    pub fn degree_functions(&self, order: usize) -> Vec<ExpSeries<WeightPoly>> {
        (1..=self.colors)
            .map(|c| {
                let mut coeffs = vec![WeightPoly::zero(), WeightPoly::one()];
                coeffs.extend((2..=order).map(|k| self.weight(c, k as u32)));
                ExpSeries::new(coeffs).truncate(order)
            })
            .collect()
    }
}

/// `t + Σ_c (x_c⁻¹(t) − t)` via series reversion of each degree function.
fn inverse_sum<R: Ring>(degree_functions: &[ExpSeries<R>], order: usize) -> Result<ExpSeries<R>> {
    let t = ExpSeries::identity(order);
    let mut acc = t.clone();
    for x in degree_functions {
        acc = acc.add(&x.truncate(order).invert()?.sub(&t));
    }
    Ok(acc)
}

/// Tree generating function by series reversion, for degree functions over
/// any ring. Each degree function must have `t`-coefficient one.
pub fn tree_series<R: Ring>(degree_functions: &[ExpSeries<R>], order: usize) -> Result<ExpSeries<R>> {
    inverse_sum(degree_functions, order)?.invert()
}

/// Tree generating function by the root-color recursion: trees with root
/// color `c` and `s` leaves are a `c`-colored root over a forest of `k ≥ 2`
/// trees whose roots avoid color `c`,
/// `P_s(c) = Σ_{k=2}^s x_{c,k} B_{s,k}({P_j − P_j(c)}_j)`.
pub fn tree_series_by_color<R: Ring>(degree_functions: &[ExpSeries<R>], order: usize) -> ExpSeries<R> {
    // by_color[c][s-1] = P_s(c); total[s-1] = P_s
    let m = degree_functions.len();
    let mut by_color: Vec<Vec<R>> = vec![Vec::with_capacity(order); m];
    let mut total: Vec<R> = Vec::with_capacity(order);
    for s in 1..=order {
        if s == 1 {
            // a lone leaf has no inner vertex and therefore no root color
            for col in by_color.iter_mut() {
                col.push(R::zero());
            }
            total.push(R::one());
            continue;
        }
        let mut sum = R::zero();
        for (c, x) in degree_functions.iter().enumerate() {
            let forest = CoeffSeq::new(
                total
                    .iter()
                    .zip(&by_color[c])
                    .map(|(p, pc)| p.clone() - pc)
                    .collect(),
            );
            let table = BellTable::new(&forest, s);
            let mut pc = R::zero();
            for k in 2..=s.min(x.order()) {
                let b = table.get(s, k).expect("forest covers j <= s-k+1");
                if !b.is_zero() && !x.coeff(k).is_zero() {
                    pc = pc + &(x.coeff(k).clone() * &b);
                }
            }
            sum = sum + &pc;
            by_color[c].push(pc);
        }
        total.push(sum);
    }
    ExpSeries::from_parts(R::zero(), CoeffSeq::new(total))
}

/// `[t^s/s!] P` by the explicit formula
/// `P_s = Σ_{k} (−1)^k B_{s+k−1,k}(0, Σ_c x⁻¹_{c,2}, Σ_c x⁻¹_{c,3}, …)`,
/// where each `x⁻¹_{c,j}` itself comes from the explicit inversion formula.
pub fn tree_coefficient_closed<R: Ring>(degree_functions: &[ExpSeries<R>], s: usize) -> Result<R> {
    assert!(s >= 1, "trees have at least one leaf");
    let mut h: CoeffSeq<R> = CoeffSeq::identity(s);
    for x in degree_functions {
        let inv = bell_inverse_closed(&x.truncate(s).tail())?;
        h = CoeffSeq::from_fn(s, |j| {
            if j == 1 {
                R::one()
            } else {
                h.get(j).clone() + inv.get(j)
            }
        });
    }
    let p = bell_inverse_closed(&h)?;
    Ok(p.get(s).clone())
}

/// `P(m, t, x)` by series reversion.
pub fn p_series(spec: &DegreeSpec, order: usize) -> Result<ExpSeries<WeightPoly>> {
    tree_series(&spec.degree_functions(order), order)
}

/// `P(m, t, x)` by the root-color forest recursion.
pub fn p_series_by_color_recursion(spec: &DegreeSpec, order: usize) -> ExpSeries<WeightPoly> {
    tree_series_by_color(&spec.degree_functions(order), order)
}

/// `P_s(m, x)` by the explicit Bell-polynomial formula.
pub fn p_closed_form(spec: &DegreeSpec, s: usize) -> Result<WeightPoly> {
    tree_coefficient_closed(&spec.degree_functions(s), s)
}

/// `a_s(m)` for `s = 1..=max_s`, as polynomials in `m`:
/// `a_s(m) = (−1)^{s−1} Σ_k (−m)^k !(s+k−1)_k`.
pub fn a_polynomials(max_s: usize) -> Vec<PolyVar> {
    signed_stirling_polys(max_s, |tables, n, k| tables.0.get(n, k))
}

/// `g_s(m) = (−1)^{s−1} Σ_k (−m)^k b(s+k−1, k)` for `s = 1..=max_s`.
pub fn g_polynomials(max_s: usize) -> Vec<PolyVar> {
    signed_stirling_polys(max_s, |tables, n, k| tables.1.get(n, k))
}

type Tables = (BellTable<BigInt>, BellTable<BigInt>);

fn signed_stirling_polys(
    max_s: usize,
    cell: impl Fn(&Tables, usize, usize) -> Option<BigInt>,
) -> Vec<PolyVar> {
    let tables = special_tables((2 * max_s).saturating_sub(1));
    (1..=max_s)
        .map(|s| {
            let coeffs = (0..=s)
                .map(|k| {
                    let v = cell(&tables, s + k - 1, k).expect("table spans 2s-1");
                    if (s - 1 + k) % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect();
            Poly::new(coeffs)
        })
        .collect()
}

/// Number of `m`-partite labeled series-reduced trees with `s` leaves as a
/// polynomial in `m`.
pub fn a_polynomial(s: usize) -> PolyVar {
    assert!(s >= 1, "trees have at least one leaf");
    a_polynomials(s).pop().expect("s >= 1")
}

/// Number of symbolic ultrametrics on an `s`-set with `m` symbols, equal to
/// the number of `m`-partite labeled series-reduced trees with `s` leaves.
pub fn count_ultrametrics(s: usize, m: u64) -> BigInt {
    a_polynomial(s).eval(&BigInt::from(m))
}

/// Fully colored variant (leaves colored too, differently from their
/// parent). A lone leaf may take any of the `m` colors.
pub fn count_fully_colored_labeled(s: usize, m: u64) -> BigInt {
    assert!(s >= 1, "trees have at least one leaf");
    if s == 1 {
        return BigInt::from(m);
    }
    let m_minus_one = BigInt::from(m) - 1;
    Ring::pow(&m_minus_one, s as u32) * count_ultrametrics(s, m)
}

pub fn g_polynomial(s: usize) -> PolyVar {
    assert!(s >= 1, "trees have at least one leaf");
    g_polynomials(s).pop().expect("s >= 1")
}

/// Labeled `m`-partite series-reduced mobiles (children in cyclic order).
pub fn count_mobiles(s: usize, m: u64) -> BigInt {
    g_polynomial(s).eval(&BigInt::from(m))
}

/// `y_s(m)` for `s = 1..=max_s` from `y_1 = 1`, `y_s = y_{s−1} + m B_{s,2}(y)`.
pub fn chain_increasing_polynomials(max_s: usize) -> Vec<PolyVar> {
    let m = PolyVar::var();
    let mut ys: Vec<PolyVar> = Vec::with_capacity(max_s);
    for s in 1..=max_s {
        if s == 1 {
            ys.push(PolyVar::one());
            continue;
        }
        let table = BellTable::new(&CoeffSeq::new(ys.clone()), s);
        let pairs = table.get(s, 2).expect("y_1..y_{s-1} suffice for B_{s,2}");
        let next = ys[s - 2].clone() + &(m.clone() * &pairs);
        ys.push(next);
    }
    ys
}

/// Number of `m`-colored chain-increasing binary trees with `s` chains, as
/// a polynomial in `m`.
pub fn chain_increasing_polynomial(s: usize) -> PolyVar {
    assert!(s >= 1, "at least one chain");
    chain_increasing_polynomials(s).pop().expect("s >= 1")
}

pub fn chain_increasing_count(s: usize, m: u64) -> BigInt {
    chain_increasing_polynomial(s).eval(&BigInt::from(m))
}

/// Increasingly labeled pure parallel processes with `s` actions: the
/// 2-colored chain-increasing binary trees.
pub fn count_processes(s: usize) -> BigInt {
    chain_increasing_count(s, 2)
}

/// `A(m, t) = Σ a_s(m) t^s/s!` from the counting formula.
pub fn ultrametric_series(m: u64, order: usize) -> ExpSeries<BigRational> {
    series_from_polys(&a_polynomials(order), m)
}

/// `G(m, t) = Σ g_s(m) t^s/s!` from the counting formula.
pub fn mobile_series(m: u64, order: usize) -> ExpSeries<BigRational> {
    series_from_polys(&g_polynomials(order), m)
}

/// `Y(m, t) = Σ y_s(m) t^s/s!`.
pub fn chain_increasing_series(m: u64, order: usize) -> ExpSeries<BigRational> {
    series_from_polys(&chain_increasing_polynomials(order), m)
}

fn series_from_polys(polys: &[PolyVar], m: u64) -> ExpSeries<BigRational> {
    let m = BigInt::from(m);
    let mut coeffs = vec![<BigRational as Ring>::zero()];
    coeffs.extend(polys.iter().map(|p| BigRational::from_integer(p.eval(&m))));
    ExpSeries::new(coeffs)
}

/// `(t(1−m) + m log(1+t))⁻¹` with `m` any ring element (e.g. the variable
/// of [`PolyVar`]).
pub fn ultrametric_series_by_inversion<R: Ring>(m: &R, order: usize) -> Result<ExpSeries<R>> {
    let t = ExpSeries::<R>::identity(order);
    let one_minus_m = R::one() - m;
    let f = t
        .scale(&one_minus_m)
        .add(&ExpSeries::named(NamedSeries::Log1p, order).scale(m));
    f.invert()
}

/// `(t(1−m) − m e^{−t} + m)⁻¹`.
pub fn mobile_series_by_inversion<R: Ring>(m: &R, order: usize) -> Result<ExpSeries<R>> {
    let t = ExpSeries::<R>::identity(order);
    let one_minus_m = R::one() - m;
    let f = t
        .scale(&one_minus_m)
        .add(&ExpSeries::named(NamedSeries::OneMinusExpNeg, order).scale(m));
    f.invert()
}

/// Checks `𝒜 = 1 + 𝒜^m ∫_0^t 𝒜^{−m}` to order `order`, where `𝒜 = 1 + A(m,t)`
/// is built from the counting formula.
pub fn verify_integral_relation(m: u32, order: usize) -> bool {
    let cal_a = ultrametric_series(u64::from(m), order).add(&ExpSeries::one(order));
    let Ok(inv_pow) = cal_a.pow_signed(-i64::from(m)) else {
        return false;
    };
    let rhs = ExpSeries::one(order).add(&cal_a.pow(m).mul(&inv_pow.integrate().truncate(order)));
    cal_a.compare(&rhs) == SeriesComparison::Equal
}
