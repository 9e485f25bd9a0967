//! Partial Bell polynomials and the Bell group.
//!
//! A coefficient sequence `(v_1, v_2, …)` stands for the exponential series
//! `Σ v_n t^n/n!` without constant term. The Bell product
//! `(x ∘ y)_n = Σ_k x_k B_{n,k}(y)` is composition of such series, so these
//! sequences form a group with identity `(1, 0, 0, …)`; this module computes
//! products and inverses directly on coordinates.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{factorial, BinomialTable, Ring};

/// A truncated sequence `v_1..v_N`. Indexing is 1-based to match the
/// mathematical convention.
#[derive(Clone, PartialEq, Debug)]
pub struct CoeffSeq<R> {
    values: Vec<R>,
}

impl<R: Ring> CoeffSeq<R> {
    pub fn new(values: Vec<R>) -> Self {
        CoeffSeq { values }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        CoeffSeq::new((1..=order).map(f).collect())
    }

    /// `(1, 0, 0, …)` truncated at `order`.
    pub fn identity(order: usize) -> Self {
        CoeffSeq::from_fn(order, |i| if i == 1 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `v_i` for `1 ≤ i ≤ order`.
    pub fn get(&self, i: usize) -> &R {
        &self.values[i - 1]
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    pub fn truncate(&self, order: usize) -> Self {
        CoeffSeq::new(self.values[..order.min(self.order())].to_vec())
    }

    /// The same sequence with `v_1` replaced by zero, as fed to the closed
    /// inversion formula.
    pub fn without_first(&self) -> Self {
        let mut values = self.values.clone();
        if let Some(v) = values.first_mut() {
            *v = R::zero();
        }
        CoeffSeq::new(values)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> CoeffSeq<S> {
        CoeffSeq::new(self.values.iter().map(f).collect())
    }
}

impl<R: Ring> std::ops::Add<&CoeffSeq<R>> for CoeffSeq<R> {
    type Output = CoeffSeq<R>;

    fn add(self, rhs: &CoeffSeq<R>) -> CoeffSeq<R> {
        let n = self.order().min(rhs.order());
        CoeffSeq::new(
            self.values
                .into_iter()
                .zip(&rhs.values)
                .take(n)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Table of `B_{n,k}(x)` for `0 ≤ k ≤ n ≤ n_max`.
///
/// `B_{n,k}` involves `x_1..x_{n-k+1}`; cells that would need coordinates
/// past the truncation order are never computed and [`BellTable::get`]
/// reports them as unavailable.
pub struct BellTable<R> {
    rows: Vec<Vec<R>>,
    order: usize,
}

impl<R: Ring> BellTable<R> {
    /// Fills the table with `B_{n,k} = Σ_{i=1}^{n-k+1} C(n-1,i-1) x_i B_{n-i,k-1}`.
    pub fn new(x: &CoeffSeq<R>, n_max: usize) -> Self {
        let binom = BinomialTable::new(n_max.max(1));
        let mut table = BellTable {
            rows: Vec::with_capacity(n_max + 1),
            order: x.order(),
        };
        for n in 0..=n_max {
            let row = table.compute_row(n, x, &binom);
            table.rows.push(row);
        }
        table
    }

    fn available(&self, n: usize, k: usize) -> bool {
        k == 0 || k > n || n - k < self.order
    }

    fn compute_row(&self, n: usize, x: &CoeffSeq<R>, binom: &BinomialTable) -> Vec<R> {
        let mut row = vec![R::zero(); n + 1];
        if n == 0 {
            row[0] = R::one();
            return row;
        }
        for (k, cell) in row.iter_mut().enumerate().skip(1) {
            if !self.available(n, k) {
                continue;
            }
            let mut acc = R::zero();
            for i in 1..=(n - k + 1) {
                let prev = &self.rows[n - i][k - 1];
                if prev.is_zero() || x.get(i).is_zero() {
                    continue;
                }
                let c = R::from_int(binom.get(n - 1, i - 1));
                acc = acc + &(c * x.get(i) * prev);
            }
            *cell = acc;
        }
        row
    }

    /// `B_{n,k}`; zero when `k > n`, `None` when the sequence is too short.
    pub fn get(&self, n: usize, k: usize) -> Option<R> {
        if k > n {
            return Some(R::zero());
        }
        (self.available(n, k) && n < self.rows.len()).then(|| self.rows[n][k].clone())
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }
}

fn too_short(n: usize, k: usize, available: usize) -> Error {
    Error::TruncationTooShort {
        n,
        k,
        needed: n + 1 - k,
        available,
    }
}

/// Partial Bell polynomial `B_{n,k}(x_1, …, x_{n-k+1})`.
pub fn bell_partial<R: Ring>(n: usize, k: usize, x: &CoeffSeq<R>) -> Result<R> {
    if k > n {
        return Ok(R::zero());
    }
    if k > 0 && n - k >= x.order() {
        return Err(too_short(n, k, x.order()));
    }
    let table = BellTable::new(x, n);
    table.get(n, k).ok_or_else(|| too_short(n, k, x.order()))
}

/// Bell product `(x ∘ y)_n = Σ_{k=1}^n x_k B_{n,k}(y)` up to the smaller order.
pub fn bell_product<R: Ring>(x: &CoeffSeq<R>, y: &CoeffSeq<R>) -> CoeffSeq<R> {
    let order = x.order().min(y.order());
    let table = BellTable::new(y, order);
    CoeffSeq::from_fn(order, |n| {
        (1..=n).fold(R::zero(), |acc, k| {
            let b = table.get(n, k).expect("n <= order keeps B_{n,k} in range");
            if b.is_zero() {
                acc
            } else {
                acc + &(x.get(k).clone() * &b)
            }
        })
    })
}

/// Compositional inverse by the recursion
/// `x⁻¹_1 = 1/x_1`, `x⁻¹_n = -(1/x_1) Σ_{k=2}^n x_k B_{n,k}(x⁻¹)`,
/// where each `B_{n,k}` with `k ≥ 2` only uses coordinates already found.
pub fn bell_inverse_recursive<R: Ring>(x: &CoeffSeq<R>) -> Result<CoeffSeq<R>> {
    let order = x.order();
    if order == 0 {
        return Ok(CoeffSeq::new(Vec::new()));
    }
    let inv1 = x.get(1).unit_inverse().ok_or(Error::NonInvertibleLeading)?;
    let neg_inv1 = -inv1.clone();
    let binom = BinomialTable::new(order);

    // rows[n][k] = B_{n,k}(inverse), grown one row per new coordinate
    let mut inv: Vec<R> = vec![inv1];
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()], vec![R::zero(), inv[0].clone()]];
    for n in 2..=order {
        let mut row = vec![R::zero(); n + 1];
        for (k, cell) in row.iter_mut().enumerate().skip(2) {
            let mut acc = R::zero();
            for i in 1..=(n - k + 1) {
                let prev = &rows[n - i][k - 1];
                if prev.is_zero() || inv[i - 1].is_zero() {
                    continue;
                }
                acc = acc + &(R::from_int(binom.get(n - 1, i - 1)) * &inv[i - 1] * prev);
            }
            *cell = acc;
        }
        let sum = (2..=n).fold(R::zero(), |acc, k| {
            if row[k].is_zero() {
                acc
            } else {
                acc + &(x.get(k).clone() * &row[k])
            }
        });
        let vn = neg_inv1.clone() * &sum;
        row[1] = vn.clone();
        inv.push(vn);
        rows.push(row);
    }
    Ok(CoeffSeq::new(inv))
}

/// Compositional inverse by the explicit formula
/// `x⁻¹_n = Σ_{k=1}^{n-1} (-1)^k x_1^{-(n+k)} B_{n+k-1,k}(0, x_2, x_3, …)`.
pub fn bell_inverse_closed<R: Ring>(x: &CoeffSeq<R>) -> Result<CoeffSeq<R>> {
    let order = x.order();
    if order == 0 {
        return Ok(CoeffSeq::new(Vec::new()));
    }
    let inv1 = x.get(1).unit_inverse().ok_or(Error::NonInvertibleLeading)?;
    let shifted = x.without_first();
    let table = BellTable::new(&shifted, (2 * order).saturating_sub(2).max(1));
    let mut out = vec![inv1.clone()];
    for n in 2..=order {
        let mut acc = R::zero();
        for k in 1..n {
            let b = table
                .get(n + k - 1, k)
                .ok_or_else(|| too_short(n + k - 1, k, order))?;
            if b.is_zero() {
                continue;
            }
            let term = b * &inv1.pow((n + k) as u32);
            acc = if k % 2 == 0 { acc + &term } else { acc - &term };
        }
        out.push(acc);
    }
    Ok(CoeffSeq::new(out))
}

/// Number of fixed-point-free permutations of `n` elements with exactly `k`
/// cycles, `B_{n,k}(0, 1!, 2!, 3!, …)`.
pub fn derangement_count(n: usize, k: usize) -> BigInt {
    let x = CoeffSeq::from_fn(n.max(1), |i| {
        if i == 1 {
            BigInt::from(0)
        } else {
            factorial(i - 1)
        }
    });
    bell_partial(n, k, &x).expect("sequence spans n")
}

/// Number of partitions of an `n`-set into `k` blocks of size at least two,
/// `B_{n,k}(0, 1, 1, …)`.
pub fn assoc_stirling2(n: usize, k: usize) -> BigInt {
    let x = CoeffSeq::from_fn(n.max(1), |i| BigInt::from(u8::from(i > 1)));
    bell_partial(n, k, &x).expect("sequence spans n")
}

/// Full tables `!n_k` and `b(n,k)` for `n ≤ n_max`, indexed `[n][k]`.
pub(crate) fn special_tables(n_max: usize) -> (BellTable<BigInt>, BellTable<BigInt>) {
    let order = n_max.max(1);
    let derange = CoeffSeq::from_fn(order, |i| {
        if i == 1 {
            BigInt::from(0)
        } else {
            factorial(i - 1)
        }
    });
    let assoc = CoeffSeq::from_fn(order, |i| BigInt::from(u8::from(i > 1)));
    (BellTable::new(&derange, n_max), BellTable::new(&assoc, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> CoeffSeq<BigInt> {
        CoeffSeq::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn rats(v: &[i64]) -> CoeffSeq<BigRational> {
        CoeffSeq::new(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn single_block_and_empty() {
        let x = ints(&[3, 5, 7, 11]);
        for n in 1..=4 {
            assert_eq!(bell_partial(n, 1, &x).unwrap(), *x.get(n));
        }
        assert_eq!(bell_partial(3, 0, &x).unwrap(), BigInt::from(0));
        assert_eq!(bell_partial(0, 0, &x).unwrap(), BigInt::from(1));
        assert_eq!(bell_partial(2, 5, &x).unwrap(), BigInt::from(0));
    }

    #[test]
    fn truncation_is_reported() {
        let x = ints(&[1, 1]);
        assert!(matches!(
            bell_partial(4, 1, &x),
            Err(Error::TruncationTooShort { needed: 4, available: 2, .. })
        ));
        // B_{4,3} only needs x_1, x_2
        assert_eq!(bell_partial(4, 3, &x).unwrap(), BigInt::from(6));
    }

    #[test]
    fn identity_laws() {
        let x = ints(&[2, -1, 4, 0, 7, 3]);
        let e = CoeffSeq::identity(6);
        assert_eq!(bell_product(&x, &e), x);
        assert_eq!(bell_product(&e, &x), x);
        assert_eq!(bell_inverse_recursive(&e).unwrap(), e);
        assert_eq!(bell_inverse_closed(&e).unwrap(), e);
    }

    #[test]
    fn log_is_inverse_of_exp_minus_one() {
        let exp_m1 = ints(&[1; 8]);
        let expected = ints(&[1, -1, 2, -6, 24, -120, 720, -5040]);
        assert_eq!(bell_inverse_recursive(&exp_m1).unwrap(), expected);
        assert_eq!(bell_inverse_closed(&exp_m1).unwrap(), expected);
    }

    #[test]
    fn inverse_of_neg_log_one_minus() {
        // x_i = (i-1)!  ->  inverse coordinates (-1)^(i+1)
        let x = CoeffSeq::from_fn(8, |i| factorial(i - 1));
        let expected = CoeffSeq::from_fn(8, |i| BigInt::from(if i % 2 == 1 { 1 } else { -1 }));
        assert_eq!(bell_inverse_recursive(&x).unwrap(), expected);
        assert_eq!(bell_inverse_closed(&x).unwrap(), expected);
    }

    #[test]
    fn scaling_inverse_needs_rationals() {
        let x = rats(&[2, 0, 0, 0]);
        let half = BigRational::new(1.into(), 2.into());
        let zero = BigRational::from_integer(0.into());
        let expected = CoeffSeq::new(vec![half, zero.clone(), zero.clone(), zero]);
        assert_eq!(bell_inverse_recursive(&x).unwrap(), expected);
        assert_eq!(bell_inverse_closed(&x).unwrap(), expected);
        assert_eq!(
            bell_inverse_recursive(&ints(&[2, 0, 0])),
            Err(Error::NonInvertibleLeading)
        );
        assert_eq!(
            bell_inverse_closed(&ints(&[0, 1, 0])),
            Err(Error::NonInvertibleLeading)
        );
    }

    #[test]
    fn derangement_numbers() {
        assert_eq!(derangement_count(2, 1), BigInt::from(1));
        assert_eq!(derangement_count(3, 1), BigInt::from(2));
        assert_eq!(derangement_count(4, 2), BigInt::from(3));
        assert_eq!(derangement_count(0, 0), BigInt::from(1));
        assert_eq!(derangement_count(1, 1), BigInt::from(0));
    }

    #[test]
    fn associated_stirling_numbers() {
        assert_eq!(assoc_stirling2(2, 1), BigInt::from(1));
        assert_eq!(assoc_stirling2(4, 2), BigInt::from(3));
        assert_eq!(assoc_stirling2(3, 2), BigInt::from(0));
    }

    #[test]
    fn special_tables_agree_with_single_calls() {
        let (d, b) = special_tables(9);
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(d.get(n, k).unwrap(), derangement_count(n, k));
                assert_eq!(b.get(n, k).unwrap(), assoc_stirling2(n, k));
            }
        }
    }

    fn seq_strategy(order: usize, unit_first: bool) -> impl Strategy<Value = CoeffSeq<BigRational>> {
        prop::collection::vec((-6i64..7, 1i64..4), order).prop_map(move |v| {
            CoeffSeq::new(
                v.into_iter()
                    .enumerate()
                    .map(|(i, (n, d))| {
                        if i == 0 && unit_first {
                            BigRational::from_integer(1.into())
                        } else if i == 0 && n == 0 {
                            BigRational::new(3.into(), d.into())
                        } else {
                            BigRational::new(n.into(), d.into())
                        }
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn product_is_associative(x in seq_strategy(7, false), y in seq_strategy(7, false), z in seq_strategy(7, false)) {
            let left = bell_product(&bell_product(&x, &y), &z);
            let right = bell_product(&x, &bell_product(&y, &z));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverses_are_two_sided_and_agree(x in seq_strategy(9, false)) {
            let rec = bell_inverse_recursive(&x).unwrap();
            let closed = bell_inverse_closed(&x).unwrap();
            prop_assert_eq!(&rec, &closed);
            let e = CoeffSeq::identity(9);
            prop_assert_eq!(bell_product(&x, &rec), e.clone());
            prop_assert_eq!(bell_product(&rec, &x), e);
        }

        #[test]
        fn product_is_left_distributive(f in seq_strategy(7, false), g in seq_strategy(7, false), h in seq_strategy(7, false)) {
            let lhs = bell_product(&(f.clone() + &g), &h);
            let rhs = bell_product(&f, &h) + &bell_product(&g, &h);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
