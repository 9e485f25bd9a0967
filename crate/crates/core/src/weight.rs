//! Sparse integer polynomials in the vertex indeterminates `x_{c,k}`.
//!
//! `x_{c,k}` weighs an inner vertex of color `c` with out-degree `k`; a tree's
//! weight is the product over its inner vertices, so every coefficient of the
//! tree generating function is one of these polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Index of `x_{c,k}`: color `c ≥ 1`, out-degree `k ≥ 2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorDegree {
    pub color: u32,
    pub degree: u32,
}

impl ColorDegree {
    pub fn new(color: u32, degree: u32) -> Result<Self> {
        if color == 0 || degree < 2 {
            return Err(Error::Parse(format!(
                "x_{{{color},{degree}}} needs color >= 1 and degree >= 2"
            )));
        }
        Ok(ColorDegree { color, degree })
    }
}

/// A monomial `Π x_{c,k}^{e}` with factors sorted by (color, degree) and
/// positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(ColorDegree, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: ColorDegree) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(ColorDegree, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut merged: BTreeMap<ColorDegree, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *merged.entry(v).or_insert(0) += e;
        }
        Monomial(merged.into_iter().collect())
    }

    /// `Σ (k - 1)·e` over the factors: the number of extra leaves the
    /// corresponding inner vertices create.
    pub fn degree_mass(&self) -> u32 {
        self.0.iter().map(|(v, e)| (v.degree - 1) * e).sum()
    }

    /// `[[c, k, e], …]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(v, e)| json!([v.color, v.degree, e]))
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x_{{{},{}}}", v.color, v.degree)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl WeightPoly {
    pub fn var(color: u32, degree: u32) -> Result<Self> {
        Ok(WeightPoly::term(Monomial::var(ColorDegree::new(color, degree)?), BigInt::from(1)))
    }

    pub fn term(m: Monomial, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        WeightPoly { terms }
    }

    pub fn constant(c: BigInt) -> Self {
        WeightPoly::term(Monomial::one(), c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Substitutes every `x_{c,k}` by `value(c,k)` in an arbitrary ring.
    pub fn evaluate<R: Ring>(&self, value: impl Fn(ColorDegree) -> R) -> R {
        let mut cache: BTreeMap<ColorDegree, R> = BTreeMap::new();
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut prod = R::from_int(c);
            for &(v, e) in &m.0 {
                let base = cache.entry(v).or_insert_with(|| value(v));
                prod = prod * &base.pow(e);
            }
            total = total + &prod;
        }
        total
    }

    /// `[{"monomial": [[c,k,e],…], "coeff": n}, …]` in canonical monomial
    /// order. Coefficients beyond the 53-bit safe range become strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({ "monomial": m.to_json(), "coeff": json_int(c) }))
                .collect(),
        )
    }

    /// Parses expressions such as `x_{1,3}+6x_{1,2}x_{2,2}` or
    /// `15(x_{1,2}^{2}x_{2,2}+x_{1,2}x_{2,2}^2)`. Juxtaposition and `*` both
    /// multiply; braces around indices and exponents are optional, and LaTeX
    /// spacing (`\,`, `\;`) is ignored.
    pub fn parse(src: &str) -> Result<Self> {
        let cleaned: Vec<char> = src
            .replace("\\,", "")
            .replace("\\;", "")
            .replace("\\!", "")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        let mut p = Parser { s: &cleaned, pos: 0 };
        let out = p.expr()?;
        if p.pos != cleaned.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

/// Integer as a JSON number when it fits in ±(2^53 − 1), else as a string.
pub fn json_int(n: &BigInt) -> Value {
    const SAFE: i64 = (1i64 << 53) - 1;
    match n.to_i64() {
        Some(v) if v.abs() <= SAFE => json!(v),
        _ => Value::String(n.to_string()),
    }
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text: String = self.s[start..self.pos].iter().collect();
        Ok(text.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        self.number()?
            .to_u32()
            .ok_or_else(|| self.err("index too large"))
    }

    fn expr(&mut self) -> Result<WeightPoly> {
        let mut negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        let mut acc = WeightPoly::zero();
        loop {
            let t = self.term()?;
            acc = if negate { acc - t } else { acc + t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<WeightPoly> {
        let mut acc = WeightPoly::one();
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => acc = acc * WeightPoly::constant(self.number()?),
                Some('x') => {
                    self.pos += 1;
                    let v = self.variable()?;
                    acc = acc * v.pow(self.exponent()?);
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(')')?;
                    acc = acc * inner.pow(self.exponent()?);
                }
                Some('*') if any => {
                    self.pos += 1;
                    continue;
                }
                _ if any => return Ok(acc),
                _ => return Err(self.err("expected a factor")),
            }
            any = true;
        }
    }

    fn variable(&mut self) -> Result<WeightPoly> {
        self.expect('_')?;
        let braced = self.eat('{');
        let c = self.small()?;
        self.expect(',')?;
        let k = self.small()?;
        if braced {
            self.expect('}')?;
        }
        WeightPoly::var(c, k)
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        if self.eat('{') {
            let e = self.small()?;
            self.expect('}')?;
            Ok(e)
        } else {
            self.small()
        }
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag == BigInt::from(1);
            match (m.0.is_empty(), unit) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

impl Add<&WeightPoly> for WeightPoly {
    type Output = WeightPoly;

    fn add(mut self, rhs: &WeightPoly) -> WeightPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Add for WeightPoly {
    type Output = WeightPoly;

    fn add(self, rhs: WeightPoly) -> WeightPoly {
        self + &rhs
    }
}

impl Sub<&WeightPoly> for WeightPoly {
    type Output = WeightPoly;

    fn sub(mut self, rhs: &WeightPoly) -> WeightPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl Sub for WeightPoly {
    type Output = WeightPoly;

    fn sub(self, rhs: WeightPoly) -> WeightPoly {
        self - &rhs
    }
}

impl Mul<&WeightPoly> for WeightPoly {
    type Output = WeightPoly;

    fn mul(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = WeightPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for WeightPoly {
    type Output = WeightPoly;

    fn mul(self, rhs: WeightPoly) -> WeightPoly {
        self * &rhs
    }
}

impl Neg for WeightPoly {
    type Output = WeightPoly;

    fn neg(self) -> WeightPoly {
        WeightPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Ring for WeightPoly {
    fn zero() -> Self {
        WeightPoly::default()
    }

    fn one() -> Self {
        WeightPoly::constant(BigInt::from(1))
    }

    fn from_int(n: &BigInt) -> Self {
        WeightPoly::constant(n.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn unit_inverse(&self) -> Option<Self> {
        let (m, c) = self.terms.iter().next()?;
        (self.terms.len() == 1 && m.0.is_empty() && c.abs() == BigInt::from(1))
            .then(|| self.clone())
    }

    /// Only division by a unit constant is supported.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.unit_inverse().map(|inv| self.clone() * &inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: u32, k: u32) -> WeightPoly {
        WeightPoly::var(c, k).unwrap()
    }

    #[test]
    fn variables_validate_indices() {
        assert!(WeightPoly::var(0, 2).is_err());
        assert!(WeightPoly::var(1, 1).is_err());
        assert!(ColorDegree::new(3, 2).is_ok());
    }

    #[test]
    fn canonical_monomials() {
        let a = x(2, 2) * x(1, 2);
        let b = x(1, 2) * x(2, 2);
        assert_eq!(a, b);
        let sq = x(1, 2) * x(1, 2);
        let (m, c) = sq.terms().next().unwrap();
        assert_eq!(m.factors(), &[(ColorDegree::new(1, 2).unwrap(), 2)]);
        assert_eq!(*c, BigInt::from(1));
        assert!((x(1, 3) - x(1, 3)).is_empty());
    }

    #[test]
    fn parse_paper_style() {
        let p = WeightPoly::parse("x_{1,3}+x_{2,3}+6x_{1,2}x_{2,2}").unwrap();
        let expected = x(1, 3) + x(2, 3) + WeightPoly::constant(6.into()) * x(1, 2) * x(2, 2);
        assert_eq!(p, expected);
        let grouped = WeightPoly::parse("15\\bigl(x_{1,2}^{2}x_{2,2}+x_{1,2}x_{2,2}^2\\bigr)");
        assert!(grouped.is_err(), "\\bigl is not part of the grammar");
        let grouped = WeightPoly::parse("15(x_{1,2}^{2}x_{2,2}+x_{1,2}x_{2,2}^2)").unwrap();
        assert_eq!(grouped.len(), 2);
        assert_eq!(WeightPoly::parse("2*x_1,2 - x_{1,2}").unwrap(), x(1, 2));
        assert_eq!(WeightPoly::parse("3 - 3").unwrap(), WeightPoly::zero());
        assert!(WeightPoly::parse("x_{1,2} +").is_err());
        assert!(WeightPoly::parse("y").is_err());
    }

    #[test]
    fn display_and_json() {
        let p = WeightPoly::parse("x_{2,3} + 6x_{1,2}x_{2,2} - 1").unwrap();
        assert_eq!(p.to_string(), "-1 + 6*x_{1,2}*x_{2,2} + x_{2,3}");
        assert_eq!(WeightPoly::parse(&p.to_string().replace('*', "")).unwrap(), p);
        let j = p.to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"monomial":[],"coeff":-1},{"monomial":[[1,2,1],[2,2,1]],"coeff":6},{"monomial":[[2,3,1]],"coeff":1}]"#
        );
        let big = BigInt::from(1u64 << 60);
        assert_eq!(json_int(&big), Value::String("1152921504606846976".into()));
        assert_eq!(json_int(&BigInt::from(52)), json!(52));
    }

    #[test]
    fn evaluate_and_degree_mass() {
        let p = WeightPoly::parse("x_{1,3} + 6x_{1,2}x_{2,2}").unwrap();
        let ones: BigInt = p.evaluate(|_| BigInt::from(1));
        assert_eq!(ones, BigInt::from(7));
        let fact: BigInt = p.evaluate(|v| BigInt::from((1..v.degree).product::<u32>()));
        assert_eq!(fact, BigInt::from(2 + 6));
        for (m, _) in p.terms() {
            assert_eq!(m.degree_mass(), 2);
        }
    }

    #[test]
    fn units() {
        assert_eq!(WeightPoly::one().unit_inverse(), Some(WeightPoly::one()));
        assert_eq!(x(1, 2).unit_inverse(), None);
        assert_eq!(WeightPoly::constant(2.into()).unit_inverse(), None);
    }
}
