//! Sparse multivariate polynomials with exact coefficients.
//!
//! Every weighted sum in the crate is a [`MultiPoly`]: a map from canonical
//! [`Monomial`]s to nonzero big-integer coefficients. [`RatPoly`] is the same
//! structure over big rationals and is used by the series engine.
//!
//! Variables come from a closed set of families (see [`Family`]). The
//! families `x` and `y` may carry a positive index (`x3`, `y12`); every family
//! also has an unindexed member (`x`, `s`, `lambda`, ...).
//!
//! Text form: terms are printed in descending graded-lex order, factors
//! joined by `*`, e.g. `-x1*x2*y3 + x1`. [`Poly::from_str`] parses the same
//! grammar.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Variable families, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Indeterminate of orthogonal polynomial sequences, printed `X`.
    /// Ordered first so polynomials in `X` print by descending power of `X`.
    Ortho,
    X,
    Y,
    S,
    T,
    Lambda,
    Q,
    A,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::S => "s",
            Family::T => "t",
            Family::Lambda => "lambda",
            Family::Q => "q",
            Family::A => "a",
            Family::Ortho => "X",
        }
    }

    fn indexable(self) -> bool {
        matches!(self, Family::X | Family::Y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    family: Family,
    index: Option<u32>,
}

pub const X: Var = Var::plain(Family::X);
pub const Y: Var = Var::plain(Family::Y);
pub const S: Var = Var::plain(Family::S);
pub const T: Var = Var::plain(Family::T);
pub const LAMBDA: Var = Var::plain(Family::Lambda);
pub const Q: Var = Var::plain(Family::Q);
pub const A: Var = Var::plain(Family::A);
pub const ORTHO: Var = Var::plain(Family::Ortho);

impl Var {
    pub const fn plain(family: Family) -> Self {
        Var {
            family,
            index: None,
        }
    }

    /// `x_i`. Panics if `i == 0`.
    pub fn x(i: u32) -> Self {
        assert!(i > 0, "variable indices are 1-based");
        Var {
            family: Family::X,
            index: Some(i),
        }
    }

    /// `y_i`. Panics if `i == 0`.
    pub fn y(i: u32) -> Self {
        assert!(i > 0, "variable indices are 1-based");
        Var {
            family: Family::Y,
            index: Some(i),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if let Some(i) = self.index {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// A power product of variables, stored sorted by variable with no zero
/// exponents.
///
/// The `Ord` impl is *descending* graded-lex: larger total degree sorts
/// first, ties broken by the exponent of the smallest variable. Iterating a
/// `BTreeMap<Monomial, _>` therefore yields terms in display order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Multiplies in `v^e` in place.
    pub fn push(&mut self, v: Var, e: u32) {
        if e == 0 {
            return;
        }
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1 += e,
            Err(i) => self.0.insert(i, (v, e)),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match other.degree().cmp(&self.degree()) {
            Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Equal,
                (Some(_), None) => return Less,
                (None, Some(_)) => return Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Less;
                    } else {
                        return Greater;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_integer(n: BigInt) -> Self;
    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

pub type MultiPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Adds `c * m` in place, keeping the map zero-free.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, k: u32) -> Poly<C> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let rest = Monomial(m.0.iter().copied().filter(|&(w, _)| w != v).collect());
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly<C> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly<C> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each bound variable by its image; unbound variables are kept.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly<C>>) -> Poly<C> {
        let mut powers: BTreeMap<(Var, u32), Poly<C>> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                match bindings.get(&v) {
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => kept.push(v, e),
                }
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&kept), fc);
            }
        }
        out
    }

    /// Convenience wrapper around [`Poly::substitute`].
    pub fn subs<I: IntoIterator<Item = (Var, Poly<C>)>>(&self, bindings: I) -> Poly<C> {
        self.substitute(&bindings.into_iter().collect())
    }

    /// Exact evaluation. Variables missing from `point` evaluate to zero.
    pub fn eval(&self, point: &BTreeMap<Var, BigRational>) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.to_rational();
            for &(v, e) in &m.0 {
                let x = point.get(&v).cloned().unwrap_or_else(BigRational::zero);
                t *= num_traits::pow(x, e as usize);
            }
            total += t;
        }
        total
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(Coeff::to_rational)
    }

    fn add_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += other;
        out
    }

    fn sub_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= other;
        out
    }

    fn mul_ref(&self, other: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl RatPoly {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(m.clone(), c.to_integer());
        }
        Some(out)
    }
}

impl<C: Coeff> From<Var> for Poly<C> {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coeff> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$inner(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coeff> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$inner(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(mut self) -> Poly<C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<C: Coeff> std::iter::Product for Poly<C> {
    fn product<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("division by zero in coefficient")]
    ZeroDenominator,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn take_while<F: Fn(char) -> bool>(&mut self, f: F) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<BigInt, ParsePolyError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return match self.peek() {
                Some(c) => Err(ParsePolyError::Unexpected(c, self.pos)),
                None => Err(ParsePolyError::UnexpectedEnd),
            };
        }
        digits
            .parse()
            .map_err(|_| ParsePolyError::BadNumber(digits.to_string()))
    }

    fn variable(&mut self) -> Result<Var, ParsePolyError> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric());
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len());
        let (head, tail) = name.split_at(split);
        let family = match head {
            "x" => Family::X,
            "y" => Family::Y,
            "s" => Family::S,
            "t" => Family::T,
            "lambda" => Family::Lambda,
            "q" => Family::Q,
            "a" => Family::A,
            "X" => Family::Ortho,
            _ => return Err(ParsePolyError::UnknownVariable(name.to_string())),
        };
        if tail.is_empty() {
            return Ok(Var::plain(family));
        }
        if !family.indexable() {
            return Err(ParsePolyError::UnknownVariable(name.to_string()));
        }
        match tail.parse::<u32>() {
            Ok(i) if i > 0 => Ok(Var {
                family,
                index: Some(i),
            }),
            _ => Err(ParsePolyError::UnknownVariable(name.to_string())),
        }
    }

    /// factor := int ['/' int] | var ['^' int]
    fn factor(&mut self) -> Result<(BigRational, Monomial), ParsePolyError> {
        self.skip_ws();
        match self.peek() {
            None => Err(ParsePolyError::UnexpectedEnd),
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.number()?;
                    if den.is_zero() {
                        return Err(ParsePolyError::ZeroDenominator);
                    }
                    Ok((BigRational::new(num, den), Monomial::one()))
                } else {
                    Ok((BigRational::from_integer(num), Monomial::one()))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let v = self.variable()?;
                self.skip_ws();
                let mut e = 1u32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let n = self.number()?;
                    e = u32::try_from(n.clone())
                        .map_err(|_| ParsePolyError::BadNumber(n.to_string()))?;
                }
                Ok((BigRational::one(), Monomial::from_pairs([(v, e)])))
            }
            Some(c) => Err(ParsePolyError::Unexpected(c, self.pos)),
        }
    }

    fn term(&mut self) -> Result<(BigRational, Monomial), ParsePolyError> {
        let (mut c, mut m) = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                let (c2, m2) = self.factor()?;
                c *= c2;
                m = m.mul(&m2);
            } else {
                return Ok((c, m));
            }
        }
    }

    fn expr(&mut self) -> Result<RatPoly, ParsePolyError> {
        let mut out = RatPoly::zero();
        self.skip_ws();
        let mut sign = BigRational::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, sign * c);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => {
                    sign = BigRational::one();
                    self.pos += 1;
                }
                Some('-') => {
                    sign = -BigRational::one();
                    self.pos += 1;
                }
                Some(c) => return Err(ParsePolyError::Unexpected(c, self.pos)),
            }
        }
    }
}

impl FromStr for RatPoly {
    type Err = ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s, pos: 0 }.expr()
    }
}

impl FromStr for MultiPoly {
    type Err = ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p: RatPoly = s.parse()?;
        p.to_integer()
            .ok_or_else(|| ParsePolyError::BadNumber("non-integer coefficient".into()))
    }
}

/// `x_1 x_2 ... x_k` style products over an index range of a family.
pub fn index_product(family: Family, indices: impl IntoIterator<Item = u32>) -> Monomial {
    Monomial::from_pairs(indices.into_iter().map(|i| {
        (
            Var {
                family,
                index: Some(i),
            },
            1,
        )
    }))
}
