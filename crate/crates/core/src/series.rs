//! Truncated power series with exact polynomial coefficients, and Jacobi
//! continued-fraction moments via weighted Motzkin paths.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{weighted_sum, FamilySpec, WeightSpec};
use crate::poly::{self, MultiPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot combine an OGF with an EGF")]
    FlavorMismatch,
    #[error("constant term {0} is not an invertible scalar")]
    NotInvertible(String),
    #[error("exp needs a zero constant term, got {0}")]
    NonzeroConstant(String),
    #[error("unknown series preset {0:?}")]
    UnknownPreset(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `Σ a_n xⁿ`.
    Ogf,
    /// `Σ a_n xⁿ/n!`.
    Egf,
}

/// `a_0 + a_1 x + … + a_N x^N + O(x^{N+1})`, with `a_n` stored as displayed
/// by the flavor (for an EGF, `a_n` is the coefficient of `xⁿ/n!`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<RatPoly>,
    flavor: Flavor,
    /// Set when an operation received operands of different orders and
    /// truncated to the smaller one.
    pub clipped: bool,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl PowerSeries {
    pub fn new(coeffs: Vec<RatPoly>, flavor: Flavor) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least a_0");
        PowerSeries { coeffs, flavor, clipped: false }
    }

    pub fn from_scalars(values: &[i64], flavor: Flavor) -> Self {
        Self::new(values.iter().map(|&v| RatPoly::int(v)).collect(), flavor)
    }

    pub fn zero(order: usize, flavor: Flavor) -> Self {
        Self::new(vec![RatPoly::zero(); order + 1], flavor)
    }

    pub fn one(order: usize, flavor: Flavor) -> Self {
        Self::constant(RatPoly::one(), order, flavor)
    }

    pub fn constant(c: RatPoly, order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        s.coeffs[0] = c;
        s
    }

    /// The series variable itself.
    pub fn variable(order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        if order >= 1 {
            s.coeffs[1] = RatPoly::one();
        }
        s
    }

    /// `1/(1 - c x)` as an OGF.
    pub fn geometric(c: &RatPoly, order: usize) -> Self {
        let mut coeffs = vec![RatPoly::one()];
        for n in 1..=order {
            let next = &coeffs[n - 1] * c;
            coeffs.push(next);
        }
        Self::new(coeffs, Flavor::Ogf)
    }

    /// `e^{c x}` in the requested flavor.
    pub fn exp_linear(c: &RatPoly, order: usize, flavor: Flavor) -> Self {
        let egf = Self::new((0..=order as u32).map(|n| c.pow(n)).collect(), Flavor::Egf);
        egf.into_flavor(flavor)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn coefficients(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Stored `a_n`, or `None` beyond the truncation order.
    pub fn coefficient(&self, n: usize) -> Option<&RatPoly> {
        self.coeffs.get(n)
    }

    /// Coefficients that are integer scalars, for number sequences.
    pub fn integer_values(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.as_constant().filter(|r| r.is_integer()).map(|r| r.to_integer()))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        PowerSeries { coeffs: self.coeffs[..keep].to_vec(), ..self.clone() }
    }

    /// Plain `xⁿ` coefficients regardless of flavor.
    fn ogf_coeffs(&self) -> Vec<RatPoly> {
        match self.flavor {
            Flavor::Ogf => self.coeffs.clone(),
            Flavor::Egf => self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&BigRational::new(1.into(), factorial(n))))
                .collect(),
        }
    }

    fn from_ogf_coeffs(coeffs: Vec<RatPoly>, flavor: Flavor) -> Self {
        let coeffs = match flavor {
            Flavor::Ogf => coeffs,
            Flavor::Egf => coeffs
                .into_iter()
                .enumerate()
                .map(|(n, c)| c.scale(&BigRational::from_integer(factorial(n))))
                .collect(),
        };
        Self::new(coeffs, flavor)
    }

    /// Same function, re-expressed in another flavor.
    pub fn into_flavor(self, flavor: Flavor) -> Self {
        if self.flavor == flavor {
            return self;
        }
        Self::from_ogf_coeffs(self.ogf_coeffs(), flavor)
    }

    fn aligned(&self, other: &Self) -> Result<(Vec<RatPoly>, Vec<RatPoly>, bool), SeriesError> {
        if self.flavor != other.flavor {
            return Err(SeriesError::FlavorMismatch);
        }
        let n = self.order().min(other.order());
        let clipped = self.order() != other.order() || self.clipped || other.clipped;
        Ok((self.ogf_coeffs()[..=n].to_vec(), other.ogf_coeffs()[..=n].to_vec(), clipped))
    }

    fn finish(&self, coeffs: Vec<RatPoly>, clipped: bool) -> Self {
        let mut s = Self::from_ogf_coeffs(coeffs, self.flavor);
        s.clipped = clipped;
        s
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let (a, b, clipped) = self.aligned(other)?;
        Ok(self.finish(a.iter().zip(&b).map(|(x, y)| x + y).collect(), clipped))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let (a, b, clipped) = self.aligned(other)?;
        Ok(self.finish(a.iter().zip(&b).map(|(x, y)| x - y).collect(), clipped))
    }

    /// Product as functions; for EGFs this is the binomial convolution of
    /// the stored coefficients.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let (a, b, clipped) = self.aligned(other)?;
        let coeffs = (0..a.len())
            .map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum())
            .collect();
        Ok(self.finish(coeffs, clipped))
    }

    pub fn scale(&self, c: &RatPoly) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect(), ..self.clone() }
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a = self.ogf_coeffs();
        let a0 = a[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| SeriesError::NotInvertible(a[0].to_string()))?;
        let inv0 = a0.recip();
        let mut b: Vec<RatPoly> = vec![RatPoly::constant(inv0.clone())];
        for n in 1..a.len() {
            let s: RatPoly = (1..=n).map(|k| &a[k] * &b[n - k]).sum();
            b.push(s.scale(&-inv0.clone()));
        }
        Ok(self.finish(b, self.clipped))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.mul(&other.inverse()?)
    }

    /// `f'`; the order drops by one (a constant series stays order 0).
    pub fn derivative(&self) -> Self {
        let a = self.ogf_coeffs();
        if a.len() == 1 {
            return self.finish(vec![RatPoly::zero()], self.clipped);
        }
        let d = (1..a.len()).map(|n| a[n].scale(&rat(n as i64))).collect();
        self.finish(d, self.clipped)
    }

    /// `∫_0^x f`; the order grows by one.
    pub fn integral(&self) -> Self {
        let a = self.ogf_coeffs();
        let mut out = vec![RatPoly::zero()];
        out.extend(a.iter().enumerate().map(|(n, c)| c.scale(&BigRational::new(1.into(), (n as i64 + 1).into()))));
        self.finish(out, self.clipped)
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        let f = self.ogf_coeffs();
        if !f[0].is_zero() {
            return Err(SeriesError::NonzeroConstant(f[0].to_string()));
        }
        let mut b = vec![RatPoly::one()];
        for n in 1..f.len() {
            let s: RatPoly = (1..=n).map(|k| f[k].scale(&rat(k as i64)) * &b[n - k]).sum();
            b.push(s.scale(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(self.finish(b, self.clipped))
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        let a0 = self.ogf_coeffs()[0].clone();
        if a0 != RatPoly::one() {
            return Err(SeriesError::NotInvertible(a0.to_string()));
        }
        let quotient = self.derivative().mul(&self.truncate(self.order().saturating_sub(1)).inverse()?)?;
        let mut out = quotient.integral();
        out.clipped = self.clipped;
        Ok(out)
    }

    /// `f(c x)`.
    pub fn compose_scalar(&self, c: &RatPoly) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(n, a)| a * &c.pow(n as u32)).collect(),
            ..self.clone()
        }
    }

    /// Multiplication by `x`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut a = vec![RatPoly::zero()];
        let mut rest = self.ogf_coeffs();
        rest.pop();
        a.extend(rest);
        self.finish(a, self.clipped)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.flavor {
            Flavor::Ogf => "ogf",
            Flavor::Egf => "egf",
        };
        writeln!(f, "# {kind}, order {}", self.order())?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// Named series used by the CLI and the number-theory checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesPreset {
    /// `e^{-x}/(1-x)`, EGF of the derangement numbers.
    DerangementEgf,
    /// `e^{-x}/(1-x)²`, EGF of `d_{n+2,1}`.
    FirstColumnEgf,
    /// `(1+2x-x²)/(1-x)³`, OGF of `d_{n+3,n+1}`.
    SubdiagonalOgf,
    /// `(1-(x+y)t)/((1-xt)(1-yt))` in `t`.
    LambdaMinusOne,
    /// `(1+t)^{-1-a} exp(Xt/(1+t))`, EGF of monic Laguerre polynomials.
    LaguerreEgf,
}

impl SeriesPreset {
    pub const ALL: [SeriesPreset; 5] = [
        SeriesPreset::DerangementEgf,
        SeriesPreset::FirstColumnEgf,
        SeriesPreset::SubdiagonalOgf,
        SeriesPreset::LambdaMinusOne,
        SeriesPreset::LaguerreEgf,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SeriesPreset::DerangementEgf => "derangement-egf",
            SeriesPreset::FirstColumnEgf => "first-column-egf",
            SeriesPreset::SubdiagonalOgf => "subdiagonal-ogf",
            SeriesPreset::LambdaMinusOne => "lambda-minus-one",
            SeriesPreset::LaguerreEgf => "laguerre-egf",
        }
    }

    pub fn parse(s: &str) -> Result<Self, SeriesError> {
        Self::ALL
            .into_iter()
            .find(|p| p.label() == s)
            .ok_or_else(|| SeriesError::UnknownPreset(s.to_string()))
    }

    pub fn expand(self, order: usize) -> PowerSeries {
        let one = RatPoly::one();
        let minus_one = RatPoly::int(-1);
        match self {
            SeriesPreset::DerangementEgf => {
                let e = PowerSeries::exp_linear(&minus_one, order, Flavor::Egf);
                let g = PowerSeries::geometric(&one, order).into_flavor(Flavor::Egf);
                e.mul(&g).expect("same flavor")
            }
            SeriesPreset::FirstColumnEgf => {
                let e = PowerSeries::exp_linear(&minus_one, order, Flavor::Egf);
                let g = PowerSeries::geometric(&one, order).into_flavor(Flavor::Egf);
                e.mul(&g).and_then(|p| p.mul(&g)).expect("same flavor")
            }
            SeriesPreset::SubdiagonalOgf => {
                let mut num = PowerSeries::zero(order, Flavor::Ogf);
                for (k, c) in [1i64, 2, -1].into_iter().enumerate() {
                    if k <= order {
                        num.coeffs[k] = RatPoly::int(c);
                    }
                }
                let g = PowerSeries::geometric(&one, order);
                num.mul(&g).and_then(|p| p.mul(&g)).and_then(|p| p.mul(&g)).expect("same flavor")
            }
            SeriesPreset::LambdaMinusOne => {
                let x = RatPoly::var(poly::X);
                let y = RatPoly::var(poly::Y);
                let mut num = PowerSeries::one(order, Flavor::Ogf);
                if order >= 1 {
                    num.coeffs[1] = -(&x + &y);
                }
                let gx = PowerSeries::geometric(&x, order);
                let gy = PowerSeries::geometric(&y, order);
                num.mul(&gx).and_then(|p| p.mul(&gy)).expect("same flavor")
            }
            SeriesPreset::LaguerreEgf => {
                let t = PowerSeries::variable(order, Flavor::Ogf);
                let one_plus_t = PowerSeries::one(order, Flavor::Ogf).add(&t).expect("same flavor");
                let exponent = -(RatPoly::one() + RatPoly::var(poly::A));
                let power = one_plus_t.log().expect("unit constant").scale(&exponent).exp().expect("zero constant");
                let inner = t
                    .mul(&PowerSeries::geometric(&minus_one, order))
                    .expect("same flavor")
                    .scale(&RatPoly::var(poly::ORTHO));
                power
                    .mul(&inner.exp().expect("zero constant"))
                    .expect("same flavor")
                    .into_flavor(Flavor::Egf)
            }
        }
    }
}

/// Level weights of a Jacobi continued fraction
/// `1/(1 - γ₀t - β₁t²/(1 - γ₁t - β₂t²/⋯))`.
pub struct JFraction {
    pub name: String,
    gamma: Box<dyn Fn(usize) -> MultiPoly + Send + Sync>,
    beta: Box<dyn Fn(usize) -> MultiPoly + Send + Sync>,
}

impl fmt::Debug for JFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JFraction").field("name", &self.name).finish_non_exhaustive()
    }
}

fn lin(terms: &[(MultiPoly, i64)], c: i64) -> MultiPoly {
    terms.iter().map(|(p, k)| p * MultiPoly::int(*k)).sum::<MultiPoly>() + MultiPoly::int(c)
}

impl JFraction {
    pub fn new<G, B>(name: impl Into<String>, gamma: G, beta: B) -> Self
    where
        G: Fn(usize) -> MultiPoly + Send + Sync + 'static,
        B: Fn(usize) -> MultiPoly + Send + Sync + 'static,
    {
        JFraction { name: name.into(), gamma: Box::new(gamma), beta: Box::new(beta) }
    }

    /// `γ₀ = 0`, `γ_n = x + ny + n - 1`, `β_n = (λ + n - 1)(x + n - 1)y`:
    /// moments `D_n(x, y, λ)`.
    pub fn full() -> Self {
        let x = MultiPoly::var(poly::X);
        let y = MultiPoly::var(poly::Y);
        let l = MultiPoly::var(poly::LAMBDA);
        let (x2, y2) = (x.clone(), y.clone());
        JFraction::new(
            "full",
            move |n| if n == 0 { MultiPoly::zero() } else { lin(&[(x.clone(), 1), (y.clone(), n as i64)], n as i64 - 1) },
            move |n| {
                let m = n as i64 - 1;
                lin(&[(l.clone(), 1)], m) * lin(&[(x2.clone(), 1)], m) * &y2
            },
        )
    }

    /// `γ₀ = 0`, `γ_n = x + 2n - 1`, `β_n = n(x + n - 1)`: moments `D_n(x)`.
    pub fn dnx() -> Self {
        let x = MultiPoly::var(poly::X);
        let x2 = x.clone();
        JFraction::new(
            "dnx",
            move |n| if n == 0 { MultiPoly::zero() } else { lin(&[(x.clone(), 1)], 2 * n as i64 - 1) },
            move |n| MultiPoly::int(n as i64) * lin(&[(x2.clone(), 1)], n as i64 - 1),
        )
    }

    /// `γ₀ = 1`, `γ_n = 2n + 1`, `β_n = n(n + 1)`: moments `d_{n+2,1}`.
    pub fn dn1() -> Self {
        JFraction::new(
            "dn1",
            |n| MultiPoly::int(2 * n as i64 + 1),
            |n| MultiPoly::int((n * (n + 1)) as i64),
        )
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "full" => Some(Self::full()),
            "dnx" => Some(Self::dnx()),
            "dn1" => Some(Self::dn1()),
            _ => None,
        }
    }

    pub fn gamma(&self, n: usize) -> MultiPoly {
        (self.gamma)(n)
    }

    pub fn beta(&self, n: usize) -> MultiPoly {
        (self.beta)(n)
    }
}

/// `μ_0, …, μ_N`: weighted Motzkin paths from level 0 back to 0, a level
/// step at height `h` weighing `γ_h` and a down step from height `h`
/// weighing `β_h`.
pub fn jf_moments(spec: &JFraction, order: usize) -> Vec<MultiPoly> {
    let top = order / 2 + 1;
    let gamma: Vec<MultiPoly> = (0..=top).map(|h| spec.gamma(h)).collect();
    let beta: Vec<MultiPoly> = (0..=top + 1).map(|h| spec.beta(h)).collect();
    let mut v = vec![MultiPoly::zero(); top + 1];
    v[0] = MultiPoly::one();
    let mut out = vec![v[0].clone()];
    for _ in 0..order {
        let next: Vec<MultiPoly> = (0..=top)
            .map(|h| {
                let mut acc = &gamma[h] * &v[h];
                if h > 0 {
                    acc += &v[h - 1];
                }
                if h < top {
                    acc += &(&beta[h + 1] * &v[h + 1]);
                }
                acc
            })
            .collect();
        v = next;
        out.push(v[0].clone());
    }
    out
}

/// One row of a moment-versus-enumeration comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentCase {
    pub n: usize,
    pub moment: MultiPoly,
    pub brute: MultiPoly,
    pub pass: bool,
}

/// `D_n(x, y, λ)` by enumeration.
pub fn derangement_polynomial(n: usize) -> MultiPoly {
    weighted_sum(&FamilySpec::Dn { n }, &WeightSpec::lambda_rlm_exc()).expect("Dn accepts the λ weight")
}

/// Moments of the full fraction against brute force for `n <= order`.
pub fn verify_jfraction_theorem(order: usize) -> Vec<MomentCase> {
    jf_moments(&JFraction::full(), order)
        .into_iter()
        .enumerate()
        .map(|(n, moment)| {
            let brute = derangement_polynomial(n);
            let pass = moment == brute;
            MomentCase { n, moment, brute, pass }
        })
        .collect()
}

/// `D_n(x, y, -1)` against `-Σ_{j=1}^{n-1} x^j y^{n-j}` and against the
/// `tⁿ` coefficient of `(1-(x+y)t)/((1-xt)(1-yt))`, for `2 <= n <= order`.
pub fn verify_lambda_minus1(order: usize) -> Vec<MomentCase> {
    let series = SeriesPreset::LambdaMinusOne.expand(order);
    (2..=order)
        .map(|n| {
            let brute = derangement_polynomial(n).subs([(poly::LAMBDA, MultiPoly::int(-1))]);
            let closed: MultiPoly = -(1..n as u32)
                .map(|j| MultiPoly::var(poly::X).pow(j) * MultiPoly::var(poly::Y).pow(n as u32 - j))
                .sum::<MultiPoly>();
            let from_series = series.coefficient(n).and_then(RatPoly::to_integer);
            let pass = brute == closed && from_series.as_ref() == Some(&closed);
            MomentCase { n, moment: closed, brute, pass }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_values()
            .unwrap()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn full_fraction_low_moments() {
        let m = jf_moments(&JFraction::full(), 3);
        assert_eq!(m[0], MultiPoly::one());
        assert!(m[1].is_zero());
        assert_eq!(m[2], p("lambda*x*y"));
        assert_eq!(m[3], p("lambda*x^2*y + lambda*x*y^2"));
    }

    #[test]
    fn dnx_fourth_moment() {
        assert_eq!(jf_moments(&JFraction::dnx(), 4)[4], p("x^3 + 5*x^2 + 3*x"));
    }

    #[test]
    fn dn1_moments() {
        let m: Vec<MultiPoly> = jf_moments(&JFraction::dn1(), 6);
        let expected = [1, 1, 3, 11, 53, 309, 2119];
        assert_eq!(m, expected.iter().map(|&v| MultiPoly::int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn zero_weights_give_delta() {
        let f = JFraction::new("zero", |_| MultiPoly::zero(), |_| MultiPoly::zero());
        let m = jf_moments(&f, 5);
        assert_eq!(m[0], MultiPoly::one());
        assert!(m[1..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn theorem_small_orders() {
        assert!(verify_jfraction_theorem(2).iter().all(|c| c.pass));
        let low = verify_jfraction_theorem(1);
        assert_eq!(low[0].brute, MultiPoly::one());
        assert!(low[1].brute.is_zero());
    }

    #[test]
    fn lambda_minus_one_small() {
        let cases = verify_lambda_minus1(4);
        assert_eq!(cases[0].brute, p("-x*y"));
        assert_eq!(cases[1].brute, p("-x^2*y - x*y^2"));
        assert!(cases.iter().all(|c| c.pass));
    }

    #[test]
    fn preset_series_values() {
        assert_eq!(ints(&SeriesPreset::FirstColumnEgf.expand(3)), [1, 1, 3, 11]);
        assert_eq!(ints(&SeriesPreset::SubdiagonalOgf.expand(4)), [1, 5, 11, 19, 29]);
        assert_eq!(ints(&SeriesPreset::DerangementEgf.expand(5)), [1, 0, 1, 2, 9, 44]);
    }

    #[test]
    fn derivative_of_constant() {
        let c = PowerSeries::constant(RatPoly::int(7), 4, Flavor::Ogf);
        assert!(c.derivative().coefficients().iter().all(RatPoly::is_zero));
        let d = PowerSeries::constant(RatPoly::int(7), 0, Flavor::Egf).derivative();
        assert_eq!(d.order(), 0);
        assert!(d.coefficient(0).unwrap().is_zero());
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = PowerSeries::from_scalars(&[0, 1, 3, -2, 5, 1], Flavor::Ogf);
        let back = f.exp().unwrap().log().unwrap();
        assert_eq!(back.truncate(4), f.truncate(4));
        let g = PowerSeries::from_scalars(&[0, 2, 1, 0], Flavor::Egf);
        assert_eq!(g.exp().unwrap().log().unwrap().truncate(2), g.truncate(2));
    }

    #[test]
    fn inverse_and_errors() {
        let f = PowerSeries::from_scalars(&[1, -1, 0, 0], Flavor::Ogf);
        assert_eq!(ints(&f.inverse().unwrap()), [1, 1, 1, 1]);
        let z = PowerSeries::from_scalars(&[0, 1], Flavor::Ogf);
        assert!(matches!(z.inverse(), Err(SeriesError::NotInvertible(_))));
        assert!(matches!(f.exp(), Err(SeriesError::NonzeroConstant(_))));
        let e = PowerSeries::one(3, Flavor::Egf);
        assert_eq!(f.mul(&e), Err(SeriesError::FlavorMismatch));
    }

    #[test]
    fn mismatched_orders_clip() {
        let a = PowerSeries::from_scalars(&[1, 1, 1], Flavor::Ogf);
        let b = PowerSeries::from_scalars(&[1, 2], Flavor::Ogf);
        let s = a.add(&b).unwrap();
        assert_eq!(s.order(), 1);
        assert!(s.clipped);
        assert!(!a.add(&a).unwrap().clipped);
    }

    #[test]
    fn egf_product_is_binomial() {
        // e^x · e^x = e^{2x}: stored coefficients 2^n.
        let e = PowerSeries::exp_linear(&RatPoly::one(), 5, Flavor::Egf);
        assert_eq!(ints(&e.mul(&e).unwrap()), [1, 2, 4, 8, 16, 32]);
        let two = PowerSeries::exp_linear(&RatPoly::one(), 5, Flavor::Egf).compose_scalar(&RatPoly::int(2));
        assert_eq!(e.mul(&e).unwrap(), two);
    }
}
