//! Monic orthogonal polynomial sequences from three-term recurrences, with
//! the derangement moment functional `Xⁿ ↦ D_n(a)`.
//!
//! Polynomials live in `MultiPoly` in the reserved variable `X`
//! ([`poly::ORTHO`]) with coefficients in the parameter `a`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{self, MultiPoly};
use crate::series::{derangement_polynomial, jf_moments, JFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error("polynomial of degree {degree} needs moments up to {degree}, only {available} known")]
    InsufficientMoments { degree: u32, available: usize },
    #[error("moment {n} differs between enumeration ({brute}) and continued fraction ({fraction})")]
    MomentMismatch { n: usize, brute: String, fraction: String },
}

/// Largest `n` for which moments are recomputed by brute force.
pub const BRUTE_FORCE_LIMIT: usize = 8;

type Coef = Box<dyn Fn(usize) -> MultiPoly + Send + Sync>;

/// `P_{n+1} = (X - b_n) P_n - λ_n P_{n-1}` from seeds `P_0`, `P_1`.
pub struct ThreeTermSeq {
    b: Coef,
    lam: Coef,
    p0: MultiPoly,
    p1: MultiPoly,
}

impl fmt::Debug for ThreeTermSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ThreeTermSeq")
            .field("p0", &self.p0.to_string())
            .field("p1", &self.p1.to_string())
            .finish_non_exhaustive()
    }
}

fn x() -> MultiPoly {
    MultiPoly::var(poly::ORTHO)
}

fn a() -> MultiPoly {
    MultiPoly::var(poly::A)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

impl ThreeTermSeq {
    pub fn new<B, L>(b: B, lam: L, p0: MultiPoly, p1: MultiPoly) -> Self
    where
        B: Fn(usize) -> MultiPoly + Send + Sync + 'static,
        L: Fn(usize) -> MultiPoly + Send + Sync + 'static,
    {
        ThreeTermSeq { b: Box::new(b), lam: Box::new(lam), p0, p1 }
    }

    /// Standard seeds `P_0 = 1`, `P_1 = X - b_0`.
    pub fn monic<B, L>(b: B, lam: L) -> Self
    where
        B: Fn(usize) -> MultiPoly + Send + Sync + 'static,
        L: Fn(usize) -> MultiPoly + Send + Sync + 'static,
    {
        let p1 = x() - b(0);
        Self::new(b, lam, MultiPoly::one(), p1)
    }

    pub fn b(&self, n: usize) -> MultiPoly {
        (self.b)(n)
    }

    pub fn lam(&self, n: usize) -> MultiPoly {
        (self.lam)(n)
    }

    /// `P_0, …, P_N`.
    pub fn terms(&self, order: usize) -> Vec<MultiPoly> {
        let mut out = vec![self.p0.clone()];
        if order >= 1 {
            out.push(self.p1.clone());
        }
        for n in 1..order {
            let next = (x() - self.b(n)) * &out[n] - self.lam(n) * &out[n - 1];
            out.push(next);
        }
        out
    }

    pub fn term(&self, n: usize) -> MultiPoly {
        self.terms(n).pop().expect("at least P_0")
    }
}

/// Shares `b` and `λ` between derived sequences.
struct Shared(std::sync::Arc<ThreeTermSeq>);

impl Shared {
    fn b(&self) -> impl Fn(usize) -> MultiPoly + Send + Sync + 'static {
        let s = self.0.clone();
        move |n| s.b(n)
    }

    fn lam(&self) -> impl Fn(usize) -> MultiPoly + Send + Sync + 'static {
        let s = self.0.clone();
        move |n| s.lam(n)
    }
}

/// Same recurrence with `P*_1 = P_1 - c`.
pub fn chihara_star(seq: ThreeTermSeq, c: MultiPoly) -> (ThreeTermSeq, std::sync::Arc<ThreeTermSeq>) {
    let p0 = seq.p0.clone();
    let p1 = &seq.p1 - &c;
    let shared = Shared(std::sync::Arc::new(seq));
    (ThreeTermSeq::new(shared.b(), shared.lam(), p0, p1), shared.0)
}

/// `b_n ↦ b_{n+1}`, `λ_n ↦ λ_{n+1}`, monic seeds.
pub fn associated(seq: std::sync::Arc<ThreeTermSeq>) -> ThreeTermSeq {
    let (s1, s2) = (seq.clone(), seq);
    ThreeTermSeq::monic(move |n| s1.b(n + 1), move |n| s2.lam(n + 1))
}

/// `P*_n = P_n - c Q_{n-1}` for `1 <= n <= order`, with `Q` the associated
/// sequence of `P`.
pub fn check_chihara(seq: ThreeTermSeq, c: MultiPoly, order: usize) -> bool {
    let (star, base) = chihara_star(seq, c.clone());
    let p = base.terms(order);
    let q = associated(base).terms(order);
    let s = star.terms(order);
    (1..=order).all(|n| s[n] == &p[n] - &c * &q[n - 1])
}

/// Monic Laguerre recurrence `b_n = α + 2n + 2c + 1`, `λ_n = (n+c)(n+c+α)`;
/// `c = 0` gives the ordinary monic Laguerre polynomials.
pub fn laguerre_seq(alpha: MultiPoly, c: i64) -> ThreeTermSeq {
    let alpha2 = alpha.clone();
    ThreeTermSeq::monic(
        move |n| &alpha + int(2 * n as i64 + 2 * c + 1),
        move |n| {
            let m = n as i64 + c;
            int(m) * (&alpha2 + int(m))
        },
    )
}

pub fn laguerre(n: usize, alpha: &MultiPoly) -> MultiPoly {
    laguerre_seq(alpha.clone(), 0).term(n)
}

pub fn assoc_laguerre(n: usize, alpha: &MultiPoly, c: i64) -> MultiPoly {
    laguerre_seq(alpha.clone(), c).term(n)
}

/// `X ↦ X + 1`.
pub fn shift_x(p: &MultiPoly) -> MultiPoly {
    p.subs([(poly::ORTHO, x() + MultiPoly::one())])
}

/// `(X - (a + 2n - 1)) P*_n - n(n + a - 1) P*_{n-1}` from `P*_0 = 1`, `P*_1 = X`.
pub fn corecursive_seq() -> ThreeTermSeq {
    ThreeTermSeq::new(
        |n| a() + int(2 * n as i64 - 1),
        |n| int(n as i64) * (a() + int(n as i64 - 1)),
        MultiPoly::one(),
        x(),
    )
}

/// `L_n^{(a-1)}(X+1) + (a-1) L_{n-1}^{(a-1)}(X+1; 1)`, with the second term
/// absent for `n = 0`.
pub fn corecursive_p(n: usize) -> MultiPoly {
    let alpha = a() - MultiPoly::one();
    let main = shift_x(&laguerre(n, &alpha));
    if n == 0 {
        return main;
    }
    main + (&alpha) * shift_x(&assoc_laguerre(n - 1, &alpha, 1))
}

/// Linear functional `Xᵏ ↦ μ_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentFunctional {
    pub moments: Vec<MultiPoly>,
}

impl MomentFunctional {
    pub fn new(moments: Vec<MultiPoly>) -> Self {
        assert!(moments.first().is_some_and(|m| *m == MultiPoly::one()), "μ_0 = 1");
        MomentFunctional { moments }
    }

    /// `μ_n = D_n(a)` for `n <= order` from the `dnx` continued fraction at
    /// `x = a`, each cross-checked against enumeration for
    /// `n <= BRUTE_FORCE_LIMIT`.
    pub fn derangements(order: usize) -> Result<Self, OrthoError> {
        Self::derangements_checked_to(order, BRUTE_FORCE_LIMIT)
    }

    pub fn derangements_checked_to(order: usize, brute_limit: usize) -> Result<Self, OrthoError> {
        let fraction = jf_moments(&JFraction::dnx(), order);
        let mut moments = Vec::with_capacity(order + 1);
        for (n, f) in fraction.into_iter().enumerate() {
            let f = f.subs([(poly::X, a())]);
            if n <= brute_limit {
                let brute = derangement_polynomial(n).subs([
                    (poly::LAMBDA, MultiPoly::one()),
                    (poly::Y, MultiPoly::one()),
                    (poly::X, a()),
                ]);
                if brute != f {
                    return Err(OrthoError::MomentMismatch { n, brute: brute.to_string(), fraction: f.to_string() });
                }
            }
            moments.push(f);
        }
        Ok(Self::new(moments))
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, OrthoError> {
        let degree = p.degree_in(poly::ORTHO).unwrap_or(0);
        if degree as usize >= self.moments.len() {
            return Err(OrthoError::InsufficientMoments { degree, available: self.moments.len() });
        }
        Ok((0..=degree).map(|k| p.coeff_of_power(poly::ORTHO, k) * &self.moments[k as usize]).sum())
    }

    /// Moments at a rational parameter value.
    pub fn at(&self, value: i64) -> Vec<BigInt> {
        self.moments
            .iter()
            .map(|m| {
                m.subs([(poly::A, MultiPoly::int(value))])
                    .as_constant()
                    .expect("moments are polynomials in a")
            })
            .collect()
    }
}

/// `L[Xᵏ P_n]` for `1 <= n <= N`, `0 <= k < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub polynomials: Vec<MultiPoly>,
    /// `matrix[n-1][k] = L[Xᵏ P_n]`.
    pub matrix: Vec<Vec<MultiPoly>>,
    /// Both constructions of `P_n` agree.
    pub constructions_agree: bool,
    pub pass: bool,
}

pub fn orthogonality_check(order: usize) -> Result<OrthogonalityReport, OrthoError> {
    let functional = MomentFunctional::derangements((2 * order).saturating_sub(1))?;
    let polynomials = corecursive_seq().terms(order);
    let constructions_agree = polynomials.iter().enumerate().all(|(n, p)| *p == corecursive_p(n));
    let mut matrix = Vec::new();
    for (n, p) in polynomials.iter().enumerate().skip(1) {
        let row = (0..n)
            .map(|k| functional.apply(&(x().pow(k as u32) * p)))
            .collect::<Result<Vec<_>, _>>()?;
        matrix.push(row);
    }
    let pass = constructions_agree && matrix.iter().flatten().all(MultiPoly::is_zero);
    Ok(OrthogonalityReport { polynomials, matrix, constructions_agree, pass })
}

/// `det(μ_{i+j})_{0 <= i,j <= m}` by fraction-free elimination.
pub fn hankel_determinant(moments: &[BigInt], m: usize) -> BigInt {
    assert!(moments.len() > 2 * m, "need μ_0..μ_{{2m}}");
    let mut a: Vec<Vec<BigInt>> = (0..=m).map(|i| (0..=m).map(|j| moments[i + j].clone()).collect()).collect();
    bareiss(&mut a)
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let size = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[size - 1][size - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn laguerre_low_degrees() {
        let alpha = MultiPoly::var(poly::A);
        assert_eq!(laguerre(0, &alpha), MultiPoly::one());
        assert_eq!(laguerre(1, &alpha), p("X - a - 1"));
        assert_eq!(assoc_laguerre(1, &alpha, 1), p("X - a - 3"));
        assert_eq!(assoc_laguerre(2, &alpha, 0), laguerre(2, &alpha));
    }

    #[test]
    fn corecursive_second_polynomial() {
        assert_eq!(corecursive_p(1), p("X"));
        assert_eq!(corecursive_p(2), p("X^2 - a*X - X - a"));
        assert_eq!(corecursive_seq().term(2), corecursive_p(2));
        assert_eq!(corecursive_seq().term(3), corecursive_p(3));
    }

    #[test]
    fn chihara_with_zero_shift_is_identity() {
        let (star, base) = chihara_star(laguerre_seq(MultiPoly::var(poly::A), 0), MultiPoly::zero());
        assert_eq!(star.terms(5), base.terms(5));
    }

    #[test]
    fn displayed_instance() {
        let l = MomentFunctional::derangements(3).unwrap();
        assert_eq!(l.moments[1], MultiPoly::zero());
        assert_eq!(l.moments[2], p("a"));
        assert_eq!(l.moments[3], p("a^2 + a"));
        assert!(l.apply(&corecursive_p(2)).unwrap().is_zero());
        assert!(l.apply(&(p("X") * corecursive_p(2))).unwrap().is_zero());
        assert_eq!(l.apply(&MultiPoly::one()).unwrap(), MultiPoly::one());
        assert!(matches!(
            l.apply(&p("X^4")),
            Err(OrthoError::InsufficientMoments { degree: 4, available: 4 })
        ));
    }

    #[test]
    fn hankel_at_one() {
        let l = MomentFunctional::derangements(6).unwrap();
        let mu = l.at(1);
        let dets: Vec<BigInt> = (0..=3).map(|m| hankel_determinant(&mu, m)).collect();
        // ∏ λ_k^{m+1-k} with λ_k = k² at a = 1.
        assert_eq!(dets, [1, 1, 4, 144].map(BigInt::from));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let mut m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bareiss(&mut m), BigInt::from(-1));
    }
}
