//! Catalog of signed-enumeration identities over derangements, permutations
//! and signed permutations.
//!
//! Each entry pairs a brute-force left-hand side (a [`weighted_sum`] over a
//! family) with a closed-form right-hand side; [`verify`] compares the two as
//! exact polynomials.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerate::{weighted_sum, EnumError, FamilySpec, WeightSpec};
use crate::poly::{self, index_product, MultiPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("{id} needs a slice parameter j in 1..={max}")]
    MissingSlice { id: IdentityId, max: usize },
    #[error("{id} takes no slice parameter")]
    UnexpectedSlice { id: IdentityId },
    #[error("{id} is not stated for n={n}")]
    BadSize { id: IdentityId, n: usize },
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `Σ_{D_{n,j}} (-1)^cyc x^exc = -x^{n-j}`.
    Kz03,
    /// `Σ_{D_n} (-1)^cyc x^exc = -(x + … + x^{n-1})`.
    CycExc,
    /// `Σ_{D_n} (-1)^inv x^exc = (-1)^{n-1}(x + … + x^{n-1})`.
    InvExc,
    Pz1,
    Pz2,
    Ag1,
    Ag2,
    Ag1Inv,
    Ag2Inv,
    Conj1,
    SpecLambdaMinus1,
    SnExcA,
    Zhao,
    BPlus,
    BMinus,
    BMixed,
    BnExc,
    RlmvASigned,
    BwQ,
    QbnRlm,
}

impl IdentityId {
    /// Registry order; the CLI and test suites iterate this.
    pub const CATALOG: [IdentityId; 20] = [
        IdentityId::Kz03,
        IdentityId::CycExc,
        IdentityId::InvExc,
        IdentityId::Pz1,
        IdentityId::Pz2,
        IdentityId::Ag1,
        IdentityId::Ag2,
        IdentityId::Ag1Inv,
        IdentityId::Ag2Inv,
        IdentityId::Conj1,
        IdentityId::SpecLambdaMinus1,
        IdentityId::SnExcA,
        IdentityId::Zhao,
        IdentityId::BPlus,
        IdentityId::BMinus,
        IdentityId::BMixed,
        IdentityId::BnExc,
        IdentityId::RlmvASigned,
        IdentityId::BwQ,
        IdentityId::QbnRlm,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityId::Kz03 => "KZ03",
            IdentityId::CycExc => "CYC-EXC",
            IdentityId::InvExc => "INV-EXC",
            IdentityId::Pz1 => "PZ1",
            IdentityId::Pz2 => "PZ2",
            IdentityId::Ag1 => "AG1",
            IdentityId::Ag2 => "AG2",
            IdentityId::Ag1Inv => "AG1-INV",
            IdentityId::Ag2Inv => "AG2-INV",
            IdentityId::Conj1 => "CONJ1",
            IdentityId::SpecLambdaMinus1 => "SPEC-LAMBDA-1",
            IdentityId::SnExcA => "SN-EXC-A",
            IdentityId::Zhao => "ZHAO",
            IdentityId::BPlus => "BPLUS",
            IdentityId::BMinus => "BMINUS",
            IdentityId::BMixed => "BMIXED",
            IdentityId::BnExc => "BN-EXC",
            IdentityId::RlmvASigned => "RLMV-A-SIGNED",
            IdentityId::BwQ => "BW-Q",
            IdentityId::QbnRlm => "QBN-RLM",
        }
    }

    /// Takes a slice parameter `j ∈ [n-1]`.
    pub fn is_sliced(self) -> bool {
        matches!(self, IdentityId::Kz03 | IdentityId::Pz1 | IdentityId::Pz2 | IdentityId::Conj1)
    }

    /// Sums over signed permutations.
    pub fn is_type_b(self) -> bool {
        matches!(
            self,
            IdentityId::Zhao
                | IdentityId::BPlus
                | IdentityId::BMinus
                | IdentityId::BMixed
                | IdentityId::BnExc
                | IdentityId::QbnRlm
        )
    }

    pub fn min_n(self) -> usize {
        if self.is_type_b() {
            1
        } else {
            2
        }
    }

    /// Family and weight of the brute-force side.
    fn lhs_spec(self, n: usize, j: usize) -> (FamilySpec, WeightSpec) {
        use IdentityId::*;
        match self {
            Kz03 => (FamilySpec::Dnj { n, j }, WeightSpec::cyc_exc()),
            CycExc => (FamilySpec::Dn { n }, WeightSpec::cyc_exc()),
            InvExc => (FamilySpec::Dn { n }, WeightSpec::inv_exc()),
            Pz1 => (FamilySpec::Dnj { n, j }, WeightSpec::cyc_rlmv_excv()),
            Pz2 => (FamilySpec::DnjTilde { n, j }, WeightSpec::cyc_rlmi_exci()),
            Ag1 => (FamilySpec::Dn { n }, WeightSpec::cyc_rlmv_excv()),
            Ag2 => (FamilySpec::Dn { n }, WeightSpec::cyc_rlmi_exci()),
            Ag1Inv => (FamilySpec::Dn { n }, WeightSpec::inv_rlmv_excv()),
            Ag2Inv => (FamilySpec::Dn { n }, WeightSpec::inv_rlmi_exci()),
            Conj1 => (FamilySpec::DnjBar { n, j }, WeightSpec::cyc_exci()),
            SpecLambdaMinus1 => (FamilySpec::Dn { n }, WeightSpec::lambda_rlm_exc()),
            SnExcA => (FamilySpec::Sn { n }, WeightSpec::cyc_exci()),
            Zhao | BnExc => (FamilySpec::Bn { n }, WeightSpec::type_b_exc()),
            BPlus => (FamilySpec::BnPlus { n }, WeightSpec::type_b_exc()),
            BMinus => (FamilySpec::BnMinus { n }, WeightSpec::type_b_exc()),
            BMixed => (FamilySpec::BnMixed { n }, WeightSpec::type_b_exc()),
            RlmvASigned => (FamilySpec::Sn { n }, WeightSpec::cyc_rlmv_y()),
            BwQ => (FamilySpec::Sn { n }, WeightSpec::qinv_rlmv_y()),
            QbnRlm => (FamilySpec::Bn { n }, WeightSpec::type_b_rlm()),
        }
    }

    fn check_params(self, n: usize, j: Option<usize>) -> Result<usize, IdentityError> {
        if n < self.min_n() {
            return Err(IdentityError::BadSize { id: self, n });
        }
        match (self.is_sliced(), j) {
            (true, Some(j)) if j >= 1 && j < n => Ok(j),
            (true, _) => Err(IdentityError::MissingSlice { id: self, max: n - 1 }),
            (false, Some(_)) => Err(IdentityError::UnexpectedSlice { id: self }),
            (false, None) => Ok(0),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase();
        if norm == "SPEC-Λ−1" || s.trim() == "SPEC-λ−1" || norm == "SPEC-λ-1" {
            return Ok(IdentityId::SpecLambdaMinus1);
        }
        IdentityId::CATALOG
            .into_iter()
            .find(|id| id.label() == norm)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub n: usize,
    pub j: Option<usize>,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub pass: bool,
}

fn xs(range: impl IntoIterator<Item = u32>) -> MultiPoly {
    MultiPoly::term(index_product(poly::Family::X, range), 1.into())
}

fn ys(range: impl IntoIterator<Item = u32>) -> MultiPoly {
    MultiPoly::term(index_product(poly::Family::Y, range), 1.into())
}

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn sign(k: usize) -> MultiPoly {
    MultiPoly::int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `x + x^2 + … + x^{n-1}`.
fn geometric_tail(n: usize) -> MultiPoly {
    (1..n as u32).map(|k| var(poly::X).pow(k)).sum()
}

/// `∏_{j=1}^{n-1} (x_j - 1)`.
fn shifted_x_product(n: usize) -> MultiPoly {
    (1..n as u32).map(|j| var(Var::x(j)) - MultiPoly::one()).product()
}

/// `Σ_{j=1}^{n-1} x_1⋯x_j y_{j+1}⋯y_n`.
fn staircase_xy(n: usize) -> MultiPoly {
    let n = n as u32;
    (1..n).map(|j| xs(1..=j) * ys(j + 1..=n)).sum()
}

/// `Σ_{j=1}^{n-1} y_1⋯y_j x_{j+1}⋯x_n`.
fn staircase_yx(n: usize) -> MultiPoly {
    let n = n as u32;
    (1..n).map(|j| ys(1..=j) * xs(j + 1..=n)).sum()
}

/// `s^n t^{n(n+1)/2}`.
fn full_sign_size(n: usize) -> MultiPoly {
    var(poly::S).pow(n as u32) * var(poly::T).pow((n * (n + 1) / 2) as u32)
}

/// Closed-form right-hand side.
pub fn rhs(id: IdentityId, n: usize, j: Option<usize>) -> Result<MultiPoly, IdentityError> {
    use IdentityId::*;
    let j = id.check_params(n, j)?;
    let nn = n as u32;
    let jj = j as u32;
    let out = match id {
        Kz03 => -var(poly::X).pow(nn - jj),
        CycExc => -geometric_tail(n),
        InvExc => sign(n - 1) * geometric_tail(n),
        Pz1 => -(xs(1..=jj) * ys(jj + 1..=nn)),
        Pz2 => -(ys(1..=nn - jj) * xs(nn + 1 - jj..=nn)),
        Ag1 => -staircase_xy(n),
        Ag2 => -staircase_yx(n),
        Ag1Inv => sign(n - 1) * staircase_xy(n),
        Ag2Inv => sign(n - 1) * staircase_yx(n),
        Conj1 => -xs(1..=jj),
        SpecLambdaMinus1 => -(1..nn)
            .map(|k| var(poly::X).pow(k) * var(poly::Y).pow(nn - k))
            .sum::<MultiPoly>(),
        SnExcA | BPlus => -shifted_x_product(n),
        Zhao => {
            let xm1 = var(poly::X) - MultiPoly::one();
            if n % 2 == 1 {
                -((var(poly::X) + MultiPoly::one()) * xm1.pow(nn - 1))
            } else {
                xm1.pow(nn)
            }
        }
        BMinus => sign(n) * full_sign_size(n) * var(Var::x(nn)) * shifted_x_product(n),
        BMixed => MultiPoly::zero(),
        BnExc => {
            let inner = MultiPoly::one() + sign(n - 1) * var(Var::x(nn)) * full_sign_size(n);
            -(inner * shifted_x_product(n))
        }
        RlmvASigned => {
            let f: MultiPoly = (1..=nn)
                .map(|i| {
                    if i % 2 == 1 {
                        var(Var::y(i))
                    } else {
                        var(Var::y(i)) - MultiPoly::one()
                    }
                })
                .product();
            sign(n) * f
        }
        BwQ => (1..=nn)
            .map(|i| var(Var::y(i)) + (1..i).map(|k| var(poly::Q).pow(k)).sum::<MultiPoly>())
            .product(),
        QbnRlm => {
            let f: MultiPoly = (1..=nn)
                .map(|i| {
                    if i % 2 == 0 {
                        var(Var::y(i)) - MultiPoly::one()
                    } else {
                        var(Var::y(i)) + var(poly::S) * var(poly::T).pow(i)
                    }
                })
                .product();
            sign(n) * f
        }
    };
    Ok(out)
}

/// Brute-force left-hand side.
pub fn lhs(id: IdentityId, n: usize, j: Option<usize>) -> Result<MultiPoly, IdentityError> {
    let j = id.check_params(n, j)?;
    let (family, weight) = id.lhs_spec(n, j);
    let raw = weighted_sum(&family, &weight)?;
    Ok(match id {
        IdentityId::SpecLambdaMinus1 => raw.subs([(poly::LAMBDA, MultiPoly::int(-1))]),
        IdentityId::Zhao => {
            let mut b: Vec<(Var, MultiPoly)> = (1..=n as u32).map(|i| (Var::x(i), var(poly::X))).collect();
            b.push((poly::S, MultiPoly::one()));
            b.push((poly::T, MultiPoly::one()));
            raw.subs(b)
        }
        _ => raw,
    })
}

pub fn verify(id: IdentityId, n: usize, j: Option<usize>) -> Result<IdentityCase, IdentityError> {
    let lhs = lhs(id, n, j)?;
    let rhs = rhs(id, n, j)?;
    let pass = (&lhs - &rhs).is_zero();
    Ok(IdentityCase { id, n, j, lhs, rhs, pass })
}

/// Every `(id, n, j)` in catalog order: type-A identities for
/// `2 <= n <= max_n_a`, type-B identities for `1 <= n <= max_n_b`, all `j`.
pub fn catalog_cases(max_n_a: usize, max_n_b: usize) -> Vec<(IdentityId, usize, Option<usize>)> {
    let mut out = Vec::new();
    for id in IdentityId::CATALOG {
        let max = if id.is_type_b() { max_n_b } else { max_n_a };
        for n in id.min_n()..=max {
            if id.is_sliced() {
                out.extend((1..n).map(|j| (id, n, Some(j))));
            } else {
                out.push((id, n, None));
            }
        }
    }
    out
}

pub fn verify_all(max_n_a: usize, max_n_b: usize) -> Result<Vec<IdentityCase>, IdentityError> {
    catalog_cases(max_n_a, max_n_b)
        .into_iter()
        .map(|(id, n, j)| verify(id, n, j))
        .collect()
}
