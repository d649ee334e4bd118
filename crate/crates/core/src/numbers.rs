//! Derangement numbers, the right-to-left-minimum triangle `d_{n,k}` and
//! the recurrences and generating functions relating them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{weighted_sum, Factor, FamilySpec, SignFactor, StatSet, WeightSpec};
use crate::poly::{self, Monomial, MultiPoly, RatPoly};
use crate::series::{jf_moments, JFraction, PowerSeries, SeriesPreset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumbersError {
    #[error("d_{{{n},{k}}} is {enumerated} by enumeration but {fraction} from the continued fraction")]
    Mismatch { n: usize, k: usize, enumerated: BigInt, fraction: BigInt },
}

/// `d_n = (n-1)(d_{n-1} + d_{n-2})`, `d_0 = 1`, `d_1 = 0` (OEIS A000166).
pub fn derangement_numbers(max_n: usize) -> Vec<BigInt> {
    let mut d = vec![BigInt::from(1), BigInt::zero()];
    for n in 2..=max_n {
        let next = BigInt::from(n - 1) * (&d[n - 1] + &d[n - 2]);
        d.push(next);
    }
    d.truncate(max_n + 1);
    d
}

pub fn derangement_d(n: usize) -> BigInt {
    derangement_numbers(n).pop().expect("d_0 exists")
}

/// `d̄_n = d_{n-1} + d_{n-2}` for `n >= 2` (OEIS A000255, shifted).
pub fn dbar(n: usize) -> BigInt {
    assert!(n >= 2, "d̄_n starts at n = 2");
    let d = derangement_numbers(n);
    &d[n - 1] + &d[n - 2]
}

/// `d_{n,n-2} = (n-3) + (n-2)²` for `n >= 3` (OEIS A028387, shifted).
pub fn d_sub2(n: usize) -> BigInt {
    assert!(n >= 3, "d_{{n,n-2}} starts at n = 3");
    BigInt::from(n - 3) + BigInt::from((n - 2) * (n - 2))
}

/// `d_{n,k}` for `0 <= n <= max_n`; row `n` stores `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlmTable {
    pub max_n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl RlmTable {
    fn from_polys(polys: &[MultiPoly]) -> Self {
        let rows = polys
            .iter()
            .enumerate()
            .map(|(n, p)| {
                (0..=n as u32)
                    .map(|k| p.coeff(&Monomial::from_pairs([(poly::X, k)])))
                    .collect()
            })
            .collect();
        RlmTable { max_n: polys.len() - 1, rows }
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_default()
    }

    /// `d_{n,1}, …, d_{n,n-1}`, the printed part of row `n >= 2`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        let r = &self.rows[n];
        if n < 2 {
            &r[..0]
        } else {
            &r[1..n]
        }
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    /// Rows `2..=max_n` as `n,d_{n,1},…` under a header `n,1,…,max_n-1`,
    /// short rows padded with empty fields.
    pub fn to_csv(&self) -> String {
        let width = self.max_n.saturating_sub(1);
        let mut out = String::from("n");
        for k in 1..=width {
            write!(out, ",{k}").unwrap();
        }
        out.push('\n');
        for n in 2..=self.max_n {
            write!(out, "{n}").unwrap();
            let row = self.row(n);
            for k in 0..width {
                out.push(',');
                if let Some(v) = row.get(k) {
                    write!(out, "{v}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns for terminals.
    pub fn to_text(&self) -> String {
        let width = self.max_n.saturating_sub(1);
        let cell = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut out = format!("{:>3} |", "n\\k");
        for k in 1..=width {
            write!(out, " {k:>cell$}").unwrap();
        }
        out.push('\n');
        out.push_str(&"-".repeat(out.len() - 1));
        out.push('\n');
        for n in 2..=self.max_n {
            write!(out, "{n:>3} |").unwrap();
            for v in self.row(n) {
                write!(out, " {:>cell$}", v.to_string()).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// `x^rlm` summed over `D_n`.
fn rlm_weight() -> WeightSpec {
    WeightSpec::new(SignFactor::None, vec![Factor::Counted(StatSet::Rlmi, poly::X)])
}

pub fn rlm_table_enumerated(max_n: usize) -> RlmTable {
    let polys: Vec<MultiPoly> = (0..=max_n)
        .map(|n| weighted_sum(&FamilySpec::Dn { n }, &rlm_weight()).expect("plain weight"))
        .collect();
    RlmTable::from_polys(&polys)
}

pub fn rlm_table_fraction(max_n: usize) -> RlmTable {
    RlmTable::from_polys(&jf_moments(&JFraction::dnx(), max_n))
}

/// The triangle, computed by enumeration and by continued fraction, which
/// must agree entry by entry.
pub fn rlm_table(max_n: usize) -> Result<RlmTable, NumbersError> {
    let a = rlm_table_enumerated(max_n);
    let b = rlm_table_fraction(max_n);
    for n in 0..=max_n {
        for k in 0..=n {
            let (x, y) = (a.get(n, k), b.get(n, k));
            if x != y {
                return Err(NumbersError::Mismatch { n, k, enumerated: x, fraction: y });
            }
        }
    }
    Ok(a)
}

/// One asserted relation at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub n: usize,
    pub pass: bool,
}

fn check(out: &mut Vec<RelationCheck>, name: &'static str, n: usize, pass: bool) {
    out.push(RelationCheck { name, n, pass });
}

fn integer_coeffs(s: &PowerSeries) -> Vec<BigInt> {
    s.integer_values().expect("integer series")
}

/// Every recurrence, closed form and generating function of the numbers
/// layer, for indices up to `max_n` (at least 3).
pub fn number_checks(max_n: usize) -> Vec<RelationCheck> {
    assert!(max_n >= 3, "the subdiagonal starts at n = 3");
    let mut out = Vec::new();
    let d = derangement_numbers(max_n);
    let table = rlm_table_enumerated(max_n);
    let column_one = |n: usize| table.get(n, 1);

    for (n, dn) in d.iter().enumerate() {
        let count = FamilySpec::Dn { n }.count().expect("valid family");
        check(&mut out, "d_n recurrence matches |D_n|", n, BigInt::from(count) == *dn);
        check(&mut out, "row sum equals d_n", n, table.row_sum(n) == *dn);
    }
    for (n, dn) in d.iter().enumerate().skip(2) {
        let ends_in_one = FamilySpec::Dnj { n, j: 1 }.count().expect("valid family");
        let bar = dbar(n);
        check(&mut out, "dbar_n = d_{n-1} + d_{n-2} = d_{n,1}", n, bar == column_one(n));
        check(&mut out, "dbar_n counts sigma(n) = 1", n, BigInt::from(ends_in_one) == bar);
        check(&mut out, "d_n = (n-1) dbar_n", n, *dn == BigInt::from(n - 1) * &bar);
        check(&mut out, "d_{n,n-1} = 1", n, table.get(n, n - 1) == BigInt::from(1));
    }
    for n in 3..=max_n {
        let rhs = if n == 3 {
            dbar(2)
        } else {
            BigInt::from(n - 2) * dbar(n - 1) + BigInt::from(n - 3) * dbar(n - 2)
        };
        check(&mut out, "dbar_n = (n-2) dbar_{n-1} + (n-3) dbar_{n-2}", n, dbar(n) == rhs);
        check(&mut out, "d_{n,n-2} = (n-3) + (n-2)^2", n, d_sub2(n) == table.get(n, n - 2));
    }
    for n in 2..=max_n.saturating_sub(2) {
        let pass = table.get(n + 2, n) == table.get(n + 1, n - 1) + BigInt::from(2 * n);
        check(&mut out, "d_{n+2,n} = d_{n+1,n-1} + 2n", n, pass);
    }

    let sub = integer_coeffs(&SeriesPreset::SubdiagonalOgf.expand(max_n - 3));
    for (m, v) in sub.iter().enumerate() {
        check(&mut out, "OGF of d_{n,n-2}", m + 3, *v == table.get(m + 3, m + 1));
    }
    let first = integer_coeffs(&SeriesPreset::FirstColumnEgf.expand(max_n - 2));
    let dn1 = jf_moments(&JFraction::dn1(), max_n - 2);
    for (m, v) in first.iter().enumerate() {
        check(&mut out, "EGF of d_{n+2,1}", m, *v == column_one(m + 2));
        check(&mut out, "J-fraction moment of d_{n+2,1}", m, dn1[m] == MultiPoly::constant(column_one(m + 2)));
    }
    let full = SeriesPreset::DerangementEgf.expand(max_n);
    for (n, v) in integer_coeffs(&full).iter().enumerate() {
        check(&mut out, "EGF of d_n", n, *v == d[n]);
    }
    let via_derivative = full
        .derivative()
        .add(&full)
        .expect("same flavor");
    for (m, v) in integer_coeffs(&via_derivative).iter().enumerate().take(max_n - 1) {
        check(&mut out, "(e^-x/(1-x))' + e^-x/(1-x) gives dbar_{n+2}", m, *v == dbar(m + 2));
    }
    out
}

/// `Σ_k d_{n,k} x^k` as a rational polynomial, for series cross-checks.
pub fn row_polynomial(table: &RlmTable, n: usize) -> RatPoly {
    let mut p = RatPoly::zero();
    for k in 0..=n {
        let c = table.get(n, k);
        if !c.is_zero() {
            p.add_term(Monomial::from_pairs([(poly::X, k as u32)]), c.into());
        }
    }
    p
}

/// Column `k` of the triangle for `n` in `2..=max_n`.
pub fn column(table: &RlmTable, k: usize) -> BTreeMap<usize, BigInt> {
    (2..=table.max_n).filter(|&n| k < n).map(|n| (n, table.get(n, k))).collect()
}
