//! Signed permutations (elements of the hyperoctahedral group `B_n`) in
//! window notation, with the type-B excedance, right-to-left minimum and
//! sign statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignedPermError {
    #[error("absolute values of {0:?} are not a permutation of 1..=n")]
    NotBijective(Vec<i32>),
    #[error("inserted letter {a} must have absolute value {n}")]
    BadLetter { a: i32, n: usize },
    #[error("insert position {k} outside 1..={n}")]
    BadPosition { k: usize, n: usize },
    #[error("transposition ({a},{b}) is not valid on ±[{n}]")]
    BadTransposition { a: i32, b: i32, n: usize },
    #[error("cannot parse signed permutation from {0:?}")]
    Parse(String),
}

/// Sign pattern of the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    AllPositive,
    AllNegative,
    Mixed,
}

/// `σ(1)…σ(n)`; `σ(-i) = -σ(i)` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBStats {
    pub exc_b: BTreeSet<u32>,
    pub anexc_b: BTreeSet<u32>,
    /// Right-to-left minimum *values*.
    pub rlm_b: BTreeSet<u32>,
    pub neg: usize,
    pub nsum: u32,
    pub cyc_b: usize,
    pub class: SignClass,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self, SignedPermError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(SignedPermError::NotBijective(window));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(window.clone()).is_ok());
        SignedPermutation { window }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        SignedPermutation {
            window: p.word().iter().map(|&v| v as i32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `σ(i)` for `i ∈ ±[n]`.
    pub fn at(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// The underlying permutation `|σ|` of `[n]`.
    pub fn abs_perm(&self) -> Permutation {
        Permutation::from_word_unchecked(self.window.iter().map(|v| v.unsigned_abs()).collect())
    }

    /// `Some(σ)` as an ordinary permutation when every entry is positive.
    pub fn to_permutation(&self) -> Option<Permutation> {
        (self.class() == SignClass::AllPositive).then(|| self.abs_perm())
    }

    pub fn class(&self) -> SignClass {
        let neg = self.window.iter().filter(|&&v| v < 0).count();
        if neg == 0 {
            SignClass::AllPositive
        } else if neg == self.len() {
            SignClass::AllNegative
        } else {
            SignClass::Mixed
        }
    }

    /// `{σ(i) : i ∈ [n]}`.
    pub fn image(&self) -> BTreeSet<i32> {
        self.window.iter().copied().collect()
    }

    pub fn negate_all(&self) -> SignedPermutation {
        SignedPermutation {
            window: self.window.iter().map(|&v| -v).collect(),
        }
    }

    /// `(a,b) ∘ σ` where the transposition also exchanges `-a` and `-b`.
    pub fn apply_transposition(&self, a: i32, b: i32) -> Result<SignedPermutation, SignedPermError> {
        let n = self.len();
        let ok = |v: i32| v != 0 && v.unsigned_abs() as usize <= n;
        if !ok(a) || !ok(b) || a.unsigned_abs() == b.unsigned_abs() {
            return Err(SignedPermError::BadTransposition { a, b, n });
        }
        let window = self
            .window
            .iter()
            .map(|&v| match v {
                v if v == a => b,
                v if v == b => a,
                v if v == -a => -b,
                v if v == -b => -a,
                v => v,
            })
            .collect();
        Ok(SignedPermutation { window })
    }

    /// Exchanges the window entries at 1-based positions `p` and `q`.
    pub fn swap_positions(&self, p: usize, q: usize) -> SignedPermutation {
        let mut window = self.window.clone();
        window.swap(p - 1, q - 1);
        SignedPermutation { window }
    }

    /// The inserting operation: `σ'(k) = a`, `σ'(n) = τ(k)`, `σ'(i) = τ(i)`
    /// otherwise. With `k = n` this appends the one-cycle `(a)`.
    pub fn insert(a: i32, k: usize, tau: &SignedPermutation) -> Result<SignedPermutation, SignedPermError> {
        let n = tau.len() + 1;
        if a.unsigned_abs() as usize != n {
            return Err(SignedPermError::BadLetter { a, n });
        }
        if k == 0 || k > n {
            return Err(SignedPermError::BadPosition { k, n });
        }
        let mut window = tau.window.clone();
        if k == n {
            window.push(a);
        } else {
            let displaced = window[k - 1];
            window[k - 1] = a;
            window.push(displaced);
        }
        Ok(SignedPermutation { window })
    }

    /// Deletes the window entry at position `p` whose absolute value is `n`,
    /// giving an element of `B_{n-1}`. Returns `None` if `|σ(p)| != n`.
    pub fn remove_max_at(&self, p: usize) -> Option<SignedPermutation> {
        if self.window[p - 1].unsigned_abs() as usize != self.len() {
            return None;
        }
        let mut window = self.window.clone();
        window.remove(p - 1);
        Some(SignedPermutation { window })
    }

    /// Signed cycle notation: cycles of `|σ|`, each element `|σ(i)|` written
    /// as `σ(i)`. Each cycle starts at its least absolute value.
    pub fn signed_cycles(&self) -> Vec<Vec<i32>> {
        let abs = self.abs_perm();
        let inv = abs.inverse();
        abs.cycles()
            .cycles()
            .iter()
            .map(|c| c.iter().map(|&e| self.window[inv.at(e) as usize - 1]).collect())
            .collect()
    }

    pub fn stats_b(&self) -> TypeBStats {
        let n = self.len();
        let mut exc_b = BTreeSet::new();
        let mut anexc_b = BTreeSet::new();
        for &v in &self.window {
            let j = v.unsigned_abs() as i32;
            let target = self.at(j);
            if target == -j || target > v {
                exc_b.insert(j as u32);
            }
            if target == j || target < v {
                anexc_b.insert(j as u32);
            }
        }
        let mut rlm_b = BTreeSet::new();
        let mut min_abs_right = u32::MAX;
        for &v in self.window.iter().rev() {
            if v > 0 && (v as u32) < min_abs_right {
                rlm_b.insert(v as u32);
            }
            min_abs_right = min_abs_right.min(v.unsigned_abs());
        }
        let negs: Vec<u32> = self
            .window
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs())
            .collect();
        debug_assert_eq!(exc_b.len() + anexc_b.len(), n);
        TypeBStats {
            exc_b,
            anexc_b,
            rlm_b,
            neg: negs.len(),
            nsum: negs.iter().sum(),
            cyc_b: self.abs_perm().cycle_count(),
            class: self.class(),
        }
    }

    /// Human-readable window with overbars for negative entries.
    pub fn to_bar_string(&self) -> String {
        let sep = if self.len() <= 9 { "" } else { "," };
        self.window
            .iter()
            .map(|&v| bar(v))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn cycles_to_bar_string(&self) -> String {
        self.signed_cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|&v| bar(v)).collect::<Vec<_>>().join(",")))
            .collect()
    }
}

fn bar(v: i32) -> String {
    if v < 0 {
        format!("{}\u{0304}", v.unsigned_abs())
    } else {
        v.to_string()
    }
}

impl fmt::Display for SignedPermutation {
    /// Machine form: `-6,2,4,-3,1,5,8,-7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = SignedPermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation { window: Vec::new() });
        }
        let window: Option<Vec<i32>> = s.split(',').map(|t| t.trim().parse().ok()).collect();
        SignedPermutation::new(window.ok_or_else(|| SignedPermError::Parse(s.to_string()))?)
    }
}
