//! Exhaustive generators for the permutation families that the identities sum
//! over, and a weighted-sum evaluator.
//!
//! All streams are lexicographic in the one-line word (for signed windows the
//! letters are ordered `-n < … < -1 < 1 < … < n`). Sliced families are
//! generated by constrained backtracking rather than by filtering `S_n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::perm::{Permutation, StatProfile};
use crate::poly::{self, Monomial, MultiPoly, Var};
use crate::signed::{SignClass, SignedPermutation, TypeBStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("slice parameter j={j} is invalid for {kind} with n={n}")]
    BadSlice { kind: &'static str, n: usize, j: usize },
    #[error("{kind} requires n >= {min}, got {n}")]
    TooSmall { kind: &'static str, n: usize, min: usize },
    #[error("weight uses {stat} which is not defined on {family}")]
    IncompatibleWeight { stat: &'static str, family: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// Which of the four insertion cases produced an element of `B_n^±`:
/// the inserted letter `±n` and the sign class of the smaller permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InsertCase {
    /// `a = -n`, `τ ∈ B_{n-1}^+`.
    NegOntoPositive,
    /// `a = n`, `τ ∈ B_{n-1}^-`.
    PosOntoNegative,
    /// `a = -n`, `τ ∈ B_{n-1}^±`.
    NegOntoMixed,
    /// `a = n`, `τ ∈ B_{n-1}^±`.
    PosOntoMixed,
}

impl InsertCase {
    pub const ALL: [InsertCase; 4] = [
        InsertCase::NegOntoPositive,
        InsertCase::PosOntoNegative,
        InsertCase::NegOntoMixed,
        InsertCase::PosOntoMixed,
    ];

    pub fn label(self) -> &'static str {
        match self {
            InsertCase::NegOntoPositive => "(1)",
            InsertCase::PosOntoNegative => "(1')",
            InsertCase::NegOntoMixed => "(2)",
            InsertCase::PosOntoMixed => "(2')",
        }
    }
}

/// Splits `σ ∈ B_n` (`n >= 1`) as `insert(a, k, τ)`.
pub fn decompose_insert(sigma: &SignedPermutation) -> (i32, usize, SignedPermutation) {
    let n = sigma.len();
    let w = sigma.window();
    let p = w
        .iter()
        .position(|v| v.unsigned_abs() as usize == n)
        .expect("a window of size n contains ±n")
        + 1;
    let a = w[p - 1];
    let mut tau: Vec<i32> = w[..n - 1].to_vec();
    if p < n {
        tau[p - 1] = w[n - 1];
    }
    (a, p, SignedPermutation::from_window_unchecked(tau))
}

/// The insertion case of `σ ∈ B_n^±`, or `None` when `σ` is not mixed.
pub fn insert_case(sigma: &SignedPermutation) -> Option<InsertCase> {
    if sigma.class() != SignClass::Mixed {
        return None;
    }
    let (a, _, tau) = decompose_insert(sigma);
    Some(match (a < 0, tau.class()) {
        (true, SignClass::AllPositive) => InsertCase::NegOntoPositive,
        (false, SignClass::AllNegative) => InsertCase::PosOntoNegative,
        (true, _) => InsertCase::NegOntoMixed,
        (false, _) => InsertCase::PosOntoMixed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `𝔖_n`.
    Sn { n: usize },
    /// Derangements of `[n]`.
    Dn { n: usize },
    /// Derangements with `σ(n) = j`.
    Dnj { n: usize, j: usize },
    /// Derangements with `σ(n+1-j) = 1`.
    DnjTilde { n: usize, j: usize },
    /// Derangements with `σ(j) = n`.
    DnjBar { n: usize, j: usize },
    /// The distinguished subset of `D_{n,j}` that carries its whole weight.
    Unj { n: usize, j: usize },
    /// `D_{n,j} \ U_{n,j}`, the domain of the sign-reversing involution.
    Enj { n: usize, j: usize },
    Bn { n: usize },
    BnPlus { n: usize },
    BnMinus { n: usize },
    BnMixed { n: usize },
    /// Elements of `B_n^±` built by one insertion case.
    BnInsert { n: usize, case: InsertCase },
    /// `{σ ∈ B_n : |σ(n)| ≠ n and ±n sits at position 2k-1 or 2k}`.
    BnPairBlock { n: usize, k: usize },
}

/// A member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Member {
    A(Permutation),
    B(SignedPermutation),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::A(p) => write!(f, "{p}"),
            Member::B(s) => write!(f, "{s}"),
        }
    }
}

/// Position and letter constraints for backtracking generation.
#[derive(Debug, Clone)]
struct Constraints {
    n: usize,
    letters: Vec<i32>,
    fixed: Vec<Option<i32>>,
    forbidden: Vec<(usize, i32)>,
    derangement: bool,
    reserved: Vec<bool>,
}

impl Constraints {
    fn unsigned(n: usize) -> Self {
        Self::with_letters(n, (1..=n as i32).collect())
    }

    fn signed(n: usize, class: Option<SignClass>) -> Self {
        let letters = match class {
            Some(SignClass::AllPositive) => (1..=n as i32).collect(),
            Some(SignClass::AllNegative) => (1..=n as i32).rev().map(|v| -v).collect(),
            _ => (1..=n as i32)
                .rev()
                .map(|v| -v)
                .chain(1..=n as i32)
                .collect(),
        };
        Self::with_letters(n, letters)
    }

    fn with_letters(n: usize, letters: Vec<i32>) -> Self {
        Constraints {
            n,
            letters,
            fixed: vec![None; n],
            forbidden: Vec::new(),
            derangement: false,
            reserved: vec![false; n + 1],
        }
    }

    fn derangement(mut self) -> Self {
        self.derangement = true;
        self
    }

    fn fix(mut self, pos: usize, letter: i32) -> Self {
        self.fixed[pos - 1] = Some(letter);
        self.reserved[letter.unsigned_abs() as usize] = true;
        self
    }

    fn forbid(mut self, pos: usize, letter: i32) -> Self {
        self.forbidden.push((pos, letter));
        self
    }

    fn allows(&self, pos: usize, letter: i32) -> bool {
        match self.fixed[pos - 1] {
            Some(l) => {
                if l != letter {
                    return false;
                }
            }
            None => {
                if self.reserved[letter.unsigned_abs() as usize] {
                    return false;
                }
            }
        }
        if self.derangement && letter == pos as i32 {
            return false;
        }
        !self.forbidden.contains(&(pos, letter))
    }
}

/// Lexicographic depth-first enumeration of all words satisfying the
/// constraints.
struct Backtrack {
    c: Constraints,
    word: Vec<i32>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl Backtrack {
    fn new(c: Constraints) -> Self {
        let n = c.n;
        Backtrack {
            c,
            word: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![0],
            started: false,
            done: false,
        }
    }

    fn pop(&mut self) {
        let l = self.word.pop().expect("non-empty word");
        self.used[l.unsigned_abs() as usize] = false;
    }
}

impl Iterator for Backtrack {
    type Item = Vec<i32>;

    fn next(&mut self) -> Option<Vec<i32>> {
        if self.done {
            return None;
        }
        let n = self.c.n;
        if !self.started {
            self.started = true;
            if n == 0 {
                self.done = true;
                return Some(Vec::new());
            }
        } else {
            // Resume the search at the last position of the word just emitted.
            self.pop();
        }
        loop {
            let depth = self.word.len();
            let pos = depth + 1;
            let start = self.cursor[depth];
            let found = (start..self.c.letters.len()).find(|&idx| {
                let l = self.c.letters[idx];
                !self.used[l.unsigned_abs() as usize] && self.c.allows(pos, l)
            });
            match found {
                Some(idx) => {
                    let l = self.c.letters[idx];
                    self.cursor[depth] = idx + 1;
                    self.word.push(l);
                    self.used[l.unsigned_abs() as usize] = true;
                    if self.word.len() == n {
                        return Some(self.word.clone());
                    }
                    self.cursor.truncate(depth + 1);
                    self.cursor.push(0);
                }
                None => {
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.cursor.truncate(depth);
                    self.pop();
                }
            }
        }
    }
}

/// `σ ∈ U_{n,j}`: for `j = 1` the single n-cycle `23…n1`; for `j >= 2` the
/// elements of `D_{n,j}` with `σ(2) = 1` and `σ(1) ≠ 2`.
pub fn in_u(sigma: &Permutation, j: usize) -> bool {
    let n = sigma.len();
    if n < 3 || j == 0 || j >= n || !sigma.is_derangement() || sigma.at(n as u32) as usize != j {
        return false;
    }
    if j == 1 {
        sigma
            .word()
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == (k + 1) % n + 1)
    } else {
        sigma.at(2) == 1 && sigma.at(1) != 2
    }
}

/// `σ ∈ E_{n,j} = D_{n,j} \ U_{n,j}`.
pub fn in_e(sigma: &Permutation, j: usize) -> bool {
    let n = sigma.len();
    n >= 3
        && j >= 1
        && j < n
        && sigma.is_derangement()
        && sigma.at(n as u32) as usize == j
        && !in_u(sigma, j)
}

impl FamilySpec {
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Sn { n }
            | FamilySpec::Dn { n }
            | FamilySpec::Dnj { n, .. }
            | FamilySpec::DnjTilde { n, .. }
            | FamilySpec::DnjBar { n, .. }
            | FamilySpec::Unj { n, .. }
            | FamilySpec::Enj { n, .. }
            | FamilySpec::Bn { n }
            | FamilySpec::BnPlus { n }
            | FamilySpec::BnMinus { n }
            | FamilySpec::BnMixed { n }
            | FamilySpec::BnInsert { n, .. }
            | FamilySpec::BnPairBlock { n, .. } => n,
        }
    }

    /// Label used on the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Sn { .. } => "Sn",
            FamilySpec::Dn { .. } => "Dn",
            FamilySpec::Dnj { .. } => "Dnj",
            FamilySpec::DnjTilde { .. } => "Dnj_tilde",
            FamilySpec::DnjBar { .. } => "Dnj_bar",
            FamilySpec::Unj { .. } => "Unj",
            FamilySpec::Enj { .. } => "Enj",
            FamilySpec::Bn { .. } => "Bn",
            FamilySpec::BnPlus { .. } => "Bn_plus",
            FamilySpec::BnMinus { .. } => "Bn_minus",
            FamilySpec::BnMixed { .. } => "Bn_mixed",
            FamilySpec::BnInsert { case, .. } => match case {
                InsertCase::NegOntoPositive => "Cn_1",
                InsertCase::PosOntoNegative => "Cn_1p",
                InsertCase::NegOntoMixed => "Cn_2",
                InsertCase::PosOntoMixed => "Cn_2p",
            },
            FamilySpec::BnPairBlock { .. } => "Cnk",
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(
            self,
            FamilySpec::Bn { .. }
                | FamilySpec::BnPlus { .. }
                | FamilySpec::BnMinus { .. }
                | FamilySpec::BnMixed { .. }
                | FamilySpec::BnInsert { .. }
                | FamilySpec::BnPairBlock { .. }
        )
    }

    /// Builds a family from its command-line label; `j` is the slice (or
    /// block) parameter where one is needed.
    pub fn from_label(kind: &str, n: usize, j: Option<usize>) -> Result<Self, EnumError> {
        let need_j = |j: Option<usize>| {
            j.ok_or(EnumError::BadSlice {
                kind: "sliced family",
                n,
                j: 0,
            })
        };
        let spec = match kind {
            "Sn" => FamilySpec::Sn { n },
            "Dn" => FamilySpec::Dn { n },
            "Dnj" => FamilySpec::Dnj { n, j: need_j(j)? },
            "Dnj_tilde" => FamilySpec::DnjTilde { n, j: need_j(j)? },
            "Dnj_bar" => FamilySpec::DnjBar { n, j: need_j(j)? },
            "Unj" => FamilySpec::Unj { n, j: need_j(j)? },
            "Enj" => FamilySpec::Enj { n, j: need_j(j)? },
            "Bn" => FamilySpec::Bn { n },
            "Bn_plus" => FamilySpec::BnPlus { n },
            "Bn_minus" => FamilySpec::BnMinus { n },
            "Bn_mixed" => FamilySpec::BnMixed { n },
            "Cn_1" => FamilySpec::BnInsert { n, case: InsertCase::NegOntoPositive },
            "Cn_1p" => FamilySpec::BnInsert { n, case: InsertCase::PosOntoNegative },
            "Cn_2" => FamilySpec::BnInsert { n, case: InsertCase::NegOntoMixed },
            "Cn_2p" => FamilySpec::BnInsert { n, case: InsertCase::PosOntoMixed },
            "Cnk" => FamilySpec::BnPairBlock { n, k: need_j(j)? },
            other => return Err(EnumError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let kind = self.kind();
        match *self {
            FamilySpec::Dnj { n, j } | FamilySpec::DnjTilde { n, j } | FamilySpec::DnjBar { n, j } => {
                if n < 2 || j == 0 || j >= n {
                    return Err(EnumError::BadSlice { kind, n, j });
                }
            }
            FamilySpec::Unj { n, j } | FamilySpec::Enj { n, j } => {
                if n < 3 {
                    return Err(EnumError::TooSmall { kind, n, min: 3 });
                }
                if j == 0 || j >= n {
                    return Err(EnumError::BadSlice { kind, n, j });
                }
            }
            FamilySpec::BnInsert { n, .. } => {
                if n < 2 {
                    return Err(EnumError::TooSmall { kind, n, min: 2 });
                }
            }
            FamilySpec::BnPairBlock { n, k }
                if (k == 0 || 2 * k > n - 1) => {
                    return Err(EnumError::BadSlice { kind, n, j: k });
                }
            _ => {}
        }
        Ok(())
    }

    /// Ordinary permutations of a type-A family, in lexicographic order.
    pub fn perms(&self) -> Result<Box<dyn Iterator<Item = Permutation>>, EnumError> {
        self.validate()?;
        let to_perm = |w: Vec<i32>| Permutation::from_word_unchecked(w.into_iter().map(|v| v as u32).collect());
        let it: Box<dyn Iterator<Item = Permutation>> = match *self {
            FamilySpec::Sn { n } => Box::new(Backtrack::new(Constraints::unsigned(n)).map(to_perm)),
            FamilySpec::Dn { n } => Box::new(Backtrack::new(Constraints::unsigned(n).derangement()).map(to_perm)),
            FamilySpec::Dnj { n, j } => Box::new(
                Backtrack::new(Constraints::unsigned(n).derangement().fix(n, j as i32)).map(to_perm),
            ),
            FamilySpec::DnjTilde { n, j } => Box::new(
                Backtrack::new(Constraints::unsigned(n).derangement().fix(n + 1 - j, 1)).map(to_perm),
            ),
            FamilySpec::DnjBar { n, j } => Box::new(
                Backtrack::new(Constraints::unsigned(n).derangement().fix(j, n as i32)).map(to_perm),
            ),
            FamilySpec::Unj { n, j } => {
                if j == 1 {
                    let word: Vec<u32> = (2..=n as u32).chain([1]).collect();
                    Box::new(std::iter::once(Permutation::from_word_unchecked(word)))
                } else {
                    let c = Constraints::unsigned(n)
                        .derangement()
                        .fix(n, j as i32)
                        .fix(2, 1)
                        .forbid(1, 2);
                    Box::new(Backtrack::new(c).map(to_perm))
                }
            }
            FamilySpec::Enj { n, j } => Box::new(
                Backtrack::new(Constraints::unsigned(n).derangement().fix(n, j as i32))
                    .map(to_perm)
                    .filter(move |s| !in_u(s, j)),
            ),
            _ => {
                return Err(EnumError::IncompatibleWeight {
                    stat: "one-line permutation stream",
                    family: self.kind().to_string(),
                })
            }
        };
        Ok(it)
    }

    /// Signed permutations of a type-B family, in lexicographic order.
    pub fn signed_perms(&self) -> Result<Box<dyn Iterator<Item = SignedPermutation>>, EnumError> {
        self.validate()?;
        let to_signed = SignedPermutation::from_window_unchecked;
        let it: Box<dyn Iterator<Item = SignedPermutation>> = match *self {
            FamilySpec::Bn { n } => Box::new(Backtrack::new(Constraints::signed(n, None)).map(to_signed)),
            FamilySpec::BnPlus { n } => Box::new(
                Backtrack::new(Constraints::signed(n, Some(SignClass::AllPositive))).map(to_signed),
            ),
            FamilySpec::BnMinus { n } => Box::new(
                Backtrack::new(Constraints::signed(n, Some(SignClass::AllNegative))).map(to_signed),
            ),
            FamilySpec::BnMixed { n } => Box::new(
                Backtrack::new(Constraints::signed(n, None))
                    .map(to_signed)
                    .filter(|s| s.class() == SignClass::Mixed),
            ),
            FamilySpec::BnInsert { n, case } => Box::new(
                Backtrack::new(Constraints::signed(n, None))
                    .map(to_signed)
                    .filter(move |s| insert_case(s) == Some(case)),
            ),
            FamilySpec::BnPairBlock { n, k } => Box::new(
                Backtrack::new(Constraints::signed(n, None))
                    .map(to_signed)
                    .filter(move |s| {
                        let w = s.window();
                        let is_max = |p: usize| w[p - 1].unsigned_abs() as usize == n;
                        !is_max(n) && (is_max(2 * k - 1) || is_max(2 * k))
                    }),
            ),
            _ => {
                return Err(EnumError::IncompatibleWeight {
                    stat: "signed window stream",
                    family: self.kind().to_string(),
                })
            }
        };
        Ok(it)
    }

    pub fn iterate(&self) -> Result<Box<dyn Iterator<Item = Member>>, EnumError> {
        if self.is_signed() {
            Ok(Box::new(self.signed_perms()?.map(Member::B)))
        } else {
            Ok(Box::new(self.perms()?.map(Member::A)))
        }
    }

    pub fn count(&self) -> Result<usize, EnumError> {
        Ok(self.iterate()?.count())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Dnj { n, j }
            | FamilySpec::DnjTilde { n, j }
            | FamilySpec::DnjBar { n, j }
            | FamilySpec::Unj { n, j }
            | FamilySpec::Enj { n, j } => write!(f, "{}(n={n},j={j})", self.kind()),
            FamilySpec::BnPairBlock { n, k } => write!(f, "{}(n={n},k={k})", self.kind()),
            _ => write!(f, "{}(n={})", self.kind(), self.n()),
        }
    }
}

/// Sign or counting factor of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignFactor {
    None,
    /// `(-1)^cyc`.
    Cycle,
    /// `(-1)^inv`.
    Inversion,
    /// `λ^cyc`.
    LambdaCycle,
    /// `q^inv`.
    QInversion,
}

/// Statistic sets a weight can range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatSet {
    Rlmi,
    Rlmv,
    Exci,
    Excv,
    /// Type-B excedances.
    ExcB,
    /// Type-B right-to-left minimum values.
    RlmB,
}

impl StatSet {
    fn name(self) -> &'static str {
        match self {
            StatSet::Rlmi => "RLMi",
            StatSet::Rlmv => "RLMv",
            StatSet::Exci => "EXCi",
            StatSet::Excv => "EXCv",
            StatSet::ExcB => "EXC_B",
            StatSet::RlmB => "RLM_B",
        }
    }

}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `∏_{i ∈ set} v_i` for the indexed family `v`.
    Indexed(StatSet, poly::Family),
    /// `v^{|set|}`.
    Counted(StatSet, Var),
    /// `s^neg t^nsum`.
    SignSize,
}

/// A monomial-valued weight on permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    pub sign: SignFactor,
    pub factors: Vec<Factor>,
}

impl WeightSpec {
    pub fn new(sign: SignFactor, factors: Vec<Factor>) -> Self {
        WeightSpec { sign, factors }
    }

    /// `(-1)^cyc ∏_{RLMv} x_i ∏_{EXCv} y_i`.
    pub fn cyc_rlmv_excv() -> Self {
        Self::new(
            SignFactor::Cycle,
            vec![Factor::Indexed(StatSet::Rlmv, poly::Family::X), Factor::Indexed(StatSet::Excv, poly::Family::Y)],
        )
    }

    /// `(-1)^inv ∏_{RLMv} x_i ∏_{EXCv} y_i`.
    pub fn inv_rlmv_excv() -> Self {
        Self { sign: SignFactor::Inversion, ..Self::cyc_rlmv_excv() }
    }

    /// `(-1)^cyc ∏_{RLMi} x_i ∏_{EXCi} y_i`.
    pub fn cyc_rlmi_exci() -> Self {
        Self::new(
            SignFactor::Cycle,
            vec![Factor::Indexed(StatSet::Rlmi, poly::Family::X), Factor::Indexed(StatSet::Exci, poly::Family::Y)],
        )
    }

    /// `(-1)^inv ∏_{RLMi} x_i ∏_{EXCi} y_i`.
    pub fn inv_rlmi_exci() -> Self {
        Self { sign: SignFactor::Inversion, ..Self::cyc_rlmi_exci() }
    }

    /// `λ^cyc x^rlm y^exc`.
    pub fn lambda_rlm_exc() -> Self {
        Self::new(
            SignFactor::LambdaCycle,
            vec![Factor::Counted(StatSet::Rlmi, poly::X), Factor::Counted(StatSet::Exci, poly::Y)],
        )
    }

    /// `(-1)^cyc x^exc`.
    pub fn cyc_exc() -> Self {
        Self::new(SignFactor::Cycle, vec![Factor::Counted(StatSet::Exci, poly::X)])
    }

    /// `(-1)^inv x^exc`.
    pub fn inv_exc() -> Self {
        Self::new(SignFactor::Inversion, vec![Factor::Counted(StatSet::Exci, poly::X)])
    }

    /// `(-1)^cyc ∏_{EXCi} x_i`.
    pub fn cyc_exci() -> Self {
        Self::new(SignFactor::Cycle, vec![Factor::Indexed(StatSet::Exci, poly::Family::X)])
    }

    /// `(-1)^cyc ∏_{RLMv} y_i`.
    pub fn cyc_rlmv_y() -> Self {
        Self::new(SignFactor::Cycle, vec![Factor::Indexed(StatSet::Rlmv, poly::Family::Y)])
    }

    /// `q^inv ∏_{RLMv} y_i`.
    pub fn qinv_rlmv_y() -> Self {
        Self::new(SignFactor::QInversion, vec![Factor::Indexed(StatSet::Rlmv, poly::Family::Y)])
    }

    /// `(-1)^cyc s^neg t^nsum ∏_{EXC_B} x_i`.
    pub fn type_b_exc() -> Self {
        Self::new(
            SignFactor::Cycle,
            vec![Factor::SignSize, Factor::Indexed(StatSet::ExcB, poly::Family::X)],
        )
    }

    /// `(-1)^cyc s^neg t^nsum ∏_{RLM_B} y_i`.
    pub fn type_b_rlm() -> Self {
        Self::new(
            SignFactor::Cycle,
            vec![Factor::SignSize, Factor::Indexed(StatSet::RlmB, poly::Family::Y)],
        )
    }

    fn indexed_var(family: poly::Family, i: u32) -> Var {
        match family {
            poly::Family::X => Var::x(i),
            poly::Family::Y => Var::y(i),
            other => Var::plain(other),
        }
    }

    fn sign_part(&self, cyc: usize, inv: usize, m: &mut Monomial) -> i8 {
        match self.sign {
            SignFactor::None => 1,
            SignFactor::Cycle => parity(cyc),
            SignFactor::Inversion => parity(inv),
            SignFactor::LambdaCycle => {
                m.push(poly::LAMBDA, cyc as u32);
                1
            }
            SignFactor::QInversion => {
                m.push(poly::Q, inv as u32);
                1
            }
        }
    }

    /// Weight of an ordinary permutation as `(±1, monomial)`.
    pub fn weigh(&self, sigma: &Permutation) -> Result<(i8, Monomial), EnumError> {
        self.weigh_profile(&sigma.statistics())
    }

    pub fn weigh_profile(&self, st: &StatProfile) -> Result<(i8, Monomial), EnumError> {
        let mut m = Monomial::one();
        let sign = self.sign_part(st.cyc, st.inv, &mut m);
        for f in &self.factors {
            let set = match *f {
                Factor::Indexed(s, _) | Factor::Counted(s, _) => s,
                Factor::SignSize => {
                    return Err(EnumError::IncompatibleWeight {
                        stat: "s^neg t^nsum",
                        family: "ordinary permutations".into(),
                    })
                }
            };
            let values = match set {
                StatSet::Rlmi => &st.rlm_i,
                StatSet::Rlmv => &st.rlm_v,
                StatSet::Exci => &st.exc_i,
                StatSet::Excv => &st.exc_v,
                StatSet::ExcB | StatSet::RlmB => {
                    return Err(EnumError::IncompatibleWeight {
                        stat: set.name(),
                        family: "ordinary permutations".into(),
                    })
                }
            };
            push_factor(f, values, &mut m);
        }
        Ok((sign, m))
    }

    /// Weight of a signed permutation as `(±1, monomial)`.
    pub fn weigh_signed(&self, sigma: &SignedPermutation) -> Result<(i8, Monomial), EnumError> {
        if matches!(self.sign, SignFactor::Inversion | SignFactor::QInversion) {
            return Err(EnumError::IncompatibleWeight {
                stat: "inv",
                family: "signed permutations".into(),
            });
        }
        let st: TypeBStats = sigma.stats_b();
        let mut m = Monomial::one();
        let sign = self.sign_part(st.cyc_b, 0, &mut m);
        for f in &self.factors {
            let set = match *f {
                Factor::SignSize => {
                    m.push(poly::S, st.neg as u32);
                    m.push(poly::T, st.nsum);
                    continue;
                }
                Factor::Indexed(s, _) | Factor::Counted(s, _) => s,
            };
            let values = match set {
                StatSet::ExcB => &st.exc_b,
                StatSet::RlmB => &st.rlm_b,
                _ => {
                    return Err(EnumError::IncompatibleWeight {
                        stat: set.name(),
                        family: "signed permutations".into(),
                    })
                }
            };
            push_factor(f, values, &mut m);
        }
        Ok((sign, m))
    }

    pub fn weight_poly(&self, sigma: &Permutation) -> Result<MultiPoly, EnumError> {
        let (s, m) = self.weigh(sigma)?;
        Ok(MultiPoly::term(m, BigInt::from(s)))
    }

    pub fn weight_poly_signed(&self, sigma: &SignedPermutation) -> Result<MultiPoly, EnumError> {
        let (s, m) = self.weigh_signed(sigma)?;
        Ok(MultiPoly::term(m, BigInt::from(s)))
    }
}

fn push_factor(f: &Factor, values: &BTreeSet<u32>, m: &mut Monomial) {
    match *f {
        Factor::Indexed(_, fam) => {
            for &i in values {
                m.push(WeightSpec::indexed_var(fam, i), 1);
            }
        }
        Factor::Counted(_, v) => m.push(v, values.len() as u32),
        Factor::SignSize => {}
    }
}

fn parity(k: usize) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sums the weight over every member of the family.
pub fn weighted_sum(spec: &FamilySpec, weight: &WeightSpec) -> Result<MultiPoly, EnumError> {
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    if spec.is_signed() {
        for s in spec.signed_perms()? {
            let (sign, m) = weight.weigh_signed(&s)?;
            *acc.entry(m).or_insert(0) += sign as i64;
        }
    } else {
        for p in spec.perms()? {
            let (sign, m) = weight.weigh(&p)?;
            *acc.entry(m).or_insert(0) += sign as i64;
        }
    }
    let mut out = MultiPoly::zero();
    for (m, c) in acc {
        out.add_term(m, BigInt::from(c));
    }
    Ok(out)
}

/// Sums the weight over an explicit list of permutations.
pub fn weighted_sum_of<'a, I>(members: I, weight: &WeightSpec) -> Result<MultiPoly, EnumError>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut out = MultiPoly::zero();
    for p in members {
        let (s, m) = weight.weigh(p)?;
        out.add_term(m, BigInt::from(s));
    }
    Ok(out)
}

impl FromStr for SignFactor {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "none" => SignFactor::None,
            "cyc" => SignFactor::Cycle,
            "inv" => SignFactor::Inversion,
            "lambda" => SignFactor::LambdaCycle,
            "q" => SignFactor::QInversion,
            other => return Err(EnumError::UnknownFamily(other.to_string())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(spec: FamilySpec) -> Vec<String> {
        spec.perms().unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn e53_matches_worked_list() {
        let mut got = words(FamilySpec::Enj { n: 5, j: 3 });
        let mut want = vec!["24153", "21453", "25413", "24513", "45123", "54123", "54213", "45213"];
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn u53_matches_worked_list() {
        let mut got = words(FamilySpec::Unj { n: 5, j: 3 });
        got.sort();
        assert_eq!(got, vec!["41253", "41523", "51423"]);
        assert_eq!(words(FamilySpec::Unj { n: 4, j: 2 }), vec!["3142"]);
        assert_eq!(words(FamilySpec::Enj { n: 4, j: 2 }), vec!["3412", "4312"]);
        assert_eq!(words(FamilySpec::Unj { n: 5, j: 1 }), vec!["23451"]);
    }

    #[test]
    fn d21_is_single() {
        assert_eq!(words(FamilySpec::Dnj { n: 2, j: 1 }), vec!["21"]);
    }

    #[test]
    fn lexicographic_order() {
        let w = words(FamilySpec::Sn { n: 3 });
        assert_eq!(w, vec!["123", "132", "213", "231", "312", "321"]);
        let b: Vec<String> = FamilySpec::Bn { n: 2 }
            .signed_perms()
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(b, vec!["-2,-1", "-2,1", "-1,-2", "-1,2", "1,-2", "1,2", "2,-1", "2,1"]);
    }

    #[test]
    fn empty_and_trivial_families() {
        assert_eq!(FamilySpec::Dn { n: 0 }.count().unwrap(), 1);
        assert_eq!(FamilySpec::Dn { n: 1 }.count().unwrap(), 0);
        assert_eq!(FamilySpec::Bn { n: 0 }.count().unwrap(), 1);
        assert_eq!(FamilySpec::BnMixed { n: 1 }.count().unwrap(), 0);
    }

    #[test]
    fn bad_slices() {
        assert!(FamilySpec::Dnj { n: 4, j: 4 }.perms().is_err());
        assert!(FamilySpec::Dnj { n: 4, j: 0 }.perms().is_err());
        assert!(FamilySpec::Unj { n: 2, j: 1 }.perms().is_err());
        assert!(FamilySpec::BnPairBlock { n: 4, k: 2 }.signed_perms().is_err());
        assert!(FamilySpec::from_label("Dnj", 4, None).is_err());
        assert!(FamilySpec::from_label("Zn", 4, None).is_err());
    }

    #[test]
    fn weighted_sum_d53() {
        let w = weighted_sum(&FamilySpec::Dnj { n: 5, j: 3 }, &WeightSpec::cyc_rlmv_excv()).unwrap();
        assert_eq!(w, "-x1*x2*x3*y4*y5".parse().unwrap());
    }

    #[test]
    fn weighted_sum_small_cases() {
        let w = weighted_sum(&FamilySpec::Dn { n: 2 }, &WeightSpec::lambda_rlm_exc()).unwrap();
        assert_eq!(w, "lambda*x*y".parse().unwrap());
        let w = weighted_sum(&FamilySpec::Dn { n: 1 }, &WeightSpec::lambda_rlm_exc()).unwrap();
        assert!(w.is_zero());
        let w = weighted_sum(&FamilySpec::Dn { n: 0 }, &WeightSpec::lambda_rlm_exc()).unwrap();
        assert_eq!(w, MultiPoly::one());
    }

    #[test]
    fn incompatible_weights() {
        assert!(weighted_sum(&FamilySpec::Sn { n: 3 }, &WeightSpec::type_b_exc()).is_err());
        assert!(weighted_sum(&FamilySpec::Bn { n: 2 }, &WeightSpec::cyc_rlmv_excv()).is_err());
        assert!(weighted_sum(&FamilySpec::Bn { n: 2 }, &WeightSpec::qinv_rlmv_y()).is_err());
    }

    #[test]
    fn insert_decomposition_roundtrip() {
        for s in (FamilySpec::Bn { n: 3 }).signed_perms().unwrap() {
            let (a, k, tau) = decompose_insert(&s);
            assert_eq!(SignedPermutation::insert(a, k, &tau).unwrap(), s);
        }
    }
}
