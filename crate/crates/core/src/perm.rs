//! Permutations of `[n]` in one-line notation and their classical statistics.
//!
//! Everything is 1-based at the interface: `Permutation::new(vec![2, 1])` is
//! the transposition of `{1, 2}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("word is not a permutation of 1..={n}: {word:?}")]
    NotBijective { n: usize, word: Vec<i64> },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("transposition ({a},{b}) is not valid on [{n}]")]
    BadTransposition { a: u32, b: u32, n: usize },
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
}

/// A permutation `σ(1)σ(2)…σ(n)` of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

/// Cycles with each cycle led by its minimum and cycles sorted by leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Index/value sets and counts of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatProfile {
    pub exc_i: BTreeSet<u32>,
    pub exc_v: BTreeSet<u32>,
    pub rlm_i: BTreeSet<u32>,
    pub rlm_v: BTreeSet<u32>,
    pub fix: BTreeSet<u32>,
    pub cyc: usize,
    pub inv: usize,
}

impl StatProfile {
    pub fn exc(&self) -> usize {
        self.exc_i.len()
    }

    pub fn rlm(&self) -> usize {
        self.rlm_i.len()
    }
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijective {
                    n,
                    word: word.iter().map(|&v| v as i64).collect(),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `σ(i)` for `i` in `1..=n`.
    pub fn at(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    pub fn is_derangement(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v as usize != k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = k as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// `self ∘ sigma`, i.e. `i ↦ self(sigma(i))`.
    pub fn compose(&self, sigma: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != sigma.len() {
            return Err(PermError::SizeMismatch(self.len(), sigma.len()));
        }
        Ok(Permutation {
            word: sigma.word.iter().map(|&v| self.at(v)).collect(),
        })
    }

    /// `(a,b) ∘ self`: swaps the values `a` and `b` in the one-line word.
    pub fn apply_transposition(&self, a: u32, b: u32) -> Result<Permutation, PermError> {
        let n = self.len();
        if a == b || a == 0 || b == 0 || a as usize > n || b as usize > n {
            return Err(PermError::BadTransposition { a, b, n });
        }
        Ok(Permutation {
            word: self
                .word
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        })
    }

    /// `R ∘ σ⁻¹ ∘ R` with `R(i) = n + 1 - i`.
    pub fn flip(&self) -> Permutation {
        let n = self.len() as u32;
        let inv = self.inverse();
        Permutation {
            word: (1..=n).map(|i| n + 1 - inv.at(n + 1 - i)).collect(),
        }
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v as usize] {
                seen[v as usize] = true;
                cycle.push(v);
                v = self.at(v);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn statistics(&self) -> StatProfile {
        let mut exc_i = BTreeSet::new();
        let mut exc_v = BTreeSet::new();
        let mut rlm_i = BTreeSet::new();
        let mut rlm_v = BTreeSet::new();
        let mut fix = BTreeSet::new();
        for (k, &v) in self.word.iter().enumerate() {
            let i = k as u32 + 1;
            if v > i {
                exc_i.insert(i);
                exc_v.insert(v);
            } else if v == i {
                fix.insert(i);
            }
        }
        let mut min_right = u32::MAX;
        for (k, &v) in self.word.iter().enumerate().rev() {
            if v < min_right {
                rlm_i.insert(k as u32 + 1);
                rlm_v.insert(v);
                min_right = v;
            }
        }
        StatProfile {
            exc_i,
            exc_v,
            rlm_i,
            rlm_v,
            fix,
            cyc: self.cycle_count(),
            inv: self.inversions(),
        }
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (k, v) in self.word.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let word: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u32>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let word = word.ok_or_else(|| PermError::Parse(s.to_string()))?;
        Permutation::new(word)
    }
}
