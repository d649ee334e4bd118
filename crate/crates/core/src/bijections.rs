//! Sign-reversing involutions and weight-tracking bijections behind the
//! identity catalog, each with an exhaustive checker.
//!
//! Checkers return a [`MatchReport`] (for involutions) or a [`MapReport`]
//! (for bijections between two families). Both reduce to a [`CheckSummary`]
//! line for the command-line tool.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::enumerate::{decompose_insert, in_e, in_u, insert_case, FamilySpec, InsertCase, WeightSpec};
use crate::perm::Permutation;
use crate::poly::{self, MultiPoly, Var};
use crate::signed::SignedPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{0} is not in E_{{n,j}}")]
    NotInE(Permutation),
    #[error("{0} is not in U_{{n,j}}")]
    NotInU(Permutation),
    #[error("the reduction needs j >= 2, got {0}")]
    SliceOne(Permutation),
}

/// Outcome of checking a would-be sign-reversing involution on a finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport<T> {
    pub name: String,
    pub domain_size: usize,
    pub fixed_points: Vec<T>,
    /// Each pair once, smaller element first.
    pub pairs: Vec<(T, T)>,
    /// The map is defined on the whole domain, stays inside it and squares
    /// to the identity.
    pub involutive: bool,
    /// `w(σ) + w(σ') = 0` for every pair.
    pub weight_cancels: bool,
    /// Extra per-pair invariant of the particular construction.
    pub invariant_holds: bool,
    pub total_weight: MultiPoly,
}

impl<T> MatchReport<T> {
    pub fn pass(&self) -> bool {
        self.fixed_points.is_empty() && self.involutive && self.weight_cancels && self.invariant_holds
    }

    pub fn summary(&self) -> CheckSummary {
        CheckSummary {
            name: self.name.clone(),
            domain_size: self.domain_size,
            detail: format!(
                "{} pairs, {} fixed, total weight {}",
                self.pairs.len(),
                self.fixed_points.len(),
                self.total_weight
            ),
            pass: self.pass(),
        }
    }
}

/// Outcome of checking a map `f: A → B` for bijectivity plus a weight
/// relation between `σ` and `f(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapReport {
    pub name: String,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub injective: bool,
    pub onto: bool,
    pub relation_holds: bool,
    /// Elements where the map was undefined or the relation failed.
    pub failures: Vec<String>,
}

impl MapReport {
    pub fn pass(&self) -> bool {
        self.injective && self.onto && self.relation_holds && self.failures.is_empty()
    }

    pub fn summary(&self) -> CheckSummary {
        CheckSummary {
            name: self.name.clone(),
            domain_size: self.domain_size,
            detail: format!("onto {} elements, {} failures", self.codomain_size, self.failures.len()),
            pass: self.pass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: String,
    pub domain_size: usize,
    pub detail: String,
    pub pass: bool,
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} elements, {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.domain_size,
            self.detail
        )
    }
}

fn build_matching<T, P, W, I>(name: String, domain: Vec<T>, partner: P, weight: W, invariant: I) -> MatchReport<T>
where
    T: Clone + Ord,
    P: Fn(&T) -> Option<T>,
    W: Fn(&T) -> MultiPoly,
    I: Fn(&T, &T) -> bool,
{
    let members: BTreeSet<T> = domain.iter().cloned().collect();
    let mut fixed_points = Vec::new();
    let mut pairs = Vec::new();
    let mut involutive = members.len() == domain.len();
    let mut weight_cancels = true;
    let mut invariant_holds = true;
    let mut total_weight = MultiPoly::zero();
    for sigma in &domain {
        let w = weight(sigma);
        total_weight += &w;
        let Some(tau) = partner(sigma) else {
            involutive = false;
            continue;
        };
        if !members.contains(&tau) || partner(&tau).as_ref() != Some(sigma) {
            involutive = false;
            continue;
        }
        if &tau == sigma {
            fixed_points.push(tau);
            continue;
        }
        if sigma < &tau {
            if !(w + weight(&tau)).is_zero() {
                weight_cancels = false;
            }
            if !invariant(sigma, &tau) {
                invariant_holds = false;
            }
            pairs.push((sigma.clone(), tau));
        }
    }
    MatchReport {
        name,
        domain_size: domain.len(),
        fixed_points,
        pairs,
        involutive,
        weight_cancels,
        invariant_holds,
        total_weight,
    }
}

fn build_map<D, C, F, R>(name: String, domain: Vec<D>, codomain: Vec<C>, map: F, relation: R) -> MapReport
where
    D: fmt::Display,
    C: Ord,
    F: Fn(&D) -> Option<C>,
    R: Fn(&D, &C) -> bool,
{
    let mut images = BTreeSet::new();
    let mut failures = Vec::new();
    let mut relation_holds = true;
    let mut defined = 0;
    for sigma in &domain {
        match map(sigma) {
            None => failures.push(format!("{sigma}: undefined")),
            Some(tau) => {
                defined += 1;
                if !relation(sigma, &tau) {
                    relation_holds = false;
                    failures.push(format!("{sigma}: weight relation fails"));
                }
                images.insert(tau);
            }
        }
    }
    let target: BTreeSet<C> = codomain.into_iter().collect();
    MapReport {
        name,
        domain_size: domain.len(),
        codomain_size: target.len(),
        injective: images.len() == defined,
        onto: images == target,
        relation_holds,
        failures,
    }
}

fn perms(spec: FamilySpec) -> Vec<Permutation> {
    spec.perms().map(Iterator::collect).unwrap_or_default()
}

fn signed(spec: FamilySpec) -> Vec<SignedPermutation> {
    spec.signed_perms().map(Iterator::collect).unwrap_or_default()
}

fn weight_a(spec: &WeightSpec, sigma: &Permutation) -> MultiPoly {
    spec.weight_poly(sigma).expect("type-A weight")
}

fn weight_b(spec: &WeightSpec, sigma: &SignedPermutation) -> MultiPoly {
    spec.weight_poly_signed(sigma).expect("type-B weight")
}

/// `min{i : σ(i) ≠ i+1}` for `σ ∈ E_{n,j}` (with `j = σ(n)`).
pub fn i_sigma(sigma: &Permutation) -> Result<u32, BijectionError> {
    let n = sigma.len();
    if n < 3 || !in_e(sigma, sigma.at(n as u32) as usize) {
        return Err(BijectionError::NotInE(sigma.clone()));
    }
    Ok((1..=n as u32)
        .find(|&i| sigma.at(i) != i + 1)
        .expect("σ(n) = j < n + 1"))
}

/// The involution `σ ↦ (σ(i_σ), σ(i_σ+1)) ∘ σ` on `E_{n,j}`.
pub fn wpsr_phi(sigma: &Permutation) -> Result<Permutation, BijectionError> {
    let i = i_sigma(sigma)?;
    Ok(sigma
        .apply_transposition(sigma.at(i), sigma.at(i + 1))
        .expect("i_σ < n"))
}

/// `U_{n,j} → D_{n-1,j-1}`: drop position 2 and lower every value by one.
pub fn psi_reduce(sigma: &Permutation) -> Result<Permutation, BijectionError> {
    let n = sigma.len();
    let j = if n == 0 { 0 } else { sigma.at(n as u32) as usize };
    if !in_u(sigma, j) {
        return Err(BijectionError::NotInU(sigma.clone()));
    }
    if j == 1 {
        return Err(BijectionError::SliceOne(sigma.clone()));
    }
    let w = sigma.word();
    let word = std::iter::once(w[0] - 1).chain(w[2..].iter().map(|v| v - 1)).collect();
    Ok(Permutation::new(word).expect("σ(2) = 1 is removed"))
}

/// `x_i ↦ x_{n+1-i}`, `y_i ↦ y_{n+1-i}`.
fn reverse_indices(p: &MultiPoly, n: usize) -> MultiPoly {
    let n = n as u32;
    let mut b = Vec::new();
    for i in 1..=n {
        b.push((Var::x(i), MultiPoly::var(Var::x(n + 1 - i))));
        b.push((Var::y(i), MultiPoly::var(Var::y(n + 1 - i))));
    }
    p.subs(b)
}

/// `x_i ↦ x_{i+1}`.
fn shift_x(p: &MultiPoly, n: usize) -> MultiPoly {
    p.subs((1..=n as u32).map(|i| (Var::x(i), MultiPoly::var(Var::x(i + 1)))))
}

/// `y_i ↦ y_{i+1}`.
fn shift_y(p: &MultiPoly, n: usize) -> MultiPoly {
    p.subs((1..=n as u32).map(|i| (Var::y(i), MultiPoly::var(Var::y(i + 1)))))
}

/// `φ` on `E_{n,j}` for every `j ∈ [n-1]`: involutive, no fixed points,
/// weight negated, `RLMv`/`EXCv` kept. Empty for `n < 3`.
pub fn check_wpsr_phi(n: usize) -> Vec<MatchReport<Permutation>> {
    if n < 3 {
        return Vec::new();
    }
    let weight = WeightSpec::cyc_rlmv_excv();
    (1..n)
        .map(|j| {
            build_matching(
                format!("wpsr involution on E_{{{n},{j}}}"),
                perms(FamilySpec::Enj { n, j }),
                |s| wpsr_phi(s).ok(),
                |s| weight_a(&weight, s),
                |s, t| {
                    let (a, b) = (s.statistics(), t.statistics());
                    a.rlm_v == b.rlm_v && a.exc_v == b.exc_v && in_e(t, j)
                },
            )
        })
        .collect()
}

/// `ψ` on one slice `U_{n,j}`, checked against three weight laws.
#[derive(Debug, Clone)]
pub struct PsiReport {
    pub n: usize,
    pub j: usize,
    /// Bijectivity plus the per-element law `w_σ(x, y) = x_j w_{ψσ}(x, δy)`.
    pub map: MapReport,
    /// Elements violating the per-element law.
    pub law_failures: Vec<Permutation>,
    /// `w_σ(x, y) = x_1 w_{ψσ}(δx, δy)` for every element.
    pub shifted_law_holds: bool,
    /// `Σ_{U_{n,j}} w_σ(x, y) = x_j Σ_{D_{n-1,j-1}} w_τ(x, δy)`.
    pub summed_law_holds: bool,
}

impl PsiReport {
    pub fn bijective(&self) -> bool {
        self.map.injective && self.map.onto && self.map.domain_size == self.map.codomain_size
    }

    pub fn summary(&self) -> CheckSummary {
        let mut s = self.map.summary();
        s.detail = format!(
            "{}, x_1 shift law {}, summed law {}",
            s.detail,
            if self.shifted_law_holds { "holds" } else { "fails" },
            if self.summed_law_holds { "holds" } else { "fails" }
        );
        s
    }
}

/// `ψ: U_{n,j} → D_{n-1,j-1}` for `2 <= j <= n-1`.
pub fn check_psi(n: usize) -> Vec<PsiReport> {
    let weight = WeightSpec::cyc_rlmv_excv();
    let stated = |s: &Permutation, t: &Permutation, j: usize| {
        weight_a(&weight, s) == MultiPoly::var(Var::x(j as u32)) * shift_y(&weight_a(&weight, t), n)
    };
    (2..n)
        .map(|j| {
            let domain = perms(FamilySpec::Unj { n, j });
            let codomain = perms(FamilySpec::Dnj { n: n - 1, j: j - 1 });
            let map = build_map(
                format!("reduction U_{{{n},{j}}} -> D_{{{},{}}}", n - 1, j - 1),
                domain.clone(),
                codomain.clone(),
                |s| psi_reduce(s).ok(),
                |s, t| stated(s, t, j),
            );
            let images: Vec<(Permutation, Permutation)> = domain
                .iter()
                .filter_map(|s| Some((s.clone(), psi_reduce(s).ok()?)))
                .collect();
            let law_failures = images.iter().filter(|(s, t)| !stated(s, t, j)).map(|(s, _)| s.clone()).collect();
            let shifted_law_holds = images.iter().all(|(s, t)| {
                weight_a(&weight, s) == MultiPoly::var(Var::x(1)) * shift_x(&shift_y(&weight_a(&weight, t), n), n)
            });
            let lhs: MultiPoly = domain.iter().map(|s| weight_a(&weight, s)).sum();
            let rhs: MultiPoly = codomain.iter().map(|t| weight_a(&weight, t)).sum();
            let summed_law_holds = lhs == MultiPoly::var(Var::x(j as u32)) * shift_y(&rhs, n);
            PsiReport { n, j, map, law_failures, shifted_law_holds, summed_law_holds }
        })
        .collect()
}

/// `flip` from `D̃_{n,j}` onto `D_{n,j}`, carrying the index-based weight to
/// the value-based one after reversing variable indices.
pub fn check_flip(n: usize) -> Vec<MapReport> {
    let by_value = WeightSpec::cyc_rlmv_excv();
    let by_index = WeightSpec::cyc_rlmi_exci();
    (1..n)
        .map(|j| {
            build_map(
                format!("flip D~_{{{n},{j}}} -> D_{{{n},{j}}}"),
                perms(FamilySpec::DnjTilde { n, j }),
                perms(FamilySpec::Dnj { n, j }),
                |s| Some(s.flip()),
                |s, t| weight_a(&by_index, s) == reverse_indices(&weight_a(&by_value, t), n),
            )
        })
        .collect()
}

/// The perfect matching `M_n` of `B_n^±`, or `None` outside `B_n^±`.
pub fn pm_partner(sigma: &SignedPermutation) -> Option<SignedPermutation> {
    let n = sigma.len();
    match insert_case(sigma)? {
        InsertCase::NegOntoPositive | InsertCase::PosOntoNegative => Some(sigma.swap_positions(n - 1, n)),
        InsertCase::NegOntoMixed | InsertCase::PosOntoMixed => {
            let (a, k, tau) = decompose_insert(sigma);
            let partner = pm_partner(&tau)?;
            SignedPermutation::insert(a, k, &partner).ok()
        }
    }
}

/// Checks behind the three type-B excedance lemmas at size `n`.
#[derive(Debug, Clone)]
pub struct TypeBReport {
    pub n: usize,
    /// `σ ↦ (σ(n-1), σ(n)) ∘ σ` on `B_n^+` minus the elements with `n` in
    /// one of the last two positions.
    pub plus_swap: MatchReport<SignedPermutation>,
    /// Dropping a final fixed point `n`.
    pub plus_drop: MapReport,
    /// Swapping `n` from position `n-1` to the end, then dropping it.
    pub plus_swap_drop: MapReport,
    /// Negating every entry, `B_n^+ → B_n^-`.
    pub minus: MapReport,
    /// `M_n` restricted to each insertion case.
    pub mixed: Vec<(InsertCase, MatchReport<SignedPermutation>)>,
}

impl TypeBReport {
    pub fn summaries(&self) -> Vec<CheckSummary> {
        let mut out = vec![
            self.plus_swap.summary(),
            self.plus_drop.summary(),
            self.plus_swap_drop.summary(),
            self.minus.summary(),
        ];
        out.extend(self.mixed.iter().map(|(_, r)| r.summary()));
        out
    }

    pub fn pass(&self) -> bool {
        self.summaries().iter().all(|s| s.pass)
    }
}

pub fn typeb_matchings(n: usize) -> TypeBReport {
    let weight = WeightSpec::type_b_exc();
    let w = |s: &SignedPermutation| weight_b(&weight, s);
    let nn = n as i32;
    let plus = signed(FamilySpec::BnPlus { n });
    let smaller_plus = if n >= 1 { signed(FamilySpec::BnPlus { n: n - 1 }) } else { Vec::new() };

    let plus_swap = build_matching(
        format!("B+_{n} swap of the last two entries"),
        plus.iter()
            .filter(|s| n >= 2 && s.at(nn - 1) != nn && s.at(nn) != nn)
            .cloned()
            .collect(),
        |s| Some(s.swap_positions(n - 1, n)),
        w,
        |_, _| true,
    );
    let plus_drop = build_map(
        format!("B+_{n} drop final n"),
        plus.iter().filter(|s| n >= 1 && s.at(nn) == nn).cloned().collect(),
        smaller_plus.clone(),
        |s| s.remove_max_at(n),
        |s, t| w(s) == -w(t),
    );
    let plus_swap_drop = build_map(
        format!("B+_{n} move n to the end and drop"),
        plus.iter().filter(|s| n >= 2 && s.at(nn - 1) == nn).cloned().collect(),
        if n >= 2 { smaller_plus } else { Vec::new() },
        |s| s.swap_positions(n - 1, n).remove_max_at(n),
        |s, t| w(s) == MultiPoly::var(Var::x(n as u32 - 1)) * w(t),
    );
    let size_factor = MultiPoly::var(poly::S).pow(n as u32) * MultiPoly::var(poly::T).pow((n * (n + 1) / 2) as u32);
    let minus = build_map(
        format!("B+_{n} -> B-_{n} by negation"),
        plus.clone(),
        signed(FamilySpec::BnMinus { n }),
        |s| Some(s.negate_all()),
        |s, t| {
            let st = s.stats_b();
            let sign = if st.cyc_b % 2 == 0 { 1 } else { -1 };
            let anexc = st.anexc_b.iter().map(|&i| MultiPoly::var(Var::x(i))).product::<MultiPoly>();
            w(t) == MultiPoly::int(sign) * &size_factor * anexc
        },
    );
    let mixed = InsertCase::ALL
        .into_iter()
        .map(|case| {
            let report = build_matching(
                format!("B+-_{n} matching, case {}", case.label()),
                signed(FamilySpec::BnInsert { n, case }),
                pm_partner,
                w,
                |s, t| s.image() == t.image() && insert_case(t) == Some(case),
            );
            (case, report)
        })
        .collect();
    TypeBReport { n, plus_swap, plus_drop, plus_swap_drop, minus, mixed }
}

/// Checks behind the type-B right-to-left-minimum identity at size `n`.
#[derive(Debug, Clone)]
pub struct RlmBReport {
    pub n: usize,
    /// Restriction to `[n-1]` on `{|σ(n)| = n}`.
    pub phi1: MapReport,
    /// Swap of positions `2k-1`, `2k` on each pair block, `k = 1..=⌊(n-1)/2⌋`.
    pub blocks: Vec<MatchReport<SignedPermutation>>,
    /// Deleting position `n-1` on `{|σ(n-1)| = n, |σ(n)| ≠ n}`; `None` for odd `n`.
    pub phi2: Option<MapReport>,
    /// `Σ_{|σ(n)| ≠ n} w_σ` equals the sum over the last block (zero for odd `n`).
    pub remainder_matches: bool,
}

impl RlmBReport {
    pub fn summaries(&self) -> Vec<CheckSummary> {
        let mut out = vec![self.phi1.summary()];
        out.extend(self.blocks.iter().map(MatchReport::summary));
        out.extend(self.phi2.iter().map(MapReport::summary));
        out.push(CheckSummary {
            name: format!("B_{} remainder after pair blocks", self.n),
            domain_size: 0,
            detail: "sum over |σ(n)| != n equals the unpaired block".into(),
            pass: self.remainder_matches,
        });
        out
    }

    pub fn pass(&self) -> bool {
        self.summaries().iter().all(|s| s.pass)
    }
}

fn with_top_letter(n: usize, rest: &[SignedPermutation]) -> Vec<(i32, SignedPermutation)> {
    let nn = n as i32;
    rest.iter().flat_map(|t| [(nn, t.clone()), (-nn, t.clone())]).collect()
}

pub fn rlmb_recursion_maps(n: usize) -> RlmBReport {
    let weight = WeightSpec::type_b_rlm();
    let w = |s: &SignedPermutation| weight_b(&weight, s);
    let nn = n as i32;
    let all = signed(FamilySpec::Bn { n });
    let smaller = if n >= 1 { signed(FamilySpec::Bn { n: n - 1 }) } else { Vec::new() };
    let top_power = MultiPoly::var(poly::S) * MultiPoly::var(poly::T).pow(n as u32);

    let phi1 = build_map(
        format!("B_{n} restriction off |σ(n)| = n"),
        all.iter().filter(|s| n >= 1 && s.at(nn).unsigned_abs() as usize == n).cloned().collect(),
        with_top_letter(n, &smaller),
        |s| Some((s.at(nn), s.remove_max_at(n)?)),
        |s, (a, t)| {
            let factor = if *a > 0 { MultiPoly::var(Var::y(n as u32)) } else { top_power.clone() };
            w(s) == -(factor * w(t))
        },
    );
    let blocks = (1..=n.saturating_sub(1) / 2)
        .map(|k| {
            build_matching(
                format!("B_{n} pair block k={k}"),
                signed(FamilySpec::BnPairBlock { n, k }),
                |s| Some(s.swap_positions(2 * k - 1, 2 * k)),
                w,
                |_, _| true,
            )
        })
        .collect();
    let unpaired: Vec<SignedPermutation> = all
        .iter()
        .filter(|s| n >= 2 && n.is_multiple_of(2) && s.at(nn - 1).unsigned_abs() as usize == n)
        .cloned()
        .collect();
    let phi2 = (n >= 2 && n.is_multiple_of(2)).then(|| {
        build_map(
            format!("B_{n} deletion of position n-1"),
            unpaired.clone(),
            with_top_letter(n, &smaller),
            |s| Some((s.at(nn - 1), s.remove_max_at(n - 1)?)),
            |s, (a, t)| {
                let factor = if *a > 0 { MultiPoly::one() } else { top_power.clone() };
                w(s) == factor * w(t)
            },
        )
    });
    let rest: MultiPoly = all
        .iter()
        .filter(|s| n >= 1 && s.at(nn).unsigned_abs() as usize != n)
        .map(w)
        .sum();
    let unpaired_sum: MultiPoly = unpaired.iter().map(w).sum();
    RlmBReport { n, phi1, blocks, phi2, remainder_matches: rest == unpaired_sum }
}

/// Every lemma check at size `n` (type-A maps for `n`, type-B maps for `n`).
pub fn all_checks(n: usize) -> Vec<CheckSummary> {
    let mut out: Vec<CheckSummary> = check_wpsr_phi(n).iter().map(MatchReport::summary).collect();
    out.extend(check_psi(n).iter().map(PsiReport::summary));
    out.extend(check_flip(n).iter().map(MapReport::summary));
    out.extend(typeb_matchings(n).summaries());
    if n >= 2 {
        out.extend(rlmb_recursion_maps(n).summaries());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn i_sigma_examples() {
        assert_eq!(i_sigma(&perm("24153")).unwrap(), 2);
        assert_eq!(i_sigma(&perm("45123")).unwrap(), 1);
        assert_eq!(i_sigma(&perm("4312")).unwrap(), 1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(wpsr_phi(&perm("25413")).unwrap(), perm("24513"));
        assert_eq!(wpsr_phi(&perm("54213")).unwrap(), perm("45213"));
        let s = perm("24153");
        assert_eq!(wpsr_phi(&wpsr_phi(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_reduce(&perm("51423")).unwrap(), perm("4312"));
        assert_eq!(psi_reduce(&perm("41523")).unwrap(), perm("3412"));
        assert_eq!(psi_reduce(&perm("3142")).unwrap(), perm("231"));
    }

    #[test]
    fn domain_errors() {
        // 51423 lies in U_{5,3}, not E_{5,3}.
        assert!(matches!(i_sigma(&perm("51423")), Err(BijectionError::NotInE(_))));
        assert!(matches!(wpsr_phi(&perm("12345")), Err(BijectionError::NotInE(_))));
        assert!(matches!(psi_reduce(&perm("24153")), Err(BijectionError::NotInU(_))));
        assert!(matches!(psi_reduce(&perm("23451")), Err(BijectionError::SliceOne(_))));
    }

    #[test]
    fn size_two_matching() {
        assert_eq!(pm_partner(&sp("-1,2")).unwrap(), sp("2,-1"));
        assert_eq!(pm_partner(&sp("1,-2")).unwrap(), sp("-2,1"));
        assert_eq!(pm_partner(&sp("1,2")), None);
        let w = WeightSpec::type_b_exc();
        let a = w.weight_poly_signed(&sp("-1,2")).unwrap();
        let b = w.weight_poly_signed(&sp("2,-1")).unwrap();
        assert_eq!(a, "x1*s*t".parse().unwrap());
        assert!((a + b).is_zero());
    }

    #[test]
    fn inserting_three_bar() {
        let s = sp("-1,2,-3");
        assert_eq!(pm_partner(&s).unwrap(), sp("2,-1,-3"));
        let w = WeightSpec::type_b_exc();
        assert_eq!(
            w.weight_poly_signed(&s).unwrap(),
            "-x1*x3*s^2*t^4".parse().unwrap()
        );
    }

    #[test]
    fn empty_mixed_class_at_one() {
        let r = typeb_matchings(1);
        assert!(r.mixed.iter().all(|(_, m)| m.domain_size == 0 && m.pass()));
    }

    #[test]
    fn phi1_on_identity_of_two() {
        let w = WeightSpec::type_b_rlm();
        let s = sp("1,2");
        let t = s.remove_max_at(2).unwrap();
        assert_eq!(w.weight_poly_signed(&s).unwrap(), "y1*y2".parse().unwrap());
        assert_eq!(w.weight_poly_signed(&t).unwrap(), "-y1".parse().unwrap());
        assert!(rlmb_recursion_maps(2).pass());
    }

    #[test]
    fn odd_size_leaves_no_remainder() {
        let r = rlmb_recursion_maps(3);
        assert!(r.phi2.is_none());
        assert_eq!(r.blocks.len(), 1);
        assert!(r.pass());
    }
}
