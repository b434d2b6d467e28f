//! A registry of identities among the sequences, each a predicate over an
//! index range evaluated in exact arithmetic.

mod checks;
mod store;

use std::time::{Duration, Instant};

use thiserror::Error;

pub use store::Store;

use crate::sequences::Value;

/// The least failing index of a check with both sides exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub index: Vec<i64>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(Failure),
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: &'static str,
    pub max_index: usize,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifierError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

pub type Checker = fn(&Store, usize) -> Result<(), Failure>;

#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    pub default_range: usize,
    pub checker: Checker,
}

impl IdentityCheck {
    pub fn matches(&self, id: &str) -> bool {
        self.id == id || self.aliases.contains(&id)
    }
}

macro_rules! registry {
    ($($id:literal [$($alias:literal),*] $range:literal $f:ident $desc:literal;)*) => {
        &[$(IdentityCheck {
            id: $id,
            aliases: &[$($alias),*],
            description: $desc,
            default_range: $range,
            checker: checks::$f,
        }),*]
    };
}

static REGISTRY: &[IdentityCheck] = registry! {
    "thm-1.1" [] 20 thm_1_1 "ψ_r = (-1)^(r+1) ρ_r";
    "eq-1.7" ["thm-7.2"] 20 eq_1_7 "Σ_k (-1)^k <<n,k>> / C(2n+1,k+1) = 2 B_(n+1)";
    "prop-2.2" [] 20 prop_2_2 "γ_r + τ_r + Σ_j (-1)^j ρ̂_j γ_(r-j) = 0";
    "log-g" [] 20 log_g "log Σ γ_r z^r has coefficients B_(j+1)/(j(j+1))";
    "eq-2.8" ["ins"] 20 eq_2_8 "Σ_j ψ_j γ_(r-j) = τ_r";
    "eq-2.9" ["ggd"] 20 eq_2_9 "Σ_j (-1)^j γ_j γ_(r-j) = δ_(r,0)";
    "eq-2.10" ["iff2"] 20 eq_2_10 "Σ_j (-1)^j (j+1) γ_(j+1) γ_(r-j) = B_(r+2)/(r+2)";
    "lagrange-roundtrip" [] 20 lagrange_roundtrip "x V(x) and x V*(x) are compositional inverses";
    "eq-3.5-3.10" [] 20 eq_3_5_to_3_10 "ρ̂, γ, τ as coefficients of powers of V and of V*";
    "eq-4.1" ["crec"] 20 eq_4_1 "Σ_x x c_x c_(n-x) = n c_n + 2 c_(n-2)";
    "prop-4.2" [] 20 prop_4_2 "ρ̂_r, γ_r, τ_r from the coefficients c_n of U";
    "prop-4.3" ["ccj"] 20 prop_4_3 "odd-index quadratic identity for c_n";
    "prop-4.3-symmetric" [] 20 prop_4_3_symmetric "the odd-index identity with cos(πx/2) weights";
    "lemma-5.2" [] 20 lemma_5_2 "S_n(k+1)/(k+1) = S_n(k)/k + (2/n) S_(n-2)(k)";
    "thm-5.3" [] 14 thm_5_3 "n!! S_n(k)/k through Stirling cycle numbers and d_n";
    "prop-5.4" ["radu"] 20 prop_5_4 "(n/2) d_n / 2^(n/2) through α and α*";
    "eq-5.11" ["gmj"] 20 eq_5_11 "m γ_m = Σ_j α(j+1) γ_(m-1-j)";
    "eq-5.12" ["rhj"] 20 eq_5_12 "(m+1/2) ρ̂_m = α*(m+1) - α(m+1) + Σ_j α(j+1) ρ̂_(m-1-j)";
    "eq-6.1" ["ir"] 12 eq_6_1 "[m,m-n] = Σ_k <<n,k>> C(m+k,2n)";
    "eq-6.2" ["ir2"] 12 eq_6_2 "[m,m-n]* = Σ_k <<n,k>>* C(m+k,2n)";
    "ratfun-recursion" [] 12 ratfun_recursion "E_n from the rational-function derivative recursion";
    "prop-6.1" [] 20 prop_6_1 "α and α* as Eulerian sums";
    "prop-6.2" ["khe"] 6 prop_6_2 "beta integrals of F_n and F*_n in closed form";
    "eq-6.9" ["ann"] 8 eq_6_9 "α(n) from products E_j E_(n+1-j), for every split j";
    "eq-6.10-6.11" [] 20 eq_6_10_6_11 "α* from integrals of F* and of F";
    "prop-7.1" ["abba"] 20 prop_7_1 "α(j) = B_(j+1)/(j+1)";
    "eq-7.3" ["rhj2"] 20 eq_7_3 "(m+1/2) ρ̂_m through α* and Bernoulli numbers";
    "prop-8.1" ["ccj2"] 20 prop_8_1 "odd-index identity for d_n through β";
    "prop-8.2" ["top3"] 20 prop_8_2 "(m+1/2) ρ̂_m = (-1)^m β(m) + 2 B_(m+1)/(m+1) + Σ_j B_(j+2)/(j+2) ρ̂_(m-1-j)";
    "prop-8.3" [] 20 prop_8_3 "β and β* as Eulerian sums and integrals";
    "eq-8.4" ["mad"] 16 eq_8_4 "(n!!/4) Σ x c_x y c_y through β and β*";
    "eq-8.7" ["goa"] 20 eq_8_7 "α*(m+1) through β(m) and Bernoulli numbers";
    "eq-9.9" ["wrench"] 20 eq_9_9 "r γ_r = Σ_j B_(j+2)/(j+2) γ_(r-1-j)";
    "eq-9.14" ["rr2"] 20 eq_9_14 "Σ_j C(r+3/2, j+1) ρ̂_j γ_(r-j) = -γ_r";
    "eq-9.15" ["rr3"] 20 eq_9_15 "quadratic relation in ρ̂ and γ with half-integer binomials";
    "eq-9.16" ["our"] 20 eq_9_16 "Σ_j ρ̂_j γ_(r-j) (C(r-1/2, j) + (-1)^j/2) = -γ_r";
    "eq-9.17" ["madder"] 20 eq_9_17 "quadratic relation in ρ̂ and γ through β and β*";
    "eq-10.2" ["rr4"] 12 eq_10_2 "[n,k]* = Σ_j (-1)^(j-1) ω_j [n,k-j]";
    "stirstar-diag" [] 20 stirstar_diag "[n,n]* = (n-1)/n and [n,k]* = 0 for k <= 1";
    "omega-denominator-smooth" [] 25 omega_denominator_smooth "denominator of ω_n has no prime factor above n+1";
    "at-positivity" [] 30 at_positivity "divide-mode Akiyama-Tanigawa entries are positive";
};

pub fn registry() -> &'static [IdentityCheck] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityCheck, VerifierError> {
    REGISTRY
        .iter()
        .find(|c| c.matches(id))
        .ok_or_else(|| VerifierError::UnknownCheck(id.to_string()))
}

fn run(check: &IdentityCheck, store: &Store, max: usize) -> CheckReport {
    let start = Instant::now();
    let outcome = match (check.checker)(store, max) {
        Ok(()) => Outcome::Pass,
        Err(f) => Outcome::Fail(f),
    };
    CheckReport { id: check.id, max_index: max, outcome, elapsed: start.elapsed() }
}

/// Runs one check over indices `0..=max` against tables from `store`.
/// `store.max()` must be at least `max`.
pub fn run_check_with(store: &Store, id: &str, max: usize) -> Result<CheckReport, VerifierError> {
    assert!(store.max() >= max, "store too small for index {max}");
    Ok(run(find(id)?, store, max))
}

pub fn run_check(id: &str, max: usize) -> Result<CheckReport, VerifierError> {
    run_check_with(&Store::new(max), id, max)
}

pub fn run_check_default(id: &str) -> Result<CheckReport, VerifierError> {
    let check = find(id)?;
    run_check(check.id, check.default_range)
}

fn run_many(store: &Store, range: impl Fn(&IdentityCheck) -> usize + Sync) -> Vec<CheckReport> {
    use rayon::prelude::*;
    let mut reports: Vec<CheckReport> =
        REGISTRY.par_iter().map(|c| run(c, store, range(c))).collect();
    reports.sort_by_key(|r| r.id);
    reports
}

/// Every check over `0..=max`, sorted by id.
pub fn run_all(max: usize) -> Vec<CheckReport> {
    run_all_with(&Store::new(max), max)
}

pub fn run_all_with(store: &Store, max: usize) -> Vec<CheckReport> {
    assert!(store.max() >= max, "store too small for index {max}");
    run_many(store, |_| max)
}

/// Every check over its own default range, sorted by id.
pub fn run_all_default() -> Vec<CheckReport> {
    let top = REGISTRY.iter().map(|c| c.default_range).max().unwrap_or(0);
    run_many(&Store::new(top), |c| c.default_range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn ids_unique() {
        let mut ids: Vec<&str> =
            REGISTRY.iter().flat_map(|c| std::iter::once(c.id).chain(c.aliases.iter().copied())).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_id() {
        assert_eq!(run_check("bogus-id", 3).unwrap_err(), VerifierError::UnknownCheck("bogus-id".into()));
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(find("ggd").unwrap().id, "eq-2.9");
        assert_eq!(find("thm-7.2").unwrap().id, "eq-1.7");
    }

    #[test]
    fn all_pass_small() {
        for max in [0, 1, 6] {
            for r in run_all(max) {
                assert!(r.passed(), "{} at {max}: {:?}", r.id, r.outcome);
            }
        }
    }

    #[test]
    fn corrupted_gamma_is_caught() {
        for r in 0..=5 {
            let mut store = Store::new(8);
            store.perturb_gamma(r, &int(1));
            let failed: Vec<_> =
                run_all_with(&store, 8).into_iter().filter(|c| !c.passed()).map(|c| c.id).collect();
            assert!(failed.len() >= 2, "γ_{r}: {failed:?}");
        }
    }
}
