use std::sync::OnceLock;

use crate::algebra::{Rat, Sqrt2Rat};
use crate::sequences::{
    alpha, alpha_star, beta, beta_star, c_upto, gamma, psi_from, rho_hat, tau, AlphaMethod,
    AlphaStarMethod, BetaMethod, BetaStarMethod, GammaMethod, RhoHatMethod, TauMethod,
};
use crate::triangles::bernoulli;

/// The sequence tables identity checks read from, filled lazily to a size
/// that covers index `max` of every check.
///
/// Checks never recompute a stored sequence themselves, so a corrupted table
/// entry shows up as a failure instead of being silently bypassed.
pub struct Store {
    max: usize,
    gamma: OnceLock<Vec<Rat>>,
    rho_hat: OnceLock<Vec<Rat>>,
    tau: OnceLock<Vec<Rat>>,
    psi: OnceLock<Vec<Rat>>,
    bernoulli: OnceLock<Vec<Rat>>,
    c: OnceLock<Vec<Sqrt2Rat>>,
    alpha: OnceLock<Vec<Rat>>,
    alpha_star: OnceLock<Vec<Rat>>,
    beta: OnceLock<Vec<Rat>>,
    beta_star: OnceLock<Vec<Rat>>,
}

impl Store {
    pub fn new(max: usize) -> Self {
        Store {
            max,
            gamma: OnceLock::new(),
            rho_hat: OnceLock::new(),
            tau: OnceLock::new(),
            psi: OnceLock::new(),
            bernoulli: OnceLock::new(),
            c: OnceLock::new(),
            alpha: OnceLock::new(),
            alpha_star: OnceLock::new(),
            beta: OnceLock::new(),
            beta_star: OnceLock::new(),
        }
    }

    pub fn max(&self) -> usize {
        self.max
    }

    fn len(&self) -> usize {
        self.max + 3
    }

    /// `γ_r` by the Wrench recurrence.
    pub fn gamma(&self) -> &[Rat] {
        self.gamma
            .get_or_init(|| (0..self.len()).map(|r| gamma(r, GammaMethod::WrenchRecurrence)).collect())
    }

    /// `ρ̂_r` by the binomial De Moivre formula.
    pub fn rho_hat(&self) -> &[Rat] {
        self.rho_hat.get_or_init(|| {
            (0..self.len()).map(|r| rho_hat(r, RhoHatMethod::BinomialDeMoivre)).collect()
        })
    }

    pub fn tau(&self) -> &[Rat] {
        self.tau
            .get_or_init(|| (0..self.len()).map(|r| tau(r, TauMethod::BinomialDeMoivre)).collect())
    }

    /// `ψ_r` solved from the stored `τ` and `γ`.
    pub fn psi(&self) -> &[Rat] {
        self.psi.get_or_init(|| psi_from(self.tau(), self.gamma(), self.len() - 1))
    }

    pub fn bernoulli(&self) -> &[Rat] {
        self.bernoulli.get_or_init(|| (0..2 * self.len() + 4).map(bernoulli).collect())
    }

    /// `c_n` for `n < 2·max + 10`.
    pub fn c(&self) -> &[Sqrt2Rat] {
        self.c.get_or_init(|| c_upto(2 * self.len() + 3))
    }

    pub fn alpha(&self) -> &[Rat] {
        self.alpha
            .get_or_init(|| (0..self.len()).map(|j| alpha(j, AlphaMethod::Eulerian)).collect())
    }

    pub fn alpha_star(&self) -> &[Rat] {
        self.alpha_star.get_or_init(|| {
            (0..self.len()).map(|j| alpha_star(j, AlphaStarMethod::EulerianClosed)).collect()
        })
    }

    pub fn beta(&self) -> &[Rat] {
        self.beta
            .get_or_init(|| (0..self.len()).map(|j| beta(j, BetaMethod::Eulerian)).collect())
    }

    pub fn beta_star(&self) -> &[Rat] {
        self.beta_star
            .get_or_init(|| (0..self.len()).map(|j| beta_star(j, BetaStarMethod::Eulerian)).collect())
    }

    /// Add `delta` to the stored `γ_r`. Later reads of `ψ` see the change.
    pub fn perturb_gamma(&mut self, r: usize, delta: &Rat) {
        self.gamma();
        if let Some(g) = self.gamma.get_mut() {
            g[r] += delta;
        }
        self.psi = OnceLock::new();
    }
}
