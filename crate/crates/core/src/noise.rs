//! Additive white generalized Gaussian noise (AWGGN) with unit variance.
//!
//! Density f(u) = aΛ₀/(2Γ(1/a)) · exp(−Λ₀ᵃ|u|ᵃ), Λ₀ = √(Γ(3/a)/Γ(1/a)).
//! Shape a = 1 is Laplacian, a = 2 Gaussian, a = 0.5 the gamma-noise case.

use rand::Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{domain, Result};
use crate::special::{gamma_q, ln_gamma};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    a: f64,
    lambda0: f64,
}

impl NoiseSpec {
    /// Generalized Gaussian noise with shape `a` (finite, positive).
    ///
    /// The impulsive (a → 0) and uniform (a → ∞) endpoints have no finite
    /// parameterization and are rejected.
    pub fn new(a: f64) -> Result<Self> {
        if a.is_infinite() {
            return Err(domain(
                "NoiseSpec::new",
                "a = ∞ (uniform noise) has no finite shape parameter; use a large finite a",
            ));
        }
        if !(a > 0.0) {
            return Err(domain(
                "NoiseSpec::new",
                format!("a = {a}: the shape must be positive (a = 0, impulsive noise, is a degenerate limit)"),
            ));
        }
        let lambda0 = Self::lambda0_for(a)?;
        Ok(Self { a, lambda0 })
    }

    pub fn gaussian() -> Self {
        Self::new(2.0).expect("a = 2 is valid")
    }

    pub fn laplacian() -> Self {
        Self::new(1.0).expect("a = 1 is valid")
    }

    /// Λ₀ = √(Γ(3/a)/Γ(1/a)).
    pub fn lambda0_for(a: f64) -> Result<f64> {
        Ok((0.5 * (ln_gamma(3.0 / a)? - ln_gamma(1.0 / a)?)).exp())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// Generalized Q-function: P(U > x) for unit-variance GGN.
    pub fn qa(&self, x: f64) -> f64 {
        qa_exact(self, x)
    }
}

/// Q_a(x) = Γ(1/a, Λ₀ᵃ xᵃ) / (2Γ(1/a)) for x ≥ 0 and 1 − Q_a(−x) otherwise.
pub fn qa_exact(noise: &NoiseSpec, x: f64) -> f64 {
    if x == 0.0 {
        return 0.5;
    }
    let t = (noise.lambda0 * x.abs()).powf(noise.a);
    let tail =
        0.5 * gamma_q(1.0 / noise.a, t).expect("arguments are in the incomplete-gamma domain");
    if x > 0.0 {
        tail
    } else {
        1.0 - tail
    }
}

/// Unit-variance generalized Gaussian density.
pub fn ggn_pdf(noise: &NoiseSpec, u: f64) -> f64 {
    let a = noise.a;
    let ln_norm = (a * noise.lambda0 / 2.0).ln() - ln_gamma(1.0 / a).expect("1/a > 0");
    (ln_norm - (noise.lambda0 * u.abs()).powf(a)).exp()
}

/// One draw U = S·W^{1/a}/Λ₀ with S = ±1 equiprobable and W ~ Gamma(1/a, 1).
pub fn sample_ggn<R: Rng + ?Sized>(noise: &NoiseSpec, rng: &mut R) -> f64 {
    let w: f64 = Gamma::new(1.0 / noise.a, 1.0)
        .expect("shape 1/a > 0")
        .sample(rng);
    let magnitude = w.powf(1.0 / noise.a) / noise.lambda0;
    if rng.random::<bool>() {
        magnitude
    } else {
        -magnitude
    }
}
