//! Ground truth for the closed forms: adaptive quadrature over the exact
//! densities and seeded Monte-Carlo estimators.

pub mod quadrature;

use std::cell::RefCell;
use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::approx::{ApproxKind, ExpSumApprox};
use crate::error::{domain, Error, Result};
use crate::fading::{
    expansion, from_special_case, gamma_density, mgf, pdf_bessel, pdf_integer_with, sample_snr,
};
use crate::fading::{FadingSpec, HoytMapping, SpecialCase};
use crate::metrics::{ModulationSpec, Scheme};
use crate::noise::{qa_exact, sample_ggn, NoiseSpec};
use crate::special::lower_inc_gamma;

pub use quadrature::{integrate, integrate_semi_infinite, QuadratureResult, QuadratureSettings};

/// Runs `integrate` on a fallible integrand and surfaces the first error
/// instead of a NaN-poisoned tolerance failure.
fn integrate_fallible<F>(f: F, a: f64, b: f64, settings: &QuadratureSettings) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let wrapped = |x: f64| match f(x) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            f64::NAN
        }
    };
    let r = integrate(wrapped, a, b, settings);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(r?.value)
}

fn integrate_semi_infinite_fallible<F>(
    f: F,
    scale: f64,
    settings: &QuadratureSettings,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let wrapped = |x: f64| match f(x) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            f64::NAN
        }
    };
    let r = integrate_semi_infinite(wrapped, scale, settings);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(r?.value)
}

/// ∫₀^∞ γ^{m−1} e^{−βγ} γ_inc(ξ, pγ) dγ by direct quadrature, the definition
/// the closed-form kernel is checked against.
pub fn kernel_quadrature(
    m: u32,
    beta_eff: f64,
    xi: u32,
    p: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    if m == 0 || xi == 0 || !(beta_eff > 0.0) || !(p > 0.0) {
        return Err(domain(
            "kernel_quadrature",
            format!("need m, ξ ≥ 1 and β, p > 0 (m={m}, ξ={xi}, β={beta_eff}, p={p})"),
        ));
    }
    let scale = (m + xi) as f64 / (beta_eff + p);
    integrate_semi_infinite_fallible(
        |g| {
            if g == 0.0 {
                return Ok(0.0);
            }
            Ok(((m as f64 - 1.0) * g.ln() - beta_eff * g).exp()
                * lower_inc_gamma(xi as f64, p * g)?)
        },
        scale,
        settings,
    )
}

/// E[g(γ)] over the Bessel-form density (any μ̃ > 0).
pub fn average_quadrature<G>(spec: &FadingSpec, g: G, settings: &QuadratureSettings) -> Result<f64>
where
    G: Fn(f64) -> f64,
{
    integrate_semi_infinite_fallible(
        |x| Ok(pdf_bessel(spec, x)? * g(x)),
        spec.zeta_tilde(),
        settings,
    )
}

/// E[g(γ)] over the integer-form density.
pub fn average_quadrature_integer<G>(
    spec: &FadingSpec,
    g: G,
    settings: &QuadratureSettings,
) -> Result<f64>
where
    G: Fn(f64) -> f64,
{
    let e = expansion(spec)?;
    integrate_semi_infinite_fallible(
        |x| Ok(pdf_integer_with(&e, x)? * g(x)),
        spec.zeta_tilde(),
        settings,
    )
}

/// 𝒜 ∫ f(γ) Q_a(√(ℬγ)) dγ with the exact tail probability.
pub fn aber_quadrature(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    noise: &NoiseSpec,
    settings: &QuadratureSettings,
) -> Result<f64> {
    average_quadrature(
        spec,
        |g| modulation.conditional(|x| qa_exact(noise, x), g),
        settings,
    )
}

/// ∫ f(γ) log₂(1 + γ) dγ.
pub fn acc_quadrature(spec: &FadingSpec, settings: &QuadratureSettings) -> Result<f64> {
    average_quadrature(spec, |g| g.ln_1p() / std::f64::consts::LN_2, settings)
}

/// Quadrature of the error rate with the exponential-sum fit in place of
/// Q_a, against the integer-form density. Isolates the kernel identity from
/// the fit error.
pub fn aber_quadrature_with_approx(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    approx: &ExpSumApprox,
    settings: &QuadratureSettings,
) -> Result<f64> {
    if approx.kind != ApproxKind::Decaying {
        return Err(Error::Approximation(
            "error-rate quadrature needs a decaying sum".into(),
        ));
    }
    average_quadrature_integer(
        spec,
        |g| modulation.a * approx.eval(modulation.b * g),
        settings,
    )
}

/// Capacity quadrature with the saturating fit in place of log₂(1 + γ).
pub fn acc_quadrature_with_approx(
    spec: &FadingSpec,
    approx: &ExpSumApprox,
    settings: &QuadratureSettings,
) -> Result<f64> {
    if approx.kind != ApproxKind::Saturating {
        return Err(Error::Approximation(
            "capacity quadrature needs a saturating sum".into(),
        ));
    }
    average_quadrature_integer(spec, |g| approx.eval(g), settings)
}

/// Gaussian-noise error rate by the MGF method,
/// (1/π) ∫₀^{(M−1)π/M} M_γ(ℬ/(2 sin²θ)) dθ.
///
/// For BPSK this is exact; for M-PSK it is the exact symbol error rate rather
/// than the two-term approximation of the tabulated model.
pub fn aber_mgf_awgn(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    noise: &NoiseSpec,
    settings: &QuadratureSettings,
) -> Result<f64> {
    if noise.a() != 2.0 {
        return Err(domain(
            "aber_mgf_awgn",
            format!(
                "the MGF method needs Gaussian noise (a = 2), got a = {}",
                noise.a()
            ),
        ));
    }
    if !matches!(modulation.scheme, Scheme::Bpsk | Scheme::Mpsk) {
        return Err(Error::Modulation(format!(
            "aber_mgf_awgn supports BPSK and MPSK, got {}",
            modulation.scheme
        )));
    }
    let m = modulation.m as f64;
    let upper = (m - 1.0) * PI / m;
    let v = integrate_fallible(
        |theta| {
            let s2 = theta.sin().powi(2);
            if s2 == 0.0 {
                return Ok(0.0);
            }
            mgf(spec, modulation.b / (2.0 * s2))
        },
        0.0,
        upper,
        settings,
    )?;
    Ok(v / PI)
}

/// Density of the combiner output by numerically convolving the two gamma
/// components (shape μ̃, means Ω₁ and Ω₂).
pub fn pdf_convolution(spec: &FadingSpec, snr: f64, settings: &QuadratureSettings) -> Result<f64> {
    if !(snr >= 0.0) || !snr.is_finite() {
        return Err(domain(
            "pdf_convolution",
            format!("SNR γ = {snr} must be finite and nonnegative"),
        ));
    }
    if snr == 0.0 {
        return pdf_bessel(spec, 0.0);
    }
    let mt = spec.mu_tilde();
    let (o1, o2) = spec.omegas();
    let half = 0.5 * snr;
    // x = half·s² on each half moves the x^{μ̃−1} endpoint behaviour into a
    // smooth factor.
    let left = |s: f64| {
        let x = half * s * s;
        2.0 * half * s * gamma_density(mt, o1, x) * gamma_density(mt, o2, snr - x)
    };
    let right = |s: f64| {
        let y = half * s * s;
        2.0 * half * s * gamma_density(mt, o1, snr - y) * gamma_density(mt, o2, y)
    };
    let a = integrate(left, 0.0, 1.0, settings)?;
    let b = integrate(right, 0.0, 1.0, settings)?;
    Ok(a.value + b.value)
}

/// μ̃ = 1 density (e^{−γ/Ω₂} − e^{−γ/Ω₁})/(Ω₂ − Ω₁).
pub fn hypoexponential_pdf(omega1: f64, omega2: f64, snr: f64) -> f64 {
    let d = omega2 - omega1;
    // e^{−γ/Ω₂}(1 − e^{−γ(1/Ω₁ − 1/Ω₂)}) avoids the subtraction.
    let rate_gap = 1.0 / omega1 - 1.0 / omega2;
    (-snr / omega2).exp() * -(-snr * rate_gap).exp_m1() / d
}

/// μ̃ = 1 distribution function 1 − (Ω₂e^{−γ/Ω₂} − Ω₁e^{−γ/Ω₁})/(Ω₂ − Ω₁).
pub fn hypoexponential_cdf(omega1: f64, omega2: f64, snr: f64) -> f64 {
    1.0 - (omega2 * (-snr / omega2).exp() - omega1 * (-snr / omega1).exp()) / (omega2 - omega1)
}

/// Seeded Monte-Carlo estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    /// Sample standard deviation over √n.
    pub std_error: f64,
    pub n_samples: u64,
    pub seed: u64,
}

/// Samples per independent stream. Chunk c draws from stream c of the seed,
/// so the result does not depend on how many threads run the chunks.
pub const MC_CHUNK: u64 = 1 << 16;

/// Mean and standard error of `draw` over `n` samples.
///
/// Chunk statistics are merged in chunk order with Chan's pairwise update,
/// which fixes the floating-point summation order.
pub fn monte_carlo<F>(n: u64, seed: u64, draw: F) -> MonteCarloEstimate
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let chunks = n.div_ceil(MC_CHUNK);
    let stats: Vec<(f64, f64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let len = MC_CHUNK.min(n - c * MC_CHUNK);
            let (mut mean, mut m2) = (0.0, 0.0);
            for i in 0..len {
                let v = draw(&mut rng);
                let delta = v - mean;
                mean += delta / (i + 1) as f64;
                m2 += delta * (v - mean);
            }
            (len as f64, mean, m2)
        })
        .collect();
    let (mut count, mut mean, mut m2) = (0.0, 0.0, 0.0);
    for (nb, mb, m2b) in stats {
        let total = count + nb;
        let delta = mb - mean;
        mean += delta * nb / total;
        m2 += m2b + delta * delta * count * nb / total;
        count = total;
    }
    let var = if count > 1.0 { m2 / (count - 1.0) } else { 0.0 };
    MonteCarloEstimate {
        mean,
        std_error: (var / count).sqrt(),
        n_samples: n,
        seed,
    }
}

fn check_n(function: &'static str, n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(domain(
            function,
            format!("n = {n} samples is below the minimum of {min}"),
        ));
    }
    Ok(())
}

/// Semi-analytic estimate: 𝒜 Q_a(√(ℬγ)) averaged over sampled γ.
pub fn aber_montecarlo(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    noise: &NoiseSpec,
    n: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    check_n("aber_montecarlo", n, 1_000)?;
    Ok(monte_carlo(n, seed, |rng| {
        let g = sample_snr(spec, rng);
        modulation.conditional(|x| qa_exact(noise, x), g)
    }))
}

/// Sample mean of log₂(1 + γ).
pub fn acc_montecarlo(spec: &FadingSpec, n: u64, seed: u64) -> Result<MonteCarloEstimate> {
    check_n("acc_montecarlo", n, 1_000)?;
    Ok(monte_carlo(n, seed, |rng| {
        sample_snr(spec, rng).ln_1p() / std::f64::consts::LN_2
    }))
}

/// Symbol-level BPSK: a unit-energy antipodal symbol scaled by √(2γ) is
/// received with unit-variance noise; an error occurs when the noise crosses
/// the decision threshold.
pub fn ber_symbol_sim_bpsk(
    spec: &FadingSpec,
    noise: &NoiseSpec,
    n: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    check_n("ber_symbol_sim_bpsk", n, 10_000)?;
    Ok(monte_carlo(n, seed, |rng| {
        let g = sample_snr(spec, rng);
        let u = sample_ggn(noise, rng);
        if u > (2.0 * g).sqrt() {
            1.0
        } else {
            0.0
        }
    }))
}

/// Kolmogorov–Smirnov 1% critical value for large n.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.6276 / (n as f64).sqrt()
}

/// KS distance between sorted samples and a continuous distribution
/// function evaluated at those samples.
pub fn ks_statistic(sorted: &[f64], cdf_at_samples: &[f64]) -> f64 {
    let n = sorted.len() as f64;
    cdf_at_samples
        .iter()
        .enumerate()
        .map(|(i, &f)| (f - i as f64 / n).max((i + 1) as f64 / n - f))
        .fold(0.0, f64::max)
}

/// Distribution function at each sorted point, integrating the Bessel-form
/// density between neighbours.
pub fn cdf_at_sorted(
    spec: &FadingSpec,
    sorted: &[f64],
    settings: &QuadratureSettings,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(sorted.len());
    let mut acc = 0.0;
    let mut prev = 0.0;
    let mt = spec.mu_tilde();
    for &x in sorted {
        if x > prev {
            acc += if prev == 0.0 && mt < 1.0 {
                // Square-root map removes the γ^{μ̃−1} singularity at zero.
                let r = x.sqrt();
                integrate_fallible(|s| Ok(2.0 * s * pdf_bessel(spec, s * s)?), 0.0, r, settings)?
            } else {
                integrate_fallible(|g| pdf_bessel(spec, g), prev, x, settings)?
            };
            prev = x;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Outcome of testing both Hoyt → η–μ mappings against simulated Hoyt
/// power X² + Y², X ~ N(0, σₓ²), Y ~ N(0, σᵧ²), q = σₓ/σᵧ.
#[derive(Debug, Clone, PartialEq)]
pub struct HoytArbitration {
    pub q: f64,
    pub n: usize,
    pub seed: u64,
    pub ks_paper: f64,
    pub ks_literature: f64,
    pub critical_1pct: f64,
    /// The mapping the data supports, if any passes.
    pub supported: Option<HoytMapping>,
}

impl HoytArbitration {
    pub fn paper_consistent(&self) -> bool {
        self.ks_paper <= self.critical_1pct
    }

    pub fn literature_consistent(&self) -> bool {
        self.ks_literature <= self.critical_1pct
    }
}

pub fn hoyt_arbitration(q: f64, n: usize, seed: u64) -> Result<HoytArbitration> {
    if !(q > 0.0 && q < 1.0) {
        return Err(domain(
            "hoyt_arbitration",
            format!("q = {q} must lie in (0, 1) to separate the mappings"),
        ));
    }
    if n < 100 {
        return Err(domain(
            "hoyt_arbitration",
            format!("n = {n} is too small for a KS test"),
        ));
    }
    // Unit mean power: σₓ² + σᵧ² = 1.
    let sy2 = 1.0 / (1.0 + q * q);
    let (sx, sy) = ((q * q * sy2).sqrt(), sy2.sqrt());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<f64> = (0..n)
        .map(|_| {
            let x: f64 = StandardNormal.sample(&mut rng);
            let y: f64 = StandardNormal.sample(&mut rng);
            (sx * x).powi(2) + (sy * y).powi(2)
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    let settings = QuadratureSettings::with_rel_tol(1e-9);
    let ks = |mapping| -> Result<f64> {
        let spec = from_special_case(SpecialCase::Hoyt { q, mapping }, 1, 1.0)?;
        let cdf = cdf_at_sorted(&spec, &samples, &settings)?;
        Ok(ks_statistic(&samples, &cdf))
    };
    let ks_paper = ks(HoytMapping::Paper)?;
    let ks_literature = ks(HoytMapping::Literature)?;
    let critical = ks_critical_1pct(n);
    let supported = match (ks_paper <= critical, ks_literature <= critical) {
        (true, false) => Some(HoytMapping::Paper),
        (false, true) => Some(HoytMapping::Literature),
        (true, true) if ks_paper < ks_literature => Some(HoytMapping::Paper),
        (true, true) => Some(HoytMapping::Literature),
        (false, false) => None,
    };
    Ok(HoytArbitration {
        q,
        n,
        seed,
        ks_paper,
        ks_literature,
        critical_1pct: critical,
        supported,
    })
}
