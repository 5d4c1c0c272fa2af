//! Closed-form average error rate and ergodic capacity.
//!
//! Both reduce to one building block, the kernel integral
//! K(m, β̃, ξ, p) = ∫₀^∞ γ^{m−1} e^{−β̃γ} γ(ξ, pγ) dγ, weighted by the
//! integer-form density coefficients and the exponential-sum fit.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::approx::{ApproxKind, ExpSumApprox};
use crate::error::{domain, Error, Result};
use crate::fading::{compensated_sum, expansion, FadingSpec, IntegerFormExpansion};
use crate::special::{gauss_2f1, ln_binomial, ln_factorial, ln_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Bfsk,
    Bpsk,
    Qpsk,
    Mpam,
    Mpsk,
    MqamRect,
    MqamNonrect,
}

impl Scheme {
    pub const ALL: [Scheme; 7] = [
        Scheme::Bfsk,
        Scheme::Bpsk,
        Scheme::Qpsk,
        Scheme::Mpam,
        Scheme::Mpsk,
        Scheme::MqamRect,
        Scheme::MqamNonrect,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Scheme::Bfsk => "BFSK",
            Scheme::Bpsk => "BPSK",
            Scheme::Qpsk => "QPSK",
            Scheme::Mpam => "MPAM",
            Scheme::Mpsk => "MPSK",
            Scheme::MqamRect => "MQAM_rect",
            Scheme::MqamNonrect => "MQAM_nonrect",
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        Scheme::ALL
            .iter()
            .copied()
            .find(|sc| sc.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| {
                Error::Modulation(format!(
                    "unknown scheme {t:?} (expected one of BFSK, BPSK, QPSK, MPAM, MPSK, MQAM_rect, MQAM_nonrect)"
                ))
            })
    }
}

/// Modulation with conditional error model 𝒜·Q_a(√(ℬγ)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationSpec {
    pub scheme: Scheme,
    pub m: u32,
    pub a: f64,
    pub b: f64,
}

impl ModulationSpec {
    pub fn new(scheme: Scheme, m: u32) -> Result<Self> {
        let bad = |why: &str| Err(Error::Modulation(format!("{scheme} with M = {m}: {why}")));
        let pow2 = m >= 2 && m.is_power_of_two();
        match scheme {
            Scheme::Bfsk | Scheme::Bpsk if m != 2 => return bad("binary scheme requires M = 2"),
            Scheme::Qpsk if m != 4 => return bad("QPSK requires M = 4"),
            Scheme::Mpam | Scheme::Mpsk if !pow2 => return bad("M must be a power of two ≥ 2"),
            Scheme::MqamRect | Scheme::MqamNonrect if !(pow2 && m >= 4) => {
                return bad("M must be a power of two ≥ 4")
            }
            _ => {}
        }
        let (a, b) = table_constants(scheme, m);
        Ok(Self { scheme, m, a, b })
    }

    pub fn bpsk() -> Self {
        Self::new(Scheme::Bpsk, 2).expect("BPSK is valid")
    }

    /// Conditional error probability 𝒜·q(√(ℬγ)) for a tail function q.
    pub fn conditional(&self, q: impl Fn(f64) -> f64, snr: f64) -> f64 {
        self.a * q((self.b * snr).sqrt())
    }
}

pub fn modulation_params(scheme: Scheme, m: u32) -> Result<ModulationSpec> {
    ModulationSpec::new(scheme, m)
}

/// (𝒜, ℬ) straight from the table formulas.
pub fn table_constants(scheme: Scheme, m: u32) -> (f64, f64) {
    let mf = m as f64;
    match scheme {
        Scheme::Bfsk => (1.0, 1.0),
        Scheme::Bpsk => (1.0, 2.0),
        Scheme::Qpsk => (2.0, 1.0),
        Scheme::Mpam => (2.0 * (mf - 1.0) / mf, 6.0 / (mf * mf - 1.0)),
        Scheme::Mpsk => {
            let s = (PI / mf).sin();
            (2.0, 2.0 * s * s)
        }
        Scheme::MqamRect => {
            let r = mf.sqrt();
            (4.0 * (r - 1.0) / r, 3.0 / (mf - 1.0))
        }
        Scheme::MqamNonrect => (4.0, 3.0 / (mf - 1.0)),
    }
}

/// One sample of a performance curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerformancePoint {
    pub mean_snr_db: f64,
    pub value: f64,
}

fn check_kernel_args(m: u32, beta_eff: f64, xi: u32, p: f64) -> Result<()> {
    if m == 0 || xi == 0 {
        return Err(domain(
            "kernel_k",
            format!("m = {m} and ξ = {xi} must be positive integers"),
        ));
    }
    if !(beta_eff > 0.0) || !beta_eff.is_finite() {
        return Err(domain(
            "kernel_k",
            format!("β̃ = {beta_eff} must be positive"),
        ));
    }
    if !(p >= 0.0) || !p.is_finite() {
        return Err(domain("kernel_k", format!("p = {p} must be nonnegative")));
    }
    Ok(())
}

/// ln K(m, β̃, ξ, p), or −∞ when p = 0.
///
/// Pfaff-transforming the ₂F₁ gives a polynomial in w = p/(β̃+p) whose signs
/// alternate; re-expanding (1 − wt)^{m−1} around v = 1 − w turns it into
/// K = Σᵢ C(m−1,i) Γ(ξ+i) Γ(m−i) p^ξ β̃^{i−m} (β̃+p)^{−ξ−i}
/// with only positive terms, summed here as a log-sum-exp.
pub fn ln_kernel_k(m: u32, beta_eff: f64, xi: u32, p: f64) -> Result<f64> {
    check_kernel_args(m, beta_eff, xi, p)?;
    if p == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let ln_p = p.ln();
    let ln_b = beta_eff.ln();
    let ln_bp = (beta_eff + p).ln();
    let xf = xi as f64;
    let mut logs = Vec::with_capacity(m as usize);
    for i in 0..m {
        let fi = i as f64;
        logs.push(
            ln_binomial(m - 1, i)
                + ln_gamma(xf + fi)?
                + ln_factorial(m - i - 1)
                + xf * ln_p
                + (fi - m as f64) * ln_b
                - (xf + fi) * ln_bp,
        );
    }
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let s: f64 = logs.iter().map(|l| (l - top).exp()).sum();
    Ok(top + s.ln())
}

/// K(m, β̃, ξ, p) = ∫₀^∞ γ^{m−1} e^{−β̃γ} γ(ξ, pγ) dγ.
pub fn kernel_k(m: u32, beta_eff: f64, xi: u32, p: f64) -> Result<f64> {
    let v = ln_kernel_k(m, beta_eff, xi, p)?.exp();
    if v.is_infinite() {
        return Err(Error::Overflow {
            function: "kernel_k",
            detail: format!("K({m}, {beta_eff}, {xi}, {p})"),
        });
    }
    Ok(v)
}

/// The same kernel through p^ξ Γ(m+ξ)/(ξ β̃^{m+ξ}) · ₂F₁(ξ, m+ξ; ξ+1; −p/β̃).
pub fn kernel_k_hypergeometric(m: u32, beta_eff: f64, xi: u32, p: f64) -> Result<f64> {
    check_kernel_args(m, beta_eff, xi, p)?;
    if p == 0.0 {
        return Ok(0.0);
    }
    let (mf, xf) = (m as f64, xi as f64);
    let ln_pre = xf * p.ln() + ln_gamma(mf + xf)? - xf.ln() - (mf + xf) * beta_eff.ln();
    Ok(ln_pre.exp() * gauss_2f1(xf, mf + xf, xf + 1.0, -p / beta_eff)?)
}

/// Condition number Σ|terms|/|Σ terms| above which the k-sum is replaced by
/// its regrouped form. At 1e5 the direct sum still carries ≥ 11 digits.
pub const KERNEL_SUM_CONDITION_LIMIT: f64 = 1e5;

/// Σₖ ψₖ K(mₖ, β + s, ξₖ, p) summed term by term, with its condition number.
pub fn kernel_sum_direct(e: &IntegerFormExpansion, s: f64) -> Result<(f64, f64)> {
    let beta_eff = e.beta + s;
    let mut parts = Vec::with_capacity(e.terms.len());
    for t in &e.terms {
        let ln_k = ln_kernel_k(t.m, beta_eff, t.xi, e.p)?;
        parts.push(t.sign * (t.ln_abs_psi + ln_k).exp());
    }
    let abs: f64 = parts.iter().map(|v| v.abs()).sum();
    let sum = compensated_sum(parts);
    Ok((sum, abs / sum.abs()))
}

/// Σₖ ψₖ K(mₖ, β + s, ξₖ, p).
///
/// The ψₖ carry (−1/p)ᵏ, so near H = 0 the terms cancel heavily. Summing
/// over k first, as for the density, collapses the double sum to the
/// factored (1+sΩ₁/μ̃)^{−μ̃}(1+sΩ₂/μ̃)^{−μ̃}; that form is used when the
/// direct sum is ill-conditioned.
fn kernel_sum(e: &IntegerFormExpansion, s: f64) -> Result<f64> {
    let (sum, cond) = kernel_sum_direct(e, s)?;
    if cond <= KERNEL_SUM_CONDITION_LIMIT {
        return Ok(sum);
    }
    let n = e.mu_tilde as f64;
    Ok((-n * ((s * e.omega1 / n).ln_1p() + (s * e.omega2 / n).ln_1p())).exp())
}

/// 1 − Σₖ ψₖ K(mₖ, β + s, ξₖ, p), the capacity increment of one term.
fn one_minus_kernel_sum(e: &IntegerFormExpansion, base: f64, s: f64) -> Result<f64> {
    let (sum, cond) = kernel_sum_direct(e, s)?;
    if cond <= KERNEL_SUM_CONDITION_LIMIT {
        return Ok(base - sum);
    }
    let n = e.mu_tilde as f64;
    Ok(-(-n * ((s * e.omega1 / n).ln_1p() + (s * e.omega2 / n).ln_1p())).exp_m1())
}

fn require_kind(approx: &ExpSumApprox, kind: ApproxKind, what: &str) -> Result<()> {
    if approx.kind != kind {
        return Err(Error::Approximation(format!(
            "{what} needs a {kind} exponential sum, got {} ({})",
            approx.kind, approx.name
        )));
    }
    Ok(())
}

/// Symmetric point H = 0: the output SNR is gamma with shape 2μ̃, so
/// E[e^{−sγ}] = (1 + sζ̃/(2μ̃))^{−2μ̃}.
fn degenerate_mgf(spec: &FadingSpec, s: f64) -> f64 {
    let mt = spec.mu_tilde();
    (-2.0 * mt * (s * spec.zeta_tilde() / (2.0 * mt)).ln_1p()).exp()
}

fn degenerate_one_minus_mgf(spec: &FadingSpec, s: f64) -> f64 {
    let mt = spec.mu_tilde();
    -(-2.0 * mt * (s * spec.zeta_tilde() / (2.0 * mt)).ln_1p()).exp_m1()
}

/// Average error rate 𝒜 Σᵢ Σₖ αᵢ ψₖ K(mₖ, β + λᵢℬ, ξₖ, p).
///
/// This is the error rate of the 𝒜·Q_a(√(ℬγ)) model (a symbol error rate
/// for the multilevel schemes). Values are not clamped.
pub fn aber(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    noise_approx: &ExpSumApprox,
) -> Result<f64> {
    require_kind(noise_approx, ApproxKind::Decaying, "aber")?;
    if spec.hh().is_degenerate() {
        let v = compensated_sum(
            noise_approx
                .terms
                .iter()
                .map(|t| t.alpha * degenerate_mgf(spec, t.lambda * modulation.b)),
        );
        return Ok(modulation.a * v);
    }
    let e = expansion(spec)?;
    let mut parts = Vec::with_capacity(noise_approx.terms.len());
    for t in &noise_approx.terms {
        parts.push(t.alpha * kernel_sum(&e, t.lambda * modulation.b)?);
    }
    Ok(modulation.a * compensated_sum(parts))
}

/// Ergodic capacity Σᵢ αᵢ Σₖ ψₖ [K(mₖ, β, ξₖ, p) − K(mₖ, β + λᵢ, ξₖ, p)] in
/// bits/s/Hz.
pub fn acc(spec: &FadingSpec, log2_approx: &ExpSumApprox) -> Result<f64> {
    require_kind(log2_approx, ApproxKind::Saturating, "acc")?;
    if spec.hh().is_degenerate() {
        return Ok(compensated_sum(
            log2_approx
                .terms
                .iter()
                .map(|t| t.alpha * degenerate_one_minus_mgf(spec, t.lambda)),
        ));
    }
    let e = expansion(spec)?;
    let base = kernel_sum(&e, 0.0)?;
    let mut parts = Vec::with_capacity(log2_approx.terms.len());
    for t in &log2_approx.terms {
        parts.push(t.alpha * one_minus_kernel_sum(&e, base, t.lambda)?);
    }
    Ok(compensated_sum(parts))
}

/// Closed-form ABER through the MGF: 𝒜 Σᵢ αᵢ M_γ(λᵢℬ). Algebraically equal
/// to [`aber`]; kept as an independent check of the kernel sum.
pub fn aber_via_mgf(
    spec: &FadingSpec,
    modulation: &ModulationSpec,
    noise_approx: &ExpSumApprox,
) -> Result<f64> {
    require_kind(noise_approx, ApproxKind::Decaying, "aber_via_mgf")?;
    let mut parts = Vec::with_capacity(noise_approx.terms.len());
    for t in &noise_approx.terms {
        parts.push(t.alpha * crate::fading::mgf(spec, t.lambda * modulation.b)?);
    }
    Ok(modulation.a * compensated_sum(parts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Aber,
    Acc,
}

impl std::fmt::Display for CurveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CurveKind::Aber => "aber",
            CurveKind::Acc => "acc",
        })
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Evaluate a metric at each per-branch mean SNR in `grid_db`.
///
/// Points are computed in parallel; the output follows grid order.
pub fn curve(
    kind: CurveKind,
    spec: &FadingSpec,
    modulation: Option<&ModulationSpec>,
    approx: &ExpSumApprox,
    grid_db: &[f64],
) -> Result<Vec<PerformancePoint>> {
    if grid_db.is_empty() {
        return Err(domain("curve", "empty SNR grid"));
    }
    if let Some(w) = grid_db.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(domain(
            "curve",
            format!("grid must be strictly increasing ({} then {})", w[0], w[1]),
        ));
    }
    if kind == CurveKind::Aber && modulation.is_none() {
        return Err(Error::Modulation("an ABER curve needs a modulation".into()));
    }
    grid_db
        .par_iter()
        .map(|&db| {
            let point = spec
                .with_mean_snr(db_to_linear(db))
                .and_then(|s| match kind {
                    CurveKind::Aber => aber(&s, modulation.expect("checked above"), approx),
                    CurveKind::Acc => acc(&s, approx),
                });
            point
                .map(|value| PerformancePoint {
                    mean_snr_db: db,
                    value,
                })
                .map_err(|e| Error::AtSnr {
                    snr_db: db,
                    source: Box::new(e),
                })
        })
        .collect()
}
