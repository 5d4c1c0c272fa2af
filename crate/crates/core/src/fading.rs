//! η–μ fading with L-branch maximal-ratio combining.
//!
//! Over L i.i.d. branches the combiner output SNR is again η–μ with
//! μ̃ = Lμ and ζ̃ = Lγ̄. Its MGF factors into two gamma MGFs with shape μ̃ and
//! means Ω₁ = ζ̃/(2(h+H)), Ω₂ = ζ̃/(2(h−H)); every representation below
//! (Bessel-form PDF, integer-form series, MGF, sampler) is built on that.

use rand::Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{domain, Error, Result};
use crate::special::{ln_bessel_i, ln_binomial, ln_factorial, ln_gamma, ln_lower_inc_gamma};

/// The two η parameterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    /// η ∈ (0, ∞): power ratio of in-phase to quadrature scattered waves.
    I,
    /// η ∈ (−1, 1): in-phase/quadrature correlation (the λ–μ form).
    II,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Format::I => write!(f, "I"),
            Format::II => write!(f, "II"),
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "i" | "1" => Ok(Format::I),
            "II" | "ii" | "2" => Ok(Format::II),
            other => Err(Error::Parse(format!(
                "unknown η–μ format {other:?} (expected I or II)"
            ))),
        }
    }
}

/// Which Hoyt → η–μ mapping a spec was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoytMapping {
    /// Format II, η = (1 − q)/(1 + q), μ = 1.
    Paper,
    /// Format I, η = q², μ = 1/2.
    Literature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialCase {
    Nakagami { m: f64 },
    Rayleigh,
    Hoyt { q: f64, mapping: HoytMapping },
}

/// η used for the η → 0 Nakagami-m limit.
pub const NAKAGAMI_EPSILON: f64 = 1e-6;

/// h and H from Table I, canonicalized so H ≥ 0, with h ± H kept separately
/// to avoid cancellation near the Nakagami limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HHPair {
    pub h: f64,
    pub big_h: f64,
    pub sum: f64,
    pub diff: f64,
}

impl HHPair {
    pub fn compute(format: Format, eta: f64) -> Result<Self> {
        match format {
            Format::I => {
                if !(eta > 0.0) || !eta.is_finite() {
                    return Err(domain(
                        "compute_hH",
                        format!("format I requires 0 < η < ∞, got {eta}"),
                    ));
                }
                let e = if eta > 1.0 { 1.0 / eta } else { eta };
                Ok(Self {
                    h: (1.0 / e + e + 2.0) / 4.0,
                    big_h: (1.0 / e - e) / 4.0,
                    sum: (1.0 + e) / (2.0 * e),
                    diff: (1.0 + e) / 2.0,
                })
            }
            Format::II => {
                if !(eta > -1.0 && eta < 1.0) {
                    return Err(domain(
                        "compute_hH",
                        format!("format II requires −1 < η < 1, got {eta}"),
                    ));
                }
                let e = eta.abs();
                let d = (1.0 - e) * (1.0 + e);
                Ok(Self {
                    h: 1.0 / d,
                    big_h: e / d,
                    sum: 1.0 / (1.0 - e),
                    diff: 1.0 / (1.0 + e),
                })
            }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.big_h == 0.0
    }
}

/// Table I lookup.
pub fn compute_hh(format: Format, eta: f64) -> Result<HHPair> {
    HHPair::compute(format, eta)
}

/// Full channel description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingSpec {
    pub format: Format,
    pub eta: f64,
    /// Per-branch μ. Integer for the closed forms; any positive value for the
    /// Bessel-form density and the oracles.
    pub mu: f64,
    pub branches: u32,
    /// Per-branch mean SNR γ̄ (linear).
    pub mean_snr: f64,
    pub origin: Option<SpecialCase>,
}

impl FadingSpec {
    pub fn new(format: Format, eta: f64, mu: f64, branches: u32, mean_snr: f64) -> Result<Self> {
        HHPair::compute(format, eta)?;
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(domain(
                "FadingSpec::new",
                format!("μ = {mu} must be positive"),
            ));
        }
        if branches == 0 {
            return Err(domain(
                "FadingSpec::new",
                "branch count L must be at least 1",
            ));
        }
        if !(mean_snr > 0.0) || !mean_snr.is_finite() {
            return Err(domain(
                "FadingSpec::new",
                format!("mean SNR γ̄ = {mean_snr} must be positive"),
            ));
        }
        Ok(Self {
            format,
            eta,
            mu,
            branches,
            mean_snr,
            origin: None,
        })
    }

    /// Same channel at another per-branch mean SNR.
    pub fn with_mean_snr(&self, mean_snr: f64) -> Result<Self> {
        let mut s = Self::new(self.format, self.eta, self.mu, self.branches, mean_snr)?;
        s.origin = self.origin;
        Ok(s)
    }

    pub fn with_branches(&self, branches: u32) -> Result<Self> {
        let mut s = Self::new(self.format, self.eta, self.mu, branches, self.mean_snr)?;
        s.origin = self.origin;
        Ok(s)
    }

    pub fn hh(&self) -> HHPair {
        HHPair::compute(self.format, self.eta).expect("validated at construction")
    }

    /// μ̃ = Lμ.
    pub fn mu_tilde(&self) -> f64 {
        self.mu * self.branches as f64
    }

    /// ζ̃ = Lγ̄, the mean combiner output SNR.
    pub fn zeta_tilde(&self) -> f64 {
        self.mean_snr * self.branches as f64
    }

    /// μ̃ as an integer, when it is one.
    pub fn integer_mu_tilde(&self) -> Option<u32> {
        let mt = self.mu_tilde();
        let r = mt.round();
        if (mt - r).abs() <= 1e-12 * mt.max(1.0) && (1.0..=170.0).contains(&r) {
            Some(r as u32)
        } else {
            None
        }
    }

    /// Means (Ω₁, Ω₂) of the two gamma components, Ω₁ ≤ Ω₂.
    pub fn omegas(&self) -> (f64, f64) {
        let hh = self.hh();
        let z = self.zeta_tilde();
        (z / (2.0 * hh.sum), z / (2.0 * hh.diff))
    }

    /// True when the paper's Hoyt mapping produced this spec.
    pub fn is_paper_mapping(&self) -> bool {
        matches!(
            self.origin,
            Some(SpecialCase::Hoyt {
                mapping: HoytMapping::Paper,
                ..
            })
        )
    }
}

/// Special-case constructors.
pub fn from_special_case(case: SpecialCase, branches: u32, mean_snr: f64) -> Result<FadingSpec> {
    let mut spec = match case {
        SpecialCase::Nakagami { m } => {
            if !(m > 0.0) {
                return Err(domain(
                    "from_special_case",
                    format!("Nakagami m = {m} must be positive"),
                ));
            }
            FadingSpec::new(Format::I, NAKAGAMI_EPSILON, m, branches, mean_snr)?
        }
        SpecialCase::Rayleigh => {
            FadingSpec::new(Format::I, NAKAGAMI_EPSILON, 1.0, branches, mean_snr)?
        }
        SpecialCase::Hoyt { q, mapping } => {
            if !(q > 0.0 && q <= 1.0) {
                return Err(domain(
                    "from_special_case",
                    format!("Hoyt q = {q} must lie in (0, 1]"),
                ));
            }
            match mapping {
                HoytMapping::Paper => {
                    FadingSpec::new(Format::II, (1.0 - q) / (1.0 + q), 1.0, branches, mean_snr)?
                }
                HoytMapping::Literature => {
                    FadingSpec::new(Format::I, q * q, 0.5, branches, mean_snr)?
                }
            }
        }
    };
    spec.origin = Some(case);
    Ok(spec)
}

/// One k-term of the integer-form density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerm {
    pub k: u32,
    /// ψₖ; may be ±∞ for very large μ̃, in which case use `ln_abs_psi`.
    pub psi: f64,
    pub ln_abs_psi: f64,
    /// +1 or −1.
    pub sign: f64,
    /// mₖ = μ̃ − k.
    pub m: u32,
    /// ξₖ = k + μ̃.
    pub xi: u32,
}

/// Coefficients of the finite-sum density
/// f(γ) = Σₖ ψₖ γ^{mₖ−1} e^{−βγ} γ_inc(ξₖ, pγ).
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerFormExpansion {
    pub mu_tilde: u32,
    pub zeta_tilde: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub p: f64,
    pub beta: f64,
    pub terms: Vec<ExpansionTerm>,
}

pub fn expansion(spec: &FadingSpec) -> Result<IntegerFormExpansion> {
    let n = spec.integer_mu_tilde().ok_or_else(|| {
        domain(
            "expansion",
            format!(
                "μ̃ = Lμ = {} must be an integer in [1, 170]",
                spec.mu_tilde()
            ),
        )
    })?;
    let hh = spec.hh();
    if hh.is_degenerate() {
        return Err(Error::Degenerate(format!(
            "H = 0 (η = {} in format {}): the integer-form expansion divides by p = 0",
            spec.eta, spec.format
        )));
    }
    let nf = n as f64;
    let z = spec.zeta_tilde();
    let omega1 = z / (2.0 * hh.sum);
    let omega2 = z / (2.0 * hh.diff);
    // 1/Ω₁ − 1/Ω₂ = 4H/ζ̃ and Ω₂ − Ω₁ = ζ̃H/((h+H)(h−H)), both cancellation-free.
    let p = 4.0 * nf * hh.big_h / z;
    let beta = nf / omega2;
    let spread = z * hh.big_h / (hh.sum * hh.diff);
    let ln_lead = nf * (nf / spread).ln() - 2.0 * ln_factorial(n - 1);
    let terms = (0..n)
        .map(|k| {
            let ln_abs_psi = ln_lead + ln_binomial(n - 1, k) - k as f64 * p.ln();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            ExpansionTerm {
                k,
                psi: sign * ln_abs_psi.exp(),
                ln_abs_psi,
                sign,
                m: n - k,
                xi: k + n,
            }
        })
        .collect();
    Ok(IntegerFormExpansion {
        mu_tilde: n,
        zeta_tilde: z,
        omega1,
        omega2,
        p,
        beta,
        terms,
    })
}

/// Signed sum with Neumaier compensation.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn check_snr(function: &'static str, snr: f64) -> Result<()> {
    if !(snr >= 0.0) || !snr.is_finite() {
        return Err(domain(
            function,
            format!("SNR γ = {snr} must be finite and nonnegative"),
        ));
    }
    Ok(())
}

/// Gamma density with shape k and mean `mean`.
pub fn gamma_density(shape: f64, mean: f64, x: f64) -> f64 {
    if x == 0.0 {
        return match shape.partial_cmp(&1.0) {
            Some(std::cmp::Ordering::Greater) => 0.0,
            Some(std::cmp::Ordering::Equal) => 1.0 / mean,
            _ => f64::INFINITY,
        };
    }
    let scale = mean / shape;
    ((shape - 1.0) * x.ln() - x / scale - ln_gamma(shape).expect("shape > 0") - shape * scale.ln())
        .exp()
}

/// Bessel-form density of the combiner output SNR; accepts any μ̃ > 0.
pub fn pdf_bessel(spec: &FadingSpec, snr: f64) -> Result<f64> {
    check_snr("pdf_bessel", snr)?;
    let hh = spec.hh();
    let mt = spec.mu_tilde();
    let z = spec.zeta_tilde();
    if hh.is_degenerate() {
        // Small-argument Bessel limit: gamma with shape 2μ̃.
        return Ok(gamma_density(2.0 * mt, z, snr));
    }
    if snr == 0.0 {
        return Ok(if mt > 0.5 {
            0.0
        } else if mt == 0.5 {
            hh.h.sqrt() / z
        } else {
            f64::INFINITY
        });
    }
    let nu = mt - 0.5;
    let x = 2.0 * mt * hh.big_h * snr / z;
    let ln_norm = (2.0 * std::f64::consts::PI.sqrt()).ln() + (mt + 0.5) * mt.ln() + mt * hh.h.ln()
        - ln_gamma(mt)?
        - nu * hh.big_h.ln()
        - (mt + 0.5) * z.ln();
    let ln_f = ln_norm + nu * snr.ln() - 2.0 * mt * hh.h * snr / z + ln_bessel_i(nu, x)?;
    Ok(ln_f.exp())
}

/// Integer-form finite-sum density (requires integer μ̃ and H > 0).
pub fn pdf_integer(spec: &FadingSpec, snr: f64) -> Result<f64> {
    check_snr("pdf_integer", snr)?;
    let e = expansion(spec)?;
    pdf_integer_with(&e, snr)
}

/// Below this value of pγ the alternating k-sum is regrouped into a
/// positive power series; above it the direct sum has no cancellation.
const REGROUP_LIMIT: f64 = 700.0;

/// Same as [`pdf_integer`] for a precomputed expansion.
///
/// For small pγ the k-terms nearly cancel (by ~10⁶ at μ̃ = 9, γ = 0.01ζ̃).
/// Expanding γ(ξₖ, x) = x^ξₖ e⁻ˣ Σⱼ xʲ Γ(ξₖ)/Γ(ξₖ+j+1) and summing over k
/// first collapses each inner sum to Γ(μ̃)Γ(j+μ̃)/(Γ(j+2μ̃) j!), giving
/// f = ψ₀ p^μ̃ Γ(μ̃) γ^{2μ̃−1} e^{−(β+p)γ} Σⱼ xʲ Γ(j+μ̃)/(Γ(j+2μ̃) j!)
/// with no subtraction at all.
pub fn pdf_integer_with(e: &IntegerFormExpansion, snr: f64) -> Result<f64> {
    if snr == 0.0 {
        return Ok(0.0);
    }
    let x = e.p * snr;
    if x < REGROUP_LIMIT {
        pdf_integer_regrouped(e, snr)
    } else {
        pdf_integer_direct(e, snr)
    }
}

/// The k-sum evaluated term by term.
pub fn pdf_integer_direct(e: &IntegerFormExpansion, snr: f64) -> Result<f64> {
    if snr == 0.0 {
        return Ok(0.0);
    }
    let ln_g = snr.ln();
    let x = e.p * snr;
    let mut parts = Vec::with_capacity(e.terms.len());
    for t in &e.terms {
        let ln_term = t.ln_abs_psi + (t.m as f64 - 1.0) * ln_g - e.beta * snr
            + ln_lower_inc_gamma(t.xi as f64, x)?;
        parts.push(t.sign * ln_term.exp());
    }
    Ok(compensated_sum(parts))
}

fn pdf_integer_regrouped(e: &IntegerFormExpansion, snr: f64) -> Result<f64> {
    let n = e.mu_tilde as f64;
    let x = e.p * snr;
    // term_j = xʲ Γ(j+n)/(Γ(j+2n) j!) relative to term_0 = Γ(n)/Γ(2n).
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut j = 0.0;
    loop {
        term *= x * (j + n) / ((j + 2.0 * n) * (j + 1.0));
        sum += term;
        j += 1.0;
        if j > x && term < sum * f64::EPSILON * 0.25 {
            break;
        }
    }
    let ln_f = e.terms[0].ln_abs_psi + n * e.p.ln() + 2.0 * ln_gamma(n)? - ln_gamma(2.0 * n)?
        + (2.0 * n - 1.0) * snr.ln()
        - (e.beta + e.p) * snr
        + sum.ln();
    Ok(ln_f.exp())
}

/// Moment generating function E[e^{−sγ}] of the combiner output SNR,
/// [4μ̃²h / ((2(h−H)μ̃ + sζ̃)(2(h+H)μ̃ + sζ̃))]^{μ̃}, evaluated in the
/// factored form (1 + sΩ₁/μ̃)^{−μ̃}(1 + sΩ₂/μ̃)^{−μ̃}.
pub fn mgf(spec: &FadingSpec, s: f64) -> Result<f64> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(domain(
            "mgf",
            format!("s = {s} must be finite and nonnegative"),
        ));
    }
    let mt = spec.mu_tilde();
    let (o1, o2) = spec.omegas();
    Ok((-mt * ((s * o1 / mt).ln_1p() + (s * o2 / mt).ln_1p())).exp())
}

/// Product of L per-branch MGFs, each in the unfactored
/// 4μ²h / (2[(h−H)μ + sγ̄][2(h+H)μ + sγ̄]) form with h kept explicit.
pub fn mgf_branch_product(spec: &FadingSpec, s: f64) -> Result<f64> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(domain(
            "mgf_branch_product",
            format!("s = {s} must be finite and nonnegative"),
        ));
    }
    let hh = spec.hh();
    let mu = spec.mu;
    let g = spec.mean_snr;
    let single = (4.0 * mu * mu * hh.h
        / ((2.0 * hh.diff * mu + s * g) * (2.0 * hh.sum * mu + s * g)))
        .powf(mu);
    Ok(single.powi(spec.branches as i32))
}

/// Exact draw of the combiner output SNR as the sum of two gamma variates.
pub fn sample_snr<R: Rng + ?Sized>(spec: &FadingSpec, rng: &mut R) -> f64 {
    let mt = spec.mu_tilde();
    let (o1, o2) = spec.omegas();
    let g1 = Gamma::new(mt, o1 / mt).expect("positive shape and scale");
    let g2 = Gamma::new(mt, o2 / mt).expect("positive shape and scale");
    g1.sample(rng) + g2.sample(rng)
}
