//! Four-term exponential-sum approximations.
//!
//! Decaying sums Σαᵢe^{−λᵢx} approximate the noise tail Q_a(√x); saturating
//! sums Σαᵢ(1 − e^{−λᵢx}) approximate log₂(1 + x). Both keep the fading
//! average inside the same kernel-integral family.

use std::sync::LazyLock;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::noise::{qa_exact, NoiseSpec};
use crate::records::KvDoc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxKind {
    Decaying,
    Saturating,
}

impl std::fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ApproxKind::Decaying => "decaying",
            ApproxKind::Saturating => "saturating",
        })
    }
}

impl std::str::FromStr for ApproxKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "decaying" => Ok(ApproxKind::Decaying),
            "saturating" => Ok(ApproxKind::Saturating),
            other => Err(Error::Parse(format!(
                "unknown approximation kind {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpTerm {
    pub alpha: f64,
    pub lambda: f64,
}

/// Log-spaced evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitGrid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl FitGrid {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            points: 200,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let (l0, l1) = (self.lo.ln(), self.hi.ln());
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.lo
                } else if i + 1 == n {
                    self.hi
                } else {
                    (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp()
                }
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo > 0.0 && self.hi > self.lo && self.hi.is_finite()) || self.points < 2 {
            return Err(Error::Approximation(format!(
                "fit grid needs 0 < lo < hi and at least two points, got [{}, {}] with {} points",
                self.lo, self.hi, self.points
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumApprox {
    pub name: String,
    pub kind: ApproxKind,
    pub terms: Vec<ExpTerm>,
    pub grid: FitGrid,
    /// Max |approx − target| over `grid`.
    pub max_abs_err: f64,
}

impl ExpSumApprox {
    pub fn eval(&self, x: f64) -> f64 {
        eval_approx(self, x)
    }

    pub fn fit_lo(&self) -> f64 {
        self.grid.lo
    }

    pub fn fit_hi(&self) -> f64 {
        self.grid.hi
    }

    /// Multiply every αᵢ by `factor`; the error must be re-measured.
    pub fn scaled(&self, factor: f64, name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    alpha: t.alpha * factor,
                    lambda: t.lambda,
                })
                .collect(),
            max_abs_err: f64::NAN,
            ..self.clone()
        }
    }

    pub fn alpha_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.alpha).sum()
    }

    /// Recompute `max_abs_err` against `target` on the stored grid.
    pub fn remeasure(mut self, target: &dyn Fn(f64) -> f64) -> Self {
        self.max_abs_err = measure_max_abs_err(&self, target, &self.grid);
        self
    }

    pub fn to_record(&self) -> String {
        let mut doc = KvDoc::new();
        doc.set("name", &self.name);
        doc.set("kind", self.kind);
        doc.set("n_terms", self.terms.len());
        doc.set("fit_lo", format!("{:?}", self.grid.lo));
        doc.set("fit_hi", format!("{:?}", self.grid.hi));
        doc.set("grid_points", self.grid.points);
        doc.set("max_abs_err", format!("{:?}", self.max_abs_err));
        for (i, t) in self.terms.iter().enumerate() {
            doc.set(&format!("term.{i}.alpha"), format!("{:?}", t.alpha));
            doc.set(&format!("term.{i}.lambda"), format!("{:?}", t.lambda));
        }
        doc.to_text()
    }

    pub fn from_record(text: &str) -> Result<Self> {
        let doc = KvDoc::parse(text)?;
        let n = doc.u64("n_terms")? as usize;
        let terms = (0..n)
            .map(|i| {
                Ok(ExpTerm {
                    alpha: doc.f64(&format!("term.{i}.alpha"))?,
                    lambda: doc.f64(&format!("term.{i}.lambda"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if terms
            .iter()
            .any(|t| !(t.lambda > 0.0) || !t.alpha.is_finite())
        {
            return Err(Error::Parse(
                "fit record has a nonpositive λ or non-finite α".into(),
            ));
        }
        Ok(Self {
            name: doc.require("name")?.to_string(),
            kind: doc.require("kind")?.parse()?,
            terms,
            grid: FitGrid {
                lo: doc.f64("fit_lo")?,
                hi: doc.f64("fit_hi")?,
                points: doc.u64("grid_points")? as usize,
            },
            max_abs_err: doc.f64("max_abs_err")?,
        })
    }
}

/// Σαᵢe^{−λᵢx} or Σαᵢ(1 − e^{−λᵢx}).
pub fn eval_approx(approx: &ExpSumApprox, x: f64) -> f64 {
    match approx.kind {
        ApproxKind::Decaying => approx
            .terms
            .iter()
            .map(|t| t.alpha * (-t.lambda * x).exp())
            .sum(),
        ApproxKind::Saturating => approx
            .terms
            .iter()
            .map(|t| -t.alpha * (-t.lambda * x).exp_m1())
            .sum(),
    }
}

pub fn measure_max_abs_err(
    approx: &ExpSumApprox,
    target: &dyn Fn(f64) -> f64,
    grid: &FitGrid,
) -> f64 {
    grid.values()
        .into_iter()
        .map(|x| (eval_approx(approx, x) - target(x)).abs())
        .fold(0.0, f64::max)
}

/// Table IV rows: (a, [α₁..α₄], [λ₁..λ₄]); columns δᵢ → αᵢ, σᵢ → λᵢ.
pub const TABLE_QA: [(f64, [f64; 4], [f64; 4]); 5] = [
    (
        0.5,
        [44.920, 126.460, 389.400, 96.540],
        [0.130, 2.311, 12.52, 0.629],
    ),
    (
        1.0,
        [0.068, 0.202, 0.182, 0.255],
        [0.217, 2.185, 0.657, 12.640],
    ),
    (
        1.5,
        [0.065, 0.149, 0.136, 0.125],
        [0.341, 0.712, 10.57, 1.945],
    ),
    (
        2.0,
        [0.099, 0.157, 0.124, 0.119],
        [1.981, 0.534, 0.852, 10.268],
    ),
    (
        2.5,
        [0.126, 1.104, -1.125, 0.442],
        [9.395, 0.833, 0.994, 1.292],
    ),
];

/// Grid on which preset deviations are measured.
pub const PRESET_GRID: FitGrid = FitGrid {
    lo: 0.1,
    hi: 40.0,
    points: 200,
};

/// Λ₀^{2/a−1}: the ratio between the tabulated fits and the unit-area tail.
pub fn preset_scale(a: f64) -> Result<f64> {
    Ok(NoiseSpec::lambda0_for(a)?.powf(2.0 / a - 1.0))
}

/// The tabulated Q_a(√x) fit, verbatim.
///
/// The rows approximate Λ₀^{2/a−1}·Q_a(√x) (their α sums equal
/// Λ₀^{2/a−1}/2, not 1/2); `max_abs_err` is measured against that scaled
/// tail. Use [`preset_qa_unit`] for the unit-variance tail probability.
pub fn preset_qa(a: f64) -> Result<ExpSumApprox> {
    let (_, alpha, lambda) = TABLE_QA.iter().find(|(pa, _, _)| *pa == a).ok_or_else(|| {
        Error::Approximation(format!(
            "no tabulated Q_a fit for a = {a} (available: 0.5, 1, 1.5, 2, 2.5); use fit_expsum"
        ))
    })?;
    let noise = NoiseSpec::new(a)?;
    let scale = preset_scale(a)?;
    let approx = ExpSumApprox {
        name: format!("table-qa{a}"),
        kind: ApproxKind::Decaying,
        terms: alpha
            .iter()
            .zip(lambda)
            .map(|(&alpha, &lambda)| ExpTerm { alpha, lambda })
            .collect(),
        grid: PRESET_GRID,
        max_abs_err: f64::NAN,
    };
    Ok(approx.remeasure(&|x| scale * qa_exact(&noise, x.sqrt())))
}

/// Tabulated fit rescaled by Λ₀^{1−2/a} so it approximates the unit-variance
/// tail probability Q_a(√x) used by the error-rate integral.
pub fn preset_qa_unit(a: f64) -> Result<ExpSumApprox> {
    let raw = preset_qa(a)?;
    let noise = NoiseSpec::new(a)?;
    let unit = raw.scaled(1.0 / preset_scale(a)?, format!("table-qa{a}-unit"));
    Ok(unit.remeasure(&|x| qa_exact(&noise, x.sqrt())))
}

/// Function being approximated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FitTarget {
    /// Q_a(√x) for unit-variance noise.
    Qa(NoiseSpec),
    /// log₂(1 + x).
    Log2,
}

impl FitTarget {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FitTarget::Qa(noise) => qa_exact(noise, x.sqrt()),
            FitTarget::Log2 => x.ln_1p() / std::f64::consts::LN_2,
        }
    }

    pub fn name(&self) -> String {
        match self {
            FitTarget::Qa(n) => format!("qa{}", n.a()),
            FitTarget::Log2 => "log2".to_string(),
        }
    }

    /// Residual weighting used for this target: relative for the decaying
    /// tail (values span many decades), absolute for log₂.
    pub fn weighting(&self) -> Weighting {
        match self {
            FitTarget::Qa(_) => Weighting::Relative,
            FitTarget::Log2 => Weighting::Absolute,
        }
    }
}

impl std::str::FromStr for FitTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "log2" {
            return Ok(FitTarget::Log2);
        }
        if let Some(a) = s.strip_prefix("qa") {
            let a: f64 = a
                .parse()
                .map_err(|_| Error::Parse(format!("bad noise shape in fit target {s:?}")))?;
            return Ok(FitTarget::Qa(NoiseSpec::new(a)?));
        }
        Err(Error::Parse(format!(
            "unknown fit target {s:?} (expected log2 or qa<a>)"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weighting {
    /// Residuals divided by max(|target|, 1e−6).
    Relative,
    Absolute,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    pub n_terms: usize,
    pub weighting: Weighting,
    pub max_iterations: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            n_terms: 4,
            weighting: Weighting::Relative,
            max_iterations: 5000,
        }
    }
}

struct Problem<'a> {
    xs: &'a [f64],
    targets: &'a [f64],
    weights: &'a [f64],
    kind: ApproxKind,
    n: usize,
}

impl Problem<'_> {
    /// Basis value and ∂/∂lnλ (per unit α) of one term at x.
    fn basis(&self, lambda: f64, x: f64) -> (f64, f64) {
        let e = (-lambda * x).exp();
        match self.kind {
            ApproxKind::Decaying => (e, -lambda * x * e),
            ApproxKind::Saturating => (-(-lambda * x).exp_m1(), lambda * x * e),
        }
    }

    fn residuals(&self, theta: &[f64]) -> Vec<f64> {
        self.xs
            .iter()
            .zip(self.targets)
            .zip(self.weights)
            .map(|((&x, &t), &w)| {
                let model: f64 = (0..self.n)
                    .map(|i| theta[i] * self.basis(theta[self.n + i].exp(), x).0)
                    .sum();
                w * (model - t)
            })
            .collect()
    }

    fn cost(&self, theta: &[f64]) -> f64 {
        self.residuals(theta).iter().map(|r| r * r).sum()
    }

    fn jacobian(&self, theta: &[f64]) -> DMatrix<f64> {
        let n = self.n;
        DMatrix::from_fn(self.xs.len(), 2 * n, |row, col| {
            let x = self.xs[row];
            let w = self.weights[row];
            let i = col % n;
            let (b, db) = self.basis(theta[n + i].exp(), x);
            if col < n {
                w * b
            } else {
                w * theta[i] * db
            }
        })
    }

    /// Weighted linear least squares for α at fixed λ.
    fn solve_alpha(&self, lambdas: &[f64]) -> Option<Vec<f64>> {
        let a = DMatrix::from_fn(self.xs.len(), self.n, |row, col| {
            self.weights[row] * self.basis(lambdas[col], self.xs[row]).0
        });
        let b = DVector::from_iterator(
            self.xs.len(),
            self.targets.iter().zip(self.weights).map(|(t, w)| t * w),
        );
        let sol = a.svd(true, true).solve(&b, 1e-14).ok()?;
        Some(sol.iter().copied().collect())
    }
}

fn levenberg_marquardt(
    problem: &Problem<'_>,
    mut theta: Vec<f64>,
    max_iterations: usize,
) -> (Vec<f64>, f64, bool) {
    let n = theta.len();
    let mut cost = problem.cost(&theta);
    let mut damping = 1e-3;
    let mut stalls = 0;
    for _ in 0..max_iterations {
        let r = DVector::from_vec(problem.residuals(&theta));
        let j = problem.jacobian(&theta);
        let jtj = j.transpose() * &j;
        let g = j.transpose() * r;
        if g.amax() < 1e-15 * (1.0 + cost) {
            return (theta, cost, true);
        }
        let mut improved = false;
        for _ in 0..40 {
            let mut lhs = jtj.clone();
            for d in 0..n {
                lhs[(d, d)] += damping * jtj[(d, d)].max(1e-12);
            }
            let Some(step) = lhs.lu().solve(&(-&g)) else {
                damping *= 10.0;
                continue;
            };
            let trial: Vec<f64> = theta
                .iter()
                .zip(step.iter())
                .enumerate()
                .map(|(i, (t, s))| {
                    if i >= n / 2 {
                        (t + s).clamp(-60.0, 60.0)
                    } else {
                        t + s
                    }
                })
                .collect();
            let trial_cost = problem.cost(&trial);
            if trial_cost.is_finite() && trial_cost < cost {
                let rel_drop = (cost - trial_cost) / cost.max(f64::MIN_POSITIVE);
                theta = trial;
                cost = trial_cost;
                damping = (damping / 3.0).max(1e-15);
                improved = true;
                stalls = if rel_drop < 1e-13 { stalls + 1 } else { 0 };
                break;
            }
            damping *= 4.0;
            if damping > 1e16 {
                break;
            }
        }
        if !improved || stalls >= 5 {
            return (theta, cost, true);
        }
    }
    (theta, cost, false)
}

/// Damped Gauss–Newton (Levenberg–Marquardt) least squares over (αᵢ, ln λᵢ).
///
/// Starting points are geometric λ ladders spanning the grid's decay scales
/// with α from the linear least-squares solution; the best converged start
/// wins. Deterministic for fixed inputs.
pub fn fit_expsum(
    name: impl Into<String>,
    target: &dyn Fn(f64) -> f64,
    kind: ApproxKind,
    grid: FitGrid,
    options: FitOptions,
) -> Result<ExpSumApprox> {
    grid.validate()?;
    let n = options.n_terms;
    if n == 0 {
        return Err(Error::Approximation("need at least one term".into()));
    }
    let xs = grid.values();
    let targets: Vec<f64> = xs.iter().map(|&x| target(x)).collect();
    if targets.iter().any(|t| !t.is_finite()) {
        return Err(Error::Approximation(
            "target is not finite on the fit grid".into(),
        ));
    }
    let weights: Vec<f64> = match options.weighting {
        Weighting::Relative => targets.iter().map(|t| 1.0 / t.abs().max(1e-6)).collect(),
        Weighting::Absolute => vec![1.0; xs.len()],
    };
    let problem = Problem {
        xs: &xs,
        targets: &targets,
        weights: &weights,
        kind,
        n,
    };

    let ladder = |lo: f64, hi: f64| -> Vec<f64> {
        if n == 1 {
            return vec![(lo * hi).sqrt()];
        }
        (0..n)
            .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
            .collect()
    };
    let starts = [
        ladder(3.0 / grid.hi, 1.0 / (30.0 * grid.lo)),
        ladder(1.0 / grid.hi, 1.0 / grid.lo),
        ladder(1.0 / grid.hi, 1.0),
        ladder(10.0 / grid.hi, 0.1 / grid.lo),
    ];

    let mut best: Option<(Vec<f64>, f64, bool)> = None;
    for lambdas in starts.iter() {
        let Some(alpha) = problem.solve_alpha(lambdas) else {
            continue;
        };
        let theta0: Vec<f64> = alpha
            .iter()
            .copied()
            .chain(lambdas.iter().map(|l| l.ln()))
            .collect();
        let (theta, cost, converged) =
            levenberg_marquardt(&problem, theta0, options.max_iterations);
        let better = match &best {
            None => true,
            Some((_, c, conv)) => (converged && !conv) || (converged == *conv && cost < *c),
        };
        if better {
            best = Some((theta, cost, converged));
        }
    }
    let (theta, cost, converged) = best
        .ok_or_else(|| Error::Approximation("no starting point gave a solvable system".into()))?;
    if !converged {
        return Err(Error::NotConverged {
            what: "exponential-sum fit",
            iterations: options.max_iterations,
            best: cost.sqrt(),
            residual: cost.sqrt(),
        });
    }
    let mut terms: Vec<ExpTerm> = (0..n)
        .map(|i| ExpTerm {
            alpha: theta[i],
            lambda: theta[n + i].exp(),
        })
        .collect();
    terms.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    let approx = ExpSumApprox {
        name: name.into(),
        kind,
        terms,
        grid,
        max_abs_err: f64::NAN,
    };
    Ok(approx.remeasure(target))
}

/// Fit one of the named targets with its default weighting.
pub fn fit_target(target: FitTarget, kind: ApproxKind, grid: FitGrid) -> Result<ExpSumApprox> {
    let name = format!("fit-{}-{kind}", target.name());
    fit_expsum(
        name,
        &|x| target.eval(x),
        kind,
        grid,
        FitOptions {
            weighting: target.weighting(),
            ..FitOptions::default()
        },
    )
}

/// Default validity window of the log₂(1+x) fit.
pub const LOG2_GRID: FitGrid = FitGrid {
    lo: 1e-3,
    hi: 1e3,
    points: 200,
};

static DEFAULT_LOG2: LazyLock<ExpSumApprox> = LazyLock::new(|| {
    fit_target(FitTarget::Log2, ApproxKind::Saturating, LOG2_GRID)
        .expect("log2 fit converges on the default grid")
});

/// The saturating log₂(1+x) fit over [1e−3, 1e3].
pub fn default_log2_approx() -> ExpSumApprox {
    DEFAULT_LOG2.clone()
}
