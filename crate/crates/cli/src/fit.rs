//! `fit`: exponential-sum fits stored as records.

use etamu::approx::{
    fit_target, measure_max_abs_err, preset_qa_unit, FitGrid, LOG2_GRID, PRESET_GRID,
};
use etamu::{ApproxKind, Error, ExpSumApprox, FitTarget};

use crate::error::{CliError, CliResult};

/// `lo:hi` fit window.
pub fn parse_domain(s: &str) -> CliResult<(f64, f64)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| CliError::Config(format!("domain {s:?} is not of the form lo:hi")))?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Config(format!("domain {s:?}: {t:?} is not a number")))
    };
    let (lo, hi) = (num(a)?, num(b)?);
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(CliError::Config(format!(
            "domain {s:?} needs 0 < lo < hi < ∞"
        )));
    }
    Ok((lo, hi))
}

pub fn default_grid(target: &FitTarget) -> FitGrid {
    match target {
        FitTarget::Log2 => LOG2_GRID,
        FitTarget::Qa(_) => PRESET_GRID,
    }
}

#[derive(Debug, Clone)]
pub struct FitOutcome {
    pub approx: ExpSumApprox,
    /// Error of the tabulated fit on the same grid, when one exists.
    pub preset_err: Option<f64>,
}

pub fn run(target: &str, kind: ApproxKind, domain: Option<&str>) -> CliResult<FitOutcome> {
    let target: FitTarget = target.parse().map_err(CliError::config)?;
    let mut grid = default_grid(&target);
    if let Some(d) = domain {
        (grid.lo, grid.hi) = parse_domain(d)?;
    }
    let approx = fit_target(target, kind, grid).map_err(|e| match e {
        Error::NotConverged { residual, .. } => {
            CliError::Numerical(format!("{e} (residual {residual:e})"))
        }
        other => CliError::numerical(other),
    })?;
    let preset_err = match target {
        FitTarget::Qa(n) => preset_qa_unit(n.a())
            .ok()
            .map(|p| measure_max_abs_err(&p, &|x| target.eval(x), &grid)),
        FitTarget::Log2 => None,
    };
    Ok(FitOutcome { approx, preset_err })
}
