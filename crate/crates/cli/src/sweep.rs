//! `aber` and `acc`: closed form against quadrature over an SNR grid.

use std::io::Write;
use std::path::{Path, PathBuf};

use etamu::approx::{default_log2_approx, fit_target, preset_qa_unit, PRESET_GRID};
use etamu::metrics::{curve, db_to_linear, CurveKind};
use etamu::oracle::{aber_quadrature, acc_quadrature, QuadratureSettings};
use etamu::records::KvDoc;
use etamu::{ApproxKind, Error, ExpSumApprox, FitTarget};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::scenario::{ApproxSource, Scenario};

pub const DEFAULT_ABER_BUDGET: f64 = 0.10;
pub const DEFAULT_ACC_BUDGET: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub snr_db: f64,
    pub closed: f64,
    pub quadrature: f64,
    pub rel_diff: f64,
}

impl Row {
    pub fn flagged(&self, budget: f64) -> bool {
        !(self.rel_diff <= budget)
    }
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub kind: CurveKind,
    pub approx: ExpSumApprox,
    pub budget: f64,
    pub rows: Vec<Row>,
}

impl Sweep {
    pub fn header(&self) -> &'static str {
        match self.kind {
            CurveKind::Aber => "snr_db,aber_closed,aber_quadrature,rel_diff",
            CurveKind::Acc => "snr_db,acc_closed,acc_quadrature,rel_diff",
        }
    }

    pub fn flagged(&self) -> Vec<&Row> {
        self.rows
            .iter()
            .filter(|r| r.flagged(self.budget))
            .collect()
    }

    pub fn worst(&self) -> &Row {
        self.rows
            .iter()
            .max_by(|a, b| a.rel_diff.total_cmp(&b.rel_diff))
            .expect("grids are never empty")
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::with_capacity(80 * (self.rows.len() + 1));
        s.push_str(self.header());
        s.push('\n');
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{}\n",
                fmt17(r.snr_db),
                fmt17(r.closed),
                fmt17(r.quadrature),
                fmt17(r.rel_diff)
            ));
        }
        s
    }

    pub fn summary(&self, scenario: &Scenario, out: Option<&Path>) -> String {
        let w = self.worst();
        let dest = out.map_or_else(|| "stdout".to_string(), |p| p.display().to_string());
        format!(
            "{} {}: {} points -> {dest}; max rel_diff {:.3e} at {} dB; {} flagged above budget {}",
            self.kind,
            scenario.name,
            self.rows.len(),
            w.rel_diff,
            w.snr_db,
            self.flagged().len(),
            self.budget
        )
    }

    /// Run metadata written next to the CSV. Contains nothing that varies
    /// between identical runs.
    pub fn metadata(&self, scenario: &Scenario) -> String {
        let mut doc = KvDoc::new();
        doc.set("command", self.kind);
        doc.set("etamu.version", env!("CARGO_PKG_VERSION"));
        doc.set("scenario", &scenario.name);
        doc.set("fading.format", scenario.format);
        doc.set("fading.eta", format!("{:?}", scenario.eta));
        doc.set("fading.mu", format!("{:?}", scenario.mu));
        doc.set("fading.branches", scenario.branches);
        if self.kind == CurveKind::Aber {
            if let Some((s, m)) = scenario.modulation {
                doc.set("modulation.scheme", s);
                doc.set("modulation.m", m);
            }
            doc.set("noise.a", format!("{:?}", scenario.noise_a));
        }
        doc.set("approx.name", &self.approx.name);
        doc.set(
            "approx.max_abs_err",
            format!("{:?}", self.approx.max_abs_err),
        );
        doc.set("grid", scenario.grid);
        doc.set("seed", scenario.seed);
        doc.set("budget", format!("{:?}", self.budget));
        doc.set("points", self.rows.len());
        let w = self.worst();
        doc.set("max_rel_diff", format!("{:?}", w.rel_diff));
        doc.set("max_rel_diff_db", format!("{:?}", w.snr_db));
        let flagged: Vec<String> = self
            .flagged()
            .iter()
            .map(|r| format!("{:?}", r.snr_db))
            .collect();
        doc.set("flagged", flagged.len());
        doc.set("flagged_db", flagged.join(" "));
        doc.to_text()
    }
}

/// Seventeen significant digits, `.` separator, no locale.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn load_record(scenario: &Scenario, path: &Path, kind: ApproxKind) -> CliResult<ExpSumApprox> {
    let full = scenario.resolve(path);
    let text = std::fs::read_to_string(&full).map_err(|e| CliError::io(&full, e))?;
    let approx = ExpSumApprox::from_record(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", full.display())))?;
    if approx.kind != kind {
        return Err(CliError::Config(format!(
            "{}: record is {} but this command needs a {kind} sum",
            full.display(),
            approx.kind
        )));
    }
    Ok(approx)
}

pub fn noise_approx(scenario: &Scenario) -> CliResult<ExpSumApprox> {
    match &scenario.noise_approx {
        ApproxSource::Table => preset_qa_unit(scenario.noise_a).map_err(CliError::config),
        ApproxSource::Fit => fit_target(
            FitTarget::Qa(scenario.noise()?),
            ApproxKind::Decaying,
            PRESET_GRID,
        )
        .map_err(CliError::numerical),
        ApproxSource::Record(p) => load_record(scenario, p, ApproxKind::Decaying),
    }
}

pub fn log2_approx(scenario: &Scenario) -> CliResult<ExpSumApprox> {
    match &scenario.log2_approx {
        ApproxSource::Fit => Ok(default_log2_approx()),
        ApproxSource::Table => Err(CliError::Config("approx.log2 has no table".into())),
        ApproxSource::Record(p) => load_record(scenario, p, ApproxKind::Saturating),
    }
}

fn at_snr(db: f64, e: Error) -> CliError {
    match e {
        e @ Error::AtSnr { .. } => CliError::numerical(e),
        e => CliError::numerical(Error::AtSnr {
            snr_db: db,
            source: Box::new(e),
        }),
    }
}

pub fn run(kind: CurveKind, scenario: &Scenario, budget: Option<f64>) -> CliResult<Sweep> {
    let base = scenario.fading_at(1.0)?;
    let modulation = scenario.modulation()?;
    if kind == CurveKind::Aber && modulation.is_none() {
        return Err(CliError::Config("aber needs modulation.scheme".into()));
    }
    let noise = scenario.noise()?;
    let approx = match kind {
        CurveKind::Aber => noise_approx(scenario)?,
        CurveKind::Acc => log2_approx(scenario)?,
    };
    let budget = budget.or(scenario.budget).unwrap_or(match kind {
        CurveKind::Aber => DEFAULT_ABER_BUDGET,
        CurveKind::Acc => DEFAULT_ACC_BUDGET,
    });
    let grid = scenario.grid.values();
    let closed =
        curve(kind, &base, modulation.as_ref(), &approx, &grid).map_err(CliError::numerical)?;
    let settings = QuadratureSettings::default();
    let quad: Vec<f64> = grid
        .par_iter()
        .map(|&db| {
            let spec = base
                .with_mean_snr(db_to_linear(db))
                .map_err(|e| at_snr(db, e))?;
            match kind {
                CurveKind::Aber => aber_quadrature(
                    &spec,
                    modulation.as_ref().expect("checked"),
                    &noise,
                    &settings,
                ),
                CurveKind::Acc => acc_quadrature(&spec, &settings),
            }
            .map_err(|e| at_snr(db, e))
        })
        .collect::<CliResult<_>>()?;
    let rows = closed
        .iter()
        .zip(quad)
        .map(|(c, q)| Row {
            snr_db: c.mean_snr_db,
            closed: c.value,
            quadrature: q,
            rel_diff: if q == 0.0 {
                (c.value - q).abs()
            } else {
                ((c.value - q) / q).abs()
            },
        })
        .collect();
    Ok(Sweep {
        kind,
        approx,
        budget,
        rows,
    })
}

/// Writes `text` to `path`, creating parent directories.
pub fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut f = std::fs::File::create(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(text.as_bytes())
        .map_err(|e| CliError::io(path, e))
}

pub fn meta_path(csv: &Path) -> PathBuf {
    let mut s = csv.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}
