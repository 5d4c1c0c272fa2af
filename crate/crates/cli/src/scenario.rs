//! Scenario files: flat `key=value` text, `#` comments, dotted groups.
//!
//! ```text
//! name = fig1
//! fading.format = I
//! fading.eta = 0.5
//! fading.mu = 1
//! fading.branches = 2
//! modulation.scheme = BPSK
//! modulation.m = 2
//! noise.a = 2
//! approx.noise = table      # table | fit | path to a fit record
//! approx.log2 = fit         # fit | path to a fit record
//! snr.start_db = 0
//! snr.stop_db = 30
//! snr.step_db = 1
//! seed = 1
//! budget = 0.1              # optional
//! output.aber = fig1_aber.csv
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use etamu::records::KvDoc;
use etamu::{FadingSpec, Format, ModulationSpec, NoiseSpec, Scheme};

use crate::error::{CliError, CliResult};

const KNOWN_KEYS: &[&str] = &[
    "name",
    "fading.format",
    "fading.eta",
    "fading.mu",
    "fading.branches",
    "modulation.scheme",
    "modulation.m",
    "noise.a",
    "approx.noise",
    "approx.log2",
    "snr.start_db",
    "snr.stop_db",
    "snr.step_db",
    "seed",
    "budget",
    "output.aber",
    "output.acc",
];

/// Largest grid a single sweep accepts.
pub const MAX_GRID_POINTS: usize = 100_000;

/// Inclusive dB sweep `start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrGrid {
    pub start_db: f64,
    pub stop_db: f64,
    pub step_db: f64,
}

impl SnrGrid {
    pub fn new(start_db: f64, stop_db: f64, step_db: f64) -> CliResult<Self> {
        let g = Self {
            start_db,
            stop_db,
            step_db,
        };
        if !(start_db.is_finite() && stop_db.is_finite() && step_db.is_finite()) {
            return Err(CliError::Config(format!(
                "SNR grid {g} has a non-finite entry"
            )));
        }
        if !(step_db > 0.0) || stop_db < start_db {
            return Err(CliError::Config(format!(
                "SNR grid {g} needs step > 0 and stop ≥ start"
            )));
        }
        if g.len() > MAX_GRID_POINTS {
            return Err(CliError::Config(format!(
                "SNR grid {g} has more than {MAX_GRID_POINTS} points"
            )));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        // The tolerance keeps 0:30:0.1 at 301 points despite 0.1 being inexact.
        ((self.stop_db - self.start_db) / self.step_db + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| self.start_db + i as f64 * self.step_db)
            .collect()
    }
}

impl std::fmt::Display for SnrGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.start_db, self.stop_db, self.step_db)
    }
}

impl FromStr for SnrGrid {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, step] = parts.as_slice() else {
            return Err(CliError::Config(format!(
                "grid {s:?} is not of the form start:stop:step"
            )));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("grid {s:?}: {t:?} is not a number")))
        };
        SnrGrid::new(num(a)?, num(b)?, num(step)?)
    }
}

/// Where an exponential-sum approximation comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum ApproxSource {
    /// Tabulated Q_a fit (noise only).
    Table,
    /// Fit at run time with the default settings.
    Fit,
    /// A stored fit record.
    Record(PathBuf),
}

impl ApproxSource {
    fn parse(s: &str) -> Self {
        match s {
            "table" => ApproxSource::Table,
            "fit" => ApproxSource::Fit,
            path => ApproxSource::Record(PathBuf::from(path)),
        }
    }
}

impl std::fmt::Display for ApproxSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ApproxSource::Table => f.write_str("table"),
            ApproxSource::Fit => f.write_str("fit"),
            ApproxSource::Record(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub format: Format,
    pub eta: f64,
    pub mu: f64,
    pub branches: u32,
    /// Needed by `aber` only.
    pub modulation: Option<(Scheme, u32)>,
    pub noise_a: f64,
    pub noise_approx: ApproxSource,
    pub log2_approx: ApproxSource,
    pub grid: SnrGrid,
    pub seed: u64,
    pub budget: Option<f64>,
    pub output_aber: Option<PathBuf>,
    pub output_acc: Option<PathBuf>,
    /// Directory the scenario was read from; relative record paths resolve
    /// against it. Not serialized.
    pub base_dir: PathBuf,
}

fn get_f64(doc: &KvDoc, key: &str) -> CliResult<f64> {
    doc.f64(key).map_err(CliError::config)
}

impl Scenario {
    pub fn parse(text: &str) -> CliResult<Self> {
        let doc = KvDoc::parse(text).map_err(CliError::config)?;
        if let Some(k) = doc.keys().find(|k| !KNOWN_KEYS.contains(k)) {
            return Err(CliError::Config(format!("unknown scenario key {k:?}")));
        }
        let format: Format = doc
            .require("fading.format")
            .map_err(CliError::config)?
            .parse()
            .map_err(CliError::config)?;
        let branches = doc.u64("fading.branches").map_err(CliError::config)?;
        let branches = u32::try_from(branches)
            .map_err(|_| CliError::Config(format!("fading.branches = {branches} is too large")))?;
        let modulation = match (doc.get("modulation.scheme"), doc.get("modulation.m")) {
            (None, None) => None,
            (Some(s), m) => {
                let scheme: Scheme = s.parse().map_err(CliError::config)?;
                let m = match m {
                    Some(_) => doc.u64("modulation.m").map_err(CliError::config)?,
                    None => default_order(scheme).ok_or_else(|| {
                        CliError::Config(format!("modulation.m is required for {scheme}"))
                    })? as u64,
                };
                let m = u32::try_from(m)
                    .map_err(|_| CliError::Config(format!("modulation.m = {m} is too large")))?;
                Some((scheme, m))
            }
            (None, Some(_)) => {
                return Err(CliError::Config(
                    "modulation.m given without modulation.scheme".into(),
                ))
            }
        };
        let budget = match doc.get("budget") {
            Some(_) => Some(get_f64(&doc, "budget")?),
            None => None,
        };
        let scenario = Scenario {
            name: doc.get("name").unwrap_or("scenario").to_string(),
            format,
            eta: get_f64(&doc, "fading.eta")?,
            mu: get_f64(&doc, "fading.mu")?,
            branches,
            modulation,
            noise_a: doc.f64_or("noise.a", 2.0).map_err(CliError::config)?,
            noise_approx: ApproxSource::parse(doc.get("approx.noise").unwrap_or("table")),
            log2_approx: ApproxSource::parse(doc.get("approx.log2").unwrap_or("fit")),
            grid: SnrGrid::new(
                get_f64(&doc, "snr.start_db")?,
                get_f64(&doc, "snr.stop_db")?,
                get_f64(&doc, "snr.step_db")?,
            )?,
            seed: match doc.get("seed") {
                Some(_) => doc.u64("seed").map_err(CliError::config)?,
                None => 1,
            },
            budget,
            output_aber: doc.get("output.aber").map(PathBuf::from),
            output_acc: doc.get("output.acc").map(PathBuf::from),
            base_dir: PathBuf::new(),
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut s = Self::parse(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        s.base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(s)
    }

    /// Checks everything that can be checked before any numerics run.
    pub fn validate(&self) -> CliResult<()> {
        self.fading_at(1.0)?;
        self.noise()?;
        self.modulation()?;
        if self.noise_approx == ApproxSource::Table
            && etamu::approx::preset_qa(self.noise_a).is_err()
        {
            return Err(CliError::Config(format!(
                "no tabulated fit for noise.a = {}; set approx.noise = fit or point it at a record",
                self.noise_a
            )));
        }
        if self.log2_approx == ApproxSource::Table {
            return Err(CliError::Config(
                "approx.log2 has no table; use fit or a record path".into(),
            ));
        }
        if let Some(b) = self.budget {
            if !(b > 0.0) || !b.is_finite() {
                return Err(CliError::Config(format!(
                    "budget = {b} must be a positive number"
                )));
            }
        }
        Ok(())
    }

    pub fn fading_at(&self, mean_snr: f64) -> CliResult<FadingSpec> {
        FadingSpec::new(self.format, self.eta, self.mu, self.branches, mean_snr)
            .map_err(CliError::config)
    }

    pub fn noise(&self) -> CliResult<NoiseSpec> {
        NoiseSpec::new(self.noise_a).map_err(CliError::config)
    }

    pub fn modulation(&self) -> CliResult<Option<ModulationSpec>> {
        self.modulation
            .map(|(s, m)| ModulationSpec::new(s, m).map_err(CliError::config))
            .transpose()
    }

    pub fn resolve(&self, path: &Path) -> PathBuf {
        if path.is_relative() {
            self.base_dir.join(path)
        } else {
            path.to_path_buf()
        }
    }

    pub fn to_text(&self) -> String {
        let mut doc = KvDoc::new();
        doc.set("name", &self.name);
        doc.set("fading.format", self.format);
        doc.set("fading.eta", format!("{:?}", self.eta));
        doc.set("fading.mu", format!("{:?}", self.mu));
        doc.set("fading.branches", self.branches);
        if let Some((s, m)) = self.modulation {
            doc.set("modulation.scheme", s);
            doc.set("modulation.m", m);
        }
        doc.set("noise.a", format!("{:?}", self.noise_a));
        doc.set("approx.noise", &self.noise_approx);
        doc.set("approx.log2", &self.log2_approx);
        doc.set("snr.start_db", format!("{:?}", self.grid.start_db));
        doc.set("snr.stop_db", format!("{:?}", self.grid.stop_db));
        doc.set("snr.step_db", format!("{:?}", self.grid.step_db));
        doc.set("seed", self.seed);
        if let Some(b) = self.budget {
            doc.set("budget", format!("{b:?}"));
        }
        if let Some(p) = &self.output_aber {
            doc.set("output.aber", p.display());
        }
        if let Some(p) = &self.output_acc {
            doc.set("output.acc", p.display());
        }
        doc.to_text()
    }
}

fn default_order(scheme: Scheme) -> Option<u32> {
    match scheme {
        Scheme::Bfsk | Scheme::Bpsk => Some(2),
        Scheme::Qpsk => Some(4),
        _ => None,
    }
}
