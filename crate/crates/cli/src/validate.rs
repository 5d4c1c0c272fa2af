//! `validate`: invariant checks printed as a pass/fail table.

use std::f64::consts::PI;

use etamu::approx::{preset_qa_unit, TABLE_QA};
use etamu::fading::{from_special_case, gamma_density, mgf, pdf_bessel, pdf_integer, HoytMapping};
use etamu::metrics::{aber, kernel_k};
use etamu::noise::{ggn_pdf, qa_exact, sample_ggn};
use etamu::oracle::{
    aber_mgf_awgn, aber_quadrature, average_quadrature, hoyt_arbitration, integrate_semi_infinite,
    kernel_quadrature, monte_carlo, QuadratureSettings,
};
use etamu::{FadingSpec, Format, ModulationSpec, NoiseSpec, SpecialCase};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Pdf,
    Noise,
    Kernel,
    #[value(name = "special_cases")]
    SpecialCases,
    #[value(name = "hoyt_arbitration")]
    HoytArbitration,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Pdf => "pdf",
            Suite::Noise => "noise",
            Suite::Kernel => "kernel",
            Suite::SpecialCases => "special_cases",
            Suite::HoytArbitration => "hoyt_arbitration",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported, never fails the run.
    Info,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub measured: f64,
    pub limit: f64,
    pub status: Status,
    pub note: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn check(&mut self, suite: &'static str, name: impl Into<String>, measured: f64, limit: f64) {
        let status = if measured <= limit {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            suite,
            name: name.into(),
            measured,
            limit,
            status,
            note: String::new(),
        });
    }

    fn info(&mut self, suite: &'static str, name: impl Into<String>, measured: f64, note: String) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            measured,
            limit: f64::NAN,
            status: Status::Info,
            note,
        });
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn count(&self, suite: &str) -> usize {
        self.checks.iter().filter(|c| c.suite == suite).count()
    }

    pub fn render(&self) -> String {
        let w = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut s = format!(
            "{:<16} {:<w$} {:>11} {:>11}  status\n",
            "suite", "check", "measured", "limit"
        );
        for c in &self.checks {
            let limit = if c.limit.is_nan() {
                "-".to_string()
            } else {
                format!("{:.3e}", c.limit)
            };
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            s.push_str(&format!(
                "{:<16} {:<w$} {:>11.3e} {:>11}  {status}",
                c.suite, c.name, c.measured, limit
            ));
            if !c.note.is_empty() {
                s.push_str("  ");
                s.push_str(&c.note);
            }
            s.push('\n');
        }
        let total = self
            .checks
            .iter()
            .filter(|c| c.status != Status::Info)
            .count();
        if total == 0 {
            s.push_str("informational only, nothing to pass or fail\n");
        } else {
            s.push_str(&format!(
                "{} of {total} checks passed\n",
                total - self.failures()
            ));
        }
        s
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        ((a - b) / b).abs()
    }
}

fn num(e: etamu::Error) -> CliError {
    CliError::numerical(e)
}

pub fn run(suite: Suite, seed: u64) -> CliResult<Report> {
    let mut r = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Pdf {
        pdf(&mut r)?;
    }
    if all || suite == Suite::Noise {
        noise(&mut r, seed)?;
    }
    if all || suite == Suite::Kernel {
        kernel(&mut r, seed)?;
    }
    if all || suite == Suite::SpecialCases {
        special_cases(&mut r)?;
    }
    if all || suite == Suite::HoytArbitration {
        hoyt(&mut r, seed)?;
    }
    Ok(r)
}

fn pdf(r: &mut Report) -> CliResult<()> {
    let qs = QuadratureSettings::with_rel_tol(1e-11);
    for (format, etas) in [(Format::I, [0.1, 0.5, 0.9]), (Format::II, [-0.6, 0.3, 0.9])] {
        for eta in etas {
            for mu in [1.0, 2.0] {
                for l in [1, 3] {
                    let spec = FadingSpec::new(format, eta, mu, l, 1.0).map_err(num)?;
                    let label = format!("{format} η={eta} μ={mu} L={l}");
                    let mut forms = 0.0f64;
                    for ratio in [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
                        let g = ratio * spec.zeta_tilde();
                        forms = forms.max(rel(
                            pdf_integer(&spec, g).map_err(num)?,
                            pdf_bessel(&spec, g).map_err(num)?,
                        ));
                    }
                    r.check("pdf", format!("forms agree, {label}"), forms, 1e-9);
                    let area = average_quadrature(&spec, |_| 1.0, &qs).map_err(num)?;
                    r.check(
                        "pdf",
                        format!("unit area, {label}"),
                        (area - 1.0).abs(),
                        1e-8,
                    );
                }
            }
        }
    }
    Ok(())
}

fn noise(r: &mut Report, seed: u64) -> CliResult<()> {
    let qs = QuadratureSettings::with_rel_tol(1e-13);
    let gauss = NoiseSpec::gaussian();
    let normal = |t: f64| (-0.5 * t * t).exp() / (2.0 * PI).sqrt();
    let mut q2 = 0.0f64;
    for x in [0.0, 0.5, 1.0, 2.0, 4.0, 6.0] {
        let want = integrate_semi_infinite(|t| normal(x + t), 1.0, &qs)
            .map_err(num)?
            .value;
        q2 = q2.max(rel(qa_exact(&gauss, x), want));
    }
    r.check("noise", "a=2 tail equals Gaussian Q", q2, 1e-10);
    let lap = NoiseSpec::laplacian();
    let q1 = (0..=60)
        .map(|i| {
            let x = i as f64 * 0.1;
            (qa_exact(&lap, x) - 0.5 * (-(2f64.sqrt()) * x).exp()).abs()
        })
        .fold(0.0, f64::max);
    r.check("noise", "a=1 tail equals ½e^(−√2x)", q1, 1e-12);
    for (a, _, _) in TABLE_QA {
        let n = NoiseSpec::new(a).map_err(num)?;
        let mut tail = 0.0f64;
        for x in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let q = integrate_semi_infinite(|t| ggn_pdf(&n, x + t), 1.0, &qs)
                .map_err(num)?
                .value;
            tail = tail.max(rel(qa_exact(&n, x), q));
        }
        r.check(
            "noise",
            format!("a={a} tail equals density integral"),
            tail,
            1e-10,
        );
        let est = monte_carlo(200_000, seed, |rng| {
            let u = sample_ggn(&n, rng);
            u * u
        });
        r.check(
            "noise",
            format!("a={a} sample variance |z|"),
            ((est.mean - 1.0) / est.std_error).abs(),
            4.0,
        );
    }
    Ok(())
}

fn kernel(r: &mut Report, seed: u64) -> CliResult<()> {
    let qs = QuadratureSettings {
        rel_tol: 1e-13,
        abs_tol: 0.0,
        max_subdivisions: 5000,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..60 {
        let m: u32 = rng.random_range(1..=6);
        let xi: u32 = rng.random_range(1..=12);
        let beta = 10f64.powf(rng.random_range(-1.0..1.0));
        let p = 10f64.powf(rng.random_range(-2.0..2.0));
        let k = kernel_k(m, beta, xi, p).map_err(num)?;
        let q = kernel_quadrature(m, beta, xi, p, &qs).map_err(num)?;
        r.check(
            "kernel",
            format!("K(m={m}, β={beta:.4}, ξ={xi}, p={p:.4})"),
            rel(k, q),
            1e-10,
        );
    }
    Ok(())
}

fn special_cases(r: &mut Report) -> CliResult<()> {
    let qs = QuadratureSettings::with_rel_tol(1e-12);
    let bpsk = ModulationSpec::bpsk();
    let gauss = NoiseSpec::gaussian();

    let ray = from_special_case(SpecialCase::Rayleigh, 1, 10.0).map_err(num)?;
    let textbook = 0.5 * (1.0 - (10.0f64 / 11.0).sqrt());
    let closed = aber(&ray, &bpsk, &preset_qa_unit(2.0).map_err(num)?).map_err(num)?;
    r.check(
        "special_cases",
        "Rayleigh BPSK 10 dB, closed form",
        rel(closed, textbook),
        5e-3,
    );
    let quad = aber_quadrature(&ray, &bpsk, &gauss, &qs).map_err(num)?;
    r.check(
        "special_cases",
        "Rayleigh BPSK 10 dB, exact-tail quadrature",
        rel(quad, textbook),
        5e-3,
    );

    for m in [1.0, 2.0] {
        let spec = from_special_case(SpecialCase::Nakagami { m }, 1, 1.0).map_err(num)?;
        let mut worst = 0.0f64;
        for i in 0..=40 {
            let g = 10f64.powf(-2.0 + 3.0 * i as f64 / 40.0);
            worst = worst.max(rel(
                pdf_bessel(&spec, g).map_err(num)?,
                gamma_density(m, 1.0, g),
            ));
        }
        r.check(
            "special_cases",
            format!("Nakagami m={m} density"),
            worst,
            1e-4,
        );
    }

    let degenerate = FadingSpec::new(Format::I, 1.0, 1.5, 2, 4.0).map_err(num)?;
    let want = (1.0 + 0.7 * degenerate.zeta_tilde() / 6.0).powf(-6.0);
    r.check(
        "special_cases",
        "H=0 MGF is the gamma MGF",
        rel(mgf(&degenerate, 0.7).map_err(num)?, want),
        1e-14,
    );

    for spec in [
        FadingSpec::new(Format::I, 0.5, 1.0, 1, 10.0).map_err(num)?,
        FadingSpec::new(Format::II, 0.3, 2.0, 2, 3.0).map_err(num)?,
        FadingSpec::new(Format::II, 0.8, 1.0, 3, 100.0).map_err(num)?,
    ] {
        let m = aber_mgf_awgn(&spec, &bpsk, &gauss, &qs).map_err(num)?;
        let q = aber_quadrature(&spec, &bpsk, &gauss, &qs).map_err(num)?;
        r.check(
            "special_cases",
            format!(
                "MGF form vs quadrature, {} η={} μ={} L={}",
                spec.format, spec.eta, spec.mu, spec.branches
            ),
            rel(m, q),
            1e-8,
        );
    }
    Ok(())
}

fn hoyt(r: &mut Report, seed: u64) -> CliResult<()> {
    for q in [0.3, 0.5, 0.8] {
        let a = hoyt_arbitration(q, 20_000, seed).map_err(num)?;
        let verdict = match a.supported {
            Some(HoytMapping::Paper) => "data supports the format II mapping",
            Some(HoytMapping::Literature) => "data supports the format I mapping",
            None => "neither mapping clearly preferred",
        };
        let crit = format!("1% critical {:.4}", a.critical_1pct);
        r.info(
            "hoyt_arbitration",
            format!("q={q} KS, format II η=(1−q)/(1+q) μ=1"),
            a.ks_paper,
            crit.clone(),
        );
        r.info(
            "hoyt_arbitration",
            format!("q={q} KS, format I η=q² μ=½"),
            a.ks_literature,
            format!("{crit}; {verdict}"),
        );
    }
    Ok(())
}
