#![allow(dead_code)]

pub mod reference;

use etamu::fading::Format;
use etamu::FadingSpec;

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

pub const ETAS: [f64; 4] = [0.1, 0.3, 0.5, 0.9];
pub const RATIOS: [f64; 7] = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0];

/// Every (format, η, μ, L) of the standard grid at mean SNR `g`.
pub fn standard_grid(g: f64) -> Vec<FadingSpec> {
    let mut out = Vec::new();
    for format in [Format::I, Format::II] {
        for eta in ETAS {
            for mu in [1.0, 2.0, 3.0] {
                for l in [1, 2, 3] {
                    out.push(FadingSpec::new(format, eta, mu, l, g).unwrap());
                }
            }
        }
    }
    out
}

pub fn db_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| lo + step * i as f64).collect()
}
