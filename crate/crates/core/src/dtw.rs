//! Windowed dynamic time warping and the derived inner-product-style similarity.
//!
//! Local cost is the squared difference and the accumulated optimum is
//! square-rooted at the end. Under that convention the distance to the
//! length-one zero series equals the Euclidean norm, which is exactly what the
//! similarity construction below needs: with b_a = ‖a‖ and b_b = ‖b‖,
//! (b_a² + b_b² − DTW(a,b)²) / 2 behaves like an inner product.

use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// Sakoe–Chiba band half-width, in index units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DtwConfig {
    pub window: usize,
}

impl DtwConfig {
    pub fn new(window: usize) -> Self {
        Self { window }
    }

    /// Default window rule: min(40, round(mean series length / 10)).
    pub fn default_for_dataset(ds: &Dataset) -> Self {
        let window = (ds.mean_length() / 10.0).round() as usize;
        Self {
            window: window.min(40),
        }
    }
}

/// Banded DTW distance between two non-empty series.
///
/// The effective half-width is max(window, |len(a) − len(b)|), so a warping
/// path always exists. Runs in O(len(a) · band) time with two rolling rows.
pub fn dtw_distance(a: &[f64], b: &[f64], cfg: DtwConfig) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    let la = a.len();
    let lb = b.len();
    let w = cfg.window.max(la.abs_diff(lb));

    let mut prev = vec![f64::INFINITY; lb];
    let mut curr = vec![f64::INFINITY; lb];
    // valid column range of the row held in `prev`
    let mut prev_lo = 0usize;
    let mut prev_hi = 0usize;

    for i in 0..la {
        let lo = i.saturating_sub(w);
        let hi = (i + w).min(lb - 1);
        for j in lo..=hi {
            let diff = a[i] - b[j];
            let cost = diff * diff;
            let acc = if i == 0 && j == 0 {
                cost
            } else {
                let mut best = f64::INFINITY;
                if i > 0 && j >= prev_lo && j <= prev_hi {
                    best = prev[j];
                }
                if i > 0 && j > 0 && j - 1 >= prev_lo && j - 1 <= prev_hi {
                    best = best.min(prev[j - 1]);
                }
                if j > lo {
                    best = best.min(curr[j - 1]);
                }
                cost + best
            };
            curr[j] = acc;
        }
        std::mem::swap(&mut prev, &mut curr);
        prev_lo = lo;
        prev_hi = hi;
    }

    Ok(prev[lb - 1].sqrt())
}

/// Distance to the length-one zero series; equals the Euclidean norm of `t`.
pub fn dtw_norm(t: &[f64]) -> Result<f64> {
    dtw_distance(t, &[0.0], DtwConfig::new(0))
}

/// Similarity induced from the warped distance:
/// (b_a² + b_b² − dtw_distance(a, b)²) / 2.
///
/// `b_a` and `b_b` must be the precomputed [`dtw_norm`] values of `a` and `b`;
/// callers batch those once per series instead of per pair.
pub fn dtw_similarity(a: &[f64], b: &[f64], b_a: f64, b_b: f64, cfg: DtwConfig) -> Result<f64> {
    let dist = dtw_distance(a, b, cfg)?;
    Ok((b_a * b_a + b_b * b_b - dist * dist) / 2.0)
}
