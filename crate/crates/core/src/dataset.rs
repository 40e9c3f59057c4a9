//! Loading, validating and normalizing UCR-style time-series text files.
//!
//! One series per line, optionally prefixed by an integer class label.
//! Fields are separated by commas, tabs, or runs of spaces (the archive mixes
//! all three), rows may have different lengths, and blank lines are skipped.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// A single real-valued sequence. Non-empty, all values finite.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
}

impl TimeSeries {
    /// Build a series, rejecting empty input and non-finite samples.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                line: 0,
                field: pos + 1,
                token: format!("{}", values[pos]),
            });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        // by construction never true; kept for slice-like ergonomics
        self.values.is_empty()
    }
}

/// An ordered set of series with optional integer labels.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Dataset {
    series: Vec<TimeSeries>,
    labels: Option<Vec<i64>>,
}

impl Dataset {
    pub fn new(series: Vec<TimeSeries>, labels: Option<Vec<i64>>) -> Result<Self> {
        if let Some(ref l) = labels {
            if l.len() != series.len() {
                return Err(Error::LengthMismatch {
                    left: series.len(),
                    right: l.len(),
                });
            }
        }
        Ok(Self { series, labels })
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    /// Mean series length; 0.0 for an empty dataset.
    pub fn mean_length(&self) -> f64 {
        if self.series.is_empty() {
            return 0.0;
        }
        let total: usize = self.series.iter().map(TimeSeries::len).sum();
        total as f64 / self.series.len() as f64
    }

    /// Apply z-normalization to every series, returning a new dataset.
    pub fn znormalized(&self) -> Dataset {
        Dataset {
            series: self.series.iter().map(znormalize).collect(),
            labels: self.labels.clone(),
        }
    }
}

fn is_delim(c: char) -> bool {
    c == ',' || c == '\t' || c == ' '
}

/// Parse dataset text. `has_labels` treats the first field of each row as an
/// integer class label.
pub fn parse_dataset(text: &str, has_labels: bool) -> Result<Dataset> {
    let mut series = Vec::new();
    let mut labels = if has_labels { Some(Vec::new()) } else { None };

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(is_delim).filter(|f| !f.is_empty());

        if let Some(ref mut labels) = labels {
            let token = fields.next().ok_or(Error::EmptySeries { line: line_no })?;
            let label: i64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                field: 1,
                token: token.to_string(),
                expected: "integer label",
            })?;
            labels.push(label);
        }

        let offset = usize::from(has_labels);
        let mut values = Vec::new();
        for (fidx, token) in fields.enumerate() {
            let field = fidx + offset + 1;
            let value: f64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                field,
                token: token.to_string(),
                expected: "real number",
            })?;
            if !value.is_finite() {
                return Err(Error::NonFiniteValue {
                    line: line_no,
                    field,
                    token: token.to_string(),
                });
            }
            values.push(value);
        }
        if values.is_empty() {
            return Err(Error::EmptySeries { line: line_no });
        }
        series.push(TimeSeries { values });
    }

    Dataset::new(series, labels)
}

/// Load a dataset from a UCR-style text file.
pub fn load_dataset(path: impl AsRef<Path>, has_labels: bool) -> Result<Dataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_dataset(&text, has_labels)
}

/// Render a dataset in the same text format, with enough digits that loading
/// the output reproduces every value exactly.
pub fn format_dataset(ds: &Dataset) -> String {
    let mut out = String::new();
    for (i, ts) in ds.series().iter().enumerate() {
        if let Some(labels) = ds.labels() {
            let _ = write!(out, "{}", labels[i]);
            for v in ts.values() {
                let _ = write!(out, ",{:.16e}", v);
            }
        } else {
            for (j, v) in ts.values().iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{:.16e}", v);
            }
        }
        out.push('\n');
    }
    out
}

/// Write a dataset back to disk (labels included when present).
pub fn write_dataset(path: impl AsRef<Path>, ds: &Dataset) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_dataset(ds)).map_err(|e| Error::io(path, e))
}

/// Shift to mean 0 and scale to unit population standard deviation.
/// A (near-)constant series maps to all zeros.
pub fn znormalize(ts: &TimeSeries) -> TimeSeries {
    let n = ts.len() as f64;
    let mean = ts.values().iter().sum::<f64>() / n;
    let var = ts.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let std = var.sqrt();
    let values = if std < 1e-12 {
        vec![0.0; ts.len()]
    } else {
        ts.values().iter().map(|v| (v - mean) / std).collect()
    };
    TimeSeries { values }
}
