//! Sparse symmetric matrix over an observed index set, plus its on-disk
//! triplet format.
//!
//! Each unordered pair (i, j) is stored once with i ≤ j and mirrored into both
//! rows' adjacency lists, so row scans see the full symmetric support and an
//! update through one entry id is seen from both sides.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// One observed position in a row: the column index and the id of the shared
/// entry slot backing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowEntry {
    pub col: usize,
    pub entry: usize,
}

/// Symmetric n×n matrix with values known only on the observed set.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSimilarityMatrix {
    n: usize,
    /// entry id → (i, j) with i ≤ j, sorted lexicographically
    coords: Vec<(usize, usize)>,
    /// entry id → value
    values: Vec<f64>,
    /// row → observed columns (sorted), including the mirror of every (i, j)
    rows: Vec<Vec<RowEntry>>,
    /// row → entry id of (row, row), if observed
    diag: Vec<Option<usize>>,
}

impl PartialSimilarityMatrix {
    /// Build from (i, j, value) triplets. Order and (i, j) vs (j, i)
    /// orientation are irrelevant; duplicates (after normalization) are
    /// rejected, as are out-of-range indices and non-finite values.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut normalized: Vec<(usize, usize, f64)> = Vec::new();
        for (i, j, v) in entries {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j, n });
            }
            if !v.is_finite() {
                return Err(Error::Numeric(format!("non-finite entry at ({i}, {j})")));
            }
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            normalized.push((a, b, v));
        }
        normalized.sort_by_key(|&(i, j, _)| (i, j));
        for w in normalized.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DuplicateEntry { i: w[0].0, j: w[0].1 });
            }
        }

        let mut coords = Vec::with_capacity(normalized.len());
        let mut values = Vec::with_capacity(normalized.len());
        let mut rows: Vec<Vec<RowEntry>> = vec![Vec::new(); n];
        let mut diag = vec![None; n];
        for (id, (i, j, v)) in normalized.into_iter().enumerate() {
            coords.push((i, j));
            values.push(v);
            rows[i].push(RowEntry { col: j, entry: id });
            if i == j {
                diag[i] = Some(id);
            } else {
                rows[j].push(RowEntry { col: i, entry: id });
            }
        }
        for row in &mut rows {
            row.sort_by_key(|e| e.col);
        }
        Ok(Self {
            n,
            coords,
            values,
            rows,
            diag,
        })
    }

    /// Matrix order.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries (each off-diagonal pair counted once).
    pub fn num_entries(&self) -> usize {
        self.values.len()
    }

    /// Value at (i, j) if observed; symmetric in the argument order.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        if i >= self.n || j >= self.n {
            return None;
        }
        self.rows[i]
            .binary_search_by_key(&j, |e| e.col)
            .ok()
            .map(|pos| self.values[self.rows[i][pos].entry])
    }

    /// Observed columns of row `r`, sorted by column.
    pub fn row(&self, r: usize) -> &[RowEntry] {
        &self.rows[r]
    }

    /// Entry id of the diagonal cell of row `r`, if observed.
    pub fn diag_entry(&self, r: usize) -> Option<usize> {
        self.diag[r]
    }

    /// Entry id → (i, j), i ≤ j, lexicographically sorted.
    pub fn coords(&self) -> &[(usize, usize)] {
        &self.coords
    }

    /// Entry id → value.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Iterate (i, j, value) in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.coords
            .iter()
            .zip(&self.values)
            .map(|(&(i, j), &v)| (i, j, v))
    }

    /// Error with the first missing row if any diagonal cell is unobserved.
    pub fn require_full_diagonal(&self) -> Result<()> {
        match self.diag.iter().position(Option::is_none) {
            None => Ok(()),
            Some(row) => Err(Error::MissingDiagonal { row }),
        }
    }

    /// ‖P_Ω(Ã)‖²_F over the full symmetric matrix: off-diagonal entries count
    /// twice, diagonal entries once.
    pub fn observed_sq_norm(&self) -> f64 {
        self.coords
            .iter()
            .zip(&self.values)
            .map(|(&(i, j), &v)| if i == j { v * v } else { 2.0 * v * v })
            .sum()
    }

    /// Write the triplet format: a `n num_entries` header, then one
    /// `i j value` line per entry with i ≤ j and 17 significant digits.
    pub fn write(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "{} {}", self.n, self.num_entries())?;
        for ((i, j), v) in self.coords.iter().zip(&self.values) {
            writeln!(w, "{} {} {:.16e}", i, j, v)?;
        }
        Ok(())
    }

    pub fn write_to(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut file = std::io::BufWriter::new(
            std::fs::File::create(path).map_err(|e| Error::io(path, e))?,
        );
        self.write(&mut file).map_err(|e| Error::io(path, e))?;
        file.flush().map_err(|e| Error::io(path, e))
    }

    /// Parse the triplet format produced by [`write`](Self::write).
    pub fn read(r: impl BufRead, path: &Path) -> Result<Self> {
        let fmt = |line: usize, reason: String| Error::Format {
            path: path.to_path_buf(),
            line,
            reason,
        };
        let mut lines = r.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| fmt(1, "missing header".into()))?;
        let header = header.map_err(|e| Error::io(path, e))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fmt(1, "header must be `n num_entries`".into()))?;
        let count: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fmt(1, "header must be `n num_entries`".into()))?;
        if parts.next().is_some() {
            return Err(fmt(1, "header must be `n num_entries`".into()));
        }

        let mut entries = Vec::with_capacity(count);
        for (idx, line) in lines {
            let line_no = idx + 1;
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_idx = |t: Option<&str>| -> Option<usize> { t.and_then(|t| t.parse().ok()) };
            let i = parse_idx(parts.next())
                .ok_or_else(|| fmt(line_no, "expected `i j value`".into()))?;
            let j = parse_idx(parts.next())
                .ok_or_else(|| fmt(line_no, "expected `i j value`".into()))?;
            let v: f64 = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| fmt(line_no, "expected `i j value`".into()))?;
            if parts.next().is_some() {
                return Err(fmt(line_no, "trailing fields after `i j value`".into()));
            }
            if i > j {
                return Err(fmt(line_no, format!("entries must have i <= j, got ({i}, {j})")));
            }
            entries.push((i, j, v));
        }
        if entries.len() != count {
            return Err(fmt(
                1,
                format!("header promises {count} entries, file has {}", entries.len()),
            ));
        }
        Self::from_entries(n, entries)
    }

    pub fn read_from(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read(BufReader::new(file), path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> PartialSimilarityMatrix {
        PartialSimilarityMatrix::from_entries(
            3,
            vec![(0, 0, 1.0), (1, 1, 2.0), (2, 2, 3.0), (1, 0, -0.5), (1, 2, 0.25)],
        )
        .unwrap()
    }

    #[test]
    fn lookup_is_symmetric_and_normalized() {
        let m = toy();
        assert_eq!(m.get(0, 1), Some(-0.5));
        assert_eq!(m.get(1, 0), Some(-0.5));
        assert_eq!(m.get(0, 2), None);
        assert_eq!(m.get(2, 2), Some(3.0));
        assert_eq!(m.coords()[1], (0, 1)); // stored with i <= j
    }

    #[test]
    fn rows_mirror_entries() {
        let m = toy();
        let cols = |r: usize| m.row(r).iter().map(|e| e.col).collect::<Vec<_>>();
        assert_eq!(cols(0), vec![0, 1]);
        assert_eq!(cols(1), vec![0, 1, 2]);
        assert_eq!(cols(2), vec![1, 2]);
        // shared entry ids between mirrored views
        let id_01 = m.row(0).iter().find(|e| e.col == 1).unwrap().entry;
        let id_10 = m.row(1).iter().find(|e| e.col == 0).unwrap().entry;
        assert_eq!(id_01, id_10);
    }

    #[test]
    fn duplicate_entries_rejected_across_orientations() {
        let err = PartialSimilarityMatrix::from_entries(2, vec![(0, 1, 1.0), (1, 0, 2.0)]);
        assert!(matches!(err, Err(Error::DuplicateEntry { i: 0, j: 1 })));
    }

    #[test]
    fn out_of_range_rejected() {
        let err = PartialSimilarityMatrix::from_entries(2, vec![(0, 2, 1.0)]);
        assert!(matches!(err, Err(Error::IndexOutOfRange { index: 2, n: 2 })));
    }

    #[test]
    fn missing_diagonal_names_first_row() {
        let m = PartialSimilarityMatrix::from_entries(
            3,
            vec![(0, 0, 1.0), (2, 2, 1.0), (0, 1, 0.5)],
        )
        .unwrap();
        assert!(matches!(
            m.require_full_diagonal(),
            Err(Error::MissingDiagonal { row: 1 })
        ));
        assert!(toy().require_full_diagonal().is_ok());
    }

    #[test]
    fn observed_norm_double_counts_off_diagonal() {
        let m = toy();
        let expected = 1.0 + 4.0 + 9.0 + 2.0 * 0.25 + 2.0 * 0.0625;
        assert!((m.observed_sq_norm() - expected).abs() < 1e-15);
    }

    #[test]
    fn file_round_trip_is_bit_exact() {
        let m = toy();
        let mut buf = Vec::new();
        m.write(&mut buf).unwrap();
        let parsed =
            PartialSimilarityMatrix::read(buf.as_slice(), Path::new("mem")).unwrap();
        assert_eq!(m, parsed);
        // awkward magnitudes survive the 17-significant-digit format
        let tricky = PartialSimilarityMatrix::from_entries(
            2,
            vec![
                (0, 0, std::f64::consts::PI * 1e-13),
                (1, 1, -9.006_104_071_832_581e15),
                (0, 1, f64::MIN_POSITIVE),
            ],
        )
        .unwrap();
        let mut buf = Vec::new();
        tricky.write(&mut buf).unwrap();
        let parsed =
            PartialSimilarityMatrix::read(buf.as_slice(), Path::new("mem")).unwrap();
        assert_eq!(tricky, parsed);
    }

    #[test]
    fn malformed_files_are_rejected() {
        let p = Path::new("mem");
        let cases: &[&str] = &[
            "",                         // no header
            "2\n",                      // short header
            "2 1\n",                    // promised entry missing
            "2 1\n0 1 0.5\n1 1 2.0\n",  // too many entries
            "2 1\n1 0 0.5\n",           // i > j
            "2 1\n0 one 0.5\n",         // bad token
            "2 2 7\n",                  // long header
        ];
        for case in cases {
            assert!(
                PartialSimilarityMatrix::read(case.as_bytes(), p).is_err(),
                "accepted malformed input {case:?}"
            );
        }
    }
}
