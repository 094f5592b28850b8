//! Score-matrix ingestion: validated construction, CSV loading and a seeded
//! synthetic generator.

use std::collections::HashSet;
use std::io::Read;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Inclusive lower bound for a valid score.
pub const SCORE_MIN: f64 = 0.0;
/// Inclusive upper bound for a valid score.
pub const SCORE_MAX: f64 = 100.0;

/// N×M matrix of per-student course scores with row identifiers.
///
/// Construction enforces the matrix invariants: at least one row and one
/// column, uniform row length, every score finite and inside
/// `[SCORE_MIN, SCORE_MAX]`, unique student ids. The fields stay private
/// so no path around the validation exists; the CSV codec is the
/// serialization format.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix<S> {
    student_ids: Vec<String>,
    course_names: Option<Vec<String>>,
    values: Vec<S>,
    n_rows: usize,
    n_cols: usize,
}

impl<S: Scalar> ScoreMatrix<S> {
    /// Builds a validated matrix from per-student rows.
    pub fn new(
        student_ids: Vec<String>,
        rows: Vec<Vec<S>>,
        course_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n_cols = rows[0].len();
        if n_cols == 0 {
            return Err(Error::InvalidInput("rows must have at least one score".into()));
        }
        if student_ids.len() != rows.len() {
            return Err(Error::InvalidInput(format!(
                "{} student ids for {} rows",
                student_ids.len(),
                rows.len()
            )));
        }
        let mut seen = HashSet::new();
        for id in &student_ids {
            validate_csv_field(id, "student id")?;
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateId { id: id.clone() });
            }
        }
        if let Some(names) = &course_names {
            if names.len() != n_cols {
                return Err(Error::InvalidInput(format!(
                    "{} course names for {} score columns",
                    names.len(),
                    n_cols
                )));
            }
            for name in names {
                validate_csv_field(name, "course name")?;
            }
        }
        let mut values = Vec::with_capacity(rows.len() * n_cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                validate_score(v, i + 1, j + 1)?;
                values.push(v);
            }
        }
        Ok(Self {
            student_ids,
            course_names,
            values,
            n_rows: rows.len(),
            n_cols,
        })
    }

    /// Builds a matrix with generated ids (`S0001`, `S0002`, ...) and no
    /// course names. Convenient for fixtures and programmatic use.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let ids = generated_ids(rows.len());
        Self::new(ids, rows, None)
    }

    /// Number of students (rows).
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    /// Number of courses (columns).
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Score row for student `i`.
    pub fn row(&self, i: usize) -> &[S] {
        &self.values[i * self.n_cols..(i + 1) * self.n_cols]
    }

    /// Iterator over all score rows in order.
    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.values.chunks_exact(self.n_cols)
    }

    pub fn student_ids(&self) -> &[String] {
        &self.student_ids
    }

    pub fn course_names(&self) -> Option<&[String]> {
        self.course_names.as_deref()
    }
}

fn validate_score<S: Scalar>(v: S, row: usize, col: usize) -> Result<()> {
    let as_f64 = v.to_f64().unwrap_or(f64::NAN);
    if !v.is_finite() || !(SCORE_MIN..=SCORE_MAX).contains(&as_f64) {
        return Err(Error::ScoreOutOfRange {
            row,
            col,
            value: as_f64,
        });
    }
    Ok(())
}

fn validate_csv_field(value: &str, what: &str) -> Result<()> {
    if value.is_empty() {
        return Err(Error::InvalidInput(format!("{what} must not be empty")));
    }
    if value.contains(',') || value.contains('\n') || value.contains('\r') {
        return Err(Error::InvalidInput(format!(
            "{what} {value:?} contains a separator character"
        )));
    }
    Ok(())
}

fn generated_ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("S{i:04}")).collect()
}

/// How a CSV source is shaped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CsvOptions {
    /// First line is a header row; its fields become the course names.
    pub has_header: bool,
    /// First field of every row is the student id.
    pub id_column: bool,
}

impl CsvOptions {
    /// The dialect produced by `gen` and consumed by `analyze`/`cluster`:
    /// header line plus a leading id column.
    pub const PIPELINE: CsvOptions = CsvOptions {
        has_header: true,
        id_column: true,
    };
}

/// Loads a score matrix from CSV text.
///
/// Dialect: comma separator, LF or CRLF line endings, no quoting (ids and
/// course names must not contain commas). Blank lines are ignored. Row
/// numbers in errors are 1-based over data rows; column numbers are 1-based
/// over the raw record, id column included.
pub fn load_csv<S: Scalar, R: Read>(mut source: R, options: CsvOptions) -> Result<ScoreMatrix<S>> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Error::InvalidInput("input is not valid UTF-8".into()))?;
    let lines: Vec<&str> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut lines = lines.into_iter();
    let mut expected_fields = None;
    let course_names = if options.has_header {
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        expected_fields = Some(header.len());
        let names = if options.id_column {
            &header[1..]
        } else {
            &header[..]
        };
        Some(names.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    } else {
        None
    };

    let mut ids = Vec::new();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let row_no = idx + 1;
        let fields: Vec<&str> = line.split(',').collect();
        let expected = *expected_fields.get_or_insert(fields.len());
        if fields.len() != expected {
            return Err(Error::RaggedRow {
                row: row_no,
                expected,
                found: fields.len(),
            });
        }
        let score_fields = if options.id_column {
            ids.push(fields[0].to_string());
            &fields[1..]
        } else {
            &fields[..]
        };
        let mut row = Vec::with_capacity(score_fields.len());
        for (j, cell) in score_fields.iter().enumerate() {
            let col = j + 1 + usize::from(options.id_column);
            let cell = cell.trim();
            let v: S = cell.parse().map_err(|_| Error::NonNumericCell {
                row: row_no,
                col,
                value: cell.to_string(),
            })?;
            validate_score(v, row_no, col)?;
            row.push(v);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    if rows[0].is_empty() {
        return Err(Error::InvalidInput("no score columns present".into()));
    }
    if !options.id_column {
        ids = generated_ids(rows.len());
    }
    ScoreMatrix::new(ids, rows, course_names)
}

/// Deterministically synthesizes an `n`×`m` score matrix with `k_true`
/// planted clusters.
///
/// Row `i` belongs to planted cluster `i % k_true`, so cluster sizes are as
/// equal as possible. Each score is drawn as `center + spread * z` with
/// `z ~ N(0, 1)` from a ChaCha8 stream seeded by `seed`, then clamped to
/// `[0, 100]`. The same arguments always produce the same matrix.
pub fn generate_synthetic<S: Scalar>(
    n: usize,
    m: usize,
    k_true: usize,
    band_centers: &[f64],
    spread: f64,
    seed: u64,
) -> Result<ScoreMatrix<S>> {
    if k_true == 0 {
        return Err(Error::InvalidInput("k_true must be at least 1".into()));
    }
    if n < k_true {
        return Err(Error::InvalidInput(format!(
            "n={n} is smaller than k_true={k_true}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidInput("m must be at least 1".into()));
    }
    if band_centers.len() != k_true {
        return Err(Error::InvalidInput(format!(
            "{} band centers for k_true={k_true}",
            band_centers.len()
        )));
    }
    for &c in band_centers {
        if !c.is_finite() || !(SCORE_MIN..=SCORE_MAX).contains(&c) {
            return Err(Error::InvalidInput(format!(
                "band center {c} is outside [0, 100]"
            )));
        }
    }
    if !spread.is_finite() || spread < 0.0 {
        return Err(Error::InvalidInput(format!(
            "spread must be finite and non-negative, got {spread}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let center = band_centers[i % k_true];
            (0..m)
                .map(|_| {
                    let z: f64 = rng.sample(StandardNormal);
                    S::cast((center + spread * z).clamp(SCORE_MIN, SCORE_MAX))
                })
                .collect()
        })
        .collect();
    let names = (1..=m).map(|j| format!("C{j}")).collect();
    ScoreMatrix::new(generated_ids(n), rows, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(has_header: bool, id_column: bool) -> CsvOptions {
        CsvOptions {
            has_header,
            id_column,
        }
    }

    #[test]
    fn minimal_well_formed_file() {
        let m: ScoreMatrix<f64> =
            load_csv("id,C1,C2\nA,50,70\nB,30,50".as_bytes(), opts(true, true)).unwrap();
        assert_eq!(m.n_rows(), 2);
        assert_eq!(m.n_cols(), 2);
        assert_eq!(m.student_ids(), ["A".to_string(), "B".to_string()]);
        assert_eq!(m.course_names().unwrap(), ["C1".to_string(), "C2".to_string()]);
        assert_eq!(m.row(0), [50.0, 70.0]);
        assert_eq!(m.row(1), [30.0, 50.0]);
    }

    #[test]
    fn out_of_range_cell_is_located() {
        let err = load_csv::<f64, _>("A,50,101".as_bytes(), opts(false, true)).unwrap_err();
        match err {
            Error::ScoreOutOfRange { row, col, value } => {
                assert_eq!((row, col), (1, 3));
                assert_eq!(value, 101.0);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn ragged_row_is_located() {
        let err = load_csv::<f64, _>("A,50,70\nB,30".as_bytes(), opts(false, true)).unwrap_err();
        match err {
            Error::RaggedRow { row, expected, found } => {
                assert_eq!((row, expected, found), (2, 3, 2));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn non_numeric_cell_is_located() {
        let err = load_csv::<f64, _>("A,50,oops\n".as_bytes(), opts(false, true)).unwrap_err();
        match err {
            Error::NonNumericCell { row, col, value } => {
                assert_eq!((row, col), (1, 3));
                assert_eq!(value, "oops");
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn nan_cell_rejected() {
        let err = load_csv::<f64, _>("A,NaN".as_bytes(), opts(false, true)).unwrap_err();
        assert!(matches!(err, Error::ScoreOutOfRange { row: 1, col: 2, .. }));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = load_csv::<f64, _>("A,50\nA,60".as_bytes(), opts(false, true)).unwrap_err();
        assert!(matches!(err, Error::DuplicateId { id } if id == "A"));
    }

    #[test]
    fn empty_file_rejected() {
        assert!(matches!(
            load_csv::<f64, _>("".as_bytes(), opts(false, false)),
            Err(Error::EmptyInput)
        ));
        // Header only, no data rows.
        assert!(matches!(
            load_csv::<f64, _>("id,C1\n".as_bytes(), opts(true, true)),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn crlf_and_generated_ids() {
        let m: ScoreMatrix<f64> = load_csv("50,70\r\n30,50\r\n".as_bytes(), opts(false, false)).unwrap();
        assert_eq!(m.student_ids(), ["S0001".to_string(), "S0002".to_string()]);
        assert_eq!(m.row(1), [30.0, 50.0]);
        assert!(m.course_names().is_none());
    }

    #[test]
    fn decimal_scores_accepted() {
        let m: ScoreMatrix<f64> = load_csv("A,49.85,62.22".as_bytes(), opts(false, true)).unwrap();
        assert_eq!(m.row(0), [49.85, 62.22]);
    }

    #[test]
    fn synthetic_zero_spread_is_constant() {
        let m: ScoreMatrix<f64> = generate_synthetic(4, 1, 1, &[50.0], 0.0, 1).unwrap();
        assert_eq!(m.n_rows(), 4);
        for row in m.rows() {
            assert_eq!(row, [50.0]);
        }
    }

    #[test]
    fn synthetic_is_deterministic() {
        let a: ScoreMatrix<f64> = generate_synthetic(79, 9, 3, &[62.0, 53.0, 46.0], 3.0, 7).unwrap();
        let b: ScoreMatrix<f64> = generate_synthetic(79, 9, 3, &[62.0, 53.0, 46.0], 3.0, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n_rows(), 79);
        assert_eq!(a.n_cols(), 9);
    }

    #[test]
    fn synthetic_rejects_bad_shapes() {
        assert!(generate_synthetic::<f64>(2, 9, 3, &[62.0, 53.0, 46.0], 3.0, 7).is_err());
        assert!(generate_synthetic::<f64>(79, 0, 3, &[62.0, 53.0, 46.0], 3.0, 7).is_err());
        assert!(generate_synthetic::<f64>(79, 9, 3, &[62.0, 53.0], 3.0, 7).is_err());
        assert!(generate_synthetic::<f64>(79, 9, 3, &[62.0, 53.0, 146.0], 3.0, 7).is_err());
        assert!(generate_synthetic::<f64>(79, 9, 3, &[62.0, 53.0, 46.0], -1.0, 7).is_err());
        assert!(generate_synthetic::<f64>(79, 9, 0, &[], 3.0, 7).is_err());
    }

    #[test]
    fn constructor_rejects_separator_in_id() {
        let err = ScoreMatrix::new(vec!["a,b".into()], vec![vec![1.0f64]], None).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }
}
