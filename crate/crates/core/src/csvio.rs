//! CSV readers and writers for samples, points, values and tables.
//!
//! Lines starting with `#` are comments. Numbers are written in their
//! shortest round-trip form, which never needs more than 17 significant
//! digits.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::convergence::ConvergenceRow;
use crate::error::{Error, Result};

/// Shortest round-trip text for `v`; scientific notation outside
/// `[1e-5, 1e16)`.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn reader(path: &Path, headers: bool) -> Result<csv::Reader<File>> {
    csv::ReaderBuilder::new()
        .has_headers(headers)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| csv_error(path, e))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::parse(path, format!("{other:?}")),
    }
}

fn parse_field(path: &Path, line: u64, field: &str) -> Result<f64> {
    field
        .parse::<f64>()
        .map_err(|_| Error::parse(path, format!("line {line}: '{field}' is not a number")))
}

/// Read a headerless numeric matrix; all rows must have the same length.
pub fn read_matrix(path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut rdr = reader(path, false)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_error(path, e))?;
        let line = rec.position().map_or(0, |p| p.line());
        let row = rec
            .iter()
            .map(|f| parse_field(path, line, f))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(
                    path,
                    format!("line {line}: {} columns, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Read `rows x cols` grid samples into a row-major vector.
pub fn read_samples(path: &Path, rows: usize, cols: usize) -> Result<Vec<f64>> {
    let matrix = read_matrix(path)?;
    let found_cols = matrix.first().map_or(0, Vec::len);
    if matrix.len() != rows || found_cols != cols {
        return Err(Error::Dimension {
            expected: format!("{rows} x {cols} samples"),
            found: format!("{} x {found_cols} in {}", matrix.len(), path.display()),
        });
    }
    Ok(matrix.into_iter().flatten().collect())
}

/// Read two-column evaluation points with a header line, e.g. `phi,theta`.
pub fn read_points(path: &Path) -> Result<Vec<(f64, f64)>> {
    let mut rdr = reader(path, true)?;
    let header_len = rdr.headers().map_err(|e| csv_error(path, e))?.len();
    if header_len != 2 {
        return Err(Error::parse(
            path,
            format!("expected a two-column header, found {header_len} columns"),
        ));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_error(path, e))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 2 {
            return Err(Error::parse(path, format!("line {line}: expected 2 columns")));
        }
        out.push((parse_field(path, line, &rec[0])?, parse_field(path, line, &rec[1])?));
    }
    Ok(out)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

/// Write `# key=value` comment lines, a header and numeric rows.
pub fn write_table(
    path: &Path,
    comments: &[String],
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<()> {
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    for c in comments {
        writeln!(w, "# {c}").map_err(io)?;
    }
    writeln!(w, "{}", header.join(",")).map_err(io)?;
    for row in rows {
        writeln!(w, "{}", row.join(",")).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// One `value` per line.
pub fn write_values(path: &Path, comments: &[String], values: &[f64]) -> Result<()> {
    write_table(
        path,
        comments,
        &["value"],
        values.iter().map(|&v| vec![fmt_f64(v)]),
    )
}

/// `index,<name>` listing of one grid direction.
pub fn write_coords(path: &Path, name: &str, coords: &[f64]) -> Result<()> {
    write_table(
        path,
        &[],
        &["index", name],
        coords
            .iter()
            .enumerate()
            .map(|(i, &c)| vec![i.to_string(), fmt_f64(c)]),
    )
}

/// Headerless `rows x cols` matrix.
pub fn write_matrix(path: &Path, values: &[f64], cols: usize) -> Result<()> {
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    for row in values.chunks(cols.max(1)) {
        let line: Vec<String> = row.iter().map(|&v| fmt_f64(v)).collect();
        writeln!(w, "{}", line.join(",")).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// `grid,m,N,rel_max_err` table.
pub fn write_convergence(path: &Path, comments: &[String], rows: &[ConvergenceRow]) -> Result<()> {
    write_table(
        path,
        comments,
        &["grid", "m", "N", "rel_max_err"],
        rows.iter().map(|r| {
            vec![
                r.grid.clone(),
                r.m.to_string(),
                r.points.to_string(),
                fmt_f64(r.rel_max_err),
            ]
        }),
    )
}
