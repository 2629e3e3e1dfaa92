//! CSV exchange format: header `x1,x2`, one decimal pair per line.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sample::BivariateSample;

pub fn read_csv(path: impl AsRef<Path>) -> Result<BivariateSample> {
    read_csv_from(File::open(path)?)
}

pub fn read_csv_from<R: Read>(reader: R) -> Result<BivariateSample> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers().map_err(|e| csv_error(1, e))?.clone();
    if header.is_empty() {
        return Err(Error::Domain("empty file".into()));
    }
    if header.iter().collect::<Vec<_>>() != ["x1", "x2"] {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header 'x1,x2', found '{}'", header.iter().collect::<Vec<_>>().join(",")),
        });
    }
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            csv_error(line, e)
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let field = |k: usize| -> Result<f64> {
            record[k].parse::<f64>().map_err(|e| Error::Parse {
                line,
                message: format!("field {}: {e}", k + 1),
            })
        };
        rows.push((field(0)?, field(1)?));
    }
    if rows.is_empty() {
        return Err(Error::Domain("file contains no data rows".into()));
    }
    BivariateSample::new(rows)
}

fn csv_error(line: u64, e: csv::Error) -> Error {
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

pub fn write_csv(path: impl AsRef<Path>, sample: &BivariateSample) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_csv_to(&mut w, sample)?;
    w.flush()?;
    Ok(())
}

/// Values are written in shortest round-trip form, so reading back is exact.
pub fn write_csv_to<W: Write>(mut writer: W, sample: &BivariateSample) -> Result<()> {
    writer.write_all(b"x1,x2\n")?;
    for (a, b) in sample.rows() {
        writeln!(writer, "{a},{b}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_single_row() {
        let s = read_csv_from("x1,x2\n1.0,2.0\n".as_bytes()).unwrap();
        assert_eq!(s.rows(), &[(1.0, 2.0)]);
    }

    #[test]
    fn missing_field_reports_line() {
        let err = read_csv_from("x1,x2\n1.0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = read_csv_from("x1,x2\n1,2\n3,4\n5,abc\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(read_csv_from("".as_bytes()), Err(Error::Domain(_))));
        assert!(matches!(read_csv_from("x1,x2\n".as_bytes()), Err(Error::Domain(_))));
        assert!(matches!(read_csv_from("a,b\n1,2\n".as_bytes()), Err(Error::Parse { line: 1, .. })));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]
            #[test]
            fn write_then_read_is_identity(
                rows in prop::collection::vec((prop::num::f64::NORMAL, prop::num::f64::NORMAL), 1..1000)
            ) {
                let sample = BivariateSample::new(rows).unwrap();
                let mut buf = Vec::new();
                write_csv_to(&mut buf, &sample).unwrap();
                prop_assert_eq!(read_csv_from(buf.as_slice()).unwrap(), sample);
            }
        }
    }
}
