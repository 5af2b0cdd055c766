use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sample::{ClassLabel, Dataset, FeatureVector, FEATURE_NAMES, N_FEATURES};

/// Exact column list of the feature CSV.
pub const FEATURE_HEADER: [&str; N_FEATURES + 2] = [
    "id", "m1", "m3", "gln_0", "gln_45", "gln_90", "gln_135", "rp_0", "rp_45", "rp_90", "rp_135",
    "label",
];

/// One row per sample, in the fixed [`FEATURE_HEADER`] layout.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FeatureTable {
    pub rows: Vec<FeatureVector>,
}

impl FeatureTable {
    pub fn new(rows: Vec<FeatureVector>) -> Self {
        FeatureTable { rows }
    }

    pub fn into_dataset(self) -> Result<Dataset> {
        Dataset::new(self.rows)
    }

    /// Writes UTF-8 CSV with LF newlines. Floats use the shortest
    /// representation that parses back to the same value.
    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(FEATURE_HEADER)?;
        for (row, fv) in self.rows.iter().enumerate() {
            if let Some(k) = fv.values().iter().position(|v| !v.is_finite()) {
                return Err(Error::Cell {
                    row: row + 1,
                    column: FEATURE_NAMES[k].to_owned(),
                    message: "non-finite value".into(),
                });
            }
            let mut record = Vec::with_capacity(FEATURE_HEADER.len());
            record.push(fv.id.clone());
            record.extend(fv.values().iter().map(|v| v.to_string()));
            record.push(fv.label.to_string());
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_from<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(input);
        let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
        if header != FEATURE_HEADER {
            return Err(Error::Header {
                expected: FEATURE_HEADER.join(","),
                found: header.join(","),
            });
        }
        let mut rows = Vec::new();
        for (row, record) in r.records().enumerate() {
            let record = record?;
            let row = row + 1;
            let mut values = [0.0; N_FEATURES];
            for (k, v) in values.iter_mut().enumerate() {
                let cell = &record[k + 1];
                *v = cell
                    .trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Cell {
                        row,
                        column: FEATURE_NAMES[k].to_owned(),
                        message: format!("not a finite number: {cell:?}"),
                    })?;
            }
            let label: ClassLabel = record[N_FEATURES + 1].trim().parse()?;
            rows.push(FeatureVector::from_values(&record[0], values, label));
        }
        Ok(FeatureTable { rows })
    }
}

pub fn write_features(table: &FeatureTable, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    table.write_to(&mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}

pub fn read_features(path: impl AsRef<Path>) -> Result<FeatureTable> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Input {
        path: path.to_owned(),
        source,
    })?;
    FeatureTable::read_from(file)
}
