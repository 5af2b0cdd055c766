//! Feature tables, evaluation exports and comparison tables.

mod comparison;
mod features_csv;
pub mod reference;

pub use comparison::{
    percent, render_comparison, Comparison, ComparisonRow, COLUMNS, LOCAL_SOURCE,
};
pub use features_csv::{read_features, write_features, FeatureTable, FEATURE_HEADER};
pub use reference::{
    reference_rows, ReferenceRow, ReferenceTable, CLASSIFIER_RESULTS, CROSS_WORK_RESULTS,
};

use std::io::Write;

use crate::error::Result;
use crate::eval::EvalReport;

pub const EVAL_CSV_HEADER: [&str; 11] = [
    "classifier",
    "samples",
    "n_normal",
    "n_finding",
    "accuracy",
    "sensitivity",
    "specificity",
    "precision",
    "youden",
    "auc",
    "test_mode",
];

/// Writes a report as a header plus one data row. Undefined metrics are empty cells.
pub fn write_eval_csv<W: Write>(report: &EvalReport, out: W) -> Result<()> {
    let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(EVAL_CSV_HEADER)?;
    w.write_record([
        report.classifier.clone(),
        report.n_samples.to_string(),
        report.n_normal.to_string(),
        report.n_finding.to_string(),
        report.accuracy.to_string(),
        opt(report.sensitivity),
        opt(report.specificity),
        opt(report.precision),
        opt(report.youden),
        opt(report.auc),
        report.test_mode.clone(),
    ])?;
    w.flush()?;
    Ok(())
}
