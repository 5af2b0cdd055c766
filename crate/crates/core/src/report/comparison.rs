use serde::Serialize;

use super::reference::{reference_rows, ReferenceRow};
use crate::error::Result;
use crate::eval::EvalReport;

pub const COLUMNS: [&str; 8] = [
    "Classifier",
    "Samples",
    "Sens.",
    "Spec.",
    "Acc.",
    "Youden",
    "Test Mode",
    "Source",
];

pub const LOCAL_SOURCE: &str = "this run";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub name: String,
    pub samples: String,
    pub sensitivity: String,
    pub specificity: String,
    pub accuracy: String,
    pub youden: String,
    pub test_mode: String,
    pub source: String,
    pub published: bool,
}

impl ComparisonRow {
    pub fn cells(&self) -> [&str; 8] {
        [
            &self.name,
            &self.samples,
            &self.sensitivity,
            &self.specificity,
            &self.accuracy,
            &self.youden,
            &self.test_mode,
            &self.source,
        ]
    }

    fn from_report(name: &str, r: &EvalReport) -> Self {
        ComparisonRow {
            name: name.to_owned(),
            samples: format!("{} ({}/{})", r.n_samples, r.n_normal, r.n_finding),
            sensitivity: percent(r.sensitivity),
            specificity: percent(r.specificity),
            accuracy: percent(Some(r.accuracy)),
            youden: r
                .youden
                .map_or_else(|| "-".to_owned(), |y| format!("{y:.2}")),
            test_mode: r.test_mode.clone(),
            source: LOCAL_SOURCE.to_owned(),
            published: false,
        }
    }

    fn from_reference(row: &ReferenceRow) -> Self {
        ComparisonRow {
            name: row.name.to_owned(),
            samples: row.samples.to_owned(),
            sensitivity: row.sensitivity.to_owned(),
            specificity: row.specificity.to_owned(),
            accuracy: row.accuracy.to_owned(),
            youden: row.youden.to_owned(),
            test_mode: row.test_mode.to_owned(),
            source: row.table.source_label().to_owned(),
            published: true,
        }
    }
}

/// Ratios render as percentages with one decimal; undefined ones as "-".
pub fn percent(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_owned(), |v| format!("{:.1}%", v * 100.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub columns: Vec<String>,
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    /// Aligned plain-text table, one line per row, LF-terminated.
    pub fn to_text(&self) -> String {
        let rows: Vec<[&str; 8]> = self.rows.iter().map(ComparisonRow::cells).collect();
        let mut widths = COLUMNS.map(|c| c.chars().count());
        for cells in &rows {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[&str; 8]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned()
        };
        let mut out = line(&COLUMNS);
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&rule.join("  "));
        out.push('\n');
        for cells in &rows {
            out.push_str(&line(cells));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// Builds the comparison table. Local rows are sorted by accuracy
/// (descending, ties by name); published rows follow in published order.
pub fn render_comparison(ours: &[(String, EvalReport)], include_reference: bool) -> Comparison {
    let mut sorted: Vec<&(String, EvalReport)> = ours.iter().collect();
    sorted.sort_by(|a, b| {
        b.1.accuracy
            .total_cmp(&a.1.accuracy)
            .then_with(|| a.0.cmp(&b.0))
    });
    let mut rows: Vec<ComparisonRow> = sorted
        .into_iter()
        .map(|(name, r)| ComparisonRow::from_report(name, r))
        .collect();
    if include_reference {
        rows.extend(reference_rows().map(ComparisonRow::from_reference));
    }
    Comparison {
        columns: COLUMNS.iter().map(|c| (*c).to_owned()).collect(),
        rows,
    }
}
