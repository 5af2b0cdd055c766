//! Gaussian naive Bayes over two classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::ClassLabel;

/// Relative variance floor, scaled by the squared training range of each feature.
pub const VARIANCE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassStats {
    pub label: ClassLabel,
    pub prior: f64,
    pub mean: Vec<f64>,
    pub variance: Vec<f64>,
}

impl ClassStats {
    fn log_joint(&self, x: &[f64]) -> f64 {
        let ln_2pi = (2.0 * std::f64::consts::PI).ln();
        let ll: f64 = x
            .iter()
            .zip(self.mean.iter().zip(&self.variance))
            .map(|(&v, (&mu, &var))| -0.5 * (ln_2pi + var.ln() + (v - mu) * (v - mu) / var))
            .sum();
        self.prior.ln() + ll
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaiveBayesModel {
    /// Normal first, then finding.
    pub classes: [ClassStats; 2],
}

impl NaiveBayesModel {
    pub fn dim(&self) -> usize {
        self.classes[0].mean.len()
    }

    /// Class posteriors `[P(normal | x), P(finding | x)]`.
    pub fn posterior(&self, x: &[f64]) -> Result<[f64; 2]> {
        if x.len() != self.dim() {
            return Err(Error::FeatureDimension {
                expected: self.dim(),
                found: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite feature value".into()));
        }
        let lj = [self.classes[0].log_joint(x), self.classes[1].log_joint(x)];
        let m = lj[0].max(lj[1]);
        let e = [(lj[0] - m).exp(), (lj[1] - m).exp()];
        let z = e[0] + e[1];
        Ok([e[0] / z, e[1] / z])
    }

    /// Argmax posterior, ties to normal. The score is `P(finding | x)`.
    pub fn predict(&self, x: &[f64]) -> Result<(ClassLabel, f64)> {
        let [p_normal, p_finding] = self.posterior(x)?;
        let label = if p_finding > p_normal {
            ClassLabel::Finding
        } else {
            ClassLabel::Normal
        };
        Ok((label, p_finding))
    }
}

pub fn fit(rows: &[Vec<f64>], labels: &[ClassLabel]) -> Result<NaiveBayesModel> {
    if rows.len() != labels.len() {
        return Err(Error::InvalidArgument(format!(
            "{} rows but {} labels",
            rows.len(),
            labels.len()
        )));
    }
    let Some(first) = rows.first() else {
        return Err(Error::Training("empty training set".into()));
    };
    let dim = first.len();
    for (k, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::FeatureDimension {
                expected: dim,
                found: row.len(),
            });
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                id: format!("#{k}"),
            });
        }
    }

    let floor: Vec<f64> = (0..dim)
        .map(|k| {
            let (lo, hi) = rows
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                    (lo.min(r[k]), hi.max(r[k]))
                });
            let range = hi - lo;
            if range > 0.0 {
                VARIANCE_FLOOR * range * range
            } else {
                VARIANCE_FLOOR
            }
        })
        .collect();

    let n = rows.len() as f64;
    let stats = |label: ClassLabel| -> Result<ClassStats> {
        let members: Vec<&Vec<f64>> = rows
            .iter()
            .zip(labels)
            .filter(|(_, &l)| l == label)
            .map(|(r, _)| r)
            .collect();
        if members.len() < 2 {
            return Err(Error::Training(format!(
                "class {label} has {} samples, naive Bayes needs at least 2",
                members.len()
            )));
        }
        let m = members.len() as f64;
        let mean: Vec<f64> = (0..dim)
            .map(|k| members.iter().map(|r| r[k]).sum::<f64>() / m)
            .collect();
        let variance = (0..dim)
            .map(|k| {
                let ss: f64 = members.iter().map(|r| (r[k] - mean[k]).powi(2)).sum();
                (ss / (m - 1.0)).max(floor[k])
            })
            .collect();
        Ok(ClassStats {
            label,
            prior: m / n,
            mean,
            variance,
        })
    };
    Ok(NaiveBayesModel {
        classes: [stats(ClassLabel::Normal)?, stats(ClassLabel::Finding)?],
    })
}
