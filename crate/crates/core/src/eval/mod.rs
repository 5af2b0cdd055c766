//! Stratified cross-validation and binary classification metrics.

mod folds;
mod metrics;

pub use folds::stratified_kfold;
pub use metrics::{metrics, roc_auc, ConfusionMatrix, Metrics};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::ClassifierConfig;
use crate::error::{Error, Result};
use crate::sample::{ClassLabel, Dataset};

pub const DEFAULT_FOLDS: usize = 7;
pub const DEFAULT_SEED: u64 = 1;

/// Cross-validation outcome. Metrics come from the confusion counts pooled
/// over all folds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub classifier: String,
    pub test_mode: String,
    pub k: usize,
    pub seed: u64,
    pub n_samples: usize,
    pub n_normal: usize,
    pub n_finding: usize,
    pub accuracy: f64,
    pub precision: Option<f64>,
    pub sensitivity: Option<f64>,
    pub specificity: Option<f64>,
    pub youden: Option<f64>,
    pub auc: Option<f64>,
    pub confusion: ConfusionMatrix,
    pub folds: Vec<ConfusionMatrix>,
}

impl EvalReport {
    pub fn metrics(&self) -> Metrics {
        Metrics {
            accuracy: self.accuracy,
            precision: self.precision,
            sensitivity: self.sensitivity,
            specificity: self.specificity,
            youden: self.youden,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn test_mode(k: usize, n: usize) -> String {
    if k == n {
        "leave one out".to_owned()
    } else {
        format!("{k}-fold cross validation")
    }
}

struct FoldOutcome {
    confusion: ConfusionMatrix,
    scored: Vec<(f64, ClassLabel)>,
}

/// Trains on `k - 1` folds and tests on the remaining one, for every fold.
/// Folds run in parallel; results are reduced in fold order.
pub fn cross_validate(
    ds: &Dataset,
    k: usize,
    seed: u64,
    config: &ClassifierConfig,
) -> Result<EvalReport> {
    config.validate()?;
    let (n_normal, n_finding) = ds.class_counts();
    if n_normal == 0 || n_finding == 0 {
        return Err(Error::InvalidArgument(
            "cross-validation needs samples of both classes".into(),
        ));
    }
    let folds = stratified_kfold(ds, k, seed)?;

    let outcomes: Vec<FoldOutcome> = folds
        .par_iter()
        .enumerate()
        .map(|(fold, test_idx)| {
            let train_idx: Vec<usize> = folds
                .iter()
                .enumerate()
                .filter(|&(f, _)| f != fold)
                .flat_map(|(_, idx)| idx.iter().copied())
                .collect();
            let wrap = |e: Error| Error::Fold {
                fold,
                source: Box::new(e),
            };
            let model = config.train(&ds.subset(&train_idx)).map_err(wrap)?;
            let mut confusion = ConfusionMatrix::default();
            let mut scored = Vec::with_capacity(test_idx.len());
            for &i in test_idx {
                let sample = &ds.samples()[i];
                let pred = model.predict(sample).map_err(wrap)?;
                confusion.record(sample.label, pred.label);
                scored.push((pred.score, sample.label));
            }
            Ok(FoldOutcome { confusion, scored })
        })
        .collect::<Result<_>>()?;

    let per_fold: Vec<ConfusionMatrix> = outcomes.iter().map(|o| o.confusion).collect();
    let pooled: ConfusionMatrix = per_fold.iter().copied().sum();
    let scored: Vec<(f64, ClassLabel)> = outcomes.into_iter().flat_map(|o| o.scored).collect();
    let m = metrics(&pooled)?;
    let auc = roc_auc(&scored).ok();

    Ok(EvalReport {
        classifier: config.name().to_owned(),
        test_mode: test_mode(k, ds.len()),
        k,
        seed,
        n_samples: ds.len(),
        n_normal,
        n_finding,
        accuracy: m.accuracy,
        precision: m.precision,
        sensitivity: m.sensitivity,
        specificity: m.specificity,
        youden: m.youden,
        auc,
        confusion: pooled,
        folds: per_fold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::SmoParams;
    use crate::sample::FeatureVector;

    fn separable(n_per_class: usize) -> Dataset {
        let mut samples = Vec::new();
        for i in 0..2 * n_per_class {
            let finding = i >= n_per_class;
            let base = if finding { 10.0 } else { 0.0 };
            let jitter = (i % n_per_class) as f64 * 0.05;
            let label = if finding {
                ClassLabel::Finding
            } else {
                ClassLabel::Normal
            };
            samples.push(FeatureVector::from_values(
                format!("s{i}"),
                std::array::from_fn(|k| base + jitter + k as f64 * 0.01),
                label,
            ));
        }
        Dataset::new(samples).unwrap()
    }

    #[test]
    fn separable_data_is_perfect() {
        let ds = separable(14);
        for cfg in [
            ClassifierConfig::Smo(SmoParams::default()),
            ClassifierConfig::NaiveBayes,
        ] {
            let r = cross_validate(&ds, 7, 1, &cfg).unwrap();
            assert_eq!(r.accuracy, 1.0, "{cfg}");
            assert_eq!(r.youden, Some(1.0));
            assert_eq!(r.auc, Some(1.0));
            assert_eq!(r.test_mode, "7-fold cross validation");
            assert_eq!(
                r.folds.iter().copied().sum::<ConfusionMatrix>(),
                r.confusion
            );
            assert_eq!(r.confusion.total(), 28);
        }
    }

    #[test]
    fn leave_one_out_mode() {
        let ds = separable(5);
        let r = cross_validate(&ds, 10, 1, &ClassifierConfig::NaiveBayes).unwrap();
        assert_eq!(r.test_mode, "leave one out");
        assert_eq!(r.folds.len(), 10);
        assert!(r.folds.iter().all(|f| f.total() == 1));
    }

    #[test]
    fn single_fold_rejected() {
        assert!(cross_validate(&separable(5), 1, 1, &ClassifierConfig::NaiveBayes).is_err());
    }

    #[test]
    fn training_failure_reports_fold() {
        // 2 findings over 2 folds: each training set has a single finding
        let mut samples = separable(4).into_samples();
        samples.truncate(6);
        let ds = Dataset::new(samples).unwrap();
        let err = cross_validate(&ds, 2, 1, &ClassifierConfig::NaiveBayes).unwrap_err();
        assert!(matches!(err, Error::Fold { .. }), "{err}");
    }
}
