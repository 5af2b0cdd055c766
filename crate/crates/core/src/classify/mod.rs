//! Binary classifiers over texture feature vectors: an SMO-trained
//! soft-margin SVM and Gaussian naive Bayes.

mod kernel;
pub mod naive_bayes;
mod scaler;
pub mod smo;

pub use kernel::Kernel;
pub use naive_bayes::{ClassStats, NaiveBayesModel};
pub use scaler::MinMaxScaler;
pub use smo::{SmoDiagnostics, SmoParams, SvmModel};

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::{ClassLabel, Dataset, FeatureVector};

/// Predicted class plus a score that increases with confidence in "finding".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub label: ClassLabel,
    pub score: f64,
}

fn design(train: &Dataset) -> Result<(Vec<Vec<f64>>, Vec<ClassLabel>)> {
    let mut rows = Vec::with_capacity(train.len());
    let mut labels = Vec::with_capacity(train.len());
    for s in train.samples() {
        s.ensure_finite()?;
        rows.push(s.values().to_vec());
        labels.push(s.label);
    }
    Ok((rows, labels))
}

pub fn train_smo(train: &Dataset, params: &SmoParams) -> Result<SvmModel> {
    let (rows, labels) = design(train)?;
    smo::fit(&rows, &labels, params)
}

pub fn predict_svm(model: &SvmModel, x: &FeatureVector) -> Result<Prediction> {
    let (label, score) = model.predict(&x.values())?;
    Ok(Prediction { label, score })
}

pub fn train_naive_bayes(train: &Dataset) -> Result<NaiveBayesModel> {
    let (rows, labels) = design(train)?;
    naive_bayes::fit(&rows, &labels)
}

pub fn predict_naive_bayes(model: &NaiveBayesModel, x: &FeatureVector) -> Result<Prediction> {
    let (label, score) = model.predict(&x.values())?;
    Ok(Prediction { label, score })
}

/// Which classifier to train, with its hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "classifier", rename_all = "snake_case")]
pub enum ClassifierConfig {
    Smo(SmoParams),
    NaiveBayes,
}

impl ClassifierConfig {
    pub fn name(&self) -> &'static str {
        match self {
            ClassifierConfig::Smo(_) => "SMO",
            ClassifierConfig::NaiveBayes => "NaiveBayes",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ClassifierConfig::Smo(p) => p.validate(),
            ClassifierConfig::NaiveBayes => Ok(()),
        }
    }

    pub fn train(&self, train: &Dataset) -> Result<TrainedModel> {
        match self {
            ClassifierConfig::Smo(p) => train_smo(train, p).map(TrainedModel::Svm),
            ClassifierConfig::NaiveBayes => train_naive_bayes(train).map(TrainedModel::NaiveBayes),
        }
    }
}

impl fmt::Display for ClassifierConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TrainedModel {
    Svm(SvmModel),
    NaiveBayes(NaiveBayesModel),
}

impl TrainedModel {
    pub fn name(&self) -> &'static str {
        match self {
            TrainedModel::Svm(_) => "SMO",
            TrainedModel::NaiveBayes(_) => "NaiveBayes",
        }
    }

    pub fn predict(&self, x: &FeatureVector) -> Result<Prediction> {
        match self {
            TrainedModel::Svm(m) => predict_svm(m, x),
            TrainedModel::NaiveBayes(m) => predict_naive_bayes(m, x),
        }
    }
}

pub const MODEL_FORMAT: &str = "thermocad-model";
pub const MODEL_VERSION: u32 = 1;

/// Versioned on-disk model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub format: String,
    pub version: u32,
    pub model: TrainedModel,
}

impl ModelDocument {
    pub fn new(model: TrainedModel) -> Self {
        ModelDocument {
            format: MODEL_FORMAT.to_owned(),
            version: MODEL_VERSION,
            model,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ModelDocument = serde_json::from_str(s)?;
        if doc.format != MODEL_FORMAT || doc.version != MODEL_VERSION {
            return Err(Error::InvalidArgument(format!(
                "unsupported model document {} v{} (expected {MODEL_FORMAT} v{MODEL_VERSION})",
                doc.format, doc.version
            )));
        }
        Ok(doc)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut s = self.to_json()?;
        s.push('\n');
        std::fs::write(path, s)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let s = std::fs::read_to_string(path).map_err(|source| Error::Input {
            path: path.to_owned(),
            source,
        })?;
        ModelDocument::from_json(&s)
    }
}
