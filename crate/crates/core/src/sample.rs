//! Labeled texture descriptors and collections of them.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of numeric features in a [`FeatureVector`].
pub const N_FEATURES: usize = 10;

/// Feature names in storage order.
pub const FEATURE_NAMES: [&str; N_FEATURES] = [
    "m1", "m3", "gln_0", "gln_45", "gln_90", "gln_135", "rp_0", "rp_45", "rp_90", "rp_135",
];

/// Diagnostic class of a single breast. `Finding` is the positive class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassLabel {
    Normal,
    Finding,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Normal => "normal",
            ClassLabel::Finding => "finding",
        }
    }

    pub fn is_positive(self) -> bool {
        self == ClassLabel::Finding
    }

    /// +1 for findings, -1 for normals.
    pub fn sign(self) -> f64 {
        if self.is_positive() {
            1.0
        } else {
            -1.0
        }
    }

    pub fn flipped(self) -> ClassLabel {
        match self {
            ClassLabel::Normal => ClassLabel::Finding,
            ClassLabel::Finding => ClassLabel::Normal,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" => Ok(ClassLabel::Normal),
            "finding" => Ok(ClassLabel::Finding),
            other => Err(Error::Vocabulary(other.to_owned())),
        }
    }
}

/// The ten-element texture descriptor of one image plus its label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub id: String,
    pub m1: f64,
    pub m3: f64,
    pub gln_0: f64,
    pub gln_45: f64,
    pub gln_90: f64,
    pub gln_135: f64,
    pub rp_0: f64,
    pub rp_45: f64,
    pub rp_90: f64,
    pub rp_135: f64,
    pub label: ClassLabel,
}

impl FeatureVector {
    /// Builds a vector from features in [`FEATURE_NAMES`] order.
    pub fn from_values(
        id: impl Into<String>,
        values: [f64; N_FEATURES],
        label: ClassLabel,
    ) -> Self {
        let [m1, m3, gln_0, gln_45, gln_90, gln_135, rp_0, rp_45, rp_90, rp_135] = values;
        FeatureVector {
            id: id.into(),
            m1,
            m3,
            gln_0,
            gln_45,
            gln_90,
            gln_135,
            rp_0,
            rp_45,
            rp_90,
            rp_135,
            label,
        }
    }

    pub fn values(&self) -> [f64; N_FEATURES] {
        [
            self.m1,
            self.m3,
            self.gln_0,
            self.gln_45,
            self.gln_90,
            self.gln_135,
            self.rp_0,
            self.rp_45,
            self.rp_90,
            self.rp_135,
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.values().iter().all(|v| v.is_finite())
    }

    pub(crate) fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite {
                id: self.id.clone(),
            })
        }
    }
}

/// A labeled collection of feature vectors with unique ids.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    samples: Vec<FeatureVector>,
}

impl Dataset {
    pub fn new(samples: Vec<FeatureVector>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(samples.len());
        for s in &samples {
            if !seen.insert(s.id.as_str()) {
                return Err(Error::DuplicateId(s.id.clone()));
            }
        }
        Ok(Dataset { samples })
    }

    pub fn samples(&self) -> &[FeatureVector] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<FeatureVector> {
        self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `(normal, finding)` counts.
    pub fn class_counts(&self) -> (usize, usize) {
        class_counts(&self.samples)
    }

    /// Subset by sample indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        Dataset {
            samples: indices.iter().map(|&i| self.samples[i].clone()).collect(),
        }
    }
}

pub(crate) fn class_counts(samples: &[FeatureVector]) -> (usize, usize) {
    let findings = samples.iter().filter(|s| s.label.is_positive()).count();
    (samples.len() - findings, findings)
}
