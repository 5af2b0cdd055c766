//! Texture-based classification of breast thermograms.
//!
//! The pipeline runs in four stages:
//!
//! 1. [`imgio`] loads 8-bit grayscale images (PGM or PNG), quantizes them
//!    and attaches an optional region-of-interest mask.
//! 2. [`texture`] computes ten texture features per image: the first and
//!    third moments of a directional co-occurrence matrix, and gray-level
//!    non-uniformity and run percentage of the run-length matrix in four
//!    directions.
//! 3. [`classify`] trains an SMO soft-margin SVM or Gaussian naive Bayes.
//! 4. [`eval`] runs stratified k-fold cross-validation and computes
//!    accuracy, precision, sensitivity, specificity, the Youden index and
//!    ROC AUC; [`report`] persists and tabulates the results.

pub mod classify;
pub mod error;
pub mod eval;
pub mod imgio;
pub mod report;
pub mod sample;
pub mod texture;

pub use classify::{ClassifierConfig, Kernel, ModelDocument, Prediction, SmoParams, TrainedModel};
pub use error::{Error, Result};
pub use eval::{cross_validate, ConfusionMatrix, EvalReport, Metrics};
pub use imgio::GrayImage;
pub use sample::{ClassLabel, Dataset, FeatureVector, FEATURE_NAMES, N_FEATURES};
pub use texture::{extract_features, Direction, Offset};
