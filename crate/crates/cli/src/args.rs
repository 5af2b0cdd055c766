use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thermocad_core::{ClassifierConfig, Kernel, Offset, SmoParams};

/// Texture-feature classification of breast thermograms.
///
/// Masks are grayscale images of the same size as their thermogram:
/// 0 marks pixels outside the region of interest, anything else inside.
/// Set THERMOCAD_LOG (error, warn, info, debug) to control logging.
#[derive(Debug, Parser)]
#[command(name = "thermocad", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the ten texture features for every image in a directory.
    Extract(ExtractArgs),
    /// Cross-validate one classifier on a feature CSV.
    Eval(EvalArgs),
    /// Cross-validate several classifiers and print a comparison table.
    Compare(CompareArgs),
    /// Train a classifier on a feature CSV and save the model as JSON.
    Train(TrainArgs),
    /// Classify a single image with a saved model.
    Predict(PredictArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FeatureArgs {
    /// Pixel displacement for the co-occurrence matrix, as DX,DY.
    #[arg(long, default_value = "0,1", value_parser = parse_offset, allow_hyphen_values = true)]
    pub offset: Offset,

    /// Number of gray levels after quantization (2..=256).
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u16).range(2..=256))]
    pub levels: u16,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    /// Directory of PGM/PNG images; the file stem is the sample id.
    #[arg(long)]
    pub images: PathBuf,

    /// Directory of ROI masks named like the images (optional).
    #[arg(long)]
    pub masks: Option<PathBuf>,

    /// CSV with columns id,label (label: normal | finding).
    #[arg(long)]
    pub manifest: PathBuf,

    #[command(flatten)]
    pub features: FeatureArgs,

    /// Output feature CSV.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassifierKind {
    Smo,
    Nb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Poly,
    Rbf,
}

#[derive(Debug, Clone, Args)]
pub struct SmoArgs {
    /// SVM box constraint.
    #[arg(long = "c", default_value_t = 1.0)]
    pub c: f64,

    #[arg(long, value_enum, default_value_t = KernelKind::Poly)]
    pub kernel: KernelKind,

    /// Polynomial kernel exponent.
    #[arg(long, default_value_t = 1)]
    pub degree: u32,

    /// RBF kernel width.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,

    /// SMO stopping tolerance.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
}

impl SmoArgs {
    pub fn params(&self, seed: u64) -> SmoParams {
        let kernel = match self.kernel {
            KernelKind::Poly => Kernel::Polynomial {
                degree: self.degree,
            },
            KernelKind::Rbf => Kernel::Rbf { gamma: self.gamma },
        };
        SmoParams {
            c: self.c,
            kernel,
            tol: self.tol,
            seed,
            max_iter: None,
        }
    }

    pub fn classifier(&self, kind: ClassifierKind, seed: u64) -> ClassifierConfig {
        match kind {
            ClassifierKind::Smo => ClassifierConfig::Smo(self.params(seed)),
            ClassifierKind::Nb => ClassifierConfig::NaiveBayes,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CvArgs {
    /// Feature CSV written by `extract`.
    #[arg(long)]
    pub features: PathBuf,

    /// Number of folds; equal to the sample count for leave-one-out.
    #[arg(long = "k", default_value_t = 7)]
    pub k: usize,

    /// Seed for fold assignment and solver tie-breaking.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub cv: CvArgs,

    #[arg(long, value_enum, default_value_t = ClassifierKind::Smo)]
    pub classifier: ClassifierKind,

    #[command(flatten)]
    pub smo: SmoArgs,

    /// Write the evaluation report as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Write the evaluation report as a one-row CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub cv: CvArgs,

    /// Classifiers to compare (repeat or comma-separate).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub classifier: Vec<ClassifierKind>,

    #[command(flatten)]
    pub smo: SmoArgs,

    /// Append published reference results to the table.
    #[arg(long)]
    pub with_paper_results: bool,

    /// Write the comparison table as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    #[arg(long)]
    pub features: PathBuf,

    #[arg(long, value_enum, default_value_t = ClassifierKind::Smo)]
    pub classifier: ClassifierKind,

    #[command(flatten)]
    pub smo: SmoArgs,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Output model JSON.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Model JSON written by `train`.
    #[arg(long)]
    pub model: PathBuf,

    /// Image to classify.
    #[arg(long)]
    pub image: PathBuf,

    /// ROI mask for the image.
    #[arg(long)]
    pub mask: Option<PathBuf>,

    #[command(flatten)]
    pub features: FeatureArgs,
}

pub fn parse_offset(s: &str) -> Result<Offset, String> {
    let (dx, dy) = s
        .split_once(',')
        .ok_or_else(|| format!("expected DX,DY, got {s:?}"))?;
    let dx: i32 = dx
        .trim()
        .parse()
        .map_err(|_| format!("invalid DX {dx:?}"))?;
    let dy: i32 = dy
        .trim()
        .parse()
        .map_err(|_| format!("invalid DY {dy:?}"))?;
    Offset::new(dx, dy).map_err(|e| e.to_string())
}
