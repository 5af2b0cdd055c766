//! Command implementations behind the `thermocad` binary.
//!
//! Each `run_*` function takes fully parsed arguments and returns a value
//! the binary turns into output and an exit code, so the commands can be
//! driven from tests without spawning a process.

pub mod args;

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use log::{info, warn};
use rayon::prelude::*;
use thermocad_core::imgio::{load_image, load_mask};
use thermocad_core::report::{
    read_features, render_comparison, write_eval_csv, write_features, Comparison, FeatureTable,
};
use thermocad_core::{
    cross_validate, extract_features, ClassLabel, ClassifierConfig, Dataset, EvalReport,
    FeatureVector, ModelDocument, Offset, Prediction,
};
use thiserror::Error;

use crate::args::{ClassifierKind, CompareArgs, EvalArgs, ExtractArgs, PredictArgs, TrainArgs};

pub const IMAGE_EXTENSIONS: [&str; 2] = ["pgm", "png"];

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] thermocad_core::Error),

    #[error("{0}")]
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(2)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Outcome of `extract`: rows written and images skipped (id, reason).
#[derive(Debug, Default)]
pub struct ExtractSummary {
    pub written: usize,
    pub failures: Vec<(String, String)>,
}

impl ExtractSummary {
    pub fn exit_code(&self) -> ExitCode {
        if self.failures.is_empty() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

/// Image files in `dir` with a supported extension, keyed by file stem.
/// A stem present with more than one extension maps to several paths.
fn image_files(dir: &Path) -> CliResult<BTreeMap<String, Vec<PathBuf>>> {
    let entries = fs::read_dir(dir)
        .map_err(|e| CliError::Config(format!("cannot list {}: {e}", dir.display())))?;
    let mut found: BTreeMap<String, Vec<PathBuf>> = BTreeMap::new();
    for entry in entries {
        let path = entry
            .map_err(|e| CliError::Config(format!("cannot list {}: {e}", dir.display())))?
            .path();
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        let supported = ext.is_some_and(|e| IMAGE_EXTENSIONS.contains(&e.as_str()));
        if !supported || !path.is_file() {
            continue;
        }
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            found.entry(stem.to_owned()).or_default().push(path);
        }
    }
    for paths in found.values_mut() {
        paths.sort();
    }
    Ok(found)
}

/// Reads an `id,label` manifest.
pub fn read_manifest(path: &Path) -> CliResult<HashMap<String, ClassLabel>> {
    let bad = |msg: String| CliError::Config(format!("{}: {msg}", path.display()));
    let mut reader = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["id", "label"] {
        return Err(bad(format!(
            "expected header id,label, found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut labels = HashMap::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let id = record[0].to_owned();
        let label: ClassLabel = record[1]
            .parse()
            .map_err(|e: thermocad_core::Error| bad(format!("row {}: {e}", i + 1)))?;
        if labels.insert(id.clone(), label).is_some() {
            return Err(bad(format!("duplicate id {id:?}")));
        }
    }
    Ok(labels)
}

fn single_path(id: &str, paths: &[PathBuf], what: &str) -> Result<PathBuf, String> {
    match paths {
        [p] => Ok(p.clone()),
        [] => Err(format!("no {what} found")),
        _ => Err(format!(
            "ambiguous {what}: {} files share the id {id:?}",
            paths.len()
        )),
    }
}

fn extract_one(
    id: &str,
    image: &Path,
    mask: Option<&Path>,
    label: ClassLabel,
    offset: Offset,
    levels: u16,
) -> thermocad_core::Result<FeatureVector> {
    let mut img = load_image(image, levels)?;
    if let Some(mask) = mask {
        img = load_mask(mask, &img)?;
    }
    extract_features(&img, offset, id, label)
}

/// Extracts features for every labelled image and writes them sorted by id.
/// Images that cannot be processed are reported in the summary and skipped.
pub fn run_extract(args: &ExtractArgs) -> CliResult<ExtractSummary> {
    let labels = read_manifest(&args.manifest)?;
    let images = image_files(&args.images)?;
    if images.is_empty() {
        return Err(CliError::Config(format!(
            "no PGM or PNG images in {}",
            args.images.display()
        )));
    }
    let masks = args.masks.as_deref().map(image_files).transpose()?;
    for id in labels.keys().filter(|id| !images.contains_key(*id)) {
        warn!("manifest id {id:?} has no image");
    }

    let offset = args.features.offset;
    let levels = args.features.levels;
    let results: Vec<(String, Result<FeatureVector, String>)> = images
        .par_iter()
        .map(|(id, paths)| {
            let outcome = (|| {
                let image = single_path(id, paths, "image")?;
                let label = *labels.get(id).ok_or("no label in manifest")?;
                let mask = match &masks {
                    Some(m) => Some(single_path(
                        id,
                        m.get(id).map_or(&[][..], Vec::as_slice),
                        "mask",
                    )?),
                    None => None,
                };
                extract_one(id, &image, mask.as_deref(), label, offset, levels).map_err(|e| match e
                {
                    thermocad_core::Error::Sample { source, .. } => source.to_string(),
                    e => e.to_string(),
                })
            })();
            (id.clone(), outcome)
        })
        .collect();

    let mut summary = ExtractSummary::default();
    let mut rows = Vec::with_capacity(results.len());
    for (id, outcome) in results {
        match outcome {
            Ok(row) => rows.push(row),
            Err(reason) => summary.failures.push((id, reason)),
        }
    }
    summary.written = rows.len();
    write_features(&FeatureTable::new(rows), &args.out)?;
    info!("wrote {} rows to {}", summary.written, args.out.display());
    Ok(summary)
}

pub fn load_dataset(path: &Path) -> CliResult<Dataset> {
    Ok(read_features(path)?.into_dataset()?)
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text)
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))
}

/// Cross-validates one classifier and writes the requested report files.
pub fn run_eval(args: &EvalArgs) -> CliResult<EvalReport> {
    let ds = load_dataset(&args.cv.features)?;
    let config = args.smo.classifier(args.classifier, args.cv.seed);
    let report = cross_validate(&ds, args.cv.k, args.cv.seed, &config)?;
    if let Some(out) = &args.out {
        write_text(out, &report.to_json()?)?;
    }
    if let Some(out) = &args.csv {
        let file = File::create(out)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", out.display())))?;
        write_eval_csv(&report, BufWriter::new(file))?;
    }
    Ok(report)
}

/// Cross-validates each distinct classifier on the same folds.
pub fn run_compare(args: &CompareArgs) -> CliResult<Comparison> {
    if args.classifier.is_empty() {
        return Err(CliError::Config(
            "compare needs at least one --classifier".into(),
        ));
    }
    let mut kinds: Vec<ClassifierKind> = Vec::new();
    for &kind in &args.classifier {
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    let ds = load_dataset(&args.cv.features)?;
    let reports = kinds
        .iter()
        .map(|&kind| {
            let config = args.smo.classifier(kind, args.cv.seed);
            let report = cross_validate(&ds, args.cv.k, args.cv.seed, &config)?;
            Ok((config.name().to_owned(), report))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let table = render_comparison(&reports, args.with_paper_results);
    if let Some(out) = &args.out {
        write_text(out, &table.to_json()?)?;
    }
    Ok(table)
}

/// Trains on the whole feature table and saves the model.
pub fn run_train(args: &TrainArgs) -> CliResult<ModelDocument> {
    let ds = load_dataset(&args.features)?;
    let config: ClassifierConfig = args.smo.classifier(args.classifier, args.seed);
    let doc = ModelDocument::new(config.train(&ds)?);
    doc.save(&args.out)?;
    Ok(doc)
}

/// Extracts features from one image and classifies them with a saved model.
pub fn run_predict(args: &PredictArgs) -> CliResult<(String, Prediction)> {
    let doc = ModelDocument::load(&args.model)?;
    let id = args
        .image
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("image")
        .to_owned();
    // The label is a placeholder; prediction never reads it.
    let features = extract_one(
        &id,
        &args.image,
        args.mask.as_deref(),
        ClassLabel::Normal,
        args.features.offset,
        args.features.levels,
    )?;
    let prediction = doc.model.predict(&features)?;
    Ok((id, prediction))
}
