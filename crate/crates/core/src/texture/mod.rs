//! Texture statistics over a (masked) gray-level image.
//!
//! Two families of statistics are computed:
//!
//! - the first and third moments of the directional co-occurrence
//!   probability matrix, `m_g = sum_ij P(i,j) (i - j)^g`;
//! - gray-level non-uniformity and run percentage of the maximal-run
//!   matrix, in each of the four directions 0°, 45°, 90° and 135°.
//!
//! Together they form the ten-element [`FeatureVector`].

mod cooccurrence;
mod run_length;

pub use cooccurrence::{
    cooccurrence, moment, normalize_cooccurrence, CooccurrenceMatrix, Offset, ProbabilityMatrix,
};
pub use run_length::{
    gray_level_non_uniformity, run_length_matrix, run_percentage, Direction, RunLengthMatrix,
};

use crate::error::{Error, Result};
use crate::imgio::GrayImage;
use crate::sample::{ClassLabel, FeatureVector};

/// Computes the ten texture features of `image`. Errors carry the sample id.
pub fn extract_features(
    image: &GrayImage,
    offset: Offset,
    id: &str,
    label: ClassLabel,
) -> Result<FeatureVector> {
    compute(image, offset)
        .map(|values| FeatureVector::from_values(id, values, label))
        .map_err(|e| e.for_sample(id))
}

fn compute(image: &GrayImage, offset: Offset) -> Result<[f64; 10]> {
    if image.roi_pixel_count() == 0 {
        return Err(Error::EmptyRoi);
    }
    let pm = normalize_cooccurrence(&cooccurrence(image, offset)?)?;
    let mut gln = [0.0; 4];
    let mut rp = [0.0; 4];
    for (k, dir) in Direction::ALL.into_iter().enumerate() {
        let rlm = run_length_matrix(image, dir)?;
        gln[k] = gray_level_non_uniformity(&rlm)?;
        rp[k] = run_percentage(&rlm)?;
    }
    Ok([
        moment(&pm, 1),
        moment(&pm, 3),
        gln[0],
        gln[1],
        gln[2],
        gln[3],
        rp[0],
        rp[1],
        rp[2],
        rp[3],
    ])
}
