//! Deterministic fixtures for the criterion benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermocad_core::{ClassLabel, Dataset, FeatureVector, GrayImage, N_FEATURES};

/// Square image of smooth vertical bands with mild noise, quantized to `levels`.
pub fn textured_image(side: usize, levels: u16, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<u8> = (0..side * side)
        .map(|i| {
            let x = (i % side) as f64;
            let band = 127.0 + 100.0 * (x / 9.0).sin();
            (band + rng.random_range(-12.0..12.0)).clamp(0.0, 255.0) as u8
        })
        .collect();
    GrayImage::from_raw(side, side, levels, &raw).expect("valid image")
}

/// Two overlapping Gaussian-ish clusters with the given class sizes.
pub fn feature_dataset(n_normal: usize, n_finding: usize, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n_normal + n_finding)
        .map(|i| {
            let label = if i < n_normal {
                ClassLabel::Normal
            } else {
                ClassLabel::Finding
            };
            let shift = if label.is_positive() { 0.5 } else { 0.0 };
            let values: [f64; N_FEATURES] = std::array::from_fn(|_| {
                let u: f64 = (0..4).map(|_| rng.random_range(-1.0..1.0)).sum();
                u + shift
            });
            FeatureVector::from_values(format!("b{i:04}"), values, label)
        })
        .collect();
    Dataset::new(rows).expect("unique ids")
}
