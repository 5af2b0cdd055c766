#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermocad_core::ClassLabel;

/// `n` points in `[-3, 3]^dim` labeled by a random hyperplane through the
/// origin, keeping only points at distance at least `margin` from it.
pub fn separable(n: usize, dim: usize, margin: f64, seed: u64) -> (Vec<Vec<f64>>, Vec<ClassLabel>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    let norm = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut rows = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    while rows.len() < n {
        let x: Vec<f64> = (0..dim).map(|_| rng.random_range(-3.0..3.0)).collect();
        let d = x.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / norm;
        if d.abs() < margin {
            continue;
        }
        // alternate classes so both are equally represented
        let want_pos = rows.len() % 2 == 0;
        if (d > 0.0) != want_pos {
            continue;
        }
        rows.push(x);
        labels.push(if d > 0.0 {
            ClassLabel::Finding
        } else {
            ClassLabel::Normal
        });
    }
    (rows, labels)
}
