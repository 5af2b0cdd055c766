//! Synthetic two-class image corpus.
//!
//! Normal images are horizontal gray ramps: every column is constant, so
//! vertical runs span the full height. Finding images are the same ramps
//! with salt noise, which fragments those runs.

use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermocad_core::imgio::write_raw_pgm;

pub struct Corpus {
    pub images: PathBuf,
    pub masks: PathBuf,
    pub manifest: PathBuf,
}

fn ramp(rng: &mut ChaCha8Rng, side: usize) -> Vec<u8> {
    let base: f64 = rng.random_range(0.0..64.0);
    let slope: f64 = rng.random_range(2.0..6.0);
    let mut px = vec![0u8; side * side];
    for y in 0..side {
        for x in 0..side {
            px[y * side + x] = (base + slope * x as f64).min(255.0) as u8;
        }
    }
    px
}

/// Centered ellipse covering most of the frame; 255 inside, 0 outside.
fn ellipse_mask(side: usize) -> Vec<u8> {
    let c = (side as f64 - 1.0) / 2.0;
    let (rx, ry) = (0.48 * side as f64, 0.40 * side as f64);
    let mut m = vec![0u8; side * side];
    for y in 0..side {
        for x in 0..side {
            let (u, v) = ((x as f64 - c) / rx, (y as f64 - c) / ry);
            if u * u + v * v <= 1.0 {
                m[y * side + x] = 255;
            }
        }
    }
    m
}

/// Writes `n_each` images per class plus masks and an `id,label` manifest.
pub fn write_corpus(root: &Path, n_each: usize, side: usize, seed: u64) -> Corpus {
    let images = root.join("images");
    let masks = root.join("masks");
    fs::create_dir_all(&images).unwrap();
    fs::create_dir_all(&masks).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = ellipse_mask(side);
    let mut manifest = String::from("id,label\n");
    for i in 0..n_each {
        let id = format!("ramp{i:02}");
        write_raw_pgm(
            side,
            side,
            &ramp(&mut rng, side),
            images.join(format!("{id}.pgm")),
        )
        .unwrap();
        write_raw_pgm(side, side, &mask, masks.join(format!("{id}.pgm"))).unwrap();
        manifest.push_str(&format!("{id},normal\n"));

        let id = format!("salt{i:02}");
        let mut px = ramp(&mut rng, side);
        for p in px.iter_mut() {
            if rng.random_bool(0.3) {
                *p = rng.random();
            }
        }
        write_raw_pgm(side, side, &px, images.join(format!("{id}.pgm"))).unwrap();
        write_raw_pgm(side, side, &mask, masks.join(format!("{id}.pgm"))).unwrap();
        manifest.push_str(&format!("{id},finding\n"));
    }
    let manifest_path = root.join("manifest.csv");
    fs::write(&manifest_path, manifest).unwrap();
    Corpus {
        images,
        masks,
        manifest: manifest_path,
    }
}
