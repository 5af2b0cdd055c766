//! Brute-force reference implementations used to check the texture code.
//!
//! These deliberately walk the image differently from the library: the
//! co-occurrence oracle visits every pixel and tests its partner, and the
//! run-length oracle materializes every scan line as a coordinate list and
//! splits it into maximal runs.

#![allow(dead_code)]

use thermocad_core::texture::Direction;
use thermocad_core::GrayImage;

/// `levels x levels` counts, row-major.
pub fn cooccurrence(image: &GrayImage, dx: i32, dy: i32) -> Vec<u64> {
    let l = usize::from(image.levels());
    let (w, h) = (image.width() as i64, image.height() as i64);
    let mask = image.mask();
    let inside = |x: i64, y: i64| {
        x >= 0 && y >= 0 && x < w && y < h && mask.is_none_or(|m| m[(y * w + x) as usize])
    };
    let mut counts = vec![0u64; l * l];
    for y in 0..h {
        for x in 0..w {
            let (x2, y2) = (x + i64::from(dx), y + i64::from(dy));
            if inside(x, y) && inside(x2, y2) {
                let i = usize::from(image.pixels()[(y * w + x) as usize]);
                let j = usize::from(image.pixels()[(y2 * w + x2) as usize]);
                counts[i * l + j] += 1;
            }
        }
    }
    counts
}

/// All scan lines for a direction, each as a list of (x, y).
pub fn scan_lines(width: usize, height: usize, direction: Direction) -> Vec<Vec<(usize, usize)>> {
    let (w, h) = (width as i64, height as i64);
    let mut lines = Vec::new();
    match direction.degrees() {
        0 => {
            for y in 0..h {
                lines.push((0..w).map(|x| (x, y)).collect::<Vec<_>>());
            }
        }
        90 => {
            for x in 0..w {
                lines.push((0..h).map(|y| (x, y)).collect());
            }
        }
        45 => {
            // anti-diagonals x + y = s
            for s in 0..(w + h - 1) {
                lines.push(
                    (0..w)
                        .filter_map(|x| {
                            let y = s - x;
                            (0..h).contains(&y).then_some((x, y))
                        })
                        .collect(),
                );
            }
        }
        135 => {
            // diagonals x - y = d
            for d in -(h - 1)..w {
                lines.push(
                    (0..w)
                        .filter_map(|x| {
                            let y = x - d;
                            (0..h).contains(&y).then_some((x, y))
                        })
                        .collect(),
                );
            }
        }
        _ => unreachable!(),
    }
    lines
        .into_iter()
        .map(|line| {
            line.into_iter()
                .map(|(x, y)| (x as usize, y as usize))
                .collect()
        })
        .collect()
}

/// Maps `(level, length) -> count` as a dense `levels x max_len` table
/// (column `len - 1`), plus the number of in-ROI pixels visited.
pub fn run_lengths(image: &GrayImage, direction: Direction, max_len: usize) -> (Vec<u64>, u64) {
    let l = usize::from(image.levels());
    let w = image.width();
    let mut counts = vec![0u64; l * max_len];
    let mut pixels = 0u64;
    for line in scan_lines(image.width(), image.height(), direction) {
        // None marks a pixel outside the ROI
        let values: Vec<Option<u8>> = line
            .iter()
            .map(|&(x, y)| {
                let inside = image.mask().is_none_or(|m| m[y * w + x]);
                inside.then(|| image.pixels()[y * w + x])
            })
            .collect();
        let mut k = 0;
        while k < values.len() {
            let Some(v) = values[k] else {
                k += 1;
                continue;
            };
            let mut len = 0;
            while k < values.len() && values[k] == Some(v) {
                len += 1;
                k += 1;
            }
            pixels += len as u64;
            counts[usize::from(v) * max_len + len - 1] += 1;
        }
    }
    (counts, pixels)
}
