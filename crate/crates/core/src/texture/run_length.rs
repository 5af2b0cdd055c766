use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imgio::GrayImage;

/// Scan direction for run-length statistics.
///
/// 0° scans rows left to right, 90° scans columns top to bottom, 45° steps
/// up-right `(+1, -1)` and 135° steps up-left `(-1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "0")]
    Deg0,
    #[serde(rename = "45")]
    Deg45,
    #[serde(rename = "90")]
    Deg90,
    #[serde(rename = "135")]
    Deg135,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Deg0,
        Direction::Deg45,
        Direction::Deg90,
        Direction::Deg135,
    ];

    pub fn degrees(self) -> u32 {
        match self {
            Direction::Deg0 => 0,
            Direction::Deg45 => 45,
            Direction::Deg90 => 90,
            Direction::Deg135 => 135,
        }
    }

    pub fn from_degrees(deg: u32) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.degrees() == deg)
    }

    /// Column/row step along the scan line.
    pub fn step(self) -> (i64, i64) {
        match self {
            Direction::Deg0 => (1, 0),
            Direction::Deg45 => (1, -1),
            Direction::Deg90 => (0, 1),
            Direction::Deg135 => (-1, -1),
        }
    }

    /// Longest run that fits in a `width x height` image along this direction.
    pub fn max_run(self, width: usize, height: usize) -> usize {
        match self {
            Direction::Deg0 => width,
            Direction::Deg90 => height,
            Direction::Deg45 | Direction::Deg135 => width.min(height),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}

/// Counts of maximal runs by gray level and exact run length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthMatrix {
    levels: usize,
    max_len: usize,
    /// `levels x max_len`, column `l - 1` holds runs of length `l`.
    counts: Vec<u64>,
    direction: Direction,
    n_pixels: u64,
}

impl RunLengthMatrix {
    /// Builds a matrix from explicit counts; `counts[i * max_len + (l - 1)]`
    /// is the number of runs of level `i` with length `l`.
    pub fn from_counts(
        levels: usize,
        max_len: usize,
        counts: Vec<u64>,
        direction: Direction,
        n_pixels: u64,
    ) -> Result<Self> {
        if counts.len() != levels * max_len {
            return Err(Error::InvalidArgument(format!(
                "expected {} counts, got {}",
                levels * max_len,
                counts.len()
            )));
        }
        Ok(RunLengthMatrix {
            levels,
            max_len,
            counts,
            direction,
            n_pixels,
        })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// In-ROI pixel count (the area used by the run percentage).
    pub fn n_pixels(&self) -> u64 {
        self.n_pixels
    }

    /// Number of runs of `level` with length exactly `len` (1-based).
    pub fn get(&self, level: usize, len: usize) -> u64 {
        if len == 0 || len > self.max_len {
            return 0;
        }
        self.counts[level * self.max_len + len - 1]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total_runs(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `sum_{i,l} l * R(i, l)`; equals `n_pixels` for a well-formed matrix.
    pub fn covered_pixels(&self) -> u64 {
        self.counts
            .chunks(self.max_len)
            .flat_map(|row| row.iter().enumerate().map(|(k, &c)| (k as u64 + 1) * c))
            .sum()
    }

    fn runs_per_level(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.chunks(self.max_len).map(|row| row.iter().sum())
    }
}

/// Counts maximal runs along `direction`. Out-of-ROI pixels are skipped
/// and terminate runs, as does the image border.
pub fn run_length_matrix(image: &GrayImage, direction: Direction) -> Result<RunLengthMatrix> {
    let levels = usize::from(image.levels());
    let max_len = direction.max_run(image.width(), image.height());
    let mut counts = vec![0u64; levels * max_len];
    let (sx, sy) = direction.step();
    let mut n_pixels = 0u64;

    for y in 0..image.height() as i64 {
        for x in 0..image.width() as i64 {
            let Some(v) = image.roi_value(x, y) else {
                continue;
            };
            n_pixels += 1;
            if image.roi_value(x - sx, y - sy) == Some(v) {
                // not the first pixel of its run
                continue;
            }
            let mut len = 1;
            while image.roi_value(x + sx * len as i64, y + sy * len as i64) == Some(v) {
                len += 1;
            }
            counts[usize::from(v) * max_len + len - 1] += 1;
        }
    }

    if n_pixels == 0 {
        return Err(Error::EmptyRuns {
            degrees: direction.degrees(),
        });
    }
    Ok(RunLengthMatrix {
        levels,
        max_len,
        counts,
        direction,
        n_pixels,
    })
}

/// `sum_i (sum_l R(i,l))^2 / sum_{i,l} R(i,l)`.
pub fn gray_level_non_uniformity(rlm: &RunLengthMatrix) -> Result<f64> {
    let total = rlm.total_runs();
    if total == 0 {
        return Err(Error::EmptyRuns {
            degrees: rlm.direction.degrees(),
        });
    }
    let squares: f64 = rlm.runs_per_level().map(|r| (r as f64) * (r as f64)).sum();
    Ok(squares / total as f64)
}

/// Total run count divided by the in-ROI pixel count.
pub fn run_percentage(rlm: &RunLengthMatrix) -> Result<f64> {
    if rlm.n_pixels == 0 {
        return Err(Error::EmptyRuns {
            degrees: rlm.direction.degrees(),
        });
    }
    Ok(rlm.total_runs() as f64 / rlm.n_pixels as f64)
}
