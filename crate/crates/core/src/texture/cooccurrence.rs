use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imgio::GrayImage;

/// Pixel displacement `(dx, dy)`; `dx` steps columns, `dy` steps rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Offset {
    dx: i32,
    dy: i32,
}

impl Offset {
    pub fn new(dx: i32, dy: i32) -> Result<Self> {
        if dx == 0 && dy == 0 {
            return Err(Error::InvalidArgument(
                "offset (0, 0) is not allowed".into(),
            ));
        }
        Ok(Offset { dx, dy })
    }

    pub fn dx(self) -> i32 {
        self.dx
    }

    pub fn dy(self) -> i32 {
        self.dy
    }
}

impl Default for Offset {
    /// One row down: `(dx, dy) = (0, 1)`.
    fn default() -> Self {
        Offset { dx: 0, dy: 1 }
    }
}

/// Directional gray-level co-occurrence counts, `counts[i][j]` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooccurrenceMatrix {
    levels: usize,
    counts: Vec<u64>,
    offset: Offset,
}

impl CooccurrenceMatrix {
    /// Builds a matrix from explicit counts (row-major `levels x levels`).
    pub fn from_counts(levels: usize, counts: Vec<u64>, offset: Offset) -> Result<Self> {
        if counts.len() != levels * levels {
            return Err(Error::InvalidArgument(format!(
                "expected {} counts for {levels} levels, got {}",
                levels * levels,
                counts.len()
            )));
        }
        Ok(CooccurrenceMatrix {
            levels,
            counts,
            offset,
        })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn offset(&self) -> Offset {
        self.offset
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.levels + j]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Co-occurrence probabilities; entries sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMatrix {
    levels: usize,
    probs: Vec<f64>,
}

impl ProbabilityMatrix {
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.probs[i * self.levels + j]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Counts ordered gray-level pairs `(V(x,y), V(x+dx, y+dy))`.
///
/// A pair counts only when both pixels lie inside the image and inside the
/// ROI. The result is not symmetrized.
pub fn cooccurrence(image: &GrayImage, offset: Offset) -> Result<CooccurrenceMatrix> {
    let levels = usize::from(image.levels());
    let mut counts = vec![0u64; levels * levels];
    let (w, h) = (image.width() as i64, image.height() as i64);
    let (dx, dy) = (i64::from(offset.dx), i64::from(offset.dy));

    // restrict to positions whose partner is in bounds
    let xs = 0.max(-dx)..w.min(w - dx);
    let ys = 0.max(-dy)..h.min(h - dy);
    for y in ys {
        for x in xs.clone() {
            let (Some(i), Some(j)) = (image.roi_value(x, y), image.roi_value(x + dx, y + dy))
            else {
                continue;
            };
            counts[usize::from(i) * levels + usize::from(j)] += 1;
        }
    }

    if counts.iter().all(|&c| c == 0) {
        return Err(Error::EmptyPairs {
            dx: offset.dx,
            dy: offset.dy,
        });
    }
    Ok(CooccurrenceMatrix {
        levels,
        counts,
        offset,
    })
}

pub fn normalize_cooccurrence(cm: &CooccurrenceMatrix) -> Result<ProbabilityMatrix> {
    let total = cm.total();
    if total == 0 {
        return Err(Error::DivisionByZero("co-occurrence matrix"));
    }
    let total = total as f64;
    Ok(ProbabilityMatrix {
        levels: cm.levels,
        probs: cm.counts.iter().map(|&c| c as f64 / total).collect(),
    })
}

/// Signed moment `sum_ij P(i,j) (i - j)^g`.
pub fn moment(pm: &ProbabilityMatrix, g: u32) -> f64 {
    let l = pm.levels;
    let mut acc = 0.0;
    for i in 0..l {
        let row = &pm.probs[i * l..(i + 1) * l];
        for (j, &p) in row.iter().enumerate() {
            if p != 0.0 {
                acc += p * (i as f64 - j as f64).powi(g as i32);
            }
        }
    }
    acc
}
