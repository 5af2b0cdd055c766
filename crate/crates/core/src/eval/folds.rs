use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sample::{ClassLabel, Dataset};

/// Splits sample indices into `k` stratified folds.
///
/// Each class is shuffled with a generator seeded by `seed`, then dealt
/// round-robin over the folds. The deal position carries over from one
/// class to the next, so fold sizes differ by at most one and each class's
/// per-fold counts differ by at most one. With `k == len` every fold holds
/// exactly one sample (leave-one-out). Indices within a fold are sorted.
pub fn stratified_kfold(ds: &Dataset, k: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    let n = ds.len();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "number of folds must be in 2..={n}, got {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds = vec![Vec::new(); k];
    let mut next = 0;
    for class in [ClassLabel::Normal, ClassLabel::Finding] {
        let mut members: Vec<usize> = ds
            .samples()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.label == class)
            .map(|(i, _)| i)
            .collect();
        members.shuffle(&mut rng);
        for idx in members {
            folds[next % k].push(idx);
            next += 1;
        }
    }
    for f in &mut folds {
        f.sort_unstable();
    }
    Ok(folds)
}
