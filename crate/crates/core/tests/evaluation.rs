use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermocad_core::eval::{cross_validate, metrics, roc_auc, stratified_kfold, ConfusionMatrix};
use thermocad_core::{ClassLabel, ClassifierConfig, Dataset, FeatureVector, SmoParams};

/// Fraction of positive-negative pairs ordered correctly, ties counting 1/2.
fn auc_by_pairs(scored: &[(f64, ClassLabel)]) -> f64 {
    let mut num = 0.0;
    let mut pairs = 0.0;
    for &(sp, _) in scored.iter().filter(|(_, l)| l.is_positive()) {
        for &(sn, _) in scored.iter().filter(|(_, l)| !l.is_positive()) {
            pairs += 1.0;
            if sp > sn {
                num += 1.0;
            } else if sp == sn {
                num += 0.5;
            }
        }
    }
    num / pairs
}

fn label(b: bool) -> ClassLabel {
    if b {
        ClassLabel::Finding
    } else {
        ClassLabel::Normal
    }
}

proptest! {
    #[test]
    fn auc_matches_pair_enumeration(
        scored in prop::collection::vec((-5i32..5, any::<bool>()), 2..60)
    ) {
        let scored: Vec<(f64, ClassLabel)> = scored.into_iter().map(|(s, b)| (f64::from(s) * 0.5, label(b))).collect();
        let has_both = scored.iter().any(|(_, l)| l.is_positive()) && scored.iter().any(|(_, l)| !l.is_positive());
        match roc_auc(&scored) {
            Ok(a) => {
                prop_assert!(has_both);
                prop_assert!((a - auc_by_pairs(&scored)).abs() < 1e-12);
                prop_assert!((0.0..=1.0).contains(&a));
            }
            Err(_) => prop_assert!(!has_both),
        }
    }

    #[test]
    fn auc_invariant_under_monotone_transform(
        scored in prop::collection::vec((-10.0f64..10.0, any::<bool>()), 2..40)
    ) {
        let scored: Vec<(f64, ClassLabel)> = scored.into_iter().map(|(s, b)| (s, label(b))).collect();
        if let Ok(a) = roc_auc(&scored) {
            let t: Vec<(f64, ClassLabel)> = scored.iter().map(|&(s, l)| ((s * 0.3).exp() + 2.0, l)).collect();
            prop_assert!((roc_auc(&t).unwrap() - a).abs() < 1e-12);
        }
    }

    #[test]
    fn label_swap_symmetry(tp in 0u64..100, tn in 0u64..100, fp in 0u64..100, fn_ in 0u64..100) {
        let cm = ConfusionMatrix::new(tp, tn, fp, fn_);
        prop_assume!(cm.total() > 0);
        let a = metrics(&cm).unwrap();
        let b = metrics(&cm.swapped()).unwrap();
        prop_assert_eq!(a.sensitivity, b.specificity);
        prop_assert_eq!(a.specificity, b.sensitivity);
        prop_assert_eq!(a.accuracy, b.accuracy);
        if let (Some(x), Some(y)) = (a.youden, b.youden) {
            prop_assert!((x.abs() - y.abs()).abs() < 1e-12);
        }
    }
}

#[test]
fn folds_stratified_for_many_seeds() {
    let samples = (0..102)
        .map(|i| FeatureVector::from_values(format!("{i}"), [0.0; 10], label(i >= 54)))
        .collect();
    let ds = Dataset::new(samples).unwrap();
    for seed in 0..50 {
        let folds = stratified_kfold(&ds, 7, seed).unwrap();
        let mut all: Vec<usize> = folds.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..102).collect::<Vec<_>>());
        for f in &folds {
            let normals = f.iter().filter(|&&i| i < 54).count();
            // ideal 54/7 = 7.71 normals and 48/7 = 6.86 findings per fold
            assert!((7..=8).contains(&normals));
            assert!((6..=7).contains(&(f.len() - normals)));
        }
    }
}

#[test]
fn random_labels_give_chance_accuracy() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 210;
    let samples = (0..n)
        .map(|i| {
            let v: [f64; 10] = std::array::from_fn(|_| rng.random_range(0.0..1.0));
            FeatureVector::from_values(format!("{i}"), v, label(i % 2 == 0))
        })
        .collect();
    let ds = Dataset::new(samples).unwrap();
    // majority rate is 0.5; allow four binomial standard deviations
    let sd = (0.25 / n as f64).sqrt();
    for cfg in [
        ClassifierConfig::Smo(SmoParams::default()),
        ClassifierConfig::NaiveBayes,
    ] {
        let r = cross_validate(&ds, 7, 1, &cfg).unwrap();
        assert!(
            (r.accuracy - 0.5).abs() <= 4.0 * sd,
            "{cfg}: {}",
            r.accuracy
        );
    }
}

#[test]
fn cross_validation_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let samples = (0..60)
        .map(|i| {
            let shift = if i % 2 == 0 { 0.3 } else { 0.0 };
            let v: [f64; 10] = std::array::from_fn(|_| rng.random_range(0.0..1.0) + shift);
            FeatureVector::from_values(format!("{i}"), v, label(i % 2 == 0))
        })
        .collect();
    let ds = Dataset::new(samples).unwrap();
    let cfg = ClassifierConfig::Smo(SmoParams::default());
    let a = cross_validate(&ds, 7, 3, &cfg).unwrap();
    let b = cross_validate(&ds, 7, 3, &cfg).unwrap();
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    let youden = a.sensitivity.unwrap() + a.specificity.unwrap() - 1.0;
    assert_eq!(a.youden.unwrap(), youden);
}
