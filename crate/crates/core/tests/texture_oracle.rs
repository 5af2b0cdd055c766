mod support;

use proptest::prelude::*;
use support::oracle;
use thermocad_core::texture::{
    cooccurrence, gray_level_non_uniformity, moment, normalize_cooccurrence, run_length_matrix,
    run_percentage, Direction, Offset,
};
use thermocad_core::{extract_features, ClassLabel, GrayImage};

fn image_strategy(max_side: usize, levels: &'static [u16]) -> impl Strategy<Value = GrayImage> {
    (
        1..=max_side,
        1..=max_side,
        prop::sample::select(levels),
        any::<bool>(),
    )
        .prop_flat_map(|(w, h, l, masked)| {
            let n = w * h;
            (
                Just((w, h, l)),
                prop::collection::vec(0..l as u8, n),
                prop::collection::vec(prop::bool::weighted(0.7), n),
                Just(masked),
            )
        })
        .prop_filter_map("empty mask", |((w, h, l), px, mask, masked)| {
            let img = GrayImage::new(w, h, l, px).unwrap();
            if masked {
                img.with_mask(mask).ok()
            } else {
                Some(img)
            }
        })
}

fn offset_strategy() -> impl Strategy<Value = Offset> {
    (-2i32..=2, -2i32..=2)
        .prop_filter("zero offset", |&(dx, dy)| dx != 0 || dy != 0)
        .prop_map(|(dx, dy)| Offset::new(dx, dy).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn cooccurrence_matches_oracle(img in image_strategy(16, &[2, 4, 8]), off in offset_strategy()) {
        let expected = oracle::cooccurrence(&img, off.dx(), off.dy());
        match cooccurrence(&img, off) {
            Ok(cm) => prop_assert_eq!(cm.counts(), expected.as_slice()),
            Err(_) => prop_assert!(expected.iter().all(|&c| c == 0)),
        }
    }

    #[test]
    fn run_lengths_match_oracle(img in image_strategy(16, &[2, 4, 8])) {
        for dir in Direction::ALL {
            let rlm = run_length_matrix(&img, dir).unwrap();
            let (expected, pixels) = oracle::run_lengths(&img, dir, rlm.max_len());
            prop_assert_eq!(rlm.counts(), expected.as_slice());
            prop_assert_eq!(rlm.n_pixels(), pixels);
            prop_assert_eq!(rlm.covered_pixels(), img.roi_pixel_count() as u64);
        }
    }

    #[test]
    fn run_statistic_bounds(img in image_strategy(12, &[2, 4, 8])) {
        for dir in Direction::ALL {
            let rlm = run_length_matrix(&img, dir).unwrap();
            let runs = rlm.total_runs() as f64;
            let gln = gray_level_non_uniformity(&rlm).unwrap();
            prop_assert!(gln >= runs / f64::from(img.levels()) - 1e-9);
            prop_assert!(gln <= runs + 1e-9);
            let rp = run_percentage(&rlm).unwrap();
            prop_assert!(rp > 0.0 && rp <= 1.0);

            // rp == 1 iff no two adjacent in-ROI pixels along the direction match
            let (sx, sy) = dir.step();
            let mut adjacent_equal = false;
            for y in 0..img.height() as i64 {
                for x in 0..img.width() as i64 {
                    if let (Some(a), Some(b)) = (img.roi_value(x, y), img.roi_value(x + sx, y + sy)) {
                        adjacent_equal |= a == b;
                    }
                }
            }
            prop_assert_eq!(rp == 1.0, !adjacent_equal);
        }
    }

    #[test]
    fn probabilities_sum_to_one(img in image_strategy(16, &[2, 4, 8]), off in offset_strategy()) {
        if let Ok(cm) = cooccurrence(&img, off) {
            let pm = normalize_cooccurrence(&cm).unwrap();
            let sum: f64 = pm.probs().iter().sum();
            prop_assert!((sum - 1.0).abs() <= 1e-9);
            prop_assert!(pm.probs().iter().all(|&p| p >= 0.0));
        }
    }

    #[test]
    fn odd_moments_of_symmetric_matrix_vanish(img in image_strategy(12, &[4, 8])) {
        // an offset and its negation together give a symmetric count table
        let fwd = cooccurrence(&img, Offset::new(1, 0).unwrap());
        let back = cooccurrence(&img, Offset::new(-1, 0).unwrap());
        if let (Ok(a), Ok(b)) = (fwd, back) {
            let l = a.levels();
            let sym: Vec<u64> = a.counts().iter().zip(b.counts()).map(|(x, y)| x + y).collect();
            for i in 0..l { for j in 0..l { prop_assert_eq!(sym[i * l + j], sym[j * l + i]); } }
            let cm = thermocad_core::texture::CooccurrenceMatrix::from_counts(l, sym, Offset::default()).unwrap();
            let pm = normalize_cooccurrence(&cm).unwrap();
            prop_assert!(moment(&pm, 1).abs() <= 1e-12);
            prop_assert!(moment(&pm, 3).abs() <= 1e-12);
        }
    }

    #[test]
    fn gray_shift_invariance(img in image_strategy(12, &[4, 8]), shift in 1u8..4) {
        let l = img.levels();
        // fold values into the range that stays legal after shifting
        let room = l as u8 - shift;
        let base_px: Vec<u8> = img.pixels().iter().map(|v| v % room).collect();
        let shifted_px: Vec<u8> = base_px.iter().map(|v| v + shift).collect();
        let build = |px: Vec<u8>| {
            let g = GrayImage::new(img.width(), img.height(), l, px).unwrap();
            match img.mask() {
                Some(m) => g.with_mask(m.to_vec()).unwrap(),
                None => g,
            }
        };
        let a = extract_features(&build(base_px), Offset::default(), "a", ClassLabel::Normal);
        let b = extract_features(&build(shifted_px), Offset::default(), "a", ClassLabel::Normal);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                for (x, y) in a.values().iter().zip(b.values()) {
                    prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
                }
            }
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "shift changed error behavior"),
        }
    }
}

/// Composition of the oracle-checked operations on a fixed 12x12 image.
#[test]
fn extract_features_composes_operations() {
    let px: Vec<u8> = (0..144u32).map(|i| ((i * 37 + i / 5) % 8) as u8).collect();
    let img = GrayImage::new(12, 12, 8, px).unwrap();
    let fv = extract_features(&img, Offset::default(), "x", ClassLabel::Finding).unwrap();

    let l = 8usize;
    let counts = oracle::cooccurrence(&img, 0, 1);
    let total: u64 = counts.iter().sum();
    let mut m1 = 0.0;
    let mut m3 = 0.0;
    for i in 0..l {
        for j in 0..l {
            let p = counts[i * l + j] as f64 / total as f64;
            m1 += p * (i as f64 - j as f64);
            m3 += p * (i as f64 - j as f64).powi(3);
        }
    }
    assert!((fv.m1 - m1).abs() < 1e-12);
    assert!((fv.m3 - m3).abs() < 1e-12);

    let gln = [fv.gln_0, fv.gln_45, fv.gln_90, fv.gln_135];
    let rp = [fv.rp_0, fv.rp_45, fv.rp_90, fv.rp_135];
    for (k, dir) in Direction::ALL.into_iter().enumerate() {
        let (table, pixels) = oracle::run_lengths(&img, dir, 12);
        let per_level: Vec<f64> = table
            .chunks(12)
            .map(|r| r.iter().sum::<u64>() as f64)
            .collect();
        let runs: f64 = per_level.iter().sum();
        let expected_gln = per_level.iter().map(|r| r * r).sum::<f64>() / runs;
        assert!((gln[k] - expected_gln).abs() < 1e-12, "{dir}");
        assert!((rp[k] - runs / pixels as f64).abs() < 1e-12, "{dir}");
    }
    assert_eq!(fv.label, ClassLabel::Finding);
    assert_eq!(fv.values().len(), 10);
}

#[test]
fn oracle_scan_line_counts() {
    assert_eq!(oracle::scan_lines(4, 4, Direction::Deg45).len(), 7);
    assert_eq!(oracle::scan_lines(4, 4, Direction::Deg135).len(), 7);
    assert_eq!(oracle::scan_lines(5, 3, Direction::Deg0).len(), 3);
    let covered: usize = oracle::scan_lines(5, 3, Direction::Deg135)
        .iter()
        .map(Vec::len)
        .sum();
    assert_eq!(covered, 15);
}
