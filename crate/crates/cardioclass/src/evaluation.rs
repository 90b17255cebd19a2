//! Stratified cross-validation with feature selection nested inside each
//! training fold, plus a lexicographic grid-search helper.
//!
//! The default protocol reruns the two-stage selector on every training
//! fold so the held-out subjects never influence which features are used.
//! The non-nested variant (selection once on the full cohort, then CV on
//! the frozen feature set) is available behind a flag for comparison.
//!
//! ```
//! use cardioclass::evaluation::kfold_split;
//!
//! let labels = vec![0, 0, 0, 1, 1, 1, 1, 1, 1];
//! let plan = kfold_split(&labels, 3, 7).unwrap();
//! for fold in &plan.folds {
//!     assert_eq!(fold.len(), 3);
//!     assert_eq!(fold.iter().filter(|&&i| labels[i] == 0).count(), 1);
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::classifiers::{train_ensemble, EnsembleConfig, MlpConfig};
use crate::error::{Error, Result};
use crate::selection::{two_stage_select, TwoStageConfig};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Test-set indices for each fold; training indices are the complement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoldPlan {
    pub folds: Vec<Vec<usize>>,
}

impl FoldPlan {
    pub fn training_indices(&self, fold: usize) -> Vec<usize> {
        let test = &self.folds[fold];
        let n: usize = self.folds.iter().map(|f| f.len()).sum();
        (0..n).filter(|i| !test.contains(i)).collect()
    }
}

/// Stratified k-fold split: within each class, members are shuffled
/// (seeded) and dealt cyclically to folds, with the dealing cursor carried
/// across classes so overall fold sizes also differ by at most one.
pub fn kfold_split(labels: &[usize], k: usize, seed: u64) -> Result<FoldPlan> {
    let n = labels.len();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "fold count {k} must be in 2..={n}"
        )));
    }
    let num_classes = labels.iter().max().map_or(0, |&m| m + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut cursor = 0usize;
    for class in 0..num_classes {
        let mut members: Vec<usize> =
            (0..n).filter(|&i| labels[i] == class).collect();
        members.shuffle(&mut rng);
        for idx in members {
            folds[cursor % k].push(idx);
            cursor += 1;
        }
    }
    for f in folds.iter_mut() {
        f.sort_unstable();
    }
    Ok(FoldPlan { folds })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CvConfig {
    pub k: usize,
    pub seed: u64,
    pub selection: TwoStageConfig,
    pub ensemble: EnsembleConfig,
    /// When false, selection runs once on the full cohort before splitting.
    pub nested: bool,
}

impl Default for CvConfig {
    fn default() -> Self {
        CvConfig {
            k: 8,
            seed: 0,
            selection: TwoStageConfig::default(),
            ensemble: EnsembleConfig::default(),
            nested: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoldResult {
    pub fold: usize,
    pub test_indices: Vec<usize>,
    pub predictions: Vec<usize>,
    pub accuracy: f64,
    pub selected_features: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CvReport {
    pub folds: Vec<FoldResult>,
    /// Mean and population standard deviation of per-fold accuracies.
    pub mean_accuracy: f64,
    pub std_accuracy: f64,
    /// Fraction of all subjects predicted correctly.
    pub pooled_accuracy: f64,
    /// confusion[true][predicted], pooled over folds.
    pub confusion: Vec<Vec<usize>>,
    pub num_classes: usize,
    pub nested: bool,
    pub seed: u64,
}

pub fn run_cv(
    x: &[Vec<f64>],
    labels: &[usize],
    feature_names: &[String],
    volumetric_cols: &[usize],
    thickness_shape_cols: &[usize],
    config: &CvConfig,
) -> Result<CvReport> {
    let num_classes = labels.iter().max().map_or(0, |&m| m + 1);
    if num_classes < 2 {
        return Err(Error::InvalidArgument("need at least 2 classes".to_string()));
    }
    let plan = kfold_split(labels, config.k, config.seed)?;

    let frozen_selection = if config.nested {
        None
    } else {
        Some(
            two_stage_select(
                x,
                feature_names,
                labels,
                volumetric_cols,
                thickness_shape_cols,
                &config.selection,
            )?
            .stage2
            .selected,
        )
    };

    let mut folds = Vec::with_capacity(config.k);
    let mut confusion = vec![vec![0usize; num_classes]; num_classes];
    let mut pooled_correct = 0usize;
    for fold in 0..config.k {
        let train_idx = plan.training_indices(fold);
        let test_idx = plan.folds[fold].clone();
        let train_x: Vec<Vec<f64>> = train_idx.iter().map(|&i| x[i].clone()).collect();
        let train_y: Vec<usize> = train_idx.iter().map(|&i| labels[i]).collect();

        let selected = match &frozen_selection {
            Some(s) => s.clone(),
            None => {
                two_stage_select(
                    &train_x,
                    feature_names,
                    &train_y,
                    volumetric_cols,
                    thickness_shape_cols,
                    &config.selection,
                )?
                .stage2
                .selected
            }
        };

        let project = |row: &Vec<f64>| -> Vec<f64> {
            selected.iter().map(|&j| row[j]).collect()
        };
        let sel_train: Vec<Vec<f64>> = train_x.iter().map(project).collect();
        let sel_names: Vec<String> =
            selected.iter().map(|&j| feature_names[j].clone()).collect();
        let mut ensemble = config.ensemble.clone();
        // fold-specific perceptron seed keeps folds independent but reproducible
        ensemble.mlp = MlpConfig {
            seed: config.ensemble.mlp.seed ^ (fold as u64).wrapping_mul(0x9E3779B97F4A7C15),
            ..config.ensemble.mlp.clone()
        };
        let model = train_ensemble(&sel_train, &train_y, num_classes, &sel_names, &ensemble)?;

        let mut predictions = Vec::with_capacity(test_idx.len());
        let mut correct = 0usize;
        for &i in &test_idx {
            let pred = model.predict(&project(&x[i].clone()))?;
            confusion[labels[i]][pred] += 1;
            if pred == labels[i] {
                correct += 1;
            }
            predictions.push(pred);
        }
        pooled_correct += correct;
        folds.push(FoldResult {
            fold,
            accuracy: correct as f64 / test_idx.len() as f64,
            test_indices: test_idx,
            predictions,
            selected_features: selected,
        });
    }

    let kf = config.k as f64;
    let mean = folds.iter().map(|f| f.accuracy).sum::<f64>() / kf;
    let var = folds.iter().map(|f| (f.accuracy - mean).powi(2)).sum::<f64>() / kf;
    Ok(CvReport {
        folds,
        mean_accuracy: mean,
        std_accuracy: var.sqrt(),
        pooled_accuracy: pooled_correct as f64 / labels.len() as f64,
        confusion,
        num_classes,
        nested: config.nested,
        seed: config.seed,
    })
}

/// Cross-validation repeated with `repeats` different split seeds
/// (`base seed + r`); the headline accuracy averages the per-repeat means.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepeatedCvReport {
    pub repeats: Vec<CvReport>,
    pub mean_accuracy: f64,
    pub std_accuracy: f64,
}

pub fn run_repeated_cv(
    x: &[Vec<f64>],
    labels: &[usize],
    feature_names: &[String],
    volumetric_cols: &[usize],
    thickness_shape_cols: &[usize],
    config: &CvConfig,
    repeats: usize,
) -> Result<RepeatedCvReport> {
    if repeats == 0 {
        return Err(Error::InvalidArgument("repeats must be >= 1".to_string()));
    }
    let mut reports = Vec::with_capacity(repeats);
    for r in 0..repeats {
        let mut cfg = config.clone();
        cfg.seed = config.seed.wrapping_add(r as u64);
        reports.push(run_cv(x, labels, feature_names, volumetric_cols, thickness_shape_cols, &cfg)?);
    }
    let n = repeats as f64;
    let mean = reports.iter().map(|r| r.mean_accuracy).sum::<f64>() / n;
    let var = reports.iter().map(|r| (r.mean_accuracy - mean).powi(2)).sum::<f64>() / n;
    Ok(RepeatedCvReport { repeats: reports, mean_accuracy: mean, std_accuracy: var.sqrt() })
}

/// Index of the best candidate: highest mean, ties broken by lowest
/// standard deviation, remaining ties by the earliest candidate.
pub fn grid_search<T, F>(candidates: &[T], mut evaluate: F) -> Result<usize>
where
    F: FnMut(&T) -> Result<(f64, f64)>,
{
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("empty candidate grid".to_string()));
    }
    let mut best = 0usize;
    let mut best_score = evaluate(&candidates[0])?;
    for (i, cand) in candidates.iter().enumerate().skip(1) {
        let score = evaluate(cand)?;
        if score.0 > best_score.0 || (score.0 == best_score.0 && score.1 < best_score.1) {
            best = i;
            best_score = score;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifiers::SvmConfig;
    use crate::selection::SelectionMethod;
    use rand::Rng;

    #[test]
    fn fold_sizes_balance_100_over_8() {
        let labels: Vec<usize> = (0..100).map(|i| i % 5).collect();
        let plan = kfold_split(&labels, 8, 7).unwrap();
        let mut sizes: Vec<usize> = plan.folds.iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![12, 12, 12, 12, 13, 13, 13, 13]);
    }

    #[test]
    fn folds_partition_the_cohort() {
        let labels: Vec<usize> = (0..53).map(|i| i % 3).collect();
        let plan = kfold_split(&labels, 5, 1).unwrap();
        let mut all: Vec<usize> = plan.folds.iter().flatten().cloned().collect();
        all.sort_unstable();
        assert_eq!(all, (0..53).collect::<Vec<_>>());
    }

    #[test]
    fn per_class_counts_differ_by_at_most_one() {
        let labels: Vec<usize> = (0..90).map(|i| i % 5).collect();
        let plan = kfold_split(&labels, 8, 3).unwrap();
        for class in 0..5 {
            let counts: Vec<usize> = plan
                .folds
                .iter()
                .map(|f| f.iter().filter(|&&i| labels[i] == class).count())
                .collect();
            let lo = counts.iter().min().unwrap();
            let hi = counts.iter().max().unwrap();
            assert!(hi - lo <= 1, "class {class}: {counts:?}");
        }
    }

    #[test]
    fn split_is_deterministic_and_seed_sensitive() {
        let labels: Vec<usize> = (0..40).map(|i| i % 4).collect();
        let a = kfold_split(&labels, 4, 11).unwrap();
        let b = kfold_split(&labels, 4, 11).unwrap();
        assert_eq!(a.folds, b.folds);
        let c = kfold_split(&labels, 4, 12).unwrap();
        assert_ne!(a.folds, c.folds);
    }

    #[test]
    fn bad_fold_counts_rejected() {
        let labels = vec![0usize, 1, 0, 1];
        assert!(kfold_split(&labels, 1, 0).is_err());
        assert!(kfold_split(&labels, 5, 0).is_err());
    }

    fn small_cv_config() -> CvConfig {
        CvConfig {
            k: 4,
            seed: 5,
            selection: TwoStageConfig {
                method: SelectionMethod::Lasso { lambda_rel: 0.05 },
                seed: 5,
                stage1_keep: 6,
                stage2_keep: 8,
            },
            ensemble: EnsembleConfig {
                mlp: MlpConfig { epochs: 200, ..Default::default() },
                svm: SvmConfig { nu: 0.2, ..Default::default() },
                ..Default::default()
            },
            nested: true,
        }
    }

    /// 3-class problem on 12 features: 2 informative "volumetric" columns
    /// and 1 informative "thickness/shape" column, rest noise.
    fn blob_dataset(seed: u64, n: usize) -> (Vec<Vec<f64>>, Vec<usize>, Vec<String>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            let class = i % 3;
            let c = class as f64;
            let mut row: Vec<f64> = (0..12).map(|_| rng.gen_range(-1.0..1.0)).collect();
            row[0] += 3.0 * c;
            row[2] -= 2.5 * c;
            row[7] += 3.0 * (c - 1.0).abs();
            x.push(row);
            labels.push(class);
        }
        let names = (0..12).map(|j| format!("f{j}")).collect();
        (x, labels, names)
    }

    #[test]
    fn informative_data_scores_high_and_deterministically() {
        let (x, labels, names) = blob_dataset(60, 60);
        let vol: Vec<usize> = (0..4).collect();
        let ts: Vec<usize> = (4..12).collect();
        let config = small_cv_config();
        let report = run_cv(&x, &labels, &names, &vol, &ts, &config).unwrap();
        assert!(report.mean_accuracy > 0.9, "accuracy {}", report.mean_accuracy);
        let again = run_cv(&x, &labels, &names, &vol, &ts, &config).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
        // confusion matrix pools every subject exactly once
        let total: usize = report.confusion.iter().flatten().sum();
        assert_eq!(total, 60);
    }

    #[test]
    fn permuted_labels_score_near_chance() {
        let (x, mut labels, names) = blob_dataset(61, 60);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        labels.shuffle(&mut rng);
        let vol: Vec<usize> = (0..4).collect();
        let ts: Vec<usize> = (4..12).collect();
        let report = run_cv(&x, &labels, &names, &vol, &ts, &small_cv_config()).unwrap();
        assert!(
            report.mean_accuracy < 0.6,
            "permuted labels scored {}",
            report.mean_accuracy
        );
    }

    #[test]
    fn nested_selection_ignores_test_only_signal() {
        // poison one noise column so it predicts the labels perfectly on
        // fold 0's *test* rows and stays noise elsewhere; nested selection
        // fits on training rows only and must not pick it up
        let (mut x, labels, names) = blob_dataset(62, 60);
        let config = small_cv_config();
        let plan = kfold_split(&labels, config.k, config.seed).unwrap();
        for &i in &plan.folds[0] {
            x[i][9] = labels[i] as f64 * 10.0;
        }
        let vol: Vec<usize> = (0..4).collect();
        let ts: Vec<usize> = (4..12).collect();
        let report = run_cv(&x, &labels, &names, &vol, &ts, &config).unwrap();
        let fold0 = &report.folds[0];
        // the informative column 7 must rank ahead of the poisoned column 9
        // in stage-1 frequency terms; concretely the model still performs
        assert!(fold0.selected_features.contains(&7));
        assert!(report.mean_accuracy > 0.8);
    }

    #[test]
    fn non_nested_mode_freezes_one_feature_set() {
        let (x, labels, names) = blob_dataset(63, 48);
        let vol: Vec<usize> = (0..4).collect();
        let ts: Vec<usize> = (4..12).collect();
        let mut config = small_cv_config();
        config.nested = false;
        let report = run_cv(&x, &labels, &names, &vol, &ts, &config).unwrap();
        let first = &report.folds[0].selected_features;
        for f in &report.folds {
            assert_eq!(&f.selected_features, first);
        }
    }

    #[test]
    fn grid_search_is_lexicographic() {
        let scores = [(0.8, 0.1), (0.9, 0.3), (0.9, 0.2), (0.9, 0.2), (0.7, 0.0)];
        let best = grid_search(&[0usize, 1, 2, 3, 4], |&i| Ok(scores[i])).unwrap();
        assert_eq!(best, 2); // highest mean, then lowest std, then earliest
        assert!(grid_search::<usize, _>(&[], |_| Ok((0.0, 0.0))).is_err());
    }
}
