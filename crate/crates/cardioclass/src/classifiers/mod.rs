//! The three base classifiers and their soft-vote ensemble.
//!
//! All three train on the same standardized feature matrix. The ensemble
//! averages their class-probability vectors with fixed weights 1, 1, 2
//! (logistic, perceptron, support-vector machine), normalized by 4.
//!
//! ```
//! use cardioclass::classifiers::{train_ensemble, EnsembleConfig};
//!
//! let x = vec![
//!     vec![0.0, 0.2], vec![0.2, 0.0], vec![0.1, 0.1], vec![0.2, 0.2],
//!     vec![3.0, 3.2], vec![3.2, 3.0], vec![3.1, 3.1], vec![3.0, 3.0],
//! ];
//! let labels = vec![0, 0, 0, 0, 1, 1, 1, 1];
//! let names = vec!["a".to_string(), "b".to_string()];
//! let model = train_ensemble(&x, &labels, 2, &names, &EnsembleConfig::default()).unwrap();
//! assert_eq!(model.predict(&[0.1, 0.0]).unwrap(), 0);
//! assert_eq!(model.predict(&[3.1, 3.2]).unwrap(), 1);
//! ```

pub mod logistic;
pub mod mlp;
pub mod nusvm;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use logistic::{train_logistic, LogisticConfig, MultinomialLogistic};
pub use mlp::{train_mlp, MlpClassifier, MlpConfig};
pub use nusvm::{train_nu_svm, Kernel, NuSvmOvr, SvmConfig};

/// Ensemble weights over (logistic, perceptron, SVM), summing to 1.
pub const ENSEMBLE_WEIGHTS: [f64; 3] = [0.25, 0.25, 0.5];

/// Column-wise standardization fitted on training data. Zero-variance
/// columns map to 0 instead of dividing by zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Standardizer {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
}

impl Standardizer {
    pub fn fit(x: &[Vec<f64>]) -> Result<Self> {
        if x.is_empty() || x[0].is_empty() {
            return Err(Error::InvalidArgument("empty matrix for standardizer".to_string()));
        }
        let n = x.len() as f64;
        let p = x[0].len();
        let mut means = vec![0.0; p];
        let mut stds = vec![0.0; p];
        for j in 0..p {
            let mean = x.iter().map(|r| r[j]).sum::<f64>() / n;
            let var = x.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / n;
            means[j] = mean;
            stds[j] = var.sqrt();
        }
        Ok(Standardizer { means, stds })
    }

    pub fn apply_row(&self, row: &[f64]) -> Result<Vec<f64>> {
        if row.len() != self.means.len() {
            return Err(Error::InvalidArgument(format!(
                "row has {} features, standardizer expects {}",
                row.len(),
                self.means.len()
            )));
        }
        Ok(row
            .iter()
            .zip(self.means.iter().zip(&self.stds))
            .map(|(&v, (&m, &s))| if s > 0.0 { (v - m) / s } else { 0.0 })
            .collect())
    }

    pub fn apply(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        x.iter().map(|r| self.apply_row(r)).collect()
    }
}

/// Weighted soft vote: (p_lr + p_mlp + 2 p_svm) / 4.
pub fn ensemble_vote(lr: &[f64], mlp: &[f64], svm: &[f64]) -> Result<Vec<f64>> {
    if lr.len() != mlp.len() || lr.len() != svm.len() || lr.is_empty() {
        return Err(Error::InvalidArgument(
            "probability vectors must be non-empty and equally sized".to_string(),
        ));
    }
    Ok(lr
        .iter()
        .zip(mlp.iter().zip(svm))
        .map(|(&a, (&b, &c))| {
            ENSEMBLE_WEIGHTS[0] * a + ENSEMBLE_WEIGHTS[1] * b + ENSEMBLE_WEIGHTS[2] * c
        })
        .collect())
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub logistic: LogisticConfig,
    pub mlp: MlpConfig,
    pub svm: SvmConfig,
}

/// The full trained model: standardizer, the three base classifiers, and
/// the names of the feature columns it expects (in order).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrainedEnsemble {
    pub standardizer: Standardizer,
    pub logistic: MultinomialLogistic,
    pub mlp: MlpClassifier,
    pub svm: NuSvmOvr,
    pub num_classes: usize,
    pub feature_names: Vec<String>,
}

pub fn train_ensemble(
    x: &[Vec<f64>],
    labels: &[usize],
    num_classes: usize,
    feature_names: &[String],
    config: &EnsembleConfig,
) -> Result<TrainedEnsemble> {
    logistic::validate_training_set(x, labels, num_classes)?;
    if feature_names.len() != x[0].len() {
        return Err(Error::InvalidArgument("feature_names length mismatch".to_string()));
    }
    let standardizer = Standardizer::fit(x)?;
    let xs = standardizer.apply(x)?;
    let logistic = train_logistic(&xs, labels, num_classes, &config.logistic)?;
    let mlp = train_mlp(&xs, labels, num_classes, &config.mlp)?;
    let svm = train_nu_svm(&xs, labels, num_classes, &config.svm)?;
    Ok(TrainedEnsemble {
        standardizer,
        logistic,
        mlp,
        svm,
        num_classes,
        feature_names: feature_names.to_vec(),
    })
}

impl TrainedEnsemble {
    pub fn predict_proba(&self, row: &[f64]) -> Result<Vec<f64>> {
        let r = self.standardizer.apply_row(row)?;
        ensemble_vote(
            &self.logistic.predict_proba(&r),
            &self.mlp.predict_proba(&r),
            &self.svm.predict_proba(&r),
        )
    }

    /// Argmax of the vote; ties resolve toward the lower class index.
    pub fn predict(&self, row: &[f64]) -> Result<usize> {
        Ok(logistic::argmax(&self.predict_proba(row)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vote_matches_hand_computation() {
        let v = ensemble_vote(&[0.2, 0.8], &[0.4, 0.6], &[0.4, 0.6]).unwrap();
        assert!((v[0] - 0.35).abs() < 1e-15);
        assert!((v[1] - 0.65).abs() < 1e-15);
    }

    #[test]
    fn vote_preserves_distributions() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..1000 {
            let mut draw = || {
                let raw: Vec<f64> = (0..5).map(|_| rng.gen_range(0.0f64..1.0)).collect();
                let s: f64 = raw.iter().sum();
                raw.into_iter().map(|v| v / s).collect::<Vec<f64>>()
            };
            let (a, b, c) = (draw(), draw(), draw());
            let v = ensemble_vote(&a, &b, &c).unwrap();
            assert!((v.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(v.iter().all(|&p| (0.0..=1.0).contains(&p)));
        }
    }

    #[test]
    fn vote_rejects_mismatched_lengths() {
        assert!(ensemble_vote(&[0.5, 0.5], &[1.0], &[0.5, 0.5]).is_err());
    }

    #[test]
    fn standardizer_zero_variance_column_maps_to_zero() {
        let x = vec![vec![1.0, 7.0], vec![3.0, 7.0], vec![5.0, 7.0]];
        let s = Standardizer::fit(&x).unwrap();
        let xs = s.apply(&x).unwrap();
        for row in &xs {
            assert_eq!(row[1], 0.0);
        }
        let mean: f64 = xs.iter().map(|r| r[0]).sum::<f64>() / 3.0;
        let var: f64 = xs.iter().map(|r| (r[0] - mean).powi(2)).sum::<f64>() / 3.0;
        assert!(mean.abs() < 1e-12);
        assert!((var - 1.0).abs() < 1e-12);
    }

    #[test]
    fn standardizer_rejects_wrong_width() {
        let s = Standardizer::fit(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!(s.apply_row(&[1.0]).is_err());
    }

    fn blob_problem(rng: &mut ChaCha8Rng) -> (Vec<Vec<f64>>, Vec<usize>) {
        let centers = [(-4.0, 0.0), (4.0, 0.0), (0.0, 4.0)];
        let mut x = Vec::new();
        let mut labels = Vec::new();
        for (c, &(cx, cy)) in centers.iter().enumerate() {
            for _ in 0..12 {
                x.push(vec![cx + rng.gen_range(-0.8..0.8), cy + rng.gen_range(-0.8..0.8)]);
                labels.push(c);
            }
        }
        (x, labels)
    }

    #[test]
    fn ensemble_learns_separable_blobs_and_serializes() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let (x, labels) = blob_problem(&mut rng);
        let names = vec!["a".to_string(), "b".to_string()];
        let config = EnsembleConfig {
            svm: SvmConfig { nu: 0.3, ..Default::default() },
            mlp: MlpConfig { epochs: 400, ..Default::default() },
            ..Default::default()
        };
        let model = train_ensemble(&x, &labels, 3, &names, &config).unwrap();
        let correct = x
            .iter()
            .zip(&labels)
            .filter(|(r, &l)| model.predict(r).unwrap() == l)
            .count();
        assert!(correct >= 34, "only {correct}/36 correct");

        let json = serde_json::to_string(&model).unwrap();
        let back: TrainedEnsemble = serde_json::from_str(&json).unwrap();
        for r in &x {
            let a = model.predict_proba(r).unwrap();
            let b = back.predict_proba(r).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn training_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let (x, labels) = blob_problem(&mut rng);
        let names = vec!["a".to_string(), "b".to_string()];
        let config = EnsembleConfig {
            svm: SvmConfig { nu: 0.3, ..Default::default() },
            mlp: MlpConfig { epochs: 100, ..Default::default() },
            ..Default::default()
        };
        let a = train_ensemble(&x, &labels, 3, &names, &config).unwrap();
        let b = train_ensemble(&x, &labels, 3, &names, &config).unwrap();
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(ja, jb);
    }
}
