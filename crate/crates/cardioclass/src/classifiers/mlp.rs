//! Single-hidden-layer perceptron: tanh hidden units, softmax output,
//! trained by full-batch gradient descent with classical momentum.
//! Weight initialization is seeded, so training is deterministic.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::logistic::{argmax, validate_training_set};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MlpConfig {
    pub hidden: usize,
    pub learning_rate: f64,
    pub momentum: f64,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for MlpConfig {
    fn default() -> Self {
        MlpConfig { hidden: 10, learning_rate: 0.2, momentum: 0.9, epochs: 800, seed: 0 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MlpClassifier {
    /// w1[h] is hidden unit h's input weight row.
    pub w1: Vec<Vec<f64>>,
    pub b1: Vec<f64>,
    /// w2[k] is output unit k's hidden weight row.
    pub w2: Vec<Vec<f64>>,
    pub b2: Vec<f64>,
}

fn softmax(z: &[f64]) -> Vec<f64> {
    let m = z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = z.iter().map(|v| (v - m).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

impl MlpClassifier {
    fn hidden_activations(&self, row: &[f64]) -> Vec<f64> {
        self.w1
            .iter()
            .zip(&self.b1)
            .map(|(w, b)| {
                (w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + b).tanh()
            })
            .collect()
    }

    pub fn predict_proba(&self, row: &[f64]) -> Vec<f64> {
        let h = self.hidden_activations(row);
        let z: Vec<f64> = self
            .w2
            .iter()
            .zip(&self.b2)
            .map(|(w, b)| w.iter().zip(&h).map(|(wi, hi)| wi * hi).sum::<f64>() + b)
            .collect();
        softmax(&z)
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        argmax(&self.predict_proba(row))
    }
}

/// Mean cross-entropy of the network on the batch.
pub fn mlp_loss(net: &MlpClassifier, x: &[Vec<f64>], labels: &[usize]) -> f64 {
    let n = x.len() as f64;
    x.iter()
        .zip(labels)
        .map(|(row, &lab)| {
            let p = net.predict_proba(row);
            -(p[lab].max(1e-300)).ln()
        })
        .sum::<f64>()
        / n
}

/// Gradients of [`mlp_loss`] for the four parameter blocks, in declaration
/// order: (w1, b1, w2, b2).
pub type MlpGradients = (Vec<Vec<f64>>, Vec<f64>, Vec<Vec<f64>>, Vec<f64>);

/// Full-batch backpropagation gradients for all four parameter blocks.
pub fn mlp_gradients(net: &MlpClassifier, x: &[Vec<f64>], labels: &[usize]) -> MlpGradients {
    let n = x.len() as f64;
    let hidden = net.w1.len();
    let p = net.w1[0].len();
    let k = net.w2.len();
    let mut gw1 = vec![vec![0.0f64; p]; hidden];
    let mut gb1 = vec![0.0f64; hidden];
    let mut gw2 = vec![vec![0.0f64; hidden]; k];
    let mut gb2 = vec![0.0f64; k];

    for (row, &lab) in x.iter().zip(labels) {
        let h = net.hidden_activations(row);
        let z: Vec<f64> = net
            .w2
            .iter()
            .zip(&net.b2)
            .map(|(w, b)| w.iter().zip(&h).map(|(wi, hi)| wi * hi).sum::<f64>() + b)
            .collect();
        let probs = softmax(&z);
        // output delta
        let dz2: Vec<f64> = probs
            .iter()
            .enumerate()
            .map(|(c, &pc)| (pc - if c == lab { 1.0 } else { 0.0 }) / n)
            .collect();
        for c in 0..k {
            for j in 0..hidden {
                gw2[c][j] += dz2[c] * h[j];
            }
            gb2[c] += dz2[c];
        }
        // hidden delta through tanh'
        for j in 0..hidden {
            let dh: f64 = (0..k).map(|c| net.w2[c][j] * dz2[c]).sum();
            let dz1 = dh * (1.0 - h[j] * h[j]);
            for i in 0..p {
                gw1[j][i] += dz1 * row[i];
            }
            gb1[j] += dz1;
        }
    }
    (gw1, gb1, gw2, gb2)
}

pub fn train_mlp(
    x: &[Vec<f64>],
    labels: &[usize],
    num_classes: usize,
    config: &MlpConfig,
) -> Result<MlpClassifier> {
    validate_training_set(x, labels, num_classes)?;
    let p = x[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let scale_in = 1.0 / (p as f64).sqrt();
    let scale_hid = 1.0 / (config.hidden as f64).sqrt();
    let mut net = MlpClassifier {
        w1: (0..config.hidden)
            .map(|_| (0..p).map(|_| rng.gen_range(-scale_in..scale_in)).collect())
            .collect(),
        b1: vec![0.0; config.hidden],
        w2: (0..num_classes)
            .map(|_| (0..config.hidden).map(|_| rng.gen_range(-scale_hid..scale_hid)).collect())
            .collect(),
        b2: vec![0.0; num_classes],
    };

    let mut vw1 = vec![vec![0.0f64; p]; config.hidden];
    let mut vb1 = vec![0.0f64; config.hidden];
    let mut vw2 = vec![vec![0.0f64; config.hidden]; num_classes];
    let mut vb2 = vec![0.0f64; num_classes];
    let (lr, mom) = (config.learning_rate, config.momentum);

    for _ in 0..config.epochs {
        let (gw1, gb1, gw2, gb2) = mlp_gradients(&net, x, labels);
        for j in 0..config.hidden {
            for i in 0..p {
                vw1[j][i] = mom * vw1[j][i] - lr * gw1[j][i];
                net.w1[j][i] += vw1[j][i];
            }
            vb1[j] = mom * vb1[j] - lr * gb1[j];
            net.b1[j] += vb1[j];
        }
        for c in 0..num_classes {
            for j in 0..config.hidden {
                vw2[c][j] = mom * vw2[c][j] - lr * gw2[c][j];
                net.w2[c][j] += vw2[c][j];
            }
            vb2[c] = mom * vb2[c] - lr * gb2[c];
            net.b2[c] += vb2[c];
        }
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gradients_match_finite_differences() {
        let x = vec![
            vec![0.2, -0.5],
            vec![-0.7, 0.3],
            vec![0.9, 0.8],
            vec![-0.1, -0.9],
        ];
        let labels = vec![0, 1, 2, 1];
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        let net = MlpClassifier {
            w1: (0..4).map(|_| (0..2).map(|_| rng.gen_range(-0.5..0.5)).collect()).collect(),
            b1: (0..4).map(|_| rng.gen_range(-0.2..0.2)).collect(),
            w2: (0..3).map(|_| (0..4).map(|_| rng.gen_range(-0.5..0.5)).collect()).collect(),
            b2: (0..3).map(|_| rng.gen_range(-0.2..0.2)).collect(),
        };
        let (gw1, gb1, gw2, gb2) = mlp_gradients(&net, &x, &labels);
        let h = 1e-6;
        let check = |analytic: f64, mutate: &dyn Fn(&mut MlpClassifier, f64)| {
            let mut np = net.clone();
            mutate(&mut np, h);
            let mut nm = net.clone();
            mutate(&mut nm, -h);
            let fd = (mlp_loss(&np, &x, &labels) - mlp_loss(&nm, &x, &labels)) / (2.0 * h);
            assert!((analytic - fd).abs() < 1e-5, "analytic {analytic} vs fd {fd}");
        };
        for j in 0..4 {
            for i in 0..2 {
                check(gw1[j][i], &move |n: &mut MlpClassifier, d| n.w1[j][i] += d);
            }
            check(gb1[j], &move |n: &mut MlpClassifier, d| n.b1[j] += d);
        }
        for c in 0..3 {
            for j in 0..4 {
                check(gw2[c][j], &move |n: &mut MlpClassifier, d| n.w2[c][j] += d);
            }
            check(gb2[c], &move |n: &mut MlpClassifier, d| n.b2[c] += d);
        }
    }

    #[test]
    fn xor_is_learned() {
        let x = vec![
            vec![0.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
        ];
        let labels = vec![0, 1, 1, 0];
        let config = MlpConfig { learning_rate: 0.5, epochs: 4_000, seed: 3, ..Default::default() };
        let net = train_mlp(&x, &labels, 2, &config).unwrap();
        for (row, &lab) in x.iter().zip(&labels) {
            assert_eq!(net.predict(row), lab, "row {row:?}");
        }
    }

    #[test]
    fn training_is_deterministic_per_seed() {
        let x = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0], vec![1.0, 0.0]];
        let labels = vec![0, 0, 1, 1];
        let config = MlpConfig { epochs: 50, seed: 9, ..Default::default() };
        let a = train_mlp(&x, &labels, 2, &config).unwrap();
        let b = train_mlp(&x, &labels, 2, &config).unwrap();
        assert_eq!(a.w1, b.w1);
        assert_eq!(a.w2, b.w2);
        let c = train_mlp(&x, &labels, 2, &MlpConfig { seed: 10, ..config }).unwrap();
        assert_ne!(a.w1, c.w1);
    }

    #[test]
    fn probabilities_are_a_distribution() {
        let x = vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0]];
        let labels = vec![0, 0, 1, 1];
        let net = train_mlp(&x, &labels, 2, &MlpConfig { epochs: 100, ..Default::default() })
            .unwrap();
        let p = net.predict_proba(&[1.5]);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
