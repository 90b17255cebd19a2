//! Multinomial logistic regression trained by full-batch gradient descent
//! with backtracking line search and a small L2 penalty on the weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogisticConfig {
    pub l2: f64,
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for LogisticConfig {
    fn default() -> Self {
        LogisticConfig { l2: 1e-4, max_iter: 2_000, tol: 1e-7 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultinomialLogistic {
    /// weights[k] is the weight row for class k.
    pub weights: Vec<Vec<f64>>,
    pub bias: Vec<f64>,
    pub l2: f64,
}

fn softmax(z: &[f64]) -> Vec<f64> {
    let m = z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = z.iter().map(|v| (v - m).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

impl MultinomialLogistic {
    pub fn num_classes(&self) -> usize {
        self.weights.len()
    }

    fn logits(&self, row: &[f64]) -> Vec<f64> {
        self.weights
            .iter()
            .zip(&self.bias)
            .map(|(w, b)| w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + b)
            .collect()
    }

    pub fn predict_proba(&self, row: &[f64]) -> Vec<f64> {
        softmax(&self.logits(row))
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        argmax(&self.predict_proba(row))
    }
}

pub(crate) fn argmax(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, &p) in v.iter().enumerate() {
        if p > v[best] {
            best = i;
        }
    }
    best
}

/// Mean cross-entropy plus (l2/2)||W||^2, bias unpenalized.
pub fn logistic_objective(
    x: &[Vec<f64>],
    labels: &[usize],
    weights: &[Vec<f64>],
    bias: &[f64],
    l2: f64,
) -> f64 {
    let n = x.len() as f64;
    let mut loss = 0.0;
    for (row, &lab) in x.iter().zip(labels) {
        let z: Vec<f64> = weights
            .iter()
            .zip(bias)
            .map(|(w, b)| w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + b)
            .collect();
        let m = z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let log_sum = m + z.iter().map(|v| (v - m).exp()).sum::<f64>().ln();
        loss += log_sum - z[lab];
    }
    loss / n + 0.5 * l2 * weights.iter().flatten().map(|w| w * w).sum::<f64>()
}

pub fn logistic_gradients(
    x: &[Vec<f64>],
    labels: &[usize],
    weights: &[Vec<f64>],
    bias: &[f64],
    l2: f64,
) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = x.len() as f64;
    let k = weights.len();
    let p = weights[0].len();
    let mut gw = vec![vec![0.0f64; p]; k];
    let mut gb = vec![0.0f64; k];
    for (row, &lab) in x.iter().zip(labels) {
        let z: Vec<f64> = weights
            .iter()
            .zip(bias)
            .map(|(w, b)| w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + b)
            .collect();
        let probs = softmax(&z);
        for c in 0..k {
            let delta = probs[c] - if c == lab { 1.0 } else { 0.0 };
            for j in 0..p {
                gw[c][j] += delta * row[j];
            }
            gb[c] += delta;
        }
    }
    for c in 0..k {
        for j in 0..p {
            gw[c][j] = gw[c][j] / n + l2 * weights[c][j];
        }
        gb[c] /= n;
    }
    (gw, gb)
}

pub fn train_logistic(
    x: &[Vec<f64>],
    labels: &[usize],
    num_classes: usize,
    config: &LogisticConfig,
) -> Result<MultinomialLogistic> {
    validate_training_set(x, labels, num_classes)?;
    let p = x[0].len();
    let mut weights = vec![vec![0.0f64; p]; num_classes];
    let mut bias = vec![0.0f64; num_classes];
    let mut obj = logistic_objective(x, labels, &weights, &bias, config.l2);
    let mut step = 1.0f64;

    for _ in 0..config.max_iter {
        let (gw, gb) = logistic_gradients(x, labels, &weights, &bias, config.l2);
        let grad_sq: f64 = gw.iter().flatten().map(|g| g * g).sum::<f64>()
            + gb.iter().map(|g| g * g).sum::<f64>();
        if grad_sq.sqrt() < config.tol {
            break;
        }
        // Armijo backtracking
        loop {
            let w_new: Vec<Vec<f64>> = weights
                .iter()
                .zip(&gw)
                .map(|(w, g)| w.iter().zip(g).map(|(wi, gi)| wi - step * gi).collect())
                .collect();
            let b_new: Vec<f64> =
                bias.iter().zip(&gb).map(|(b, g)| b - step * g).collect();
            let new_obj = logistic_objective(x, labels, &w_new, &b_new, config.l2);
            if new_obj <= obj - 0.5 * step * grad_sq || step < 1e-12 {
                weights = w_new;
                bias = b_new;
                obj = new_obj;
                break;
            }
            step *= 0.5;
        }
        step = (step * 2.0).min(1e3);
    }
    Ok(MultinomialLogistic { weights, bias, l2: config.l2 })
}

pub(crate) fn validate_training_set(
    x: &[Vec<f64>],
    labels: &[usize],
    num_classes: usize,
) -> Result<()> {
    if x.is_empty() || x.len() != labels.len() {
        return Err(Error::InvalidArgument(format!(
            "training set has {} rows and {} labels",
            x.len(),
            labels.len()
        )));
    }
    let p = x[0].len();
    if p == 0 || x.iter().any(|r| r.len() != p) {
        return Err(Error::InvalidArgument("ragged or empty design matrix".to_string()));
    }
    if num_classes < 2 {
        return Err(Error::InvalidArgument("need at least 2 classes".to_string()));
    }
    if let Some(&bad) = labels.iter().find(|&&l| l >= num_classes) {
        return Err(Error::InvalidArgument(format!(
            "label {bad} out of range for {num_classes} classes"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let x: Vec<Vec<f64>> = (0..12)
            .map(|_| (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let labels: Vec<usize> = (0..12).map(|i| i % 3).collect();
        let weights: Vec<Vec<f64>> = (0..3)
            .map(|_| (0..3).map(|_| rng.gen_range(-0.5..0.5)).collect())
            .collect();
        let bias: Vec<f64> = (0..3).map(|_| rng.gen_range(-0.5..0.5)).collect();
        let l2 = 1e-4;
        let (gw, gb) = logistic_gradients(&x, &labels, &weights, &bias, l2);
        let h = 1e-6;
        for c in 0..3 {
            for j in 0..3 {
                let mut wp = weights.clone();
                let mut wm = weights.clone();
                wp[c][j] += h;
                wm[c][j] -= h;
                let fd = (logistic_objective(&x, &labels, &wp, &bias, l2)
                    - logistic_objective(&x, &labels, &wm, &bias, l2))
                    / (2.0 * h);
                assert!((gw[c][j] - fd).abs() < 1e-5, "w[{c}][{j}]");
            }
            let mut bp = bias.clone();
            let mut bm = bias.clone();
            bp[c] += h;
            bm[c] -= h;
            let fd = (logistic_objective(&x, &labels, &weights, &bp, l2)
                - logistic_objective(&x, &labels, &weights, &bm, l2))
                / (2.0 * h);
            assert!((gb[c] - fd).abs() < 1e-5, "b[{c}]");
        }
    }

    #[test]
    fn separable_three_class_problem_is_learned() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut x = Vec::new();
        let mut labels = Vec::new();
        let centers = [(-3.0, 0.0), (3.0, 0.0), (0.0, 3.0)];
        for (c, &(cx, cy)) in centers.iter().enumerate() {
            for _ in 0..15 {
                x.push(vec![cx + rng.gen_range(-0.5..0.5), cy + rng.gen_range(-0.5..0.5)]);
                labels.push(c);
            }
        }
        let model = train_logistic(&x, &labels, 3, &LogisticConfig::default()).unwrap();
        let correct = x
            .iter()
            .zip(&labels)
            .filter(|(row, &l)| model.predict(row) == l)
            .count();
        assert_eq!(correct, 45);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let x = vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 0.0]];
        let labels = vec![0, 1, 0, 1];
        let model = train_logistic(&x, &labels, 2, &LogisticConfig::default()).unwrap();
        let p = model.predict_proba(&[0.3, 0.7]);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(p.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn out_of_range_label_rejected() {
        let x = vec![vec![0.0], vec![1.0]];
        assert!(train_logistic(&x, &[0, 2], 2, &LogisticConfig::default()).is_err());
    }
}
