//! Nu-SVC with a sigmoid kernel, solved by sequential minimal optimization,
//! wrapped One-vs-Rest with per-class Platt probability calibration.
//!
//! The dual is
//!   min 1/2 a'Qa  s.t.  0 <= a_i <= C = 1/N,  sum a_i y_i = 0,  sum a_i = nu,
//! with Q_ij = y_i y_j K(x_i, x_j). SMO steps move mass between two indices
//! of the *same* class, which keeps both equality constraints invariant.
//! The sigmoid kernel tanh(gamma u'v + coef0) is indefinite, so the
//! second-derivative term along a step is floored at a small positive value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kernel {
    Linear,
    Sigmoid { gamma: f64, coef0: f64 },
}

impl Kernel {
    pub fn eval(&self, u: &[f64], v: &[f64]) -> f64 {
        let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
        match *self {
            Kernel::Linear => dot,
            Kernel::Sigmoid { gamma, coef0 } => (gamma * dot + coef0).tanh(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SvmConfig {
    pub nu: f64,
    pub kernel: Option<Kernel>,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SvmConfig {
    fn default() -> Self {
        SvmConfig { nu: 0.2, kernel: None, tol: 1e-3, max_iter: 100_000 }
    }
}

/// Platt calibration: P(y=1 | f) = 1 / (1 + exp(a f + b)).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PlattScaling {
    pub a: f64,
    pub b: f64,
}

impl PlattScaling {
    pub fn probability(&self, decision: f64) -> f64 {
        let z = self.a * decision + self.b;
        if z >= 0.0 {
            (-z).exp() / (1.0 + (-z).exp())
        } else {
            1.0 / (1.0 + z.exp())
        }
    }
}

/// One trained binary nu-SVC: support vectors with signed dual weights.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BinaryNuSvc {
    pub support_vectors: Vec<Vec<f64>>,
    /// alpha_i * y_i for each support vector.
    pub coefficients: Vec<f64>,
    pub bias: f64,
    pub rho: f64,
    pub kernel: Kernel,
    pub platt: PlattScaling,
}

impl BinaryNuSvc {
    pub fn decision(&self, row: &[f64]) -> f64 {
        self.support_vectors
            .iter()
            .zip(&self.coefficients)
            .map(|(sv, c)| c * self.kernel.eval(sv, row))
            .sum::<f64>()
            + self.bias
    }

    pub fn probability(&self, row: &[f64]) -> f64 {
        self.platt.probability(self.decision(row))
    }
}

/// Raw dual solution, exposed so optimality conditions can be audited.
#[derive(Debug)]
pub struct SmoSolution {
    pub alpha: Vec<f64>,
    pub bias: f64,
    pub rho: f64,
}

/// Solve the nu-SVC dual. `y` entries are +-1.
pub fn solve_nu_svc(
    x: &[Vec<f64>],
    y: &[f64],
    nu: f64,
    kernel: Kernel,
    tol: f64,
    max_iter: usize,
) -> Result<SmoSolution> {
    let n = x.len();
    let n_pos = y.iter().filter(|&&b| b > 0.0).count();
    let n_neg = n - n_pos;
    let bound = 2.0 * n_pos.min(n_neg) as f64 / n as f64;
    if nu <= 0.0 || nu > bound {
        return Err(Error::InfeasibleNu { nu, bound });
    }
    let c = 1.0 / n as f64;

    // cache the full kernel matrix; cohorts are small
    let k: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| kernel.eval(&x[i], &x[j])).collect())
        .collect();

    // feasible start: split nu/2 of mass uniformly within each class
    let mut alpha = vec![0.0f64; n];
    for i in 0..n {
        alpha[i] = if y[i] > 0.0 {
            nu / (2.0 * n_pos as f64)
        } else {
            nu / (2.0 * n_neg as f64)
        };
    }
    // gradient of 1/2 a'Qa: g_i = (Qa)_i
    let mut g: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| y[i] * y[j] * k[i][j] * alpha[j]).sum())
        .collect();

    let eps = 1e-12;
    for _ in 0..max_iter {
        // per class, find the most violating movable pair
        let mut best: Option<(usize, usize, f64)> = None;
        for class in [1.0f64, -1.0] {
            let mut up: Option<usize> = None; // can receive mass (alpha < C)
            let mut down: Option<usize> = None; // can give mass (alpha > 0)
            for i in 0..n {
                if y[i] != class {
                    continue;
                }
                if alpha[i] < c - eps && up.is_none_or(|u| g[i] < g[u]) {
                    up = Some(i);
                }
                if alpha[i] > eps && down.is_none_or(|d| g[i] > g[d]) {
                    down = Some(i);
                }
            }
            if let (Some(u), Some(d)) = (up, down) {
                let viol = g[d] - g[u];
                if best.is_none_or(|(_, _, v)| viol > v) {
                    best = Some((u, d, viol));
                }
            }
        }
        let Some((u, d, viol)) = best else { break };
        if viol < tol {
            break;
        }
        // same-class pair: eta = K_uu + K_dd - 2 K_ud, floored because the
        // sigmoid kernel need not be positive definite
        let eta = (k[u][u] + k[d][d] - 2.0 * k[u][d]).max(1e-12);
        let delta = (viol / eta).min(c - alpha[u]).min(alpha[d]);
        if delta <= 0.0 {
            break;
        }
        alpha[u] += delta;
        alpha[d] -= delta;
        let yu = y[u];
        for i in 0..n {
            g[i] += delta * y[i] * yu * (k[i][u] - k[i][d]);
        }
    }

    // at the optimum each class shares one stationarity value p: free SVs
    // sit exactly at g_i = p, bound-at-C points at g_i <= p, zero points at
    // g_i >= p. Average the free SVs when any exist, otherwise take the
    // midpoint of the feasible interval.
    let class_value = |class: f64| -> f64 {
        let free: Vec<f64> = (0..n)
            .filter(|&i| y[i] == class && alpha[i] > eps && alpha[i] < c - eps)
            .map(|i| g[i])
            .collect();
        if !free.is_empty() {
            return free.iter().sum::<f64>() / free.len() as f64;
        }
        let upper = (0..n)
            .filter(|&i| y[i] == class && alpha[i] <= eps)
            .map(|i| g[i])
            .fold(f64::INFINITY, f64::min);
        let lower = (0..n)
            .filter(|&i| y[i] == class && alpha[i] >= c - eps)
            .map(|i| g[i])
            .fold(f64::NEG_INFINITY, f64::max);
        match (lower.is_finite(), upper.is_finite()) {
            (true, true) => (lower + upper) / 2.0,
            (true, false) => lower,
            (false, true) => upper,
            (false, false) => 0.0,
        }
    };
    let p_pos = class_value(1.0);
    let p_neg = class_value(-1.0);
    // f(x_i) = y_i g_i + bias, and free SVs satisfy y_i f(x_i) = rho
    let bias = -(p_pos - p_neg) / 2.0;
    let rho = (p_pos + p_neg) / 2.0;
    Ok(SmoSolution { alpha, bias, rho })
}

/// Fit Platt's sigmoid to (decision, label) pairs by Newton's method with
/// the usual smoothed targets.
pub(crate) fn fit_platt(decisions: &[f64], y: &[f64]) -> PlattScaling {
    let n_pos = y.iter().filter(|&&b| b > 0.0).count() as f64;
    let n_neg = y.len() as f64 - n_pos;
    let hi = (n_pos + 1.0) / (n_pos + 2.0);
    let lo = 1.0 / (n_neg + 2.0);
    let t: Vec<f64> = y.iter().map(|&b| if b > 0.0 { hi } else { lo }).collect();

    let mut a = 0.0f64;
    let mut b = ((n_neg + 1.0) / (n_pos + 1.0)).ln();
    let objective = |a: f64, b: f64| -> f64 {
        decisions
            .iter()
            .zip(&t)
            .map(|(&f, &ti)| {
                let z = a * f + b;
                // t*z + log(1+exp(-z)) computed stably
                if z >= 0.0 {
                    ti * z + (-z).exp().ln_1p()
                } else {
                    (ti - 1.0) * z + z.exp().ln_1p()
                }
            })
            .sum()
    };
    let mut obj = objective(a, b);
    for _ in 0..100 {
        let mut g1 = 0.0f64;
        let mut g2 = 0.0f64;
        let mut h11 = 1e-12f64;
        let mut h22 = 1e-12f64;
        let mut h12 = 0.0f64;
        for (&f, &ti) in decisions.iter().zip(&t) {
            let z = a * f + b;
            let p = if z >= 0.0 {
                (-z).exp() / (1.0 + (-z).exp())
            } else {
                1.0 / (1.0 + z.exp())
            };
            let d = ti - p;
            g1 += f * d;
            g2 += d;
            let w = p * (1.0 - p);
            h11 += f * f * w;
            h22 += w;
            h12 += f * w;
        }
        if g1.abs() < 1e-8 && g2.abs() < 1e-8 {
            break;
        }
        let det = h11 * h22 - h12 * h12;
        let da = -(h22 * g1 - h12 * g2) / det;
        let db = -(h11 * g2 - h12 * g1) / det;
        // backtracking on the Newton step
        let mut step = 1.0;
        loop {
            let new_obj = objective(a + step * da, b + step * db);
            if new_obj < obj + 1e-12 || step < 1e-10 {
                a += step * da;
                b += step * db;
                obj = new_obj;
                break;
            }
            step *= 0.5;
        }
    }
    PlattScaling { a, b }
}

/// One-vs-Rest multiclass nu-SVC with calibrated probabilities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuSvmOvr {
    pub machines: Vec<BinaryNuSvc>,
}

pub fn train_nu_svm(
    x: &[Vec<f64>],
    labels: &[usize],
    num_classes: usize,
    config: &SvmConfig,
) -> Result<NuSvmOvr> {
    super::logistic::validate_training_set(x, labels, num_classes)?;
    let p = x[0].len();
    let kernel = config
        .kernel
        .unwrap_or(Kernel::Sigmoid { gamma: 1.0 / p as f64, coef0: 0.0 });
    let mut machines = Vec::with_capacity(num_classes);
    for class in 0..num_classes {
        let y: Vec<f64> = labels
            .iter()
            .map(|&l| if l == class { 1.0 } else { -1.0 })
            .collect();
        let sol = solve_nu_svc(x, &y, config.nu, kernel, config.tol, config.max_iter)?;
        let eps = 1e-12;
        let mut support_vectors = Vec::new();
        let mut coefficients = Vec::new();
        for i in 0..x.len() {
            if sol.alpha[i] > eps {
                support_vectors.push(x[i].clone());
                coefficients.push(sol.alpha[i] * y[i]);
            }
        }
        let machine = BinaryNuSvc {
            support_vectors,
            coefficients,
            bias: sol.bias,
            rho: sol.rho,
            kernel,
            platt: PlattScaling { a: -1.0, b: 0.0 },
        };
        let decisions: Vec<f64> = x.iter().map(|r| machine.decision(r)).collect();
        let platt = fit_platt(&decisions, &y);
        machines.push(BinaryNuSvc { platt, ..machine });
    }
    Ok(NuSvmOvr { machines })
}

impl NuSvmOvr {
    /// Per-class Platt probabilities renormalized to sum to one.
    pub fn predict_proba(&self, row: &[f64]) -> Vec<f64> {
        let raw: Vec<f64> = self.machines.iter().map(|m| m.probability(row)).collect();
        let sum: f64 = raw.iter().sum();
        if sum > 0.0 {
            raw.into_iter().map(|p| p / sum).collect()
        } else {
            vec![1.0 / self.machines.len() as f64; self.machines.len()]
        }
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        super::logistic::argmax(&self.predict_proba(row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn two_blobs(rng: &mut ChaCha8Rng, n_per: usize, gap: f64) -> (Vec<Vec<f64>>, Vec<f64>) {
        let mut x = Vec::new();
        let mut y = Vec::new();
        for _ in 0..n_per {
            x.push(vec![gap + rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6)]);
            y.push(1.0);
            x.push(vec![-gap + rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6)]);
            y.push(-1.0);
        }
        (x, y)
    }

    /// Check stationarity, box, and equality constraints of the solved dual.
    pub(crate) fn kkt_violation(
        x: &[Vec<f64>],
        y: &[f64],
        sol: &SmoSolution,
        kernel: Kernel,
        nu: f64,
    ) -> f64 {
        let n = x.len();
        let c = 1.0 / n as f64;
        let eps = 1e-9;
        let mut worst = 0.0f64;
        // equality constraints
        let sum_ay: f64 = sol.alpha.iter().zip(y).map(|(a, b)| a * b).sum();
        let sum_a: f64 = sol.alpha.iter().sum();
        worst = worst.max(sum_ay.abs()).max((sum_a - nu).abs());
        for i in 0..n {
            let f: f64 = (0..n)
                .map(|j| sol.alpha[j] * y[j] * kernel.eval(&x[j], &x[i]))
                .sum::<f64>()
                + sol.bias;
            let margin = y[i] * f;
            let a = sol.alpha[i];
            let v = if a <= eps {
                (sol.rho - margin).max(0.0) // must be on or outside margin
            } else if a >= c - eps {
                (margin - sol.rho).max(0.0) // must be on or inside margin
            } else {
                (margin - sol.rho).abs() // free: exactly on the margin
            };
            worst = worst.max(v);
        }
        worst
    }

    #[test]
    fn linear_kernel_satisfies_kkt() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..5 {
            let (x, y) = two_blobs(&mut rng, 15, 2.0);
            let nu = 0.4;
            let sol = solve_nu_svc(&x, &y, nu, Kernel::Linear, 1e-5, 200_000).unwrap();
            let v = kkt_violation(&x, &y, &sol, Kernel::Linear, nu);
            assert!(v < 1e-2, "KKT violation {v}");
        }
    }

    #[test]
    fn infeasible_nu_is_rejected() {
        let x = vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0], vec![4.0]];
        let y = vec![1.0, -1.0, -1.0, -1.0, -1.0];
        // bound = 2 * 1 / 5 = 0.4
        let err = solve_nu_svc(&x, &y, 0.5, Kernel::Linear, 1e-3, 1000).unwrap_err();
        match err {
            Error::InfeasibleNu { nu, bound } => {
                assert_eq!(nu, 0.5);
                assert!((bound - 0.4).abs() < 1e-12);
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(solve_nu_svc(&x, &y, 0.39, Kernel::Linear, 1e-3, 1000).is_ok());
    }

    #[test]
    fn separable_blobs_are_classified() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let (x, y) = two_blobs(&mut rng, 20, 2.5);
        let labels: Vec<usize> = y.iter().map(|&b| if b > 0.0 { 1 } else { 0 }).collect();
        let config = SvmConfig { nu: 0.3, kernel: Some(Kernel::Linear), ..Default::default() };
        let model = train_nu_svm(&x, &labels, 2, &config).unwrap();
        let correct = x
            .iter()
            .zip(&labels)
            .filter(|(r, &l)| model.predict(r) == l)
            .count();
        assert_eq!(correct, 40);
    }

    #[test]
    fn sigmoid_kernel_trains_without_divergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let (x, y) = two_blobs(&mut rng, 20, 2.0);
        let labels: Vec<usize> = y.iter().map(|&b| if b > 0.0 { 1 } else { 0 }).collect();
        let config = SvmConfig { nu: 0.3, ..Default::default() };
        let model = train_nu_svm(&x, &labels, 2, &config).unwrap();
        let correct = x
            .iter()
            .zip(&labels)
            .filter(|(r, &l)| model.predict(r) == l)
            .count();
        assert!(correct >= 36, "only {correct}/40 correct");
        for r in &x {
            let p = model.predict_proba(r);
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(p.iter().all(|v| v.is_finite()));
        }
    }

    #[test]
    fn platt_probabilities_track_labels() {
        let decisions: Vec<f64> = (0..40).map(|i| (i as f64 - 19.5) / 10.0).collect();
        let y: Vec<f64> = decisions.iter().map(|&d| if d > 0.0 { 1.0 } else { -1.0 }).collect();
        let platt = fit_platt(&decisions, &y);
        assert!(platt.probability(2.0) > 0.9);
        assert!(platt.probability(-2.0) < 0.1);
        assert!(platt.probability(2.0) > platt.probability(0.5));
    }

    #[test]
    fn dual_constraints_hold_after_training() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let (x, y) = two_blobs(&mut rng, 12, 1.5);
        let nu = 0.25;
        let sol = solve_nu_svc(&x, &y, nu, Kernel::Linear, 1e-4, 100_000).unwrap();
        let sum_a: f64 = sol.alpha.iter().sum();
        let sum_ay: f64 = sol.alpha.iter().zip(&y).map(|(a, b)| a * b).sum();
        assert!((sum_a - nu).abs() < 1e-10);
        assert!(sum_ay.abs() < 1e-10);
        let c = 1.0 / x.len() as f64;
        assert!(sol.alpha.iter().all(|&a| (-1e-12..=c + 1e-12).contains(&a)));
    }
}
