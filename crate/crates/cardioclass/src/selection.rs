//! L1-penalized feature selection.
//!
//! Three selectors, all reduced to multiclass problems One-vs-Rest:
//! LASSO by cyclic coordinate descent, L1 logistic regression by proximal
//! gradient with backtracking, and randomized logistic regression
//! (stability selection over row subsamples with per-feature penalty
//! weakening). A two-stage pipeline narrows thickness+shape columns to 30,
//! pools them with the 12 volumetric columns, and keeps the top 20.
//!
//! ```
//! use cardioclass::selection::{lasso_fit, lasso_lambda_max, FeatureMatrix, LassoOptions};
//!
//! let x = vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![2.0, 1.0], vec![3.0, 0.0]];
//! let y = vec![0.1, 1.0, 2.1, 3.0];
//! let names = vec!["slope".to_string(), "noise".to_string()];
//! let data = FeatureMatrix::new(x, y, names).unwrap();
//! let lambda = 0.1 * lasso_lambda_max(&data, true);
//! let model = lasso_fit(&data, lambda, &LassoOptions::default()).unwrap();
//! assert!(model.beta[0].abs() > model.beta[1].abs());
//! ```

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subjects-by-features design matrix with outcomes.
#[derive(Debug, Clone)]
pub struct FeatureMatrix {
    /// Row-major: x[i] is subject i's feature vector.
    pub x: Vec<Vec<f64>>,
    /// Real-valued outcomes for LASSO, +-1 for binary logistic problems.
    pub y: Vec<f64>,
    pub feature_names: Vec<String>,
    /// Whether columns are already standardized to mean 0 / unit variance.
    pub standardized: bool,
}

impl FeatureMatrix {
    pub fn new(x: Vec<Vec<f64>>, y: Vec<f64>, feature_names: Vec<String>) -> Result<Self> {
        if x.len() != y.len() || x.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "need N >= 2 rows with matching outcomes, got {} rows / {} outcomes",
                x.len(),
                y.len()
            )));
        }
        let p = x[0].len();
        if p == 0 || x.iter().any(|r| r.len() != p) {
            return Err(Error::InvalidArgument("ragged or empty design matrix".to_string()));
        }
        if feature_names.len() != p {
            return Err(Error::InvalidArgument("feature_names length mismatch".to_string()));
        }
        if x.iter().flatten().chain(y.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite values in data".to_string()));
        }
        Ok(FeatureMatrix { x, y, feature_names, standardized: false })
    }

    pub fn num_rows(&self) -> usize {
        self.x.len()
    }

    pub fn num_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.x.iter().map(|r| r[j]).collect()
    }
}

/// Standardize columns in place to mean 0 / unit variance (population std).
/// Zero-variance columns become all-zero rather than erroring; the L1
/// solvers then simply never select them. Returns (means, stds).
pub fn standardize_columns(x: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len() as f64;
    let p = x[0].len();
    let mut means = vec![0.0; p];
    let mut stds = vec![0.0; p];
    for j in 0..p {
        let mean = x.iter().map(|r| r[j]).sum::<f64>() / n;
        let var = x.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / n;
        let std = var.sqrt();
        let denom = if std > 0.0 { std } else { 1.0 };
        for r in x.iter_mut() {
            r[j] = (r[j] - mean) / denom;
        }
        means[j] = mean;
        stds[j] = std;
    }
    (means, stds)
}

#[derive(Debug, Clone)]
pub struct LassoOptions {
    pub standardize: bool,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for LassoOptions {
    fn default() -> Self {
        LassoOptions { standardize: true, tol: 1e-8, max_iter: 10_000 }
    }
}

#[derive(Debug, Clone)]
pub struct LassoModel {
    pub beta: Vec<f64>,
    pub intercept: f64,
    pub lambda: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl LassoModel {
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.beta
            .iter()
            .enumerate()
            .filter(|(_, b)| b.abs() > tol)
            .map(|(j, _)| j)
            .collect()
    }
}

fn soft_threshold(v: f64, t: f64) -> f64 {
    if v > t {
        v - t
    } else if v < -t {
        v + t
    } else {
        0.0
    }
}

/// Minimize ||y - X beta - c||^2 + lambda * sum |beta_j| by cyclic
/// coordinate descent, intercept c unpenalized. With
/// `options.standardize` the fit runs on standardized columns and the
/// returned coefficients are mapped back to the original scale.
pub fn lasso_fit(data: &FeatureMatrix, lambda: f64, options: &LassoOptions) -> Result<LassoModel> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidArgument(format!("lambda must be >= 0, got {lambda}")));
    }
    let n = data.num_rows();
    let p = data.num_features();
    let mut x = data.x.clone();
    let (means, stds) = if options.standardize && !data.standardized {
        standardize_columns(&mut x)
    } else {
        (vec![0.0; p], vec![1.0; p])
    };

    let col_sq: Vec<f64> = (0..p)
        .map(|j| x.iter().map(|r| r[j] * r[j]).sum::<f64>())
        .collect();

    let mut beta = vec![0.0f64; p];
    let mut intercept = data.y.iter().sum::<f64>() / n as f64;
    let mut residual: Vec<f64> = data.y.iter().map(|&yi| yi - intercept).collect();

    let mut converged = false;
    let mut iterations = 0;
    for it in 0..options.max_iter {
        iterations = it + 1;
        let mut max_delta = 0.0f64;

        // unpenalized intercept: optimal shift is the residual mean
        let shift = residual.iter().sum::<f64>() / n as f64;
        if shift != 0.0 {
            intercept += shift;
            for r in residual.iter_mut() {
                *r -= shift;
            }
            max_delta = max_delta.max(shift.abs());
        }

        for j in 0..p {
            if col_sq[j] == 0.0 {
                continue;
            }
            let old = beta[j];
            // rho = x_j' (residual + x_j * beta_j)
            let mut rho = 0.0;
            for (r, row) in residual.iter().zip(&x) {
                rho += row[j] * r;
            }
            rho += col_sq[j] * old;
            let new = soft_threshold(rho, lambda / 2.0) / col_sq[j];
            if new != old {
                let delta = new - old;
                for (r, row) in residual.iter_mut().zip(&x) {
                    *r -= delta * row[j];
                }
                beta[j] = new;
                max_delta = max_delta.max(delta.abs());
            }
        }
        if max_delta < options.tol {
            converged = true;
            break;
        }
    }

    // map back to the original column scale
    let mut beta_orig = vec![0.0f64; p];
    let mut intercept_orig = intercept;
    for j in 0..p {
        let denom = if options.standardize && !data.standardized && stds[j] > 0.0 {
            stds[j]
        } else {
            1.0
        };
        beta_orig[j] = beta[j] / denom;
        if options.standardize && !data.standardized {
            intercept_orig -= beta_orig[j] * means[j];
        }
    }
    Ok(LassoModel { beta: beta_orig, intercept: intercept_orig, lambda, iterations, converged })
}

/// Smallest lambda that zeroes every coefficient: 2 * max_j |x_j' y_c| on
/// the (standardized) design with mean-centered outcomes.
pub fn lasso_lambda_max(data: &FeatureMatrix, standardize: bool) -> f64 {
    let n = data.num_rows();
    let mut x = data.x.clone();
    if standardize && !data.standardized {
        standardize_columns(&mut x);
    }
    let y_mean = data.y.iter().sum::<f64>() / n as f64;
    let p = data.num_features();
    (0..p)
        .map(|j| {
            let dot: f64 = x
                .iter()
                .zip(&data.y)
                .map(|(row, &yi)| row[j] * (yi - y_mean))
                .sum();
            2.0 * dot.abs()
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone)]
pub struct LogisticOptions {
    pub standardize: bool,
    pub max_iter: usize,
    /// Per-feature multiplicative penalty weights (randomized selection);
    /// length p when present.
    pub penalty_scale: Option<Vec<f64>>,
}

impl Default for LogisticOptions {
    fn default() -> Self {
        LogisticOptions { standardize: true, max_iter: 5_000, penalty_scale: None }
    }
}

#[derive(Debug, Clone)]
pub struct L1LogisticModel {
    pub w: Vec<f64>,
    pub v: f64,
    pub lambda: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Set when all labels agree and the intercept was capped.
    pub saturated: bool,
}

impl L1LogisticModel {
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.w
            .iter()
            .enumerate()
            .filter(|(_, w)| w.abs() > tol)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn decision(&self, row: &[f64]) -> f64 {
        self.w.iter().zip(row).map(|(w, x)| w * x).sum::<f64>() + self.v
    }
}

/// (1/N) sum log(1 + exp(-b_i z_i)), evaluated stably. Public so the
/// verification suite can check the smooth part independently.
pub fn logistic_loss(x: &[Vec<f64>], y: &[f64], w: &[f64], v: f64) -> f64 {
    let n = x.len() as f64;
    x.iter()
        .zip(y)
        .map(|(row, &b)| {
            let z = w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + v;
            let m = -b * z;
            if m > 0.0 {
                m + (-m).exp().ln_1p()
            } else {
                m.exp().ln_1p()
            }
        })
        .sum::<f64>()
        / n
}

/// Gradient of the smooth part with respect to (w, v).
pub fn logistic_gradient(x: &[Vec<f64>], y: &[f64], w: &[f64], v: f64) -> (Vec<f64>, f64) {
    let n = x.len() as f64;
    let p = w.len();
    let mut gw = vec![0.0f64; p];
    let mut gv = 0.0f64;
    for (row, &b) in x.iter().zip(y) {
        let z = w.iter().zip(row).map(|(wi, xi)| wi * xi).sum::<f64>() + v;
        // sigma(-bz) = 1/(1+exp(bz))
        let s = 1.0 / (1.0 + (b * z).exp());
        let coeff = -b * s;
        for (g, xi) in gw.iter_mut().zip(row) {
            *g += coeff * xi;
        }
        gv += coeff;
    }
    for g in gw.iter_mut() {
        *g /= n;
    }
    (gw, gv / n)
}

/// Minimize (1/N) sum log(1+exp(-b_i (w'x_i + v))) + lambda ||w||_1 by
/// proximal gradient with backtracking line search; intercept unpenalized.
pub fn l1_logistic_fit(
    data: &FeatureMatrix,
    lambda: f64,
    options: &LogisticOptions,
) -> Result<L1LogisticModel> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidArgument(format!("lambda must be >= 0, got {lambda}")));
    }
    if data.y.iter().any(|&b| b != 1.0 && b != -1.0) {
        return Err(Error::InvalidArgument("logistic outcomes must be +-1".to_string()));
    }
    if let Some(scale) = &options.penalty_scale {
        if scale.len() != data.num_features() {
            return Err(Error::InvalidArgument("penalty_scale length mismatch".to_string()));
        }
    }
    let mut x = data.x.clone();
    if options.standardize && !data.standardized {
        standardize_columns(&mut x);
    }
    let y = &data.y;
    let p = data.num_features();
    let n_pos = y.iter().filter(|&&b| b > 0.0).count();
    let n_neg = y.len() - n_pos;
    let saturated = n_pos == 0 || n_neg == 0;

    let lam = |j: usize| {
        lambda * options.penalty_scale.as_ref().map_or(1.0, |s| s[j])
    };

    let mut w = vec![0.0f64; p];
    let mut v = 0.0f64;
    let mut obj = logistic_loss(&x, y, &w, v)
        + w.iter().enumerate().map(|(j, wi)| lam(j) * wi.abs()).sum::<f64>();
    let mut step = 1.0f64;
    let mut converged = false;
    let mut iterations = 0;

    for it in 0..options.max_iter {
        iterations = it + 1;
        let (gw, gv) = logistic_gradient(&x, y, &w, v);
        let f0 = logistic_loss(&x, y, &w, v);

        // backtracking on the smooth part's quadratic upper bound
        let (w_new, v_new, used_step) = loop {
            let mut wn = vec![0.0f64; p];
            for j in 0..p {
                wn[j] = soft_threshold(w[j] - step * gw[j], step * lam(j));
            }
            let mut vn = v - step * gv;
            if saturated {
                vn = vn.clamp(-30.0, 30.0);
            }
            let f_new = logistic_loss(&x, y, &wn, vn);
            let mut quad = f0;
            let mut dist2 = 0.0;
            for j in 0..p {
                let d = wn[j] - w[j];
                quad += gw[j] * d;
                dist2 += d * d;
            }
            let dv = vn - v;
            quad += gv * dv;
            dist2 += dv * dv;
            quad += dist2 / (2.0 * step);
            if f_new <= quad + 1e-15 || step < 1e-12 {
                break (wn, vn, step);
            }
            step *= 0.5;
        };

        let prox_grad_norm = {
            let mut s = 0.0;
            for j in 0..p {
                s += ((w_new[j] - w[j]) / used_step).powi(2);
            }
            s += ((v_new - v) / used_step).powi(2);
            s.sqrt()
        };

        w = w_new;
        v = v_new;
        let new_obj = logistic_loss(&x, y, &w, v)
            + w.iter().enumerate().map(|(j, wi)| lam(j) * wi.abs()).sum::<f64>();
        let decrease = obj - new_obj;
        obj = new_obj;
        // gentle step recovery keeps backtracking from pinning the step
        step = (step * 1.5).min(1e4);

        if prox_grad_norm < 1e-7 || (0.0..1e-10).contains(&decrease) {
            converged = true;
            break;
        }
    }

    Ok(L1LogisticModel { w, v, lambda, iterations, converged, saturated })
}

/// Smallest lambda with all-zero weights: max_j of the smooth gradient at
/// the intercept-only optimum.
pub fn logistic_lambda_max(data: &FeatureMatrix, standardize: bool) -> f64 {
    let mut x = data.x.clone();
    if standardize && !data.standardized {
        standardize_columns(&mut x);
    }
    let n_pos = data.y.iter().filter(|&&b| b > 0.0).count() as f64;
    let n_neg = data.y.len() as f64 - n_pos;
    let v0 = if n_pos > 0.0 && n_neg > 0.0 { (n_pos / n_neg).ln() } else { 0.0 };
    let (gw, _) = logistic_gradient(&x, &data.y, &vec![0.0; data.num_features()], v0);
    gw.iter().map(|g| g.abs()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RandomizedOptions {
    pub n_resamples: usize,
    pub subsample_fraction: f64,
    pub weakness: f64,
    pub seed: u64,
}

impl Default for RandomizedOptions {
    fn default() -> Self {
        RandomizedOptions { n_resamples: 100, subsample_fraction: 0.75, weakness: 0.5, seed: 0 }
    }
}

/// Stability selection: per-feature selection frequency over
/// (resample, lambda) L1-logistic fits on row subsamples with per-feature
/// penalty weakening. Deterministic given the seed.
pub fn randomized_logistic(
    data: &FeatureMatrix,
    lambda_grid: &[f64],
    options: &RandomizedOptions,
) -> Result<Vec<f64>> {
    if lambda_grid.is_empty() {
        return Err(Error::InvalidArgument("empty lambda grid".to_string()));
    }
    if options.n_resamples == 0 {
        return Err(Error::InvalidArgument("n_resamples must be >= 1".to_string()));
    }
    if !(0.0..=1.0).contains(&options.subsample_fraction) || options.subsample_fraction == 0.0 {
        return Err(Error::InvalidArgument("subsample_fraction must be in (0, 1]".to_string()));
    }
    if !(0.0..=1.0).contains(&options.weakness) || options.weakness == 0.0 {
        return Err(Error::InvalidArgument("weakness must be in (0, 1]".to_string()));
    }
    let n = data.num_rows();
    let p = data.num_features();
    let m = ((options.subsample_fraction * n as f64).floor() as usize).min(n);
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "subsample_fraction {} keeps fewer than 2 of {n} rows",
            options.subsample_fraction
        )));
    }

    let mut counts = vec![0usize; p];
    let total = options.n_resamples * lambda_grid.len();
    for r in 0..options.n_resamples {
        // per-resample stream split from the root seed so parallel and
        // serial traversal orders agree
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed.wrapping_add(r as u64));
        let mut rows: Vec<usize> = (0..n).collect();
        rows.shuffle(&mut rng);
        rows.truncate(m);
        rows.sort_unstable();
        let scale: Vec<f64> =
            (0..p).map(|_| rng.gen_range(options.weakness..=1.0)).collect();

        let sub = FeatureMatrix {
            x: rows.iter().map(|&i| data.x[i].clone()).collect(),
            y: rows.iter().map(|&i| data.y[i]).collect(),
            feature_names: data.feature_names.clone(),
            standardized: data.standardized,
        };
        for &lambda in lambda_grid {
            let opts = LogisticOptions {
                standardize: true,
                max_iter: 2_000,
                penalty_scale: Some(scale.clone()),
            };
            let model = l1_logistic_fit(&sub, lambda, &opts)?;
            for j in model.support(1e-9) {
                counts[j] += 1;
            }
        }
    }
    Ok(counts.into_iter().map(|c| c as f64 / total as f64).collect())
}

/// Which L1 selector drives the OvR frequency computation. Lambdas are
/// relative to each binary problem's own lambda_max.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum SelectionMethod {
    Lasso { lambda_rel: f64 },
    L1Logistic { lambda_rel: f64 },
    Randomized { lambda_rel_grid: Vec<f64>, options: RandomizedOptions },
}

impl Default for SelectionMethod {
    fn default() -> Self {
        SelectionMethod::Lasso { lambda_rel: 0.1 }
    }
}

/// One-vs-Rest selection frequency per feature: each class is recoded
/// +1-vs-rest, the selector runs, and the per-class supports (or
/// per-class stability frequencies, for the randomized method) average
/// over the K classes.
pub fn ovr_frequencies(
    x: &[Vec<f64>],
    feature_names: &[String],
    labels: &[usize],
    method: &SelectionMethod,
) -> Result<Vec<f64>> {
    let k = labels.iter().max().map_or(0, |&m| m + 1);
    if k < 2 {
        return Err(Error::InvalidArgument("need at least 2 classes".to_string()));
    }
    for class in 0..k {
        let members = labels.iter().filter(|&&l| l == class).count();
        if members < 2 {
            return Err(Error::InvalidArgument(format!(
                "class {class} has {members} member(s); need at least 2"
            )));
        }
    }
    let p = feature_names.len();
    let mut freq = vec![0.0f64; p];
    for class in 0..k {
        let y: Vec<f64> =
            labels.iter().map(|&l| if l == class { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x.to_vec(), y, feature_names.to_vec())?;
        match method {
            SelectionMethod::Lasso { lambda_rel } => {
                let lambda = lambda_rel * lasso_lambda_max(&data, true);
                let model = lasso_fit(&data, lambda, &LassoOptions::default())?;
                for j in model.support(1e-9) {
                    freq[j] += 1.0;
                }
            }
            SelectionMethod::L1Logistic { lambda_rel } => {
                let lambda = lambda_rel * logistic_lambda_max(&data, true);
                let model = l1_logistic_fit(&data, lambda, &LogisticOptions::default())?;
                for j in model.support(1e-9) {
                    freq[j] += 1.0;
                }
            }
            SelectionMethod::Randomized { lambda_rel_grid, options } => {
                let lmax = logistic_lambda_max(&data, true);
                let grid: Vec<f64> = lambda_rel_grid.iter().map(|r| r * lmax).collect();
                let mut opts = options.clone();
                opts.seed = options.seed.wrapping_add(class as u64);
                let f = randomized_logistic(&data, &grid, &opts)?;
                for (j, fj) in f.into_iter().enumerate() {
                    freq[j] += fj;
                }
            }
        }
    }
    Ok(freq.into_iter().map(|f| f / k as f64).collect())
}

/// Frequencies and chosen features for one selection stage; indices refer
/// to the full feature matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StageReport {
    pub frequencies: Vec<f64>,
    pub selected: Vec<usize>,
    pub stage: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelectionReport {
    pub stage1: StageReport,
    pub stage2: StageReport,
    pub seed: u64,
    pub params: SelectionMethod,
}

impl SelectionReport {
    pub fn selected_features(&self) -> &[usize] {
        &self.stage2.selected
    }
}

/// Keep the top `count` pool indices by descending frequency, ties broken
/// by ascending original column index.
fn top_by_frequency(freq: &[f64], pool: &[usize], count: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by(|&a, &b| {
        freq[a]
            .partial_cmp(&freq[b])
            .unwrap()
            .reverse()
            .then(pool[a].cmp(&pool[b]))
    });
    order.truncate(count);
    order.into_iter().map(|i| pool[i]).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoStageConfig {
    pub method: SelectionMethod,
    pub seed: u64,
    pub stage1_keep: usize,
    pub stage2_keep: usize,
}

impl Default for TwoStageConfig {
    fn default() -> Self {
        TwoStageConfig {
            method: SelectionMethod::default(),
            seed: 0,
            stage1_keep: 30,
            stage2_keep: 20,
        }
    }
}

/// The two-stage pipeline: stage 1 ranks the pooled thickness+shape columns
/// and keeps the top 30; stage 2 pools those 30 with the 12 volumetric
/// columns, reruns the selector, and keeps the top 20. All reported indices
/// refer to columns of the full matrix.
pub fn two_stage_select(
    x: &[Vec<f64>],
    feature_names: &[String],
    labels: &[usize],
    volumetric_cols: &[usize],
    thickness_shape_cols: &[usize],
    config: &TwoStageConfig,
) -> Result<SelectionReport> {
    let p = feature_names.len();
    if thickness_shape_cols.len() < config.stage1_keep {
        return Err(Error::InvalidArgument(format!(
            "need at least {} thickness+shape columns, got {}",
            config.stage1_keep,
            thickness_shape_cols.len()
        )));
    }
    let method = seeded_method(&config.method, config.seed);

    let submatrix = |cols: &[usize]| -> (Vec<Vec<f64>>, Vec<String>) {
        let xs = x
            .iter()
            .map(|row| cols.iter().map(|&j| row[j]).collect())
            .collect();
        let names = cols.iter().map(|&j| feature_names[j].clone()).collect();
        (xs, names)
    };

    // stage 1: thickness + shape only
    let (x1, names1) = submatrix(thickness_shape_cols);
    let f1 = ovr_frequencies(&x1, &names1, labels, &method)?;
    let selected1 = top_by_frequency(&f1, thickness_shape_cols, config.stage1_keep);
    let mut freq1_full = vec![0.0f64; p];
    for (local, &col) in thickness_shape_cols.iter().enumerate() {
        freq1_full[col] = f1[local];
    }

    // stage 2: survivors + volumetric
    let mut pool2: Vec<usize> = selected1.clone();
    pool2.extend_from_slice(volumetric_cols);
    if pool2.len() < config.stage2_keep {
        return Err(Error::InvalidArgument(format!(
            "stage-2 pool has {} columns, need at least {}",
            pool2.len(),
            config.stage2_keep
        )));
    }
    let (x2, names2) = submatrix(&pool2);
    let f2 = ovr_frequencies(&x2, &names2, labels, &method)?;
    let selected2 = top_by_frequency(&f2, &pool2, config.stage2_keep);
    let mut freq2_full = vec![0.0f64; p];
    for (local, &col) in pool2.iter().enumerate() {
        freq2_full[col] = f2[local];
    }

    Ok(SelectionReport {
        stage1: StageReport { frequencies: freq1_full, selected: selected1, stage: 1 },
        stage2: StageReport { frequencies: freq2_full, selected: selected2, stage: 2 },
        seed: config.seed,
        params: method,
    })
}

fn seeded_method(method: &SelectionMethod, seed: u64) -> SelectionMethod {
    match method {
        SelectionMethod::Randomized { lambda_rel_grid, options } => {
            let mut opts = options.clone();
            opts.seed = seed;
            SelectionMethod::Randomized { lambda_rel_grid: lambda_rel_grid.clone(), options: opts }
        }
        other => other.clone(),
    }
}

/// Log-spaced relative lambda grid over [1e-4, 1] with `points` entries.
pub fn default_lambda_rel_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| 10f64.powf(-4.0 + 4.0 * i as f64 / (points.max(2) - 1) as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng_matrix(rng: &mut ChaCha8Rng, n: usize, p: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|_| (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect()
    }

    fn names(p: usize) -> Vec<String> {
        (0..p).map(|j| format!("f{j}")).collect()
    }

    /// Solve the normal equations (X'X) beta = X'y by Gaussian elimination
    /// with an intercept column. Independent least-squares oracle.
    pub(crate) fn least_squares(x: &[Vec<f64>], y: &[f64]) -> Vec<f64> {
        let n = x.len();
        let p = x[0].len() + 1; // leading intercept column
        let design: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut row = vec![1.0];
                row.extend_from_slice(&x[i]);
                row
            })
            .collect();
        let mut a = vec![vec![0.0f64; p + 1]; p];
        for i in 0..p {
            for j in 0..p {
                a[i][j] = (0..n).map(|r| design[r][i] * design[r][j]).sum();
            }
            a[i][p] = (0..n).map(|r| design[r][i] * y[r]).sum();
        }
        for col in 0..p {
            let pivot = (col..p).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap()).unwrap();
            a.swap(col, pivot);
            let d = a[col][col];
            for j in col..=p {
                a[col][j] /= d;
            }
            for i in 0..p {
                if i != col && a[i][col] != 0.0 {
                    let f = a[i][col];
                    for j in col..=p {
                        a[i][j] -= f * a[col][j];
                    }
                }
            }
        }
        (0..p).map(|i| a[i][p]).collect()
    }

    /// Gram-Schmidt orthonormal columns, each also centered so they stay
    /// orthogonal to the unpenalized intercept (requires n >= p).
    pub(crate) fn orthonormal_design(rng: &mut ChaCha8Rng, n: usize, p: usize) -> Vec<Vec<f64>> {
        let mut cols: Vec<Vec<f64>> = (0..p)
            .map(|_| {
                let mut col: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let mean = col.iter().sum::<f64>() / n as f64;
                for v in col.iter_mut() {
                    *v -= mean;
                }
                col
            })
            .collect();
        for j in 0..p {
            for k in 0..j {
                let dot: f64 = cols[j].iter().zip(&cols[k]).map(|(a, b)| a * b).sum();
                for i in 0..n {
                    cols[j][i] -= dot * cols[k][i];
                }
            }
            let norm: f64 = cols[j].iter().map(|v| v * v).sum::<f64>().sqrt();
            for v in cols[j].iter_mut() {
                *v /= norm;
            }
        }
        (0..n).map(|i| (0..p).map(|j| cols[j][i]).collect()).collect()
    }

    #[test]
    fn lambda_above_threshold_zeroes_everything() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = rng_matrix(&mut rng, 30, 6);
        let y: Vec<f64> = (0..30).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let data = FeatureMatrix::new(x, y, names(6)).unwrap();
        let lmax = lasso_lambda_max(&data, true);
        let model = lasso_fit(&data, lmax * 1.0001, &LassoOptions::default()).unwrap();
        assert!(model.beta.iter().all(|&b| b == 0.0), "beta {:?}", model.beta);
    }

    #[test]
    fn lambda_zero_matches_least_squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = rng_matrix(&mut rng, 40, 5);
        let y: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let coef = least_squares(&x, &y);
        let data = FeatureMatrix::new(x, y, names(5)).unwrap();
        let opts = LassoOptions { standardize: false, ..Default::default() };
        let model = lasso_fit(&data, 0.0, &opts).unwrap();
        assert!((model.intercept - coef[0]).abs() < 1e-6);
        for j in 0..5 {
            assert!((model.beta[j] - coef[j + 1]).abs() < 1e-6, "beta[{j}]");
        }
    }

    #[test]
    fn orthonormal_design_soft_thresholds_ols() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = orthonormal_design(&mut rng, 40, 8);
        let y: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let y_mean = y.iter().sum::<f64>() / 40.0;
        let ols: Vec<f64> = (0..8)
            .map(|j| x.iter().zip(&y).map(|(row, &yi)| row[j] * (yi - y_mean)).sum())
            .collect();
        let data = FeatureMatrix::new(x, y, names(8)).unwrap();
        let lambda = 0.4;
        let opts = LassoOptions { standardize: false, ..Default::default() };
        let model = lasso_fit(&data, lambda, &opts).unwrap();
        for j in 0..8 {
            let expect = soft_threshold(ols[j], lambda / 2.0);
            assert!((model.beta[j] - expect).abs() < 1e-6, "beta[{j}]");
        }
    }

    /// Subgradient optimality residuals for the lasso objective on the data
    /// as fitted (no standardization).
    pub(crate) fn lasso_kkt_violation(x: &[Vec<f64>], y: &[f64], model: &LassoModel) -> f64 {
        let p = model.beta.len();
        let residual: Vec<f64> = x
            .iter()
            .zip(y)
            .map(|(row, &yi)| {
                yi - model.intercept
                    - row.iter().zip(&model.beta).map(|(xi, bi)| xi * bi).sum::<f64>()
            })
            .collect();
        let mut worst = 0.0f64;
        for j in 0..p {
            let corr: f64 = 2.0 * x.iter().zip(&residual).map(|(row, r)| row[j] * r).sum::<f64>();
            let viol = if model.beta[j] == 0.0 {
                (corr.abs() - model.lambda).max(0.0)
            } else {
                (corr - model.lambda * model.beta[j].signum()).abs()
            };
            worst = worst.max(viol);
        }
        worst
    }

    #[test]
    fn subgradient_conditions_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let x = rng_matrix(&mut rng, 30, 8);
            let y: Vec<f64> = (0..30).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let data = FeatureMatrix::new(x.clone(), y.clone(), names(8)).unwrap();
            let lambda = 0.3 * lasso_lambda_max(&data, false);
            let opts = LassoOptions { standardize: false, ..Default::default() };
            let model = lasso_fit(&data, lambda, &opts).unwrap();
            assert!(lasso_kkt_violation(&x, &y, &model) < 1e-6);
        }
    }

    #[test]
    fn logistic_large_lambda_gives_class_balance_intercept() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = rng_matrix(&mut rng, 30, 4);
        let y: Vec<f64> = (0..30).map(|i| if i < 20 { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x, y, names(4)).unwrap();
        let model = l1_logistic_fit(&data, 10.0, &LogisticOptions::default()).unwrap();
        assert!(model.w.iter().all(|&w| w == 0.0));
        assert!((model.v - (20.0f64 / 10.0).ln()).abs() < 1e-4, "v {}", model.v);
    }

    #[test]
    fn logistic_label_negation_negates_the_model() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = rng_matrix(&mut rng, 24, 3);
        let y: Vec<f64> = (0..24).map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x.clone(), y.clone(), names(3)).unwrap();
        let neg = FeatureMatrix::new(x, y.iter().map(|b| -b).collect(), names(3)).unwrap();
        let m1 = l1_logistic_fit(&data, 0.01, &LogisticOptions::default()).unwrap();
        let m2 = l1_logistic_fit(&neg, 0.01, &LogisticOptions::default()).unwrap();
        for j in 0..3 {
            assert!((m1.w[j] + m2.w[j]).abs() < 1e-5, "w[{j}]");
        }
        assert!((m1.v + m2.v).abs() < 1e-5);
    }

    #[test]
    fn logistic_separable_data_is_fit_perfectly() {
        let mut x = Vec::new();
        let mut y = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            x.push(vec![rng.gen_range(1.0..2.0), rng.gen_range(-0.5..0.5)]);
            y.push(1.0);
            x.push(vec![rng.gen_range(-2.0..-1.0), rng.gen_range(-0.5..0.5)]);
            y.push(-1.0);
        }
        let data = FeatureMatrix::new(x.clone(), y.clone(), names(2)).unwrap();
        let model = l1_logistic_fit(&data, 1e-3, &LogisticOptions::default()).unwrap();
        // predictions in the standardized space the model was fit in
        let mut xs = x;
        standardize_columns(&mut xs);
        let correct = xs
            .iter()
            .zip(&y)
            .filter(|(row, &b)| model.decision(row) * b > 0.0)
            .count();
        assert_eq!(correct, 40);
    }

    #[test]
    fn logistic_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let x = rng_matrix(&mut rng, 15, 4);
        let y: Vec<f64> = (0..15).map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 }).collect();
        for _ in 0..5 {
            let w: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let v: f64 = rng.gen_range(-1.0..1.0);
            let (gw, gv) = logistic_gradient(&x, &y, &w, v);
            let h = 1e-6;
            for j in 0..4 {
                let mut wp = w.clone();
                let mut wm = w.clone();
                wp[j] += h;
                wm[j] -= h;
                let fd = (logistic_loss(&x, &y, &wp, v) - logistic_loss(&x, &y, &wm, v)) / (2.0 * h);
                assert!((gw[j] - fd).abs() / (1.0 + fd.abs()) < 1e-5);
            }
            let fdv = (logistic_loss(&x, &y, &w, v + h) - logistic_loss(&x, &y, &w, v - h)) / (2.0 * h);
            assert!((gv - fdv).abs() / (1.0 + fdv.abs()) < 1e-5);
        }
    }

    #[test]
    fn degenerate_resampling_matches_plain_fit() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = rng_matrix(&mut rng, 20, 5);
        let y: Vec<f64> = (0..20).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x, y, names(5)).unwrap();
        let lambda = 0.2 * logistic_lambda_max(&data, true);
        let opts = RandomizedOptions {
            n_resamples: 1,
            subsample_fraction: 1.0,
            weakness: 1.0,
            seed: 17,
        };
        let freq = randomized_logistic(&data, &[lambda], &opts).unwrap();
        let plain = l1_logistic_fit(&data, lambda, &LogisticOptions { max_iter: 2_000, ..Default::default() }).unwrap();
        let support = plain.support(1e-9);
        for (j, f) in freq.iter().enumerate() {
            let expected = if support.contains(&j) { 1.0 } else { 0.0 };
            assert_eq!(*f, expected, "feature {j}");
        }
    }

    #[test]
    fn randomized_is_deterministic_given_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let x = rng_matrix(&mut rng, 30, 6);
        let y: Vec<f64> = (0..30).map(|i| if i < 15 { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x, y, names(6)).unwrap();
        let opts = RandomizedOptions { n_resamples: 5, seed: 4, ..Default::default() };
        let a = randomized_logistic(&data, &[0.01, 0.05], &opts).unwrap();
        let b = randomized_logistic(&data, &[0.01, 0.05], &opts).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ovr_binary_case_and_counting() {
        // K = 2: the two OvR problems are label negations, supports equal,
        // so frequencies land in {0, 1}
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = rng_matrix(&mut rng, 30, 5);
        let labels: Vec<usize> = (0..30).map(|i| i % 2).collect();
        let f = ovr_frequencies(&x, &names(5), &labels, &SelectionMethod::Lasso { lambda_rel: 0.3 })
            .unwrap();
        for v in &f {
            assert!(*v == 0.0 || *v == 1.0, "frequency {v}");
        }
    }

    #[test]
    fn all_zero_column_never_selected() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut x = rng_matrix(&mut rng, 30, 5);
        for row in x.iter_mut() {
            row[2] = 0.0;
        }
        let labels: Vec<usize> = (0..30).map(|i| i % 3).collect();
        let f = ovr_frequencies(&x, &names(5), &labels, &SelectionMethod::Lasso { lambda_rel: 0.05 })
            .unwrap();
        assert_eq!(f[2], 0.0);
    }

    #[test]
    fn small_class_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let x = rng_matrix(&mut rng, 10, 3);
        let mut labels = vec![0usize; 10];
        labels[9] = 1; // one member only
        assert!(ovr_frequencies(&x, &names(3), &labels, &SelectionMethod::default()).is_err());
    }

    #[test]
    fn sparsity_trend_is_monotone_after_isotonic_smoothing() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let x = rng_matrix(&mut rng, 40, 10);
        let y: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let data = FeatureMatrix::new(x, y, names(10)).unwrap();
        let lmax = lasso_lambda_max(&data, true);
        let sizes: Vec<f64> = (0..10)
            .map(|i| {
                let lambda = lmax * 10f64.powf(-3.0 + 3.0 * i as f64 / 9.0);
                lasso_fit(&data, lambda, &LassoOptions::default())
                    .unwrap()
                    .support(1e-9)
                    .len() as f64
            })
            .collect();
        // pool-adjacent-violators on the decreasing trend
        let mut iso = sizes.clone();
        for i in 1..iso.len() {
            if iso[i] > iso[i - 1] {
                iso[i] = iso[i - 1];
            }
        }
        for (s, m) in sizes.iter().zip(&iso) {
            assert!((s - m).abs() <= 1.0, "sizes {sizes:?}");
        }
    }

    fn planted_multiclass(
        rng: &mut ChaCha8Rng,
        n: usize,
    ) -> (Vec<Vec<f64>>, Vec<usize>, Vec<String>) {
        // 12 "volumetric" + 113 "thickness/shape" columns; 3 volumetric and
        // 4 thickness/shape columns carry class signal
        let p = 125;
        let mut x = rng_matrix(rng, n, p);
        let mut labels = Vec::with_capacity(n);
        for (i, row) in x.iter_mut().enumerate() {
            let class = i % 5;
            labels.push(class);
            let c = class as f64;
            row[0] += 3.0 * c;
            row[5] -= 2.0 * c;
            row[11] += 1.5 * (c - 2.0).abs();
            row[20] += 2.5 * c;
            row[40] -= 2.0 * c;
            row[80] += 2.0 * (c - 1.5);
            row[112] += 1.5 * c;
        }
        (x, labels, names(p))
    }

    #[test]
    fn two_stage_keeps_volumetric_signal() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let (x, labels, nm) = planted_multiclass(&mut rng, 100);
        let vol_cols: Vec<usize> = (0..12).collect();
        let ts_cols: Vec<usize> = (12..125).collect();
        // sparse enough that pure-noise columns rarely reach frequency 1
        let config = TwoStageConfig {
            method: SelectionMethod::Lasso { lambda_rel: 0.3 },
            ..Default::default()
        };
        let report = two_stage_select(&x, &nm, &labels, &vol_cols, &ts_cols, &config).unwrap();
        assert_eq!(report.stage1.selected.len(), 30);
        assert_eq!(report.stage2.selected.len(), 20);
        for signal in [0usize, 5, 11] {
            assert!(
                report.stage2.selected.contains(&signal),
                "volumetric signal column {signal} missing from {:?}",
                report.stage2.selected
            );
        }
        // determinism
        let again = two_stage_select(&x, &nm, &labels, &vol_cols, &ts_cols, &config).unwrap();
        assert_eq!(report.stage2.selected, again.stage2.selected);
    }

    #[test]
    fn two_stage_report_serializes() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let (x, labels, nm) = planted_multiclass(&mut rng, 60);
        let vol_cols: Vec<usize> = (0..12).collect();
        let ts_cols: Vec<usize> = (12..125).collect();
        let report =
            two_stage_select(&x, &nm, &labels, &vol_cols, &ts_cols, &TwoStageConfig::default())
                .unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: SelectionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.stage2.selected, report.stage2.selected);
    }
}
