//! Acceptance gate: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Oracles here are written
//! independently of the library code they audit: closed-form solutions,
//! brute-force geometry, and finite differences.

#![allow(clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cardioclass::classifiers::ensemble_vote;
use cardioclass::classifiers::logistic::{logistic_gradients, logistic_objective};
use cardioclass::classifiers::mlp::{mlp_gradients, mlp_loss, train_mlp, MlpClassifier, MlpConfig};
use cardioclass::classifiers::nusvm::{solve_nu_svc, Kernel, SmoSolution};
use cardioclass::evaluation::{run_repeated_cv, CvConfig};
use cardioclass::features::{assemble_features, FeatureManifest};
use cardioclass::phantom::{generate_cohort, perturb_segmentation};
use cardioclass::postprocess::{connected_components, keep_largest_component, Connectivity};
use cardioclass::seg_metrics::{dice, hausdorff};
use cardioclass::selection::{
    l1_logistic_fit, lasso_fit, lasso_lambda_max, logistic_gradient, logistic_lambda_max,
    logistic_loss, randomized_logistic, FeatureMatrix, LassoOptions, LogisticOptions,
    RandomizedOptions,
};
use cardioclass::volume::{BinaryMask, LabeledVolume, SubjectStudy, BG, LV, MC};

fn criterion(name: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("ACCEPTANCE {name}: PASS"),
        Err(e) => {
            println!("ACCEPTANCE {name}: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn names(p: usize) -> Vec<String> {
    (0..p).map(|j| format!("f{j}")).collect()
}

fn soft(v: f64, t: f64) -> f64 {
    if v > t {
        v - t
    } else if v < -t {
        v + t
    } else {
        0.0
    }
}

/// Least squares with intercept by Gaussian elimination on the normal
/// equations; returns [intercept, beta...].
fn least_squares(x: &[Vec<f64>], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let p = x[0].len() + 1;
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
        let pivot = (col..p)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
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

/// Columns centered (so the intercept stays out of the way) and made
/// orthonormal by Gram-Schmidt.
fn orthonormal_design(rng: &mut ChaCha8Rng, n: usize, p: usize) -> Vec<Vec<f64>> {
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
fn c01_lasso_oracle_equivalence() {
    criterion("C01 lasso-oracle-equivalence", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let opts = LassoOptions { standardize: false, ..Default::default() };
        for trial in 0..50 {
            let x = orthonormal_design(&mut rng, 40, 10);
            let y: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let y_mean = y.iter().sum::<f64>() / 40.0;
            let data = FeatureMatrix::new(x.clone(), y.clone(), names(10)).unwrap();

            // closed form on orthonormal centered columns
            let lambda = rng.gen_range(0.1..1.0);
            let model = lasso_fit(&data, lambda, &opts).unwrap();
            for j in 0..10 {
                let ols_j: f64 =
                    x.iter().zip(&y).map(|(row, &yi)| row[j] * (yi - y_mean)).sum();
                let expect = soft(ols_j, lambda / 2.0);
                assert!(
                    (model.beta[j] - expect).abs() < 1e-6,
                    "trial {trial} beta[{j}]: {} vs {expect}",
                    model.beta[j]
                );
            }

            // lambda = 0 reduces to least squares
            let ls = least_squares(&x, &y);
            let model0 = lasso_fit(&data, 0.0, &opts).unwrap();
            assert!((model0.intercept - ls[0]).abs() < 1e-6, "trial {trial} intercept");
            for j in 0..10 {
                assert!((model0.beta[j] - ls[j + 1]).abs() < 1e-6, "trial {trial} ls beta[{j}]");
            }
        }
        assert!(start.elapsed().as_secs_f64() < 5.0, "took {:?}", start.elapsed());
    });
}

#[test]
fn c02_lasso_subgradient_optimality() {
    criterion("C02 lasso-subgradient-optimality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        let opts = LassoOptions { standardize: false, ..Default::default() };
        for trial in 0..50 {
            let n = rng.gen_range(20..50);
            let p = rng.gen_range(3..12);
            let x: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect();
            let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let data = FeatureMatrix::new(x.clone(), y.clone(), names(p)).unwrap();
            let lambda = rng.gen_range(0.05..0.5) * lasso_lambda_max(&data, false);
            let model = lasso_fit(&data, lambda, &opts).unwrap();

            let residual: Vec<f64> = x
                .iter()
                .zip(&y)
                .map(|(row, &yi)| {
                    yi - model.intercept
                        - row.iter().zip(&model.beta).map(|(xi, bi)| xi * bi).sum::<f64>()
                })
                .collect();
            // intercept stationarity
            let mean_res = residual.iter().sum::<f64>() / n as f64;
            assert!(mean_res.abs() < 1e-6, "trial {trial} intercept residual {mean_res}");
            for j in 0..p {
                let corr: f64 =
                    2.0 * x.iter().zip(&residual).map(|(row, r)| row[j] * r).sum::<f64>();
                let viol = if model.beta[j] == 0.0 {
                    (corr.abs() - lambda).max(0.0)
                } else {
                    (corr - lambda * model.beta[j].signum()).abs()
                };
                assert!(viol < 1e-6, "trial {trial} feature {j}: violation {viol}");
            }
        }
    });
}

#[test]
fn c03_l1_logistic_properties() {
    criterion("C03 l1-logistic-properties", || {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let n = 30;
        let p = 5;
        let x: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let y: Vec<f64> = (0..n).map(|i| if i < 18 { 1.0 } else { -1.0 }).collect();
        let data = FeatureMatrix::new(x.clone(), y.clone(), names(p)).unwrap();

        // objective monotone non-increasing along the iterate sequence
        let lambda = 0.05;
        let objective = |w: &[f64], v: f64| {
            logistic_loss(&x, &y, w, v) + lambda * w.iter().map(|wi| wi.abs()).sum::<f64>()
        };
        let mut prev = f64::INFINITY;
        for iters in 1..=40 {
            let opts = LogisticOptions {
                standardize: false,
                max_iter: iters,
                penalty_scale: None,
            };
            let m = l1_logistic_fit(&data, lambda, &opts).unwrap();
            let obj = objective(&m.w, m.v);
            assert!(obj <= prev + 1e-12, "objective rose at iteration {iters}: {prev} -> {obj}");
            prev = obj;
        }

        // smooth gradient vs central finite differences at 20 random points
        let h = 1e-6;
        for _ in 0..20 {
            let w: Vec<f64> = (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let v: f64 = rng.gen_range(-1.0..1.0);
            let (gw, gv) = logistic_gradient(&x, &y, &w, v);
            for j in 0..p {
                let mut wp = w.clone();
                let mut wm = w.clone();
                wp[j] += h;
                wm[j] -= h;
                let fd = (logistic_loss(&x, &y, &wp, v) - logistic_loss(&x, &y, &wm, v)) / (2.0 * h);
                let rel = (gw[j] - fd).abs() / (1.0 + fd.abs());
                assert!(rel < 1e-5, "w[{j}] rel err {rel}");
            }
            let fdv = (logistic_loss(&x, &y, &w, v + h) - logistic_loss(&x, &y, &w, v - h)) / (2.0 * h);
            assert!((gv - fdv).abs() / (1.0 + fdv.abs()) < 1e-5);
        }

        // large lambda collapses to the intercept-only optimum
        let m = l1_logistic_fit(&data, 10.0, &LogisticOptions::default()).unwrap();
        assert!(m.w.iter().all(|&wi| wi == 0.0));
        assert!((m.v - (18.0f64 / 12.0).ln()).abs() < 1e-4, "v = {}", m.v);
    });
}

#[test]
fn c04_stability_selection_recovers_planted_signal() {
    criterion("C04 stability-selection-planted-signal", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(104);
        let n = 200;
        let p = 50;
        let x: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let y: Vec<f64> = x
            .iter()
            .map(|row| {
                let z: f64 = (0..5).map(|j| 3.0 * row[j]).sum::<f64>()
                    + rng.gen_range(-0.3..0.3);
                if z > 0.0 {
                    1.0
                } else {
                    -1.0
                }
            })
            .collect();
        let data = FeatureMatrix::new(x, y, names(p)).unwrap();
        let lmax = logistic_lambda_max(&data, true);
        let grid = [0.25 * lmax, 0.4 * lmax];
        let opts = RandomizedOptions { n_resamples: 200, seed: 17, ..Default::default() };
        let freq = randomized_logistic(&data, &grid, &opts).unwrap();
        for j in 0..5 {
            assert!(freq[j] >= 0.8, "true feature {j} frequency {}", freq[j]);
        }
        for j in 5..p {
            assert!(freq[j] < 0.3, "decoy {j} frequency {}", freq[j]);
        }
        assert!(start.elapsed().as_secs_f64() < 60.0, "took {:?}", start.elapsed());
    });
}

fn random_mask(rng: &mut ChaCha8Rng, dims: (usize, usize, usize), fill: f64) -> BinaryMask {
    loop {
        let bits: Vec<bool> = (0..dims.0 * dims.1 * dims.2)
            .map(|_| rng.gen_bool(fill))
            .collect();
        if bits.iter().any(|&b| b) {
            return BinaryMask::new(dims, (1.0, 1.0, 1.0), bits).unwrap();
        }
    }
}

/// Direct double-loop symmetric Hausdorff over independently recomputed
/// boundary sets, mirroring the squared-distance arithmetic exactly.
fn brute_hausdorff(a: &BinaryMask, b: &BinaryMask) -> f64 {
    let boundary = |m: &BinaryMask| -> Vec<[f64; 3]> {
        let (nx, ny, nz) = m.dims();
        let mut out = Vec::new();
        for z in 0..nz {
            for y in 0..ny {
                for x in 0..nx {
                    if !m.get(x, y, z) {
                        continue;
                    }
                    let mut exposed = false;
                    for (dx, dy, dz) in
                        [(-1i64, 0i64, 0i64), (1, 0, 0), (0, -1, 0), (0, 1, 0), (0, 0, -1), (0, 0, 1)]
                    {
                        let (px, py, pz) = (x as i64 + dx, y as i64 + dy, z as i64 + dz);
                        if px < 0
                            || py < 0
                            || pz < 0
                            || px >= nx as i64
                            || py >= ny as i64
                            || pz >= nz as i64
                            || !m.get(px as usize, py as usize, pz as usize)
                        {
                            exposed = true;
                            break;
                        }
                    }
                    if exposed {
                        out.push(m.physical_point(x, y, z));
                    }
                }
            }
        }
        out
    };
    let pa = boundary(a);
    let pb = boundary(b);
    let directed = |from: &[[f64; 3]], to: &[[f64; 3]]| -> f64 {
        let mut worst = 0.0f64;
        for p in from {
            let mut best = f64::INFINITY;
            for q in to {
                let dx = p[0] - q[0];
                let dy = p[1] - q[1];
                let dz = p[2] - q[2];
                let d = dx * dx + dy * dy + dz * dz;
                if d < best {
                    best = d;
                }
            }
            if best > worst {
                worst = best;
            }
        }
        worst
    };
    directed(&pa, &pb).max(directed(&pb, &pa)).sqrt()
}

#[test]
fn c05_seg_metric_properties_and_brute_force() {
    criterion("C05 seg-metrics-brute-force", || {
        let mut rng = ChaCha8Rng::seed_from_u64(105);
        for trial in 0..100 {
            let dims = (
                rng.gen_range(2..=8usize),
                rng.gen_range(2..=8usize),
                rng.gen_range(2..=8usize),
            );
            let a = random_mask(&mut rng, dims, 0.3);
            let b = random_mask(&mut rng, dims, 0.3);

            // identity and symmetry
            assert_eq!(dice(&a, &a).unwrap(), 1.0);
            assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
            assert_eq!(dice(&a, &b).unwrap(), dice(&b, &a).unwrap());
            let h_ab = hausdorff(&a, &b).unwrap();
            assert_eq!(h_ab, hausdorff(&b, &a).unwrap());

            // brute force agreement
            let brute = brute_hausdorff(&a, &b);
            assert!(
                (h_ab - brute).abs() <= 1e-12 * brute.max(1.0),
                "trial {trial}: {h_ab} vs {brute}"
            );

            // spacing scaling: doubling spacing doubles the distance
            let a2 = BinaryMask::new(dims, (2.0, 2.0, 2.0), a.bits().to_vec()).unwrap();
            let b2 = BinaryMask::new(dims, (2.0, 2.0, 2.0), b.bits().to_vec()).unwrap();
            let h2 = hausdorff(&a2, &b2).unwrap();
            assert!((h2 - 2.0 * h_ab).abs() <= 1e-9 * h2.max(1.0));
        }
    });
}

fn ball_mask(dims: (usize, usize, usize), center: (f64, f64, f64), radii: (f64, f64, f64)) -> BinaryMask {
    let mut bits = vec![false; dims.0 * dims.1 * dims.2];
    for z in 0..dims.2 {
        for y in 0..dims.1 {
            for x in 0..dims.0 {
                let dx = (x as f64 - center.0) / radii.0;
                let dy = (y as f64 - center.1) / radii.1;
                let dz = (z as f64 - center.2) / radii.2;
                if dx * dx + dy * dy + dz * dz <= 1.0 {
                    bits[x + dims.0 * (y + dims.1 * z)] = true;
                }
            }
        }
    }
    BinaryMask::new(dims, (1.0, 1.0, 1.0), bits).unwrap()
}

#[test]
fn c06_shape_features_on_digital_solids() {
    criterion("C06 shape-features-digital-solids", || {
        use cardioclass::features::shape::{principal_axis_lengths, shape_stats};

        // digital sphere of radius 20 voxels
        let sphere = ball_mask((45, 45, 45), (22.0, 22.0, 22.0), (20.0, 20.0, 20.0));
        let stats = shape_stats(&sphere).unwrap();
        let analytic_area = 4.0 * std::f64::consts::PI * 400.0;
        assert!(
            (stats.area_mm2 - analytic_area).abs() / analytic_area < 0.10,
            "area {} vs {analytic_area}",
            stats.area_mm2
        );
        assert!(
            stats.sphericity >= 0.90 && stats.sphericity <= 1.05,
            "sphericity {}",
            stats.sphericity
        );
        assert!(
            (stats.sphericity * stats.spherical_disproportion - 1.0).abs() < 1e-9,
            "reciprocal identity"
        );

        // digital ellipsoid with semi-axes (20, 10, 5)
        let ell = ball_mask((45, 25, 15), (22.0, 12.0, 7.0), (20.0, 10.0, 5.0));
        let (_, lengths) = principal_axis_lengths(&ell).unwrap();
        let mut got = [lengths.0, lengths.1, lengths.2];
        got.sort_by(|a, b| b.partial_cmp(a).unwrap());

        // brute-force covariance oracle: the solid is axis-aligned, so the
        // eigenvalues are the per-coordinate variances
        let pts: Vec<[f64; 3]> = ell.true_voxels().map(|(x, y, z)| ell.physical_point(x, y, z)).collect();
        let n = pts.len() as f64;
        let mut oracle: Vec<f64> = (0..3)
            .map(|axis| {
                let mean = pts.iter().map(|p| p[axis]).sum::<f64>() / n;
                let var = pts.iter().map(|p| (p[axis] - mean).powi(2)).sum::<f64>() / n;
                4.0 * var.sqrt()
            })
            .collect();
        oracle.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (g, o) in got.iter().zip(&oracle) {
            assert!((g - o).abs() < 1e-9 * o, "axis {g} vs oracle {o}");
        }

        // continuous values: a uniform solid ellipsoid has Var = a^2/5 per
        // axis, so the axis length is 4a/sqrt(5)
        for (g, a) in got.iter().zip(&[20.0f64, 10.0, 5.0]) {
            let cont = 4.0 * a / 5.0f64.sqrt();
            assert!((g - cont).abs() / cont < 0.03, "axis {g} vs continuous {cont}");
        }
    });
}

#[test]
fn c07_diameters_and_annulus_thickness() {
    criterion("C07 diameters-and-annulus-thickness", || {
        use cardioclass::features::shape::max_diameters;
        use cardioclass::features::thickness::{thickness_features, thickness_profile};

        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for trial in 0..100 {
            let dims = (
                rng.gen_range(2..=7usize),
                rng.gen_range(2..=7usize),
                rng.gen_range(2..=7usize),
            );
            let spacing = (
                rng.gen_range(0.5..2.5),
                rng.gen_range(0.5..2.5),
                rng.gen_range(0.5..2.5),
            );
            let m = random_mask(&mut rng, dims, 0.35);
            let m = BinaryMask::new(dims, spacing, m.bits().to_vec()).unwrap();
            let (d3, ds, dc, dr) = max_diameters(&m).unwrap();

            // brute force over every voxel pair
            let pts: Vec<(usize, usize, usize)> = m.true_voxels().collect();
            let mut b3 = 0.0f64;
            let mut bs = 0.0f64;
            let mut bc = 0.0f64;
            let mut br = 0.0f64;
            for p in &pts {
                for q in &pts {
                    let pp = m.physical_point(p.0, p.1, p.2);
                    let qq = m.physical_point(q.0, q.1, q.2);
                    let d = ((pp[0] - qq[0]).powi(2) + (pp[1] - qq[1]).powi(2) + (pp[2] - qq[2]).powi(2)).sqrt();
                    b3 = b3.max(d);
                    if p.2 == q.2 {
                        bs = bs.max(d);
                    }
                    if p.0 == q.0 {
                        bc = bc.max(d);
                    }
                    if p.1 == q.1 {
                        br = br.max(d);
                    }
                }
            }
            for (got, brute, name) in [(d3, b3, "3d"), (ds, bs, "slice"), (dc, bc, "col"), (dr, br, "row")] {
                assert!(
                    (got - brute).abs() < 1e-9,
                    "trial {trial} {name}: {got} vs {brute}"
                );
            }
        }

        // annulus: myocardium between radii 10 and 15 mm
        let dims = (40, 40, 1);
        let mut labels = vec![BG; dims.0 * dims.1];
        let c = 19.5;
        for y in 0..40 {
            for x in 0..40 {
                let r = ((x as f64 - c).powi(2) + (y as f64 - c).powi(2)).sqrt();
                if r < 10.0 {
                    labels[x + 40 * y] = LV;
                } else if r < 15.0 {
                    labels[x + 40 * y] = MC;
                }
            }
        }
        let v = LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap();
        let profile = thickness_profile(&v, 1.0).unwrap();
        let ts: Vec<f64> = profile.samples.iter().map(|&(_, _, t)| t).collect();
        let mean = ts.iter().sum::<f64>() / ts.len() as f64;
        assert!((mean - 5.0).abs() < 0.5, "mean thickness {mean}");

        // all 21 threshold counts vs an independent recount
        let feats = thickness_features(&profile, "ED").unwrap();
        for thr in 10..=30u32 {
            let expected = ts.iter().filter(|&&t| t > thr as f64).count() as f64;
            let got = feats
                .iter()
                .find(|(k, _)| k == &format!("thk_gt{thr}_ED"))
                .unwrap()
                .1;
            assert_eq!(got, expected, "thr {thr}");
        }
    });
}

#[test]
fn c08_gradient_checks_and_xor() {
    criterion("C08 gradient-checks-and-xor", || {
        let mut rng = ChaCha8Rng::seed_from_u64(108);

        // logistic regression backprop vs finite differences
        for _ in 0..5 {
            let x: Vec<Vec<f64>> = (0..10)
                .map(|_| (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect();
            let labels: Vec<usize> = (0..10).map(|i| i % 3).collect();
            let w: Vec<Vec<f64>> = (0..3)
                .map(|_| (0..3).map(|_| rng.gen_range(-0.5..0.5)).collect())
                .collect();
            let b: Vec<f64> = (0..3).map(|_| rng.gen_range(-0.5..0.5)).collect();
            let (gw, gb) = logistic_gradients(&x, &labels, &w, &b, 1e-4);
            let h = 1e-6;
            for ci in 0..3 {
                for j in 0..3 {
                    let mut wp = w.clone();
                    let mut wm = w.clone();
                    wp[ci][j] += h;
                    wm[ci][j] -= h;
                    let fd = (logistic_objective(&x, &labels, &wp, &b, 1e-4)
                        - logistic_objective(&x, &labels, &wm, &b, 1e-4))
                        / (2.0 * h);
                    assert!((gw[ci][j] - fd).abs() / (1.0 + fd.abs()) < 1e-4);
                }
                let mut bp = b.clone();
                let mut bm = b.clone();
                bp[ci] += h;
                bm[ci] -= h;
                let fd = (logistic_objective(&x, &labels, &w, &bp, 1e-4)
                    - logistic_objective(&x, &labels, &w, &bm, 1e-4))
                    / (2.0 * h);
                assert!((gb[ci] - fd).abs() / (1.0 + fd.abs()) < 1e-4);
            }
        }

        // MLP backprop vs finite differences
        let x: Vec<Vec<f64>> = (0..8)
            .map(|_| (0..2).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let labels: Vec<usize> = (0..8).map(|i| i % 2).collect();
        let net = MlpClassifier {
            w1: (0..4).map(|_| (0..2).map(|_| rng.gen_range(-0.5..0.5)).collect()).collect(),
            b1: (0..4).map(|_| rng.gen_range(-0.2..0.2)).collect(),
            w2: (0..2).map(|_| (0..4).map(|_| rng.gen_range(-0.5..0.5)).collect()).collect(),
            b2: (0..2).map(|_| rng.gen_range(-0.2..0.2)).collect(),
        };
        let (gw1, gb1, gw2, gb2) = mlp_gradients(&net, &x, &labels);
        let h = 1e-6;
        let fd_check = |analytic: f64, mutate: &dyn Fn(&mut MlpClassifier, f64)| {
            let mut np = net.clone();
            mutate(&mut np, h);
            let mut nm = net.clone();
            mutate(&mut nm, -h);
            let fd = (mlp_loss(&np, &x, &labels) - mlp_loss(&nm, &x, &labels)) / (2.0 * h);
            assert!(
                (analytic - fd).abs() / (1.0 + fd.abs()) < 1e-4,
                "mlp grad {analytic} vs fd {fd}"
            );
        };
        for j in 0..4 {
            for i in 0..2 {
                fd_check(gw1[j][i], &move |n, d| n.w1[j][i] += d);
            }
            fd_check(gb1[j], &move |n, d| n.b1[j] += d);
        }
        for ci in 0..2 {
            for j in 0..4 {
                fd_check(gw2[ci][j], &move |n, d| n.w2[ci][j] += d);
            }
            fd_check(gb2[ci], &move |n, d| n.b2[ci] += d);
        }

        // XOR must be solved exactly
        let xor_x = vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]];
        let xor_y = vec![0usize, 1, 1, 0];
        let config = MlpConfig { learning_rate: 0.5, epochs: 4_000, seed: 3, ..Default::default() };
        let net = train_mlp(&xor_x, &xor_y, 2, &config).unwrap();
        for (row, &lab) in xor_x.iter().zip(&xor_y) {
            assert_eq!(net.predict(row), lab, "xor row {row:?}");
        }
    });
}

fn svc_kkt_violation(x: &[Vec<f64>], y: &[f64], sol: &SmoSolution, kernel: Kernel) -> f64 {
    let n = x.len();
    let c = 1.0 / n as f64;
    let eps = 1e-9;
    let mut worst = 0.0f64;
    for i in 0..n {
        let f: f64 = (0..n)
            .map(|j| sol.alpha[j] * y[j] * kernel.eval(&x[j], &x[i]))
            .sum::<f64>()
            + sol.bias;
        let margin = y[i] * f;
        let a = sol.alpha[i];
        let v = if a <= eps {
            (sol.rho - margin).max(0.0)
        } else if a >= c - eps {
            (margin - sol.rho).max(0.0)
        } else {
            (margin - sol.rho).abs()
        };
        worst = worst.max(v);
    }
    worst
}

#[test]
fn c09_nu_svc_kkt_and_feasibility() {
    criterion("C09 nu-svc-kkt-and-feasibility", || {
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        for trial in 0..20 {
            let n_per = rng.gen_range(8..18usize);
            let gap = rng.gen_range(1.2..2.5);
            let mut x = Vec::new();
            let mut y = Vec::new();
            for _ in 0..n_per {
                x.push(vec![gap + rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6)]);
                y.push(1.0);
                x.push(vec![-gap + rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6)]);
                y.push(-1.0);
            }
            let nu = rng.gen_range(0.1..0.9); // bound is 1.0 for balanced classes
            let sol = solve_nu_svc(&x, &y, nu, Kernel::Linear, 1e-6, 500_000).unwrap();

            // dual constraints
            let sum_ay: f64 = sol.alpha.iter().zip(&y).map(|(a, b)| a * b).sum();
            let sum_a: f64 = sol.alpha.iter().sum();
            assert!(sum_ay.abs() < 1e-6, "trial {trial} sum a*y = {sum_ay}");
            assert!(sum_a >= nu - 1e-6, "trial {trial} sum a = {sum_a} < nu {nu}");
            let c = 1.0 / x.len() as f64;
            assert!(sol.alpha.iter().all(|&a| (-1e-6..=c + 1e-6).contains(&a)));

            // stationarity
            let viol = svc_kkt_violation(&x, &y, &sol, Kernel::Linear);
            assert!(viol < 1e-3, "trial {trial}: KKT violation {viol}");
        }

        // infeasible nu: one positive among five
        let x = vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0], vec![4.0]];
        let y = vec![1.0, -1.0, -1.0, -1.0, -1.0];
        assert!(solve_nu_svc(&x, &y, 0.41, Kernel::Linear, 1e-3, 1000).is_err());
        assert!(solve_nu_svc(&x, &y, 0.39, Kernel::Linear, 1e-3, 1000).is_ok());
    });
}

#[test]
fn c10_ensemble_vote() {
    criterion("C10 ensemble-vote", || {
        // hand computation: (.6,.4)/4 + (.6,.4)/4 + (.1,.9)/2 = (.35,.65)
        let v = ensemble_vote(&[0.6, 0.4], &[0.6, 0.4], &[0.1, 0.9]).unwrap();
        assert!((v[0] - 0.35).abs() < 1e-15);
        assert!((v[1] - 0.65).abs() < 1e-15);
        assert!(v[1] > v[0], "class 2 must win");

        // argmax invariant under positive rescaling of the weights
        let mut rng = ChaCha8Rng::seed_from_u64(110);
        let argmax = |v: &[f64]| {
            let mut best = 0;
            for (i, &p) in v.iter().enumerate() {
                if p > v[best] {
                    best = i;
                }
            }
            best
        };
        for _ in 0..1000 {
            let mut draw = || {
                let raw: Vec<f64> = (0..4).map(|_| rng.gen_range(0.01f64..1.0)).collect();
                let s: f64 = raw.iter().sum();
                raw.into_iter().map(|p| p / s).collect::<Vec<f64>>()
            };
            let (a, b, c) = (draw(), draw(), draw());
            let scale: f64 = rng.gen_range(0.001..1000.0);
            let vote = ensemble_vote(&a, &b, &c).unwrap();
            let scaled: Vec<f64> = (0..4)
                .map(|i| scale * (0.25 * a[i] + 0.25 * b[i] + 0.5 * c[i]))
                .collect();
            assert_eq!(argmax(&vote), argmax(&scaled));
        }
    });
}

struct Table {
    names: Vec<String>,
    x: Vec<Vec<f64>>,
    labels: Vec<usize>,
    vol_cols: Vec<usize>,
    ts_cols: Vec<usize>,
}

fn feature_table(studies: &[SubjectStudy]) -> Table {
    let manifest = FeatureManifest::default_manifest();
    let mut x = Vec::new();
    let mut labels = Vec::new();
    let mut names = Vec::new();
    for study in studies {
        let fv = assemble_features(study, &manifest).unwrap();
        if names.is_empty() {
            names = fv.names.clone();
        }
        x.push(fv.values);
        labels.push(study.class_label.unwrap());
    }
    Table {
        names,
        x,
        labels,
        vol_cols: manifest.volumetric_columns(),
        ts_cols: manifest.thickness_shape_columns(),
    }
}

fn benchmark_accuracy(table: &Table, seed: u64) -> f64 {
    let config = CvConfig { k: 8, seed, ..Default::default() };
    run_repeated_cv(
        &table.x,
        &table.labels,
        &table.names,
        &table.vol_cols,
        &table.ts_cols,
        &config,
        8,
    )
    .unwrap()
    .mean_accuracy
}

#[test]
fn c11_c12_end_to_end_benchmark_and_robustness() {
    criterion("C11 end-to-end-phantom-benchmark", || {
        let start = Instant::now();
        let cohort = generate_cohort(20, 42).unwrap();
        assert_eq!(cohort.len(), 100);
        let clean = feature_table(&cohort);
        let clean_acc = benchmark_accuracy(&clean, 42);
        assert!(clean_acc >= 0.90, "clean accuracy {clean_acc}");
        assert!(start.elapsed().as_secs_f64() < 300.0, "took {:?}", start.elapsed());

        criterion("C12 robustness-under-perturbation", || {
            let mut noisy = cohort.clone();
            for (i, study) in noisy.iter_mut().enumerate() {
                let ed = perturb_segmentation(&study.ed, 1, 2.0, 1000 + i as u64 * 2);
                let es = perturb_segmentation(&study.es, 1, 2.0, 1001 + i as u64 * 2);
                study.ed = keep_largest_component(&ed, Connectivity::Six);
                study.es = keep_largest_component(&es, Connectivity::Six);
            }
            let noisy_table = feature_table(&noisy);
            let noisy_acc = benchmark_accuracy(&noisy_table, 42);
            assert!(
                clean_acc - noisy_acc <= 0.05,
                "accuracy dropped {clean_acc} -> {noisy_acc}"
            );
        });
    });
}

#[test]
fn c13_postprocessing_removes_blobs_idempotently() {
    criterion("C13 postprocess-idempotent-blob-removal", || {
        let cohort = generate_cohort(20, 7).unwrap();
        assert_eq!(cohort.len(), 100);
        let mut perturbed_with_extra_components = 0;
        for (i, study) in cohort.iter().enumerate() {
            let noisy = perturb_segmentation(&study.ed, 1, 3.0, 500 + i as u64);
            let before = connected_components(&noisy.foreground_mask(), Connectivity::Six);
            if before.num_components() > 1 {
                perturbed_with_extra_components += 1;
            }
            let once = keep_largest_component(&noisy, Connectivity::Six);
            let after = connected_components(&once.foreground_mask(), Connectivity::Six);
            assert_eq!(after.num_components(), 1, "subject {i} still fragmented");
            let twice = keep_largest_component(&once, Connectivity::Six);
            assert_eq!(once.labels(), twice.labels(), "subject {i} not idempotent");
        }
        // the blob injector must actually have produced work to remove
        assert!(
            perturbed_with_extra_components >= 95,
            "only {perturbed_with_extra_components}/100 phantoms got spurious components"
        );
    });
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_cardioclass")
}

fn run_cli(args: &[&str], cwd: &Path) {
    let out = Command::new(bin())
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("failed to launch CLI");
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

fn assert_same_files(a: &Path, b: &Path) {
    let mut names: Vec<String> = std::fs::read_dir(a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    let mut names_b: Vec<String> = std::fs::read_dir(b)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names_b.sort();
    assert_eq!(names, names_b, "directory listings differ");
    for name in names {
        let pa = a.join(&name);
        if pa.is_dir() {
            assert_same_files(&pa, &b.join(&name));
            continue;
        }
        let ca = std::fs::read(&pa).unwrap();
        let cb = std::fs::read(b.join(&name)).unwrap();
        assert_eq!(ca, cb, "file {name} differs between reruns");
    }
}

#[test]
fn c14_cli_byte_determinism() {
    criterion("C14 cli-byte-determinism", || {
        let root = tempfile::tempdir().unwrap();
        for run in ["a", "b"] {
            let dir = root.path().join(run);
            std::fs::create_dir_all(&dir).unwrap();
            run_cli(
                &["phantom", "--out-dir", "cohort", "--per-class", "3", "--seed", "9"],
                &dir,
            );
            run_cli(
                &["postprocess", "--input", "cohort/phantom_c0_s9_ed.json", "--output", "pp.json"],
                &dir,
            );
            run_cli(
                &[
                    "evaluate-seg",
                    "--reference",
                    "cohort/phantom_c0_s9_ed.json",
                    "--test",
                    "cohort/phantom_c0_s9_es.json",
                    "--output",
                    "seg.csv",
                ],
                &dir,
            );
            run_cli(
                &["extract", "--manifest", "cohort/manifest.csv", "--output", "features.csv"],
                &dir,
            );
            run_cli(
                &["select", "--features", "features.csv", "--output", "sel.json", "--seed", "5"],
                &dir,
            );
            run_cli(
                &[
                    "train",
                    "--features",
                    "features.csv",
                    "--selection",
                    "sel.json",
                    "--output",
                    "model.json",
                    "--seed",
                    "5",
                ],
                &dir,
            );
            run_cli(
                &[
                    "classify",
                    "--model",
                    "model.json",
                    "--features",
                    "features.csv",
                    "--output",
                    "preds.csv",
                ],
                &dir,
            );
            run_cli(
                &[
                    "cv", "--features", "features.csv", "--output", "cv.json", "--folds", "3",
                    "--seed", "5",
                ],
                &dir,
            );
            let config = r#"{"out_dir": "pout", "per_class": 3, "seed": 11, "folds": 3, "repeats": 1}"#;
            std::fs::write(dir.join("pipeline.json"), config).unwrap();
            run_cli(&["pipeline", "--config", "pipeline.json"], &dir);
        }
        assert_same_files(&root.path().join("a"), &root.path().join("b"));
    });
}
