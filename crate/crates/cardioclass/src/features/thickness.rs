//! Myocardial wall thickness by per-slice ray casting.
//!
//! For each slice containing myocardium, rays leave the LV blood-pool
//! centroid (or the MC centroid when the slice has no LV) at a fixed angular
//! step. Thickness at an angle is the length of the first contiguous run of
//! MC samples met along the ray, measured with a sampling step of half the
//! smaller in-plane spacing.

use crate::error::{Error, Result};
use crate::volume::{LabeledVolume, LV, MC};

/// Thickness samples: (slice index, angle in degrees, thickness in mm).
#[derive(Debug, Clone)]
pub struct ThicknessProfile {
    pub samples: Vec<(usize, f64, f64)>,
}

impl ThicknessProfile {
    pub fn thicknesses(&self) -> Vec<f64> {
        self.samples.iter().map(|&(_, _, t)| t).collect()
    }
}

/// Lower end of the thickness threshold ladder, in mm.
pub const THR_MIN: u32 = 10;
/// Upper end of the thickness threshold ladder, in mm (inclusive).
pub const THR_MAX: u32 = 30;

pub fn thickness_profile(volume: &LabeledVolume, angular_step_deg: f64) -> Result<ThicknessProfile> {
    if angular_step_deg <= 0.0 || (360.0 / angular_step_deg).fract().abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "angular step {angular_step_deg} must divide 360"
        )));
    }
    let (nx, ny, nz) = volume.dims();
    let (sx, sy, _) = volume.spacing();
    let step = 0.5 * sx.min(sy);
    let reach = ((nx as f64 * sx).powi(2) + (ny as f64 * sy).powi(2)).sqrt();
    let n_angles = (360.0 / angular_step_deg).round() as usize;

    let mut samples = Vec::new();
    for z in 0..nz {
        let mut mc_sum = (0.0f64, 0.0f64);
        let mut mc_n = 0usize;
        let mut lv_sum = (0.0f64, 0.0f64);
        let mut lv_n = 0usize;
        for y in 0..ny {
            for x in 0..nx {
                match volume.label(x, y, z) {
                    MC => {
                        mc_sum.0 += x as f64 * sx;
                        mc_sum.1 += y as f64 * sy;
                        mc_n += 1;
                    }
                    LV => {
                        lv_sum.0 += x as f64 * sx;
                        lv_sum.1 += y as f64 * sy;
                        lv_n += 1;
                    }
                    _ => {}
                }
            }
        }
        if mc_n == 0 {
            continue;
        }
        let center = if lv_n > 0 {
            (lv_sum.0 / lv_n as f64, lv_sum.1 / lv_n as f64)
        } else {
            (mc_sum.0 / mc_n as f64, mc_sum.1 / mc_n as f64)
        };

        for a in 0..n_angles {
            let angle = a as f64 * angular_step_deg;
            let rad = angle.to_radians();
            let (dx, dy) = (rad.cos(), rad.sin());
            let mut run = 0usize;
            let mut seen_run = false;
            let mut t = 0.0;
            while t <= reach {
                let px = center.0 + t * dx;
                let py = center.1 + t * dy;
                let ix = (px / sx).round();
                let iy = (py / sy).round();
                let inside = ix >= 0.0
                    && iy >= 0.0
                    && ix < nx as f64
                    && iy < ny as f64
                    && volume.label(ix as usize, iy as usize, z) == MC;
                if inside {
                    run += 1;
                    seen_run = true;
                } else if seen_run {
                    break; // first contiguous run ended
                }
                t += step;
            }
            samples.push((z, angle, run as f64 * step));
        }
    }
    if samples.is_empty() {
        return Err(Error::DegenerateStructure {
            feature: "thickness".to_string(),
            reason: "no myocardium voxels anywhere in the volume".to_string(),
        });
    }
    Ok(ThicknessProfile { samples })
}

/// The 27 thickness features: max, min, mean, median, std, variance, then
/// counts of samples strictly above each threshold 10..=30 mm. Names carry
/// the given phase suffix ("ED" or "ES").
pub fn thickness_features(profile: &ThicknessProfile, phase: &str) -> Result<Vec<(String, f64)>> {
    let vals = profile.thicknesses();
    if vals.is_empty() {
        return Err(Error::DegenerateStructure {
            feature: format!("thk_{phase}"),
            reason: "empty thickness profile".to_string(),
        });
    }
    let n = vals.len() as f64;
    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = vals.iter().sum::<f64>() / n;
    let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let std = var.sqrt();
    let mut sorted = vals.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = if sorted.len() % 2 == 1 {
        sorted[sorted.len() / 2]
    } else {
        0.5 * (sorted[sorted.len() / 2 - 1] + sorted[sorted.len() / 2])
    };

    let mut out = vec![
        (format!("thk_max_{phase}"), max),
        (format!("thk_min_{phase}"), min),
        (format!("thk_mean_{phase}"), mean),
        (format!("thk_median_{phase}"), median),
        (format!("thk_std_{phase}"), std),
        (format!("thk_var_{phase}"), var),
    ];
    for thr in THR_MIN..=THR_MAX {
        let count = vals.iter().filter(|&&v| v > thr as f64).count();
        out.push((format!("thk_gt{thr}_{phase}"), count as f64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::{LabeledVolume, BG};

    /// One-slice annulus of MC (inner radius 10 mm, outer 15 mm) around an
    /// LV disk, unit in-plane spacing.
    fn annulus_volume() -> LabeledVolume {
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
        LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap()
    }

    #[test]
    fn annulus_thickness_close_to_analytic_width() {
        let v = annulus_volume();
        let profile = thickness_profile(&v, 1.0).unwrap();
        assert_eq!(profile.samples.len(), 360);
        let ts = profile.thicknesses();
        let mean = ts.iter().sum::<f64>() / ts.len() as f64;
        assert!((mean - 5.0).abs() < 0.5, "mean thickness {mean}");
        for &t in &ts {
            assert!((t - 5.0).abs() <= 1.5, "sample {t} too far from 5 mm");
        }
    }

    #[test]
    fn sample_count_is_slices_times_angles() {
        // MC in 5 of 10 slices
        let dims = (20, 20, 10);
        let mut labels = vec![BG; dims.0 * dims.1 * dims.2];
        for z in [1usize, 3, 5, 7, 9] {
            for y in 8..12 {
                for x in 8..12 {
                    labels[x + dims.0 * (y + dims.1 * z)] = MC;
                }
            }
        }
        let v = LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap();
        let profile = thickness_profile(&v, 10.0).unwrap();
        assert_eq!(profile.samples.len(), 5 * 36);
    }

    #[test]
    fn missing_mc_is_an_error() {
        let v = LabeledVolume::new((4, 4, 2), (1.0, 1.0, 1.0), vec![BG; 32]).unwrap();
        assert!(thickness_profile(&v, 10.0).is_err());
    }

    #[test]
    fn constant_profile_statistics() {
        let p = ThicknessProfile { samples: (0..8).map(|i| (0, i as f64, 5.0)).collect() };
        let feats = thickness_features(&p, "ED").unwrap();
        assert_eq!(feats.len(), 27);
        let get = |n: &str| feats.iter().find(|(k, _)| k == n).unwrap().1;
        assert_eq!(get("thk_max_ED"), 5.0);
        assert_eq!(get("thk_min_ED"), 5.0);
        assert_eq!(get("thk_mean_ED"), 5.0);
        assert_eq!(get("thk_median_ED"), 5.0);
        assert_eq!(get("thk_std_ED"), 0.0);
        assert_eq!(get("thk_var_ED"), 0.0);
        for thr in THR_MIN..=THR_MAX {
            assert_eq!(get(&format!("thk_gt{thr}_ED")), 0.0);
        }
    }

    #[test]
    fn threshold_counts_are_strict() {
        let p = ThicknessProfile {
            samples: vec![(0, 0.0, 8.0), (0, 1.0, 12.0), (0, 2.0, 25.0)],
        };
        let feats = thickness_features(&p, "ES").unwrap();
        let get = |n: &str| feats.iter().find(|(k, _)| k == n).unwrap().1;
        assert_eq!(get("thk_gt10_ES"), 2.0);
        assert_eq!(get("thk_gt12_ES"), 1.0);
        assert_eq!(get("thk_gt24_ES"), 1.0);
        assert_eq!(get("thk_gt25_ES"), 0.0);
    }

    #[test]
    fn population_variance_convention() {
        let p = ThicknessProfile { samples: vec![(0, 0.0, 4.0), (0, 1.0, 6.0)] };
        let feats = thickness_features(&p, "ED").unwrap();
        let get = |n: &str| feats.iter().find(|(k, _)| k == n).unwrap().1;
        assert_eq!(get("thk_mean_ED"), 5.0);
        assert_eq!(get("thk_var_ED"), 1.0);
    }
}
