//! Synthetic labeled heart phantoms with class-dependent geometry.
//!
//! Each phantom is a stack of slices holding an LV disk inside an MC
//! annulus with an adjacent RV crescent. The ES volume reuses the ED
//! geometry with per-structure contraction applied, so ejection fractions
//! and wall thicknesses are known by construction. Five default classes
//! mimic a cohort of healthy subjects plus four dysfunction groups, each
//! separated by a different feature group.
//!
//! ```
//! use cardioclass::phantom::{generate_cohort, NUM_CLASSES};
//!
//! let cohort = generate_cohort(2, 42).unwrap();
//! assert_eq!(cohort.len(), 2 * NUM_CLASSES);
//! assert_eq!(cohort[0].class_label, Some(0));
//! let again = generate_cohort(2, 42).unwrap();
//! assert_eq!(cohort[0].ed, again[0].ed);
//! ```

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::volume::{LabeledVolume, SubjectStudy, BG, LV, MC, RV};

pub const NUM_CLASSES: usize = 5;

pub const CLASS_NAMES: [&str; NUM_CLASSES] =
    ["normal", "dilated_lv", "hypertrophic", "infarct_like", "abnormal_rv"];

/// Inclusive parameter range sampled uniformly per subject.
#[derive(Debug, Clone, Copy)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl Range {
    fn sample(&self, rng: &mut impl Rng) -> f64 {
        if self.hi <= self.lo {
            self.lo
        } else {
            rng.gen_range(self.lo..self.hi)
        }
    }
}

/// Geometry recipe for one phantom subject.
#[derive(Debug, Clone)]
pub struct PhantomSpec {
    pub class_id: usize,
    pub dims: (usize, usize, usize),
    pub spacing: (f64, f64, f64),
    pub seed: u64,
    /// LV blood-pool radius at ED, mm.
    pub lv_radius_mm: Range,
    /// Myocardial wall thickness at ED, mm.
    pub mc_thickness_mm: Range,
    /// RV disk radius at ED, mm.
    pub rv_radius_mm: Range,
    /// Target LV ejection fraction; ES radius is scaled by sqrt(1 - EF).
    pub lv_ef: Range,
    /// Target RV ejection fraction.
    pub rv_ef: Range,
}

impl PhantomSpec {
    /// Default recipe for one of the five classes.
    pub fn for_class(class_id: usize, seed: u64) -> Result<Self> {
        let r = |lo: f64, hi: f64| Range { lo, hi };
        let (lv_radius, mc_thickness, rv_radius, lv_ef, rv_ef) = match class_id {
            // normal: EF around 0.6, modest sizes
            0 => (r(16.0, 20.0), r(6.0, 8.0), r(11.0, 15.0), r(0.56, 0.65), r(0.50, 0.60)),
            // dilated LV: large cavity, low EF
            1 => (r(25.0, 29.0), r(5.0, 7.0), r(12.0, 16.0), r(0.16, 0.24), r(0.40, 0.50)),
            // hypertrophic: wall thicker than 15 mm, normal function
            2 => (r(12.5, 15.5), r(15.5, 18.5), r(11.0, 15.0), r(0.55, 0.65), r(0.50, 0.60)),
            // infarct-like: normal size, reduced LV EF
            3 => (r(17.0, 21.0), r(6.0, 8.0), r(11.0, 15.0), r(0.28, 0.36), r(0.45, 0.55)),
            // abnormal RV: enlarged RV with poor RV function
            4 => (r(16.0, 20.0), r(6.0, 8.0), r(18.0, 22.0), r(0.54, 0.62), r(0.14, 0.22)),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "class_id {class_id} out of range 0..{NUM_CLASSES}"
                )))
            }
        };
        Ok(PhantomSpec {
            class_id,
            dims: (64, 64, 10),
            spacing: (2.0, 2.0, 8.0),
            seed,
            lv_radius_mm: lv_radius,
            mc_thickness_mm: mc_thickness,
            rv_radius_mm: rv_radius,
            lv_ef,
            rv_ef,
        })
    }
}

struct SliceGeometry {
    center: (f64, f64),
    lv_radius: f64,
    mc_outer: f64,
    rv_center: (f64, f64),
    rv_radius: f64,
}

fn rasterize(
    dims: (usize, usize, usize),
    spacing: (f64, f64, f64),
    slices: std::ops::Range<usize>,
    geom: &SliceGeometry,
) -> Result<LabeledVolume> {
    let (nx, ny, nz) = dims;
    let (sx, sy, _) = spacing;
    let max_extent = geom.mc_outer.max(
        ((geom.rv_center.0 - geom.center.0).powi(2) + (geom.rv_center.1 - geom.center.1).powi(2))
            .sqrt()
            + geom.rv_radius,
    );
    let half = 0.5 * (nx.min(ny) as f64 - 2.0) * sx.min(sy);
    if max_extent >= half {
        return Err(Error::InvalidArgument(format!(
            "phantom geometry (extent {max_extent:.1} mm) exceeds volume bounds ({half:.1} mm)"
        )));
    }
    let mut labels = vec![BG; nx * ny * nz];
    for z in slices {
        for y in 0..ny {
            for x in 0..nx {
                let px = x as f64 * sx;
                let py = y as f64 * sy;
                let r = ((px - geom.center.0).powi(2) + (py - geom.center.1).powi(2)).sqrt();
                let label = if r < geom.lv_radius {
                    LV
                } else if r < geom.mc_outer {
                    MC
                } else {
                    let rr = ((px - geom.rv_center.0).powi(2) + (py - geom.rv_center.1).powi(2))
                        .sqrt();
                    if rr < geom.rv_radius {
                        RV
                    } else {
                        BG
                    }
                };
                labels[x + nx * (y + ny * z)] = label;
            }
        }
    }
    LabeledVolume::new(dims, spacing, labels)
}

/// Generate one subject: ED and ES volumes plus the class label.
pub fn generate_phantom(spec: &PhantomSpec) -> Result<SubjectStudy> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (spec.class_id as u64));
    let (nx, ny, nz) = spec.dims;
    let (sx, sy, _) = spec.spacing;

    let lv_r = spec.lv_radius_mm.sample(&mut rng);
    let wall = spec.mc_thickness_mm.sample(&mut rng);
    let rv_r = spec.rv_radius_mm.sample(&mut rng);
    let ef_lv = spec.lv_ef.sample(&mut rng);
    let ef_rv = spec.rv_ef.sample(&mut rng);

    let cx = 0.5 * (nx as f64 - 1.0) * sx + rng.gen_range(-3.0..3.0);
    let cy = 0.5 * (ny as f64 - 1.0) * sy + rng.gen_range(-3.0..3.0);
    let mc_outer = lv_r + wall;
    // RV disk sits just outside the annulus; clipping against the annulus
    // leaves a crescent.
    let rv_offset = mc_outer + 0.55 * rv_r;
    let ed_geom = SliceGeometry {
        center: (cx, cy),
        lv_radius: lv_r,
        mc_outer,
        rv_center: (cx + rv_offset, cy),
        rv_radius: rv_r,
    };
    // In-slice geometry is constant over slices, so volume scales with the
    // disk area and the ES radius shrinks by sqrt(1 - EF).
    let lv_r_es = lv_r * (1.0 - ef_lv).sqrt();
    let rv_r_es = rv_r * (1.0 - ef_rv).sqrt();
    let es_geom = SliceGeometry {
        center: (cx, cy),
        lv_radius: lv_r_es,
        mc_outer, // outer wall fixed; the wall thickens as the cavity shrinks
        rv_center: (cx + rv_offset, cy),
        rv_radius: rv_r_es,
    };

    let heart_slices = 1..nz - 1;
    let ed = rasterize(spec.dims, spec.spacing, heart_slices.clone(), &ed_geom)?;
    let es = rasterize(spec.dims, spec.spacing, heart_slices, &es_geom)?;
    SubjectStudy::new(
        format!("phantom_c{}_s{}", spec.class_id, spec.seed),
        ed,
        es,
        Some(spec.class_id),
    )
}

/// Generate a cohort: `per_class` subjects for each of the five classes,
/// subject seeds derived from the root seed.
pub fn generate_cohort(per_class: usize, root_seed: u64) -> Result<Vec<SubjectStudy>> {
    let mut studies = Vec::with_capacity(per_class * NUM_CLASSES);
    for class_id in 0..NUM_CLASSES {
        for i in 0..per_class {
            let seed = root_seed
                .wrapping_add((class_id * 1_000_003) as u64)
                .wrapping_add(i as u64);
            let spec = PhantomSpec::for_class(class_id, seed)?;
            studies.push(generate_phantom(&spec)?);
        }
    }
    Ok(studies)
}

/// Emulate segmentation error: jitter structure boundaries and inject small
/// disconnected foreground blobs. Deterministic given the seed.
pub fn perturb_segmentation(
    volume: &LabeledVolume,
    boundary_noise_voxels: usize,
    spurious_blob_rate: f64,
    seed: u64,
) -> LabeledVolume {
    if boundary_noise_voxels == 0 && spurious_blob_rate == 0.0 {
        return volume.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (nx, ny, nz) = volume.dims();
    let mut labels = volume.labels().to_vec();
    let idx = |x: usize, y: usize, z: usize| x + nx * (y + ny * z);

    for _round in 0..boundary_noise_voxels {
        let snapshot = labels.clone();
        for z in 0..nz {
            for y in 0..ny {
                for x in 0..nx {
                    let l = snapshot[idx(x, y, z)];
                    if l == BG {
                        continue;
                    }
                    // in-plane 4-neighborhood; through-plane edits would be
                    // huge at 8 mm slice spacing
                    let neighbors = [
                        (x.wrapping_sub(1), y),
                        (x + 1, y),
                        (x, y.wrapping_sub(1)),
                        (x, y + 1),
                    ];
                    let exposed: Vec<(usize, usize)> = neighbors
                        .iter()
                        .copied()
                        .filter(|&(px, py)| {
                            px < nx && py < ny && snapshot[idx(px, py, z)] != l
                        })
                        .collect();
                    if exposed.is_empty() {
                        continue;
                    }
                    let roll: f64 = rng.gen();
                    if roll < 0.22 {
                        // erode: drop this voxel to its most exposed neighbor's label
                        let (px, py) = exposed[rng.gen_range(0..exposed.len())];
                        labels[idx(x, y, z)] = snapshot[idx(px, py, z)];
                    } else if roll < 0.44 {
                        // dilate: claim one exposed neighbor
                        let (px, py) = exposed[rng.gen_range(0..exposed.len())];
                        labels[idx(px, py, z)] = l;
                    }
                }
            }
        }
    }

    // spurious blobs: rate is the expected count per volume
    let mut n_blobs = spurious_blob_rate.floor() as usize;
    if rng.gen::<f64>() < spurious_blob_rate.fract() {
        n_blobs += 1;
    }
    let mut placed = 0usize;
    let mut attempts = 0usize;
    while placed < n_blobs && attempts < 1000 {
        attempts += 1;
        let bx = rng.gen_range(2..nx.saturating_sub(2));
        let by = rng.gen_range(2..ny.saturating_sub(2));
        let bz = rng.gen_range(0..nz);
        // only drop a blob where a comfortable margin of background exists,
        // so it stays disconnected from the heart
        let mut clear = true;
        'check: for dz in -1i64..=1 {
            for dy in -3i64..=3 {
                for dx in -3i64..=3 {
                    let (px, py, pz) =
                        (bx as i64 + dx, by as i64 + dy, bz as i64 + dz);
                    if px < 0 || py < 0 || pz < 0 || px >= nx as i64 || py >= ny as i64 || pz >= nz as i64 {
                        continue;
                    }
                    if labels[idx(px as usize, py as usize, pz as usize)] != BG {
                        clear = false;
                        break 'check;
                    }
                }
            }
        }
        if !clear {
            continue;
        }
        let blob_label = [RV, MC, LV][rng.gen_range(0..3)];
        for (dx, dy) in [(0i64, 0i64), (1, 0), (-1, 0), (0, 1), (0, -1)] {
            let px = (bx as i64 + dx) as usize;
            let py = (by as i64 + dy) as usize;
            labels[idx(px, py, bz)] = blob_label;
        }
        placed += 1;
    }

    volume.with_labels(labels).expect("perturbed labels stay valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::{assemble_features, FeatureManifest};
    use crate::postprocess::{connected_components, keep_largest_component, Connectivity};
    use crate::seg_metrics::dice;
    use crate::volume::STRUCTURES;

    #[test]
    fn same_spec_and_seed_reproduces_the_study() {
        let spec = PhantomSpec::for_class(3, 77).unwrap();
        let a = generate_phantom(&spec).unwrap();
        let b = generate_phantom(&spec).unwrap();
        assert_eq!(a.ed, b.ed);
        assert_eq!(a.es, b.es);
    }

    #[test]
    fn normal_class_lv_ef_in_physiologic_range() {
        for seed in 0..10 {
            let study = generate_phantom(&PhantomSpec::for_class(0, seed).unwrap()).unwrap();
            let edv = study.ed.extract_mask(LV).unwrap().physical_volume_mm3();
            let esv = study.es.extract_mask(LV).unwrap().physical_volume_mm3();
            let ef = (edv - esv) / edv;
            assert!((0.5..=0.7).contains(&ef), "seed {seed}: EF {ef}");
        }
    }

    #[test]
    fn hypertrophic_class_exceeds_thickness_threshold() {
        let study = generate_phantom(&PhantomSpec::for_class(2, 5).unwrap()).unwrap();
        let manifest = FeatureManifest::default_manifest();
        let f = assemble_features(&study, &manifest).unwrap();
        assert!(f.get("thk_gt15_ED").unwrap() > 0.0);
    }

    #[test]
    fn dilated_class_ef_below_normal_class_ef() {
        let mean_ef = |class: usize| {
            let mut sum = 0.0;
            for seed in 0..20 {
                let s = generate_phantom(&PhantomSpec::for_class(class, seed).unwrap()).unwrap();
                let edv = s.ed.extract_mask(LV).unwrap().physical_volume_mm3();
                let esv = s.es.extract_mask(LV).unwrap().physical_volume_mm3();
                sum += (edv - esv) / edv;
            }
            sum / 20.0
        };
        let normal = mean_ef(0);
        let dilated = mean_ef(1);
        assert!(normal - dilated > 0.15, "normal {normal} dilated {dilated}");
    }

    #[test]
    fn perturb_with_zero_parameters_is_identity() {
        let study = generate_phantom(&PhantomSpec::for_class(1, 9).unwrap()).unwrap();
        assert_eq!(perturb_segmentation(&study.ed, 0, 0.0, 1), study.ed);
    }

    #[test]
    fn noise_one_keeps_dice_high_per_structure() {
        let study = generate_phantom(&PhantomSpec::for_class(0, 11).unwrap()).unwrap();
        let noisy = perturb_segmentation(&study.ed, 1, 0.0, 3);
        for s in STRUCTURES {
            let d = dice(
                &study.ed.extract_mask(s).unwrap(),
                &noisy.extract_mask(s).unwrap(),
            )
            .unwrap();
            assert!(d >= 0.85, "structure {s}: dice {d}");
        }
    }

    #[test]
    fn postprocess_removes_injected_blobs() {
        let study = generate_phantom(&PhantomSpec::for_class(4, 13).unwrap()).unwrap();
        let noisy = perturb_segmentation(&study.ed, 1, 3.0, 8);
        let comps_before =
            connected_components(&noisy.foreground_mask(), Connectivity::TwentySix);
        assert!(comps_before.num_components() > 1, "blobs should be injected");
        let cleaned = keep_largest_component(&noisy, Connectivity::TwentySix);
        let comps_after =
            connected_components(&cleaned.foreground_mask(), Connectivity::TwentySix);
        assert_eq!(comps_after.num_components(), 1);
        // cleaning recovers agreement lost to the blobs
        let fg = study.ed.foreground_mask();
        let d_noisy = dice(&fg, &noisy.foreground_mask()).unwrap();
        let d_clean = dice(&fg, &cleaned.foreground_mask()).unwrap();
        assert!(d_clean >= d_noisy);
    }
}
