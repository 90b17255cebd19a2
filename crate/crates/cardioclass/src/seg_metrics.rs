//! Segmentation agreement metrics: Dice coefficient and Hausdorff distance.
//!
//! Dice is computed on whole masks; Hausdorff is the symmetric maximum
//! boundary-to-boundary distance in physical millimetres, where the boundary
//! of a mask is the set of true voxels with at least one false or
//! out-of-grid 6-neighbor.
//!
//! ```
//! use cardioclass::seg_metrics::{dice, hausdorff};
//! use cardioclass::volume::BinaryMask;
//!
//! let a = BinaryMask::new((3, 1, 1), (1.0, 1.0, 1.0), vec![true, true, false]).unwrap();
//! let b = BinaryMask::new((3, 1, 1), (1.0, 1.0, 1.0), vec![false, true, true]).unwrap();
//! assert_eq!(dice(&a, &b).unwrap(), 0.5);
//! assert_eq!(hausdorff(&a, &b).unwrap(), 1.0);
//! ```

use crate::error::{Error, Result};
use crate::volume::BinaryMask;

/// Scores for one structure: Dice in [0,1] and Hausdorff in mm when defined.
#[derive(Debug, Clone, Copy)]
pub struct SegScore {
    pub dice: f64,
    pub hausdorff_mm: Option<f64>,
}

/// Dice coefficient 2|A∩B| / (|A|+|B|). Both masks empty counts as perfect
/// agreement (1.0).
pub fn dice(a: &BinaryMask, b: &BinaryMask) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::DimMismatch { a: a.dims(), b: b.dims() });
    }
    let mut inter = 0usize;
    let mut total = 0usize;
    for (&x, &y) in a.bits().iter().zip(b.bits()) {
        inter += (x && y) as usize;
        total += x as usize + y as usize;
    }
    if total == 0 {
        return Ok(1.0);
    }
    Ok(2.0 * inter as f64 / total as f64)
}

/// Physical centers of true voxels that touch the outside: at least one
/// 6-neighbor is false or beyond the grid.
pub fn boundary_points(mask: &BinaryMask) -> Vec<[f64; 3]> {
    let (nx, ny, nz) = mask.dims();
    let mut points = Vec::new();
    for (x, y, z) in mask.true_voxels() {
        let exposed = [
            (x as i64 - 1, y as i64, z as i64),
            (x as i64 + 1, y as i64, z as i64),
            (x as i64, y as i64 - 1, z as i64),
            (x as i64, y as i64 + 1, z as i64),
            (x as i64, y as i64, z as i64 - 1),
            (x as i64, y as i64, z as i64 + 1),
        ]
        .iter()
        .any(|&(px, py, pz)| {
            px < 0
                || py < 0
                || pz < 0
                || px >= nx as i64
                || py >= ny as i64
                || pz >= nz as i64
                || !mask.get(px as usize, py as usize, pz as usize)
        });
        if exposed {
            points.push(mask.physical_point(x, y, z));
        }
    }
    points
}

fn dist2(p: &[f64; 3], q: &[f64; 3]) -> f64 {
    let dx = p[0] - q[0];
    let dy = p[1] - q[1];
    let dz = p[2] - q[2];
    dx * dx + dy * dy + dz * dz
}

fn directed_hausdorff2(from: &[[f64; 3]], to: &[[f64; 3]]) -> f64 {
    let mut worst = 0.0f64;
    for p in from {
        let mut best = f64::INFINITY;
        for q in to {
            let d = dist2(p, q);
            if d < best {
                best = d;
            }
        }
        if best > worst {
            worst = best;
        }
    }
    worst
}

/// Symmetric maximum Hausdorff distance between the boundaries of two masks,
/// in millimetres. Errors when either mask is empty.
pub fn hausdorff(a: &BinaryMask, b: &BinaryMask) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::DimMismatch { a: a.dims(), b: b.dims() });
    }
    if a.is_empty() {
        return Err(Error::EmptyMask("first"));
    }
    if b.is_empty() {
        return Err(Error::EmptyMask("second"));
    }
    let pa = boundary_points(a);
    let pb = boundary_points(b);
    let d2 = directed_hausdorff2(&pa, &pb).max(directed_hausdorff2(&pb, &pa));
    Ok(d2.sqrt())
}

/// Dice and Hausdorff in one call; Hausdorff is None when either mask is
/// empty.
pub fn score(a: &BinaryMask, b: &BinaryMask) -> Result<SegScore> {
    let d = dice(a, b)?;
    let h = match hausdorff(a, b) {
        Ok(v) => Some(v),
        Err(Error::EmptyMask(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(SegScore { dice: d, hausdorff_mm: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mask(dims: (usize, usize, usize), spacing: (f64, f64, f64), truthy: &[(usize, usize, usize)]) -> BinaryMask {
        let mut bits = vec![false; dims.0 * dims.1 * dims.2];
        for &(x, y, z) in truthy {
            bits[x + dims.0 * (y + dims.1 * z)] = true;
        }
        BinaryMask::new(dims, spacing, bits).unwrap()
    }

    #[test]
    fn dice_identity_disjoint_partial() {
        let a = mask((4, 4, 4), (1.0, 1.0, 1.0), &[(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)]);
        let b = mask((4, 4, 4), (1.0, 1.0, 1.0), &[(2, 0, 0), (3, 0, 0), (0, 1, 0), (1, 1, 0)]);
        let c = mask((4, 4, 4), (1.0, 1.0, 1.0), &[(0, 3, 3), (1, 3, 3)]);
        assert_eq!(dice(&a, &a).unwrap(), 1.0);
        assert_eq!(dice(&a, &c).unwrap(), 0.0);
        assert_eq!(dice(&a, &b).unwrap(), 0.5); // |A|=4, |B|=4, |A∩B|=2
    }

    #[test]
    fn dice_of_two_empty_masks_is_one() {
        let e = mask((3, 3, 3), (1.0, 1.0, 1.0), &[]);
        assert_eq!(dice(&e, &e).unwrap(), 1.0);
        let a = mask((3, 3, 3), (1.0, 1.0, 1.0), &[(1, 1, 1)]);
        assert_eq!(dice(&e, &a).unwrap(), 0.0);
    }

    #[test]
    fn dim_mismatch_rejected() {
        let a = mask((3, 3, 3), (1.0, 1.0, 1.0), &[]);
        let b = mask((4, 3, 3), (1.0, 1.0, 1.0), &[]);
        assert!(dice(&a, &b).is_err());
        assert!(hausdorff(&a, &b).is_err());
    }

    #[test]
    fn boundary_of_solid_block_excludes_interior() {
        let mut truthy = Vec::new();
        for z in 1..4 {
            for y in 1..4 {
                for x in 1..4 {
                    truthy.push((x, y, z));
                }
            }
        }
        let m = mask((6, 6, 6), (1.0, 1.0, 1.0), &truthy);
        assert_eq!(boundary_points(&m).len(), 26); // 27 voxels minus 1 interior
        let single = mask((3, 3, 3), (1.0, 1.0, 1.0), &[(1, 1, 1)]);
        assert_eq!(boundary_points(&single), vec![[1.0, 1.0, 1.0]]);
        assert!(boundary_points(&mask((3, 3, 3), (1.0, 1.0, 1.0), &[])).is_empty());
    }

    #[test]
    fn hausdorff_basic_cases() {
        let a = mask((8, 2, 2), (1.0, 1.0, 1.0), &[(0, 0, 0)]);
        let b = mask((8, 2, 2), (1.0, 1.0, 1.0), &[(3, 0, 0)]);
        assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        assert_eq!(hausdorff(&a, &b).unwrap(), 3.0);
        let a2 = mask((8, 2, 2), (2.0, 1.0, 1.0), &[(0, 0, 0)]);
        let b2 = mask((8, 2, 2), (2.0, 1.0, 1.0), &[(3, 0, 0)]);
        assert_eq!(hausdorff(&a2, &b2).unwrap(), 6.0);
    }

    #[test]
    fn hausdorff_of_empty_mask_is_error() {
        let e = mask((3, 3, 3), (1.0, 1.0, 1.0), &[]);
        let a = mask((3, 3, 3), (1.0, 1.0, 1.0), &[(0, 0, 0)]);
        assert!(matches!(hausdorff(&e, &a), Err(Error::EmptyMask(_))));
        assert!(matches!(hausdorff(&a, &e), Err(Error::EmptyMask(_))));
    }

    /// Brute-force symmetric max Hausdorff over *all* voxel pairs of the
    /// boundaries; independent of the implementation path.
    pub(crate) fn brute_force_hausdorff(a: &BinaryMask, b: &BinaryMask) -> f64 {
        let pa = boundary_points(a);
        let pb = boundary_points(b);
        let dir = |from: &[[f64; 3]], to: &[[f64; 3]]| {
            from.iter()
                .map(|p| {
                    to.iter()
                        .map(|q| dist2(p, q).sqrt())
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max)
        };
        dir(&pa, &pb).max(dir(&pb, &pa))
    }

    proptest! {
        #[test]
        fn dice_and_hausdorff_are_symmetric(
            bits_a in proptest::collection::vec(any::<bool>(), 64),
            bits_b in proptest::collection::vec(any::<bool>(), 64),
        ) {
            let a = BinaryMask::new((4, 4, 4), (1.0, 1.5, 2.0), bits_a).unwrap();
            let b = BinaryMask::new((4, 4, 4), (1.0, 1.5, 2.0), bits_b).unwrap();
            prop_assert_eq!(dice(&a, &b).unwrap(), dice(&b, &a).unwrap());
            if !a.is_empty() && !b.is_empty() {
                let hab = hausdorff(&a, &b).unwrap();
                let hba = hausdorff(&b, &a).unwrap();
                prop_assert_eq!(hab, hba);
                prop_assert_eq!(hab, brute_force_hausdorff(&a, &b));
            }
        }

        #[test]
        fn hausdorff_scales_with_uniform_spacing(
            bits_a in proptest::collection::vec(any::<bool>(), 27),
            bits_b in proptest::collection::vec(any::<bool>(), 27),
            scale in 0.5f64..4.0,
        ) {
            let a1 = BinaryMask::new((3, 3, 3), (1.0, 1.0, 1.0), bits_a.clone()).unwrap();
            let b1 = BinaryMask::new((3, 3, 3), (1.0, 1.0, 1.0), bits_b.clone()).unwrap();
            let a2 = BinaryMask::new((3, 3, 3), (scale, scale, scale), bits_a).unwrap();
            let b2 = BinaryMask::new((3, 3, 3), (scale, scale, scale), bits_b).unwrap();
            prop_assert_eq!(dice(&a1, &b1).unwrap(), dice(&a2, &b2).unwrap());
            if !a1.is_empty() && !b1.is_empty() {
                let h1 = hausdorff(&a1, &b1).unwrap();
                let h2 = hausdorff(&a2, &b2).unwrap();
                prop_assert!((h2 - scale * h1).abs() < 1e-9 * (1.0 + h2));
            }
        }
    }
}
