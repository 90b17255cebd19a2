//! Connected-component filtering of segmentations.
//!
//! Predicted segmentations sometimes contain spurious blobs far from the
//! heart. [`keep_largest_component`] computes connected components over the
//! union of all foreground labels and zeroes every voxel outside the single
//! largest component.
//!
//! ```
//! use cardioclass::postprocess::{connected_components, keep_largest_component, Connectivity};
//! use cardioclass::volume::{LabeledVolume, BG, LV};
//!
//! let labels = vec![
//!     LV, BG, BG,
//!     BG, LV, LV,
//! ];
//! let vol = LabeledVolume::new((3, 2, 1), (1.0, 1.0, 1.0), labels).unwrap();
//! let parts = connected_components(&vol.foreground_mask(), Connectivity::Six);
//! assert_eq!(parts.num_components(), 2);
//! let cleaned = keep_largest_component(&vol, Connectivity::Six);
//! assert_eq!(cleaned.foreground_mask().count(), 2);
//! ```

use crate::error::{Error, Result};
use crate::volume::{BinaryMask, LabeledVolume, BG};

/// Voxel adjacency: faces only, or faces + edges + corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Six,
    TwentySix,
}

impl Connectivity {
    pub fn from_u8(v: u8) -> Result<Self> {
        match v {
            6 => Ok(Connectivity::Six),
            26 => Ok(Connectivity::TwentySix),
            _ => Err(Error::InvalidArgument(format!("connectivity must be 6 or 26, got {v}"))),
        }
    }

    fn offsets(self) -> Vec<(i64, i64, i64)> {
        match self {
            Connectivity::Six => vec![
                (1, 0, 0),
                (-1, 0, 0),
                (0, 1, 0),
                (0, -1, 0),
                (0, 0, 1),
                (0, 0, -1),
            ],
            Connectivity::TwentySix => {
                let mut out = Vec::with_capacity(26);
                for dz in -1..=1i64 {
                    for dy in -1..=1i64 {
                        for dx in -1..=1i64 {
                            if (dx, dy, dz) != (0, 0, 0) {
                                out.push((dx, dy, dz));
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

/// Per-voxel component ids (0 = background) plus per-component voxel counts.
#[derive(Debug, Clone)]
pub struct ComponentLabeling {
    pub component_id: Vec<u32>,
    pub component_sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn num_components(&self) -> usize {
        self.component_sizes.len()
    }

    /// Id of the largest component; size ties break toward the smaller id
    /// (first encountered in scan order). None when there is no foreground.
    pub fn largest(&self) -> Option<u32> {
        self.component_sizes
            .iter()
            .enumerate()
            .max_by(|(ia, sa), (ib, sb)| sa.cmp(sb).then(ib.cmp(ia)))
            .map(|(i, _)| i as u32 + 1)
    }
}

/// Label connected components of a binary mask by BFS flood fill.
/// Component ids are assigned 1..C in scan order of their first voxel.
pub fn connected_components(mask: &BinaryMask, connectivity: Connectivity) -> ComponentLabeling {
    let (nx, ny, nz) = mask.dims();
    let offsets = connectivity.offsets();
    let mut ids = vec![0u32; nx * ny * nz];
    let mut sizes = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    for z in 0..nz {
        for y in 0..ny {
            for x in 0..nx {
                let seed = mask.index(x, y, z);
                if !mask.bits()[seed] || ids[seed] != 0 {
                    continue;
                }
                let id = sizes.len() as u32 + 1;
                let mut size = 0usize;
                ids[seed] = id;
                queue.push_back((x as i64, y as i64, z as i64));
                while let Some((cx, cy, cz)) = queue.pop_front() {
                    size += 1;
                    for &(dx, dy, dz) in &offsets {
                        let (px, py, pz) = (cx + dx, cy + dy, cz + dz);
                        if px < 0
                            || py < 0
                            || pz < 0
                            || px >= nx as i64
                            || py >= ny as i64
                            || pz >= nz as i64
                        {
                            continue;
                        }
                        let idx = mask.index(px as usize, py as usize, pz as usize);
                        if mask.bits()[idx] && ids[idx] == 0 {
                            ids[idx] = id;
                            queue.push_back((px, py, pz));
                        }
                    }
                }
                sizes.push(size);
            }
        }
    }
    ComponentLabeling { component_id: ids, component_sizes: sizes }
}

/// Zero every voxel outside the largest connected foreground component.
/// Components are computed on the union of all foreground labels, so the
/// heart (RV + MC + LV) survives as one object. Labels inside the kept
/// component are untouched.
pub fn keep_largest_component(
    volume: &LabeledVolume,
    connectivity: Connectivity,
) -> LabeledVolume {
    let fg = volume.foreground_mask();
    let labeling = connected_components(&fg, connectivity);
    let Some(keep) = labeling.largest() else {
        return volume.clone();
    };
    let labels = volume
        .labels()
        .iter()
        .zip(&labeling.component_id)
        .map(|(&l, &id)| if id == keep { l } else { BG })
        .collect();
    // with_labels cannot fail: same length, codes only mapped toward BG
    volume.with_labels(labels).expect("filtered labels stay valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::{BinaryMask, LabeledVolume, LV, MC, RV};

    fn mask_from(dims: (usize, usize, usize), truthy: &[(usize, usize, usize)]) -> BinaryMask {
        let mut bits = vec![false; dims.0 * dims.1 * dims.2];
        for &(x, y, z) in truthy {
            bits[x + dims.0 * (y + dims.1 * z)] = true;
        }
        BinaryMask::new(dims, (1.0, 1.0, 1.0), bits).unwrap()
    }

    #[test]
    fn empty_mask_has_no_components() {
        let m = mask_from((4, 4, 4), &[]);
        let c = connected_components(&m, Connectivity::TwentySix);
        assert_eq!(c.num_components(), 0);
        assert!(c.largest().is_none());
    }

    #[test]
    fn solid_block_is_one_component() {
        let mut voxels = Vec::new();
        for z in 0..2 {
            for y in 0..2 {
                for x in 0..2 {
                    voxels.push((x, y, z));
                }
            }
        }
        let m = mask_from((4, 4, 4), &voxels);
        let c = connected_components(&m, Connectivity::Six);
        assert_eq!(c.num_components(), 1);
        assert_eq!(c.component_sizes, vec![8]);
    }

    #[test]
    fn separated_blocks_give_two_components() {
        let mut voxels = Vec::new();
        // 10-voxel block near origin
        for z in 0..1 {
            for y in 0..2 {
                for x in 0..5 {
                    voxels.push((x, y, z));
                }
            }
        }
        // 5-voxel line far away
        for x in 0..5 {
            voxels.push((x, 7, 7));
        }
        let m = mask_from((8, 8, 8), &voxels);
        let c = connected_components(&m, Connectivity::TwentySix);
        assert_eq!(c.num_components(), 2);
        let mut sizes = c.component_sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![5, 10]);
        assert_eq!(
            c.component_sizes.iter().sum::<usize>(),
            m.count()
        );
    }

    #[test]
    fn diagonal_voxels_connect_only_under_26() {
        let m = mask_from((4, 4, 4), &[(0, 0, 0), (1, 1, 1)]);
        assert_eq!(connected_components(&m, Connectivity::Six).num_components(), 2);
        assert_eq!(connected_components(&m, Connectivity::TwentySix).num_components(), 1);
    }

    fn volume_with_blobs() -> LabeledVolume {
        let dims = (12, 12, 6);
        let mut labels = vec![0u8; dims.0 * dims.1 * dims.2];
        let idx = |x: usize, y: usize, z: usize| x + dims.0 * (y + dims.1 * z);
        // big "heart": mixed labels, 0..5 cube in z 0..4
        for z in 0..4 {
            for y in 0..5 {
                for x in 0..5 {
                    labels[idx(x, y, z)] = [RV, MC, LV][(x + y + z) % 3];
                }
            }
        }
        // spurious blob of 8
        for z in 4..6 {
            for y in 10..12 {
                for x in 10..12 {
                    labels[idx(x, y, z)] = LV;
                }
            }
        }
        LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap()
    }

    #[test]
    fn largest_component_survives_with_labels_intact() {
        let v = volume_with_blobs();
        let out = keep_largest_component(&v, Connectivity::TwentySix);
        let fg_in = v.foreground_mask();
        let biggest = connected_components(&fg_in, Connectivity::TwentySix)
            .component_sizes
            .into_iter()
            .max()
            .unwrap();
        assert_eq!(out.foreground_mask().count(), biggest);
        // surviving voxels keep their original labels
        for i in 0..v.num_voxels() {
            let (a, b) = (v.labels()[i], out.labels()[i]);
            assert!(b == a || b == 0);
        }
    }

    #[test]
    fn idempotent() {
        let v = volume_with_blobs();
        let once = keep_largest_component(&v, Connectivity::TwentySix);
        let twice = keep_largest_component(&once, Connectivity::TwentySix);
        assert_eq!(once, twice);
    }

    #[test]
    fn identity_on_single_component_and_all_background() {
        let dims = (4, 4, 4);
        let mut labels = vec![0u8; 64];
        labels[0] = LV;
        labels[1] = MC;
        let v = LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap();
        assert_eq!(keep_largest_component(&v, Connectivity::Six), v);

        let bg = LabeledVolume::new(dims, (1.0, 1.0, 1.0), vec![0; 64]).unwrap();
        assert_eq!(keep_largest_component(&bg, Connectivity::TwentySix), bg);
    }
}
