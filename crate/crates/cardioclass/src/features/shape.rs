//! Shape features of a binary structure mask: triangulated surface area,
//! sphericity family, maximum diameters, and principal axis lengths.

use crate::error::{Error, Result};
use crate::seg_metrics::boundary_points;
use crate::volume::BinaryMask;

use super::mc_tables::TRIANGLE_TABLE;

/// Eigenvalues (mm^2, descending) of the physical-coordinate covariance of
/// a mask's true voxels, population convention.
#[derive(Debug, Clone, Copy)]
pub struct PrincipalAxes {
    pub lambda_major: f64,
    pub lambda_minor: f64,
    pub lambda_least: f64,
}

/// Corner offsets of a marching-cubes cell, matching the edge numbering of
/// the triangle table.
const CORNER_OFFSETS: [(i64, i64, i64); 8] = [
    (0, 0, 0),
    (1, 0, 0),
    (1, 1, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 0, 1),
    (1, 1, 1),
    (0, 1, 1),
];

const EDGE_CONNECTIONS: [(usize, usize); 12] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 0),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 4),
    (0, 4),
    (1, 5),
    (2, 6),
    (3, 7),
];

/// Triangulated iso-surface area at level 0.5 of the binary field, in mm^2.
///
/// Field samples sit at voxel centers (1 inside, 0 outside) with a one-voxel
/// zero margin, so closed surfaces are produced even when the mask touches
/// the grid edge. With binary samples every surface vertex lands on an edge
/// midpoint.
pub fn surface_area_mm2(mask: &BinaryMask) -> Result<f64> {
    if mask.is_empty() {
        return Err(Error::DegenerateStructure {
            feature: "surface_area".to_string(),
            reason: "empty mask".to_string(),
        });
    }
    let (nx, ny, nz) = mask.dims();
    let (sx, sy, sz) = mask.spacing();
    let sample = |x: i64, y: i64, z: i64| -> bool {
        x >= 0
            && y >= 0
            && z >= 0
            && x < nx as i64
            && y < ny as i64
            && z < nz as i64
            && mask.get(x as usize, y as usize, z as usize)
    };

    let mut area = 0.0f64;
    // cells span sample positions -1..nx etc.
    for cz in -1..nz as i64 {
        for cy in -1..ny as i64 {
            for cx in -1..nx as i64 {
                let mut case = 0usize;
                let mut inside = [false; 8];
                for (i, &(ox, oy, oz)) in CORNER_OFFSETS.iter().enumerate() {
                    inside[i] = sample(cx + ox, cy + oy, cz + oz);
                    if !inside[i] {
                        // below iso level
                        case |= 1 << i;
                    }
                }
                if case == 0 || case == 255 {
                    continue;
                }
                let vertex = |edge: usize| -> [f64; 3] {
                    let (a, b) = EDGE_CONNECTIONS[edge];
                    let (ax, ay, az) = CORNER_OFFSETS[a];
                    let (bx, by, bz) = CORNER_OFFSETS[b];
                    [
                        (cx as f64 + 0.5 * (ax + bx) as f64) * sx,
                        (cy as f64 + 0.5 * (ay + by) as f64) * sy,
                        (cz as f64 + 0.5 * (az + bz) as f64) * sz,
                    ]
                };
                let row = &TRIANGLE_TABLE[case];
                let mut i = 0;
                while row[i] >= 0 {
                    let p0 = vertex(row[i] as usize);
                    let p1 = vertex(row[i + 1] as usize);
                    let p2 = vertex(row[i + 2] as usize);
                    area += triangle_area(&p0, &p1, &p2);
                    i += 3;
                }
            }
        }
    }
    Ok(area)
}

fn triangle_area(p0: &[f64; 3], p1: &[f64; 3], p2: &[f64; 3]) -> f64 {
    let u = [p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]];
    let v = [p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]];
    let c = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    0.5 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
}

/// Max pairwise Euclidean distances in mm: full 3D, then restricted to
/// voxel pairs sharing a slice (z), column (x), and row (y).
///
/// Extreme pairs always lie on the mask boundary, so only boundary voxels
/// enter the pairwise scans.
pub fn max_diameters(mask: &BinaryMask) -> Result<(f64, f64, f64, f64)> {
    if mask.is_empty() {
        return Err(Error::DegenerateStructure {
            feature: "max_diameter".to_string(),
            reason: "empty mask".to_string(),
        });
    }
    let (sx, sy, sz) = mask.spacing();
    let voxels: Vec<(usize, usize, usize)> = {
        let set: std::collections::HashSet<_> = boundary_points(mask)
            .iter()
            .map(|p| {
                (
                    (p[0] / sx).round() as usize,
                    (p[1] / sy).round() as usize,
                    (p[2] / sz).round() as usize,
                )
            })
            .collect();
        let mut v: Vec<_> = set.into_iter().collect();
        v.sort_unstable();
        v
    };
    let mut d3 = 0.0f64;
    let mut d_slice = 0.0f64;
    let mut d_col = 0.0f64;
    let mut d_row = 0.0f64;
    for i in 0..voxels.len() {
        let (xi, yi, zi) = voxels[i];
        for &(xj, yj, zj) in &voxels[i + 1..] {
            let dx = (xi as f64 - xj as f64) * sx;
            let dy = (yi as f64 - yj as f64) * sy;
            let dz = (zi as f64 - zj as f64) * sz;
            let d2 = dx * dx + dy * dy + dz * dz;
            if d2 > d3 {
                d3 = d2;
            }
            if zi == zj && d2 > d_slice {
                d_slice = d2;
            }
            if xi == xj && d2 > d_col {
                d_col = d2;
            }
            if yi == yj && d2 > d_row {
                d_row = d2;
            }
        }
    }
    Ok((d3.sqrt(), d_slice.sqrt(), d_col.sqrt(), d_row.sqrt()))
}

/// Covariance eigenvalues of true-voxel physical coordinates plus the
/// derived axis lengths 4*sqrt(lambda).
pub fn principal_axis_lengths(mask: &BinaryMask) -> Result<(PrincipalAxes, (f64, f64, f64))> {
    if mask.count() < 2 {
        return Err(Error::DegenerateStructure {
            feature: "principal_axes".to_string(),
            reason: "mask must have at least 2 voxels".to_string(),
        });
    }
    let pts: Vec<[f64; 3]> = mask.true_voxels().map(|(x, y, z)| mask.physical_point(x, y, z)).collect();
    let n = pts.len() as f64;
    let mut mean = [0.0f64; 3];
    for p in &pts {
        for k in 0..3 {
            mean[k] += p[k];
        }
    }
    for m in &mut mean {
        *m /= n;
    }
    // symmetric covariance, population convention
    let mut cov = [[0.0f64; 3]; 3];
    for p in &pts {
        let d = [p[0] - mean[0], p[1] - mean[1], p[2] - mean[2]];
        for i in 0..3 {
            for j in i..3 {
                cov[i][j] += d[i] * d[j];
            }
        }
    }
    for i in 0..3 {
        for j in i..3 {
            cov[i][j] /= n;
            cov[j][i] = cov[i][j];
        }
    }
    let mut eig = sym3_eigenvalues(&cov);
    eig.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let eig: Vec<f64> = eig.iter().map(|&l| l.max(0.0)).collect();
    let axes = PrincipalAxes {
        lambda_major: eig[0],
        lambda_minor: eig[1],
        lambda_least: eig[2],
    };
    let lengths = (4.0 * eig[0].sqrt(), 4.0 * eig[1].sqrt(), 4.0 * eig[2].sqrt());
    Ok((axes, lengths))
}

/// Closed-form eigenvalues of a symmetric 3x3 matrix (trigonometric method).
fn sym3_eigenvalues(a: &[[f64; 3]; 3]) -> [f64; 3] {
    let p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if p1 == 0.0 {
        return [a[0][0], a[1][1], a[2][2]];
    }
    let q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    let p2 = (a[0][0] - q).powi(2) + (a[1][1] - q).powi(2) + (a[2][2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let mut b = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            b[i][j] = (a[i][j] - if i == j { q } else { 0.0 }) / p;
        }
    }
    let detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (detb / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let e2 = 3.0 * q - e1 - e3;
    [e1, e2, e3]
}

/// Everything the shape feature group needs for one (structure, phase).
#[derive(Debug, Clone, Copy)]
pub struct ShapeStats {
    pub volume_mm3: f64,
    pub area_mm2: f64,
    pub area_to_volume: f64,
    pub sphericity: f64,
    pub compactness1: f64,
    pub compactness2: f64,
    pub spherical_disproportion: f64,
    pub max_diam_3d: f64,
    pub max_diam_slice: f64,
    pub max_diam_col: f64,
    pub max_diam_row: f64,
    pub major_axis: f64,
    pub minor_axis: f64,
    pub least_axis: f64,
    pub elongation: f64,
    pub flatness: f64,
}

pub fn shape_stats(mask: &BinaryMask) -> Result<ShapeStats> {
    let volume = mask.physical_volume_mm3();
    let area = surface_area_mm2(mask)?;
    let (d3, ds, dc, dr) = max_diameters(mask)?;
    let (axes, (major, minor, least)) = principal_axis_lengths(mask)?;

    let pi = std::f64::consts::PI;
    let sphericity = pi.powf(1.0 / 3.0) * (6.0 * volume).powf(2.0 / 3.0) / area;
    let compactness1 = volume / (pi.sqrt() * area.powf(1.5));
    let compactness2 = 36.0 * pi * volume * volume / area.powi(3);
    let equiv_radius = (3.0 * volume / (4.0 * pi)).powf(1.0 / 3.0);
    let spherical_disproportion = area / (4.0 * pi * equiv_radius * equiv_radius);

    let elongation = if axes.lambda_major > 0.0 {
        (axes.lambda_minor / axes.lambda_major).sqrt()
    } else {
        0.0
    };
    let flatness = if axes.lambda_major > 0.0 {
        (axes.lambda_least / axes.lambda_major).sqrt()
    } else {
        0.0
    };

    Ok(ShapeStats {
        volume_mm3: volume,
        area_mm2: area,
        area_to_volume: area / volume,
        sphericity,
        compactness1,
        compactness2,
        spherical_disproportion,
        max_diam_3d: d3,
        max_diam_slice: ds,
        max_diam_col: dc,
        max_diam_row: dr,
        major_axis: major,
        minor_axis: minor,
        least_axis: least,
        elongation,
        flatness,
    })
}

/// The 15 shape features for one mask, named with the given structure/phase
/// suffix, in default-manifest order.
pub fn shape_features(mask: &BinaryMask, suffix: &str) -> Result<Vec<(String, f64)>> {
    let s = shape_stats(mask)?;
    Ok(named_shape_features(&s, suffix))
}

pub fn named_shape_features(s: &ShapeStats, suffix: &str) -> Vec<(String, f64)> {
    vec![
        (format!("area_{suffix}"), s.area_mm2),
        (format!("area_to_volume_{suffix}"), s.area_to_volume),
        (format!("sphericity_{suffix}"), s.sphericity),
        (format!("compactness1_{suffix}"), s.compactness1),
        (format!("compactness2_{suffix}"), s.compactness2),
        (format!("spherical_disproportion_{suffix}"), s.spherical_disproportion),
        (format!("max_diam_3d_{suffix}"), s.max_diam_3d),
        (format!("max_diam_slice_{suffix}"), s.max_diam_slice),
        (format!("max_diam_col_{suffix}"), s.max_diam_col),
        (format!("max_diam_row_{suffix}"), s.max_diam_row),
        (format!("major_axis_{suffix}"), s.major_axis),
        (format!("minor_axis_{suffix}"), s.minor_axis),
        (format!("least_axis_{suffix}"), s.least_axis),
        (format!("elongation_{suffix}"), s.elongation),
        (format!("flatness_{suffix}"), s.flatness),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn mask_from_pred<F: Fn(usize, usize, usize) -> bool>(
        dims: (usize, usize, usize),
        spacing: (f64, f64, f64),
        pred: F,
    ) -> BinaryMask {
        let mut bits = vec![false; dims.0 * dims.1 * dims.2];
        for z in 0..dims.2 {
            for y in 0..dims.1 {
                for x in 0..dims.0 {
                    bits[x + dims.0 * (y + dims.1 * z)] = pred(x, y, z);
                }
            }
        }
        BinaryMask::new(dims, spacing, bits).unwrap()
    }

    fn digital_sphere(r: f64, spacing: f64) -> BinaryMask {
        let n = (2.0 * r / spacing) as usize + 5;
        let c = (n as f64 - 1.0) / 2.0;
        mask_from_pred((n, n, n), (spacing, spacing, spacing), |x, y, z| {
            let dx = (x as f64 - c) * spacing;
            let dy = (y as f64 - c) * spacing;
            let dz = (z as f64 - c) * spacing;
            dx * dx + dy * dy + dz * dz <= r * r
        })
    }

    #[test]
    fn single_voxel_surface_area_pinned() {
        let m = mask_from_pred((3, 3, 3), (1.0, 1.0, 1.0), |x, y, z| (x, y, z) == (1, 1, 1));
        let a = surface_area_mm2(&m).unwrap();
        // octahedron with vertices at the six half-voxel midpoints:
        // 8 triangles, each sqrt(3)/8
        assert!((a - 3.0f64.sqrt()).abs() < 1e-12, "got {a}");
    }

    #[test]
    fn sphere_surface_area_near_analytic() {
        let m = digital_sphere(20.0, 1.0);
        let a = surface_area_mm2(&m).unwrap();
        let exact = 4.0 * std::f64::consts::PI * 400.0;
        assert!((a - exact).abs() / exact < 0.10, "area {a} vs {exact}");
    }

    #[test]
    fn area_scales_quadratically_with_spacing() {
        let pred = |x: usize, y: usize, z: usize| (1..=3).contains(&x) && (1..=2).contains(&y) && z == 1;
        let m1 = mask_from_pred((5, 5, 3), (1.0, 1.0, 1.0), pred);
        let m2 = mask_from_pred((5, 5, 3), (2.0, 2.0, 2.0), pred);
        let a1 = surface_area_mm2(&m1).unwrap();
        let a2 = surface_area_mm2(&m2).unwrap();
        assert!((a2 - 4.0 * a1).abs() < 1e-9);
    }

    #[test]
    fn max_diameter_cases() {
        let single = mask_from_pred((3, 3, 3), (1.0, 1.0, 1.0), |x, y, z| (x, y, z) == (1, 1, 1));
        assert_eq!(max_diameters(&single).unwrap(), (0.0, 0.0, 0.0, 0.0));

        let two = mask_from_pred((2, 2, 5), (1.0, 1.0, 2.0), |x, y, z| {
            x == 0 && y == 0 && (z == 0 || z == 4)
        });
        let (d3, ds, dc, dr) = max_diameters(&two).unwrap();
        assert_eq!(d3, 8.0);
        assert_eq!(ds, 0.0);
        assert_eq!(dc, 8.0);
        assert_eq!(dr, 8.0);

        let cube = mask_from_pred((10, 10, 10), (1.0, 1.0, 1.0), |_, _, _| true);
        let (d3, _, _, _) = max_diameters(&cube).unwrap();
        assert!((d3 - 9.0 * 3.0f64.sqrt()).abs() < 1e-12);

        let tri = mask_from_pred((5, 5, 1), (1.0, 1.0, 1.0), |x, y, _| {
            (x, y) == (0, 0) || (x, y) == (3, 4)
        });
        assert_eq!(max_diameters(&tri).unwrap().0, 5.0);
    }

    #[test]
    fn collinear_voxels_axis_length() {
        let m = mask_from_pred((100, 1, 1), (1.0, 1.0, 1.0), |_, _, _| true);
        let (axes, (major, minor, least)) = principal_axis_lengths(&m).unwrap();
        // population variance of 0..99
        let var = (0..100).map(|i| (i as f64 - 49.5).powi(2)).sum::<f64>() / 100.0;
        assert!((axes.lambda_major - var).abs() < 1e-9);
        assert!(axes.lambda_minor.abs() < 1e-12);
        assert!(axes.lambda_least.abs() < 1e-12);
        assert!((major - 4.0 * var.sqrt()).abs() < 1e-9);
        assert_eq!(minor, 0.0);
        assert_eq!(least, 0.0);
    }

    #[test]
    fn cube_is_isotropic() {
        let m = mask_from_pred((8, 8, 8), (1.0, 1.0, 1.0), |_, _, _| true);
        let s = shape_stats(&m).unwrap();
        assert!((s.elongation - 1.0).abs() < 1e-9);
        assert!((s.flatness - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ellipsoid_axis_lengths_near_continuous() {
        // solid ellipsoid with semi-axes (20, 10, 5) voxels
        let dims = (45, 25, 15);
        let c = (22.0, 12.0, 7.0);
        let m = mask_from_pred(dims, (1.0, 1.0, 1.0), |x, y, z| {
            let dx = (x as f64 - c.0) / 20.0;
            let dy = (y as f64 - c.1) / 10.0;
            let dz = (z as f64 - c.2) / 5.0;
            dx * dx + dy * dy + dz * dz <= 1.0
        });
        let (_, (major, minor, least)) = principal_axis_lengths(&m).unwrap();
        // continuous solid ellipsoid eigenvalue is a^2/5, so 4*sqrt gives 4a/sqrt(5)
        let expect = |a: f64| 4.0 * a / 5.0f64.sqrt();
        assert!((major - expect(20.0)).abs() / expect(20.0) < 0.03, "major {major}");
        assert!((minor - expect(10.0)).abs() / expect(10.0) < 0.03, "minor {minor}");
        assert!((least - expect(5.0)).abs() / expect(5.0) < 0.05, "least {least}");
    }

    #[test]
    fn sphere_sphericity_and_disproportion() {
        let m = digital_sphere(20.0, 1.0);
        let s = shape_stats(&m).unwrap();
        assert!(s.sphericity >= 0.90 && s.sphericity <= 1.05, "sphericity {}", s.sphericity);
        assert!(
            s.spherical_disproportion >= 0.95 && s.spherical_disproportion <= 1.10,
            "disproportion {}",
            s.spherical_disproportion
        );
        assert!((s.sphericity * s.spherical_disproportion - 1.0).abs() < 1e-9);
    }

    /// Brute-force O(n^2) diameter scan over *all* true voxels.
    fn brute_force_diameters(m: &BinaryMask) -> (f64, f64, f64, f64) {
        let (sx, sy, sz) = m.spacing();
        let vox: Vec<_> = m.true_voxels().collect();
        let mut out = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for i in 0..vox.len() {
            for j in i..vox.len() {
                let (xi, yi, zi) = vox[i];
                let (xj, yj, zj) = vox[j];
                let dx = (xi as f64 - xj as f64) * sx;
                let dy = (yi as f64 - yj as f64) * sy;
                let dz = (zi as f64 - zj as f64) * sz;
                let d = (dx * dx + dy * dy + dz * dz).sqrt();
                out.0 = out.0.max(d);
                if zi == zj {
                    out.1 = out.1.max(d);
                }
                if xi == xj {
                    out.2 = out.2.max(d);
                }
                if yi == yj {
                    out.3 = out.3.max(d);
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn diameters_match_brute_force(bits in proptest::collection::vec(any::<bool>(), 8 * 8 * 8)) {
            prop_assume!(bits.iter().any(|&b| b));
            let m = BinaryMask::new((8, 8, 8), (1.0, 1.5, 2.0), bits).unwrap();
            let got = max_diameters(&m).unwrap();
            let want = brute_force_diameters(&m);
            prop_assert!((got.0 - want.0).abs() < 1e-12);
            prop_assert!((got.1 - want.1).abs() < 1e-12);
            prop_assert!((got.2 - want.2).abs() < 1e-12);
            prop_assert!((got.3 - want.3).abs() < 1e-12);
            prop_assert!(got.0 >= got.1.max(got.2).max(got.3) - 1e-12);
        }

        #[test]
        fn sphericity_times_disproportion_is_one(bits in proptest::collection::vec(any::<bool>(), 5 * 5 * 5)) {
            prop_assume!(bits.iter().filter(|&&b| b).count() >= 2);
            let m = BinaryMask::new((5, 5, 5), (1.0, 1.0, 2.0), bits).unwrap();
            let s = shape_stats(&m).unwrap();
            prop_assert!((s.sphericity * s.spherical_disproportion - 1.0).abs() < 1e-9);
            prop_assert!(s.flatness <= s.elongation + 1e-12);
            prop_assert!(s.elongation <= 1.0 + 1e-12);
        }
    }
}
