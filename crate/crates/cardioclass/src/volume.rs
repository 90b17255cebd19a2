//! Labeled voxel volumes, binary masks, and the CQV1 on-disk format.
//!
//! A [`LabeledVolume`] is a dense 3D grid of anatomical label codes with
//! physical voxel spacing in millimetres. Voxels are stored x-fastest,
//! then y, then z, so `index = x + nx*(y + ny*z)`.
//!
//! Label codes are fixed: 0 background, 1 right ventricle, 2 myocardium,
//! 3 left ventricle blood pool.
//!
//! ```
//! use cardioclass::volume::{LabeledVolume, BG, LV};
//!
//! let labels = vec![
//!     BG, LV,
//!     LV, LV,
//! ];
//! let vol = LabeledVolume::new((2, 2, 1), (1.5, 1.5, 8.0), labels).unwrap();
//! let lv = vol.extract_mask(LV).unwrap();
//! assert_eq!(lv.count(), 3);
//! assert!((lv.physical_volume_mm3() - 3.0 * 1.5 * 1.5 * 8.0).abs() < 1e-12);
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const BG: u8 = 0;
pub const RV: u8 = 1;
pub const MC: u8 = 2;
pub const LV: u8 = 3;

/// The three foreground structures, in label-code order.
pub const STRUCTURES: [u8; 3] = [RV, MC, LV];

pub fn structure_name(code: u8) -> &'static str {
    match code {
        BG => "BG",
        RV => "RV",
        MC => "MC",
        LV => "LV",
        _ => "??",
    }
}

/// Dense labeled voxel grid with physical spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledVolume {
    dims: (usize, usize, usize),
    spacing: (f64, f64, f64),
    labels: Vec<u8>,
}

impl LabeledVolume {
    pub fn new(
        dims: (usize, usize, usize),
        spacing: (f64, f64, f64),
        labels: Vec<u8>,
    ) -> Result<Self> {
        let n = dims.0 * dims.1 * dims.2;
        if dims.0 == 0 || dims.1 == 0 || dims.2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "volume dims must be positive, got {dims:?}"
            )));
        }
        check_spacing(spacing)?;
        if labels.len() != n {
            return Err(Error::SizeMismatch { expected: n, actual: labels.len() });
        }
        if let Some((i, &code)) = labels.iter().enumerate().find(|(_, &c)| c > LV) {
            return Err(Error::InvalidLabel { code, index: i });
        }
        Ok(LabeledVolume { dims, spacing, labels })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn spacing(&self) -> (f64, f64, f64) {
        self.spacing
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_voxels(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.dims.0 * (y + self.dims.1 * z)
    }

    #[inline]
    pub fn label(&self, x: usize, y: usize, z: usize) -> u8 {
        self.labels[self.index(x, y, z)]
    }

    /// Binary mask of voxels carrying the given foreground structure code.
    pub fn extract_mask(&self, structure: u8) -> Result<BinaryMask> {
        if !STRUCTURES.contains(&structure) {
            return Err(Error::InvalidStructure(structure));
        }
        Ok(BinaryMask {
            dims: self.dims,
            spacing: self.spacing,
            bits: self.labels.iter().map(|&l| l == structure).collect(),
        })
    }

    /// Mask of all foreground voxels (any non-background label).
    pub fn foreground_mask(&self) -> BinaryMask {
        BinaryMask {
            dims: self.dims,
            spacing: self.spacing,
            bits: self.labels.iter().map(|&l| l != BG).collect(),
        }
    }

    /// Replace labels wholesale; dims/spacing kept. Internal helper for
    /// post-processing and phantom perturbation.
    pub(crate) fn with_labels(&self, labels: Vec<u8>) -> Result<Self> {
        LabeledVolume::new(self.dims, self.spacing, labels)
    }
}

/// One boolean per voxel, dims/spacing carried over from the source volume.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryMask {
    dims: (usize, usize, usize),
    spacing: (f64, f64, f64),
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(dims: (usize, usize, usize), spacing: (f64, f64, f64), bits: Vec<bool>) -> Result<Self> {
        let n = dims.0 * dims.1 * dims.2;
        if bits.len() != n {
            return Err(Error::SizeMismatch { expected: n, actual: bits.len() });
        }
        check_spacing(spacing)?;
        Ok(BinaryMask { dims, spacing, bits })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn spacing(&self) -> (f64, f64, f64) {
        self.spacing
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.dims.0 * (y + self.dims.1 * z)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> bool {
        self.bits[self.index(x, y, z)]
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Physical volume: true-voxel count times the voxel volume sx*sy*sz.
    pub fn physical_volume_mm3(&self) -> f64 {
        let (sx, sy, sz) = self.spacing;
        self.count() as f64 * sx * sy * sz
    }

    /// Iterator over (x, y, z) indices of true voxels, scan order.
    pub fn true_voxels(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let (nx, ny, _) = self.dims;
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(move |(i, _)| {
            let x = i % nx;
            let y = (i / nx) % ny;
            let z = i / (nx * ny);
            (x, y, z)
        })
    }

    /// Physical center of a voxel: index times spacing per axis.
    pub fn physical_point(&self, x: usize, y: usize, z: usize) -> [f64; 3] {
        let (sx, sy, sz) = self.spacing;
        [x as f64 * sx, y as f64 * sy, z as f64 * sz]
    }
}

fn check_spacing(spacing: (f64, f64, f64)) -> Result<()> {
    for s in [spacing.0, spacing.1, spacing.2] {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "spacing components must be finite and > 0, got {spacing:?}"
            )));
        }
    }
    Ok(())
}

/// One subject's ED/ES volume pair plus an optional class label.
#[derive(Debug, Clone)]
pub struct SubjectStudy {
    pub subject_id: String,
    pub ed: LabeledVolume,
    pub es: LabeledVolume,
    pub class_label: Option<usize>,
}

impl SubjectStudy {
    pub fn new(
        subject_id: impl Into<String>,
        ed: LabeledVolume,
        es: LabeledVolume,
        class_label: Option<usize>,
    ) -> Result<Self> {
        if ed.spacing() != es.spacing() {
            return Err(Error::InvalidArgument(format!(
                "ED/ES spacing mismatch: {:?} vs {:?}",
                ed.spacing(),
                es.spacing()
            )));
        }
        Ok(SubjectStudy { subject_id: subject_id.into(), ed, es, class_label })
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Cqv1Header {
    magic: String,
    dims: [usize; 3],
    spacing_mm: [f64; 3],
    labels: BTreeMap<String, u8>,
}

fn expected_label_map() -> BTreeMap<String, u8> {
    [("BG", BG), ("RV", RV), ("MC", MC), ("LV", LV)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn raw_path_for(header_path: &Path) -> PathBuf {
    header_path.with_extension("raw")
}

/// Load a CQV1 volume given the path of its JSON header; the voxel payload
/// lives in a sibling `.raw` file.
pub fn load_volume(path: &Path) -> Result<LabeledVolume> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let header: Cqv1Header = serde_json::from_str(&text).map_err(|e| Error::MalformedHeader {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    if header.magic != "CQV1" {
        return Err(Error::MalformedHeader {
            path: path.display().to_string(),
            reason: format!("bad magic '{}'", header.magic),
        });
    }
    if header.labels != expected_label_map() {
        return Err(Error::MalformedHeader {
            path: path.display().to_string(),
            reason: format!("unexpected label map {:?}", header.labels),
        });
    }
    let raw_path = raw_path_for(path);
    let payload =
        fs::read(&raw_path).map_err(|e| Error::io(raw_path.display().to_string(), e))?;
    let dims = (header.dims[0], header.dims[1], header.dims[2]);
    let n = dims.0 * dims.1 * dims.2;
    if payload.len() != n {
        return Err(Error::SizeMismatch { expected: n, actual: payload.len() });
    }
    LabeledVolume::new(
        dims,
        (header.spacing_mm[0], header.spacing_mm[1], header.spacing_mm[2]),
        payload,
    )
}

/// Save a volume as a CQV1 header + raw pair. `path` names the JSON header.
/// Both files are written atomically (temp file + rename).
pub fn save_volume(volume: &LabeledVolume, path: &Path) -> Result<()> {
    let (nx, ny, nz) = volume.dims();
    let (sx, sy, sz) = volume.spacing();
    let header = Cqv1Header {
        magic: "CQV1".to_string(),
        dims: [nx, ny, nz],
        spacing_mm: [sx, sy, sz],
        labels: expected_label_map(),
    };
    let text = serde_json::to_string_pretty(&header).map_err(|e| Error::Json {
        path: path.display().to_string(),
        source: e,
    })?;
    crate::write_atomic(path, text.as_bytes())?;
    crate::write_atomic(&raw_path_for(path), volume.labels())
}

/// One row of the study manifest CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StudyManifestRow {
    pub subject_id: String,
    pub ed_path: String,
    pub es_path: String,
    #[serde(default, deserialize_with = "csv::invalid_option")]
    pub class_label: Option<usize>,
}

/// Read a study manifest CSV (columns subject_id, ed_path, es_path,
/// class_label; label empty when unknown). Relative paths resolve against
/// the manifest's own directory.
pub fn load_manifest(path: &Path) -> Result<Vec<StudyManifestRow>> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| Error::Csv { path: path.display().to_string(), source: e })?;
    let mut rows = Vec::new();
    for record in reader.deserialize() {
        let row: StudyManifestRow = record
            .map_err(|e| Error::Csv { path: path.display().to_string(), source: e })?;
        rows.push(row);
    }
    Ok(rows)
}

/// Load every study listed in a manifest file.
pub fn load_studies(manifest_path: &Path) -> Result<Vec<SubjectStudy>> {
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let rows = load_manifest(manifest_path)?;
    let mut studies = Vec::with_capacity(rows.len());
    for row in rows {
        let resolve = |p: &str| {
            let pb = PathBuf::from(p);
            if pb.is_absolute() {
                pb
            } else {
                base.join(pb)
            }
        };
        let ed = load_volume(&resolve(&row.ed_path)).map_err(|e| Error::Subject {
            subject: row.subject_id.clone(),
            source: Box::new(e),
        })?;
        let es = load_volume(&resolve(&row.es_path)).map_err(|e| Error::Subject {
            subject: row.subject_id.clone(),
            source: Box::new(e),
        })?;
        studies.push(SubjectStudy::new(row.subject_id, ed, es, row.class_label)?);
    }
    Ok(studies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn tiny(labels: Vec<u8>) -> LabeledVolume {
        LabeledVolume::new((4, 4, 2), (1.0, 1.0, 1.0), labels).unwrap()
    }

    #[test]
    fn all_background_volume_loads() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("v.json");
        save_volume(&tiny(vec![0; 32]), &path).unwrap();
        let v = load_volume(&path).unwrap();
        assert_eq!(v.num_voxels(), 32);
        assert!(v.labels().iter().all(|&l| l == BG));
    }

    #[test]
    fn payload_size_mismatch_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("v.json");
        save_volume(&tiny(vec![0; 32]), &path).unwrap();
        std::fs::write(dir.path().join("v.raw"), vec![0u8; 31]).unwrap();
        match load_volume(&path) {
            Err(Error::SizeMismatch { expected: 32, actual: 31 }) => {}
            other => panic!("expected size mismatch, got {other:?}"),
        }
    }

    #[test]
    fn invalid_label_code_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("v.json");
        save_volume(&tiny(vec![0; 32]), &path).unwrap();
        let mut payload = vec![0u8; 32];
        payload[5] = 7;
        std::fs::write(dir.path().join("v.raw"), payload).unwrap();
        match load_volume(&path) {
            Err(Error::InvalidLabel { code: 7, index: 5 }) => {}
            other => panic!("expected invalid label, got {other:?}"),
        }
    }

    #[test]
    fn save_load_round_trip_is_identical() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("rt.json");
        let mut labels = vec![0u8; 32];
        for (i, l) in labels.iter_mut().enumerate() {
            *l = (i % 4) as u8;
        }
        let v = LabeledVolume::new((4, 4, 2), (1.25, 1.25, 8.0), labels).unwrap();
        save_volume(&v, &path).unwrap();
        assert_eq!(load_volume(&path).unwrap(), v);
    }

    #[test]
    fn extract_mask_selects_exactly_the_structure() {
        let mut labels = vec![0u8; 32];
        for (i, l) in labels.iter_mut().enumerate() {
            *l = if i % 2 == 0 { RV } else { LV };
        }
        let v = tiny(labels);
        let rv = v.extract_mask(RV).unwrap();
        assert_eq!(rv.count(), 16);
        let lv = v.extract_mask(LV).unwrap();
        assert_eq!(lv.count(), 16);
        assert!(v.extract_mask(0).is_err());
        assert!(v.extract_mask(4).is_err());
    }

    #[test]
    fn all_lv_volume_gives_all_true_mask() {
        let v = tiny(vec![LV; 32]);
        assert_eq!(v.extract_mask(LV).unwrap().count(), 32);
        assert_eq!(v.extract_mask(RV).unwrap().count(), 0);
    }

    #[test]
    fn physical_volume_uses_spacing() {
        let mut bits = vec![false; 4 * 4 * 2];
        for b in bits.iter_mut().take(10) {
            *b = true;
        }
        let m = BinaryMask::new((4, 4, 2), (1.0, 1.0, 1.0), bits.clone()).unwrap();
        assert_eq!(m.physical_volume_mm3(), 10.0);
        let m = BinaryMask::new((4, 4, 2), (1.5, 1.5, 8.0), bits).unwrap();
        assert!((m.physical_volume_mm3() - 180.0).abs() < 1e-12);
        let empty = BinaryMask::new((4, 4, 2), (1.0, 1.0, 1.0), vec![false; 32]).unwrap();
        assert_eq!(empty.physical_volume_mm3(), 0.0);
    }

    #[test]
    fn structure_masks_partition_the_volume() {
        let mut labels = vec![0u8; 32];
        for (i, l) in labels.iter_mut().enumerate() {
            *l = (i % 4) as u8;
        }
        let v = tiny(labels);
        let masks: Vec<_> = STRUCTURES.iter().map(|&s| v.extract_mask(s).unwrap()).collect();
        let bg = v.labels().iter().filter(|&&l| l == BG).count();
        let total: usize = masks.iter().map(|m| m.count()).sum();
        assert_eq!(total + bg, v.num_voxels());
        for i in 0..v.num_voxels() {
            let set = masks.iter().filter(|m| m.bits()[i]).count();
            assert!(set <= 1);
        }
    }

    #[test]
    fn mismatched_spacing_study_rejected() {
        let a = tiny(vec![0; 32]);
        let b = LabeledVolume::new((4, 4, 2), (2.0, 2.0, 2.0), vec![0; 32]).unwrap();
        assert!(SubjectStudy::new("s1", a, b, None).is_err());
    }
}
