//! The 125 handcrafted features: 12 volumetric, 54 thickness (27 per
//! cardiac phase), and 59 shape.
//!
//! Shape features cover LV and RV at both phases: the full 15 for LV-ED,
//! LV-ES, and RV-ED, and 14 for RV-ES (its surface-area-to-volume ratio is
//! dropped to land on the 125 total). The composition is configurable
//! through [`FeatureManifest`].
//!
//! ```
//! use cardioclass::features::{FeatureManifest, assemble_features};
//! use cardioclass::phantom::{PhantomSpec, generate_phantom};
//!
//! let study = generate_phantom(&PhantomSpec::for_class(0, 7).unwrap()).unwrap();
//! let manifest = FeatureManifest::default_manifest();
//! let features = assemble_features(&study, &manifest).unwrap();
//! assert_eq!(features.len(), 125);
//! assert!(features.get("vol_LV_ED").unwrap() > 0.0);
//! ```

mod mc_tables;
pub mod shape;
pub mod thickness;
pub mod volumetric;

pub use shape::{
    max_diameters, principal_axis_lengths, shape_features, shape_stats, surface_area_mm2,
    PrincipalAxes, ShapeStats,
};
pub use thickness::{thickness_features, thickness_profile, ThicknessProfile};
pub use volumetric::{ejection_fraction, structure_volumes, volumetric_features};

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::volume::SubjectStudy;

/// Default angular step for thickness ray casting, degrees.
pub const DEFAULT_ANGULAR_STEP_DEG: f64 = 1.0;

/// Named feature values, names unique and aligned with values.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub names: Vec<String>,
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.names.iter().position(|n| n == name).map(|i| self.values[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureGroup {
    Volumetric,
    Thickness,
    Shape,
}

/// One manifest row: which feature, from which structure and phase.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub group: FeatureGroup,
    /// "LV", "RV", "MC", or a ratio like "RV/LV"; empty for phase-spanning
    /// features such as EF (where `structure` still names the ventricle).
    pub structure: String,
    /// "ED", "ES", or empty when the feature spans both phases.
    pub phase: String,
    /// Group-specific selector, e.g. "volume", "ratio", "ef", "mean",
    /// "gt:17", "sphericity".
    pub params: String,
}

/// Ordered list of features to extract.
#[derive(Debug, Clone)]
pub struct FeatureManifest {
    pub entries: Vec<ManifestEntry>,
}

const SHAPE_KINDS: [&str; 15] = [
    "area",
    "area_to_volume",
    "sphericity",
    "compactness1",
    "compactness2",
    "spherical_disproportion",
    "max_diam_3d",
    "max_diam_slice",
    "max_diam_col",
    "max_diam_row",
    "major_axis",
    "minor_axis",
    "least_axis",
    "elongation",
    "flatness",
];

impl FeatureManifest {
    /// The default 125-feature manifest.
    pub fn default_manifest() -> Self {
        let mut entries = Vec::with_capacity(125);
        let vol = |name: &str, structure: &str, phase: &str, params: &str| ManifestEntry {
            name: name.to_string(),
            group: FeatureGroup::Volumetric,
            structure: structure.to_string(),
            phase: phase.to_string(),
            params: params.to_string(),
        };
        for s in ["LV", "RV", "MC"] {
            for p in ["ED", "ES"] {
                entries.push(vol(&format!("vol_{s}_{p}"), s, p, "volume"));
            }
        }
        for r in ["RV/LV", "MC/LV"] {
            for p in ["ED", "ES"] {
                let tag = r.replace('/', "_");
                entries.push(vol(&format!("ratio_{tag}_{p}"), r, p, "ratio"));
            }
        }
        entries.push(vol("ef_LV", "LV", "", "ef"));
        entries.push(vol("ef_RV", "RV", "", "ef"));

        for p in ["ED", "ES"] {
            for kind in ["max", "min", "mean", "median", "std", "var"] {
                entries.push(ManifestEntry {
                    name: format!("thk_{kind}_{p}"),
                    group: FeatureGroup::Thickness,
                    structure: "MC".to_string(),
                    phase: p.to_string(),
                    params: kind.to_string(),
                });
            }
            for thr in thickness::THR_MIN..=thickness::THR_MAX {
                entries.push(ManifestEntry {
                    name: format!("thk_gt{thr}_{p}"),
                    group: FeatureGroup::Thickness,
                    structure: "MC".to_string(),
                    phase: p.to_string(),
                    params: format!("gt:{thr}"),
                });
            }
        }

        for (s, p) in [("LV", "ED"), ("LV", "ES"), ("RV", "ED"), ("RV", "ES")] {
            for kind in SHAPE_KINDS {
                if s == "RV" && p == "ES" && kind == "area_to_volume" {
                    continue; // dropped to land on 125
                }
                entries.push(ManifestEntry {
                    name: format!("{kind}_{s}_{p}"),
                    group: FeatureGroup::Shape,
                    structure: s.to_string(),
                    phase: p.to_string(),
                    params: kind.to_string(),
                });
            }
        }
        debug_assert_eq!(entries.len(), 125);
        FeatureManifest { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    /// Column indices of the volumetric group.
    pub fn volumetric_columns(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.group == FeatureGroup::Volumetric)
            .map(|(i, _)| i)
            .collect()
    }

    /// Column indices of the pooled thickness + shape groups.
    pub fn thickness_shape_columns(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.group != FeatureGroup::Volumetric)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn load_csv(path: &Path) -> Result<Self> {
        let mut reader = csv::Reader::from_path(path)
            .map_err(|e| Error::Csv { path: path.display().to_string(), source: e })?;
        let mut entries = Vec::new();
        for record in reader.deserialize() {
            let entry: ManifestEntry = record
                .map_err(|e| Error::Csv { path: path.display().to_string(), source: e })?;
            entries.push(entry);
        }
        let manifest = FeatureManifest { entries };
        let mut seen = std::collections::HashSet::new();
        for e in &manifest.entries {
            if !seen.insert(&e.name) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate feature name '{}' in manifest",
                    e.name
                )));
            }
        }
        Ok(manifest)
    }

    pub fn save_csv(&self, path: &Path) -> Result<()> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            writer
                .serialize(e)
                .map_err(|err| Error::Csv { path: path.display().to_string(), source: err })?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::InvalidArgument(format!("csv flush failed: {e}")))?;
        crate::write_atomic(path, &bytes)
    }
}

fn structure_code(name: &str) -> Result<u8> {
    match name {
        "RV" => Ok(crate::volume::RV),
        "MC" => Ok(crate::volume::MC),
        "LV" => Ok(crate::volume::LV),
        _ => Err(Error::InvalidArgument(format!("unknown structure '{name}'"))),
    }
}

/// Extract every feature named by the manifest, in manifest order.
/// Each sub-extractor runs at most once per (group, structure, phase).
pub fn assemble_features(study: &SubjectStudy, manifest: &FeatureManifest) -> Result<FeatureVector> {
    let mut cache: HashMap<String, f64> = HashMap::new();

    let needs_volumetric =
        manifest.entries.iter().any(|e| e.group == FeatureGroup::Volumetric);
    if needs_volumetric {
        for (name, value) in volumetric_features(study)? {
            cache.insert(name, value);
        }
    }

    for phase in ["ED", "ES"] {
        if manifest
            .entries
            .iter()
            .any(|e| e.group == FeatureGroup::Thickness && e.phase == phase)
        {
            let vol = if phase == "ED" { &study.ed } else { &study.es };
            let profile = thickness_profile(vol, DEFAULT_ANGULAR_STEP_DEG).map_err(|e| {
                Error::FeatureFailed {
                    feature: format!("thickness_{phase}"),
                    source: Box::new(e),
                }
            })?;
            for (name, value) in thickness_features(&profile, phase)? {
                cache.insert(name, value);
            }
        }
    }

    let mut shape_pairs: Vec<(String, String)> = Vec::new();
    for e in &manifest.entries {
        if e.group == FeatureGroup::Shape {
            let key = (e.structure.clone(), e.phase.clone());
            if !shape_pairs.contains(&key) {
                shape_pairs.push(key);
            }
        }
    }
    for (structure, phase) in shape_pairs {
        let vol = if phase == "ED" { &study.ed } else { &study.es };
        let mask = vol.extract_mask(structure_code(&structure)?)?;
        let suffix = format!("{structure}_{phase}");
        let stats = shape_stats(&mask).map_err(|e| Error::FeatureFailed {
            feature: format!("shape_{suffix}"),
            source: Box::new(e),
        })?;
        for (name, value) in shape::named_shape_features(&stats, &suffix) {
            cache.insert(name, value);
        }
    }

    let mut names = Vec::with_capacity(manifest.len());
    let mut values = Vec::with_capacity(manifest.len());
    for e in &manifest.entries {
        let v = *cache.get(&e.name).ok_or_else(|| {
            Error::InvalidArgument(format!("manifest names unknown feature '{}'", e.name))
        })?;
        if !v.is_finite() {
            return Err(Error::DegenerateStructure {
                feature: e.name.clone(),
                reason: format!("non-finite value {v}"),
            });
        }
        names.push(e.name.clone());
        values.push(v);
    }
    Ok(FeatureVector { names, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phantom::{generate_phantom, PhantomSpec};
    use tempfile::tempdir;

    #[test]
    fn default_manifest_counts() {
        let m = FeatureManifest::default_manifest();
        assert_eq!(m.len(), 125);
        let count = |g: FeatureGroup| m.entries.iter().filter(|e| e.group == g).count();
        assert_eq!(count(FeatureGroup::Volumetric), 12);
        assert_eq!(count(FeatureGroup::Thickness), 54);
        assert_eq!(count(FeatureGroup::Shape), 59);
        assert_eq!(m.volumetric_columns().len(), 12);
        assert_eq!(m.thickness_shape_columns().len(), 113);
        // names unique
        let set: std::collections::HashSet<_> = m.names().into_iter().collect();
        assert_eq!(set.len(), 125);
    }

    #[test]
    fn manifest_csv_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("manifest.csv");
        let m = FeatureManifest::default_manifest();
        m.save_csv(&path).unwrap();
        let loaded = FeatureManifest::load_csv(&path).unwrap();
        assert_eq!(loaded.len(), 125);
        assert_eq!(loaded.names(), m.names());
    }

    #[test]
    fn phantom_yields_125_finite_features_deterministically() {
        let spec = PhantomSpec::for_class(0, 1).unwrap();
        let study = generate_phantom(&spec).unwrap();
        let manifest = FeatureManifest::default_manifest();
        let a = assemble_features(&study, &manifest).unwrap();
        assert_eq!(a.len(), 125);
        assert!(a.values.iter().all(|v| v.is_finite()));
        let b = assemble_features(&study, &manifest).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_rv_names_an_rv_feature() {
        let spec = PhantomSpec::for_class(0, 2).unwrap();
        let mut study = generate_phantom(&spec).unwrap();
        // erase RV from ES
        let labels: Vec<u8> = study
            .es
            .labels()
            .iter()
            .map(|&l| if l == crate::volume::RV { 0 } else { l })
            .collect();
        study.es = crate::volume::LabeledVolume::new(study.es.dims(), study.es.spacing(), labels)
            .unwrap();
        let manifest = FeatureManifest::default_manifest();
        let err = assemble_features(&study, &manifest).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("RV"), "error should name an RV feature: {msg}");
    }
}
