//! Volumetric features: structure volumes, volume ratios, ejection fractions.

use crate::error::{Error, Result};
use crate::volume::SubjectStudy;

/// Ejection fraction (EDV - ESV) / EDV. EDV must be positive; a pathological
/// ESV > EDV is allowed and yields a negative EF.
pub fn ejection_fraction(edv_mm3: f64, esv_mm3: f64) -> Result<f64> {
    if edv_mm3 <= 0.0 {
        return Err(Error::DegenerateStructure {
            feature: "ejection_fraction".to_string(),
            reason: format!("end-diastolic volume must be > 0, got {edv_mm3}"),
        });
    }
    Ok((edv_mm3 - esv_mm3) / edv_mm3)
}

/// The six structure volumes of a study in mm^3, keyed (structure, phase).
#[derive(Debug, Clone, Copy)]
pub struct StructureVolumes {
    pub lv_ed: f64,
    pub lv_es: f64,
    pub rv_ed: f64,
    pub rv_es: f64,
    pub mc_ed: f64,
    pub mc_es: f64,
}

pub fn structure_volumes(study: &SubjectStudy) -> Result<StructureVolumes> {
    let vol = |v: &crate::volume::LabeledVolume, s: u8| -> Result<f64> {
        Ok(v.extract_mask(s)?.physical_volume_mm3())
    };
    use crate::volume::{LV, MC, RV};
    Ok(StructureVolumes {
        lv_ed: vol(&study.ed, LV)?,
        lv_es: vol(&study.es, LV)?,
        rv_ed: vol(&study.ed, RV)?,
        rv_es: vol(&study.es, RV)?,
        mc_ed: vol(&study.ed, MC)?,
        mc_es: vol(&study.es, MC)?,
    })
}

fn ratio(num: f64, den: f64, feature: &str) -> Result<f64> {
    if den <= 0.0 {
        return Err(Error::DegenerateStructure {
            feature: feature.to_string(),
            reason: "denominator structure has zero volume".to_string(),
        });
    }
    Ok(num / den)
}

/// The 12 volumetric features in default-manifest order.
pub fn volumetric_features(study: &SubjectStudy) -> Result<Vec<(String, f64)>> {
    let v = structure_volumes(study)?;
    let ef_lv = ejection_fraction(v.lv_ed, v.lv_es).map_err(|_| Error::DegenerateStructure {
        feature: "ef_LV".to_string(),
        reason: "LV end-diastolic volume is zero".to_string(),
    })?;
    let ef_rv = ejection_fraction(v.rv_ed, v.rv_es).map_err(|_| Error::DegenerateStructure {
        feature: "ef_RV".to_string(),
        reason: "RV end-diastolic volume is zero".to_string(),
    })?;
    Ok(vec![
        ("vol_LV_ED".to_string(), v.lv_ed),
        ("vol_LV_ES".to_string(), v.lv_es),
        ("vol_RV_ED".to_string(), v.rv_ed),
        ("vol_RV_ES".to_string(), v.rv_es),
        ("vol_MC_ED".to_string(), v.mc_ed),
        ("vol_MC_ES".to_string(), v.mc_es),
        ("ratio_RV_LV_ED".to_string(), ratio(v.rv_ed, v.lv_ed, "ratio_RV_LV_ED")?),
        ("ratio_RV_LV_ES".to_string(), ratio(v.rv_es, v.lv_es, "ratio_RV_LV_ES")?),
        ("ratio_MC_LV_ED".to_string(), ratio(v.mc_ed, v.lv_ed, "ratio_MC_LV_ED")?),
        ("ratio_MC_LV_ES".to_string(), ratio(v.mc_es, v.lv_es, "ratio_MC_LV_ES")?),
        ("ef_LV".to_string(), ef_lv),
        ("ef_RV".to_string(), ef_rv),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::{LabeledVolume, SubjectStudy, LV, MC, RV};

    #[test]
    fn ef_cases() {
        assert_eq!(ejection_fraction(100.0, 100.0).unwrap(), 0.0);
        assert_eq!(ejection_fraction(100.0, 40.0).unwrap(), 0.6);
        assert_eq!(ejection_fraction(100.0, 0.0).unwrap(), 1.0);
        assert!(ejection_fraction(0.0, 0.0).is_err());
        // pathological esv > edv gives negative EF
        assert_eq!(ejection_fraction(100.0, 120.0).unwrap(), -0.2);
    }

    fn study_with_counts(lv_ed: usize, lv_es: usize) -> SubjectStudy {
        let dims = (10, 10, 4);
        let n = 400;
        let fill = |lv: usize| {
            let mut labels = vec![0u8; n];
            for l in labels.iter_mut().take(lv) {
                *l = LV;
            }
            for l in labels.iter_mut().skip(lv).take(60) {
                *l = RV;
            }
            for l in labels.iter_mut().skip(lv + 60).take(50) {
                *l = MC;
            }
            LabeledVolume::new(dims, (1.0, 1.0, 1.0), labels).unwrap()
        };
        SubjectStudy::new("t", fill(lv_ed), fill(lv_es), None).unwrap()
    }

    #[test]
    fn volumetric_values_from_voxel_counts() {
        let study = study_with_counts(100, 40);
        let feats = volumetric_features(&study).unwrap();
        let get = |n: &str| feats.iter().find(|(k, _)| k == n).unwrap().1;
        assert_eq!(get("vol_LV_ED"), 100.0);
        assert_eq!(get("vol_LV_ES"), 40.0);
        assert_eq!(get("ef_LV"), 0.6);
        assert!((get("ratio_RV_LV_ED") - 0.6).abs() < 1e-12);
        assert!((get("ratio_MC_LV_ED") - 0.5).abs() < 1e-12);
    }

    #[test]
    fn identical_phases_give_zero_ef_and_equal_ratios() {
        let study = study_with_counts(100, 100);
        let feats = volumetric_features(&study).unwrap();
        let get = |n: &str| feats.iter().find(|(k, _)| k == n).unwrap().1;
        assert_eq!(get("ef_LV"), 0.0);
        assert_eq!(get("ef_RV"), 0.0);
        assert_eq!(get("ratio_RV_LV_ED"), get("ratio_RV_LV_ES"));
    }

    #[test]
    fn zero_lv_names_the_feature() {
        let study = study_with_counts(0, 0);
        match volumetric_features(&study) {
            Err(Error::DegenerateStructure { feature, .. }) => {
                assert!(feature.contains("LV"), "got {feature}");
            }
            other => panic!("expected degenerate error, got {other:?}"),
        }
    }
}
