//! Command-line front end for the cardiac classification pipeline.
//!
//! Subcommands mirror the pipeline stages: generate phantom cohorts,
//! post-process segmentations, score them against references, extract
//! feature tables, select features, train and apply the ensemble, run
//! cross-validation, or drive the whole pipeline from a JSON config.
//!
//! Exit codes: 0 success, 1 usage error, 2 malformed data, 3 convergence
//! failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use cardioclass::classifiers::{
    train_ensemble, EnsembleConfig, MlpConfig, SvmConfig, TrainedEnsemble,
};
use cardioclass::error::{Error, Result};
use cardioclass::evaluation::{run_repeated_cv, CvConfig};
use cardioclass::features::{assemble_features, FeatureManifest};
use cardioclass::phantom::{generate_cohort, perturb_segmentation, NUM_CLASSES};
use cardioclass::postprocess::{keep_largest_component, Connectivity};
use cardioclass::seg_metrics::score;
use cardioclass::selection::{two_stage_select, RandomizedOptions, SelectionMethod, TwoStageConfig};
use cardioclass::volume::{
    load_studies, load_volume, save_volume, structure_name, SubjectStudy, STRUCTURES,
};
use cardioclass::write_atomic;

#[derive(Parser)]
#[command(name = "cardioclass", version, about = "Cardiac cine-MR segmentation classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic phantom cohort as CQV1 volumes plus a manifest.
    Phantom {
        #[arg(long)]
        out_dir: PathBuf,
        /// Subjects per class (5 classes).
        #[arg(long, default_value_t = 10)]
        per_class: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Boundary-noise rounds applied to every saved volume.
        #[arg(long, default_value_t = 0)]
        noise: usize,
        /// Expected spurious-blob count per volume.
        #[arg(long, default_value_t = 0.0)]
        blob_rate: f64,
    },
    /// Keep only the largest connected foreground component of a volume.
    Postprocess {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Foreground connectivity: 6 or 26.
        #[arg(long, default_value_t = 6)]
        connectivity: u8,
    },
    /// Per-structure Dice and Hausdorff scores of a test segmentation
    /// against a reference.
    EvaluateSeg {
        #[arg(long)]
        reference: PathBuf,
        #[arg(long)]
        test: PathBuf,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extract the 125-column feature table for every study in a manifest.
    Extract {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Two-stage feature selection on a feature table; writes a JSON report.
    Select {
        #[arg(long)]
        features: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value = "lasso")]
        method: String,
        #[arg(long, default_value_t = 0.1)]
        lambda_rel: f64,
        #[arg(long, default_value_t = 100)]
        resamples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Train the ensemble on a feature table (optionally restricted to a
    /// selection report's features); writes the model as JSON.
    Train {
        #[arg(long)]
        features: PathBuf,
        #[arg(long)]
        selection: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.2)]
        nu: f64,
    },
    /// Apply a trained model to a feature table; writes predictions CSV.
    Classify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        features: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Stratified cross-validation with selection nested in each fold.
    Cv {
        #[arg(long)]
        features: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 8)]
        folds: usize,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Select once on the full cohort before splitting (non-nested).
        #[arg(long)]
        frozen_selection: bool,
        #[arg(long, default_value = "lasso")]
        method: String,
        #[arg(long, default_value_t = 0.1)]
        lambda_rel: f64,
        #[arg(long, default_value_t = 0.2)]
        nu: f64,
    },
    /// Run phantom generation, extraction, and cross-validation end to end
    /// from a JSON config.
    Pipeline {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Feature table: one row per subject, `subject_id` first, the feature
/// columns, and a trailing (possibly empty) `class_label`.
struct Dataset {
    ids: Vec<String>,
    names: Vec<String>,
    x: Vec<Vec<f64>>,
    labels: Vec<Option<usize>>,
}

impl Dataset {
    fn require_labels(&self) -> Result<Vec<usize>> {
        self.labels
            .iter()
            .zip(&self.ids)
            .map(|(l, id)| {
                l.ok_or_else(|| {
                    Error::InvalidArgument(format!("subject {id} has no class label"))
                })
            })
            .collect()
    }

    /// Column indices of the volumetric block vs the thickness+shape block,
    /// recognized by feature name prefix.
    fn column_split(&self) -> (Vec<usize>, Vec<usize>) {
        let mut vol = Vec::new();
        let mut ts = Vec::new();
        for (j, name) in self.names.iter().enumerate() {
            if name.starts_with("vol_") || name.starts_with("ratio_") || name.starts_with("ef_") {
                vol.push(j);
            } else {
                ts.push(j);
            }
        }
        (vol, ts)
    }
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    Error::Csv { path: path.display().to_string(), source: e }
}

fn json_error(path: &Path, e: serde_json::Error) -> Error {
    Error::Json { path: path.display().to_string(), source: e }
}

fn load_dataset(path: &Path) -> Result<Dataset> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    let headers = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    if headers.len() < 3 || &headers[0] != "subject_id" || &headers[headers.len() - 1] != "class_label" {
        return Err(Error::InvalidArgument(format!(
            "{}: expected columns subject_id, <features...>, class_label",
            path.display()
        )));
    }
    let names: Vec<String> = headers.iter().skip(1).take(headers.len() - 2).map(String::from).collect();
    let mut ids = Vec::new();
    let mut x = Vec::new();
    let mut labels = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        if record.len() != headers.len() {
            return Err(Error::SizeMismatch { expected: headers.len(), actual: record.len() });
        }
        ids.push(record[0].to_string());
        let row: Vec<f64> = record
            .iter()
            .skip(1)
            .take(names.len())
            .map(|v| {
                v.parse::<f64>().map_err(|_| {
                    Error::InvalidArgument(format!("non-numeric feature value '{v}'"))
                })
            })
            .collect::<Result<_>>()?;
        x.push(row);
        let label_text = &record[record.len() - 1];
        labels.push(if label_text.is_empty() {
            None
        } else {
            Some(label_text.parse::<usize>().map_err(|_| {
                Error::InvalidArgument(format!("bad class label '{label_text}'"))
            })?)
        });
    }
    if x.is_empty() {
        return Err(Error::InvalidArgument(format!("{}: no data rows", path.display())));
    }
    Ok(Dataset { ids, names, x, labels })
}

fn save_dataset(path: &Path, ds: &Dataset) -> Result<()> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["subject_id".to_string()];
    header.extend(ds.names.iter().cloned());
    header.push("class_label".to_string());
    writer.write_record(&header).map_err(|e| csv_error(path, e))?;
    for i in 0..ds.ids.len() {
        let mut record = vec![ds.ids[i].clone()];
        record.extend(ds.x[i].iter().map(|v| format!("{v}")));
        record.push(ds.labels[i].map(|l| l.to_string()).unwrap_or_default());
        writer.write_record(&record).map_err(|e| csv_error(path, e))?;
    }
    let bytes = writer.into_inner().map_err(|e| {
        Error::InvalidArgument(format!("csv buffer error: {e}"))
    })?;
    write_atomic(path, &bytes)
}

fn parse_method(method: &str, lambda_rel: f64, resamples: usize, seed: u64) -> Result<SelectionMethod> {
    match method {
        "lasso" => Ok(SelectionMethod::Lasso { lambda_rel }),
        "logistic" => Ok(SelectionMethod::L1Logistic { lambda_rel }),
        "randomized" => Ok(SelectionMethod::Randomized {
            lambda_rel_grid: vec![lambda_rel / 2.0, lambda_rel, lambda_rel * 2.0],
            options: RandomizedOptions { n_resamples: resamples, seed, ..Default::default() },
        }),
        other => Err(Error::InvalidArgument(format!(
            "unknown selection method '{other}' (expected lasso, logistic, or randomized)"
        ))),
    }
}

fn extract_dataset(studies: &[SubjectStudy]) -> Result<Dataset> {
    let manifest = FeatureManifest::default_manifest();
    let mut ids = Vec::new();
    let mut x = Vec::new();
    let mut labels = Vec::new();
    let mut names = Vec::new();
    for study in studies {
        let fv = assemble_features(study, &manifest)?;
        if names.is_empty() {
            names = fv.names.clone();
        }
        ids.push(study.subject_id.clone());
        x.push(fv.values);
        labels.push(study.class_label);
    }
    Ok(Dataset { ids, names, x, labels })
}

fn cmd_phantom(
    out_dir: &Path,
    per_class: usize,
    seed: u64,
    noise: usize,
    blob_rate: f64,
) -> Result<()> {
    std::fs::create_dir_all(out_dir)
        .map_err(|e| Error::io(out_dir.display().to_string(), e))?;
    let studies = generate_cohort(per_class, seed)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["subject_id", "ed_path", "es_path", "class_label"])
        .map_err(|e| csv_error(out_dir, e))?;
    for (i, study) in studies.iter().enumerate() {
        let perturb = |v: &cardioclass::volume::LabeledVolume, which: u64| {
            if noise > 0 || blob_rate > 0.0 {
                perturb_segmentation(v, noise, blob_rate, seed ^ (i as u64 * 2 + which))
            } else {
                v.clone()
            }
        };
        let ed_name = format!("{}_ed.json", study.subject_id);
        let es_name = format!("{}_es.json", study.subject_id);
        save_volume(&perturb(&study.ed, 0), &out_dir.join(&ed_name))?;
        save_volume(&perturb(&study.es, 1), &out_dir.join(&es_name))?;
        writer
            .write_record([
                study.subject_id.as_str(),
                ed_name.as_str(),
                es_name.as_str(),
                &study.class_label.map(|l| l.to_string()).unwrap_or_default(),
            ])
            .map_err(|e| csv_error(out_dir, e))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv buffer error: {e}")))?;
    write_atomic(&out_dir.join("manifest.csv"), &bytes)?;
    println!(
        "wrote {} subjects ({} classes) to {}",
        studies.len(),
        NUM_CLASSES,
        out_dir.display()
    );
    Ok(())
}

fn cmd_evaluate_seg(reference: &Path, test: &Path, output: Option<&Path>) -> Result<()> {
    let reference = load_volume(reference)?;
    let test = load_volume(test)?;
    let mut rows: Vec<(String, f64, f64)> = Vec::new();
    for &s in &STRUCTURES {
        let sc = score(&reference.extract_mask(s)?, &test.extract_mask(s)?)?;
        rows.push((
            structure_name(s).to_string(),
            sc.dice,
            sc.hausdorff_mm.unwrap_or(f64::NAN),
        ));
    }
    let n = rows.len() as f64;
    let mean = |f: &dyn Fn(&(String, f64, f64)) -> f64| rows.iter().map(f).sum::<f64>() / n;
    let dice_mean = mean(&|r| r.1);
    let hd_mean = mean(&|r| r.2);
    let dice_std = (rows.iter().map(|r| (r.1 - dice_mean).powi(2)).sum::<f64>() / n).sqrt();
    let hd_std = (rows.iter().map(|r| (r.2 - hd_mean).powi(2)).sum::<f64>() / n).sqrt();

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["structure", "dice", "hausdorff_mm"])
        .map_err(|e| csv_error(Path::new("-"), e))?;
    for (name, d, h) in &rows {
        writer
            .write_record([name.as_str(), &format!("{d:.6}"), &format!("{h:.6}")])
            .map_err(|e| csv_error(Path::new("-"), e))?;
    }
    writer
        .write_record(["mean", &format!("{dice_mean:.6}"), &format!("{hd_mean:.6}")])
        .map_err(|e| csv_error(Path::new("-"), e))?;
    writer
        .write_record(["std", &format!("{dice_std:.6}"), &format!("{hd_std:.6}")])
        .map_err(|e| csv_error(Path::new("-"), e))?;
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv buffer error: {e}")))?;
    match output {
        Some(path) => write_atomic(path, &bytes)?,
        None => print!("{}", String::from_utf8_lossy(&bytes)),
    }
    Ok(())
}

fn selection_config(method: SelectionMethod, seed: u64) -> TwoStageConfig {
    TwoStageConfig { method, seed, ..Default::default() }
}

fn ensemble_config(seed: u64, nu: f64) -> EnsembleConfig {
    EnsembleConfig {
        mlp: MlpConfig { seed, ..Default::default() },
        svm: SvmConfig { nu, ..Default::default() },
        ..Default::default()
    }
}

fn cmd_select(
    features: &Path,
    output: &Path,
    method: &str,
    lambda_rel: f64,
    resamples: usize,
    seed: u64,
) -> Result<()> {
    let ds = load_dataset(features)?;
    let labels = ds.require_labels()?;
    let (vol, ts) = ds.column_split();
    let config = selection_config(parse_method(method, lambda_rel, resamples, seed)?, seed);
    let report = two_stage_select(&ds.x, &ds.names, &labels, &vol, &ts, &config)?;
    let text = serde_json::to_string_pretty(&report).map_err(|e| json_error(output, e))?;
    write_atomic(output, text.as_bytes())?;
    println!(
        "selected {} of {} features",
        report.stage2.selected.len(),
        ds.names.len()
    );
    Ok(())
}

fn cmd_train(
    features: &Path,
    selection: Option<&Path>,
    output: &Path,
    seed: u64,
    nu: f64,
) -> Result<()> {
    let ds = load_dataset(features)?;
    let labels = ds.require_labels()?;
    let num_classes = labels.iter().max().map_or(0, |&m| m + 1);
    let cols: Vec<usize> = match selection {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::io(path.display().to_string(), e))?;
            let report: cardioclass::selection::SelectionReport =
                serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
            report.stage2.selected.clone()
        }
        None => (0..ds.names.len()).collect(),
    };
    let x: Vec<Vec<f64>> = ds
        .x
        .iter()
        .map(|row| cols.iter().map(|&j| row[j]).collect())
        .collect();
    let names: Vec<String> = cols.iter().map(|&j| ds.names[j].clone()).collect();
    let model = train_ensemble(&x, &labels, num_classes, &names, &ensemble_config(seed, nu))?;
    let text = serde_json::to_string_pretty(&model).map_err(|e| json_error(output, e))?;
    write_atomic(output, text.as_bytes())?;
    println!("trained on {} subjects, {} features", labels.len(), names.len());
    Ok(())
}

fn cmd_classify(model_path: &Path, features: &Path, output: &Path) -> Result<()> {
    let text = std::fs::read_to_string(model_path)
        .map_err(|e| Error::io(model_path.display().to_string(), e))?;
    let model: TrainedEnsemble = serde_json::from_str(&text).map_err(|e| json_error(model_path, e))?;
    let ds = load_dataset(features)?;
    // project the table onto the model's feature columns by name
    let cols: Vec<usize> = model
        .feature_names
        .iter()
        .map(|name| {
            ds.names.iter().position(|n| n == name).ok_or_else(|| {
                Error::InvalidArgument(format!("feature table lacks column '{name}'"))
            })
        })
        .collect::<Result<_>>()?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["subject_id".to_string(), "predicted_class".to_string()];
    for c in 0..model.num_classes {
        header.push(format!("prob_{c}"));
    }
    writer.write_record(&header).map_err(|e| csv_error(output, e))?;
    for (id, row) in ds.ids.iter().zip(&ds.x) {
        let projected: Vec<f64> = cols.iter().map(|&j| row[j]).collect();
        let probs = model.predict_proba(&projected)?;
        let pred = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap().then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut record = vec![id.clone(), pred.to_string()];
        record.extend(probs.iter().map(|p| format!("{p:.6}")));
        writer.write_record(&record).map_err(|e| csv_error(output, e))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv buffer error: {e}")))?;
    write_atomic(output, &bytes)
}

#[allow(clippy::too_many_arguments)]
fn cmd_cv(
    features: &Path,
    output: &Path,
    folds: usize,
    repeats: usize,
    seed: u64,
    frozen_selection: bool,
    method: &str,
    lambda_rel: f64,
    nu: f64,
) -> Result<()> {
    let ds = load_dataset(features)?;
    let labels = ds.require_labels()?;
    let (vol, ts) = ds.column_split();
    let config = CvConfig {
        k: folds,
        seed,
        selection: selection_config(parse_method(method, lambda_rel, 100, seed)?, seed),
        ensemble: ensemble_config(seed, nu),
        nested: !frozen_selection,
    };
    let report = run_repeated_cv(&ds.x, &labels, &ds.names, &vol, &ts, &config, repeats)?;
    let text = serde_json::to_string_pretty(&report).map_err(|e| json_error(output, e))?;
    write_atomic(output, text.as_bytes())?;
    println!(
        "cv accuracy {:.4} +- {:.4} over {} repeat(s) of {}-fold",
        report.mean_accuracy, report.std_accuracy, repeats, folds
    );
    Ok(())
}

/// End-to-end pipeline configuration.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct PipelineConfig {
    out_dir: PathBuf,
    per_class: usize,
    seed: u64,
    folds: usize,
    repeats: usize,
    /// Boundary-noise rounds applied to each generated segmentation.
    noise: usize,
    /// Expected spurious-blob count per volume.
    blob_rate: f64,
    /// Run largest-component post-processing before feature extraction.
    postprocess: bool,
    connectivity: u8,
    /// Non-nested variant: select once on the full cohort before CV.
    frozen_selection: bool,
    method: String,
    lambda_rel: f64,
    nu: f64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            out_dir: PathBuf::from("pipeline_out"),
            per_class: 20,
            seed: 42,
            folds: 8,
            repeats: 8,
            noise: 0,
            blob_rate: 0.0,
            postprocess: false,
            connectivity: 6,
            frozen_selection: false,
            method: "lasso".to_string(),
            lambda_rel: 0.1,
            nu: 0.2,
        }
    }
}

fn cmd_pipeline(config_path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(config_path)
        .map_err(|e| Error::io(config_path.display().to_string(), e))?;
    let config: PipelineConfig =
        serde_json::from_str(&text).map_err(|e| json_error(config_path, e))?;
    std::fs::create_dir_all(&config.out_dir)
        .map_err(|e| Error::io(config.out_dir.display().to_string(), e))?;

    let mut studies = generate_cohort(config.per_class, config.seed)?;
    if config.noise > 0 || config.blob_rate > 0.0 {
        for (i, study) in studies.iter_mut().enumerate() {
            study.ed = perturb_segmentation(
                &study.ed,
                config.noise,
                config.blob_rate,
                config.seed ^ (i as u64 * 2),
            );
            study.es = perturb_segmentation(
                &study.es,
                config.noise,
                config.blob_rate,
                config.seed ^ (i as u64 * 2 + 1),
            );
        }
    }
    if config.postprocess {
        let connectivity = Connectivity::from_u8(config.connectivity)?;
        for study in studies.iter_mut() {
            study.ed = keep_largest_component(&study.ed, connectivity);
            study.es = keep_largest_component(&study.es, connectivity);
        }
    }

    let ds = extract_dataset(&studies)?;
    save_dataset(&config.out_dir.join("features.csv"), &ds)?;

    let labels = ds.require_labels()?;
    let (vol, ts) = ds.column_split();
    let cv_config = CvConfig {
        k: config.folds,
        seed: config.seed,
        selection: selection_config(
            parse_method(&config.method, config.lambda_rel, 100, config.seed)?,
            config.seed,
        ),
        ensemble: ensemble_config(config.seed, config.nu),
        nested: !config.frozen_selection,
    };
    let report =
        run_repeated_cv(&ds.x, &labels, &ds.names, &vol, &ts, &cv_config, config.repeats)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| json_error(&config.out_dir.join("cv_report.json"), e))?;
    write_atomic(&config.out_dir.join("cv_report.json"), json.as_bytes())?;
    println!(
        "pipeline accuracy {:.4} +- {:.4} ({} subjects, {} repeat(s) of {}-fold)",
        report.mean_accuracy,
        report.std_accuracy,
        labels.len(),
        config.repeats,
        config.folds
    );
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Phantom { out_dir, per_class, seed, noise, blob_rate } => {
            cmd_phantom(&out_dir, per_class, seed, noise, blob_rate)
        }
        Command::Postprocess { input, output, connectivity } => {
            let connectivity = Connectivity::from_u8(connectivity)?;
            let volume = load_volume(&input)?;
            save_volume(&keep_largest_component(&volume, connectivity), &output)
        }
        Command::EvaluateSeg { reference, test, output } => {
            cmd_evaluate_seg(&reference, &test, output.as_deref())
        }
        Command::Extract { manifest, output } => {
            let studies = load_studies(&manifest)?;
            if studies.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "{}: manifest lists no studies",
                    manifest.display()
                )));
            }
            let ds = extract_dataset(&studies)?;
            save_dataset(&output, &ds)
        }
        Command::Select { features, output, method, lambda_rel, resamples, seed } => {
            cmd_select(&features, &output, &method, lambda_rel, resamples, seed)
        }
        Command::Train { features, selection, output, seed, nu } => {
            cmd_train(&features, selection.as_deref(), &output, seed, nu)
        }
        Command::Classify { model, features, output } => {
            cmd_classify(&model, &features, &output)
        }
        Command::Cv {
            features,
            output,
            folds,
            repeats,
            seed,
            frozen_selection,
            method,
            lambda_rel,
            nu,
        } => cmd_cv(
            &features,
            &output,
            folds,
            repeats,
            seed,
            frozen_selection,
            &method,
            lambda_rel,
            nu,
        ),
        Command::Pipeline { config } => cmd_pipeline(&config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
