window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#building","volumes.html#volumes-and-the-cqv1-format","volumes.html#on-disk-format","postprocessing.html#post-processing","seg-metrics.html#segmentation-metrics","seg-metrics.html#dice-coefficient","seg-metrics.html#hausdorff-distance","features.html#feature-extraction","features.html#volumetric-12","features.html#myocardial-thickness-54-27-per-phase","features.html#shape-59","features.html#the-manifest","selection.html#feature-selection","selection.html#the-three-selectors","selection.html#one-vs-rest-aggregation","selection.html#the-two-stage-pipeline","classifiers.html#classifiers-and-the-ensemble","classifiers.html#multinomial-logistic-regression","classifiers.html#multi-layer-perceptron","classifiers.html#nu-svc","classifiers.html#the-vote","evaluation.html#cross-validation","evaluation.html#stratified-folds","evaluation.html#nested-selection","evaluation.html#repeated-cv","evaluation.html#grid-search","phantom.html#phantom-cohorts","phantom.html#geometry","phantom.html#classes","phantom.html#simulated-segmentation-error","phantom.html#what-the-phantoms-verify","cli.html#command-line-interface","cli.html#stage-commands","cli.html#selection-training-prediction","cli.html#cross-validation","cli.html#end-to-end","cli.html#exit-codes"],"index":{"documentStore":{"docInfo":{"0":{"body":156,"breadcrumbs":2,"title":1},"1":{"body":27,"breadcrumbs":2,"title":1},"10":{"body":71,"breadcrumbs":8,"title":6},"11":{"body":87,"breadcrumbs":4,"title":2},"12":{"body":45,"breadcrumbs":3,"title":1},"13":{"body":17,"breadcrumbs":4,"title":2},"14":{"body":140,"breadcrumbs":4,"title":2},"15":{"body":39,"breadcrumbs":6,"title":4},"16":{"body":64,"breadcrumbs":5,"title":3},"17":{"body":11,"breadcrumbs":4,"title":2},"18":{"body":33,"breadcrumbs":5,"title":3},"19":{"body":35,"breadcrumbs":5,"title":3},"2":{"body":94,"breadcrumbs":6,"title":3},"20":{"body":99,"breadcrumbs":4,"title":2},"21":{"body":117,"breadcrumbs":3,"title":1},"22":{"body":11,"breadcrumbs":4,"title":2},"23":{"body":49,"breadcrumbs":4,"title":2},"24":{"body":81,"breadcrumbs":4,"title":2},"25":{"body":30,"breadcrumbs":4,"title":2},"26":{"body":19,"breadcrumbs":4,"title":2},"27":{"body":16,"breadcrumbs":4,"title":2},"28":{"body":53,"breadcrumbs":3,"title":1},"29":{"body":94,"breadcrumbs":3,"title":1},"3":{"body":108,"breadcrumbs":5,"title":2},"30":{"body":54,"breadcrumbs":5,"title":3},"31":{"body":47,"breadcrumbs":4,"title":2},"32":{"body":24,"breadcrumbs":6,"title":3},"33":{"body":91,"breadcrumbs":5,"title":2},"34":{"body":66,"breadcrumbs":6,"title":3},"35":{"body":38,"breadcrumbs":5,"title":2},"36":{"body":73,"breadcrumbs":5,"title":2},"37":{"body":19,"breadcrumbs":5,"title":2},"4":{"body":179,"breadcrumbs":4,"title":2},"5":{"body":10,"breadcrumbs":4,"title":2},"6":{"body":28,"breadcrumbs":4,"title":2},"7":{"body":129,"breadcrumbs":4,"title":2},"8":{"body":35,"breadcrumbs":4,"title":2},"9":{"body":22,"breadcrumbs":4,"title":2}},"docs":{"0":{"body":"cardioclass classifies cardiac cine-MR studies into disease classes. It\\ntakes as input a pair of labeled segmentation volumes per subject — one at\\nend-diastole (ED), one at end-systole (ES) — and produces a class\\nprediction through a fixed pipeline: Volumes — load labeled voxel grids in the CQV1 format. Post-processing — discard spurious disconnected blobs. Features — extract 125 handcrafted volumetric, myocardial-thickness,\\nand shape descriptors. Selection — narrow the 125 columns to 20 with L1-penalized\\nselectors and a two-stage pipeline. Classification — a soft-voting ensemble of logistic regression, a\\nsmall multi-layer perceptron, and a Nu-SVM. Evaluation — stratified k-fold cross-validation with selection\\nnested inside each training fold. Everything is deterministic: every random choice flows from an explicit\\nseed through a counter-based generator, training is single-threaded, and\\nfiles are written atomically. Running any stage twice with the same inputs\\nand seed produces byte-identical outputs. Because real clinical data cannot ship with the repository, the phantom module generates synthetic labeled hearts with\\nclass-dependent geometry, which the test suite uses to verify the pipeline\\nend to end. Each chapter of this guide covers one pipeline stage. The code snippets\\nare the same ones embedded as documentation tests in the corresponding\\nlibrary module, so they are compiled and executed on every cargo test.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"cargo build --release\\ncargo test --workspace The acceptance gate lives in crates/cardioclass/tests/acceptance.rs; run\\nit alone with: cargo test -p cardioclass --test acceptance -- --nocapture It prints one ACCEPTANCE <name>: PASS line per criterion.","breadcrumbs":"Introduction » Building","id":"1","title":"Building"},"10":{"body":"Wall thickness is measured by per-slice ray casting: in every slice\\ncontaining myocardium, rays leave the LV blood-pool centroid (or the MC\\ncentroid when the slice has no LV) at a fixed angular step, and thickness\\nat an angle is the physical length of the first contiguous run of\\nmyocardium samples met along the ray. Per phase the profile yields: six summary statistics — max, min, mean, median, std, var; a 21-step threshold ladder — thk_gt10 … thk_gt30, each the count of\\nprofile samples strictly thicker than the threshold (in mm). The ladder\\nis a coarse histogram of hypertrophy: a healthy wall populates the low\\nrungs only.","breadcrumbs":"Feature extraction » Myocardial thickness (54; 27 per phase)","id":"10","title":"Myocardial thickness (54; 27 per phase)"},"11":{"body":"Fifteen descriptors of a structure’s binary mask, computed for LV-ED,\\nLV-ES, and RV-ED, and fourteen for RV-ES (its surface-area-to-volume\\nratio is dropped to land on the 125 total): area — surface area from a marching-cubes triangulation of the mask; area_to_volume — surface area over volume; sphericity — \\\\( \\\\pi^{1/3}(6V)^{2/3} / A \\\\), 1 for a perfect sphere,\\nsmaller for anything else; compactness1, compactness2, spherical_disproportion — algebraic\\nrelatives of sphericity (and sphericity × spherical_disproportion = 1\\nexactly); max_diam_3d, max_diam_slice, max_diam_col, max_diam_row — the\\nlargest pairwise distance between boundary voxels, overall and\\nrestricted to shared-z, shared-x, and shared-y planes; major_axis, minor_axis, least_axis — \\\\( 4\\\\sqrt{\\\\lambda_i} \\\\)\\nfrom the eigenvalues of the physical-coordinate covariance of the\\nmask’s voxels; elongation, flatness — ratios of those axis lengths.","breadcrumbs":"Feature extraction » Shape (59)","id":"11","title":"Shape (59)"},"12":{"body":"FeatureManifest::default_manifest() lists all 125 entries with their\\ngroup, structure, phase, and parameters; assemble_features evaluates a\\nmanifest against a study and returns values in manifest order. Selection\\nand cross-validation address columns through the manifest’s volumetric_columns() / thickness_shape_columns() split, so the\\npipeline stays correct if the composition is customized. Extraction fails loudly — a structure missing from a volume or a\\nnon-finite feature value is an error, not a silent zero.","breadcrumbs":"Feature extraction » The manifest","id":"12","title":"The manifest"},"13":{"body":"125 features against cohorts of ~100 subjects invites overfitting, so the\\npipeline narrows the columns with L1-penalized selectors before any\\nclassifier sees them.","breadcrumbs":"Feature selection » Feature selection","id":"13","title":"Feature selection"},"14":{"body":"All three operate on standardized columns (zero mean, unit variance) with\\nan unpenalized intercept, and all minimize an objective of the form fit + λ·‖coefficients‖₁: LASSO — squared-error fit, solved by cyclic coordinate descent with\\nthe exact per-coordinate soft-threshold update. L1 logistic regression — logistic loss on ±1 targets, solved by\\nproximal gradient descent with a backtracking line search. Randomized logistic regression (stability selection) — many L1\\nlogistic fits on random 75% row subsamples, each with per-feature\\npenalty weights drawn from [weakness, 1] (weakness 0.5). A feature’s\\nscore is the fraction of (subsample, λ) fits whose support contains it.\\nFeatures that only survive one lucky penalty configuration score low;\\ngenuinely informative ones score high. #![allow(unused)] fn main() {\\nuse cardioclass::selection::{lasso_fit, lasso_lambda_max, FeatureMatrix, LassoOptions}; let x = vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![2.0, 1.0], vec![3.0, 0.0]];\\nlet y = vec![0.1, 1.0, 2.1, 3.0];\\nlet names = vec![\\"slope\\".to_string(), \\"noise\\".to_string()];\\nlet data = FeatureMatrix::new(x, y, names).unwrap();\\nlet lambda = 0.1 * lasso_lambda_max(&data, true);\\nlet model = lasso_fit(&data, lambda, &LassoOptions::default()).unwrap();\\nassert!(model.beta[0].abs() > model.beta[1].abs()); } lasso_lambda_max (and its logistic counterpart) return the smallest λ\\nat which every penalized coefficient is zero; practical λ values are\\nspecified relative to it, so they transfer across datasets.","breadcrumbs":"Feature selection » The three selectors","id":"14","title":"The three selectors"},"15":{"body":"The cohort has five classes but the selectors are binary/regression\\nprocedures, so each runs once per class against ±1 One-vs-Rest targets.\\nA feature’s overall score is its selection frequency (for the randomized\\nselector) or support indicator (for the plain ones) averaged over the\\nfive class problems. Features that discriminate any class from the rest\\nearn credit.","breadcrumbs":"Feature selection » One-vs-Rest aggregation","id":"15","title":"One-vs-Rest aggregation"},"16":{"body":"two_stage_select mirrors how the feature groups differ in character: Stage 1 — rank the 113 thickness + shape columns by OvR score and\\nkeep the top 30. Stage 2 — pool those 30 with the 12 volumetric columns (volumes,\\nratios, and ejection fractions are too clinically established to risk\\ndropping unexamined), rescore, and keep the top 20. Ties break by descending score, then ascending original column index, so\\nthe result is deterministic. The returned SelectionReport records both\\nstages — scores, ranks, and the surviving column names — and serializes to\\nJSON for the select CLI command.","breadcrumbs":"Feature selection » The two-stage pipeline","id":"16","title":"The two-stage pipeline"},"17":{"body":"Three base classifiers train on the same standardized feature matrix and\\nvote with fixed weights.","breadcrumbs":"Classifiers and the ensemble » Classifiers and the ensemble","id":"17","title":"Classifiers and the ensemble"},"18":{"body":"Softmax over per-class linear scores, trained by full-batch gradient\\ndescent with an Armijo backtracking line search and a small L2 penalty\\n(10⁻⁴) on the weights (biases unpenalized). Convex, so it converges to\\nthe global optimum; the acceptance suite checks its gradients against\\nfinite differences.","breadcrumbs":"Classifiers and the ensemble » Multinomial logistic regression","id":"18","title":"Multinomial logistic regression"},"19":{"body":"One hidden layer of 10 tanh units and a softmax output, trained by\\nfull-batch gradient descent with classical momentum 0.9. Weight\\ninitialization is seeded, so training is deterministic — the same data and\\nseed always give the same network. The gradient check and an exact-XOR\\ntest guard the backpropagation.","breadcrumbs":"Classifiers and the ensemble » Multi-layer perceptron","id":"19","title":"Multi-layer perceptron"},"2":{"body":"A LabeledVolume is a dense 3D grid of anatomical label codes with\\nphysical voxel spacing in millimetres. Voxels are stored x-fastest, then\\ny, then z, so index = x + nx*(y + ny*z). The label codes are fixed: Code Constant Meaning 0 BG background 1 RV right ventricle blood pool 2 MC myocardium 3 LV left ventricle blood pool Structure-level work happens on a BinaryMask extracted for one label.\\nMasks carry the spacing with them, so voxel counts convert directly to\\nphysical volumes: #![allow(unused)] fn main() {\\nuse cardioclass::volume::{LabeledVolume, BG, LV}; let labels = vec![ BG, LV, LV, LV,\\n];\\nlet vol = LabeledVolume::new((2, 2, 1), (1.5, 1.5, 8.0), labels).unwrap();\\nlet lv = vol.extract_mask(LV).unwrap();\\nassert_eq!(lv.count(), 3);\\nassert!((lv.physical_volume_mm3() - 3.0 * 1.5 * 1.5 * 8.0).abs() < 1e-12); }","breadcrumbs":"Volumes and the CQV1 format » Volumes and the CQV1 format","id":"2","title":"Volumes and the CQV1 format"},"20":{"body":"One-vs-Rest binary Nu-SVMs with a sigmoid kernel\\n\\\\( k(u, v) = \\\\tanh(\\\\gamma u^\\\\top v + c_0) \\\\), γ defaulting to 1/p and\\nc₀ to 0. The dual problem \\\\[ \\\\min_\\\\alpha \\\\tfrac12 \\\\alpha^\\\\top Q \\\\alpha \\\\quad \\\\text{s.t.} \\\\quad 0 \\\\le \\\\alpha_i \\\\le \\\\tfrac1N,; \\\\textstyle\\\\sum_i \\\\alpha_i y_i = 0,; \\\\sum_i \\\\alpha_i \\\\ge \\\\nu \\\\] is solved by SMO restricted to same-class pairs, which preserves both\\nequality constraints by construction. ν (default 0.2) bounds the margin\\nerror fraction; values above \\\\( 2\\\\min(N_+, N_-)/N \\\\) are infeasible and\\nrejected up front. The sigmoid kernel is indefinite, so working-pair\\ncurvatures are floored at a small positive value. Decision values are\\nmapped to probabilities by Platt scaling (a Newton fit of a sigmoid to the training decision values with smoothed targets), and the\\nper-class probabilities are normalized across the One-vs-Rest machines.","breadcrumbs":"Classifiers and the ensemble » Nu-SVC","id":"20","title":"Nu-SVC"},"21":{"body":"The ensemble averages the three probability vectors with weights\\n1, 1, 2 (logistic, perceptron, SVM), normalized by 4: \\\\[ p = 0.25,p_{\\\\mathrm{LR}} + 0.25,p_{\\\\mathrm{MLP}} + 0.5,p_{\\\\mathrm{SVM}} \\\\] The prediction is the argmax, ties resolving toward the lower class\\nindex. Weighting the SVM double reflects its stronger standalone\\naccuracy; because argmax is invariant under positive rescaling of the\\nweights, only their ratios matter. #![allow(unused)] fn main() {\\nuse cardioclass::classifiers::{train_ensemble, EnsembleConfig}; let x = vec![ vec![0.0, 0.2], vec![0.2, 0.0], vec![0.1, 0.1], vec![0.2, 0.2], vec![3.0, 3.2], vec![3.2, 3.0], vec![3.1, 3.1], vec![3.0, 3.0],\\n];\\nlet labels = vec![0, 0, 0, 0, 1, 1, 1, 1];\\nlet names = vec![\\"a\\".to_string(), \\"b\\".to_string()];\\nlet model = train_ensemble(&x, &labels, 2, &names, &EnsembleConfig::default()).unwrap();\\nassert_eq!(model.predict(&[0.1, 0.0]).unwrap(), 0);\\nassert_eq!(model.predict(&[3.1, 3.2]).unwrap(), 1); } A TrainedEnsemble bundles the standardizer (zero-variance columns map\\nto 0 rather than dividing by zero), the three classifiers, and the names\\nof the feature columns it expects; it serializes to JSON losslessly, so a\\nmodel saved by train and reloaded by classify predicts byte-identical\\noutputs.","breadcrumbs":"Classifiers and the ensemble » The vote","id":"21","title":"The vote"},"22":{"body":"Accuracy estimates come from stratified k-fold cross-validation (default\\nk = 8).","breadcrumbs":"Cross-validation » Cross-validation","id":"22","title":"Cross-validation"},"23":{"body":"kfold_split shuffles each class’s members (seeded) and deals them\\ncyclically to folds, carrying the dealing cursor across classes so both\\nthe per-class counts and the overall fold sizes differ by at most one: #![allow(unused)] fn main() {\\nuse cardioclass::evaluation::kfold_split; let labels = vec![0, 0, 0, 1, 1, 1, 1, 1, 1];\\nlet plan = kfold_split(&labels, 3, 7).unwrap();\\nfor fold in &plan.folds { assert_eq!(fold.len(), 3); assert_eq!(fold.iter().filter(|&&i| labels[i] == 0).count(), 1);\\n} }","breadcrumbs":"Cross-validation » Stratified folds","id":"23","title":"Stratified folds"},"24":{"body":"By default, run_cv reruns the full two-stage feature selection on every\\ntraining fold, so the held-out subjects never influence which features\\nthe classifier sees — the estimate is honest about the whole pipeline,\\nnot just the final classifier. Selecting once on the full cohort and then\\ncross-validating on the frozen feature set is optimistically biased\\n(the test subjects leaked into the selection); that variant remains\\navailable behind the --frozen-selection flag for comparison, and each CvReport records which protocol produced it. Each fold trains a fresh ensemble (with a fold-derived MLP seed) and\\npredicts the held-out subjects. The report carries per-fold accuracies\\nand selected features, the mean and standard deviation across folds, the\\npooled accuracy, and the pooled confusion matrix.","breadcrumbs":"Cross-validation » Nested selection","id":"24","title":"Nested selection"},"25":{"body":"A single k-fold split is itself a random variable. run_repeated_cv\\nrepeats the whole protocol r times with seeds derived from a base seed\\n(the default benchmark is 8 repetitions of 8-fold CV) and reports the\\nmean and spread of the per-repetition accuracies.","breadcrumbs":"Cross-validation » Repeated CV","id":"25","title":"Repeated CV"},"26":{"body":"grid_search picks a configuration index from candidate scores\\nlexicographically: maximum mean accuracy, then minimum standard\\ndeviation, then the earliest candidate — deterministic even when\\ncandidates tie.","breadcrumbs":"Cross-validation » Grid search","id":"26","title":"Grid search"},"27":{"body":"Clinical MR data cannot ship with a repository, so the test suite runs on synthetic labeled hearts whose ground truth is known by construction.","breadcrumbs":"Phantom cohorts » Phantom cohorts","id":"27","title":"Phantom cohorts"},"28":{"body":"A phantom is a short-axis stack (64×64×10 voxels at 2×2×8 mm): each heart\\nslice holds an LV blood-pool disk inside a myocardial annulus, with an RV\\ndisk adjacent to the annulus. The ES volume reuses the ED geometry with\\nper-structure contraction — the cavity radius scales by √(1 − EF), the\\nouter myocardial wall stays fixed so the wall thickens as the cavity\\nshrinks — which makes ejection fractions and wall thicknesses exact by\\nconstruction, not estimated.","breadcrumbs":"Phantom cohorts » Geometry","id":"28","title":"Geometry"},"29":{"body":"Five classes mimic a screening cohort; each is separated from “normal” by\\na different feature group, so a classifier must use all of them: Class Name Signature 0 normal LV EF ≈ 0.6, modest sizes, 6–8 mm wall 1 dilated_lv enlarged LV cavity, LV EF ≈ 0.2 2 hypertrophic wall thicker than 15 mm, normal function 3 infarct_like normal size, LV EF ≈ 0.3 4 abnormal_rv enlarged RV with poor RV function Within a class, each subject samples its parameters uniformly from the\\nclass ranges, seeded per subject, so cohorts have realistic within-class\\nspread yet are exactly reproducible: #![allow(unused)] fn main() {\\nuse cardioclass::phantom::{generate_cohort, NUM_CLASSES}; let cohort = generate_cohort(2, 42).unwrap();\\nassert_eq!(cohort.len(), 2 * NUM_CLASSES);\\nassert_eq!(cohort[0].class_label, Some(0));\\nlet again = generate_cohort(2, 42).unwrap();\\nassert_eq!(cohort[0].ed, again[0].ed); }","breadcrumbs":"Phantom cohorts » Classes","id":"29","title":"Classes"},"3":{"body":"A CQV1 volume is a pair of sibling files: name.json — a JSON header with the magic string \\"CQV1\\", the grid\\ndimensions, the voxel spacing in millimetres, and the label legend; name.raw — the voxel payload, one u8 label code per voxel in\\nx-fastest order. load_volume validates the magic, the dimensions (all non-zero, payload\\nlength must equal nx*ny*nz), the spacing (strictly positive, finite) and\\nthe label codes (only 0–3 allowed) before returning. save_volume writes\\nboth files atomically: content goes to a temporary file in the target\\ndirectory which is then renamed into place, so a crash never leaves a\\nhalf-written volume behind. A cohort is described by a manifest.csv with one row per subject: subject_id, ed_path, es_path, class_label (paths relative to the\\nmanifest, label optional for unlabeled data). load_studies reads the\\nmanifest and returns one SubjectStudy — ED volume, ES volume, optional\\nclass — per row, verifying that the two phases share dimensions and\\nspacing.","breadcrumbs":"Volumes and the CQV1 format » On-disk format","id":"3","title":"On-disk format"},"30":{"body":"perturb_segmentation emulates what an automatic segmenter gets wrong: boundary noise — labels jitter across structure boundaries for a\\nconfigurable number of rounds; spurious blobs — small disconnected foreground blobs appear in the\\nbackground at a configurable expected rate. Both are deterministic given the seed. The perturbation is what the\\npost-processing chapter’s largest-component filter exists to undo, and\\nthe acceptance suite verifies the full loop: perturb a cohort, filter it,\\nre-extract features, and confirm classification accuracy survives.","breadcrumbs":"Phantom cohorts » Simulated segmentation error","id":"30","title":"Simulated segmentation error"},"31":{"body":"feature extraction recovers the constructed volumes, ejection\\nfractions, and wall thicknesses within voxelization error; the end-to-end benchmark — generate 100 subjects, extract, and run\\n8 repetitions of 8-fold nested cross-validation — reaches ≥ 0.90 mean\\naccuracy in minutes on one core; robustness: boundary noise plus spurious blobs, followed by\\npost-processing, costs at most a few points of accuracy.","breadcrumbs":"Phantom cohorts » What the phantoms verify","id":"31","title":"What the phantoms verify"},"32":{"body":"The cardioclass binary exposes each pipeline stage as a subcommand.\\nEvery command is deterministic: rerunning with the same inputs, flags,\\nand seed produces byte-identical output files (all writes are atomic —\\ntemp file, then rename).","breadcrumbs":"Command-line interface » Command-line interface","id":"32","title":"Command-line interface"},"33":{"body":"Generate a phantom cohort (CQV1 volume pairs plus a manifest.csv): cardioclass phantom --out-dir cohort --per-class 20 --seed 42 Optional --noise <rounds> and --blob-rate <rate> apply simulated\\nsegmentation error to every saved volume. Clean a single volume (keep the largest connected foreground component): cardioclass postprocess --input noisy.json --output clean.json [--connectivity 6|26] Score a test segmentation against a reference (per-structure Dice and\\nHausdorff, as CSV to --output or stdout): cardioclass evaluate-seg --reference truth.json --test predicted.json Extract the 125-column feature table for every study in a manifest: cardioclass extract --manifest cohort/manifest.csv --output features.csv The feature table is a CSV with subject_id first, the feature columns,\\nand a trailing class_label (possibly empty for unlabeled data).","breadcrumbs":"Command-line interface » Stage commands","id":"33","title":"Stage commands"},"34":{"body":"cardioclass select --features features.csv --output selection.json \\\\ [--method lasso|logistic|randomized] [--lambda-rel 0.1] \\\\ [--resamples 100] [--seed 0]\\ncardioclass train --features features.csv --selection selection.json \\\\ --output model.json [--seed 0] [--nu 0.2]\\ncardioclass classify --model model.json --features new_subjects.csv \\\\ --output predictions.csv --lambda-rel sets the penalty relative to the data’s λ_max, so the same\\nvalue transfers across datasets. train without --selection uses all\\ncolumns. classify matches columns by name against the names stored in\\nthe model, so the prediction table may have extra columns or a different\\ncolumn order.","breadcrumbs":"Command-line interface » Selection, training, prediction","id":"34","title":"Selection, training, prediction"},"35":{"body":"cardioclass cv --features features.csv --output report.json \\\\ [--folds 8] [--repeats 1] [--seed 0] [--frozen-selection] \\\\ [--method lasso] [--lambda-rel 0.1] [--nu 0.2] Selection is nested in each training fold by default; --frozen-selection switches to the optimistic select-once variant (see\\nthe cross-validation chapter).","breadcrumbs":"Command-line interface » Cross-validation","id":"35","title":"Cross-validation"},"36":{"body":"pipeline chains phantom generation, optional perturbation and\\npost-processing, extraction, and repeated CV from one JSON config: cardioclass pipeline --config pipeline.json { \\"out_dir\\": \\"pipeline_out\\", \\"per_class\\": 20, \\"seed\\": 42, \\"folds\\": 8, \\"repeats\\": 8, \\"noise\\": 0, \\"blob_rate\\": 0.0, \\"postprocess\\": false, \\"connectivity\\": 6, \\"frozen_selection\\": false, \\"method\\": \\"lasso\\", \\"lambda_rel\\": 0.1, \\"nu\\": 0.2\\n} Every field is optional (the values above are the defaults); unknown\\nfields are rejected rather than silently ignored. Outputs are features.csv and cv_report.json in out_dir. With --method randomized, --lambda-rel seeds a three-point grid\\n(half, exact, double) and --resamples sets the subsample count.","breadcrumbs":"Command-line interface » End to end","id":"36","title":"End to end"},"37":{"body":"0 — success 1 — invalid argument or input 2 — data or I/O failure (malformed volume, unreadable file, …) 3 — an iterative solver failed to converge","breadcrumbs":"Command-line interface » Exit codes","id":"37","title":"Exit codes"},"4":{"body":"Automatic segmenters occasionally produce small spurious blobs far from\\nthe heart. Left in place, those voxels corrupt volumes, surface areas, and\\nespecially the Hausdorff distance, which is dominated by its single worst\\npoint. The fix is structural: the heart is one connected object, so only the\\nlargest connected component of the foreground (the union of all three\\nstructure labels, computed as one object rather than per structure —\\notherwise a blob touching none of the heart but bridging two structures\\ncould survive) can be anatomy. keep_largest_component zeroes every voxel\\noutside it: #![allow(unused)] fn main() {\\nuse cardioclass::postprocess::{connected_components, keep_largest_component, Connectivity};\\nuse cardioclass::volume::{LabeledVolume, BG, LV}; let labels = vec![ LV, BG, BG, BG, LV, LV,\\n];\\nlet vol = LabeledVolume::new((3, 2, 1), (1.0, 1.0, 1.0), labels).unwrap();\\nlet parts = connected_components(&vol.foreground_mask(), Connectivity::Six);\\nassert_eq!(parts.num_components(), 2);\\nlet cleaned = keep_largest_component(&vol, Connectivity::Six);\\nassert_eq!(cleaned.foreground_mask().count(), 2); } Connectivity is selectable: Connectivity::Six treats voxels as adjacent\\nonly across faces, Connectivity::TwentySix also across edges and\\ncorners. Six is the default throughout the pipeline. Properties guaranteed (and asserted by the test suite): Idempotence — applying the filter twice equals applying it once. Single component — the output’s foreground is one connected\\ncomponent (or empty, if the input was empty). Label preservation — surviving voxels keep their original labels;\\nthe filter only ever sets voxels to background. Tie stability — among equally sized components, the one containing\\nthe lowest linear voxel index wins, so the result never depends on\\ntraversal order. Component labeling is a breadth-first flood fill over the voxel grid,\\nlinear in the number of voxels; component ids are assigned in scan order\\nof each component’s first voxel.","breadcrumbs":"Post-processing » Post-processing","id":"4","title":"Post-processing"},"5":{"body":"Two scores quantify how well a test segmentation matches a reference,\\nper structure.","breadcrumbs":"Segmentation metrics » Segmentation metrics","id":"5","title":"Segmentation metrics"},"6":{"body":"For voxel sets \\\\(A\\\\) and \\\\(B\\\\): \\\\[ \\\\mathrm{Dice}(A, B) = \\\\frac{2|A \\\\cap B|}{|A| + |B|} \\\\] Dice is 1 for identical masks, 0 for disjoint ones, and is computed on\\nwhole masks (every true voxel, not just boundaries). Two empty masks score\\n1 by convention.","breadcrumbs":"Segmentation metrics » Dice coefficient","id":"6","title":"Dice coefficient"},"7":{"body":"The symmetric maximum boundary-to-boundary distance in physical\\nmillimetres: \\\\[ H(A, B) = \\\\max\\\\left( \\\\max_{a \\\\in \\\\partial A} \\\\min_{b \\\\in \\\\partial B} \\\\lVert a - b \\\\rVert,; \\\\max_{b \\\\in \\\\partial B} \\\\min_{a \\\\in \\\\partial A} \\\\lVert a - b \\\\rVert \\\\right) \\\\] The boundary \\\\(\\\\partial A\\\\) is the set of true voxels with at least one\\nfalse or out-of-grid 6-neighbor, mapped to physical coordinates through\\nthe voxel spacing — so anisotropic voxels are handled correctly, and\\nscaling the spacing scales the distance proportionally. The distance is\\nundefined when either mask is empty; score reports None in that case\\nrather than inventing a number. #![allow(unused)] fn main() {\\nuse cardioclass::seg_metrics::{dice, hausdorff};\\nuse cardioclass::volume::BinaryMask; let a = BinaryMask::new((3, 1, 1), (1.0, 1.0, 1.0), vec![true, true, false]).unwrap();\\nlet b = BinaryMask::new((3, 1, 1), (1.0, 1.0, 1.0), vec![false, true, true]).unwrap();\\nassert_eq!(dice(&a, &b).unwrap(), 0.5);\\nassert_eq!(hausdorff(&a, &b).unwrap(), 1.0); } Both metrics are symmetric in their arguments, and both are verified in\\nthe acceptance suite against an independent brute-force double loop on\\nrandomized small masks. The evaluate-seg CLI command applies both metrics to each of the three\\nstructures of a volume pair and writes a three-row CSV.","breadcrumbs":"Segmentation metrics » Hausdorff distance","id":"7","title":"Hausdorff distance"},"8":{"body":"Each subject study (ED + ES volume pair) is reduced to a fixed vector of 125 features in three groups. #![allow(unused)] fn main() {\\nuse cardioclass::features::{FeatureManifest, assemble_features};\\nuse cardioclass::phantom::{PhantomSpec, generate_phantom}; let study = generate_phantom(&PhantomSpec::for_class(0, 7).unwrap()).unwrap();\\nlet manifest = FeatureManifest::default_manifest();\\nlet features = assemble_features(&study, &manifest).unwrap();\\nassert_eq!(features.len(), 125);\\nassert!(features.get(\\"vol_LV_ED\\").unwrap() > 0.0); }","breadcrumbs":"Feature extraction » Feature extraction","id":"8","title":"Feature extraction"},"9":{"body":"vol_{LV,RV,MC}_{ED,ES} — the six structure volumes in mm³ (voxel count\\n× voxel volume). ratio_{RV_LV,MC_LV}_{ED,ES} — four volume ratios against the LV. ef_{LV,RV} — two ejection fractions, (EDV − ESV) / EDV.","breadcrumbs":"Feature extraction » Volumetric (12)","id":"9","title":"Volumetric (12)"}},"length":38,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"0":{"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"36":{"tf":1.0},"8":{"tf":1.0}}},"1":{"df":5,"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}}},"2":{"5":{",":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"{":{"\\\\":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"m":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":6,"docs":{"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"29":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}}},"3":{"df":1,"docs":{"29":{"tf":1.0}}},"5":{",":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"{":{"\\\\":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"{":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":2,"docs":{"14":{"tf":1.0},"7":{"tf":1.0}}},"6":{"df":1,"docs":{"29":{"tf":1.0}}},"9":{"0":{"df":1,"docs":{"31":{"tf":1.0}}},"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":10,"docs":{"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":2.23606797749979},"23":{"tf":1.4142135623730951},"29":{"tf":1.0},"34":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"6":{"tf":1.0}},"–":{"3":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}}},"1":{".":{"0":{"df":3,"docs":{"14":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772},"7":{"tf":2.6457513110645907}}},"5":{"df":1,"docs":{"2":{"tf":2.0}}},"df":0,"docs":{}},"/":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}},"0":{"0":{"df":3,"docs":{"13":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.0}}},"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}},"1":{"3":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"2":{"5":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"df":2,"docs":{"16":{"tf":1.0},"2":{"tf":1.0}}},"5":{"df":1,"docs":{"29":{"tf":1.0}}},"df":14,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":2.6457513110645907},"23":{"tf":2.6457513110645907},"28":{"tf":1.0},"29":{"tf":1.0},"35":{"tf":1.0},"37":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":2.0}},"e":{"df":1,"docs":{"2":{"tf":1.0}}}},"2":{".":{"1":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":4,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0}}},"1":{"df":1,"docs":{"10":{"tf":1.0}}},"\\\\":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"(":{"df":0,"docs":{},"n":{"_":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":6,"docs":{"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"37":{"tf":1.0},"4":{"tf":1.7320508075688772}},"×":{"2":{"df":0,"docs":{},"×":{"8":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"3":{".":{"0":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951}}},"1":{"df":1,"docs":{"21":{"tf":1.0}}},"2":{"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}},"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":4,"docs":{"2":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"29":{"tf":1.0},"37":{"tf":1.0}}},"4":{"2":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":2,"docs":{"33":{"tf":1.0},"36":{"tf":1.0}}},"\\\\":{"df":0,"docs":{},"s":{"df":0,"docs":{},"q":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"{":{"\\\\":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":2,"docs":{"21":{"tf":1.0},"29":{"tf":1.0}}},"6":{"4":{"df":0,"docs":{},"×":{"6":{"4":{"df":0,"docs":{},"×":{"1":{"0":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":2,"docs":{"36":{"tf":1.0},"7":{"tf":1.0}},"|":{"2":{"6":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"–":{"8":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"7":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"5":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"8":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":5,"docs":{"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.4142135623730951}}},"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"b":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"v":{"df":2,"docs":{"20":{"tf":1.0},"36":{"tf":1.0}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":4,"docs":{"1":{"tf":1.7320508075688772},"18":{"tf":1.0},"30":{"tf":1.0},"7":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":7,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"d":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{},"j":{"a":{"c":{"df":2,"docs":{"28":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"[":{"0":{"]":{".":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"29":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":8,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":8,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":1,"docs":{"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"h":{"a":{"^":{"\\\\":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.7320508075688772}}}},"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"28":{"tf":1.4142135623730951}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":3,"docs":{"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":2,"docs":{"11":{"tf":2.0},"4":{"tf":1.0}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"37":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"\\"":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"_":{"df":0,"docs":{},"e":{"d":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"[":{"0":{"]":{".":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"d":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"(":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"[":{"0":{"]":{".":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"(":{"&":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"d":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"|":{"&":{"&":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"(":{"&":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"v":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"(":{"&":{"[":{"0":{".":{"1":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{".":{"1":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"4":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"30":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"15":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"28":{"tf":1.0}}}}},"b":{"\\"":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"2":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":2,"docs":{"6":{"tf":1.7320508075688772},"7":{"tf":2.449489742783178}},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"3":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"24":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}}},"n":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":2,"docs":{"25":{"tf":1.0},"31":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"g":{"df":2,"docs":{"2":{"tf":1.7320508075688772},"4":{"tf":2.0}}},"i":{"a":{"df":0,"docs":{},"s":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"11":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0}}},"y":{"/":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"(":{"3":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"b":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"36":{"tf":1.0}}}},"df":0,"docs":{}}},"df":5,"docs":{"0":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{},"o":{"d":{"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"28":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":6,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"7":{"tf":1.7320508075688772}}}},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":5,"docs":{"11":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}}}}},"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"d":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"32":{"tf":1.0}}}}},"|":{"df":0,"docs":{},"}":{"df":0,"docs":{},"{":{"df":0,"docs":{},"|":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}}}},"c":{"_":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"26":{"tf":1.7320508075688772}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":1,"docs":{"6":{"tf":1.0}}},"r":{"d":{"df":0,"docs":{},"i":{"a":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"k":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"d":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{":":{":":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"2":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":2.0},"34":{"tf":1.7320508075688772},"35":{"tf":1.0},"36":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":2,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772}}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0}}}}}}},"df":1,"docs":{"20":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}}},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"36":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"35":{"tf":1.0}},"’":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"3":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":9,"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":2.0},"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"29":{"tf":2.23606797749979},"3":{"tf":1.0},"33":{"tf":1.0}},"i":{"c":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{},"f":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.0}},"i":{"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"29":{"tf":1.0},"34":{"tf":1.4142135623730951}}}}},"’":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":2,"docs":{"33":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":2,"docs":{"16":{"tf":1.0},"7":{"tf":1.0}},"n":{"df":0,"docs":{},"i":{"c":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"/":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"33":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":7,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.7320508075688772},"3":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.4142135623730951}}}}}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":8,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.0},"21":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"34":{"tf":2.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"16":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"1":{"df":1,"docs":{"11":{"tf":1.0}}},"2":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"30":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":2.449489742783178}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"’":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"36":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"14":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"30":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"33":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":2.23606797749979}},"e":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"4":{"tf":1.7320508075688772}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"20":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"18":{"tf":1.0},"37":{"tf":1.0}}},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"x":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"36":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"v":{"1":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951},"33":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"3":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"/":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"/":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":6,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":2,"docs":{"33":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"u":{"b":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"v":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"36":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}},"df":3,"docs":{"25":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}}},"y":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"14":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0},"37":{"tf":1.0}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"34":{"tf":1.0}}}}},"’":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}},"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":7,"docs":{"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"24":{"tf":1.0},"25":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}}}}}}}}}}},"v":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"33":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"3":{"tf":1.7320508075688772}}}}}},"r":{"df":1,"docs":{"33":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"k":{"df":1,"docs":{"28":{"tf":1.4142135623730951}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.7320508075688772}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"21":{"tf":1.0},"36":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.0}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":13,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"32":{"tf":1.0},"35":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}},"d":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"28":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"g":{"df":1,"docs":{"4":{"tf":1.0}}},"v":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":2,"docs":{"28":{"tf":1.0},"29":{"tf":1.7320508075688772}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"16":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"m":{"b":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":4,"docs":{"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}}},"n":{"d":{"df":2,"docs":{"0":{"tf":2.0},"31":{"tf":1.4142135623730951}}},"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"(":{")":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0}}}}}},"s":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"28":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0}}}}},"v":{"df":1,"docs":{"9":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"28":{"tf":1.0},"36":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"29":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"36":{"tf":1.0}}}},"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}}}}},"f":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"37":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"37":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"s":{"df":2,"docs":{"36":{"tf":1.4142135623730951},"7":{"tf":1.0}},"e":{"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":1,"docs":{"4":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":16,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":2.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.7320508075688772},"34":{"tf":1.7320508075688772},"35":{"tf":1.0},"8":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"8":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}},"s":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":4,"docs":{"33":{"tf":1.0},"34":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"’":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}}}},"df":0,"docs":{},"w":{"df":1,"docs":{"31":{"tf":1.0}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"36":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"3":{"tf":1.7320508075688772},"32":{"tf":1.4142135623730951},"37":{"tf":1.0}}},"l":{"df":1,"docs":{"4":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"30":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}},"t":{"df":2,"docs":{"14":{"tf":2.0},"20":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"29":{"tf":1.0}}}},"x":{"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"24":{"tf":1.0},"32":{"tf":1.0}}},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}},"w":{"df":1,"docs":{"0":{"tf":1.0}}}}},"n":{"df":8,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"d":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":2.23606797749979},"25":{"tf":1.4142135623730951},"31":{"tf":1.0},"35":{"tf":1.4142135623730951},"36":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"r":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"30":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}}},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":1,"docs":{"14":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":6,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"9":{"tf":1.0}}}}}},"{":{"2":{"df":0,"docs":{},"|":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"24":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"36":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":2,"docs":{"24":{"tf":1.4142135623730951},"35":{"tf":1.4142135623730951}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":4,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.4142135623730951},"30":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"(":{"2":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"0":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":4,"docs":{"0":{"tf":1.4142135623730951},"31":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}}}}}}},"t":{"df":1,"docs":{"30":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}},"n":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":6,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":4,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"(":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"3":{"tf":1.0},"36":{"tf":1.0}}}},"n":{"d":{"c":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"s":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":3,"docs":{"33":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"i":{"d":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"29":{"tf":1.0}},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}}}}}}},"i":{"/":{"df":0,"docs":{},"o":{"df":1,"docs":{"37":{"tf":1.0}}}},"d":{"df":1,"docs":{"4":{"tf":1.0}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"32":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":5,"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}}}},"i":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"k":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"37":{"tf":1.0},"4":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"37":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"37":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"36":{"tf":1.0}}}}}},"k":{"(":{"df":0,"docs":{},"u":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":3,"docs":{"16":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"l":{"1":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951}}},"2":{"df":1,"docs":{"18":{"tf":1.0}}},"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":8,"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":2.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":2.0},"30":{"tf":1.0},"4":{"tf":2.23606797749979}},"e":{"d":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}},"e":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"(":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"3":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"s":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"2":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"[":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}},"d":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"df":4,"docs":{"14":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"n":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"11":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":3,"docs":{"14":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"(":{")":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"|":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"|":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}}}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"_":{"a":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"v":{"df":2,"docs":{"10":{"tf":1.0},"3":{"tf":1.0}}}},"df":1,"docs":{"20":{"tf":1.4142135623730951}},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"4":{"tf":1.0}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}}},"x":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":3,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}}},"o":{"a":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":2.23606797749979},"21":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"30":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}},"u":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":2,"docs":{"10":{"tf":1.0},"14":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"v":{"df":7,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"28":{"tf":1.0},"29":{"tf":2.0},"4":{"tf":2.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"n":{"df":8,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}}},"l":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"37":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":2,"docs":{"3":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{}},"df":4,"docs":{"12":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"8":{"tf":1.0}},"’":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}}},"p":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"k":{"df":4,"docs":{"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"11":{"tf":1.0}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"34":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"{":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"}":{"(":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":2,"docs":{"17":{"tf":1.0},"24":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"x":{"\\\\":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"_":{"d":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"m":{"_":{"3":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"11":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"{":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"10":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"26":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"c":{"df":2,"docs":{"10":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":7,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"10":{"tf":1.0}},"h":{"df":0,"docs":{},"o":{"d":{"df":3,"docs":{"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":3,"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}}}}}},"m":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"_":{"\\\\":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"a":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"{":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"10":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"12":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"p":{"df":1,"docs":{"24":{"tf":1.0}}}},"m":{"df":4,"docs":{"10":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"[":{"1":{"]":{".":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}}}}}},"df":3,"docs":{"14":{"tf":1.0},"21":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"r":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"o":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"2":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"n":{"_":{"df":1,"docs":{"20":{"tf":1.0}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"df":6,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.7320508075688772},"29":{"tf":1.0},"34":{"tf":1.4142135623730951}},"s":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.0}}}}}}},"df":1,"docs":{"20":{"tf":1.0}},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}},"w":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"o":{"c":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":4,"docs":{"30":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0}},"e":{"\\"":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"y":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"n":{"df":2,"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"e":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":2.0}}}},"df":0,"docs":{}}}},"u":{"df":5,"docs":{"0":{"tf":1.0},"20":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0}},"m":{"_":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"30":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"x":{"*":{"(":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"y":{"*":{"df":0,"docs":{},"n":{"df":0,"docs":{},"z":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"y":{"*":{"df":0,"docs":{},"z":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"c":{"c":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"c":{"df":4,"docs":{"15":{"tf":1.0},"24":{"tf":1.0},"35":{"tf":1.0},"4":{"tf":1.0}}},"df":14,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"3":{"tf":1.7320508075688772},"31":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"35":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"3":{"tf":1.4142135623730951},"33":{"tf":1.0},"36":{"tf":1.4142135623730951}}}}}}},"r":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"34":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"4":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"36":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":3,"docs":{"24":{"tf":1.4142135623730951},"33":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.7320508075688772},"34":{"tf":1.7320508075688772},"35":{"tf":1.0},"36":{"tf":1.0}},"’":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0}}}},"df":4,"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"29":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":2.23606797749979}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"3":{"tf":1.0}}}},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"a":{"d":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":2,"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"34":{"tf":1.0}}}}}},"df":0,"docs":{}},"r":{"_":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"36":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}}}}}},"df":16,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"b":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}}}}}},"df":2,"docs":{"30":{"tf":1.4142135623730951},"36":{"tf":1.0}}},"df":0,"docs":{}}}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"33":{"tf":1.4142135623730951},"36":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"i":{"^":{"df":0,"docs":{},"{":{"1":{"/":{"3":{"df":0,"docs":{},"}":{"(":{"6":{"df":0,"docs":{},"v":{")":{"^":{"df":0,"docs":{},"{":{"2":{"/":{"3":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":7,"docs":{"0":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.0},"24":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.4142135623730951},"4":{"tf":1.0}},"e":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"36":{"tf":1.0}}}}}}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"36":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"n":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":1,"docs":{"23":{"tf":1.0}},"e":{"df":1,"docs":{"11":{"tf":1.0}}}},"t":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"df":2,"docs":{"31":{"tf":1.0},"33":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"31":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":5,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"28":{"tf":1.0}}},"r":{"df":1,"docs":{"29":{"tf":1.0}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":4,"docs":{"0":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"36":{"tf":1.0}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"33":{"tf":1.0},"36":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.4142135623730951},"24":{"tf":1.0},"34":{"tf":1.0}},"e":{"d":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":2,"docs":{"20":{"tf":1.0},"4":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":2,"docs":{"15":{"tf":1.0},"20":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"0":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"36":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"24":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"24":{"tf":1.0},"25":{"tf":1.0}}}}},"df":0,"docs":{}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"q":{"df":1,"docs":{"20":{"tf":1.0}},"u":{"a":{"d":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"u":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":6,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"25":{"tf":1.0},"36":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.0}}},"k":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"30":{"tf":1.0},"33":{"tf":1.4142135623730951}}},"i":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{",":{"df":0,"docs":{},"m":{"c":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"}":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"e":{"d":{",":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":4,"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}}}}},"y":{"df":1,"docs":{"10":{"tf":1.7320508075688772}}}},"df":1,"docs":{"25":{"tf":1.0}},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"31":{"tf":1.0}}}},"d":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"16":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":1,"docs":{"31":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"30":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"33":{"tf":1.4142135623730951},"5":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"36":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":6,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0},"34":{"tf":1.7320508075688772},"35":{"tf":1.0},"36":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"a":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"3":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"25":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"35":{"tf":1.0}}}}}}},"df":3,"docs":{"24":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":2,"docs":{"24":{"tf":1.0},"32":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"34":{"tf":1.0},"36":{"tf":1.0}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"21":{"tf":1.0}}}}},"t":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"4":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.4142135623730951}}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"28":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"30":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":3,"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"_":{"c":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"c":{"df":0,"docs":{},"v":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.0}},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}},"v":{"df":4,"docs":{"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"29":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"df":2,"docs":{"21":{"tf":1.0},"33":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"20":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"n":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":9,"docs":{"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"d":{"df":12,"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.4142135623730951},"35":{"tf":1.0},"36":{"tf":1.4142135623730951}}},"df":3,"docs":{"13":{"tf":1.0},"24":{"tf":1.0},"35":{"tf":1.0}}},"g":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":2.23606797749979},"34":{"tf":1.7320508075688772},"35":{"tf":2.0},"4":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":6,"docs":{"24":{"tf":1.0},"34":{"tf":1.0},"36":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.7320508075688772},"3":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"20":{"tf":1.7320508075688772}}},"df":0,"docs":{}}}},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"36":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"33":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}},"x":{"df":3,"docs":{"10":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":3,"docs":{"23":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"10":{"tf":1.7320508075688772},"28":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":1,"docs":{"20":{"tf":1.0}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"x":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"v":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"20":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"37":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"(":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":3,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}},"i":{"c":{"a":{"df":0,"docs":{},"l":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":1,"docs":{"11":{"tf":1.7320508075688772}}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"25":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":2,"docs":{"25":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.0},"4":{"tf":1.0}}}}},"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.7320508075688772},"24":{"tf":1.0},"32":{"tf":1.0}}}},"n":{"d":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}},"r":{"d":{"df":5,"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"y":{"df":2,"docs":{"12":{"tf":1.0},"28":{"tf":1.0}}}},"d":{"df":1,"docs":{"10":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"2":{"tf":1.0},"34":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":9,"docs":{"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"u":{"d":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"3":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}},"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"24":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951},"3":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"36":{"tf":1.0}}}}}},"df":0,"docs":{}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"37":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}},"m":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":2,"docs":{"11":{"tf":1.7320508075688772},"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":4,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}}},"v":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"35":{"tf":1.0}}}},"df":0,"docs":{}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"27":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"33":{"tf":1.4142135623730951},"34":{"tf":1.0}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"n":{"df":0,"docs":{},"h":{"(":{"\\\\":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"19":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"32":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"19":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"33":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"\\\\":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"{":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"f":{"df":0,"docs":{},"r":{"a":{"c":{"1":{"2":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"h":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"16":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.0}}},"r":{"df":2,"docs":{"10":{"tf":1.0},"29":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"k":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"1":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"3":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":7,"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"36":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"7":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}}}},"i":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"e":{"df":2,"docs":{"26":{"tf":1.0},"4":{"tf":1.0}}},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"33":{"tf":1.0}}},"n":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"x":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":9,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951},"35":{"tf":1.0}},"e":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"34":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"e":{"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"14":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}}},"t":{"df":0,"docs":{},"h":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":1,"docs":{"27":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":7,"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}},"u":{"8":{"df":1,"docs":{"3":{"tf":1.0}}},"^":{"\\\\":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"o":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}},"t":{"df":2,"docs":{"14":{"tf":1.0},"19":{"tf":1.0}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"36":{"tf":1.0}}}}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"3":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"18":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"37":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"p":{"d":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"20":{"tf":1.0}}},"s":{"df":10,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.4142135623730951},"34":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"20":{"tf":2.0},"34":{"tf":1.0},"36":{"tf":1.0}}}},"r":{"df":1,"docs":{"10":{"tf":1.0}},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{},"n":{"c":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"20":{"tf":1.4142135623730951}},"e":{"c":{"!":{"[":{"\\"":{"a":{"\\"":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"\\"":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"0":{".":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"1":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.0}}},"2":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}},"1":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{".":{"0":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.4142135623730951}}},"1":{"df":1,"docs":{"21":{"tf":1.0}}},"2":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":1,"docs":{"7":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":3,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"21":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"7":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{",":{"df":0,"docs":{},"m":{"c":{"df":0,"docs":{},"}":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"e":{"d":{",":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":2,"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":14,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":2.0},"31":{"tf":1.0},"33":{"tf":1.7320508075688772},"37":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"i":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"28":{"tf":1.0},"3":{"tf":1.7320508075688772},"31":{"tf":1.0},"4":{"tf":3.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}}}}},"s":{"df":2,"docs":{"15":{"tf":1.0},"20":{"tf":1.4142135623730951}}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":5,"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"24":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"27":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"29":{"tf":1.4142135623730951},"31":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":2,"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"3":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"x":{"df":5,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}},"y":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"df":2,"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":5,"docs":{"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"1":{"2":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"2":{"7":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"5":{"4":{"df":1,"docs":{"10":{"tf":1.0}}},"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":5,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"37":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":5,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"v":{"1":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":6,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"35":{"tf":1.0}}}}}},"v":{"df":1,"docs":{"25":{"tf":1.0}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"36":{"tf":1.4142135623730951}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"37":{"tf":1.0}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":9,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":6,"docs":{"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":3,"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}}},"y":{"df":0,"docs":{},"o":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"u":{"df":1,"docs":{"20":{"tf":1.0}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"df":1,"docs":{"10":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":5,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"30":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":6,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.0},"34":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":2,"docs":{"16":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"v":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"16":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":6,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"35":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"title":{"root":{"1":{"2":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"2":{"7":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"5":{"4":{"df":1,"docs":{"10":{"tf":1.0}}},"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"37":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"32":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"v":{"1":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"22":{"tf":1.0},"35":{"tf":1.0}}}}}},"v":{"df":1,"docs":{"25":{"tf":1.0}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"36":{"tf":1.4142135623730951}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"37":{"tf":1.0}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"32":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"m":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}}},"y":{"df":0,"docs":{},"o":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"u":{"df":1,"docs":{"20":{"tf":1.0}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"df":1,"docs":{"10":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"27":{"tf":1.0},"31":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"30":{"tf":1.0},"5":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"24":{"tf":1.0},"34":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":2,"docs":{"16":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"v":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"16":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"22":{"tf":1.0},"35":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));