//! The end-to-end flow shared by the command line and the tests: build a
//! labeled set from a raw corpus, then split, train and evaluate.

use thiserror::Error;

use crate::classifier::{
    evaluate, train, ClassifierError, ClassifierModel, EvalReport, Featurizer, LabeledExample,
    TrainConfig, TrainingSet,
};
use crate::dataset::{
    auto_label, class_report, select_by_seeds, split, ClassReport, Corpus, DatasetError,
    LabeledCorpus, SeedWordSet,
};
use crate::resources::Resources;
use crate::textpipe::TextConfig;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetBuild {
    pub ingested: usize,
    pub duplicates_dropped: usize,
    pub selected: usize,
    pub labeled: LabeledCorpus,
    pub report: ClassReport,
}

pub fn build_dataset(
    corpus: &Corpus,
    seeds: &SeedWordSet,
    resources: &Resources,
    text_config: &TextConfig,
    threshold: f64,
) -> Result<DatasetBuild, DatasetError> {
    let selected = select_by_seeds(corpus, seeds, &resources.lexicon);
    let labeled = auto_label(&selected, resources, text_config, threshold)?;
    Ok(DatasetBuild {
        ingested: corpus.len(),
        duplicates_dropped: corpus.duplicates_dropped(),
        selected: selected.len(),
        report: class_report(&labeled),
        labeled,
    })
}

pub fn training_set(labeled: &LabeledCorpus, featurizer: Featurizer) -> TrainingSet {
    TrainingSet::from_texts(
        featurizer,
        labeled
            .entries
            .iter()
            .map(|e| (e.document.text.as_str(), e.label)),
    )
}

/// Featurizes with the model's own featurizer and vocabulary.
pub fn test_examples(model: &ClassifierModel, labeled: &LabeledCorpus) -> Vec<LabeledExample> {
    labeled
        .entries
        .iter()
        .map(|e| LabeledExample {
            features: model.featurizer.featurize(&e.document.text, &model.vocabulary),
            label: e.label,
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct TrainedSplit {
    pub train: LabeledCorpus,
    pub test: LabeledCorpus,
    pub model: ClassifierModel,
    pub report: EvalReport,
}

/// Stratified split, train on one side, evaluate on the other.
pub fn train_and_evaluate(
    labeled: &LabeledCorpus,
    resources: &Resources,
    config: &TrainConfig,
    test_fraction: f64,
    seed: u64,
) -> Result<TrainedSplit, PipelineError> {
    let (train_part, test_part) = split(labeled, test_fraction, seed)?;
    let set = training_set(&train_part, Featurizer::new(&resources.stopwords));
    let model = train(&set, config)?;
    let report = evaluate(&model, &test_examples(&model, &test_part))?;
    Ok(TrainedSplit {
        train: train_part,
        test: test_part,
        model,
        report,
    })
}
