//! Bag-of-words emotion classifiers.
//!
//! Two backends share one featurizer and one output contract (a probability
//! for each of the six categories): multinomial naive Bayes over term counts
//! and a gain-ratio decision tree over word presence.

mod bayes;
mod eval;
mod persist;
mod tree;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::EmotionCategory;
use crate::stem::stem;
use crate::textpipe::{clean, tokenize_words, StopWords};

pub use bayes::NaiveBayes;
pub use eval::{evaluate, format_truncated_percent, ClassMetrics, EvalReport};
pub use persist::{load_model, save_model, MODEL_FORMAT_VERSION, MODEL_MAGIC};
pub use tree::{entropy, split_gain_ratio, DecisionTree, SplitScore, TreeNode};

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("test set is empty")]
    EmptyTestSet,
    #[error("invalid tree parameters: {0}")]
    InvalidParams(String),
    #[error("model file I/O")]
    Io(#[from] std::io::Error),
    #[error("corrupt model file: {0}")]
    Corrupt(String),
    #[error("unsupported model format version {found} (this build reads {supported})")]
    Version { found: u32, supported: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Backend {
    #[serde(alias = "bayes")]
    Bayes,
    #[serde(alias = "tree")]
    Tree,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Bayes => "BAYES",
            Backend::Tree => "TREE",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "BAYES" | "NB" => Ok(Backend::Bayes),
            "TREE" | "C45" | "J48" => Ok(Backend::Tree),
            _ => Err(format!("unknown backend `{s}` (expected bayes or tree)")),
        }
    }
}

/// Sparse term counts keyed by vocabulary index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeatureVector(BTreeMap<u32, u32>);

impl FeatureVector {
    pub fn from_counts(counts: BTreeMap<u32, u32>) -> Self {
        Self(counts.into_iter().filter(|&(_, c)| c > 0).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn get(&self, index: u32) -> u32 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn contains(&self, index: u32) -> bool {
        self.0.contains_key(&index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sorted list of stems seen during training.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<String>", into = "Vec<String>")]
pub struct Vocabulary {
    words: Vec<String>,
    index: HashMap<String, u32>,
}

impl From<Vec<String>> for Vocabulary {
    fn from(mut words: Vec<String>) -> Self {
        words.sort();
        words.dedup();
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        Self { words, index }
    }
}

impl From<Vocabulary> for Vec<String> {
    fn from(v: Vocabulary) -> Self {
        v.words
    }
}

impl Vocabulary {
    pub fn get(&self, term: &str) -> Option<u32> {
        self.index.get(term).copied()
    }

    pub fn word(&self, index: u32) -> Option<&str> {
        self.words.get(index as usize).map(String::as_str)
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Text to terms: clean, lowercase, tokenize, drop stop-words, stem. The
/// same configuration is stored inside every trained model.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Featurizer {
    stopwords: Vec<String>,
    #[serde(skip)]
    lookup: BTreeSet<String>,
}

impl Featurizer {
    pub fn new(stopwords: &StopWords) -> Self {
        Self::from_list(stopwords.iter().map(str::to_string).collect())
    }

    fn from_list(mut stopwords: Vec<String>) -> Self {
        stopwords.sort();
        stopwords.dedup();
        let lookup = stopwords.iter().cloned().collect();
        Self { stopwords, lookup }
    }

    pub(crate) fn rebuild(self) -> Self {
        Self::from_list(self.stopwords)
    }

    pub fn terms(&self, text: &str) -> Vec<String> {
        let lower = clean(text).to_lowercase();
        tokenize_words(&lower)
            .into_iter()
            .filter(|w| !self.lookup.contains(*w))
            .map(stem)
            .filter(|s| !s.is_empty())
            .collect()
    }

    /// Counts of in-vocabulary terms; unknown terms are dropped.
    pub fn featurize(&self, text: &str, vocabulary: &Vocabulary) -> FeatureVector {
        let mut counts = BTreeMap::new();
        for term in self.terms(text) {
            if let Some(i) = vocabulary.get(&term) {
                *counts.entry(i).or_insert(0) += 1;
            }
        }
        FeatureVector(counts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledExample {
    pub features: FeatureVector,
    pub label: EmotionCategory,
}

/// Featurized examples plus the vocabulary and featurizer that produced them.
#[derive(Debug, Clone)]
pub struct TrainingSet {
    pub featurizer: Featurizer,
    pub vocabulary: Vocabulary,
    pub examples: Vec<LabeledExample>,
}

impl TrainingSet {
    /// Builds the vocabulary from `texts` and featurizes each one.
    pub fn from_texts<'a, I>(featurizer: Featurizer, texts: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, EmotionCategory)>,
    {
        let tokenized: Vec<(Vec<String>, EmotionCategory)> = texts
            .into_iter()
            .map(|(t, label)| (featurizer.terms(t), label))
            .collect();
        let vocabulary = Vocabulary::from(
            tokenized
                .iter()
                .flat_map(|(terms, _)| terms.iter().cloned())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>(),
        );
        let examples = tokenized
            .into_iter()
            .map(|(terms, label)| {
                let mut counts = BTreeMap::new();
                for t in terms {
                    let i = vocabulary.get(&t).expect("term was added to the vocabulary");
                    *counts.entry(i).or_insert(0) += 1;
                }
                LabeledExample {
                    features: FeatureVector(counts),
                    label,
                }
            })
            .collect();
        Self {
            featurizer,
            vocabulary,
            examples,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeParams {
    pub max_depth: usize,
    pub min_leaf: usize,
}

impl Default for TreeParams {
    fn default() -> Self {
        Self {
            max_depth: 64,
            min_leaf: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrainConfig {
    pub backend: Backend,
    pub tree: TreeParams,
}

impl TrainConfig {
    pub fn new(backend: Backend) -> Self {
        Self {
            backend,
            tree: TreeParams::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModelParams {
    Bayes(NaiveBayes),
    Tree(DecisionTree),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierModel {
    pub featurizer: Featurizer,
    pub vocabulary: Vocabulary,
    pub params: ModelParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierOutput {
    pub distribution: [f64; 6],
    pub labeled_category: EmotionCategory,
}

impl ClassifierOutput {
    /// Labels the distribution with its argmax, first category wins ties.
    pub fn from_distribution(distribution: [f64; 6]) -> Self {
        let mut best = 0;
        for i in 1..6 {
            if distribution[i] > distribution[best] {
                best = i;
            }
        }
        Self {
            distribution,
            labeled_category: EmotionCategory::ALL[best],
        }
    }
}

pub fn train(set: &TrainingSet, config: &TrainConfig) -> Result<ClassifierModel, ClassifierError> {
    if set.examples.is_empty() {
        return Err(ClassifierError::EmptyTrainingSet);
    }
    let params = match config.backend {
        Backend::Bayes => ModelParams::Bayes(NaiveBayes::fit(&set.examples, set.vocabulary.len())),
        Backend::Tree => ModelParams::Tree(DecisionTree::fit(
            &set.examples,
            set.vocabulary.len(),
            config.tree,
        )?),
    };
    Ok(ClassifierModel {
        featurizer: set.featurizer.clone(),
        vocabulary: set.vocabulary.clone(),
        params,
    })
}

impl ClassifierModel {
    pub fn backend(&self) -> Backend {
        match self.params {
            ModelParams::Bayes(_) => Backend::Bayes,
            ModelParams::Tree(_) => Backend::Tree,
        }
    }

    pub fn predict(&self, text: &str) -> ClassifierOutput {
        let features = self.featurizer.featurize(text, &self.vocabulary);
        self.predict_features(&features)
    }

    pub fn predict_features(&self, features: &FeatureVector) -> ClassifierOutput {
        let distribution = match &self.params {
            ModelParams::Bayes(nb) => nb.distribution(features),
            ModelParams::Tree(t) => t.distribution(features),
        };
        ClassifierOutput::from_distribution(distribution)
    }

    /// Training-class priors, the answer when a text carries no evidence.
    pub fn priors(&self) -> [f64; 6] {
        match &self.params {
            ModelParams::Bayes(nb) => nb.priors(),
            ModelParams::Tree(t) => t.priors(),
        }
    }
}

pub(crate) fn normalize(weights: [f64; 6]) -> [f64; 6] {
    let total: f64 = weights.iter().sum();
    if total <= 0.0 || !total.is_finite() {
        return [1.0 / 6.0; 6];
    }
    weights.map(|w| w / total)
}
