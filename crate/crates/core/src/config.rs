//! Run configuration, read from a TOML file of `key = value` lines. Every
//! key is optional; missing keys take the defaults below.
//!
//! ```toml
//! data_dir = "data"          # resource directory (lexicon.tsv, ...)
//! lexicon = "my_lexicon.tsv" # overrides data_dir/lexicon.tsv
//! stopwords = "stop.txt"
//! pronouns = "pronouns/"     # directory with the three pronoun lists
//! seeds = "seeds.tsv"
//! corpus = "corpus.jsonl"
//! model = "emotion.model"
//! purity_threshold = 70.0
//! degree_window = 3
//! classifier_weight = 0.2
//! surety_normalizer = 60.0
//! hits_saturation = 5
//! backend = "bayes"
//! seed = 42
//! test_fraction = 0.2
//! max_depth = 64
//! min_leaf = 2
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{Backend, TrainConfig, TreeParams};
use crate::dataset::DEFAULT_PURITY_THRESHOLD;
use crate::hybrid::{
    HybridConfig, DEFAULT_CLASSIFIER_WEIGHT, DEFAULT_HITS_SATURATION, DEFAULT_SURETY_NORMALIZER,
};
use crate::lexicon::{Lexicon, LexiconError};
use crate::resources::{Resources, PRONOUN_FILES};
use crate::textpipe::{Pronouns, StopWords, TextConfig, DEFAULT_DEGREE_WINDOW};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TEST_FRACTION: f64 = 0.2;
pub const MAX_DEGREE_WINDOW: usize = 20;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config syntax: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("`{key}` {message}")]
    Invalid { key: &'static str, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub data_dir: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub pronouns: Option<PathBuf>,
    pub seeds: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub model: Option<PathBuf>,
    pub purity_threshold: f64,
    pub degree_window: usize,
    pub classifier_weight: f64,
    pub surety_normalizer: f64,
    pub hits_saturation: u32,
    pub backend: Backend,
    pub seed: u64,
    pub test_fraction: f64,
    pub max_depth: usize,
    pub min_leaf: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let tree = TreeParams::default();
        Self {
            data_dir: None,
            lexicon: None,
            stopwords: None,
            pronouns: None,
            seeds: None,
            corpus: None,
            model: None,
            purity_threshold: DEFAULT_PURITY_THRESHOLD,
            degree_window: DEFAULT_DEGREE_WINDOW,
            classifier_weight: DEFAULT_CLASSIFIER_WEIGHT,
            surety_normalizer: DEFAULT_SURETY_NORMALIZER,
            hits_saturation: DEFAULT_HITS_SATURATION,
            backend: Backend::Bayes,
            seed: DEFAULT_SEED,
            test_fraction: DEFAULT_TEST_FRACTION,
            max_depth: tree.max_depth,
            min_leaf: tree.min_leaf,
        }
    }
}

fn invalid(key: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError::Invalid {
        key,
        message: message.into(),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let config: RunConfig = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let t = self.purity_threshold;
        if !(t > 0.0 && t <= 100.0) {
            return Err(invalid("purity_threshold", format!("must be in (0, 100], got {t}")));
        }
        if self.degree_window > MAX_DEGREE_WINDOW {
            return Err(invalid(
                "degree_window",
                format!("must be at most {MAX_DEGREE_WINDOW}, got {}", self.degree_window),
            ));
        }
        let w = self.classifier_weight;
        if !(0.0..=1.0).contains(&w) {
            return Err(invalid("classifier_weight", format!("must be in [0, 1], got {w}")));
        }
        let n = self.surety_normalizer;
        if !(n > 0.0 && n.is_finite()) {
            return Err(invalid("surety_normalizer", format!("must be positive, got {n}")));
        }
        if self.hits_saturation == 0 {
            return Err(invalid("hits_saturation", "must be at least 1"));
        }
        let f = self.test_fraction;
        if !(f > 0.0 && f < 1.0) {
            return Err(invalid("test_fraction", format!("must be in (0, 1), got {f}")));
        }
        if self.max_depth == 0 {
            return Err(invalid("max_depth", "must be at least 1"));
        }
        if self.min_leaf == 0 {
            return Err(invalid("min_leaf", "must be at least 1"));
        }
        Ok(())
    }

    /// Built-in resources, replaced file by file from `data_dir`, then by
    /// the explicit lexicon, stop-word and pronoun paths.
    pub fn resources(&self) -> Result<Resources, LexiconError> {
        let mut res = match &self.data_dir {
            Some(dir) => Resources::from_dir(dir)?,
            None => Resources::builtin(),
        };
        if let Some(p) = &self.lexicon {
            res.lexicon = Lexicon::load(p)?;
        }
        if let Some(p) = &self.stopwords {
            res.stopwords = StopWords::load(p)?;
        }
        if let Some(dir) = &self.pronouns {
            res.pronouns = Pronouns::load(
                dir.join(PRONOUN_FILES[0]),
                dir.join(PRONOUN_FILES[1]),
                dir.join(PRONOUN_FILES[2]),
            )?;
        }
        Ok(res)
    }

    pub fn text_config(&self) -> TextConfig {
        TextConfig {
            degree_window: self.degree_window,
        }
    }

    pub fn hybrid_config(&self) -> HybridConfig {
        HybridConfig {
            classifier_weight: self.classifier_weight,
            surety_normalizer: self.surety_normalizer,
            hits_saturation: self.hits_saturation,
        }
    }

    pub fn train_config(&self) -> TrainConfig {
        TrainConfig {
            backend: self.backend,
            tree: TreeParams {
                max_depth: self.max_depth,
                min_leaf: self.min_leaf,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        let c = RunConfig::parse("").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(c.purity_threshold, 70.0);
        assert_eq!(c.hybrid_config(), HybridConfig::default());
        assert_eq!(c.text_config(), TextConfig::default());
    }

    #[test]
    fn documented_example_parses() {
        let doc = include_str!("config.rs");
        let example: String = doc
            .lines()
            .skip_while(|l| !l.starts_with("//! ```toml"))
            .skip(1)
            .take_while(|l| !l.starts_with("//! ```"))
            .map(|l| l.trim_start_matches("//!").trim_start().to_string() + "\n")
            .collect();
        let c = RunConfig::parse(&example).unwrap();
        assert_eq!(c.backend, Backend::Bayes);
        assert_eq!(c.model.as_deref(), Some(Path::new("emotion.model")));
        assert_eq!(c.train_config().tree, TreeParams::default());
    }

    #[test]
    fn backend_names() {
        assert_eq!(RunConfig::parse("backend = \"tree\"").unwrap().backend, Backend::Tree);
        assert_eq!(RunConfig::parse("backend = \"BAYES\"").unwrap().backend, Backend::Bayes);
        assert!(RunConfig::parse("backend = \"svm\"").is_err());
    }

    #[test]
    fn out_of_range_values_rejected() {
        for (text, key) in [
            ("purity_threshold = 0.0", "purity_threshold"),
            ("purity_threshold = 100.5", "purity_threshold"),
            ("degree_window = 99", "degree_window"),
            ("classifier_weight = -0.1", "classifier_weight"),
            ("surety_normalizer = 0.0", "surety_normalizer"),
            ("hits_saturation = 0", "hits_saturation"),
            ("test_fraction = 1.0", "test_fraction"),
            ("max_depth = 0", "max_depth"),
            ("min_leaf = 0", "min_leaf"),
        ] {
            match RunConfig::parse(text) {
                Err(ConfigError::Invalid { key: k, .. }) => assert_eq!(k, key),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(RunConfig::parse("colour = 1"), Err(ConfigError::Parse(_))));
        assert!(matches!(RunConfig::parse("seed = \"x\""), Err(ConfigError::Parse(_))));
    }

    #[test]
    fn resource_overrides() {
        let dir = tempfile::tempdir().unwrap();
        let lex = dir.path().join("tiny.tsv");
        fs::write(&lex, "glee\tHAPPINESS\tSTRONG\n").unwrap();
        let c = RunConfig {
            lexicon: Some(lex),
            ..RunConfig::default()
        };
        assert_eq!(c.resources().unwrap().lexicon.len(), 1);
        let missing = RunConfig {
            lexicon: Some(dir.path().join("nope.tsv")),
            ..RunConfig::default()
        };
        assert!(matches!(missing.resources(), Err(LexiconError::Io { .. })));
    }
}
