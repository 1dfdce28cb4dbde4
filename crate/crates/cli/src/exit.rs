//! Exit codes and the mapping from library errors onto them.

use std::io::ErrorKind;

use emotion_core::classifier::ClassifierError;
use emotion_core::config::ConfigError;
use emotion_core::dataset::DatasetError;
use emotion_core::lexicon::LexiconError;
use emotion_core::pipeline::PipelineError;
use emotion_core::report::ReportError;

pub const IO: u8 = 1;
pub const MISSING: u8 = 2;
pub const EMPTY: u8 = 3;
pub const INVALID: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Self {
            code,
            error: error.into(),
        }
    }

    pub fn msg(code: u8, message: impl Into<String>) -> Self {
        Self::new(code, anyhow::anyhow!(message.into()))
    }

    pub fn context(mut self, context: impl Into<String>) -> Self {
        self.error = self.error.context(context.into());
        self
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

fn io_code(kind: ErrorKind, missing: u8) -> u8 {
    if kind == ErrorKind::NotFound {
        missing
    } else {
        IO
    }
}

/// A missing lexicon, stop-word or pronoun file is a missing resource; any
/// other read failure is plain I/O.
impl From<LexiconError> for Failure {
    fn from(e: LexiconError) -> Self {
        let code = match &e {
            LexiconError::Io { source, .. } => io_code(source.kind(), MISSING),
            _ => INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<ClassifierError> for Failure {
    fn from(e: ClassifierError) -> Self {
        let code = match &e {
            ClassifierError::Io(source) => io_code(source.kind(), MISSING),
            _ => INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<DatasetError> for Failure {
    fn from(e: DatasetError) -> Self {
        let code = match &e {
            DatasetError::Io { .. } => IO,
            _ => INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Dataset(e) => e.into(),
            PipelineError::Classifier(e) => e.into(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        let code = match &e {
            ConfigError::Io { .. } => IO,
            _ => INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        let code = match &e {
            ReportError::NoTimestamps | ReportError::NoKnownLocations | ReportError::NoEmotion => {
                EMPTY
            }
            ReportError::InvalidBucket | ReportError::Scoring(_) => INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<emotion_core::scoring::ScoringError> for Failure {
    fn from(e: emotion_core::scoring::ScoringError) -> Self {
        Failure::new(INVALID, e)
    }
}
