//! Six-category emotion analysis for short social-media text.
//!
//! A rule-based scorer (emotion lexicon, degree words, negation, person and
//! emoticons) labels a raw corpus, the purest documents train a bag-of-words
//! classifier, and the two opinions are merged into a final category with a
//! 0–6 surety value.

pub mod classifier;
pub mod config;
pub mod dataset;
pub mod hybrid;
pub mod lexicon;
pub mod pipeline;
pub mod report;
pub mod resources;
pub mod scoring;
pub mod stem;
pub mod textpipe;

pub use lexicon::{DegreeIntensity, EmotionCategory, EntryKind, IntensityCategory, Lexicon};
pub use resources::Resources;
pub use scoring::{RelScoreVector, ScoreVector};
pub use textpipe::{Document, Hit, Person, TextConfig};
