//! Static word resources: the emotion-words set (words and emoticons), degree
//! words, location areas and the synonym graph used to grow the word set.

mod degree;
mod location;
mod thesaurus;

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stem::stem;

pub use degree::{DegreeWordEntry, DegreeWords};
pub use location::{LocationArea, LocationAreas};
pub use thesaurus::{build_candidates, parse_seed_pairs, Candidate, ThesaurusGraph};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: duplicate entry for `{key}`")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: unknown token `{token}`")]
    UnknownToken { line: usize, token: String },
    #[error("seed list is empty")]
    NoSeeds,
    #[error("max depth must be at least 1, got {0}")]
    InvalidDepth(usize),
}

impl LexiconError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        LexiconError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// The six emotion categories, in canonical order. The order is used for
/// every tie-break and for the position of each component in serialized
/// score arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EmotionCategory {
    Happiness,
    Sadness,
    Fear,
    Anger,
    Surprise,
    Disgust,
}

impl EmotionCategory {
    pub const ALL: [EmotionCategory; 6] = [
        EmotionCategory::Happiness,
        EmotionCategory::Sadness,
        EmotionCategory::Fear,
        EmotionCategory::Anger,
        EmotionCategory::Surprise,
        EmotionCategory::Disgust,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            EmotionCategory::Happiness => "HAPPINESS",
            EmotionCategory::Sadness => "SADNESS",
            EmotionCategory::Fear => "FEAR",
            EmotionCategory::Anger => "ANGER",
            EmotionCategory::Surprise => "SURPRISE",
            EmotionCategory::Disgust => "DISGUST",
        }
    }
}

impl fmt::Display for EmotionCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EmotionCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IntensityCategory {
    Strong,
    Medium,
    Light,
}

impl IntensityCategory {
    pub const ALL: [IntensityCategory; 3] = [
        IntensityCategory::Strong,
        IntensityCategory::Medium,
        IntensityCategory::Light,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntensityCategory::Strong => "STRONG",
            IntensityCategory::Medium => "MEDIUM",
            IntensityCategory::Light => "LIGHT",
        }
    }
}

impl fmt::Display for IntensityCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntensityCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| s.to_string())
    }
}

/// Effect of a degree word on the emotion word it modifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DegreeIntensity {
    #[serde(rename = "H")]
    High,
    #[serde(rename = "L")]
    Low,
    #[serde(rename = "N")]
    Negation,
    /// No degree word attached.
    #[serde(rename = "NONE")]
    Absent,
}

impl DegreeIntensity {
    pub const ALL: [DegreeIntensity; 4] = [
        DegreeIntensity::High,
        DegreeIntensity::Low,
        DegreeIntensity::Negation,
        DegreeIntensity::Absent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DegreeIntensity::High => "H",
            DegreeIntensity::Low => "L",
            DegreeIntensity::Negation => "N",
            DegreeIntensity::Absent => "NONE",
        }
    }
}

impl fmt::Display for DegreeIntensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DegreeIntensity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EntryKind {
    Word,
    Emoticon,
}

impl EntryKind {
    pub fn name(self) -> &'static str {
        match self {
            EntryKind::Word => "WORD",
            EntryKind::Emoticon => "EMOTICON",
        }
    }
}

impl FromStr for EntryKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "WORD" => Ok(EntryKind::Word),
            "EMOTICON" => Ok(EntryKind::Emoticon),
            _ => Err(s.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub surface: String,
    /// Stemmed lowercase form for words, the literal surface for emoticons.
    pub lemma: String,
    pub kind: EntryKind,
    pub category: EmotionCategory,
    pub intensity: IntensityCategory,
}

/// The emotion-words set. Immutable once loaded.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: HashMap<(String, EntryKind), usize>,
    // longest first, so extraction is maximal-munch
    emoticons_by_len: Vec<usize>,
}

impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Lexicon {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| LexiconError::io(path, e))?;
        Self::parse(&text)
    }

    /// Parses `surface<TAB>category<TAB>intensity[<TAB>kind]` lines. Blank
    /// lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lexicon = Lexicon::default();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if !(3..=4).contains(&fields.len()) {
                return Err(LexiconError::Malformed {
                    line: line_no,
                    message: format!("expected 3 or 4 tab-separated fields, found {}", fields.len()),
                });
            }
            let surface = fields[0].trim();
            let category = parse_token::<EmotionCategory>(fields[1], line_no)?;
            let intensity = parse_token::<IntensityCategory>(fields[2], line_no)?;
            let kind = match fields.get(3) {
                Some(k) => parse_token::<EntryKind>(k, line_no)?,
                None => EntryKind::Word,
            };
            let entry = make_entry(surface, kind, category, intensity, line_no)?;
            lexicon.insert(entry, line_no)?;
        }
        Ok(lexicon)
    }

    fn insert(&mut self, entry: LexiconEntry, line: usize) -> Result<(), LexiconError> {
        let key = (entry.lemma.clone(), entry.kind);
        if self.index.contains_key(&key) {
            return Err(LexiconError::Duplicate {
                line,
                key: entry.lemma,
            });
        }
        let idx = self.entries.len();
        if entry.kind == EntryKind::Emoticon {
            let len = entry.surface.len();
            let pos = self
                .emoticons_by_len
                .partition_point(|&i| self.entries[i].surface.len() >= len);
            self.emoticons_by_len.insert(pos, idx);
        }
        self.index.insert(key, idx);
        self.entries.push(entry);
        Ok(())
    }

    pub fn lookup(&self, lemma: &str, kind: EntryKind) -> Option<&LexiconEntry> {
        self.index
            .get(&(lemma.to_string(), kind))
            .map(|&i| &self.entries[i])
    }

    /// Stems `word` and looks it up as a WORD entry.
    pub fn lookup_word(&self, word: &str) -> Option<&LexiconEntry> {
        self.lookup(&stem(&word.to_lowercase()), EntryKind::Word)
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    /// Emoticon entries ordered by decreasing surface length.
    pub fn emoticons_longest_first(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.emoticons_by_len.iter().map(|&i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, kind: EntryKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }

    /// Serializes back to the tab-separated file format.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.surface);
            out.push('\t');
            out.push_str(e.category.name());
            out.push('\t');
            out.push_str(e.intensity.name());
            if e.kind == EntryKind::Emoticon {
                out.push('\t');
                out.push_str(e.kind.name());
            }
            out.push('\n');
        }
        out
    }
}

fn parse_token<T: FromStr>(field: &str, line: usize) -> Result<T, LexiconError> {
    field.trim().parse().map_err(|_| LexiconError::UnknownToken {
        line,
        token: field.trim().to_string(),
    })
}

fn make_entry(
    surface: &str,
    kind: EntryKind,
    category: EmotionCategory,
    intensity: IntensityCategory,
    line: usize,
) -> Result<LexiconEntry, LexiconError> {
    if surface.is_empty() {
        return Err(LexiconError::Malformed {
            line,
            message: "empty surface form".into(),
        });
    }
    if surface.chars().any(char::is_whitespace) {
        return Err(LexiconError::Malformed {
            line,
            message: format!("surface `{surface}` contains whitespace"),
        });
    }
    let lemma = match kind {
        EntryKind::Word => {
            if !surface.chars().any(char::is_alphanumeric) {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("word `{surface}` has no letters; mark it EMOTICON"),
                });
            }
            stem(&surface.to_lowercase())
        }
        EntryKind::Emoticon => {
            if intensity == IntensityCategory::Light {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("emoticon `{surface}` must be STRONG or MEDIUM"),
                });
            }
            surface.to_string()
        }
    };
    if lemma.is_empty() {
        return Err(LexiconError::Malformed {
            line,
            message: format!("`{surface}` stems to an empty lemma"),
        });
    }
    Ok(LexiconEntry {
        surface: surface.to_string(),
        lemma,
        kind,
        category,
        intensity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = "# sample rows\n\
:O\tSURPRISE\tSTRONG\tEMOTICON\n\
Repugnance\tDISGUST\tSTRONG\n\
Delighted\tHAPPINESS\tMEDIUM\n\
Afraid\tFEAR\tSTRONG\n\
:(\tSADNESS\tSTRONG\tEMOTICON\n\
Irritated\tANGER\tSTRONG\n\
Lucky\tHAPPINESS\tLIGHT\n";

    #[test]
    fn parses_sample_rows() {
        let lex = Lexicon::parse(TABLE).unwrap();
        assert_eq!(lex.len(), 7);
        let e = lex.lookup("repugn", EntryKind::Word).unwrap();
        assert_eq!(e.category, EmotionCategory::Disgust);
        assert_eq!(e.intensity, IntensityCategory::Strong);
        let e = lex.lookup(":(", EntryKind::Emoticon).unwrap();
        assert_eq!(
            (e.category, e.intensity),
            (EmotionCategory::Sadness, IntensityCategory::Strong)
        );
        let e = lex.lookup_word("afraid").unwrap();
        assert_eq!(
            (e.category, e.intensity),
            (EmotionCategory::Fear, IntensityCategory::Strong)
        );
        let e = lex.lookup(":O", EntryKind::Emoticon).unwrap();
        assert_eq!(e.category, EmotionCategory::Surprise);
        assert!(lex.lookup_word("table").is_none());
        // emoticons never answer word lookups
        assert!(lex.lookup(":O", EntryKind::Word).is_none());
    }

    #[test]
    fn empty_file_is_empty_lexicon() {
        assert!(Lexicon::parse("").unwrap().is_empty());
        assert!(Lexicon::parse("# only a comment\n\n").unwrap().is_empty());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = Lexicon::parse("happy\tHAPPINESS\tMEDIUM\nsad SADNESS\n").unwrap_err();
        assert!(matches!(err, LexiconError::Malformed { line: 2, .. }), "{err}");
    }

    #[test]
    fn unknown_tokens_rejected() {
        let err = Lexicon::parse("happy\tJOY\tMEDIUM\n").unwrap_err();
        assert!(matches!(err, LexiconError::UnknownToken { line: 1, ref token } if token == "JOY"));
        let err = Lexicon::parse("happy\tHAPPINESS\tHUGE\n").unwrap_err();
        assert!(matches!(err, LexiconError::UnknownToken { .. }));
        let err = Lexicon::parse("happy\tHAPPINESS\tMEDIUM\tPHRASE\n").unwrap_err();
        assert!(matches!(err, LexiconError::UnknownToken { .. }));
    }

    #[test]
    fn duplicate_lemma_names_the_lemma() {
        // happiness and happily share a stem with happy
        let err = Lexicon::parse("happy\tHAPPINESS\tMEDIUM\nhappily\tSADNESS\tLIGHT\n").unwrap_err();
        match err {
            LexiconError::Duplicate { line, key } => {
                assert_eq!(line, 2);
                assert_eq!(key, "happi");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn same_text_as_word_and_emoticon_is_allowed() {
        let lex = Lexicon::parse("xd\tHAPPINESS\tLIGHT\nxd\tHAPPINESS\tSTRONG\tEMOTICON\n").unwrap();
        assert_eq!(lex.len(), 2);
    }

    #[test]
    fn light_emoticon_rejected() {
        let err = Lexicon::parse(":)\tHAPPINESS\tLIGHT\tEMOTICON\n").unwrap_err();
        assert!(matches!(err, LexiconError::Malformed { line: 1, .. }));
    }

    #[test]
    fn emoticons_ordered_longest_first() {
        let lex = Lexicon::parse(":(\tSADNESS\tSTRONG\tEMOTICON\n:((\tSADNESS\tSTRONG\tEMOTICON\n:'-(\tSADNESS\tSTRONG\tEMOTICON\n").unwrap();
        let order: Vec<_> = lex.emoticons_longest_first().map(|e| e.surface.as_str()).collect();
        assert_eq!(order, vec![":'-(", ":((", ":("]);
    }

    #[test]
    fn category_names_round_trip() {
        for c in EmotionCategory::ALL {
            assert_eq!(c.name().parse::<EmotionCategory>().unwrap(), c);
            assert_eq!(EmotionCategory::from_index(c.index()), Some(c));
        }
        for d in DegreeIntensity::ALL {
            assert_eq!(d.name().parse::<DegreeIntensity>().unwrap(), d);
        }
    }
}
