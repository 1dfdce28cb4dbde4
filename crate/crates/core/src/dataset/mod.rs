//! Corpus ingestion, seed selection, automatic labeling with the rule-based
//! scorer, and stratified train/test splitting.
//!
//! Corpus files hold one JSON object per line:
//! `{"id": "...", "text": "...", "created_at": "<RFC 3339>", "user": "...", "location": "..."}`
//! where only `id` and `text` are required and unknown fields are ignored.

mod fetch;
mod seeds;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use chrono::{DateTime, Utc};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::EmotionCategory;
use crate::resources::Resources;
use crate::scoring::{rel_score, score, RelScoreVector, ScoreVector, ScoringError};
use crate::textpipe::{clean, find_hits, Document, TextConfig};

pub use fetch::{fetch_remote, FetchError, Fetcher, FileFetcher};
pub use seeds::{select_by_seeds, Seed, SeedWordSet};

pub const DEFAULT_PURITY_THRESHOLD: f64 = 70.0;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot access {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("record {record}: {message}")]
    Malformed { record: usize, message: String },
    #[error("record {record}: duplicate id `{id}`")]
    DuplicateId { record: usize, id: String },
    #[error("line {line}: seed `{seed}` is not in the lexicon")]
    UnknownSeed { line: usize, seed: String },
    #[error("line {line}: seed `{seed}` is {lexicon} in the lexicon")]
    SeedCategory {
        line: usize,
        seed: String,
        lexicon: EmotionCategory,
    },
    #[error("no seeds for {0}")]
    MissingSeeds(EmotionCategory),
    #[error("purity threshold must be in (0, 100], got {0}")]
    InvalidThreshold(f64),
    #[error("test fraction must be strictly between 0 and 1, got {0}")]
    InvalidFraction(f64),
    #[error("{category} has {count} labeled document(s), at least 2 are needed to split")]
    TooFewMembers {
        category: EmotionCategory,
        count: usize,
    },
    #[error("fetching `{query}` failed")]
    Fetch {
        query: String,
        #[source]
        source: FetchError,
    },
    #[error(transparent)]
    Scoring(#[from] ScoringError),
}

impl DatasetError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        DatasetError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// On-disk shape of a corpus record.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Record {
    id: String,
    text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    created_at: Option<DateTime<Utc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    user: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    location: Option<String>,
}

impl From<Record> for Document {
    fn from(r: Record) -> Self {
        Document {
            id: r.id,
            text: r.text,
            timestamp: r.created_at,
            location: r.location,
            author: r.user,
        }
    }
}

impl From<&Document> for Record {
    fn from(d: &Document) -> Self {
        Record {
            id: d.id.clone(),
            text: d.text.clone(),
            created_at: d.timestamp,
            user: d.author.clone(),
            location: d.location.clone(),
        }
    }
}

/// Parses corpus lines as-is, without id checks or retweet removal. Blank
/// lines are skipped; record numbers are line numbers.
pub fn parse_records(text: &str) -> Result<Vec<Document>, DatasetError> {
    let mut docs = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(line).map_err(|e| DatasetError::Malformed {
            record: n + 1,
            message: e.to_string(),
        })?;
        docs.push(record.into());
    }
    Ok(docs)
}

/// Documents with unique ids, retweets removed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    documents: Vec<Document>,
    duplicates_dropped: usize,
}

impl Corpus {
    /// Rejects duplicate ids and drops documents whose cleaned text repeats
    /// an earlier one. Of a group of repeats the earliest timestamp is kept
    /// (untimed documents count as latest), then the first in input order.
    /// Documents that clean to nothing are never treated as repeats.
    pub fn from_documents(documents: Vec<Document>) -> Result<Self, DatasetError> {
        let mut ids = BTreeSet::new();
        for (i, d) in documents.iter().enumerate() {
            if !ids.insert(d.id.as_str()) {
                return Err(DatasetError::DuplicateId {
                    record: i + 1,
                    id: d.id.clone(),
                });
            }
        }
        let mut winner: HashMap<String, usize> = HashMap::new();
        let mut keep = vec![true; documents.len()];
        for (i, d) in documents.iter().enumerate() {
            let key = clean(&d.text);
            if key.is_empty() {
                continue;
            }
            match winner.get(&key) {
                None => {
                    winner.insert(key, i);
                }
                Some(&w) => {
                    let earlier = match (d.timestamp, documents[w].timestamp) {
                        (Some(a), Some(b)) => a < b,
                        (Some(_), None) => true,
                        _ => false,
                    };
                    if earlier {
                        keep[w] = false;
                        winner.insert(key, i);
                    } else {
                        keep[i] = false;
                    }
                }
            }
        }
        let before = documents.len();
        let documents: Vec<Document> = documents
            .into_iter()
            .zip(keep)
            .filter_map(|(d, k)| k.then_some(d))
            .collect();
        Ok(Self {
            duplicates_dropped: before - documents.len(),
            documents,
        })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn into_documents(self) -> Vec<Document> {
        self.documents
    }

    pub fn duplicates_dropped(&self) -> usize {
        self.duplicates_dropped
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for d in &self.documents {
            out.push_str(&serde_json::to_string(&Record::from(d)).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

pub fn parse_corpus(text: &str) -> Result<Corpus, DatasetError> {
    Corpus::from_documents(parse_records(text)?)
}

pub fn ingest(path: impl AsRef<Path>) -> Result<Corpus, DatasetError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
    parse_corpus(&text)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDocument {
    pub document: Document,
    pub label: EmotionCategory,
    pub rel_score: RelScoreVector,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LabeledCorpus {
    pub entries: Vec<LabeledDocument>,
}

/// Rule-based score and percentage vector of one text.
pub fn rule_scores(
    text: &str,
    resources: &Resources,
    config: &TextConfig,
) -> Result<(ScoreVector, RelScoreVector), ScoringError> {
    let s = score(&find_hits(text, resources, config))?;
    Ok((s, rel_score(&s)))
}

/// Labels each document with its rule-based argmax, keeping only documents
/// with at least one scoring hit whose top percentage is strictly above
/// `threshold`. Output order follows the corpus.
pub fn auto_label(
    corpus: &Corpus,
    resources: &Resources,
    config: &TextConfig,
    threshold: f64,
) -> Result<LabeledCorpus, DatasetError> {
    if !(threshold > 0.0 && threshold <= 100.0) {
        return Err(DatasetError::InvalidThreshold(threshold));
    }
    let scored: Vec<Result<Option<LabeledDocument>, ScoringError>> = corpus
        .documents
        .par_iter()
        .map(|doc| {
            let (s, rel) = rule_scores(&doc.text, resources, config)?;
            Ok((!s.is_zero() && rel.max() > threshold).then(|| LabeledDocument {
                document: doc.clone(),
                label: rel.argmax(),
                rel_score: rel,
            }))
        })
        .collect();
    let mut entries = Vec::new();
    for r in scored {
        entries.extend(r?);
    }
    Ok(LabeledCorpus { entries })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub counts: [u64; 6],
    pub total: u64,
}

impl ClassReport {
    pub fn from_counts(counts: [u64; 6]) -> Self {
        Self {
            counts,
            total: counts.iter().sum(),
        }
    }
}

pub fn class_report(labeled: &LabeledCorpus) -> ClassReport {
    let mut counts = [0u64; 6];
    for e in &labeled.entries {
        counts[e.label.index()] += 1;
    }
    ClassReport::from_counts(counts)
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Emotion-Category\tNo. of tweets")?;
        for (c, n) in EmotionCategory::ALL.iter().zip(self.counts) {
            writeln!(f, "{c}\t{n}")?;
        }
        writeln!(f, "Total\t{}", self.total)
    }
}

/// Stratified split. Every category needs at least two labeled documents;
/// each contributes `round(n * test_fraction)` documents to the test side,
/// clamped to `1..=n-1`. Both halves keep corpus order.
pub fn split(
    labeled: &LabeledCorpus,
    test_fraction: f64,
    seed: u64,
) -> Result<(LabeledCorpus, LabeledCorpus), DatasetError> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(DatasetError::InvalidFraction(test_fraction));
    }
    let mut by_class: [Vec<usize>; 6] = Default::default();
    for (i, e) in labeled.entries.iter().enumerate() {
        by_class[e.label.index()].push(i);
    }
    for (c, members) in EmotionCategory::ALL.iter().zip(&by_class) {
        if members.len() < 2 {
            return Err(DatasetError::TooFewMembers {
                category: *c,
                count: members.len(),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_test = vec![false; labeled.entries.len()];
    for mut members in by_class {
        let n = members.len();
        let k = ((n as f64 * test_fraction).round() as usize).clamp(1, n - 1);
        members.shuffle(&mut rng);
        for &i in &members[..k] {
            in_test[i] = true;
        }
    }
    let (mut train, mut test) = (LabeledCorpus::default(), LabeledCorpus::default());
    for (e, t) in labeled.entries.iter().zip(in_test) {
        if t { &mut test } else { &mut train }.entries.push(e.clone());
    }
    Ok((train, test))
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(text: &str) -> Option<String> {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        out.push(match chars.next()? {
            '\\' => '\\',
            't' => '\t',
            'n' => '\n',
            'r' => '\r',
            _ => return None,
        });
    }
    Some(out)
}

impl LabeledCorpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `id<TAB>LABEL<TAB>r1,...,r6<TAB>text` per line. Backslash, tab and
    /// newline in the text are escaped as `\\`, `\t`, `\n`, `\r`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let rel: Vec<String> = e.rel_score.0.iter().map(f64::to_string).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                escape(&e.document.id),
                e.label,
                rel.join(","),
                escape(&e.document.text)
            ));
        }
        out
    }

    pub fn parse_tsv(text: &str) -> Result<Self, DatasetError> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let record = n + 1;
            let bad = |message: String| DatasetError::Malformed { record, message };
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(bad(format!("expected 4 tab-separated fields, found {}", fields.len())));
            }
            let label: EmotionCategory = fields[1]
                .parse()
                .map_err(|_| bad(format!("unknown label `{}`", fields[1])))?;
            let parts: Vec<f64> = fields[2]
                .split(',')
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| bad(format!("bad relative scores `{}`", fields[2])))?;
            let rel: [f64; 6] = parts
                .try_into()
                .map_err(|_| bad("expected 6 relative scores".into()))?;
            let rel_score = RelScoreVector(rel);
            if rel_score.argmax() != label {
                return Err(bad(format!("label {label} is not the top relative score")));
            }
            let id = unescape(fields[0]).ok_or_else(|| bad("bad escape in id".into()))?;
            let text = unescape(fields[3]).ok_or_else(|| bad("bad escape in text".into()))?;
            entries.push(LabeledDocument {
                document: Document::new(id, text),
                label,
                rel_score,
            });
        }
        Ok(Self { entries })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), DatasetError> {
        let path = path.as_ref();
        fs::write(path, self.to_tsv()).map_err(|e| DatasetError::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DatasetError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
        Self::parse_tsv(&text)
    }
}
