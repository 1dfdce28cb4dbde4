use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use crate::lexicon::{EmotionCategory, EntryKind, Lexicon};
use crate::stem::stem;
use crate::textpipe::{clean, extract_emoticons, tokenize_words};

use super::{Corpus, DatasetError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub surface: String,
    pub kind: EntryKind,
    /// Stem for words, the literal surface for emoticons.
    pub key: String,
}

/// Seed words and emoticons per category, checked against a lexicon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedWordSet {
    seeds: BTreeMap<EmotionCategory, Vec<Seed>>,
}

impl SeedWordSet {
    pub fn load(path: impl AsRef<Path>, lexicon: &Lexicon) -> Result<Self, DatasetError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
        Self::parse(&text, lexicon)
    }

    /// Parses `surface<TAB>CATEGORY` lines. A seed is an emoticon when the
    /// lexicon has an emoticon with that exact surface, otherwise a word.
    /// Either way the lexicon entry must exist and agree on the category.
    pub fn parse(text: &str, lexicon: &Lexicon) -> Result<Self, DatasetError> {
        let mut seeds: BTreeMap<EmotionCategory, Vec<Seed>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            if fields.len() != 2 {
                return Err(DatasetError::Malformed {
                    record: line,
                    message: format!("expected 2 tab-separated fields, found {}", fields.len()),
                });
            }
            let surface = fields[0].trim();
            let category: EmotionCategory =
                fields[1].trim().parse().map_err(|_| DatasetError::Malformed {
                    record: line,
                    message: format!("unknown category `{}`", fields[1].trim()),
                })?;
            let (entry, kind, key) = match lexicon.lookup(surface, EntryKind::Emoticon) {
                Some(e) => (Some(e), EntryKind::Emoticon, surface.to_string()),
                None => {
                    let key = stem(&surface.to_lowercase());
                    (lexicon.lookup(&key, EntryKind::Word), EntryKind::Word, key)
                }
            };
            let entry = entry.ok_or_else(|| DatasetError::UnknownSeed {
                line,
                seed: surface.to_string(),
            })?;
            if entry.category != category {
                return Err(DatasetError::SeedCategory {
                    line,
                    seed: surface.to_string(),
                    lexicon: entry.category,
                });
            }
            if !seen.insert((kind, key.clone())) {
                return Err(DatasetError::Malformed {
                    record: line,
                    message: format!("duplicate seed `{surface}`"),
                });
            }
            seeds.entry(category).or_default().push(Seed {
                surface: surface.to_string(),
                kind,
                key,
            });
        }
        if let Some(&missing) = EmotionCategory::ALL.iter().find(|c| !seeds.contains_key(c)) {
            return Err(DatasetError::MissingSeeds(missing));
        }
        Ok(Self { seeds })
    }

    pub fn get(&self, category: EmotionCategory) -> &[Seed] {
        self.seeds.get(&category).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EmotionCategory, &Seed)> {
        self.seeds
            .iter()
            .flat_map(|(&c, list)| list.iter().map(move |s| (c, s)))
    }

    pub fn len(&self) -> usize {
        self.seeds.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the text carries any seed: emoticons must match a lexicon
    /// emoticon exactly (longest match wins), words are compared by stem.
    pub fn matches(&self, text: &str, lexicon: &Lexicon) -> bool {
        let (rest, emoticons) = extract_emoticons(&clean(text), lexicon);
        let emoticon_keys: BTreeSet<&str> = emoticons.iter().map(|h| h.lemma.as_str()).collect();
        let lower = rest.to_lowercase();
        let stems: BTreeSet<String> = tokenize_words(&lower).into_iter().map(stem).collect();
        self.iter().any(|(_, seed)| match seed.kind {
            EntryKind::Emoticon => emoticon_keys.contains(seed.key.as_str()),
            EntryKind::Word => stems.contains(&seed.key),
        })
    }
}

/// Keeps the documents that carry at least one seed, in corpus order.
pub fn select_by_seeds(corpus: &Corpus, seeds: &SeedWordSet, lexicon: &Lexicon) -> Corpus {
    Corpus {
        documents: corpus
            .documents
            .iter()
            .filter(|d| seeds.matches(&d.text, lexicon))
            .cloned()
            .collect(),
        duplicates_dropped: 0,
    }
}
