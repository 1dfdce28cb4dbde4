use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::{DegreeIntensity, LexiconError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeWordEntry {
    pub word: String,
    pub degree: DegreeIntensity,
}

/// Words that strengthen (H), weaken (L) or negate (N) a nearby emotion word.
#[derive(Debug, Clone, Default)]
pub struct DegreeWords {
    entries: Vec<DegreeWordEntry>,
    index: HashMap<String, DegreeIntensity>,
}

impl DegreeWords {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| LexiconError::io(path, e))?;
        Self::parse(&text)
    }

    /// `word<TAB>H|L|N` per line; `#` comments.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut set = DegreeWords::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            if fields.len() != 2 {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("expected word<TAB>degree, found {} fields", fields.len()),
                });
            }
            let word = fields[0].trim().to_lowercase();
            if word.is_empty() || word.chars().any(char::is_whitespace) {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("invalid degree word `{}`", fields[0]),
                });
            }
            let degree: DegreeIntensity = fields[1]
                .trim()
                .parse()
                .ok()
                .filter(|d| *d != DegreeIntensity::Absent)
                .ok_or_else(|| LexiconError::UnknownToken {
                    line,
                    token: fields[1].trim().to_string(),
                })?;
            if set.index.contains_key(&word) {
                return Err(LexiconError::Duplicate { line, key: word });
            }
            set.index.insert(word.clone(), degree);
            set.entries.push(DegreeWordEntry { word, degree });
        }
        Ok(set)
    }

    /// Case-insensitive lookup of a surface token.
    pub fn get(&self, word: &str) -> Option<DegreeIntensity> {
        if let Some(d) = self.index.get(word) {
            return Some(*d);
        }
        self.index.get(&word.to_lowercase()).copied()
    }

    pub fn entries(&self) -> &[DegreeWordEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
