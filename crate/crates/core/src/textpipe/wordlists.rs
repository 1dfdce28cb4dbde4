use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use crate::lexicon::LexiconError;

use super::Person;

fn parse_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_lowercase)
        .collect()
}

fn read(path: &Path) -> Result<String, LexiconError> {
    fs::read_to_string(path).map_err(|e| LexiconError::io(path, e))
}

/// Lowercased stop-word list, one entry per line in its file form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopWords(BTreeSet<String>);

impl StopWords {
    pub fn parse(text: &str) -> Self {
        Self(parse_list(text))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        Ok(Self::parse(&read(path.as_ref())?))
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self(words.into_iter().map(|w| w.as_ref().to_lowercase()).collect())
    }

    /// Expects an already lowercased word.
    pub fn contains(&self, lowercase: &str) -> bool {
        self.0.contains(lowercase)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// First, second and third person pronoun lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Pronouns {
    first: BTreeSet<String>,
    second: BTreeSet<String>,
    third: BTreeSet<String>,
}

impl Pronouns {
    pub fn parse(first: &str, second: &str, third: &str) -> Self {
        Self {
            first: parse_list(first),
            second: parse_list(second),
            third: parse_list(third),
        }
    }

    pub fn load(
        first: impl AsRef<Path>,
        second: impl AsRef<Path>,
        third: impl AsRef<Path>,
    ) -> Result<Self, LexiconError> {
        Ok(Self::parse(
            &read(first.as_ref())?,
            &read(second.as_ref())?,
            &read(third.as_ref())?,
        ))
    }

    /// Expects an already lowercased word.
    pub fn person_of(&self, lowercase: &str) -> Option<Person> {
        if self.first.contains(lowercase) {
            Some(Person::First)
        } else if self.second.contains(lowercase) {
            Some(Person::Second)
        } else if self.third.contains(lowercase) {
            Some(Person::Third)
        } else {
            None
        }
    }
}
