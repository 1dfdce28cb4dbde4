//! Raw text to annotated hits: cleaning, emoticon extraction, segmentation,
//! person resolution and degree-word attachment.
//!
//! Person and degree detection use shallow heuristics instead of a
//! dependency parser. The subject of a hit is the nearest pronoun or
//! proper-like token to its left (first person if none). The degree of a hit
//! comes from degree words among the `degree_window` content tokens before
//! it, where stop-words do not count toward the window.

mod wordlists;

use std::fmt;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::lexicon::{
    DegreeIntensity, DegreeWords, EmotionCategory, EntryKind, IntensityCategory, Lexicon,
};
use crate::resources::Resources;
use crate::stem::stem;

pub use wordlists::{Pronouns, StopWords};

pub const DEFAULT_DEGREE_WINDOW: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<DateTime<Utc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub location: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub author: Option<String>,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: text.into(),
            timestamp: None,
            location: None,
            author: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub stem: String,
    pub sentence_index: usize,
    pub token_index: usize,
    pub is_stopword: bool,
    /// Capitalized, not sentence-initial, not a pronoun and not all caps.
    pub is_proper_like: bool,
}

impl Token {
    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Person {
    First,
    Second,
    Third,
}

impl Person {
    pub const ALL: [Person; 3] = [Person::First, Person::Second, Person::Third];
}

impl fmt::Display for Person {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Person::First => "FIRST",
            Person::Second => "SECOND",
            Person::Third => "THIRD",
        })
    }
}

/// A matched emotion word or emoticon with its scoring features.
///
/// For WORD hits the position is (sentence, token) in the segmented text.
/// EMOTICON hits are found before segmentation: their `sentence_index` is 0
/// and `token_index` is the byte offset of the match in the cleaned text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub lemma: String,
    pub kind: EntryKind,
    pub category: EmotionCategory,
    pub intensity: IntensityCategory,
    pub degree: DegreeIntensity,
    pub person: Person,
    pub sentence_index: usize,
    pub token_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TextConfig {
    pub degree_window: usize,
}

impl Default for TextConfig {
    fn default() -> Self {
        Self {
            degree_window: DEFAULT_DEGREE_WINDOW,
        }
    }
}

/// Strips links, hashtags, mentions, leading `RT` markers and words with
/// non-ASCII characters, then normalizes whitespace. Curly apostrophes are
/// straightened first so contractions survive.
pub fn clean(text: &str) -> String {
    let text = text.replace(['\u{2018}', '\u{2019}'], "'");
    let mut kept: Vec<&str> = Vec::new();
    for tok in text.split_whitespace() {
        if kept.is_empty() && (tok == "RT" || tok == "RT:") {
            continue;
        }
        let lower = tok.to_ascii_lowercase();
        if lower.starts_with("http://") || lower.starts_with("https://") || lower.starts_with("www.")
        {
            continue;
        }
        if tok.starts_with('#') || tok.starts_with('@') {
            continue;
        }
        if !tok.is_ascii() {
            continue;
        }
        kept.push(tok);
    }
    kept.join(" ")
}

/// Pulls every lexicon emoticon out of `text`, longest match first at each
/// position. An emoticon that begins (ends) with a letter or digit must not
/// be glued to a preceding (following) letter or digit, so `XD` is not found
/// inside `XDA`.
pub fn extract_emoticons(text: &str, lexicon: &Lexicon) -> (String, Vec<Hit>) {
    let mut hits = Vec::new();
    let mut rest = String::with_capacity(text.len());
    let mut pos = 0;
    let mut prev: Option<char> = None;
    'scan: while pos < text.len() {
        let tail = &text[pos..];
        for entry in lexicon.emoticons_longest_first() {
            let surface = entry.surface.as_str();
            if !tail.starts_with(surface) || !emoticon_boundary_ok(surface, prev, tail) {
                continue;
            }
            hits.push(Hit {
                lemma: entry.lemma.clone(),
                kind: EntryKind::Emoticon,
                category: entry.category,
                intensity: entry.intensity,
                degree: DegreeIntensity::Absent,
                person: Person::First,
                sentence_index: 0,
                token_index: pos,
            });
            rest.push(' ');
            pos += surface.len();
            prev = surface.chars().last();
            continue 'scan;
        }
        let c = tail.chars().next().expect("pos is on a char boundary");
        rest.push(c);
        prev = Some(c);
        pos += c.len_utf8();
    }
    (rest.split_whitespace().collect::<Vec<_>>().join(" "), hits)
}

fn emoticon_boundary_ok(surface: &str, prev: Option<char>, tail: &str) -> bool {
    let first = surface.chars().next().unwrap_or(' ');
    let last = surface.chars().last().unwrap_or(' ');
    if first.is_alphanumeric() && prev.is_some_and(char::is_alphanumeric) {
        return false;
    }
    let next = tail[surface.len()..].chars().next();
    if last.is_alphanumeric() && next.is_some_and(char::is_alphanumeric) {
        return false;
    }
    true
}

/// Splits on runs of whitespace and punctuation, keeping in-word apostrophes.
pub fn tokenize_words(text: &str) -> Vec<&str> {
    text.split(|c: char| !(c.is_alphanumeric() || c == '\''))
        .map(|t| t.trim_matches('\''))
        .filter(|t| !t.is_empty())
        .collect()
}

/// Sentences split on `.`, `!` and `?`; empty sentences are dropped.
pub fn segment(text: &str, stopwords: &StopWords, pronouns: &Pronouns) -> Vec<Vec<Token>> {
    text.split(['.', '!', '?'])
        .map(tokenize_words)
        .filter(|words| !words.is_empty())
        .enumerate()
        .map(|(sentence_index, words)| {
            words
                .into_iter()
                .enumerate()
                .map(|(token_index, surface)| {
                    let lower = surface.to_lowercase();
                    let is_proper_like = token_index > 0
                        && pronouns.person_of(&lower).is_none()
                        && looks_proper(surface);
                    Token {
                        surface: surface.to_string(),
                        stem: stem(&lower),
                        sentence_index,
                        token_index,
                        is_stopword: stopwords.contains(&lower),
                        is_proper_like,
                    }
                })
                .collect()
        })
        .collect()
}

fn looks_proper(surface: &str) -> bool {
    let mut chars = surface.chars();
    chars.next().is_some_and(char::is_uppercase) && chars.any(char::is_lowercase)
}

/// Person of the nearest subject-like token left of `hit_position`; FIRST
/// when there is none.
pub fn resolve_person(sentence: &[Token], hit_position: usize, pronouns: &Pronouns) -> Person {
    let end = hit_position.min(sentence.len());
    for tok in sentence[..end].iter().rev() {
        if let Some(p) = pronouns.person_of(&tok.lower()) {
            return p;
        }
        if tok.is_proper_like {
            return Person::Third;
        }
    }
    Person::First
}

/// Degree of the nearest degree word within `window` content tokens before
/// the hit. Degree words always count toward the window; other stop-words
/// are skipped. A negation anywhere in the window wins over H/L.
pub fn attach_degree(
    sentence: &[Token],
    hit_position: usize,
    degree_words: &DegreeWords,
    window: usize,
) -> DegreeIntensity {
    let end = hit_position.min(sentence.len());
    let mut counted = 0;
    let mut nearest = DegreeIntensity::Absent;
    for tok in sentence[..end].iter().rev() {
        if counted == window {
            break;
        }
        match degree_words.get(&tok.surface) {
            Some(DegreeIntensity::Negation) => return DegreeIntensity::Negation,
            Some(d) => {
                if nearest == DegreeIntensity::Absent {
                    nearest = d;
                }
                counted += 1;
            }
            None if tok.is_stopword => {}
            None => counted += 1,
        }
    }
    nearest
}

/// Runs the whole shallow pipeline over one text.
pub fn find_hits(text: &str, resources: &Resources, config: &TextConfig) -> Vec<Hit> {
    let cleaned = clean(text);
    let (rest, emoticon_hits) = extract_emoticons(&cleaned, &resources.lexicon);
    let mut hits = Vec::new();
    for sentence in segment(&rest, &resources.stopwords, &resources.pronouns) {
        for (pos, tok) in sentence.iter().enumerate() {
            if tok.is_stopword || tok.is_proper_like {
                continue;
            }
            let Some(entry) = resources.lexicon.lookup(&tok.stem, EntryKind::Word) else {
                continue;
            };
            hits.push(Hit {
                lemma: entry.lemma.clone(),
                kind: EntryKind::Word,
                category: entry.category,
                intensity: entry.intensity,
                degree: attach_degree(&sentence, pos, &resources.degree_words, config.degree_window),
                person: resolve_person(&sentence, pos, &resources.pronouns),
                sentence_index: tok.sentence_index,
                token_index: tok.token_index,
            });
        }
    }
    hits.extend(emoticon_hits);
    hits
}
