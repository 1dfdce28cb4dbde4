//! English suffix-stripping stemmer shared by the lexicon, the text pipeline
//! and the classifier featurizer, so matching is closed under stemming.

use std::sync::OnceLock;

use rust_stemmers::{Algorithm, Stemmer};

fn english() -> &'static Stemmer {
    static STEMMER: OnceLock<Stemmer> = OnceLock::new();
    STEMMER.get_or_init(|| Stemmer::create(Algorithm::English))
}

/// Stems a lowercase word.
///
/// Snowball English, plus one extra rule: a trailing `ili` (adverbs in
/// `-ily` after the y/i swap) loses its `li`, so `happily`, `happiness` and
/// `happy` all land on `happi`.
pub fn stem(word: &str) -> String {
    let mut s = english().stem(word).into_owned();
    if s.len() > 4 && s.ends_with("ili") {
        s.truncate(s.len() - 2);
    }
    s
}
