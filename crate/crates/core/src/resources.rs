//! Bundle of every static resource the pipeline reads. The built-in bundle is
//! compiled into the library; a data directory with the same file names can
//! replace any of it.

use std::path::Path;

use crate::lexicon::{DegreeWords, Lexicon, LexiconError, LocationAreas};
use crate::textpipe::{Pronouns, StopWords};

pub const LEXICON_FILE: &str = "lexicon.tsv";
pub const DEGREE_FILE: &str = "degree_words.tsv";
pub const LOCATIONS_FILE: &str = "locations.tsv";
pub const STOPWORDS_FILE: &str = "stopwords.txt";
pub const PRONOUN_FILES: [&str; 3] = [
    "pronouns_first.txt",
    "pronouns_second.txt",
    "pronouns_third.txt",
];
pub const SEEDS_FILE: &str = "seeds.tsv";

pub mod builtin {
    pub const LEXICON: &str = include_str!("../data/lexicon.tsv");
    pub const DEGREE_WORDS: &str = include_str!("../data/degree_words.tsv");
    pub const LOCATIONS: &str = include_str!("../data/locations.tsv");
    pub const STOPWORDS: &str = include_str!("../data/stopwords.txt");
    pub const PRONOUNS_FIRST: &str = include_str!("../data/pronouns_first.txt");
    pub const PRONOUNS_SECOND: &str = include_str!("../data/pronouns_second.txt");
    pub const PRONOUNS_THIRD: &str = include_str!("../data/pronouns_third.txt");
    pub const SEEDS: &str = include_str!("../data/seeds.tsv");
    pub const THESAURUS: &str = include_str!("../data/thesaurus.tsv");
}

#[derive(Debug, Clone)]
pub struct Resources {
    pub lexicon: Lexicon,
    pub degree_words: DegreeWords,
    pub locations: LocationAreas,
    pub stopwords: StopWords,
    pub pronouns: Pronouns,
}

impl Resources {
    pub fn builtin() -> Self {
        Self {
            lexicon: Lexicon::parse(builtin::LEXICON).expect("built-in lexicon is valid"),
            degree_words: DegreeWords::parse(builtin::DEGREE_WORDS)
                .expect("built-in degree words are valid"),
            locations: LocationAreas::parse(builtin::LOCATIONS)
                .expect("built-in locations are valid"),
            stopwords: StopWords::parse(builtin::STOPWORDS),
            pronouns: Pronouns::parse(
                builtin::PRONOUNS_FIRST,
                builtin::PRONOUNS_SECOND,
                builtin::PRONOUNS_THIRD,
            ),
        }
    }

    /// Loads from `dir`, falling back to the built-in copy of each file that
    /// is not present there.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let dir = dir.as_ref();
        let mut res = Self::builtin();
        let file = |name: &str| {
            let p = dir.join(name);
            p.is_file().then_some(p)
        };
        if let Some(p) = file(LEXICON_FILE) {
            res.lexicon = Lexicon::load(p)?;
        }
        if let Some(p) = file(DEGREE_FILE) {
            res.degree_words = DegreeWords::load(p)?;
        }
        if let Some(p) = file(LOCATIONS_FILE) {
            res.locations = LocationAreas::load(p)?;
        }
        if let Some(p) = file(STOPWORDS_FILE) {
            res.stopwords = StopWords::load(p)?;
        }
        if PRONOUN_FILES.iter().all(|f| dir.join(f).is_file()) {
            res.pronouns = Pronouns::load(
                dir.join(PRONOUN_FILES[0]),
                dir.join(PRONOUN_FILES[1]),
                dir.join(PRONOUN_FILES[2]),
            )?;
        }
        Ok(res)
    }
}
