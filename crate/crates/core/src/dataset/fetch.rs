use std::error::Error;
use std::path::PathBuf;

use crate::textpipe::Document;

use super::{parse_records, Corpus, DatasetError};

pub type FetchError = Box<dyn Error + Send + Sync>;

/// Source of raw documents for a query. Only a file-backed implementation
/// ships; a networked one would plug in here.
pub trait Fetcher {
    fn fetch(&self, query: &str) -> Result<Vec<Document>, FetchError>;
}

/// Serves the documents of a corpus file. A document is returned when its
/// text contains any whitespace-separated query term, ignoring case; an
/// empty query returns everything.
#[derive(Debug, Clone)]
pub struct FileFetcher {
    path: PathBuf,
}

impl FileFetcher {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into() }
    }
}

impl Fetcher for FileFetcher {
    fn fetch(&self, query: &str) -> Result<Vec<Document>, FetchError> {
        let text = std::fs::read_to_string(&self.path)?;
        let terms: Vec<String> = query.split_whitespace().map(str::to_lowercase).collect();
        Ok(parse_records(&text)?
            .into_iter()
            .filter(|d| {
                let lower = d.text.to_lowercase();
                terms.is_empty() || terms.iter().any(|t| lower.contains(t.as_str()))
            })
            .collect())
    }
}

/// Fetches and then applies the same id check and retweet removal as
/// [`super::ingest`].
pub fn fetch_remote(query: &str, fetcher: &dyn Fetcher) -> Result<Corpus, DatasetError> {
    let docs = fetcher.fetch(query).map_err(|source| DatasetError::Fetch {
        query: query.to_string(),
        source,
    })?;
    Corpus::from_documents(docs)
}
