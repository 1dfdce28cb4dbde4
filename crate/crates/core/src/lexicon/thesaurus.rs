use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{EmotionCategory, LexiconError};

/// Word-to-synonyms adjacency. Keys and synonyms are lowercased.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ThesaurusGraph {
    adjacency: BTreeMap<String, Vec<String>>,
}

impl ThesaurusGraph {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| LexiconError::io(path, e))?;
        Self::parse(&text)
    }

    /// `word<TAB>synonym<TAB>synonym...`; repeated head words are merged.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut graph = ThesaurusGraph::default();
        for (n, raw) in text.lines().enumerate() {
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let mut fields = raw.split('\t').map(str::trim);
            let head = fields.next().unwrap_or_default();
            if head.is_empty() {
                return Err(LexiconError::Malformed {
                    line: n + 1,
                    message: "missing head word".into(),
                });
            }
            for syn in fields.filter(|s| !s.is_empty()) {
                graph.add_edge(head, syn);
            }
            graph.adjacency.entry(head.to_lowercase()).or_default();
        }
        Ok(graph)
    }

    pub fn add_edge(&mut self, word: &str, synonym: &str) {
        let list = self.adjacency.entry(word.to_lowercase()).or_default();
        let synonym = synonym.to_lowercase();
        if !list.contains(&synonym) {
            list.push(synonym);
        }
    }

    pub fn synonyms(&self, word: &str) -> Option<&[String]> {
        self.adjacency.get(word).map(Vec::as_slice)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.adjacency.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }
}

/// Seed pairs for candidate generation, `word<TAB>CATEGORY` per line. Unlike
/// the dataset seed set, words need not be in any lexicon yet.
pub fn parse_seed_pairs(text: &str) -> Result<Vec<(String, EmotionCategory)>, LexiconError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let raw = raw.trim_end_matches('\r');
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        if fields.len() != 2 || fields[0].is_empty() {
            return Err(LexiconError::Malformed {
                line: n + 1,
                message: "expected `word<TAB>CATEGORY`".into(),
            });
        }
        let category = fields[1].parse().map_err(|_| LexiconError::UnknownToken {
            line: n + 1,
            token: fields[1].to_string(),
        })?;
        out.push((fields[0].to_string(), category));
    }
    Ok(out)
}

/// A word proposed for the emotion-words set. Intensity is assigned by a
/// curator afterwards.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Candidate {
    pub category: EmotionCategory,
    pub depth: usize,
    pub word: String,
}

/// Depth-limited DFS over synonyms from each seed. Each reachable word is
/// reported once per category at its minimal depth. A word is re-expanded
/// only when reached again at a strictly smaller depth, which keeps cycles
/// finite and the recorded depth minimal.
pub fn build_candidates(
    thesaurus: &ThesaurusGraph,
    seeds: &[(String, EmotionCategory)],
    max_depth: usize,
) -> Result<Vec<Candidate>, LexiconError> {
    if seeds.is_empty() {
        return Err(LexiconError::NoSeeds);
    }
    if max_depth == 0 {
        return Err(LexiconError::InvalidDepth(max_depth));
    }

    let mut per_category: BTreeMap<EmotionCategory, HashMap<String, usize>> = BTreeMap::new();
    for (seed, category) in seeds {
        let best = per_category.entry(*category).or_default();
        dfs(thesaurus, &seed.to_lowercase(), 0, max_depth, best);
    }

    let mut out: Vec<Candidate> = per_category
        .into_iter()
        .flat_map(|(category, best)| {
            best.into_iter().map(move |(word, depth)| Candidate {
                category,
                depth,
                word,
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

fn dfs(
    graph: &ThesaurusGraph,
    word: &str,
    depth: usize,
    max_depth: usize,
    best: &mut HashMap<String, usize>,
) {
    match best.get(word) {
        Some(&seen) if seen <= depth => return,
        _ => {}
    }
    best.insert(word.to_string(), depth);
    if depth == max_depth {
        return;
    }
    if let Some(synonyms) = graph.synonyms(word) {
        for syn in synonyms {
            if syn != word {
                dfs(graph, syn, depth + 1, max_depth, best);
            }
        }
    }
}
