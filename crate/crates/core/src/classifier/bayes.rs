use serde::{Deserialize, Serialize};

use super::{FeatureVector, LabeledExample};

/// Multinomial naive Bayes with add-one smoothing over the vocabulary.
///
/// Only integer counts are stored; log-likelihoods are derived on demand so
/// persisted models are exact. Classes absent from training get zero prior
/// and therefore zero posterior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaiveBayes {
    vocabulary_size: usize,
    class_docs: [u64; 6],
    class_terms: [u64; 6],
    /// `term_counts[w][c]`: occurrences of term `w` in documents of class `c`.
    term_counts: Vec<[u64; 6]>,
}

impl NaiveBayes {
    pub fn fit(examples: &[LabeledExample], vocabulary_size: usize) -> Self {
        let mut nb = NaiveBayes {
            vocabulary_size,
            class_docs: [0; 6],
            class_terms: [0; 6],
            term_counts: vec![[0; 6]; vocabulary_size],
        };
        for ex in examples {
            let c = ex.label.index();
            nb.class_docs[c] += 1;
            for (w, n) in ex.features.iter() {
                nb.term_counts[w as usize][c] += u64::from(n);
                nb.class_terms[c] += u64::from(n);
            }
        }
        nb
    }

    pub fn priors(&self) -> [f64; 6] {
        let total: u64 = self.class_docs.iter().sum();
        self.class_docs.map(|n| n as f64 / total as f64)
    }

    pub fn class_docs(&self) -> [u64; 6] {
        self.class_docs
    }

    pub(crate) fn is_consistent_with(&self, vocabulary_size: usize) -> bool {
        self.vocabulary_size == vocabulary_size
            && self.term_counts.len() == vocabulary_size
            && self.class_docs.iter().sum::<u64>() > 0
    }

    /// ln P(term | class) with add-one smoothing.
    pub fn log_likelihood(&self, term: u32, class: usize) -> f64 {
        let n = self.term_counts[term as usize][class] as f64;
        let denom = self.class_terms[class] as f64 + self.vocabulary_size as f64;
        ((n + 1.0) / denom).ln()
    }

    /// Unnormalized log posterior per class; `None` for unseen classes.
    pub fn log_joint(&self, features: &FeatureVector) -> [Option<f64>; 6] {
        let priors = self.priors();
        std::array::from_fn(|c| {
            if self.class_docs[c] == 0 {
                return None;
            }
            let mut lp = priors[c].ln();
            for (w, n) in features.iter() {
                lp += f64::from(n) * self.log_likelihood(w, c);
            }
            Some(lp)
        })
    }

    pub fn distribution(&self, features: &FeatureVector) -> [f64; 6] {
        if features.is_empty() {
            return self.priors();
        }
        let joint = self.log_joint(features);
        let max = joint
            .iter()
            .flatten()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let weights = joint.map(|lp| lp.map_or(0.0, |lp| (lp - max).exp()));
        super::normalize(weights)
    }
}
