//! Merging the rule-based score with the classifier's label, and the 0–6
//! surety value attached to the final decision.

use std::ops::Index;

use serde::{Deserialize, Serialize, Serializer};

use crate::classifier::{ClassifierModel, ClassifierOutput};
use crate::lexicon::EmotionCategory;
use crate::resources::Resources;
use crate::scoring::{hit_contribution, rel_score, score, RelScoreVector, ScoreVector, ScoringError};
use crate::textpipe::{find_hits, Document, Hit, TextConfig};

pub const DEFAULT_CLASSIFIER_WEIGHT: f64 = 0.2;
pub const DEFAULT_SURETY_NORMALIZER: f64 = 60.0;
pub const DEFAULT_HITS_SATURATION: u32 = 5;
pub const MAX_SURETY: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HybridConfig {
    /// Share of the rule-based maximum added to the classifier's category.
    pub classifier_weight: f64,
    /// Score at which the magnitude factor of surety saturates.
    pub surety_normalizer: f64,
    /// Hit count at which the hit factor of surety saturates.
    pub hits_saturation: u32,
}

impl Default for HybridConfig {
    fn default() -> Self {
        Self {
            classifier_weight: DEFAULT_CLASSIFIER_WEIGHT,
            surety_normalizer: DEFAULT_SURETY_NORMALIZER,
            hits_saturation: DEFAULT_HITS_SATURATION,
        }
    }
}

/// Score after the classifier boost. Real-valued, since the boost is a
/// fraction of an integer score.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinalScore(pub [f64; 6]);

impl FinalScore {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0.0)
    }

    /// First maximal component in canonical order.
    pub fn argmax(&self) -> EmotionCategory {
        let mut best = 0;
        for i in 1..6 {
            if self.0[i] > self.0[best] {
                best = i;
            }
        }
        EmotionCategory::ALL[best]
    }
}

impl Index<EmotionCategory> for FinalScore {
    type Output = f64;

    fn index(&self, c: EmotionCategory) -> &f64 {
        &self.0[c.index()]
    }
}

/// Adds `weight * Score[Mc]` to the classifier's category `Lc`, where `Mc`
/// is the rule-based argmax. Every other component is copied unchanged.
pub fn combine(score: &ScoreVector, labeled: EmotionCategory, weight: f64) -> FinalScore {
    let mut out = FinalScore(score.0.map(|v| v as f64));
    if score.is_zero() {
        return out;
    }
    let mc = score.argmax();
    out.0[labeled.index()] += weight * score[mc] as f64;
    out
}

/// Argmax of the final score; with no rule-based evidence at all the
/// classifier's label stands.
pub fn final_category(final_score: &FinalScore, labeled: EmotionCategory) -> EmotionCategory {
    if final_score.is_zero() {
        labeled
    } else {
        final_score.argmax()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuretyInputs {
    pub classifier_label_match: bool,
    pub max_score: f64,
    /// Largest relative score, in percent.
    pub max_percent: f64,
    /// Gap between the largest and second largest relative score.
    pub second_diff: f64,
    pub hits_count: u32,
}

impl SuretyInputs {
    pub fn from_scores(
        score: &ScoreVector,
        rel: &RelScoreVector,
        labeled: EmotionCategory,
        hits_count: u32,
    ) -> Self {
        let mut sorted = rel.0;
        sorted.sort_by(|a, b| b.total_cmp(a));
        Self {
            classifier_label_match: !score.is_zero() && score.argmax() == labeled,
            max_score: score[score.argmax()] as f64,
            max_percent: sorted[0],
            second_diff: sorted[0] - sorted[1],
            hits_count,
        }
    }
}

fn unit(x: f64) -> f64 {
    if x.is_nan() {
        0.0
    } else {
        x.clamp(0.0, 1.0)
    }
}

/// Confidence on a 0–6 scale.
///
/// When every hit points to the same category only agreement and score
/// magnitude count: `3*match + 3*min(1, max_score/N)`. Otherwise five
/// factors: `2*match + min(1, max_score/N) + max_percent/100 +
/// second_diff/100 + min(1, hits/H)`. No hits means no surety.
pub fn surety(inputs: &SuretyInputs, single_category_hits: bool, config: &HybridConfig) -> f64 {
    if inputs.hits_count == 0 {
        return 0.0;
    }
    let matched = if inputs.classifier_label_match { 1.0 } else { 0.0 };
    let magnitude = unit(inputs.max_score / config.surety_normalizer);
    let s = if single_category_hits {
        3.0 * matched + 3.0 * magnitude
    } else {
        2.0 * matched
            + magnitude
            + unit(inputs.max_percent / 100.0)
            + unit(inputs.second_diff / 100.0)
            + unit(f64::from(inputs.hits_count) / f64::from(config.hits_saturation.max(1)))
    };
    s.clamp(0.0, MAX_SURETY)
}

/// Whether the scoring hits land in at most one category after negation.
pub fn single_category(hits: &[Hit]) -> Result<bool, ScoringError> {
    let mut seen: Option<EmotionCategory> = None;
    for hit in hits {
        if let Some((c, _)) = hit_contribution(hit)? {
            if seen.is_some_and(|s| s != c) {
                return Ok(false);
            }
            seen = Some(c);
        }
    }
    Ok(true)
}

fn two_decimals<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((v * 100.0).round() / 100.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisResult {
    pub id: String,
    pub score: ScoreVector,
    pub rel_score: RelScoreVector,
    pub classifier: ClassifierOutput,
    pub final_score: FinalScore,
    pub final_category: EmotionCategory,
    #[serde(serialize_with = "two_decimals")]
    pub surety: f64,
    pub hits: Vec<Hit>,
}

/// Rule-based scoring, classification, combination and surety for one
/// document.
pub fn analyze(
    document: &Document,
    resources: &Resources,
    model: &ClassifierModel,
    text_config: &TextConfig,
    config: &HybridConfig,
) -> Result<AnalysisResult, ScoringError> {
    let hits = find_hits(&document.text, resources, text_config);
    let score = score(&hits)?;
    let rel = rel_score(&score);
    let classifier = model.predict(&document.text);
    let labeled = classifier.labeled_category;
    let final_score = combine(&score, labeled, config.classifier_weight);
    let inputs = SuretyInputs::from_scores(&score, &rel, labeled, hits.len() as u32);
    let surety = surety(&inputs, single_category(&hits)?, config);
    Ok(AnalysisResult {
        id: document.id.clone(),
        score,
        rel_score: rel,
        final_category: final_category(&final_score, labeled),
        classifier,
        final_score,
        surety,
        hits,
    })
}
