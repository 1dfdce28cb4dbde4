//! Rule-based scoring of hits into the six-component score and its
//! percentage form.

use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{DegreeIntensity, EmotionCategory, EntryKind, IntensityCategory};
use crate::textpipe::{Hit, Person};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoringError {
    #[error("emoticons carry STRONG or MEDIUM intensity only, got {0}")]
    LightEmoticon(IntensityCategory),
    #[error("emoticons cannot carry a degree word, got {0}")]
    DegreeOnEmoticon(DegreeIntensity),
}

/// Emotion score of a single hit before the person multiplier.
pub fn emot_score(
    kind: EntryKind,
    intensity: IntensityCategory,
    degree: DegreeIntensity,
) -> Result<u64, ScoringError> {
    use DegreeIntensity::*;
    use IntensityCategory::*;
    match kind {
        EntryKind::Word => Ok(match (intensity, degree) {
            (Strong, Absent) => 6,
            (Strong, High) => 8,
            (Strong, Low) => 6,
            (Strong, Negation) => 2,
            (Medium, Absent) => 4,
            (Medium, High) => 6,
            (Medium, Low) => 6,
            (Medium, Negation) => 4,
            (Light, Absent) => 2,
            (Light, High) => 6,
            (Light, Low) => 4,
            (Light, Negation) => 4,
        }),
        EntryKind::Emoticon => {
            if degree != Absent {
                return Err(ScoringError::DegreeOnEmoticon(degree));
            }
            match intensity {
                Strong => Ok(80),
                Medium => Ok(40),
                Light => Err(ScoringError::LightEmoticon(intensity)),
            }
        }
    }
}

/// Category a hit contributes to once negation is applied. Negated
/// happiness reads as sadness, negated sadness or anger as happiness, and a
/// negated fear, surprise or disgust contributes nothing.
pub fn effective_category(
    category: EmotionCategory,
    degree: DegreeIntensity,
) -> Option<EmotionCategory> {
    use EmotionCategory::*;
    if degree != DegreeIntensity::Negation {
        return Some(category);
    }
    match category {
        Happiness => Some(Sadness),
        Sadness | Anger => Some(Happiness),
        Fear | Surprise | Disgust => None,
    }
}

pub fn per_score(person: Person) -> u64 {
    match person {
        Person::First => 10,
        Person::Second => 2,
        Person::Third => 1,
    }
}

/// Six non-negative integer scores in canonical category order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScoreVector(pub [u64; 6]);

impl ScoreVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }

    /// Category of the largest component, first in canonical order on ties.
    pub fn argmax(&self) -> EmotionCategory {
        let mut best = 0;
        for i in 1..6 {
            if self.0[i] > self.0[best] {
                best = i;
            }
        }
        EmotionCategory::ALL[best]
    }

    pub fn add_to(&mut self, category: EmotionCategory, amount: u64) {
        self.0[category.index()] += amount;
    }
}

impl Index<EmotionCategory> for ScoreVector {
    type Output = u64;

    fn index(&self, c: EmotionCategory) -> &u64 {
        &self.0[c.index()]
    }
}

impl Add for ScoreVector {
    type Output = ScoreVector;

    fn add(mut self, rhs: ScoreVector) -> ScoreVector {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

/// Percentage share of each category.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RelScoreVector(pub [f64; 6]);

impl RelScoreVector {
    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    pub fn argmax(&self) -> EmotionCategory {
        let mut best = 0;
        for i in 1..6 {
            if self.0[i] > self.0[best] {
                best = i;
            }
        }
        EmotionCategory::ALL[best]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

impl Index<EmotionCategory> for RelScoreVector {
    type Output = f64;

    fn index(&self, c: EmotionCategory) -> &f64 {
        &self.0[c.index()]
    }
}

/// Contribution of one hit: the category it lands in and its points.
pub fn hit_contribution(hit: &Hit) -> Result<Option<(EmotionCategory, u64)>, ScoringError> {
    let points = emot_score(hit.kind, hit.intensity, hit.degree)? * per_score(hit.person);
    Ok(effective_category(hit.category, hit.degree).map(|c| (c, points)))
}

pub fn score(hits: &[Hit]) -> Result<ScoreVector, ScoringError> {
    let mut out = ScoreVector::default();
    for hit in hits {
        if let Some((category, points)) = hit_contribution(hit)? {
            out.add_to(category, points);
        }
    }
    Ok(out)
}

pub fn rel_score(s: &ScoreVector) -> RelScoreVector {
    let total = s.total();
    if total == 0 {
        return RelScoreVector::default();
    }
    // multiply first: a share that is an exact percentage (70 of 100,
    // 7 of 10) must come out exact for the strict purity threshold
    let total = total as f64;
    RelScoreVector(s.0.map(|v| v as f64 * 100.0 / total))
}
