use std::fmt;

use serde::Serialize;

use super::{ClassifierError, ClassifierModel, LabeledExample};
use crate::lexicon::EmotionCategory;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassMetrics {
    pub category: EmotionCategory,
    pub support: u64,
    pub precision: f64,
    pub recall: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub backend: String,
    pub total: u64,
    pub correct: u64,
    pub incorrect: u64,
    pub accuracy: f64,
    pub per_class: Vec<ClassMetrics>,
    /// `confusion[actual][predicted]`, canonical category order.
    pub confusion: [[u64; 6]; 6],
}

pub fn evaluate(
    model: &ClassifierModel,
    testset: &[LabeledExample],
) -> Result<EvalReport, ClassifierError> {
    let predictions = testset
        .iter()
        .map(|ex| (ex.label, model.predict_features(&ex.features).labeled_category));
    EvalReport::from_predictions(model.backend().name(), predictions)
}

impl EvalReport {
    pub fn from_predictions<I>(backend: &str, pairs: I) -> Result<Self, ClassifierError>
    where
        I: IntoIterator<Item = (EmotionCategory, EmotionCategory)>,
    {
        let mut confusion = [[0u64; 6]; 6];
        for (actual, predicted) in pairs {
            confusion[actual.index()][predicted.index()] += 1;
        }
        let total: u64 = confusion.iter().flatten().sum();
        if total == 0 {
            return Err(ClassifierError::EmptyTestSet);
        }
        let correct: u64 = (0..6).map(|i| confusion[i][i]).sum();
        let per_class = EmotionCategory::ALL
            .iter()
            .map(|&c| {
                let i = c.index();
                let support: u64 = confusion[i].iter().sum();
                let predicted: u64 = (0..6).map(|a| confusion[a][i]).sum();
                let ratio = |num: u64, den: u64| if den == 0 { 0.0 } else { num as f64 / den as f64 };
                ClassMetrics {
                    category: c,
                    support,
                    precision: ratio(confusion[i][i], predicted),
                    recall: ratio(confusion[i][i], support),
                }
            })
            .collect();
        Ok(Self {
            backend: backend.to_string(),
            total,
            correct,
            incorrect: total - correct,
            accuracy: correct as f64 / total as f64,
            per_class,
            confusion,
        })
    }
}

/// `part/total` as a percentage truncated (not rounded) to one decimal, so
/// 826/900 prints as `91.7%`.
pub fn format_truncated_percent(part: u64, total: u64) -> String {
    if total == 0 {
        return "0.0%".to_string();
    }
    let tenths = part * 1000 / total;
    format!("{}.{}%", tenths / 10, tenths % 10)
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "=== {} ===", self.backend)?;
        writeln!(
            f,
            "Correctly Classified Instances\t{}\t{}",
            self.correct,
            format_truncated_percent(self.correct, self.total)
        )?;
        writeln!(
            f,
            "Incorrectly Classified Instances\t{}\t{}",
            self.incorrect,
            format_truncated_percent(self.incorrect, self.total)
        )?;
        writeln!(f, "Total No. of Instances\t{}", self.total)?;
        writeln!(f)?;
        writeln!(f, "Category\tSupport\tPrecision\tRecall")?;
        for m in &self.per_class {
            writeln!(
                f,
                "{}\t{}\t{:.4}\t{:.4}",
                m.category, m.support, m.precision, m.recall
            )?;
        }
        writeln!(f)?;
        write!(f, "Confusion (rows actual, columns predicted)")?;
        for c in EmotionCategory::ALL {
            write!(f, "\t{c}")?;
        }
        writeln!(f)?;
        for (row, c) in self.confusion.iter().zip(EmotionCategory::ALL) {
            write!(f, "{c}")?;
            for n in row {
                write!(f, "\t{n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
