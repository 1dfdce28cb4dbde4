//! Aggregates for plotting: a mood series over time, per-location emotion
//! mixes, and per-document distributions. Only documents with at least one
//! scoring hit enter an aggregate, so every mean of relative scores sums
//! to 100.

use chrono::{DateTime, Duration, TimeZone, Utc};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dataset::rule_scores;
use crate::lexicon::{EmotionCategory, LocationAreas};
use crate::resources::Resources;
use crate::scoring::{RelScoreVector, ScoreVector, ScoringError};
use crate::textpipe::{Document, TextConfig};

/// Largest configured area maps to this radius.
pub const MAX_RADIUS: f64 = 100.0;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("no document carries a timestamp")]
    NoTimestamps,
    #[error("no document names a known location")]
    NoKnownLocations,
    #[error("no document carries an emotion")]
    NoEmotion,
    #[error("bucket width must be positive")]
    InvalidBucket,
    #[error(transparent)]
    Scoring(#[from] ScoringError),
}

fn scored(
    docs: &[&Document],
    resources: &Resources,
    config: &TextConfig,
) -> Result<Vec<(ScoreVector, RelScoreVector)>, ScoringError> {
    docs.par_iter()
        .map(|d| rule_scores(&d.text, resources, config))
        .collect()
}

fn mean(sum: [f64; 6], count: u64) -> [f64; 6] {
    sum.map(|v| v / count as f64)
}

fn header(first: &[&str]) -> String {
    let mut cols: Vec<&str> = first.to_vec();
    cols.extend(EmotionCategory::ALL.iter().map(|c| c.name()));
    cols.join("\t") + "\n"
}

fn push_row(out: &mut String, lead: &[String], values: &[f64; 6]) {
    let mut cols = lead.to_vec();
    cols.extend(values.iter().map(|v| format!("{v:.4}")));
    out.push_str(&cols.join("\t"));
    out.push('\n');
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeBucket {
    pub start: DateTime<Utc>,
    pub end: DateTime<Utc>,
    pub count: u64,
    pub mean_rel_score: [f64; 6],
}

/// Buckets of `width` aligned to the Unix epoch (so daily buckets run from
/// UTC midnight), chronological, empty buckets omitted.
pub fn time_series(
    documents: &[Document],
    resources: &Resources,
    config: &TextConfig,
    width: Duration,
) -> Result<Vec<TimeBucket>, ReportError> {
    let width_s = width.num_seconds();
    if width_s <= 0 {
        return Err(ReportError::InvalidBucket);
    }
    let timed: Vec<&Document> = documents.iter().filter(|d| d.timestamp.is_some()).collect();
    if timed.is_empty() {
        return Err(ReportError::NoTimestamps);
    }
    let scores = scored(&timed, resources, config)?;
    let mut buckets: std::collections::BTreeMap<i64, (u64, [f64; 6])> = Default::default();
    for (doc, (s, rel)) in timed.iter().zip(scores) {
        if s.is_zero() {
            continue;
        }
        let t = doc.timestamp.expect("filtered to timed documents").timestamp();
        let slot = buckets.entry(t.div_euclid(width_s)).or_default();
        slot.0 += 1;
        for i in 0..6 {
            slot.1[i] += rel.0[i];
        }
    }
    if buckets.is_empty() {
        return Err(ReportError::NoEmotion);
    }
    Ok(buckets
        .into_iter()
        .map(|(k, (count, sum))| {
            let start = Utc.timestamp_opt(k * width_s, 0).unwrap();
            TimeBucket {
                start,
                end: start + width,
                count,
                mean_rel_score: mean(sum, count),
            }
        })
        .collect())
}

pub fn time_series_tsv(buckets: &[TimeBucket]) -> String {
    let mut out = header(&["start", "end", "count"]);
    for b in buckets {
        let lead = [b.start.to_rfc3339(), b.end.to_rfc3339(), b.count.to_string()];
        push_row(&mut out, &lead, &b.mean_rel_score);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocationRecord {
    pub location: String,
    pub area: f64,
    pub radius: f64,
    pub count: u64,
    pub mean_rel_score: [f64; 6],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocationReport {
    pub records: Vec<LocationRecord>,
    /// Documents naming a location missing from the area table.
    pub unknown_locations: u64,
}

/// Radius constant: the largest area gets [`MAX_RADIUS`]. Zero for an
/// empty table.
pub fn radius_scale(areas: &LocationAreas) -> f64 {
    areas.max_area().map_or(0.0, |a| MAX_RADIUS / a.sqrt())
}

/// One record per known location with at least one emotive document, in
/// area-table order. Radius is `k * sqrt(area)` with `k` from
/// [`radius_scale`].
pub fn location_report(
    documents: &[Document],
    resources: &Resources,
    config: &TextConfig,
) -> Result<LocationReport, ReportError> {
    let areas = &resources.locations;
    let mut unknown = 0;
    let mut known: Vec<(usize, &Document)> = Vec::new();
    for d in documents {
        let Some(name) = d.location.as_deref() else {
            continue;
        };
        match areas.areas().iter().position(|a| a.name.eq_ignore_ascii_case(name.trim())) {
            Some(i) => known.push((i, d)),
            None => unknown += 1,
        }
    }
    if known.is_empty() {
        return Err(ReportError::NoKnownLocations);
    }
    let docs: Vec<&Document> = known.iter().map(|(_, d)| *d).collect();
    let scores = scored(&docs, resources, config)?;
    let mut acc = vec![(0u64, [0.0f64; 6]); areas.areas().len()];
    for ((i, _), (s, rel)) in known.iter().zip(scores) {
        if s.is_zero() {
            continue;
        }
        acc[*i].0 += 1;
        for c in 0..6 {
            acc[*i].1[c] += rel.0[c];
        }
    }
    let k = radius_scale(areas);
    let records: Vec<LocationRecord> = areas
        .areas()
        .iter()
        .zip(acc)
        .filter(|(_, (n, _))| *n > 0)
        .map(|(a, (count, sum))| LocationRecord {
            location: a.name.clone(),
            area: a.area,
            radius: k * a.area.sqrt(),
            count,
            mean_rel_score: mean(sum, count),
        })
        .collect();
    if records.is_empty() {
        return Err(ReportError::NoEmotion);
    }
    Ok(LocationReport {
        records,
        unknown_locations: unknown,
    })
}

pub fn location_tsv(report: &LocationReport) -> String {
    let mut out = header(&["location", "area", "radius", "count"]);
    for r in &report.records {
        let lead = [
            r.location.clone(),
            r.area.to_string(),
            format!("{:.4}", r.radius),
            r.count.to_string(),
        ];
        push_row(&mut out, &lead, &r.mean_rel_score);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocumentRow {
    pub id: String,
    pub score: ScoreVector,
    pub rel_score: RelScoreVector,
    /// Rule-based argmax, absent when nothing scored.
    pub dominant: Option<EmotionCategory>,
}

/// Rule-based distribution of every document, in input order.
pub fn document_report(
    documents: &[Document],
    resources: &Resources,
    config: &TextConfig,
) -> Result<Vec<DocumentRow>, ReportError> {
    let refs: Vec<&Document> = documents.iter().collect();
    let scores = scored(&refs, resources, config)?;
    Ok(documents
        .iter()
        .zip(scores)
        .map(|(d, (s, rel))| DocumentRow {
            id: d.id.clone(),
            score: s,
            rel_score: rel,
            dominant: (!s.is_zero()).then(|| s.argmax()),
        })
        .collect())
}

pub fn document_tsv(rows: &[DocumentRow]) -> String {
    let mut out = header(&["id", "dominant"]);
    for r in rows {
        let dominant = r.dominant.map_or("NONE".to_string(), |c| c.to_string());
        push_row(&mut out, &[r.id.clone(), dominant], &r.rel_score.0);
    }
    out
}
