use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::LexiconError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocationArea {
    pub name: String,
    /// Square kilometres.
    pub area: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LocationAreas {
    areas: Vec<LocationArea>,
}

impl LocationAreas {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| LexiconError::io(path, e))?;
        Self::parse(&text)
    }

    /// `name<TAB>area` per line. Names may contain spaces.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut areas: Vec<LocationArea> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let Some((name, area)) = raw.split_once('\t') else {
                return Err(LexiconError::Malformed {
                    line,
                    message: "expected name<TAB>area".into(),
                });
            };
            let name = name.trim();
            let area: f64 = area.trim().parse().map_err(|_| LexiconError::Malformed {
                line,
                message: format!("area `{}` is not a number", area.trim()),
            })?;
            if name.is_empty() || !area.is_finite() || area <= 0.0 {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("location `{name}` needs a name and a positive area"),
                });
            }
            if areas.iter().any(|a| a.name.eq_ignore_ascii_case(name)) {
                return Err(LexiconError::Duplicate {
                    line,
                    key: name.to_string(),
                });
            }
            areas.push(LocationArea {
                name: name.to_string(),
                area,
            });
        }
        Ok(Self { areas })
    }

    pub fn get(&self, name: &str) -> Option<&LocationArea> {
        let name = name.trim();
        self.areas.iter().find(|a| a.name.eq_ignore_ascii_case(name))
    }

    pub fn areas(&self) -> &[LocationArea] {
        &self.areas
    }

    pub fn max_area(&self) -> Option<f64> {
        self.areas.iter().map(|a| a.area).reduce(f64::max)
    }
}
