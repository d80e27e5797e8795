//! Text and JSON encodings of command output.
//!
//! Point sets travel as `x1,y1;x2,y2;...`. Whitespace is ignored and empty
//! segments are skipped, so a trailing `;` is accepted.

use dyck::grid::ModifiedPoint;
use dyck::LatticePoint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointSetError {
    #[error("point {index}: expected `x,y`, got {segment:?}")]
    Shape { index: usize, segment: String },
    #[error("point {index}: {value:?} is not an integer")]
    Number { index: usize, value: String },
}

pub fn parse_point_set(text: &str) -> Result<Vec<LatticePoint>, PointSetError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .split(';')
        .filter(|seg| !seg.is_empty())
        .enumerate()
        .map(|(index, seg)| {
            let (x, y) = seg.split_once(',').ok_or_else(|| PointSetError::Shape {
                index,
                segment: seg.to_string(),
            })?;
            let num = |v: &str| {
                v.parse::<i64>().map_err(|_| PointSetError::Number {
                    index,
                    value: v.to_string(),
                })
            };
            Ok(LatticePoint::new(num(x)?, num(y)?))
        })
        .collect()
}

pub fn format_point_set(points: &[LatticePoint]) -> String {
    format_pairs(points.iter().map(|p| (p.x.to_string(), p.y.to_string())))
}

pub fn format_modified_set(points: &[ModifiedPoint]) -> String {
    format_pairs(
        points
            .iter()
            .map(|m| (m.xm().to_string(), m.y().to_string())),
    )
}

fn format_pairs(pairs: impl Iterator<Item = (String, String)>) -> String {
    pairs
        .map(|(a, b)| format!("{a},{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// JSON result of the word commands. Absent fields are omitted; present
/// ones always appear in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputEnvelope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semilength: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peaks: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valleys: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fragments: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modified: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<u64>>,
}

impl OutputEnvelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelope serializes")
    }
}

pub fn json_points(points: &[LatticePoint]) -> Vec<[i64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

pub fn json_modified(points: &[ModifiedPoint]) -> Vec<[u64; 2]> {
    points.iter().map(|m| [m.xm(), m.y()]).collect()
}
