//! Serializable output shapes for every command. The published JSON
//! schema in `schemas/output.schema.json` describes exactly these.

use serde::Serialize;

use tubecat_core::checks::CheckOutcome;
use tubecat_core::intersect::CrossingReport;

#[derive(Serialize)]
pub struct IntersectOut {
    pub pos: usize,
    pub neg: usize,
    pub total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointOut>>,
}

#[derive(Serialize)]
pub struct PointOut {
    pub x: String,
    pub y: String,
    pub sign: i8,
    pub shift_m: i64,
}

impl IntersectOut {
    pub fn from_report(report: &CrossingReport) -> IntersectOut {
        IntersectOut {
            pos: report.pos,
            neg: report.neg,
            total: report.total,
            points: report.points.as_ref().map(|points| {
                points
                    .iter()
                    .map(|p| PointOut {
                        x: p.x.to_string(),
                        y: p.y.to_string(),
                        sign: p.sign,
                        shift_m: p.shift_m,
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
pub struct ExtOut {
    pub ext: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explain: Option<ExplainOut>,
}

#[derive(Serialize)]
pub struct ExplainOut {
    pub first: String,
    pub second: String,
    /// Which crossing count the dimension equals: "neg" or "total".
    pub route: String,
    pub pos: usize,
    pub neg: usize,
    pub total: usize,
}

#[derive(Serialize)]
pub struct QuiverOut {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub max_len: i64,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
    pub tau: Vec<(String, String)>,
}

#[derive(Serialize)]
pub struct OracleOut {
    pub hom: usize,
    pub hom_linalg: usize,
    pub ext: usize,
    pub ext_dual: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext_euler: Option<usize>,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct CheckOut {
    pub checks: Vec<CheckEntry>,
    pub all_passed: bool,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl CheckEntry {
    pub fn from_outcome(outcome: &CheckOutcome) -> CheckEntry {
        CheckEntry {
            name: outcome.name.to_string(),
            cases: outcome.cases,
            failures: outcome.failures.len() as u64,
            passed: outcome.passed(),
            first_failure: outcome.failures.first().cloned(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}
