//! The discrepancy report: one record per comparison with both values and
//! the verdict, written as JSON next to the compare table.

use serde::{Deserialize, Serialize};

use crate::commands::CompareRow;
use crate::output::Meta;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub summary: Summary,
    /// Identifiers of the oracles with at least one failing record.
    pub failing_oracles: Vec<String>,
    pub records: Vec<CompareRow>,
}

impl Report {
    pub fn new(meta: Meta, records: Vec<CompareRow>) -> Self {
        let count = |v: &str| records.iter().filter(|r| r.verdict == v).count();
        let summary = Summary {
            total: records.len(),
            passed: count("pass"),
            failed: count("fail"),
            errors: count("error"),
        };
        let mut failing: Vec<String> = records
            .iter()
            .filter(|r| r.verdict == "fail")
            .map(|r| r.oracle.clone())
            .collect();
        failing.sort();
        failing.dedup();
        Self {
            meta,
            summary,
            failing_oracles: failing,
            records,
        }
    }
}
