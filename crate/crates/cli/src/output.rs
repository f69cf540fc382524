//! Machine-readable output records. Rationals are always `"num/den"` strings.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub r: u64,
    pub g: u64,
    pub mu: Vec<u64>,
    pub n: usize,
    pub d: u64,
    /// `null` when `r` does not divide `d`.
    pub m: Option<u64>,
    pub s: Option<i64>,
    pub arrowed: String,
    pub hurwitz: String,
}

/// One row of `table`. The CSV header is `r,g,mu,n,d,s,arrowed,hurwitz`;
/// in CSV the profile is written comma-joined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub r: u64,
    pub g: u64,
    pub mu: Vec<u64>,
    pub n: usize,
    pub d: u64,
    pub s: i64,
    pub arrowed: String,
    pub hurwitz: String,
}

pub const CSV_HEADER: [&str; 8] = ["r", "g", "mu", "n", "d", "s", "arrowed", "hurwitz"];

impl TableRow {
    pub fn csv_record(&self) -> [String; 8] {
        let mu: Vec<String> = self.mu.iter().map(u64::to_string).collect();
        [
            self.r.to_string(),
            self.g.to_string(),
            mu.join(","),
            self.n.to_string(),
            self.d.to_string(),
            self.s.to_string(),
            self.arrowed.clone(),
            self.hurwitz.clone(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub exponent: Vec<usize>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub which: String,
    pub r: u64,
    pub order: u64,
    pub variables: Vec<String>,
    pub terms: Vec<SeriesTerm>,
}
