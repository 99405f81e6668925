//! Machine-readable reports. Every command emits one JSON document with
//! deterministic ordering, suitable for diffing in CI.

use serde::Serialize;

#[derive(Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dimension: usize,
    pub representatives: Vec<String>,
}

#[derive(Serialize)]
pub struct CohomologyReport {
    pub species: String,
    pub method: String,
    pub table: Vec<DegreeRow>,
    pub witnesses: Vec<String>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct CupRow {
    pub f: String,
    pub g: String,
    pub expansion: String,
}

#[derive(Serialize)]
pub struct CupReport {
    pub species: String,
    pub p: usize,
    pub q: usize,
    pub table: Vec<CupRow>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct CobarRow {
    pub word_length: usize,
    pub homological_degree: i64,
    pub module_dimension: usize,
    pub homology_dimension: usize,
}

#[derive(Serialize)]
pub struct CobarReport {
    pub species: String,
    pub arity: usize,
    pub differential_squares_to_zero: bool,
    pub table: Vec<CobarRow>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct DeformReport {
    pub species: String,
    pub cocycle: String,
    pub order: usize,
    pub max_arity: usize,
    pub series: Vec<String>,
    pub checks: Vec<Check>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct SpeciesAddReport {
    pub species: String,
    pub registered: bool,
    pub cosymmetric: bool,
    pub max_arity: usize,
    pub structure_counts: Vec<usize>,
    pub timing_ms: u128,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: String,
    pub ok: bool,
}
