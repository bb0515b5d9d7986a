//! JSON shapes written by the command-line tool.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::field::{FieldTower, Fq3};
use crate::planarity::{Method, Pentanomial, Verdict};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TowerInfo {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub modulus_q: Value,
    pub modulus_q3: Value,
}

impl TowerInfo {
    pub fn new(tower: &FieldTower) -> Self {
        TowerInfo {
            p: tower.p(),
            n: tower.n(),
            q: tower.q(),
            modulus_q: tower.modulus_q_json(),
            modulus_q3: tower.modulus_q3_json(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub elements_swept: u64,
    pub tuples_tested: u64,
}

/// The single JSON object every command except `classify` prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub tower: TowerInfo,
    pub inputs: Value,
    pub results: Value,
    pub counts: Counts,
    /// `None` when timing is disabled, so reports compare byte for byte.
    pub elapsed_ms: Option<u64>,
}

/// A planarity verdict for one pentanomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub q: u32,
    pub modulus_q: Value,
    pub modulus_q3: Value,
    pub coeffs: Value,
    pub method: String,
    pub planar: bool,
    pub witness_epsilon: Option<Value>,
    pub elapsed_ms: Option<u64>,
}

impl VerdictRecord {
    pub fn new(tower: &FieldTower, f: &Pentanomial, verdict: &Verdict, elapsed_ms: Option<u64>) -> Self {
        VerdictRecord {
            q: tower.q(),
            modulus_q: tower.modulus_q_json(),
            modulus_q3: tower.modulus_q3_json(),
            coeffs: f.to_json(tower.mid()),
            method: verdict.method.name().to_string(),
            planar: verdict.planar,
            witness_epsilon: witness_json(tower, verdict.witness),
            elapsed_ms,
        }
    }
}

/// One line of the `classify` JSON-lines output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub index: u64,
    pub coeffs: Value,
    pub method: String,
    pub planar: bool,
    pub witness_epsilon: Option<Value>,
}

impl ClassifyRecord {
    pub fn new(tower: &FieldTower, f: &Pentanomial, method: Method, verdict: &Verdict) -> Self {
        ClassifyRecord {
            index: f.index(tower.q()),
            coeffs: f.to_json(tower.mid()),
            method: method.name().to_string(),
            planar: verdict.planar,
            witness_epsilon: witness_json(tower, verdict.witness),
        }
    }
}

fn witness_json(tower: &FieldTower, w: Option<Fq3>) -> Option<Value> {
    w.map(|e| tower.top().to_json(e))
}
