//! JSON shapes for commands whose result is not already a core report type.

use invline_core::lie::IrrepEntry;
use invline_core::report::decimal;
use invline_core::{Partition, PartitionDecomposition, Table};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrTerm {
    pub shape: Partition,
    /// Dynkin label of the shape as an `SL_m` weight.
    pub weight: Vec<i32>,
    #[serde(with = "decimal")]
    pub mult: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrOutput {
    pub lambda: Partition,
    pub mu: Partition,
    pub rank: usize,
    pub terms: Vec<LrTerm>,
}

impl LrOutput {
    pub fn new(lambda: &Partition, mu: &Partition, d: &PartitionDecomposition) -> Self {
        let terms = d
            .terms()
            .iter()
            .map(|(shape, mult)| LrTerm {
                shape: shape.clone(),
                weight: shape.dynkin_label(d.rank()).expect("normalized shapes fit"),
                mult: mult.clone(),
            })
            .collect();
        Self {
            lambda: lambda.clone(),
            mu: mu.clone(),
            rank: d.rank(),
            terms,
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(
            format!("S{} (x) S{} over SL{}", self.lambda, self.mu, self.rank),
            &["shape", "weight", "multiplicity"],
        );
        for term in &self.terms {
            let w: Vec<String> = term.weight.iter().map(i32::to_string).collect();
            t.row(vec![
                term.shape.to_string(),
                format!("[{}]", w.join(",")),
                term.mult.to_string(),
            ]);
        }
        t.note(format!("{} summands", self.terms.len()));
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionsOutput {
    pub k: usize,
    pub j: usize,
    pub n: usize,
    #[serde(with = "decimal")]
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub dimension: u64,
    pub entries: Vec<IrrepEntry>,
}

impl EnumerateOutput {
    pub fn table(&self) -> Table {
        let mut t = Table::new(
            format!("irreducibles of dimension {}", self.dimension),
            &["group", "highest weight"],
        );
        for e in &self.entries {
            let group: Vec<String> = e.factors.iter().map(|(ty, _)| ty.to_string()).collect();
            t.row(vec![group.join("×"), e.to_string()]);
        }
        t.note(format!("{} entries", self.entries.len()));
        t
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub passed: bool,
    pub report: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyAllOutput {
    pub passed: bool,
    pub suites: Vec<SuiteOutcome>,
}
