//! Invariant-line detection.
//!
//! A functor `r` detects a connected reductive `G ⊂ GL_n` when `G` fixes a
//! line in `r(C^n)`. That only depends on the derived group, and a
//! semisimple group fixing a line acts on it trivially, so the test is
//! whether the trivial representation occurs in `r` restricted to `G^der`.

mod group_spec;
mod props;
mod verify;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::character::{Decomposition, Functor, SizeCap, Term};
use crate::error::Result;
use crate::lie::Weight;
use crate::report::{decimal, Table};

pub use group_spec::{build_rep_character, Factor, GroupSpec};
pub use props::{verify_properties, PropertyCheck, PropertyReport};
pub use verify::{
    classify_gl9, verify_corollary, verify_plethysm_oracle, verify_rs_detection, verify_theorem_a1,
    verify_theorem_a2, verify_theorem_schur, A1Report, A1Row, A2Report, A2Row, Gl9Report, Gl9Row,
    PlethysmOracleReport, PlethysmOracleRow, RsReport, RsRow, SchurReport, SchurRow, SchurSweep,
};

/// Number of leading decomposition terms kept in a report.
pub const DIGEST_TERMS: usize = 8;

/// Verdict for one (group, functor) query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectionReport {
    pub group: String,
    pub functor: String,
    pub detected: bool,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    #[serde(with = "decimal")]
    pub rep_dimension: BigUint,
    #[serde(with = "decimal")]
    pub functor_dimension: BigUint,
    /// The representation is an external tensor product of two
    /// 3-dimensional factors.
    pub rs_factorization: bool,
    /// Number of distinct irreducible summands.
    pub num_terms: usize,
    /// The first [`DIGEST_TERMS`] summands in stripping order.
    pub terms: Vec<Term>,
}

impl DetectionReport {
    fn new(spec: &GroupSpec, functor: Functor, decomposition: &Decomposition) -> Self {
        let trivial_mult = decomposition.multiplicity(&Weight::zero(decomposition.group().rank()));
        let mut terms = decomposition.to_term_list().terms;
        terms.truncate(DIGEST_TERMS);
        Self {
            group: spec.to_string(),
            functor: functor.to_string(),
            detected: !trivial_mult.is_zero(),
            trivial_mult,
            rep_dimension: spec.dimension(),
            functor_dimension: decomposition.dimension(),
            rs_factorization: spec.is_three_by_three(),
            num_terms: decomposition.len(),
            terms,
        }
    }

    /// One-line verdict, e.g. `not detected, trivial multiplicity 0`.
    pub fn verdict(&self) -> String {
        let word = if self.detected {
            "detected"
        } else {
            "not detected"
        };
        format!("{word}, trivial multiplicity {}", self.trivial_mult)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(
            format!(
                "{} on {} (dim {})",
                self.functor, self.group, self.rep_dimension
            ),
            &["highest weight", "multiplicity"],
        );
        for term in &self.terms {
            let w: Vec<String> = term.weight.iter().map(i32::to_string).collect();
            t.row(vec![format!("[{}]", w.join(",")), term.mult.clone()]);
        }
        if self.num_terms > self.terms.len() {
            t.note(format!(
                "... {} more summands",
                self.num_terms - self.terms.len()
            ));
        }
        t.note(format!(
            "dimension of {}: {}",
            self.functor, self.functor_dimension
        ));
        if self.rs_factorization {
            t.note("representation is an external tensor of two 3-dimensional factors");
        }
        t.note(self.verdict());
        t
    }
}

/// Decomposition of `r` applied to the representation given by `spec`.
pub fn decompose_functor(
    spec: &GroupSpec,
    functor: Functor,
    cap: SizeCap,
) -> Result<Decomposition> {
    let rep = build_rep_character(spec, cap)?;
    functor.apply_dominant(&rep, cap)?.decompose()
}

/// Decides whether `functor` detects the group described by `spec`.
pub fn detect(spec: &GroupSpec, functor: Functor, cap: SizeCap) -> Result<DetectionReport> {
    let decomposition = decompose_functor(spec, functor, cap)?;
    Ok(DetectionReport::new(spec, functor, &decomposition))
}
