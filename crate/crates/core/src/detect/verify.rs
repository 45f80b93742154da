//! Theorem-level verification drivers. Independent cases run in parallel;
//! rows come back in input order.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{detect, Factor, GroupSpec};
use crate::character::{Functor, SizeCap};
use crate::error::{Error, Result};
use crate::lie::{
    enumerate_irreps_of_dim, group_irreducible_character, CartanType, Family, Group, Weight,
};
use crate::lr::pieri_row;
use crate::partitions::{partitions_of, CorollaryReport, Partition};
use crate::plethysm::{detects_sym3_sl2, sym_of_sym_sl2};
use crate::report::{decimal, Report, Table};

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn status(ok: bool) -> String {
    if ok { "ok" } else { "FAIL" }.to_string()
}

fn sl2_spec(k: u32) -> GroupSpec {
    let ty = CartanType::new(Family::A, 1).expect("A1");
    GroupSpec::new(vec![Factor::Highest {
        ty,
        weight: Weight(vec![k as i32]),
    }])
}

impl Report for CorollaryReport {
    fn suite(&self) -> &'static str {
        "corollary"
    }

    fn passed(&self) -> bool {
        CorollaryReport::passed(self)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            format!("bounded partition identities, l = 1..{}", self.ell_max),
            &[
                "l",
                "p(4l,3,6l)",
                "p(4l,3,6l-1)",
                "p(4l-2,3,6l-3)",
                "p(4l-2,3,6l-4)",
                "status",
            ],
        );
        for r in &self.rows {
            t.row(vec![
                r.ell.to_string(),
                r.upper[0].clone(),
                r.upper[1].clone(),
                r.lower[0].clone(),
                r.lower[1].clone(),
                status(r.difference_is_one && r.equal_counts),
            ]);
        }
        t.note(format!(
            "{} identities checked, {} failing",
            self.checked_identities(),
            self.failing.len()
        ));
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A1Row {
    pub n: u32,
    /// Verdict from `N(3, n−1, 3(n−1)/2)`.
    pub closed_form: bool,
    /// Verdict from the character pipeline.
    pub pipeline: bool,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    /// `n ≡ 1 (mod 4)`.
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A1Report {
    pub n_max: u32,
    pub rows: Vec<A1Row>,
}

impl Report for A1Report {
    fn suite(&self) -> &'static str {
        "a1"
    }

    fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.closed_form == r.expected && r.pipeline == r.expected)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            "Sym^3 on Sym^(n-1) of SL2",
            &[
                "n",
                "n mod 4",
                "closed form",
                "pipeline",
                "trivial mult",
                "status",
            ],
        );
        for r in &self.rows {
            t.row(vec![
                r.n.to_string(),
                (r.n % 4).to_string(),
                yes_no(r.closed_form),
                yes_no(r.pipeline),
                r.trivial_mult.to_string(),
                status(r.closed_form == r.expected && r.pipeline == r.expected),
            ]);
        }
        t
    }
}

/// `Sym³` on `Sym^{n−1}(SL₂) ⊂ GL_n` for `2 ≤ n ≤ n_max`, by the character
/// pipeline and by the closed form.
pub fn verify_theorem_a1(n_max: u32, cap: SizeCap) -> Result<A1Report> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let rows = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let report = detect(&sl2_spec(n - 1), Functor::Sym(3), cap)?;
            Ok(A1Row {
                n,
                closed_form: detects_sym3_sl2(n)?,
                pipeline: report.detected,
                trivial_mult: report.trivial_mult,
                expected: n % 4 == 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(A1Report { n_max, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmOracleRow {
    pub j: u32,
    pub k: u32,
    pub num_terms: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmOracleReport {
    pub rows: Vec<PlethysmOracleRow>,
}

impl Report for PlethysmOracleReport {
    fn suite(&self) -> &'static str {
        "plethysm-oracle"
    }

    fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            "Sym^j(Sym^k) for SL2: closed form vs character stripping",
            &["j", "k", "summands", "status"],
        );
        for r in &self.rows {
            t.row(vec![
                r.j.to_string(),
                r.k.to_string(),
                r.num_terms.to_string(),
                status(r.equal),
            ]);
        }
        t
    }
}

/// Compares the closed-form `Sym^j(Sym^k)` with the character pipeline.
pub fn verify_plethysm_oracle(
    js: &[u32],
    k_max: u32,
    cap: SizeCap,
) -> Result<PlethysmOracleReport> {
    let cases: Vec<(u32, u32)> = js
        .iter()
        .flat_map(|&j| (0..=k_max).map(move |k| (j, k)))
        .collect();
    let rows = cases
        .into_par_iter()
        .map(|(j, k)| {
            let functor = Functor::Sym(j);
            let closed = sym_of_sym_sl2(j, k)?;
            let pipeline = super::decompose_functor(&sl2_spec(k), functor, cap)?;
            Ok(PlethysmOracleRow {
                j,
                k,
                num_terms: closed.len(),
                equal: closed == pipeline,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlethysmOracleReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A2Row {
    pub k: u32,
    #[serde(with = "decimal")]
    pub n: BigUint,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    pub detected: bool,
    /// `λ^∨` for `λ = (k)` in `SL₃`, i.e. `(k,k)`.
    pub dual_shape: String,
    /// `S_{λ^∨}` occurs in `Sym^k ⊗ Sym^k` by Pieri's rule (the `i = 0` term).
    pub pieri_witness: bool,
    /// The dual highest weight `(0,k)` occurs in the character decomposition
    /// of `Sym^k ⊗ Sym^k`.
    pub character_witness: bool,
}

impl A2Row {
    fn ok(&self) -> bool {
        self.detected && self.pieri_witness && self.character_witness
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A2Report {
    pub k_max: u32,
    pub rows: Vec<A2Row>,
}

impl Report for A2Report {
    fn suite(&self) -> &'static str {
        "a2"
    }

    fn passed(&self) -> bool {
        self.rows.iter().all(A2Row::ok)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            "tensor^3 on Sym^k of SL3",
            &[
                "k",
                "n",
                "trivial mult",
                "dual shape",
                "pieri i=0",
                "in decomposition",
                "status",
            ],
        );
        for r in &self.rows {
            t.row(vec![
                r.k.to_string(),
                r.n.to_string(),
                r.trivial_mult.to_string(),
                r.dual_shape.clone(),
                yes_no(r.pieri_witness),
                yes_no(r.character_witness),
                status(r.ok()),
            ]);
        }
        t
    }
}

/// `⊗³` on `Sym^k(SL₃)` for `1 ≤ k ≤ k_max`, with the `S_{(k,k)}` witness.
pub fn verify_theorem_a2(k_max: u32, cap: SizeCap) -> Result<A2Report> {
    if k_max < 1 {
        return Err(Error::InvalidArgument(
            "--k-max must be at least 1".to_string(),
        ));
    }
    let rows = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let shape = Partition::row(k);
            let spec = GroupSpec::new(vec![Factor::schur(3, shape.clone())?]);
            let report = detect(&spec, Functor::Tensor(3), cap)?;
            let dual = shape.dual_sl(3)?.normalize_sl(3)?;
            let pieri = pieri_row(&shape, k, 3)?;

            let group = Group::special_linear(3)?;
            let sym_k = group_irreducible_character(&group, &[k as i32, 0], cap)?;
            let square = sym_k.tensor(&sym_k, cap)?.decompose()?;
            let dual_weight = Weight(dual.dynkin_label(3)?);
            Ok(A2Row {
                k,
                n: report.rep_dimension.clone(),
                trivial_mult: report.trivial_mult.clone(),
                detected: report.detected,
                dual_shape: dual.to_string(),
                pieri_witness: !pieri.multiplicity(&dual).is_zero(),
                character_witness: !square.multiplicity(&dual_weight).is_zero(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(A2Report { k_max, rows })
}

/// Which `(λ, m)` pairs the `S_λ(SL_m)` sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurSweep {
    /// Shapes with `1 ≤ |λ| ≤ size_max`.
    pub size_max: u32,
    /// Shapes with at most this many rows.
    pub ell_max: usize,
    /// Largest `m`; when unset, `m ≤ 3ℓ(λ) + window` per shape.
    pub m_max: Option<usize>,
    pub window: usize,
    /// Also tabulate `ℓ ≤ m ≤ 3ℓ`, where nothing is asserted.
    pub exploratory: bool,
}

impl Default for SchurSweep {
    fn default() -> Self {
        Self {
            size_max: 4,
            ell_max: 4,
            m_max: None,
            window: 3,
            exploratory: true,
        }
    }
}

/// Largest `m` for which `SL_m` is available.
const MAX_SCHUR_M: usize = crate::lie::MAX_TYPE_A_RANK + 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurRow {
    pub shape: String,
    pub ell: usize,
    pub m: usize,
    #[serde(with = "decimal")]
    pub rep_dimension: BigUint,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    pub detected: bool,
    /// `m > 3ℓ`: the trivial multiplicity must vanish.
    pub in_theorem_range: bool,
    /// `3|λ| ≢ 0 (mod m)`: weights of `⊗³` cannot reach zero.
    pub degree_obstructed: bool,
}

impl SchurRow {
    fn ok(&self) -> bool {
        let theorem = !self.in_theorem_range || !self.detected;
        let degree = !self.degree_obstructed || self.trivial_mult.is_zero();
        theorem && degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurReport {
    pub size_max: u32,
    pub ell_max: usize,
    pub rows: Vec<SchurRow>,
}

impl SchurReport {
    pub fn theorem_rows(&self) -> impl Iterator<Item = &SchurRow> {
        self.rows.iter().filter(|r| r.in_theorem_range)
    }

    pub fn exploratory_rows(&self) -> impl Iterator<Item = &SchurRow> {
        self.rows.iter().filter(|r| !r.in_theorem_range)
    }
}

impl Report for SchurReport {
    fn suite(&self) -> &'static str {
        "schur"
    }

    fn passed(&self) -> bool {
        self.rows.iter().all(SchurRow::ok)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            format!("tensor^3 on S_lambda(SL_m), |lambda| <= {}", self.size_max),
            &["lambda", "m", "dim", "trivial mult", "range", "status"],
        );
        for r in &self.rows {
            let range = if r.in_theorem_range {
                "m > 3l"
            } else {
                "exploratory"
            };
            let st = if r.in_theorem_range || r.degree_obstructed {
                status(r.ok())
            } else if r.detected {
                "detected".to_string()
            } else {
                "not detected".to_string()
            };
            t.row(vec![
                r.shape.clone(),
                r.m.to_string(),
                r.rep_dimension.to_string(),
                r.trivial_mult.to_string(),
                range.to_string(),
                st,
            ]);
        }
        let checked = self.theorem_rows().count();
        t.note(format!(
            "{checked} cases with m > 3l checked; {} exploratory cases with l <= m <= 3l are data only",
            self.exploratory_rows().count()
        ));
        t
    }
}

/// `⊗³` on `S_λ(SL_m)`: no trivial summand whenever `m > 3ℓ(λ)`.
pub fn verify_theorem_schur(sweep: SchurSweep, cap: SizeCap) -> Result<SchurReport> {
    let mut cases = Vec::new();
    for size in 1..=sweep.size_max {
        for shape in partitions_of(size, sweep.ell_max, u32::MAX) {
            let ell = shape.length();
            let upper = sweep
                .m_max
                .unwrap_or(3 * ell + sweep.window)
                .min(MAX_SCHUR_M);
            let lower = if sweep.exploratory { ell } else { 3 * ell + 1 };
            for m in lower..=upper {
                cases.push((shape.clone(), m));
            }
        }
    }
    let rows = cases
        .into_par_iter()
        .map(|(shape, m)| {
            let ell = shape.length();
            let spec = GroupSpec::new(vec![Factor::schur(m, shape.clone())?]);
            let report = detect(&spec, Functor::Tensor(3), cap)?;
            Ok(SchurRow {
                shape: shape.to_string(),
                ell,
                m,
                rep_dimension: report.rep_dimension,
                trivial_mult: report.trivial_mult,
                detected: report.detected,
                in_theorem_range: m > 3 * ell,
                degree_obstructed: (3 * shape.size()) % m as u64 != 0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SchurReport {
        size_max: sweep.size_max,
        ell_max: sweep.ell_max,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsRow {
    pub m: usize,
    pub group: String,
    pub functor: String,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    pub detected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsReport {
    pub rows: Vec<RsRow>,
}

impl Report for RsReport {
    fn suite(&self) -> &'static str {
        "rs"
    }

    fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.detected)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            "Sym^m on std x std of SL_m x SL_m",
            &["m", "group", "functor", "trivial mult", "status"],
        );
        for r in &self.rows {
            t.row(vec![
                r.m.to_string(),
                r.group.clone(),
                r.functor.clone(),
                r.trivial_mult.to_string(),
                status(r.detected),
            ]);
        }
        t
    }
}

/// `Sym^m` on `std ⊠ std` for `SL_m × SL_m`.
pub fn verify_rs_detection(ms: &[usize], cap: SizeCap) -> Result<RsReport> {
    let rows = ms
        .par_iter()
        .map(|&m| {
            if m == 0 || m > 4 {
                return Err(Error::InvalidArgument(format!(
                    "RS check needs 1 <= m <= 4, got {m}"
                )));
            }
            let std = Factor::schur(m, Partition::row(1))?;
            let spec = GroupSpec::new(vec![std.clone(), std]);
            let functor = Functor::Sym(m as u32);
            let report = detect(&spec, functor, cap)?;
            Ok(RsRow {
                m,
                group: spec.to_string(),
                functor: functor.to_string(),
                trivial_mult: report.trivial_mult,
                detected: report.detected,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RsReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gl9Row {
    pub entry: String,
    pub group: String,
    pub detected: bool,
    #[serde(with = "decimal")]
    pub trivial_mult: BigUint,
    pub rs_factorization: bool,
    /// `sl2`, `rs`, or `-` when not detected.
    pub branch: String,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gl9Report {
    pub rows: Vec<Gl9Row>,
    /// The single `A₁` entry agrees with the closed form for `n = 9`.
    pub sl2_closed_form_agrees: bool,
}

impl Gl9Report {
    pub fn row(&self, entry: &str) -> Option<&Gl9Row> {
        self.rows.iter().find(|r| r.entry == entry)
    }
}

impl Report for Gl9Report {
    fn suite(&self) -> &'static str {
        "gl9"
    }

    fn passed(&self) -> bool {
        self.sl2_closed_form_agrees && self.rows.iter().all(|r| r.consistent)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            "Sym^3 on every irreducible 9-dimensional representation",
            &[
                "entry",
                "group",
                "trivial mult",
                "3x3 factors",
                "branch",
                "status",
            ],
        );
        for r in &self.rows {
            t.row(vec![
                r.entry.clone(),
                r.group.clone(),
                r.trivial_mult.to_string(),
                yes_no(r.rs_factorization),
                r.branch.clone(),
                status(r.consistent),
            ]);
        }
        t.note(format!(
            "closed form for n = 9 agrees with the A1 entry: {}",
            yes_no(self.sl2_closed_form_agrees)
        ));
        t
    }
}

/// Runs `Sym³` on every 9-dimensional irreducible from the scan and checks
/// that each detected one is either `SL₂` acting by `Sym⁸` or a tensor
/// product of two 3-dimensional factors.
pub fn classify_gl9(cap: SizeCap) -> Result<Gl9Report> {
    let entries = enumerate_irreps_of_dim(9)?;
    let rows = entries
        .par_iter()
        .map(|e| {
            let spec = GroupSpec::from(e);
            let report = detect(&spec, Functor::Sym(3), cap)?;
            let branch = if !report.detected {
                "-"
            } else if spec.is_sl2() {
                "sl2"
            } else if report.rs_factorization {
                "rs"
            } else {
                "none"
            };
            Ok(Gl9Row {
                entry: e.to_string(),
                group: spec.group().to_string(),
                detected: report.detected,
                trivial_mult: report.trivial_mult,
                rs_factorization: report.rs_factorization,
                branch: branch.to_string(),
                consistent: branch != "none",
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let closed = detects_sym3_sl2(9)?;
    let sl2_closed_form_agrees = rows
        .iter()
        .zip(&entries)
        .filter(|(_, e)| GroupSpec::from(*e).is_sl2())
        .all(|(r, _)| r.detected == closed);
    Ok(Gl9Report {
        rows,
        sl2_closed_form_agrees,
    })
}

/// Bounded-partition identities for `ℓ = 1..=ell_max`.
pub fn verify_corollary(ell_max: usize) -> Result<CorollaryReport> {
    crate::partitions::verify_corollary_identities(ell_max)
}
