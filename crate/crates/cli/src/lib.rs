//! The `invline` command line. Parsing lives in [`args`]; [`execute`] turns a
//! parsed command into rendered output plus a verdict.

pub mod args;
mod output;

use std::ffi::OsString;
use std::fs;

use clap::Parser;
use invline_core::detect::{
    classify_gl9, verify_corollary, verify_plethysm_oracle, verify_properties, verify_rs_detection,
    verify_theorem_a1, verify_theorem_a2, verify_theorem_schur, SchurSweep,
};
use invline_core::lie::enumerate_irreps_of_dim;
use invline_core::lr::tensor_decompose_lr;
use invline_core::partitions::count_bounded_partitions;
use invline_core::plethysm::sym_of_sym_sl2;
use invline_core::{detect, Report, Table};
use serde::Serialize;

use args::{Cli, Command, Format, GlobalOpts, Suite, VerifyArgs};
pub use output::{
    EnumerateOutput, LrOutput, LrTerm, PartitionsOutput, SuiteOutcome, VerifyAllOutput,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Order in which `verify all` runs its suites.
pub const ALL_SUITES: [Suite; 7] = [
    Suite::Corollary,
    Suite::A1,
    Suite::PlethysmOracle,
    Suite::A2,
    Suite::Schur,
    Suite::Rs,
    Suite::Gl9,
];

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    /// False when a verification found a counterexample.
    pub passed: bool,
}

fn render<T: Serialize>(value: &T, table: impl FnOnce() -> String, format: Format) -> String {
    match format {
        Format::Table => table(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
            s.push('\n');
            s
        }
    }
}

fn report_outcome<R: Report>(report: &R, format: Format) -> Outcome {
    Outcome {
        text: render(report, || report.table().render(), format),
        passed: report.passed(),
    }
}

/// Flags that shape a suite, named in its error messages.
fn suite_flags(suite: Suite) -> &'static str {
    match suite {
        Suite::A1 => "--n-max",
        Suite::A2 => "--k-max",
        Suite::Schur => "--size-max/--window",
        Suite::Corollary => "--ell-max",
        Suite::Gl9 => "--size-cap",
        Suite::Rs => "--m",
        Suite::PlethysmOracle => "--js/--k-max",
        Suite::Props => "--seed",
        Suite::All => "",
    }
}

/// Runs a suite; returns the outcome, suite name and JSON value.
fn run_suite(
    suite: Suite,
    args: &VerifyArgs,
    global: &GlobalOpts,
) -> Result<(Outcome, &'static str, serde_json::Value), String> {
    fn pack<R: Report>(r: R, format: Format) -> (Outcome, &'static str, serde_json::Value) {
        let value = serde_json::to_value(&r).expect("report types serialize");
        (report_outcome(&r, format), r.suite(), value)
    }
    let cap = global.cap();
    let f = global.format;
    let ctx = |e: invline_core::Error| format!("verify ({}): {e}", suite_flags(suite));
    Ok(match suite {
        Suite::A1 => pack(verify_theorem_a1(args.n_max, cap).map_err(ctx)?, f),
        Suite::A2 => pack(
            verify_theorem_a2(args.k_max.unwrap_or(6), cap).map_err(ctx)?,
            f,
        ),
        Suite::Schur => {
            let sweep = SchurSweep {
                size_max: args.size_max,
                window: args.window,
                exploratory: args.exploratory,
                ..SchurSweep::default()
            };
            pack(verify_theorem_schur(sweep, cap).map_err(ctx)?, f)
        }
        Suite::Corollary => pack(verify_corollary(args.ell_max).map_err(ctx)?, f),
        Suite::Gl9 => pack(classify_gl9(cap).map_err(ctx)?, f),
        Suite::Rs => pack(verify_rs_detection(&args.m, cap).map_err(ctx)?, f),
        Suite::PlethysmOracle => pack(
            verify_plethysm_oracle(&args.js, args.k_max.unwrap_or(8), cap).map_err(ctx)?,
            f,
        ),
        Suite::Props => pack(verify_properties(args.seed, cap).map_err(ctx)?, f),
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn verify(args: &VerifyArgs, global: &GlobalOpts) -> Result<Outcome, String> {
    if args.suite != Suite::All {
        return Ok(run_suite(args.suite, args, global)?.0);
    }
    let mut texts = Vec::new();
    let mut suites = Vec::new();
    for suite in ALL_SUITES {
        let (outcome, name, report) = run_suite(suite, args, global)?;
        texts.push(outcome.text);
        suites.push(SuiteOutcome {
            suite: name.to_string(),
            passed: outcome.passed,
            report,
        });
    }
    let all = VerifyAllOutput {
        passed: suites.iter().all(|s| s.passed),
        suites,
    };
    let text = render(
        &all,
        || {
            let mut summary = Table::new("summary", &["suite", "result"]);
            for s in &all.suites {
                summary.row(vec![
                    s.suite.clone(),
                    if s.passed { "pass" } else { "FAIL" }.to_string(),
                ]);
            }
            texts.push(summary.render());
            texts.join("\n")
        },
        global.format,
    );
    Ok(Outcome {
        text,
        passed: all.passed,
    })
}

/// Executes a parsed command. Errors are usage or size-cap failures, with
/// the offending flag or argument named.
pub fn execute(cli: &Cli) -> Result<Outcome, String> {
    let g = &cli.global;
    let ok = |text| Outcome { text, passed: true };
    match &cli.command {
        Command::Lr { lambda, mu, rank } => {
            let d = tensor_decompose_lr(lambda, mu, *rank)
                .map_err(|e| format!("lr (--rank {rank}): {e}"))?;
            let out = LrOutput::new(lambda, mu, &d);
            Ok(ok(render(&out, || out.table().render(), g.format)))
        }
        Command::Plethysm { j, k } => {
            let d =
                sym_of_sym_sl2(*j, *k).map_err(|e| format!("plethysm (j = {j}, k = {k}): {e}"))?;
            let terms = d.to_term_list();
            let table = || {
                let mut t = Table::new(
                    format!("Sym^{j}(Sym^{k}) over SL2"),
                    &["highest weight", "multiplicity"],
                );
                for term in &terms.terms {
                    t.row(vec![term.weight[0].to_string(), term.mult.clone()]);
                }
                t.note(format!("dimension {}", d.dimension()));
                t.render()
            };
            Ok(ok(render(&terms, table, g.format)))
        }
        Command::Partitions { k, j, n } => {
            let out = PartitionsOutput {
                k: *k,
                j: *j,
                n: *n,
                count: count_bounded_partitions(*k, *j, *n),
            };
            Ok(ok(render(&out, || format!("{}\n", out.count), g.format)))
        }
        Command::EnumerateDim { d } => {
            let out = EnumerateOutput {
                dimension: *d,
                entries: enumerate_irreps_of_dim(*d)
                    .map_err(|e| format!("enumerate-dim (d = {d}): {e}"))?,
            };
            Ok(ok(render(&out, || out.table().render(), g.format)))
        }
        Command::Detect { group, functor } => {
            let report = detect(group, *functor, g.cap())
                .map_err(|e| format!("detect (--group {group}, --functor {functor}): {e}"))?;
            Ok(ok(render(&report, || report.table().render(), g.format)))
        }
        Command::Verify(args) => verify(args, g),
    }
}

/// Full program: parse, execute, write, and map to an exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("error: --out {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.text),
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}
