//! Acceptance checks for the shipped verifier, one test per criterion.
//!
//! Every test drives the real binary end to end, reads back the JSON
//! report, and judges the residuals against the tolerances pinned below.
//! Each prints exactly one PASS/FAIL line (visible with `--nocapture`)
//! and asserts its own wall-clock budget, so both correctness and
//! asymptotic regressions surface here.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

/// Exact runs must report literal zeros.
const EXACT_TOL: f64 = 0.0;
/// Float runs are judged at this tolerance.
const FLOAT_TOL: f64 = 1e-9;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_nambu3")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn raw(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("the binary runs")
}

/// Run `nambu3 verify` with a JSON report and parse it.
fn verify(args: &[&str]) -> (i32, Value) {
    let mut full: Vec<&str> = vec!["verify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--report", "json"]);
    let out = raw(&full);
    let code = out.status.code().expect("terminated normally");
    let text = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let rep = if text.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&text).expect("stdout is one JSON report")
    };
    (code, rep)
}

fn check<'a>(rep: &'a Value, name: &str) -> Result<&'a Value, String> {
    rep["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == name))
        .ok_or_else(|| format!("check \"{name}\" missing from the report"))
}

fn residual(rep: &Value, name: &str) -> Result<f64, String> {
    check(rep, name)?["max_abs"]
        .as_f64()
        .ok_or_else(|| format!("check \"{name}\" has no numeric max_abs"))
}

fn trials(rep: &Value, name: &str) -> Result<u64, String> {
    check(rep, name)?["trials"]
        .as_u64()
        .ok_or_else(|| format!("check \"{name}\" has no trial count"))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// A judged identity row: exit 0, residual within `tol`, expected trials.
fn expect_identity(
    args: &[&str],
    name: &str,
    tol: f64,
    want_trials: u64,
) -> Result<f64, String> {
    let (code, rep) = verify(args);
    ensure(code == 0, format!("{args:?}: exit code {code}, want 0"))?;
    let r = residual(&rep, name)?;
    ensure(
        r <= tol,
        format!("{args:?}: {name} residual {r:e} exceeds {tol:e}"),
    )?;
    let t = trials(&rep, name)?;
    ensure(
        t == want_trials,
        format!("{args:?}: {name} ran {t} trials, want {want_trials}"),
    )?;
    Ok(r)
}

fn criterion(label: &str, budget: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => {
            println!("PASS  {label}  [{elapsed:.2?}]  {detail}");
            assert!(
                elapsed < budget,
                "{label}: {elapsed:?} exceeded the {budget:?} budget"
            );
        }
        Err(why) => {
            println!("FAIL  {label}  {why}");
            panic!("{label}: {why}");
        }
    }
}

#[test]
fn a01_ternary_filippov_jacobi_for_cubic_matrices() {
    criterion(
        "cubic Filippov-Jacobi",
        Duration::from_secs(40),
        || {
            for order in ["2", "3", "4"] {
                let t0 = Instant::now();
                expect_identity(
                    &[
                        "cubic-fi", "--order", order, "--trials", "1000", "--seed", "42",
                        "--range", "3",
                    ],
                    "filippov-jacobi",
                    EXACT_TOL,
                    1000,
                )?;
                ensure(
                    t0.elapsed() < Duration::from_secs(10),
                    format!("order {order} took {:?}, budget 10s", t0.elapsed()),
                )?;
            }
            let f = expect_identity(
                &[
                    "cubic-fi", "--order", "3", "--mode", "float", "--trials", "1000",
                ],
                "filippov-jacobi",
                FLOAT_TOL,
                1000,
            )?;
            Ok(format!(
                "exact residual 0 at orders 2,3,4 (1000 seeded trials each, range 3); \
                 float order 3 max residual {f:.2e} <= 1e-9"
            ))
        },
    );
}

#[test]
fn a02_the_four_triple_product_laws() {
    criterion(
        "triple-product laws",
        Duration::from_secs(10),
        || {
            for order in ["2", "3"] {
                let args = [
                    "cubic-prop1", "--order", order, "--trials", "1000", "--seed", "42",
                ];
                for name in [
                    "lr-associativity",
                    "adjoint-reversal",
                    "middle-reversal",
                    "outer-swap",
                ] {
                    expect_identity(&args, name, EXACT_TOL, 1000)?;
                }
            }
            Ok(
                "all four laws exact residual 0 at orders 2 and 3, 1000 trials each \
                 over complex integer entries (adjoint law included)"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a03_associativity_holds_lr_but_not_by_regrouping() {
    criterion(
        "associativity kinds",
        Duration::from_secs(5),
        || {
            let args = ["cubic-assoc", "--order", "3", "--trials", "500", "--seed", "42"];
            let (code, rep) = verify(&args);
            ensure(code == 0, format!("exit code {code}, want 0"))?;
            let lr = residual(&rep, "lr-associativity")?;
            ensure(lr <= EXACT_TOL, format!("lr residual {lr:e} is nonzero"))?;
            let first = residual(&rep, "first-kind-associativity")?;
            ensure(first > 0.0, "first-kind residual vanished on the corpus")?;
            let wit = &check(&rep, "first-kind-associativity")?["witness"];
            ensure(
                wit.is_object(),
                "no stored witness on the first-kind residual",
            )?;
            ensure(
                wit["args"].as_array().map(Vec::len) == Some(5),
                "witness does not embed the full 5-matrix tuple",
            )?;
            let second = residual(&rep, "second-kind-associativity")?;
            Ok(format!(
                "lr-associativity exact 0 over 500 trials; first-kind residual {first} \
                 and second-kind residual {second} exhibited with stored witnesses"
            ))
        },
    );
}

#[test]
fn a04_graded_filippov_jacobi_for_cubic_supermatrices() {
    criterion(
        "graded Filippov-Jacobi",
        Duration::from_secs(30),
        || {
            for (r, s) in [("1", "1"), ("2", "1")] {
                expect_identity(
                    &[
                        "super-gfi", "--r", r, "--s", s, "--trials", "20", "--seed", "42",
                    ],
                    "graded-filippov-jacobi",
                    EXACT_TOL,
                    32 * 20,
                )?;
            }
            let f = expect_identity(
                &[
                    "super-gfi", "--r", "2", "--s", "1", "--mode", "float", "--trials", "16",
                ],
                "graded-filippov-jacobi",
                FLOAT_TOL,
                32 * 16,
            )?;
            Ok(format!(
                "exact residual 0 for (r,s) in {{(1,1),(2,1)}} over all 32 degree \
                 patterns x 20 homogeneous quintuples; float (2,1) max residual \
                 {f:.2e} over 512 quintuples"
            ))
        },
    );
}

#[test]
fn a05_the_three_graded_triple_product_laws() {
    criterion(
        "graded triple-product laws",
        Duration::from_secs(20),
        || {
            for (r, s) in [("1", "1"), ("2", "1")] {
                let args = [
                    "super-prop2", "--r", r, "--s", s, "--trials", "20", "--seed", "42",
                ];
                for name in ["nested-middle-swap", "signed-tail-swap", "head-exchange"] {
                    expect_identity(&args, name, EXACT_TOL, 32 * 20)?;
                }
            }
            Ok(
                "all three laws (including the parity sign on the tail swap) exact \
                 residual 0 for (r,s) in {(1,1),(2,1)} over all 32 degree patterns x 20 \
                 quintuples"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a06_trace_and_supertrace_laws() {
    criterion(
        "trace laws",
        Duration::from_secs(5),
        || {
            for (order, r, s) in [("4", "2", "2"), ("2", "1", "1")] {
                let args = [
                    "trace-laws", "--order", order, "--r", r, "--s", s, "--trials", "1000",
                    "--seed", "42",
                ];
                for name in [
                    "commutator-trace",
                    "supercommutator-supertrace",
                    "odd-supertrace",
                    "adjoint-trace-conjugation",
                ] {
                    expect_identity(&args, name, EXACT_TOL, 1000)?;
                }
            }
            Ok(
                "commutator trace, graded-commutator supertrace, odd supertrace, and \
                 adjoint conjugation all exact residual 0, 1000 trials each, orders 2 \
                 and 4"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a07_wedge_condition_implies_the_induced_identity() {
    criterion(
        "induced-bracket sufficiency (ungraded)",
        Duration::from_secs(60),
        || {
            // Matrix units of order 2 with the trace cochain: the 4^5 basis
            // 5-tuples are swept exhaustively.
            let (code, rep) = verify(&["cochain-fi", "--order", "2"]);
            ensure(code == 0, format!("order 2: exit {code}"))?;
            ensure(
                residual(&rep, "wedge-norm")? <= EXACT_TOL,
                "order 2: wedge norm is nonzero",
            )?;
            ensure(
                residual(&rep, "induced-filippov-jacobi")? <= EXACT_TOL,
                "order 2: identity residual is nonzero",
            )?;
            ensure(
                trials(&rep, "induced-filippov-jacobi")? == 1024,
                "order 2: expected the exhaustive 4^5 = 1024 sweep",
            )?;
            ensure(
                rep["config"]["sampling"]["mode"] == "exhaustive",
                "order 2: sampling mode is not exhaustive",
            )?;

            // Matrix units of order 3: seeded random 5-tuples.
            let (code, rep) = verify(&[
                "cochain-fi", "--order", "3", "--sample", "random", "--trials", "2000",
                "--seed", "42",
            ]);
            ensure(code == 0, format!("order 3: exit {code}"))?;
            ensure(
                residual(&rep, "wedge-norm")? <= EXACT_TOL,
                "order 3: wedge norm is nonzero",
            )?;
            ensure(
                residual(&rep, "induced-filippov-jacobi")? <= EXACT_TOL,
                "order 3: identity residual is nonzero",
            )?;
            ensure(
                trials(&rep, "induced-filippov-jacobi")? == 2000,
                "order 3: expected 2000 random tuples",
            )?;
            ensure(
                rep["config"]["sampling"]["mode"] == "random",
                "order 3: sampling mode is not random",
            )?;

            // Arity 4: a degree-2 cochain on an abelian algebra is trivially
            // closed, and the quaternary identity holds exhaustively.
            let (code, rep) = verify(&[
                "cochain-fi",
                "--algebra",
                &fixture("abelian4_algebra.json"),
                "--cochain",
                &fixture("abelian4_omega2.json"),
                "--arity",
                "4",
            ]);
            ensure(code == 0, format!("arity 4: exit {code}"))?;
            ensure(
                residual(&rep, "wedge-norm")? <= EXACT_TOL,
                "arity 4: wedge norm is nonzero",
            )?;
            ensure(
                residual(&rep, "induced-filippov-jacobi")? <= EXACT_TOL,
                "arity 4: identity residual is nonzero",
            )?;
            ensure(
                trials(&rep, "induced-filippov-jacobi")? == 16384,
                "arity 4: expected the exhaustive 4^7 = 16384 sweep",
            )?;
            Ok(
                "wedge norm 0 and identity residual 0: order-2 matrix units \
                 exhaustively (1024 tuples), order-3 on 2000 seeded tuples, and a \
                 quaternary abelian case exhaustively (16384 tuples)"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a08_graded_hypotheses_imply_the_graded_identity() {
    criterion(
        "induced-bracket sufficiency (graded)",
        Duration::from_secs(60),
        || {
            // Matrix units with blocks (1|1) and the supertrace cochain:
            // hypotheses verified on all basis elements/triples, identity on
            // the exhaustive 4^5 sweep.
            let (code, rep) = verify(&["cochain-gfi", "--m", "1", "--n", "1"]);
            ensure(code == 0, format!("(1|1): exit {code}"))?;
            ensure(
                residual(&rep, "odd-argument-vanishing")? <= EXACT_TOL,
                "(1|1): the cochain sees odd basis vectors",
            )?;
            ensure(
                residual(&rep, "ternary-closure")? <= EXACT_TOL,
                "(1|1): the cochain does not vanish on induced brackets",
            )?;
            ensure(
                trials(&rep, "ternary-closure")? == 64,
                "(1|1): closure must sweep all 4^3 basis triples",
            )?;
            ensure(
                residual(&rep, "induced-graded-filippov-jacobi")? <= EXACT_TOL,
                "(1|1): identity residual is nonzero",
            )?;
            ensure(
                trials(&rep, "induced-graded-filippov-jacobi")? == 1024,
                "(1|1): expected the exhaustive 4^5 = 1024 sweep",
            )?;

            // Blocks (2|1): seeded random homogeneous tuples.
            let (code, rep) = verify(&[
                "cochain-gfi", "--m", "2", "--n", "1", "--sample", "random", "--trials",
                "500", "--seed", "42",
            ]);
            ensure(code == 0, format!("(2|1): exit {code}"))?;
            ensure(
                residual(&rep, "odd-argument-vanishing")? <= EXACT_TOL,
                "(2|1): the cochain sees odd basis vectors",
            )?;
            ensure(
                residual(&rep, "ternary-closure")? <= EXACT_TOL,
                "(2|1): the cochain does not vanish on induced brackets",
            )?;
            ensure(
                residual(&rep, "induced-graded-filippov-jacobi")? <= EXACT_TOL,
                "(2|1): identity residual is nonzero",
            )?;
            ensure(
                trials(&rep, "induced-graded-filippov-jacobi")? == 500,
                "(2|1): expected 500 random tuples",
            )?;
            Ok(
                "hypotheses exact on all basis elements/triples and identity residual \
                 0: blocks (1|1) exhaustively (1024 tuples), blocks (2|1) on 500 \
                 seeded homogeneous tuples"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a09_structure_constants_match_dense_matrix_arithmetic() {
    criterion(
        "dense-matrix crosscheck",
        Duration::from_secs(5),
        || {
            let args = ["gl-crosscheck", "--trials", "100", "--seed", "42"];
            for name in [
                "binary-bracket-crosscheck",
                "ternary-bracket-crosscheck",
                "graded-ternary-crosscheck",
            ] {
                expect_identity(&args, name, EXACT_TOL, 100)?;
            }
            Ok(
                "binary, ternary, and graded ternary brackets agree entrywise with \
                 the independent dense evaluation on 100 seeded tuples each"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a10_both_bracket_presentations_coincide() {
    criterion(
        "bracket presentation equivalence",
        Duration::from_secs(40),
        || {
            expect_identity(
                &["cubic-fi", "--order", "3", "--trials", "1000", "--seed", "42"],
                "ternary-bracket-equivalence",
                EXACT_TOL,
                1000,
            )?;
            for (r, s) in [("1", "1"), ("2", "1")] {
                expect_identity(
                    &[
                        "super-gfi", "--r", r, "--s", s, "--trials", "20", "--seed", "42",
                    ],
                    "graded-bracket-equivalence",
                    EXACT_TOL,
                    32 * 20,
                )?;
            }
            Ok(
                "the quantum bracket equals the alternating sum of triple products \
                 (1000 trials), and the graded bracket equals its sign-weighted sum \
                 on every degree pattern for (1,1) and (2,1)"
                    .to_string(),
            )
        },
    );
}

#[test]
fn a11_nonvanishing_wedge_exploration_terminates_and_reports() {
    criterion(
        "wedge-hypothesis exploration",
        Duration::from_secs(1),
        || {
            let (code, rep) = verify(&[
                "cochain-fi",
                "--algebra",
                &fixture("h3_algebra.json"),
                "--cochain",
                &fixture("e3_dual_cochain.json"),
            ]);
            ensure(code == 0, format!("exit {code}, want 0"))?;
            let wedge = residual(&rep, "wedge-norm")?;
            ensure(
                wedge == 1.0,
                format!("wedge norm {wedge}, want exactly 1"),
            )?;
            let fi = check(&rep, "induced-filippov-jacobi")?;
            let swept = fi["trials"].as_u64().unwrap_or(0);
            ensure(swept == 243, format!("swept {swept} tuples, want 3^5 = 243"))?;
            ensure(
                fi["note"].is_string(),
                "the unjudged identity row must say why it carries no judgment",
            )?;
            let observed = fi["max_abs"].as_f64().unwrap_or(f64::NAN);
            ensure(
                observed == 0.0,
                format!("recorded outcome changed: max residual {observed}, want 0"),
            )?;
            Ok(format!(
                "wedge norm exactly 1 (hypothesis fails) yet the exhaustive 243-tuple \
                 search recorded max residual {observed}: no violation exists, so the \
                 wedge condition is sufficient but not necessary"
            ))
        },
    );
}

#[test]
fn a12_reports_are_deterministic_and_exit_codes_conform() {
    criterion(
        "determinism and exit codes",
        Duration::from_secs(30),
        || {
            for args in [
                vec!["verify", "cubic-fi", "--trials", "50", "--report", "json"],
                vec!["verify", "super-prop2", "--trials", "3", "--report", "json"],
                vec!["verify", "cochain-gfi", "--report", "json"],
            ] {
                let first = raw(&args);
                let second = raw(&args);
                ensure(
                    first.status.code() == Some(0),
                    format!("{args:?} did not pass"),
                )?;
                ensure(
                    first.stdout == second.stdout && !first.stdout.is_empty(),
                    format!("{args:?} reports differ between runs"),
                )?;
            }

            let pass = raw(&[
                "verify",
                "cochain-fi",
                "--algebra",
                &fixture("gl2_algebra.json"),
                "--cochain",
                &fixture("gl2_trace_cochain.json"),
            ]);
            ensure(
                pass.status.code() == Some(0),
                "the passing fixture must exit 0",
            )?;

            let (code, rep) = verify(&[
                "cochain-fi",
                "--algebra",
                &fixture("broken_jacobi_algebra.json"),
                "--cochain",
                &fixture("e3_dual_cochain.json"),
            ]);
            ensure(code == 1, format!("the failing fixture exited {code}, want 1"))?;
            let witnessed = rep["checks"]
                .as_array()
                .map(|cs| {
                    cs.iter()
                        .any(|c| c["pass"] == Value::Bool(false) && c["witness"].is_object())
                })
                .unwrap_or(false);
            ensure(witnessed, "the failing fixture's report carries no witness")?;

            let bad = raw(&[
                "verify",
                "cochain-fi",
                "--algebra",
                &fixture("malformed.json"),
                "--cochain",
                &fixture("e3_dual_cochain.json"),
            ]);
            ensure(
                bad.status.code() == Some(2),
                "the malformed fixture must exit 2",
            )?;
            Ok(
                "byte-identical JSON reports across repeated runs of three suites; \
                 the pass/fail/malformed fixture trio exits 0/1/2 with a witness on \
                 the failure"
                    .to_string(),
            )
        },
    );
}
