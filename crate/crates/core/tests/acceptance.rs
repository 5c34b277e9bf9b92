//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every comparison is exact.

mod common;

use std::process::{Command, ExitCode};

use common::sylvester_discriminant;
use cyclomono::cli::report::render_theorem_table;
use cyclomono::criteria::{conrad_check, dedekind_test, dedekind_with_lifts, Conclusion, Verdict};
use cyclomono::cyclotomic::{build_t, cyclotomic_poly, CycloParams};
use cyclomono::harness::{
    factor_shape, final_remarks_suite, inflation_identity, power_congruence,
    prime_power_congruence, product_identity, resultant_closed_form, verify_main_theorem,
    GalleryEvidence, GridSpec, TheoremRow, DEFAULT_P_SET,
};
use cyclomono::IntPoly;
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn row(rows: &[TheoremRow], p: u64, m: u32, n: u32) -> Result<&TheoremRow, String> {
    rows.iter()
        .find(|r| r.params == CycloParams { p, m, n })
        .ok_or_else(|| format!("row ({p},{m},{n}) missing"))
}

fn grid_monogenic(rows: &[TheoremRow]) -> Outcome {
    let expected = GridSpec::default().cases().map_err(|e| e.to_string())?;
    ensure(rows.len() == expected.len(), || {
        format!("{} rows, expected {}", rows.len(), expected.len())
    })?;
    for r in rows {
        ensure(r.conclusion == Conclusion::Monogenic, || {
            format!("{:?} concluded {:?}", r.params, r.conclusion)
        })?;
        ensure(r.eisenstein_ok && r.const_term_ok && r.reduction_ok, || {
            format!("{:?}: structural check failed", r.params)
        })?;
    }
    Ok(format!("{} of {} rows monogenic", rows.len(), rows.len()))
}

fn disc_oracle(rows: &[TheoremRow]) -> Outcome {
    let mut compared = 0;
    for r in rows.iter().filter(|r| r.degree <= 128) {
        let oracle = r
            .disc_oracle
            .as_ref()
            .ok_or_else(|| format!("{:?}: oracle not run", r.params))?;
        ensure(*oracle == r.disc_closed_form, || {
            format!("{:?}: {} vs {}", r.params, oracle, r.disc_closed_form)
        })?;
        compared += 1;
    }
    // a second, determinant-based oracle on the smaller rows
    let mut sylvester = 0;
    for r in rows.iter().filter(|r| r.degree >= 2 && r.degree <= 24) {
        let d = sylvester_discriminant(&build_t(r.params));
        ensure(d == r.disc_closed_form, || {
            format!("{:?}: Sylvester {} vs {}", r.params, d, r.disc_closed_form)
        })?;
        sylvester += 1;
    }
    let spots = [
        ((3, 1, 2), big(432)),
        ((2, 1, 2), big(-8)),
        ((3, 2, 2), big(2).pow(12u32) * big(3).pow(19u32)),
        ((5, 1, 2), big(20_000_000)),
    ];
    for ((p, m, n), want) in spots {
        let r = row(rows, p, m, n)?;
        ensure(r.disc_closed_form == want, || {
            format!("({p},{m},{n}): {} vs {want}", r.disc_closed_form)
        })?;
    }
    Ok(format!("{compared} rows agree exactly ({sylvester} also by Sylvester determinant); spot values hold"))
}

fn simplified_audit(rows: &[TheoremRow]) -> Outcome {
    let r = row(rows, 3, 2, 2)?;
    let a = r.audit.as_ref().ok_or("no audit at (3,2,2)")?;
    ensure(
        a.p_exponent_exact == 19 && a.p_exponent_simplified == 23,
        || {
            format!(
                "(3,2,2): v_3 {} vs {}",
                a.p_exponent_exact, a.p_exponent_simplified
            )
        },
    )?;
    let r = row(rows, 2, 1, 2)?;
    let a = r.audit.as_ref().ok_or("no audit at (2,1,2)")?;
    ensure(
        a.sign_mismatch && r.disc_closed_form < big(0) && a.simplified > big(0),
        || "(2,1,2): sign deviation not detected".to_string(),
    )?;
    let table = render_theorem_table(rows);
    ensure(
        table.contains("(3,2,2): v_3 exact 19 vs simplified 23"),
        || "report lacks (3,2,2) flag".into(),
    )?;
    ensure(
        table.contains("(2,1,2): sign exact negative vs simplified positive"),
        || "report lacks (2,1,2) flag".into(),
    )?;
    Ok("v_3 = 19 vs simplified 23 at (3,2,2); sign negative vs simplified positive at (2,1,2); both flagged".into())
}

fn dresden() -> Outcome {
    let c = resultant_closed_form(60).map_err(|e| e.to_string())?;
    ensure(c.cases == 1770, || format!("{} pairs", c.cases))?;
    ensure(c.passed(), || format!("{:?}", c.first_counterexample))?;
    Ok("1770 pairs exact".into())
}

fn identity_sweeps() -> Outcome {
    let checks = [
        product_identity(120),
        inflation_identity(50, &DEFAULT_P_SET),
        factor_shape(50, &DEFAULT_P_SET, 0).map_err(|e| e.to_string())?,
        prime_power_congruence(&DEFAULT_P_SET, 200).map_err(|e| e.to_string())?,
    ];
    for c in &checks {
        ensure(c.passed(), || {
            format!("{}: {:?}", c.name, c.first_counterexample)
        })?;
    }
    let counts: Vec<String> = checks.iter().map(|c| c.cases.to_string()).collect();
    Ok(format!(
        "product, inflation, shape, congruence: {} cases",
        counts.join("/")
    ))
}

fn power_pairs() -> Outcome {
    let c = power_congruence(200, 0).map_err(|e| e.to_string())?;
    ensure(c.cases == 200 && c.passed(), || {
        format!("{:?}", c.first_counterexample)
    })?;
    Ok("200 random pairs hold".into())
}

fn gallery() -> Outcome {
    let entries = final_remarks_suite().map_err(|e| e.to_string())?;
    ensure(entries.len() == 6, || format!("{} entries", entries.len()))?;
    let mut notes = Vec::new();
    for e in &entries {
        ensure(e.passed, || format!("{} failed", e.label))?;
        match &e.evidence {
            GalleryEvidence::Factor { factor, cofactor } => {
                ensure(factor * cofactor == e.poly, || {
                    format!("{}: factors do not multiply back", e.label)
                })?;
            }
            GalleryEvidence::Certificate(c) if !c.failing_primes().is_empty() => {
                notes.push(format!("{} fails at {:?}", e.label, c.failing_primes()));
            }
            _ => {}
        }
    }
    let first = &entries[0];
    ensure(
        matches!(&first.evidence, GalleryEvidence::Factor { factor, .. } if *factor == IntPoly::from_i64(&[1, 0, 1])),
        || "Phi_4(Phi_3) factor is not x^2+1".into(),
    )?;
    Ok(format!("all 6 entries hold; {}", notes.join(", ")))
}

fn conrad(rows: &[TheoremRow]) -> Outcome {
    let mut n = 0;
    let mut direct = 0;
    for r in rows
        .iter()
        .filter(|r| r.params.m == 1 && r.degree % r.params.p != 0)
    {
        ensure(r.conrad == Some(true), || {
            format!("{:?}: {:?}", r.params, r.conrad)
        })?;
        n += 1;
        if r.degree <= 32 {
            let ok = conrad_check(&build_t(r.params), &BigUint::from(r.params.p))
                .map_err(|e| e.to_string())?;
            ensure(ok, || format!("{:?}: direct check false", r.params))?;
            direct += 1;
        }
    }
    Ok(format!(
        "{n} rows with v_p(disc) = deg - 1 ({direct} rechecked from scratch)"
    ))
}

fn relift(f: &IntPoly, p: u64, rng: &mut ChaCha8Rng) -> IntPoly {
    let d = f.degree().unwrap_or(0);
    let r = IntPoly::new(
        (0..d)
            .map(|_| BigInt::from(rng.gen_range(-1000i64..=1000)))
            .collect(),
    );
    f + &r.scale(&BigInt::from(p))
}

fn lift_independence() -> Outcome {
    let t = |p, m, n| build_t(CycloParams::new(p, m, n).unwrap());
    let cases: Vec<(IntPoly, u64)> = vec![
        (t(3, 1, 2), 2),
        (t(3, 1, 2), 3),
        (t(2, 1, 3), 2),
        (t(5, 1, 2), 5),
        (t(3, 2, 2), 3),
        (IntPoly::from_i64(&[1, 0, 1]), 2),
        (IntPoly::from_i64(&[-5, 0, 1]), 2),
        (IntPoly::from_i64(&[294, 0, 34, 0, 1]), 7),
        (IntPoly::from_i64(&[42, 0, 10, 0, 1]), 17),
        (cyclotomic_poly(2).compose(&cyclotomic_poly(25)), 5),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut fails = 0;
    for (poly, p) in &cases {
        let base = dedekind_test(poly, *p).map_err(|e| e.to_string())?;
        if base.verdict == Verdict::Fail {
            fails += 1;
        }
        for _ in 0..100 {
            let g = relift(&base.g_lift, *p, &mut rng);
            let h = relift(&base.h_lift, *p, &mut rng);
            let again = dedekind_with_lifts(poly, *p, &g, &h).map_err(|e| e.to_string())?;
            ensure(again.verdict == base.verdict, || {
                format!("{poly} at {p}: verdict changed")
            })?;
        }
    }
    Ok(format!(
        "1000 re-lifts over 10 cases ({fails} failing, {} passing) never flip",
        10 - fails
    ))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cyclomono"))
            .arg("verify-theorem")
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.code() == Some(0), || {
        format!("exit code {:?}", a.status.code())
    })?;
    ensure(a.status.code() == b.status.code(), || {
        "exit codes differ".into()
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let rows = verify_main_theorem(&GridSpec::default(), 0);
    let rows = match rows {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL grid could not run: {e}");
            return ExitCode::FAILURE;
        }
    };

    let criteria: Vec<Criterion> = vec![
        (
            "1 grid p<=13, m<=3, n<=5, deg<=256 all monogenic",
            Box::new(|| grid_monogenic(&rows)),
        ),
        (
            "2 discriminant oracle equals closed form, deg<=128",
            Box::new(|| disc_oracle(&rows)),
        ),
        (
            "3 simplified discriminant deviations flagged",
            Box::new(|| simplified_audit(&rows)),
        ),
        (
            "4 cyclotomic resultant closed form, m<n<=60",
            Box::new(dresden),
        ),
        (
            "5 inflation, shape and congruence sweeps",
            Box::new(identity_sweeps),
        ),
        (
            "6 power congruence, 200 random pairs",
            Box::new(power_pairs),
        ),
        (
            "7 gallery of non-examples and the quartic pair",
            Box::new(gallery),
        ),
        (
            "8 v_p(disc) = deg - 1 on m=1 rows",
            Box::new(|| conrad(&rows)),
        ),
        (
            "9 Dedekind verdicts independent of lifts",
            Box::new(lift_independence),
        ),
        (
            "10 verify-theorem output deterministic",
            Box::new(determinism),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed",
        criteria.len() - failed,
        failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
