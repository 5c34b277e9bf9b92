//! Plain-text reports. Output depends only on the inputs, never on timing or
//! thread scheduling.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::arith::{factor_integer, FactoredInteger};
use crate::criteria::{
    Conclusion, DedekindOutcome, IrreducibilityWitness, MonogenicityCertificate, Verdict,
    WitnessMethod,
};
use crate::harness::{Expectation, GalleryEntry, GalleryEvidence, IdentityReport, TheoremRow};
use crate::modpoly::ModFactorization;

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
    }
}

pub fn conclusion_str(c: Conclusion) -> &'static str {
    match c {
        Conclusion::Monogenic => "monogenic",
        Conclusion::NotMonogenic => "not_monogenic",
        Conclusion::Inconclusive => "inconclusive",
    }
}

/// `-2^4*3^3`, with any unfactored part appended in brackets.
pub fn factored_str(f: &FactoredInteger) -> String {
    let mut parts: Vec<String> = f
        .factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    if !f.is_complete() {
        parts.push(format!("[{}]", f.cofactor));
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    let sign = if f.sign < 0 { "-" } else { "" };
    format!("{sign}{}", parts.join("*"))
}

fn factored_int(n: &BigInt) -> String {
    match factor_integer(n) {
        Ok(f) => factored_str(&f),
        Err(_) => n.to_string(),
    }
}

pub fn witness_str(w: &IrreducibilityWitness) -> String {
    match &w.method {
        WitnessMethod::Eisenstein { p, shift: 0 } => format!("{p}-Eisenstein"),
        WitnessMethod::Eisenstein { p, shift } => format!("{p}-Eisenstein after x -> x{shift:+}"),
        WitnessMethod::ModPrime { q } => format!("irreducible mod {q}"),
        WitnessMethod::FactorFound { factor } => format!("factor {factor}"),
        WitnessMethod::SearchExhausted {
            prime,
            local_factors,
        } => match prime {
            Some(q) => format!("recombination of {local_factors} factors mod {q}"),
            None => format!("recombination of {local_factors} factors"),
        },
    }
}

fn status_str(w: &IrreducibilityWitness) -> &'static str {
    use crate::criteria::IrreducibilityStatus::*;
    match w.status {
        Irreducible => "irreducible",
        Reducible => "reducible",
        Unknown => "unknown",
    }
}

pub fn render_theorem_table(rows: &[TheoremRow]) -> String {
    let mut s = String::new();
    let yn = |b: bool| if b { "yes" } else { "NO" };
    writeln!(
        s,
        "{:>3} {:>2} {:>2} {:>4}  {:<4} {:<4} {:<4} {:<8} {:<4} {:<4} {:<6} {:<13} disc",
        "p",
        "m",
        "n",
        "deg",
        "eis",
        "T(0)",
        "x^d",
        "oracle",
        "D(2)",
        "D(p)",
        "conrad",
        "conclusion"
    )
    .unwrap();
    for r in rows {
        let oracle = match &r.disc_oracle {
            None => "skipped",
            Some(d) if *d == r.disc_closed_form => "agrees",
            Some(_) => "MISMATCH",
        };
        let conrad = match r.conrad {
            None => "-",
            Some(true) => "ok",
            Some(false) => "FAIL",
        };
        writeln!(
            s,
            "{:>3} {:>2} {:>2} {:>4}  {:<4} {:<4} {:<4} {:<8} {:<4} {:<4} {:<6} {:<13} {}",
            r.params.p,
            r.params.m,
            r.params.n,
            r.degree,
            yn(r.eisenstein_ok),
            yn(r.const_term_ok),
            yn(r.reduction_ok),
            oracle,
            verdict_str(r.dedekind_2),
            verdict_str(r.dedekind_p),
            conrad,
            conclusion_str(r.conclusion),
            factored_int(&r.disc_closed_form),
        )
        .unwrap();
    }

    let flagged: Vec<&TheoremRow> = rows
        .iter()
        .filter(|r| r.audit.as_ref().is_some_and(|a| a.deviates()))
        .collect();
    writeln!(s).unwrap();
    writeln!(
        s,
        "simplified discriminant form: {} of {} rows deviate",
        flagged.len(),
        rows.len()
    )
    .unwrap();
    for r in flagged {
        let a = r.audit.as_ref().unwrap();
        let mut notes = Vec::new();
        if a.sign_mismatch {
            let sign = |neg: bool| if neg { "negative" } else { "positive" };
            notes.push(format!(
                "sign exact {} vs simplified {}",
                sign(r.disc_closed_form.sign() == num_bigint::Sign::Minus),
                sign(a.simplified.sign() == num_bigint::Sign::Minus)
            ));
        }
        if a.p_exponent_exact != a.p_exponent_simplified {
            notes.push(format!(
                "v_{} exact {} vs simplified {}",
                r.params.p, a.p_exponent_exact, a.p_exponent_simplified
            ));
        }
        if r.params.p != 2 && a.two_exponent_exact != a.two_exponent_simplified {
            notes.push(format!(
                "v_2 exact {} vs simplified {}",
                a.two_exponent_exact, a.two_exponent_simplified
            ));
        }
        writeln!(
            s,
            "  ({},{},{}): {}",
            r.params.p,
            r.params.m,
            r.params.n,
            notes.join("; ")
        )
        .unwrap();
    }

    let monogenic = rows
        .iter()
        .filter(|r| r.conclusion == Conclusion::Monogenic)
        .count();
    let clean = rows.iter().filter(|r| r.is_clean()).count();
    writeln!(s).unwrap();
    writeln!(
        s,
        "rows: {}  monogenic: {}  all checks clean: {}",
        rows.len(),
        monogenic,
        clean
    )
    .unwrap();
    s
}

pub fn render_identity_report(report: &IdentityReport) -> String {
    let mut s = String::new();
    for c in &report.checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        writeln!(
            s,
            "{status} {} ({} cases, {} failures)",
            c.name, c.cases, c.failures
        )
        .unwrap();
        if let Some(ce) = &c.first_counterexample {
            writeln!(s, "     first counterexample: {ce}").unwrap();
        }
    }
    s
}

fn expectation_str(e: Expectation) -> &'static str {
    match e {
        Expectation::Reducible => "reducible",
        Expectation::IrreducibleNotMonogenic => "irreducible, not monogenic",
        Expectation::Monogenic => "monogenic",
        Expectation::NotMonogenic => "not monogenic",
    }
}

pub fn render_gallery(entries: &[GalleryEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        let status = if e.passed { "PASS" } else { "FAIL" };
        writeln!(s, "{status} {} = {}", e.label, e.poly).unwrap();
        writeln!(s, "     expected: {}", expectation_str(e.expected)).unwrap();
        match &e.evidence {
            GalleryEvidence::Factor { factor, cofactor } => {
                writeln!(s, "     reducible: ({factor}) * ({cofactor})").unwrap();
            }
            GalleryEvidence::Irreducibility(w) => {
                writeln!(s, "     {}: {}", status_str(w), witness_str(w)).unwrap();
            }
            GalleryEvidence::Certificate(c) => {
                writeln!(
                    s,
                    "     {}: {}; disc = {}",
                    status_str(&c.irreducibility),
                    witness_str(&c.irreducibility),
                    factored_str(&c.disc_factored)
                )
                .unwrap();
                for o in &c.dedekind {
                    writeln!(s, "     Dedekind at {}: {}", o.p, verdict_str(o.verdict)).unwrap();
                }
                writeln!(s, "     conclusion: {}", conclusion_str(c.conclusion)).unwrap();
            }
        }
    }
    s
}

fn dedekind_line(o: &DedekindOutcome) -> String {
    format!(
        "p = {}: {} (g = {}, h = {}, F = {}, gcd = {})",
        o.p,
        verdict_str(o.verdict),
        o.g_lift,
        o.h_lift,
        o.carry,
        o.gcd_bar
    )
}

pub fn render_certificate(c: &MonogenicityCertificate) -> String {
    let mut s = String::new();
    writeln!(s, "polynomial:     {}", c.poly).unwrap();
    writeln!(s, "degree:         {}", c.poly.degree().unwrap_or(0)).unwrap();
    writeln!(s, "discriminant:   {}", c.disc).unwrap();
    writeln!(s, "factored:       {}", factored_str(&c.disc_factored)).unwrap();
    writeln!(
        s,
        "irreducibility: {} ({})",
        status_str(&c.irreducibility),
        witness_str(&c.irreducibility)
    )
    .unwrap();
    if c.dedekind.is_empty() {
        writeln!(s, "dedekind:       no primes tested").unwrap();
    }
    for o in &c.dedekind {
        writeln!(s, "dedekind:       {}", dedekind_line(o)).unwrap();
    }
    writeln!(s, "conclusion:     {}", conclusion_str(c.conclusion)).unwrap();
    s
}

pub fn render_factorization(f: &ModFactorization, p: u64) -> String {
    let mut s = String::new();
    writeln!(s, "unit {} (mod {p})", f.unit).unwrap();
    for (g, e) in &f.factors {
        let text = g.to_intpoly().to_string();
        if *e == 1 {
            writeln!(s, "({text})").unwrap();
        } else {
            writeln!(s, "({text})^{e}").unwrap();
        }
    }
    s
}
