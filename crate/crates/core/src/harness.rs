//! Reproduction suites: the `T = Phi_{p^m}(Phi_{2^n}(x))` grid, cyclotomic
//! identity sweeps, the power congruence check and the gallery of
//! non-examples.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{
    euler_phi, factor_integer, is_prime_u64, multiplicative_order, p_adic_valuation,
};
use crate::criteria::{
    certify_irreducible, conrad_check_with, dedekind_test, is_p_eisenstein, monogenicity_check,
    Conclusion, DedekindOutcome, IrreducibilityStatus, IrreducibilityWitness,
    MonogenicityCertificate, Verdict, WitnessMethod,
};
use crate::cyclotomic::{
    build_t, cyclo_disc_prime_power, cyclo_resultant, cyclotomic_poly, disc_t_closed_form,
    disc_t_simplified, CycloParams,
};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::modpoly::{factor_mod_seeded, reduce_mod, ModPoly};
use crate::resdisc::{discriminant, resultant};

pub const DEFAULT_P_SET: [u64; 6] = [2, 3, 5, 7, 11, 13];
pub const DEFAULT_M_MAX: u32 = 3;
pub const DEFAULT_N_MAX: u32 = 5;
pub const DEFAULT_DEG_CAP: u64 = 256;
pub const DEFAULT_ORACLE_CAP: u64 = 128;

/// Comparison of the exact discriminant of `T` with the single-product
/// simplification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedAudit {
    pub simplified: BigInt,
    pub sign_mismatch: bool,
    pub p_exponent_exact: u32,
    pub p_exponent_simplified: u32,
    pub two_exponent_exact: u32,
    pub two_exponent_simplified: u32,
}

impl SimplifiedAudit {
    pub fn deviates(&self) -> bool {
        self.sign_mismatch
            || self.p_exponent_exact != self.p_exponent_simplified
            || self.two_exponent_exact != self.two_exponent_simplified
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub params: CycloParams,
    pub degree: u64,
    pub eisenstein_ok: bool,
    /// `T(0) = p`
    pub const_term_ok: bool,
    /// `T = x^deg (mod p)`
    pub reduction_ok: bool,
    pub disc_oracle: Option<BigInt>,
    pub disc_closed_form: BigInt,
    /// `None` for `n = 1`, where no simplification applies.
    pub audit: Option<SimplifiedAudit>,
    pub dedekind_2: Verdict,
    pub dedekind_p: Verdict,
    /// `v_p(disc) = deg - 1`; only evaluated for `m = 1`, `p` not dividing
    /// the degree and a monogenic row.
    pub conrad: Option<bool>,
    pub conclusion: Conclusion,
}

impl TheoremRow {
    pub fn oracle_agrees(&self) -> bool {
        self.disc_oracle
            .as_ref()
            .is_none_or(|d| *d == self.disc_closed_form)
    }

    /// Every check on the row held.
    pub fn is_clean(&self) -> bool {
        self.conclusion == Conclusion::Monogenic
            && self.const_term_ok
            && self.reduction_ok
            && self.oracle_agrees()
            && self.conrad != Some(false)
    }
}

fn valuation(n: &BigInt, p: u64) -> u32 {
    p_adic_valuation(n, &BigUint::from(p)).expect("nonzero discriminant")
}

fn theorem_row(params: CycloParams, oracle_cap: u64) -> Result<TheoremRow> {
    let p = params.p;
    let degree = params.degree().expect("degree bounded by the cap");
    let t = build_t(params);
    let const_term_ok = t.constant_term() == BigInt::from(p);
    let reduction_ok = reduce_mod(&t, p)? == {
        let mut c = vec![0; degree as usize + 1];
        c[degree as usize] = 1;
        ModPoly::new(p, c)?
    };
    let eisenstein_ok = is_p_eisenstein(&t, &BigUint::from(p));

    let disc_closed_form = disc_t_closed_form(params);
    let disc_oracle = if degree <= oracle_cap {
        Some(discriminant(&t)?)
    } else {
        None
    };
    let audit = disc_t_simplified(params).map(|simplified| SimplifiedAudit {
        sign_mismatch: (simplified < BigInt::zero()) != (disc_closed_form < BigInt::zero()),
        p_exponent_exact: valuation(&disc_closed_form, p),
        p_exponent_simplified: valuation(&simplified, p),
        two_exponent_exact: valuation(&disc_closed_form, 2),
        two_exponent_simplified: valuation(&simplified, 2),
        simplified,
    });

    let out_2 = dedekind_test(&t, 2)?;
    let out_p = if p == 2 {
        out_2.clone()
    } else {
        dedekind_test(&t, p)?
    };
    let dedekind_2 = out_2.verdict;
    let dedekind_p = out_p.verdict;
    let conclusion = if eisenstein_ok && dedekind_2 == Verdict::Pass && dedekind_p == Verdict::Pass
    {
        Conclusion::Monogenic
    } else {
        Conclusion::NotMonogenic
    };

    let conrad = if params.m == 1 && degree % p != 0 && conclusion == Conclusion::Monogenic {
        let dedekind: Vec<DedekindOutcome> = if p == 2 {
            vec![out_2]
        } else {
            vec![out_2, out_p]
        };
        let cert = MonogenicityCertificate {
            disc_factored: factor_integer(&disc_closed_form)?,
            disc: disc_closed_form.clone(),
            poly: t,
            irreducibility: IrreducibilityWitness {
                status: IrreducibilityStatus::Irreducible,
                method: WitnessMethod::Eisenstein {
                    p: BigUint::from(p),
                    shift: 0,
                },
            },
            dedekind,
            conclusion,
        };
        Some(conrad_check_with(&cert, &BigUint::from(p))?)
    } else {
        None
    };

    Ok(TheoremRow {
        params,
        degree,
        eisenstein_ok,
        const_term_ok,
        reduction_ok,
        disc_oracle,
        disc_closed_form,
        audit,
        dedekind_2,
        dedekind_p,
        conrad,
        conclusion,
    })
}

/// Grid parameters for [`verify_main_theorem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub p_set: Vec<u64>,
    pub m_max: u32,
    pub n_max: u32,
    pub deg_cap: u64,
    pub oracle_cap: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            p_set: DEFAULT_P_SET.to_vec(),
            m_max: DEFAULT_M_MAX,
            n_max: DEFAULT_N_MAX,
            deg_cap: DEFAULT_DEG_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl GridSpec {
    /// Parameter triples with `deg T <= deg_cap`, sorted by `(p, m, n)`.
    pub fn cases(&self) -> Result<Vec<CycloParams>> {
        let mut primes = self.p_set.clone();
        primes.sort_unstable();
        primes.dedup();
        let mut out = Vec::new();
        for &p in &primes {
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
            for m in 1..=self.m_max {
                for n in 1..=self.n_max {
                    let Ok(params) = CycloParams::new(p, m, n) else {
                        continue;
                    };
                    if params.degree().is_some_and(|d| d <= self.deg_cap) {
                        out.push(params);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs every grid case, in parallel when `jobs != 1`; `jobs = 0` uses the
/// default pool. Rows come back in `(p, m, n)` order.
pub fn verify_main_theorem(grid: &GridSpec, jobs: usize) -> Result<Vec<TheoremRow>> {
    let cases = grid.cases()?;
    let run = || -> Result<Vec<TheoremRow>> {
        cases
            .par_iter()
            .map(|&params| theorem_row(params, grid.oracle_cap))
            .collect()
    };
    if jobs == 0 {
        return run();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?
        .install(run)
}

/// Pass/fail tally of one identity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl IdentityCheck {
    fn new(name: &str) -> Self {
        IdentityCheck {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(case());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `prod_{d | n} Phi_d = x^n - 1` for `1 <= n <= n_max`.
pub fn product_identity(n_max: u64) -> IdentityCheck {
    let mut check = IdentityCheck::new("product of Phi_d over d | n equals x^n - 1");
    for n in 1..=n_max {
        let prod = (1..=n)
            .filter(|d| n % d == 0)
            .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic_poly(d));
        let target = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
        check.record(prod == target, || format!("n={n}"));
    }
    check
}

/// `Phi_n(x^p) = Phi_{pn}` when `p | n`, else `Phi_n * Phi_{pn}`.
pub fn inflation_identity(n_max: u64, primes: &[u64]) -> IdentityCheck {
    let mut check = IdentityCheck::new("Phi_n(x^p) against Phi_pn");
    for &p in primes {
        for n in 1..=n_max {
            let lhs = cyclotomic_poly(n).inflate(p as usize);
            let rhs = if n % p == 0 {
                cyclotomic_poly(p * n)
            } else {
                &cyclotomic_poly(n) * &cyclotomic_poly(p * n)
            };
            check.record(lhs == rhs, || format!("p={p}, n={n}"));
        }
    }
    check
}

/// For `q` not dividing `n`, `Phi_n mod q` splits into `phi(n)/ord_n(q)`
/// distinct irreducibles of degree `ord_n(q)`.
pub fn factor_shape(n_max: u64, primes: &[u64], seed: u64) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new("shape of Phi_n mod q");
    for &q in primes {
        for n in (1..=n_max).filter(|n| n % q != 0) {
            let ord = multiplicative_order(q, n)?;
            let fac = factor_mod_seeded(&reduce_mod(&cyclotomic_poly(n), q)?, seed)?;
            let count = euler_phi(n) / ord;
            let ok = fac.factors.len() as u64 == count
                && fac
                    .factors
                    .iter()
                    .all(|(f, e)| *e == 1 && f.degree() == Some(ord as usize));
            check.record(ok, || {
                format!("q={q}, n={n}: expected {count} factors of degree {ord}")
            });
        }
    }
    Ok(check)
}

/// `Phi_{q^k n} = Phi_n^{phi(q^k)} (mod q)` for `q` not dividing `n`,
/// `k >= 1` and `q^k n <= bound`.
pub fn prime_power_congruence(primes: &[u64], bound: u64) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new("Phi_{q^k n} congruent to Phi_n^phi(q^k) mod q");
    for &q in primes {
        for n in (1..=bound).filter(|n| n % q != 0) {
            let mut qk = q;
            while qk * n <= bound {
                let lhs = reduce_mod(&cyclotomic_poly(qk * n), q)?;
                let base = reduce_mod(&cyclotomic_poly(n), q)?;
                let rhs = (0..euler_phi(qk)).fold(ModPoly::one(q), |acc, _| acc.mul(&base));
                check.record(lhs == rhs, || format!("q={q}, q^k={qk}, n={n}"));
                qk *= q;
            }
        }
    }
    Ok(check)
}

/// Closed form of `R(Phi_m, Phi_n)` against the subresultant value for
/// `1 <= m < n <= n_max`.
pub fn resultant_closed_form(n_max: u64) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new("R(Phi_m, Phi_n) closed form");
    for n in 2..=n_max {
        for m in 1..n {
            let direct = resultant(&cyclotomic_poly(m), &cyclotomic_poly(n))?;
            let closed = BigInt::from(cyclo_resultant(m, n)?);
            check.record(direct == closed, || {
                format!("m={m}, n={n}: {direct} vs {closed}")
            });
        }
    }
    Ok(check)
}

/// Closed form of `disc(Phi_{p^m})` against the direct discriminant.
pub fn prime_power_discriminants(max_power: u64) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new("disc(Phi_{p^m}) closed form");
    for p in (2..=max_power).filter(|&p| is_prime_u64(p)) {
        let mut m = 1;
        while p.pow(m) <= max_power {
            let direct = discriminant(&cyclotomic_poly(p.pow(m)))?;
            check.record(direct == cyclo_disc_prime_power(p, m), || {
                format!("p={p}, m={m}")
            });
            m += 1;
        }
    }
    Ok(check)
}

pub const POWER_CONGRUENCE_PRIMES: [u64; 3] = [2, 3, 5];
pub const POWER_CONGRUENCE_MAX_N: u32 = 4;
pub const POWER_CONGRUENCE_MAX_DEGREE: usize = 8;

fn random_poly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> IntPoly {
    let d = rng.gen_range(0..=max_degree);
    IntPoly::new(
        (0..=d)
            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

/// `G = H (mod q)` implies `G^{q^n} = H^{q^n} (mod q^{n+1})`, on `pairs`
/// random pairs with `H = G + q R`.
pub fn power_congruence(pairs: usize, seed: u64) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new("G = H mod q gives G^(q^n) = H^(q^n) mod q^(n+1)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let q = POWER_CONGRUENCE_PRIMES[rng.gen_range(0..POWER_CONGRUENCE_PRIMES.len())];
        let n = rng.gen_range(1..=POWER_CONGRUENCE_MAX_N);
        let g = random_poly(&mut rng, POWER_CONGRUENCE_MAX_DEGREE, 50);
        let r = random_poly(&mut rng, POWER_CONGRUENCE_MAX_DEGREE, 50);
        let h = &g + &r.scale(&BigInt::from(q));
        let e = q.pow(n);
        let modulus = BigUint::from(q).pow(n + 1);
        let ok = g.pow_coeffmod(e, &modulus)? == h.pow_coeffmod(e, &modulus)?;
        check.record(ok, || format!("q={q}, n={n}, G={g}, H={h}"));
    }
    Ok(check)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

pub const POWER_CONGRUENCE_PAIRS: usize = 200;
pub const CONGRUENCE_BOUND: u64 = 200;
pub const PRIME_POWER_DISC_BOUND: u64 = 27;

/// All identity sweeps with `n <= n_max` over the primes `q_set`.
pub fn verify_cyclo_identities(n_max: u64, q_set: &[u64], seed: u64) -> Result<IdentityReport> {
    if let Some(&q) = q_set.iter().find(|&&q| !is_prime_u64(q)) {
        return Err(Error::NotPrime(q.to_string()));
    }
    Ok(IdentityReport {
        checks: vec![
            product_identity(n_max),
            inflation_identity(n_max, q_set),
            factor_shape(n_max, q_set, seed)?,
            prime_power_congruence(q_set, CONGRUENCE_BOUND)?,
            resultant_closed_form(n_max)?,
            prime_power_discriminants(PRIME_POWER_DISC_BOUND)?,
            power_congruence(POWER_CONGRUENCE_PAIRS, seed)?,
        ],
    })
}

/// What a gallery entry is expected to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Reducible,
    IrreducibleNotMonogenic,
    Monogenic,
    NotMonogenic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GalleryEvidence {
    Factor { factor: IntPoly, cofactor: IntPoly },
    Certificate(Box<MonogenicityCertificate>),
    Irreducibility(IrreducibilityWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryEntry {
    pub label: String,
    pub poly: IntPoly,
    pub expected: Expectation,
    pub evidence: GalleryEvidence,
    pub passed: bool,
}

fn reducible_entry(label: &str, f: IntPoly) -> Result<GalleryEntry> {
    let witness = certify_irreducible(&f)?;
    let (evidence, passed) = match witness.method {
        WitnessMethod::FactorFound { factor }
            if witness.status == IrreducibilityStatus::Reducible =>
        {
            let (cofactor, rem) = f.monic_divmod(&factor)?;
            let nontrivial = factor.degree().unwrap_or(0) > 0 && cofactor.degree().unwrap_or(0) > 0;
            (
                GalleryEvidence::Factor { factor, cofactor },
                rem.is_zero() && nontrivial,
            )
        }
        method => (
            GalleryEvidence::Irreducibility(IrreducibilityWitness {
                status: witness.status,
                method,
            }),
            false,
        ),
    };
    Ok(GalleryEntry {
        label: label.to_string(),
        poly: f,
        expected: Expectation::Reducible,
        evidence,
        passed,
    })
}

fn certificate_entry(label: &str, f: IntPoly, expected: Expectation) -> Result<GalleryEntry> {
    let cert = monogenicity_check(&f)?;
    let passed = match expected {
        Expectation::Monogenic => cert.conclusion == Conclusion::Monogenic,
        Expectation::NotMonogenic => cert.conclusion == Conclusion::NotMonogenic,
        Expectation::IrreducibleNotMonogenic => {
            cert.conclusion == Conclusion::NotMonogenic
                && cert.irreducibility.status == IrreducibilityStatus::Irreducible
                && !cert.failing_primes().is_empty()
        }
        Expectation::Reducible => cert.irreducibility.status == IrreducibilityStatus::Reducible,
    };
    Ok(GalleryEntry {
        label: label.to_string(),
        poly: f,
        expected,
        evidence: GalleryEvidence::Certificate(Box::new(cert)),
        passed,
    })
}

fn phi_of_phi(a: u64, b: u64) -> IntPoly {
    cyclotomic_poly(a).compose(&cyclotomic_poly(b))
}

/// Compositions of cyclotomic polynomials outside the monogenic family, and
/// a pair of quartics where the composition order decides monogenicity.
pub fn final_remarks_suite() -> Result<Vec<GalleryEntry>> {
    Ok(vec![
        reducible_entry("Phi_4(Phi_3(x))", phi_of_phi(4, 3))?,
        reducible_entry("Phi_4(Phi_9(x))", phi_of_phi(4, 9))?,
        reducible_entry("Phi_3(Phi_5(x))", phi_of_phi(3, 5))?,
        certificate_entry(
            "Phi_2(Phi_25(x))",
            phi_of_phi(2, 25),
            Expectation::IrreducibleNotMonogenic,
        )?,
        certificate_entry(
            "x^4+10x^2+42",
            IntPoly::from_i64(&[42, 0, 10, 0, 1]),
            Expectation::Monogenic,
        )?,
        certificate_entry(
            "x^4+34x^2+294",
            IntPoly::from_i64(&[294, 0, 34, 0, 1]),
            Expectation::NotMonogenic,
        )?,
    ])
}
