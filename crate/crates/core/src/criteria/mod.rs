//! Decision procedures: Eisenstein's criterion, Dedekind's index test,
//! irreducibility certification and the combined monogenicity check.
//!
//! A monic irreducible `f` with root `theta` satisfies
//! `disc(f) = [O_K : Z[theta]]^2 * disc(K)`, so only primes whose square
//! divides `disc(f)` can divide the index. Each of those is settled by
//! Dedekind's test; the others are skipped.

mod dedekind;
mod zassenhaus;

pub use dedekind::{dedekind_test, dedekind_with_lifts};
pub use zassenhaus::{try_factor_over_z, ZassenhausCaps};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factor_integer, is_prime_u64, p_adic_valuation, FactoredInteger};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::modpoly::{is_irreducible_mod, reduce_unchecked, ModPoly};
use crate::resdisc::discriminant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Result of Dedekind's test at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindOutcome {
    pub p: u64,
    pub g_lift: IntPoly,
    pub h_lift: IntPoly,
    /// `(g h - T) / p`
    pub carry: IntPoly,
    pub gcd_bar: ModPoly,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IrreducibilityStatus {
    Irreducible,
    Reducible,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessMethod {
    /// `f(x + shift)` is `p`-Eisenstein.
    Eisenstein { p: BigUint, shift: i64 },
    /// `f` stays irreducible of full degree modulo `q`.
    ModPrime { q: u64 },
    /// Exact integer factor of nontrivial degree.
    FactorFound { factor: IntPoly },
    /// Lifted-factor recombination ran (to completion when the status is
    /// irreducible, into its caps when unknown).
    SearchExhausted {
        prime: Option<u64>,
        local_factors: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityWitness {
    pub status: IrreducibilityStatus,
    pub method: WitnessMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Monogenic,
    NotMonogenic,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicityCertificate {
    pub poly: IntPoly,
    pub disc: BigInt,
    pub disc_factored: FactoredInteger,
    pub irreducibility: IrreducibilityWitness,
    pub dedekind: Vec<DedekindOutcome>,
    pub conclusion: Conclusion,
}

impl MonogenicityCertificate {
    /// Primes at which Dedekind's test failed.
    pub fn failing_primes(&self) -> Vec<u64> {
        self.dedekind
            .iter()
            .filter(|o| o.verdict == Verdict::Fail)
            .map(|o| o.p)
            .collect()
    }
}

/// Shifts tried when looking for an Eisenstein translate, in order.
const EISENSTEIN_SHIFTS: [i64; 9] = [0, 1, -1, 2, -2, 3, -3, 4, -4];

/// Largest prime used for mod-`q` irreducibility witnesses.
const MOD_PRIME_LIMIT: u64 = 100;

/// Whether `f` is `p`-Eisenstein: `p` divides every coefficient below the
/// leading one, `p` does not divide the leading coefficient, and `p^2` does
/// not divide the constant term.
pub fn is_p_eisenstein(f: &IntPoly, p: &BigUint) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let p = BigInt::from(p.clone());
    let c = f.coeffs();
    !c[n].is_multiple_of(&p)
        && c[..n].iter().all(|a| a.is_multiple_of(&p))
        && !c[0].is_multiple_of(&(&p * &p))
}

/// Primes for which a monic `f` is Eisenstein, and whether the candidate
/// search was complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinPrimes {
    pub primes: Vec<BigUint>,
    /// False when the gcd of the lower coefficients could not be fully
    /// factored; `primes` then only covers the factored part.
    pub complete: bool,
}

pub fn eisenstein_primes(f: &IntPoly) -> Result<EisensteinPrimes> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    let none = EisensteinPrimes {
        primes: Vec::new(),
        complete: true,
    };
    if n == 0 || f.constant_term().is_zero() {
        return Ok(none);
    }
    // every candidate divides all lower coefficients, hence their gcd
    let g = f.coeffs()[..n]
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let fac = factor_integer(&g)?;
    let primes = fac
        .primes()
        .filter(|p| is_p_eisenstein(f, p))
        .cloned()
        .collect();
    Ok(EisensteinPrimes {
        primes,
        complete: fac.is_complete(),
    })
}

/// Tries Eisenstein translates, then irreducibility modulo small primes,
/// then a factor search over `Z`; returns the first conclusive witness.
pub fn certify_irreducible(f: &IntPoly) -> Result<IrreducibilityWitness> {
    certify_irreducible_with(f, ZassenhausCaps::default())
}

pub fn certify_irreducible_with(
    f: &IntPoly,
    caps: ZassenhausCaps,
) -> Result<IrreducibilityWitness> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Err(Error::DegreeTooSmall(1));
    }

    for shift in EISENSTEIN_SHIFTS {
        let shifted = f.shift(&BigInt::from(shift));
        if let Some(p) = eisenstein_primes(&shifted)?.primes.into_iter().next() {
            return Ok(IrreducibilityWitness {
                status: IrreducibilityStatus::Irreducible,
                method: WitnessMethod::Eisenstein { p, shift },
            });
        }
    }

    for q in (2..=MOD_PRIME_LIMIT).filter(|&q| is_prime_u64(q)) {
        if is_irreducible_mod(&reduce_unchecked(f, q)) {
            return Ok(IrreducibilityWitness {
                status: IrreducibilityStatus::Irreducible,
                method: WitnessMethod::ModPrime { q },
            });
        }
    }

    let repeated = f.gcd(&f.derivative());
    if repeated.degree().unwrap_or(0) > 0 {
        return Ok(IrreducibilityWitness {
            status: IrreducibilityStatus::Reducible,
            method: WitnessMethod::FactorFound { factor: repeated },
        });
    }
    try_factor_over_z(f, caps)
}

/// Full monogenicity decision for a monic `f`.
///
/// The conclusion is `Monogenic` only with an irreducibility proof, a
/// complete factorization of the discriminant and a Dedekind pass at every
/// prime whose square divides it. A Dedekind failure or an explicit factor
/// gives `NotMonogenic`; anything else is `Inconclusive`.
pub fn monogenicity_check(f: &IntPoly) -> Result<MonogenicityCertificate> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() == Some(0) {
        return Err(Error::DegreeTooSmall(1));
    }
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let disc_factored = factor_integer(&disc)?;
    let irreducibility = certify_irreducible(f)?;

    let mut dedekind = Vec::new();
    let mut untested = false;
    if irreducibility.status != IrreducibilityStatus::Reducible {
        for (p, e) in &disc_factored.factors {
            if *e < 2 {
                continue;
            }
            match p.to_u64().filter(|&w| w <= crate::modpoly::MAX_MODULUS) {
                Some(w) => dedekind.push(dedekind_test(f, w)?),
                None => untested = true,
            }
        }
    }

    let any_fail = dedekind.iter().any(|o| o.verdict == Verdict::Fail);
    let conclusion = if irreducibility.status == IrreducibilityStatus::Reducible || any_fail {
        Conclusion::NotMonogenic
    } else if irreducibility.status == IrreducibilityStatus::Irreducible
        && disc_factored.is_complete()
        && !untested
    {
        Conclusion::Monogenic
    } else {
        Conclusion::Inconclusive
    };

    Ok(MonogenicityCertificate {
        poly: f.clone(),
        disc,
        disc_factored,
        irreducibility,
        dedekind,
        conclusion,
    })
}

/// For a monogenic `p`-Eisenstein `f` with `p` not dividing `deg f`, checks
/// that the field discriminant (here equal to `disc(f)`) has `p`-valuation
/// exactly `deg f - 1`.
pub fn conrad_check(f: &IntPoly, p: &BigUint) -> Result<bool> {
    if !is_p_eisenstein(f, p) {
        return Err(Error::Precondition(format!(
            "polynomial is not {p}-Eisenstein"
        )));
    }
    let cert = monogenicity_check(f)?;
    conrad_check_with(&cert, p)
}

/// [`conrad_check`] against an existing certificate.
pub fn conrad_check_with(cert: &MonogenicityCertificate, p: &BigUint) -> Result<bool> {
    let f = &cert.poly;
    let n = f.degree().unwrap_or(0) as u64;
    if !is_p_eisenstein(f, p) {
        return Err(Error::Precondition(format!(
            "polynomial is not {p}-Eisenstein"
        )));
    }
    if (BigUint::from(n) % p).is_zero() {
        return Err(Error::Precondition(format!("{p} divides the degree {n}")));
    }
    if cert.conclusion != Conclusion::Monogenic {
        return Err(Error::Precondition(
            "polynomial is not certified monogenic".into(),
        ));
    }
    Ok(p_adic_valuation(&cert.disc, p)? as u64 == n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{build_t, cyclotomic_poly, CycloParams};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(
            eisenstein_primes(&p(&[3, 0, 3, 0, 1])).unwrap().primes,
            vec![big(3)]
        );
        assert!(eisenstein_primes(&p(&[4, 0, 1])).unwrap().primes.is_empty());
        assert!(eisenstein_primes(&p(&[-1, 1])).unwrap().primes.is_empty());
        assert_eq!(
            eisenstein_primes(&p(&[6, 6, 1])).unwrap().primes,
            vec![big(2), big(3)]
        );
        assert!(eisenstein_primes(&p(&[1, 2])).is_err());
    }

    #[test]
    fn certify_examples() {
        let t = build_t(CycloParams::new(3, 1, 2).unwrap());
        let w = certify_irreducible(&t).unwrap();
        assert_eq!(
            w.method,
            WitnessMethod::Eisenstein {
                p: big(3),
                shift: 0
            }
        );

        let w = certify_irreducible(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(w.status, IrreducibilityStatus::Reducible);
        assert_eq!(
            w.method,
            WitnessMethod::FactorFound {
                factor: p(&[-1, 1])
            }
        );

        let w = certify_irreducible(&p(&[1, 0, 1])).unwrap();
        assert_eq!(w.status, IrreducibilityStatus::Irreducible);

        let f = cyclotomic_poly(4).compose(&cyclotomic_poly(3));
        let w = certify_irreducible(&f).unwrap();
        assert_eq!(
            w.method,
            WitnessMethod::FactorFound {
                factor: p(&[1, 0, 1])
            }
        );

        let w = certify_irreducible(&p(&[1, 2, 1])).unwrap();
        assert_eq!(w.status, IrreducibilityStatus::Reducible);
    }

    #[test]
    fn intro_pair() {
        let good = monogenicity_check(&p(&[42, 0, 10, 0, 1])).unwrap();
        assert_eq!(good.conclusion, Conclusion::Monogenic);
        let tested: Vec<u64> = good.dedekind.iter().map(|o| o.p).collect();
        assert_eq!(tested, vec![2, 17]);

        let bad = monogenicity_check(&p(&[294, 0, 34, 0, 1])).unwrap();
        assert_eq!(bad.conclusion, Conclusion::NotMonogenic);
        assert_eq!(bad.failing_primes(), vec![7]);
    }

    #[test]
    fn quartic_t_is_monogenic() {
        let cert = monogenicity_check(&build_t(CycloParams::new(3, 1, 2).unwrap())).unwrap();
        assert_eq!(cert.conclusion, Conclusion::Monogenic);
        let tested: Vec<u64> = cert.dedekind.iter().map(|o| o.p).collect();
        assert_eq!(tested, vec![2, 3]);
        assert_eq!(cert.disc, BigInt::from(432));
    }

    #[test]
    fn monogenicity_edge_cases() {
        assert_eq!(
            monogenicity_check(&p(&[1, 2, 1])),
            Err(Error::NotSquarefree)
        );
        let lin = monogenicity_check(&p(&[5, 1])).unwrap();
        assert_eq!(lin.conclusion, Conclusion::Monogenic);
        let red = monogenicity_check(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(red.conclusion, Conclusion::NotMonogenic);
        assert!(red.dedekind.is_empty());
        // Z[sqrt 5] is not the maximal order
        let sqrt5 = monogenicity_check(&p(&[-5, 0, 1])).unwrap();
        assert_eq!(sqrt5.conclusion, Conclusion::NotMonogenic);
    }

    #[test]
    fn conrad_examples() {
        let t = build_t(CycloParams::new(3, 1, 2).unwrap());
        assert_eq!(conrad_check(&t, &big(3)), Ok(true));
        let t = build_t(CycloParams::new(5, 1, 2).unwrap());
        assert_eq!(conrad_check(&t, &big(5)), Ok(true));
        // not 2-Eisenstein
        assert!(matches!(
            conrad_check(&t, &big(2)),
            Err(Error::Precondition(_))
        ));
        // 2 divides the degree of x^2 + 2
        assert!(matches!(
            conrad_check(&p(&[2, 0, 1]), &big(2)),
            Err(Error::Precondition(_))
        ));
    }
}
