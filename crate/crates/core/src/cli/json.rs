//! JSON forms of certificates. Big integers are decimal strings and
//! polynomials are ascending coefficient lists.

use num_bigint::{BigInt, BigUint, Sign};
use serde::{Deserialize, Serialize};

use crate::arith::FactoredInteger;
use crate::criteria::{
    Conclusion, DedekindOutcome, IrreducibilityStatus, IrreducibilityWitness,
    MonogenicityCertificate, Verdict, WitnessMethod,
};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::modpoly::ModPoly;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn poly_out(f: &IntPoly) -> Vec<String> {
    f.coeffs().iter().map(BigInt::to_string).collect()
}

fn poly_in(c: &[String]) -> Result<IntPoly> {
    c.iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| bad(format!("bad integer {s:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

fn int_in(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| bad(format!("bad integer {s:?}")))
}

fn nat_in(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| bad(format!("bad natural number {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedekindJson {
    pub p: u64,
    pub verdict: Verdict,
    pub gcd_degree: usize,
    pub g: Vec<String>,
    pub h: Vec<String>,
    #[serde(rename = "F")]
    pub carry: Vec<String>,
    /// `gcd(F, g, h) mod p`, ascending residues.
    pub gcd: Vec<String>,
}

impl From<&DedekindOutcome> for DedekindJson {
    fn from(o: &DedekindOutcome) -> Self {
        DedekindJson {
            p: o.p,
            verdict: o.verdict,
            gcd_degree: o.gcd_bar.degree().unwrap_or(0),
            g: poly_out(&o.g_lift),
            h: poly_out(&o.h_lift),
            carry: poly_out(&o.carry),
            gcd: o.gcd_bar.coeffs().iter().map(u64::to_string).collect(),
        }
    }
}

impl TryFrom<&DedekindJson> for DedekindOutcome {
    type Error = Error;

    fn try_from(j: &DedekindJson) -> Result<Self> {
        let gcd = j
            .gcd
            .iter()
            .map(|s| {
                s.parse::<u64>()
                    .map_err(|_| bad(format!("bad residue {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let gcd_bar = ModPoly::new(j.p, gcd)?;
        if gcd_bar.degree().unwrap_or(0) != j.gcd_degree {
            return Err(bad("gcd_degree does not match gcd"));
        }
        Ok(DedekindOutcome {
            p: j.p,
            g_lift: poly_in(&j.g)?,
            h_lift: poly_in(&j.h)?,
            carry: poly_in(&j.carry)?,
            gcd_bar,
            verdict: j.verdict,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "detail", rename_all = "snake_case")]
pub enum MethodJson {
    Eisenstein {
        p: String,
        shift: i64,
    },
    ModPrime {
        q: u64,
    },
    FactorFound {
        factor: Vec<String>,
    },
    SearchExhausted {
        prime: Option<u64>,
        local_factors: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityJson {
    pub status: IrreducibilityStatus,
    #[serde(flatten)]
    pub method: MethodJson,
}

impl From<&IrreducibilityWitness> for IrreducibilityJson {
    fn from(w: &IrreducibilityWitness) -> Self {
        let method = match &w.method {
            WitnessMethod::Eisenstein { p, shift } => MethodJson::Eisenstein {
                p: p.to_string(),
                shift: *shift,
            },
            WitnessMethod::ModPrime { q } => MethodJson::ModPrime { q: *q },
            WitnessMethod::FactorFound { factor } => MethodJson::FactorFound {
                factor: poly_out(factor),
            },
            WitnessMethod::SearchExhausted {
                prime,
                local_factors,
            } => MethodJson::SearchExhausted {
                prime: *prime,
                local_factors: *local_factors,
            },
        };
        IrreducibilityJson {
            status: w.status,
            method,
        }
    }
}

impl TryFrom<&IrreducibilityJson> for IrreducibilityWitness {
    type Error = Error;

    fn try_from(j: &IrreducibilityJson) -> Result<Self> {
        let method = match &j.method {
            MethodJson::Eisenstein { p, shift } => WitnessMethod::Eisenstein {
                p: nat_in(p)?,
                shift: *shift,
            },
            MethodJson::ModPrime { q } => WitnessMethod::ModPrime { q: *q },
            MethodJson::FactorFound { factor } => WitnessMethod::FactorFound {
                factor: poly_in(factor)?,
            },
            MethodJson::SearchExhausted {
                prime,
                local_factors,
            } => WitnessMethod::SearchExhausted {
                prime: *prime,
                local_factors: *local_factors,
            },
        };
        Ok(IrreducibilityWitness {
            status: j.status,
            method,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub polynomial: Vec<String>,
    pub degree: usize,
    pub discriminant: String,
    pub disc_factorization: Vec<(String, u32)>,
    /// Unfactored part of `|disc|`; "1" when the factorization is complete.
    pub disc_cofactor: String,
    pub irreducibility: IrreducibilityJson,
    pub dedekind: Vec<DedekindJson>,
    pub conclusion: Conclusion,
}

impl From<&MonogenicityCertificate> for CertificateJson {
    fn from(c: &MonogenicityCertificate) -> Self {
        CertificateJson {
            polynomial: poly_out(&c.poly),
            degree: c.poly.degree().unwrap_or(0),
            discriminant: c.disc.to_string(),
            disc_factorization: c
                .disc_factored
                .factors
                .iter()
                .map(|(p, e)| (p.to_string(), *e))
                .collect(),
            disc_cofactor: c.disc_factored.cofactor.to_string(),
            irreducibility: (&c.irreducibility).into(),
            dedekind: c.dedekind.iter().map(DedekindJson::from).collect(),
            conclusion: c.conclusion,
        }
    }
}

impl TryFrom<&CertificateJson> for MonogenicityCertificate {
    type Error = Error;

    fn try_from(j: &CertificateJson) -> Result<Self> {
        let poly = poly_in(&j.polynomial)?;
        if poly.degree().unwrap_or(0) != j.degree {
            return Err(bad("degree does not match polynomial"));
        }
        let disc = int_in(&j.discriminant)?;
        let sign = match disc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        let factors = j
            .disc_factorization
            .iter()
            .map(|(p, e)| Ok((nat_in(p)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        let disc_factored = FactoredInteger {
            sign,
            factors,
            cofactor: nat_in(&j.disc_cofactor)?,
        };
        if disc_factored.reconstruct() != disc {
            return Err(bad(
                "disc_factorization does not multiply out to discriminant",
            ));
        }
        Ok(MonogenicityCertificate {
            poly,
            disc,
            disc_factored,
            irreducibility: (&j.irreducibility).try_into()?,
            dedekind: j
                .dedekind
                .iter()
                .map(DedekindOutcome::try_from)
                .collect::<Result<Vec<_>>>()?,
            conclusion: j.conclusion,
        })
    }
}

pub fn certificate_to_json(c: &MonogenicityCertificate) -> String {
    serde_json::to_string_pretty(&CertificateJson::from(c)).expect("certificate serializes")
}

pub fn certificate_from_json(s: &str) -> Result<MonogenicityCertificate> {
    let j: CertificateJson = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    (&j).try_into()
}
