use num_bigint::{BigInt, BigUint};

use super::{DedekindOutcome, Verdict};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::modpoly::{check_modulus, factor_mod_seeded, multi_gcd, reduce_unchecked, ModPoly};

/// Runs Dedekind's index test for the monic `t` at the prime `p`.
///
/// Factors `t mod p = prod t_i^e_i`, takes `g = prod t_i` and `h = (t mod p)/g`
/// with coefficients lifted into `[0, p)`, and decides from
/// `gcd(F, g, h) mod p` where `F = (g h - t)/p`. When `t mod p` is already
/// squarefree (equivalently `p` does not divide the discriminant) the
/// factoring step is skipped: `g` is `t mod p` itself and `h = 1`.
pub fn dedekind_test(t: &IntPoly, p: u64) -> Result<DedekindOutcome> {
    if !t.is_monic() {
        return Err(Error::NotMonic);
    }
    if t.degree() == Some(0) {
        return Err(Error::DegreeTooSmall(1));
    }
    let p = check_modulus(&BigUint::from(p))?;
    let tb = reduce_unchecked(t, p);

    if tb.gcd(&tb.derivative()).is_one() {
        return dedekind_with_lifts(t, p, &tb.to_intpoly(), &IntPoly::one());
    }

    let fac = factor_mod_seeded(&tb, 0)?;
    let gb = fac
        .factors
        .iter()
        .fold(ModPoly::one(p), |acc, (f, _)| acc.mul(f));
    let hb = tb.div_exact(&gb);
    dedekind_with_lifts(t, p, &gb.to_intpoly(), &hb.to_intpoly())
}

/// Dedekind's test with caller-chosen monic lifts `g`, `h`.
///
/// `g mod p` must be the product of the distinct irreducible factors of
/// `t mod p` and `g h = t (mod p)`; the latter is checked here.
pub fn dedekind_with_lifts(
    t: &IntPoly,
    p: u64,
    g: &IntPoly,
    h: &IntPoly,
) -> Result<DedekindOutcome> {
    if !t.is_monic() || !g.is_monic() || !h.is_monic() {
        return Err(Error::NotMonic);
    }
    let p = check_modulus(&BigUint::from(p))?;
    let modulus = BigInt::from(p);
    let diff = &(g * h) - t;
    if !diff.reduce_coeffs(&modulus).is_zero() {
        return Err(Error::Precondition(format!(
            "g*h is not congruent to T mod {p}"
        )));
    }
    let carry = diff.div_exact(&modulus);
    let gcd_bar = multi_gcd(&[
        reduce_unchecked(&carry, p),
        reduce_unchecked(g, p),
        reduce_unchecked(h, p),
    ])?;
    let verdict = if gcd_bar.degree() == Some(0) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(DedekindOutcome {
        p,
        g_lift: g.clone(),
        h_lift: h.clone(),
        carry,
        gcd_bar,
        verdict,
    })
}
