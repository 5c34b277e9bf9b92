//! Resultants and discriminants over the integers, and the discriminant
//! formulas for compositions `f(g(x))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division {a} / {b}");
    q
}

fn neg_one_pow(e: u64) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `R(f, g) = a^n b^m prod (r_i - s_j)`, by the subresultant PRS.
///
/// A constant argument `c` gives `c^deg(other)`.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::Zero("resultant argument"));
    };
    if df == 0 {
        return Ok(f.leading_coeff().unwrap().pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.leading_coeff().unwrap().pow(df as u32));
    }

    let ca = f.content();
    let cb = g.content();
    let mut a = f.div_exact(&ca);
    let mut b = g.div_exact(&cb);
    let t = ca.pow(dg as u32) * cb.pow(df as u32);
    let mut sign_negative = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            sign_negative = true;
        }
    }

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.div_exact(&(&gg * h.pow(delta as u32)));
        gg = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            d => exact_div(&gg.pow(d as u32), &h.pow(d as u32 - 1)),
        };
        match b.degree() {
            None => return Ok(BigInt::zero()),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().unwrap() as u32;
    let lb = b.leading_coeff().unwrap();
    let h = exact_div(&lb.pow(da), &h.pow(da - 1));
    let res = t * h;
    Ok(if sign_negative { -res } else { res })
}

/// `disc(f) = (-1)^(m(m-1)/2) / a * R(f, f')`; linear polynomials give 1.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let m = match f.degree() {
        Some(m) if m >= 1 => m as u64,
        _ => return Err(Error::DegreeTooSmall(1)),
    };
    if m == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(f, &f.derivative())?;
    let a = f.leading_coeff().unwrap();
    Ok(neg_one_pow(m * (m - 1) / 2) * exact_div(&r, a))
}

/// `disc(f o g) = (-1)^(m^2 n(n-1)/2) a^(n-1) b^(m(mn-n-1)) disc(f)^n R(f o g, g')`
/// for `deg f = m`, `deg g = n` with leading coefficients `a`, `b`.
///
/// The `b` exponent is `-1` when `m = 1`; that power divides exactly.
pub fn disc_composition(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => (m as i64, n as i64),
        _ => return Err(Error::DegreeTooSmall(1)),
    };
    let a = f.leading_coeff().unwrap();
    let b = g.leading_coeff().unwrap();
    let fg = f.compose(g);
    let res = resultant(&fg, &g.derivative())?;
    let mut value = neg_one_pow((m * m * n * (n - 1) / 2) as u64)
        * a.pow((n - 1) as u32)
        * discriminant(f)?.pow(n as u32)
        * res;
    let b_exp = m * (m * n - n - 1);
    if b_exp >= 0 {
        value *= b.pow(b_exp as u32);
    } else {
        value = exact_div(&value, &b.pow((-b_exp) as u32));
    }
    Ok(value)
}

/// Closed form for `g = b x^n + c`, needing no resultant:
/// `(-1)^(mn(n-1)(m+2n)/2) a^(n-1) b^(m(mn-1)) disc(f)^n n^(mn) f(c)^(n-1)`.
pub fn disc_composition_binomial(f: &IntPoly, b: &BigInt, n: u64, c: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::Zero("binomial leading coefficient"));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "binomial degree must be positive".into(),
        ));
    }
    let m = match f.degree() {
        Some(m) if m >= 1 => m as u64,
        _ => return Err(Error::DegreeTooSmall(1)),
    };
    let a = f.leading_coeff().unwrap();
    let sign = neg_one_pow(m * n * (n - 1) * (m + 2 * n) / 2);
    let value = sign
        * a.pow((n - 1) as u32)
        * b.pow((m * (m * n - 1)) as u32)
        * discriminant(f)?.pow(n as u32)
        * BigInt::from(n).pow((m * n) as u32)
        * f.eval(c).pow((n - 1) as u32);
    Ok(value)
}
