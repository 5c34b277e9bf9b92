//! Polynomials over a prime field `F_p`, for word-sized `p`.

mod factor;

pub use factor::{factor_mod, factor_mod_seeded, is_irreducible_mod, ModFactorization};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{is_prime_u64, pow_mod_u64};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Largest modulus the word-sized representation accepts.
pub const MAX_MODULUS: u64 = (1 << 63) - 1;

/// Polynomial over `F_p`; coefficients live in `[0, p)`, ascending by degree,
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    pow_mod_u64(a, p - 2, p)
}

/// Checks that `p` is a prime the field arithmetic can handle.
pub fn check_modulus(p: &BigUint) -> Result<u64> {
    match p.to_u64() {
        Some(w) if w <= MAX_MODULUS => {
            if is_prime_u64(w) {
                Ok(w)
            } else {
                Err(Error::NotPrime(w.to_string()))
            }
        }
        _ => Err(Error::ModulusTooLarge(p.to_string())),
    }
}

/// Reduces an integer polynomial coefficientwise modulo the prime `p`.
pub fn reduce_mod(f: &IntPoly, p: u64) -> Result<ModPoly> {
    let p = check_modulus(&BigUint::from(p))?;
    Ok(reduce_unchecked(f, p))
}

pub(crate) fn reduce_unchecked(f: &IntPoly, p: u64) -> ModPoly {
    let m = BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().unwrap())
        .collect();
    ModPoly::from_raw(p, coeffs)
}

/// Monic gcd over `F_p`.
pub fn gcd_mod(f: &ModPoly, g: &ModPoly) -> Result<ModPoly> {
    if f.p != g.p {
        return Err(Error::ModulusMismatch(f.p, g.p));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::Zero("gcd_mod of two zero polynomials"));
    }
    Ok(f.gcd(g))
}

/// Gcd of a nonempty list, folded pairwise.
pub fn multi_gcd(fs: &[ModPoly]) -> Result<ModPoly> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("multi_gcd needs at least one polynomial".into()))?;
    let mut acc = first.clone();
    for f in rest {
        if f.p != acc.p {
            return Err(Error::ModulusMismatch(acc.p, f.p));
        }
        if acc.is_zero() && f.is_zero() {
            continue;
        }
        acc = acc.gcd(f);
    }
    if acc.is_zero() {
        return Err(Error::Zero("multi_gcd of zero polynomials"));
    }
    Ok(acc)
}

impl ModPoly {
    /// Builds a polynomial after checking that `p` is prime; coefficients
    /// are reduced.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_modulus(&BigUint::from(p))?;
        Ok(Self::from_raw(
            p,
            coeffs.into_iter().map(|c| c % p).collect(),
        ))
    }

    pub(crate) fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::from_raw(p, vec![1 % p])
    }

    pub fn x(p: u64) -> Self {
        Self::from_raw(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        let lc = self.leading_coeff();
        if lc <= 1 {
            return self.clone();
        }
        self.scale(inv_mod(lc, self.p))
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::from_raw(p, self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn to_intpoly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| add_mod(self.get(i), other.get(i), p))
            .collect();
        Self::from_raw(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| sub_mod(self.get(i), other.get(i), p))
            .collect();
        Self::from_raw(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::from_raw(self.p, acc.into_iter().map(|c| c as u64).collect())
    }

    fn get(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Euclidean division in `F_p[x]`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            rem[i + dd] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..dd {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, d.coeffs[j], p), p);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_raw(p, quot), Self::from_raw(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division mod {}", self.p);
        q
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = r0.leading_coeff();
        if lc > 1 {
            let inv = inv_mod(lc, p);
            (r0.scale(inv), s0.scale(inv), t0.scale(inv))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::from_raw(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m` by square-and-multiply; `e` may be arbitrarily large.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// `self^p mod m`.
    pub(crate) fn frobenius(&self, m: &Self) -> Self {
        self.pow_mod(&BigUint::from(self.p), m)
    }

    /// The `g` with `g(x)^p = self(x)`; only meaningful when the derivative
    /// vanishes, i.e. only powers of `x^p` occur.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::from_raw(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Canonical order: by degree, then by coefficients from the top down.
    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_intpoly(), self.p)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly({self})")
    }
}
