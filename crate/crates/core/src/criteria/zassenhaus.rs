//! Desk-scale factor search over `Z`: factor modulo one 20-bit prime, Hensel
//! lift past a coefficient bound, then try subsets of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IrreducibilityStatus, IrreducibilityWitness, WitnessMethod};
use crate::arith::is_prime_u64;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::modpoly::{factor_mod_seeded, reduce_unchecked, ModPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZassenhausCaps {
    pub max_degree: usize,
    pub subset_budget: u64,
}

impl Default for ZassenhausCaps {
    fn default() -> Self {
        ZassenhausCaps {
            max_degree: 32,
            subset_budget: 1 << 20,
        }
    }
}

/// First prime above 2^19 modulo which `f` stays squarefree.
fn choose_prime(f: &IntPoly) -> u64 {
    let mut q = (1u64 << 19) + 1;
    loop {
        if is_prime_u64(q) {
            let fb = reduce_unchecked(f, q);
            if fb.gcd(&fb.derivative()).is_one() {
                return q;
            }
        }
        q += 2;
    }
}

/// `2^deg * ceil(||f||_2)`: no factor of `f` has a coefficient larger.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let sum_sq: BigUint = f
        .coeffs()
        .iter()
        .map(|c| c.magnitude() * c.magnitude())
        .sum();
    let mut norm = sum_sq.sqrt();
    if &norm * &norm < sum_sq {
        norm += 1u32;
    }
    BigInt::from(norm) << f.degree().unwrap_or(0)
}

fn mulmod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    (a * b).reduce_coeffs(m)
}

fn divmod_monic(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let (q, r) = a.monic_divmod(d).expect("lifted factors are monic");
    (q.reduce_coeffs(m), r.reduce_coeffs(m))
}

/// Quadratic Hensel lifting of `f = g*h` with Bezout pair `s*g + t*h = 1`
/// from modulus `q` until the modulus reaches `target`. Returns the lifted
/// `(g, h)` and the final modulus.
fn lift_pair(
    f: &IntPoly,
    g: &ModPoly,
    h: &ModPoly,
    q: u64,
    target: &BigInt,
) -> (IntPoly, IntPoly, BigInt) {
    let (d, s, t) = g.ext_gcd(h);
    assert!(d.is_one(), "local factors must be coprime");
    let (mut g, mut h, mut s, mut t) = (
        g.to_intpoly(),
        h.to_intpoly(),
        s.to_intpoly(),
        t.to_intpoly(),
    );
    let mut m = BigInt::from(q);
    while &m < target {
        let m2 = &m * &m;
        let e = (f - &(&g * &h)).reduce_coeffs(&m2);
        let (qq, r) = divmod_monic(&mulmod(&s, &e, &m2), &h, &m2);
        let g_new = (&(&g + &(&t * &e)) + &(&qq * &g)).reduce_coeffs(&m2);
        let h_new = (&h + &r).reduce_coeffs(&m2);
        let b = (&(&(&s * &g_new) + &(&t * &h_new)) - &IntPoly::one()).reduce_coeffs(&m2);
        let (c, dd) = divmod_monic(&mulmod(&s, &b, &m2), &h_new, &m2);
        let s_new = (&s - &dd).reduce_coeffs(&m2);
        let t_new = (&(&t - &(&t * &b)) - &(&c * &g_new)).reduce_coeffs(&m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (g, h, m)
}

/// Lifts the complete local factorization of the monic `f` along a
/// balanced factor tree.
fn hensel_lift(f: &IntPoly, local: &[ModPoly], q: u64, target: &BigInt) -> (Vec<IntPoly>, BigInt) {
    if local.len() == 1 {
        let mut m = BigInt::from(q);
        while &m < target {
            m = &m * &m;
        }
        return (vec![f.reduce_coeffs(&m)], m);
    }
    let (left, right) = local.split_at(local.len() / 2);
    let prod = |fs: &[ModPoly]| fs.iter().fold(ModPoly::one(q), |acc, x| acc.mul(x));
    let (g, h, m) = lift_pair(f, &prod(left), &prod(right), q, target);
    let (mut out, _) = hensel_lift(&g, left, q, target);
    let (rest, _) = hensel_lift(&h, right, q, target);
    out.extend(rest);
    (out, m)
}

fn smaller_factor(a: IntPoly, b: IntPoly) -> IntPoly {
    let key = |p: &IntPoly| (p.degree(), p.coeffs().to_vec());
    if key(&b) < key(&a) {
        b
    } else {
        a
    }
}

/// Searches for a nontrivial factor of a monic squarefree `f`.
pub fn try_factor_over_z(f: &IntPoly, caps: ZassenhausCaps) -> Result<IrreducibilityWitness> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooSmall(1)),
    };
    if f.gcd(&f.derivative()).degree().unwrap_or(0) > 0 {
        return Err(Error::NotSquarefree);
    }
    let exhausted = |status, prime, local_factors| IrreducibilityWitness {
        status,
        method: WitnessMethod::SearchExhausted {
            prime,
            local_factors,
        },
    };
    if n == 1 {
        return Ok(exhausted(IrreducibilityStatus::Irreducible, None, 1));
    }
    if n > caps.max_degree {
        return Ok(exhausted(IrreducibilityStatus::Unknown, None, 0));
    }

    let q = choose_prime(f);
    let local: Vec<ModPoly> = factor_mod_seeded(&reduce_unchecked(f, q), 0)?
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    let r = local.len();
    if r == 1 {
        return Ok(exhausted(IrreducibilityStatus::Irreducible, Some(q), 1));
    }

    let target = coefficient_bound(f) * 2 + 1;
    let (lifted, modulus) = hensel_lift(f, &local, q, &target);
    let f0 = f.constant_term();
    let consts: Vec<BigInt> = lifted.iter().map(|g| g.constant_term()).collect();
    let half: BigInt = &modulus >> 1u32;
    let symmetric = |c: BigInt| if c > half { c - &modulus } else { c };

    let mut tried: u64 = 0;
    for size in 1..=r / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > caps.subset_budget {
                return Ok(exhausted(IrreducibilityStatus::Unknown, Some(q), r));
            }
            let c = symmetric(idx.iter().fold(BigInt::one(), |acc, &i| {
                (acc * &consts[i]).mod_floor(&modulus)
            }));
            let plausible = f0.is_zero() || (!c.is_zero() && (&f0 % &c).is_zero());
            if plausible {
                let cand = idx
                    .iter()
                    .fold(IntPoly::one(), |acc, &i| mulmod(&acc, &lifted[i], &modulus))
                    .symmetric_coeffs(&modulus);
                let (quot, rem) = f.monic_divmod(&cand)?;
                if rem.is_zero() {
                    return Ok(IrreducibilityWitness {
                        status: IrreducibilityStatus::Reducible,
                        method: WitnessMethod::FactorFound {
                            factor: smaller_factor(cand, quot),
                        },
                    });
                }
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == r - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(exhausted(IrreducibilityStatus::Irreducible, Some(q), r))
}
