//! Integer number theory: primality, factorization, totients, orders and
//! p-adic valuations.
//!
//! Factorization is trial division up to [`TRIAL_DIVISION_BOUND`] followed by
//! Brent's variant of Pollard rho. Anything rho cannot split within its
//! iteration budget is left in [`FactoredInteger::cofactor`], and callers must
//! treat such a factorization as incomplete.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Iteration budget for one Pollard rho attempt.
pub const RHO_ITERATION_CAP: u64 = 1 << 24;

/// Number of rho attempts (each with its own deterministic seed).
pub const RHO_RESTARTS: u64 = 8;

const RHO_BATCH: u64 = 128;
const MR_ROUNDS_LARGE: usize = 64;

/// Prime decomposition `sign * cofactor * prod p^e` of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
}

impl FactoredInteger {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Exponent of `p` in the factored part.
    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn reconstruct(&self) -> BigInt {
        let mut acc = self.cofactor.clone();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        let acc = BigInt::from(acc);
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let bound = TRIAL_DIVISION_BOUND as usize;
        let mut composite = vec![false; bound + 1];
        let mut primes = Vec::new();
        for i in 2..=bound {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= bound {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic below 2^64, otherwise 64 Miller-Rabin
/// rounds with bases drawn from a fixed-seed generator.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_6c6c_6572);
    let two = BigUint::from(2u32);
    let span = n - 3u32;
    'witness: for _ in 0..MR_ROUNDS_LARGE {
        let a = random_below(&mut rng, &span) + &two;
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn random_below(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    let words = bound.to_u32_digits().len() + 1;
    let digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
    BigUint::from_slice(&digits) % bound
}

/// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial divisor
/// of the odd composite `n`, or `None` when the budget runs out.
fn pollard_brent(n: &BigUint, attempt: u64) -> Option<BigUint> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0072_686f ^ attempt.wrapping_mul(0x9e37_79b9));
    let c = random_below(&mut rng, n).max(BigUint::one());
    let step = |v: &BigUint| (v * v + &c) % n;

    let mut y = random_below(&mut rng, n);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r: u64 = 1;
    let mut iterations: u64 = 0;

    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        iterations += r;
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let batch = RHO_BATCH.min(r - k);
            for _ in 0..batch {
                y = step(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
            iterations += batch;
        }
        r *= 2;
        if iterations > RHO_ITERATION_CAP {
            return None;
        }
    }

    if &g == n {
        // The batch overshot; replay it one step at a time.
        loop {
            ys = step(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n || g.is_one() {
        None
    } else {
        Some(g)
    }
}

fn split_composite(n: BigUint, primes: &mut Vec<BigUint>, leftover: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        primes.push(n);
        return;
    }
    for attempt in 0..RHO_RESTARTS {
        if let Some(d) = pollard_brent(&n, attempt) {
            let other = &n / &d;
            split_composite(d, primes, leftover);
            split_composite(other, primes, leftover);
            return;
        }
    }
    leftover.push(n);
}

/// Factors a nonzero integer. Large composite residues that resist rho are
/// kept in the cofactor.
pub fn factor_integer(n: &BigInt) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::Zero("factor_integer"));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut found: Vec<BigUint> = Vec::new();

    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            found.push(pb.clone());
        }
    }

    let mut leftover = Vec::new();
    if !rest.is_one() {
        split_composite(rest, &mut found, &mut leftover);
    }

    found.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    let cofactor = leftover.into_iter().fold(BigUint::one(), |a, b| a * b);
    Ok(FactoredInteger {
        sign,
        factors,
        cofactor,
    })
}

/// Euler's totient, via the factorization of `n`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi needs n >= 1");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if rest > 1 {
        phi = phi / rest * (rest - 1);
    }
    phi
}

fn distinct_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least `b >= 1` with `q^b = 1 (mod n)`. For `n = 1` this is 1.
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero("multiplicative_order modulus"));
    }
    if n == 1 {
        return Ok(1);
    }
    if q.gcd(&n) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    // Strip prime factors from phi(n) while the power stays 1.
    let mut order = euler_phi(n);
    for r in distinct_prime_divisors(order) {
        while order % r == 0 && pow_mod_u64(q, order / r, n) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

/// Largest `v` with `p^v | n`; the sign of `n` is ignored.
pub fn p_adic_valuation(n: &BigInt, p: &BigUint) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Zero("p_adic_valuation"));
    }
    if p <= &BigUint::one() {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut rest = n.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        rest = q;
        v += 1;
    }
}
