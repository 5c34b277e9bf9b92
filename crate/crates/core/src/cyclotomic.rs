//! Cyclotomic polynomials, the compositions `T = Phi_{p^m}(Phi_{2^n}(x))`,
//! and closed forms for their discriminants and resultants.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::arith::{euler_phi, is_prime_u64};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

fn cache() -> &'static RwLock<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by every
/// `Phi_d` with `d | n`, `d < n`. Results are memoized process-wide.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(f) = cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let mut acc = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = acc
            .monic_divmod(&cyclotomic_poly(d))
            .expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        acc = q;
    }
    cache().write().unwrap().entry(n).or_insert(acc).clone()
}

/// `(p, m, n)` selecting `T(x) = Phi_{p^m}(Phi_{2^n}(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloParams {
    pub p: u64,
    pub m: u32,
    pub n: u32,
}

impl CycloParams {
    pub fn new(p: u64, m: u32, n: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("m and n must be positive".into()));
        }
        if p.checked_pow(m).is_none() || n > 62 {
            return Err(Error::InvalidArgument("parameters out of range".into()));
        }
        Ok(CycloParams { p, m, n })
    }

    pub fn prime_power(&self) -> u64 {
        self.p.pow(self.m)
    }

    /// `2^(n-1)`, the degree of `Phi_{2^n}`.
    pub fn inner_degree(&self) -> u64 {
        1 << (self.n - 1)
    }

    /// `phi(p^m) = p^(m-1) (p-1)`, the degree of `Phi_{p^m}`.
    pub fn outer_degree(&self) -> u64 {
        self.p.pow(self.m - 1) * (self.p - 1)
    }

    /// `deg T = 2^(n-1) p^(m-1) (p-1)`, or `None` on overflow.
    pub fn degree(&self) -> Option<u64> {
        self.inner_degree().checked_mul(self.outer_degree())
    }
}

pub fn build_t(params: CycloParams) -> IntPoly {
    let outer = cyclotomic_poly(params.prime_power());
    let inner = cyclotomic_poly(1 << params.n);
    outer.compose(&inner)
}

/// Discriminant of `Phi_{p^m}`: `eps * p^(p^(m-1) (pm - m - 1))` with
/// `eps = -1` exactly when `p^m = 4` or `p = 3 (mod 4)`.
pub fn cyclo_disc_prime_power(p: u64, m: u32) -> BigInt {
    assert!(m >= 1);
    let pm = p.pow(m);
    let negative = pm == 4 || p % 4 == 3;
    let exp = p.pow(m - 1) * (p * m as u64 - m as u64 - 1);
    let mag = BigInt::from(BigUint::from(p).pow(exp as u32));
    if negative {
        -mag
    } else {
        mag
    }
}

/// `Some((q, a))` when `k = q^a` for a prime `q` and `a >= 1`.
pub fn prime_power_decomposition(k: u64) -> Option<(u64, u32)> {
    if k < 2 {
        return None;
    }
    let mut q = 2;
    while q * q <= k {
        if k % q == 0 {
            break;
        }
        q += 1;
    }
    if k % q != 0 {
        q = k;
    }
    let mut rest = k;
    let mut a = 0;
    while rest % q == 0 {
        rest /= q;
        a += 1;
    }
    (rest == 1).then_some((q, a))
}

/// Resultant of `Phi_m` and `Phi_n` for `0 < m < n`: `q^phi(m)` when
/// `n / m` is a power of the prime `q`, otherwise 1.
pub fn cyclo_resultant(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!(
            "cyclo_resultant needs 0 < m < n, got m={m}, n={n}"
        )));
    }
    if n % m != 0 {
        return Ok(BigUint::one());
    }
    Ok(match prime_power_decomposition(n / m) {
        Some((q, _)) => BigUint::from(q).pow(euler_phi(m) as u32),
        None => BigUint::one(),
    })
}

/// Exact discriminant of `T`, assembled from the binomial-composition
/// formula with `f = Phi_{p^m}` (degree `M`) and `g = x^N + 1` (`N = 2^(n-1)`):
///
/// `(-1)^(M N (N-1) (M+2N) / 2) * disc(Phi_{p^m})^N * N^(M N) * p^(N-1)`.
///
/// For `n = 1`, `T` is a translate of `Phi_{p^m}` and shares its discriminant.
pub fn disc_t_closed_form(params: CycloParams) -> BigInt {
    let d = cyclo_disc_prime_power(params.p, params.m);
    if params.n == 1 {
        return d;
    }
    let big_m = params.outer_degree();
    let big_n = params.inner_degree();
    let sign_exp = big_m * big_n * (big_n - 1) * (big_m + 2 * big_n) / 2;
    let magnitude = d.pow(big_n as u32)
        * BigInt::from(big_n).pow((big_m * big_n) as u32)
        * BigInt::from(params.p).pow((big_n - 1) as u32);
    if sign_exp % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// The single-product simplification
/// `eps^(2^(n-1)) * 2^((n-1) 2^(n-1) p^(m-1) (p-1)) * p^(m 2^(n-1) p^(m-1) (p-1) - 1)`
/// that is commonly quoted for the discriminant of `T` when `n >= 2`.
///
/// It carries no sign for `p^m = 2` and overstates the `p`-exponent when
/// `m >= 2`; the harness reports where it departs from
/// [`disc_t_closed_form`]. Returns `None` for `n = 1`.
pub fn disc_t_simplified(params: CycloParams) -> Option<BigInt> {
    if params.n < 2 {
        return None;
    }
    let big_n = params.inner_degree();
    let big_m = params.outer_degree();
    let negative_eps = params.prime_power() == 4 || params.p % 4 == 3;
    let two_exp = (params.n as u64 - 1) * big_n * big_m;
    let p_exp = params.m as u64 * big_n * big_m - 1;
    let mag = BigInt::from(2).pow(two_exp as u32) * BigInt::from(params.p).pow(p_exp as u32);
    // eps is raised to an even power whenever n >= 2
    let negative = negative_eps && big_n % 2 == 1;
    Some(if negative { -mag } else { mag })
}
