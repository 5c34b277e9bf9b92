//! Complete factorization over `F_p`: squarefree decomposition, then
//! distinct-degree splitting, then equal-degree splitting (Cantor-Zassenhaus
//! for odd `p`, the trace map for `p = 2`).

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ModPoly;
use crate::error::{Error, Result};

/// `unit * prod f_i^{e_i}` with distinct monic irreducible `f_i`, sorted by
/// degree and then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModFactorization {
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, p: u64) -> ModPoly {
        let mut acc = ModPoly::from_raw(p, vec![self.unit]);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

pub fn factor_mod_seeded(f: &ModPoly, seed: u64) -> Result<ModFactorization> {
    factor_mod(f, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn factor_mod<R: Rng>(f: &ModPoly, rng: &mut R) -> Result<ModFactorization> {
    if f.is_zero() {
        return Err(Error::Zero("factor_mod"));
    }
    let unit = f.leading_coeff();
    let monic = f.monic();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(ModFactorization { unit, factors })
}

/// Pairs `(g_i, i)` with `f = prod g_i^i`, every `g_i` squarefree and the
/// `g_i` pairwise coprime.
fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, e) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, e * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        for (g, e) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, e * p as u32));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into blocks whose irreducible
/// factors all share one degree.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let x = ModPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut frob = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        frob = frob.frobenius(&rest);
        let g = rest.gcd(&frob.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            frob = frob.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

fn random_poly<R: Rng>(p: u64, below_degree: usize, rng: &mut R) -> ModPoly {
    ModPoly::from_raw(p, (0..below_degree).map(|_| rng.gen_range(0..p)).collect())
}

/// Splits a product of distinct irreducibles of degree `d`.
fn equal_degree<R: Rng>(f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.p;
    let half_exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1u32;
    loop {
        let a = random_poly(p, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // a + a^2 + ... + a^(2^(d-1))
            let mut term = a.rem(f);
            let mut trace = term.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                trace = trace.add(&term);
            }
            trace
        } else {
            a.pow_mod(&half_exp, f).sub(&ModPoly::one(p))
        };
        let g = f.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.div_exact(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f` and
/// `gcd(x^(p^(n/r)) - x, f) = 1` for every prime `r | n`.
pub fn is_irreducible_mod(f: &ModPoly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let p = f.p;
    let x = ModPoly::x(p);
    let mut prime_divisors = Vec::new();
    let mut rest = n;
    let mut r = 2;
    while r * r <= rest {
        if rest % r == 0 {
            prime_divisors.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divisors.push(rest);
    }
    let checkpoints: Vec<usize> = prime_divisors.iter().map(|r| n / r).collect();

    let mut frob = x.clone();
    for k in 1..=n {
        frob = frob.frobenius(&f);
        if checkpoints.contains(&k) && !f.gcd(&frob.sub(&x)).is_one() {
            return false;
        }
    }
    frob == x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(p: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(p, c.to_vec()).unwrap()
    }

    #[test]
    fn phi5_mod_11_splits_into_linear_factors() {
        let phi5 = mp(11, &[1, 1, 1, 1, 1]);
        let fac = factor_mod_seeded(&phi5, 0).unwrap();
        let expected: Vec<(ModPoly, u32)> =
            [2, 6, 7, 8].iter().map(|&c| (mp(11, &[c, 1]), 1)).collect();
        assert_eq!(fac.unit, 1);
        assert_eq!(fac.factors, expected);
    }

    #[test]
    fn phi5_mod_2_is_irreducible() {
        let phi5 = mp(2, &[1, 1, 1, 1, 1]);
        let fac = factor_mod_seeded(&phi5, 0).unwrap();
        assert_eq!(fac.factors, vec![(phi5.clone(), 1)]);
        assert!(is_irreducible_mod(&phi5));
    }

    #[test]
    fn pure_power() {
        let fac = factor_mod_seeded(&mp(3, &[0, 0, 0, 0, 1]), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(3, &[0, 1]), 4)]);
        assert!(factor_mod_seeded(&ModPoly::zero(3), 0).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_mod(&mp(2, &[1, 1, 1])));
        assert!(!is_irreducible_mod(&mp(2, &[1, 0, 1])));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
        assert!(!is_irreducible_mod(&mp(2, &[1, 0, 1, 0, 1])));
    }

    #[test]
    fn char_two_with_repeated_and_wild_factors() {
        // (x+1)^6 * (x^2+x+1)^3 * x^5 over F_2
        let a = mp(2, &[1, 1]);
        let b = mp(2, &[1, 1, 1]);
        let x = mp(2, &[0, 1]);
        let mut f = ModPoly::one(2);
        for _ in 0..6 {
            f = f.mul(&a);
        }
        for _ in 0..3 {
            f = f.mul(&b);
        }
        for _ in 0..5 {
            f = f.mul(&x);
        }
        let fac = factor_mod_seeded(&f, 9).unwrap();
        assert_eq!(fac.factors, vec![(x, 5), (a, 6), (b, 3)]);
        assert_eq!(fac.expand(2), f);
    }

    #[test]
    fn non_monic_input_keeps_unit() {
        let f = mp(7, &[6, 0, 3]); // 3x^2 + 6 = 3 (x^2 + 2)
        let fac = factor_mod_seeded(&f, 1).unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(fac.expand(7), f);
    }
}
