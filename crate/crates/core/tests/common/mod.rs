//! Reference computations written without the library's algorithms.
#![allow(dead_code)]

use cyclomono::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by fraction-free Gaussian elimination (Bareiss) with row
/// swaps for zero pivots.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows of
/// f's coefficients, then m shifted rows of g's, highest degree first.
pub fn sylvester(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(f, m, n), (g, n, m)] {
        for shift in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for i in 0..=deg {
                row[shift + i] = poly.coeff(deg - i);
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant as the Sylvester determinant. Requires positive degrees.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    bareiss_det(sylvester(f, g))
}

/// `(-1)^(m(m-1)/2) / a * det Syl(f, f')`.
pub fn sylvester_discriminant(f: &IntPoly) -> BigInt {
    let m = f.degree().unwrap();
    let r = sylvester_resultant(f, &f.derivative());
    let a = f.leading_coeff().unwrap();
    let d = r / a;
    if (m * (m - 1) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Schoolbook product of ascending coefficient lists.
pub fn schoolbook(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntPoly::new(out)
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn brute_totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64
}

/// Least `k >= 1` with `q^k = 1 (mod n)`, by repeated multiplication.
pub fn brute_order(q: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd_u64(q, n) != 1 {
        return None;
    }
    let mut x = q % n;
    let mut k = 1;
    while x != 1 {
        x = x * q % n;
        k += 1;
    }
    Some(k)
}

pub fn trial_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}
