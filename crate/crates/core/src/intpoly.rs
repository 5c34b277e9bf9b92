//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Operand size (in coefficients) above which multiplication switches from
/// schoolbook to Karatsuba.
const KARATSUBA_THRESHOLD: usize = 32;

/// Polynomial in `Z[x]`; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^d`
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact coefficient division");
                    q
                })
                .collect(),
        )
    }

    /// Division by a monic polynomial: `self = q * d + r` with `deg r < deg d`.
    pub fn monic_divmod(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if d.is_zero() {
            return Err(Error::Zero("monic_divmod divisor"));
        }
        if !d.is_monic() {
            return Err(Error::NotMonic);
        }
        let dd = d.degree().unwrap();
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self = q * d + r`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let Some(sd) = self.degree() else {
            return IntPoly::zero();
        };
        if sd < dd {
            return self.clone();
        }
        let lc = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut steps = sd - dd + 1;
        let mut top = sd;
        while top >= dd && rem.len() > dd {
            let c = rem[top].clone();
            for r in rem.iter_mut().take(top) {
                *r *= lc;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                rem[top - dd + j] -= &c * dj;
            }
            rem.truncate(top);
            steps -= 1;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            match rem.len().checked_sub(1) {
                Some(t) if t >= dd => top = t,
                _ => break,
            }
        }
        let r = IntPoly::new(rem);
        if steps > 0 {
            r.scale(&lc.pow(steps as u32))
        } else {
            r
        }
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return self.clone();
        }
        // Repeated synthetic division (Taylor shift).
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        IntPoly::new(a)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `self(x^k)`.
    pub fn inflate(&self, k: usize) -> IntPoly {
        assert!(k >= 1);
        let Some(d) = self.degree() else {
            return IntPoly::zero();
        };
        let mut out = vec![BigInt::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_coeffs(&self, m: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Coefficients reduced into the symmetric range `(-m/2, m/2]`.
    pub fn symmetric_coeffs(&self, m: &BigInt) -> IntPoly {
        let half: BigInt = m >> 1u32;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    /// `self^e` with coefficients reduced into `[0, m)`, by square-and-multiply.
    pub fn pow_coeffmod(&self, e: u64, m: &BigUint) -> Result<IntPoly> {
        if e == 0 {
            return Err(Error::InvalidArgument(
                "pow_coeffmod exponent must be >= 1".into(),
            ));
        }
        if m < &BigUint::from(2u32) {
            return Err(Error::InvalidArgument(
                "pow_coeffmod modulus must be >= 2".into(),
            ));
        }
        let m = BigInt::from(m.clone());
        let mut base = self.reduce_coeffs(&m);
        let mut acc = IntPoly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).reduce_coeffs(&m);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).reduce_coeffs(&m);
            }
        }
        Ok(acc)
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().sign() == Sign::Minus {
            c = -c;
        }
        self.div_exact(&c)
    }

    /// Primitive gcd over `Z[x]` (equivalently, the gcd over `Q[x]` up to a
    /// rational unit), via the primitive PRS.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale(&content)
    }
}

fn add_into(acc: &mut [BigInt], src: &[BigInt]) {
    for (a, s) in acc.iter_mut().zip(src) {
        *a += s;
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));

    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let sum = |lo: &[BigInt], hi: &[BigInt]| -> Vec<BigInt> {
        let mut s: Vec<BigInt> = lo.to_vec();
        if s.len() < hi.len() {
            s.resize(hi.len(), BigInt::zero());
        }
        add_into(&mut s, hi);
        s
    };
    let mut z1 = karatsuba(&sum(a0, a1), &sum(b0, b1));
    for (i, v) in z0.iter().enumerate() {
        z1[i] -= v;
    }
    for (i, v) in z2.iter().enumerate() {
        z1[i] -= v;
    }

    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    add_into(&mut out, &z0);
    add_into(&mut out[half..], &z1);
    if !z2.is_empty() {
        add_into(&mut out[2 * half..], &z2);
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        add_into(&mut out, &short.coeffs);
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(karatsuba(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Renders in the compact form accepted by the CLI parser, highest degree
/// first: `x^4+3x^2+3`, `-x+2`, `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn ring_ops() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[3, 0, 1]) + &IntPoly::zero(), p(&[3, 0, 1]));
        assert_eq!(&p(&[1, 1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 0, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a: Vec<BigInt> = (0..150)
            .map(|i| BigInt::from((i * 37 % 23) as i64 - 11))
            .collect();
        let b: Vec<BigInt> = (0..97)
            .map(|i| BigInt::from((i * 53 % 19) as i64 - 9))
            .collect();
        assert_eq!(karatsuba(&a, &b), schoolbook(&a, &b));
        assert_eq!(karatsuba(&b, &a), schoolbook(&a, &b));
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p(&[-1, 0, 1]).monic_divmod(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), IntPoly::zero()));
        let (q, r) = p(&[3, 0, 3, 0, 1]).monic_divmod(&IntPoly::x()).unwrap();
        assert_eq!((q, r), (p(&[0, 3, 0, 1]), p(&[3])));
        let (q, r) = p(&[-1, 0, 0, 1]).monic_divmod(&p(&[1, 1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), IntPoly::zero()));
        assert_eq!(p(&[1, 1]).monic_divmod(&p(&[1, 2])), Err(Error::NotMonic));
        assert!(p(&[1, 1]).monic_divmod(&IntPoly::zero()).is_err());
    }

    #[test]
    fn pseudo_rem_identity() {
        let a = p(&[5, -3, 2, 7, 1]);
        let b = p(&[1, 0, 3]);
        // 3^3 * a = q * b + r with deg r < 2
        let r = a.pseudo_rem(&b);
        assert!(r.degree().unwrap() < 2);
        let lhs = &a.scale(&BigInt::from(27)) - &r;
        // b is primitive, so b | lhs over Q exactly when their gcd is b.
        assert_eq!(lhs.gcd(&b), b);
    }

    #[test]
    fn compose_shift_derivative_eval() {
        assert_eq!(p(&[1, 1, 1]).compose(&p(&[1, 0, 1])), p(&[3, 0, 3, 0, 1]));
        let f = p(&[2, -1, 4]);
        assert_eq!(f.compose(&IntPoly::x()), f);
        assert_eq!(p(&[1, 1]).compose(&f), &f + &IntPoly::one());
        assert_eq!(p(&[1, 0, 1]).shift(&BigInt::one()), p(&[2, 2, 1]));
        assert_eq!(f.shift(&BigInt::zero()), f);
        assert_eq!(p(&[-1, 1]).shift(&BigInt::one()), IntPoly::x());
        assert_eq!(p(&[3, 0, 3, 0, 1]).derivative(), p(&[0, 6, 0, 4]));
        assert_eq!(p(&[7]).derivative(), IntPoly::zero());
        assert_eq!(p(&[1, 0, 0, 0, 1]).derivative(), p(&[0, 0, 0, 4]));
        assert_eq!(
            p(&[1, 0, 0, 1, 0, 0, 1]).eval(&BigInt::one()),
            BigInt::from(3)
        );
        assert_eq!(f.eval(&BigInt::zero()), BigInt::from(2));
        assert_eq!(p(&[17, 0, 1]).eval(&BigInt::from(5)), BigInt::from(42));
    }

    #[test]
    fn pow_coeffmod_examples() {
        let two = BigUint::from(2u32);
        let four = BigUint::from(4u32);
        assert_eq!(p(&[1, 1]).pow_coeffmod(2, &two).unwrap(), p(&[1, 0, 1]));
        assert_eq!(
            IntPoly::x().pow_coeffmod(9, &four).unwrap(),
            IntPoly::monomial(1.into(), 9)
        );
        assert_eq!(p(&[3, 1]).pow_coeffmod(2, &four).unwrap(), p(&[1, 2, 1]));
        assert!(p(&[3, 1]).pow_coeffmod(0, &four).is_err());
    }

    #[test]
    fn gcd_and_content() {
        let a = &p(&[1, 0, 1]) * &p(&[2, 3]);
        let b = &p(&[1, 0, 1]) * &p(&[-5, 1, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 0, 1]));
        assert_eq!(p(&[6, 4, -2]).content(), BigInt::from(2));
        assert_eq!(p(&[6, 4, -2]).primitive_part(), p(&[-3, -2, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 0, 3, 0, 1]).to_string(), "x^4+3x^2+3");
        assert_eq!(p(&[2, -1]).to_string(), "-x+2");
        assert_eq!(p(&[0, -3, 0, -1]).to_string(), "-x^3-3x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
