//! Polynomial expressions in `x`:
//!
//! ```text
//! poly := term (('+' | '-') term)*
//! term := INT | [INT ['*']] 'x' ['^' UINT]
//! ```
//!
//! `INT` is an optionally signed decimal of any size. Whitespace is ignored
//! between tokens and repeated exponents are summed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// One term with its sign already folded in.
    fn term(&mut self, negative: bool) -> Result<(BigInt, usize)> {
        let mut negative = negative;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            negative ^= c == b'-';
        }
        let coeff = self.digits().map(|d| d.parse::<BigInt>().unwrap());
        let has_x = if coeff.is_some() {
            let star = self.eat(b'*');
            let x = self.eat(b'x');
            if star && !x {
                return self.err("expected 'x' after '*'");
            }
            x
        } else if self.eat(b'x') {
            true
        } else {
            return match self.peek() {
                None => self.err("unexpected end of input, expected a term"),
                Some(c) => self.err(format!("unexpected '{}', expected a term", c as char)),
            };
        };
        let exp = if has_x {
            if self.eat(b'^') {
                match self.digits() {
                    Some(d) => d
                        .parse::<usize>()
                        .or_else(|_| self.err("exponent too large"))?,
                    None => return self.err("expected an exponent after '^'"),
                }
            } else {
                1
            }
        } else {
            0
        };
        let c = coeff.unwrap_or_else(BigInt::one);
        Ok((if negative { -c } else { c }, exp))
    }
}

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut add = |(c, e): (BigInt, usize)| {
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += c;
    };
    add(p.term(false)?);
    loop {
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                add(p.term(false)?);
            }
            Some(b'-') => {
                p.pos += 1;
                add(p.term(true)?);
            }
            Some(c) => return p.err(format!("unexpected '{}'", c as char)),
        }
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(s: &str) -> Vec<i64> {
        parse_poly(s)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn err_pos(s: &str) -> usize {
        match parse_poly(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(ok("x^4+3x^2+3"), vec![3, 0, 3, 0, 1]);
        assert_eq!(ok("x^4 + 34*x^2 + 294"), vec![294, 0, 34, 0, 1]);
        assert_eq!(ok("2"), vec![2]);
        assert_eq!(ok("x+x"), vec![0, 2]);
        assert_eq!(ok("-x+2"), vec![2, -1]);
        assert_eq!(ok("x - -3"), vec![3, 1]);
        assert_eq!(ok("x-x"), Vec::<i64>::new());
        assert_eq!(ok(" 5 x ^ 2 "), vec![0, 0, 5]);
        assert_eq!(ok("0x^3"), Vec::<i64>::new());
    }

    #[test]
    fn huge_coefficient() {
        let f = parse_poly("123456789012345678901234567890x+1").unwrap();
        assert_eq!(f.coeff(1).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(err_pos(""), 0);
        assert_eq!(err_pos("x^"), 2);
        assert_eq!(err_pos("x+"), 2);
        assert_eq!(err_pos("3*"), 2);
        assert_eq!(err_pos("x^2 y"), 4);
        assert_eq!(err_pos("2x x"), 3);
    }
}
