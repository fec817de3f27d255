//! Text syntax for polynomials.
//!
//! ```text
//! expr   = ["+" | "-"] term { ("+" | "-") term }
//! term   = factor { ("*" | "/") factor }      (division only by nonzero constants)
//! factor = atom [ "^" integer ]
//! atom   = integer | identifier | "(" expr ")" | ("+" | "-") factor
//! ```
//!
//! Whitespace is ignored between tokens.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::polynomial::{Coeff, Polynomial};
use crate::poly::ring::RingRef;

/// Parse `text` as a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: String::from(msg),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.multiply(&self.factor()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: String::from("division by zero"),
                        });
                    }
                    if !d.is_constant() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: String::from("division only by constants"),
                        });
                    }
                    acc = acc.scale(&(Coeff::from_integer(BigInt::from(1)) / &d.terms()[0].1));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(self.err("negative exponent"));
            }
            let e = self.integer()?;
            if e.is_negative() || e > BigInt::from(u16::MAX / 2) {
                return Err(self.err("exponent out of range"));
            }
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Polynomial::constant(self.ring, Coeff::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Polynomial::var(self.ring, name)
            }
            Some(c) => Err(self.err(&format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let mut v = BigInt::zero();
        for d in digits.bytes() {
            v = v * 10u32 + (d - b'0') as u32;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use alloc::string::ToString;

    #[test]
    fn literals_and_expansion() {
        let r = Ring::with_x(&["x1", "x2"]).unwrap();
        let p = parse_poly("x1-x2", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x1 - x2");
        let r = Ring::with_x(&["x", "y", "z"]).unwrap();
        assert_eq!(
            parse_poly("(x-y)*(x-z)", &r).unwrap().to_string(),
            "x^2 - x*y - x*z + y*z"
        );
        assert_eq!(
            parse_poly("x^3+y^3+x*y*z", &r).unwrap().to_string(),
            "x^3 + y^3 + x*y*z"
        );
        assert_eq!(
            parse_poly("-(x+1)^2/4", &r).unwrap().to_string(),
            "-1/4*x^2 - 1/2*x - 1/4"
        );
        assert_eq!(parse_poly(" 2 * -x ", &r).unwrap().to_string(), "-2*x");
    }

    #[test]
    fn errors() {
        let r = Ring::with_x(&["x", "y"]).unwrap();
        assert_eq!(
            parse_poly("x+w", &r),
            Err(Error::UnknownVariable("w".into()))
        );
        assert!(matches!(parse_poly("x^-1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x+", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/0", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x y", &r), Err(Error::Parse { .. })));
    }
}
