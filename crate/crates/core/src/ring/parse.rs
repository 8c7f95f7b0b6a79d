//! Parser for the ring spec grammar.
//!
//! spec   := factor ("x" factor)*
//! factor := "Z" int | "GF(" int ")" | "Z" prime "[x]/(" poly ")"
//! poly   := term ("+" term)* with term = int | [int ["*"]] "x" ["^" int]
//!
//! Whitespace is insignificant. The letter x doubles as the product
//! separator and the polynomial variable; the two never collide because
//! polynomials only occur between "/(" and ")".

use crate::error::{Error, Result};
use crate::ring::spec::{RingSpec, DEFAULT_ORDER_CAP};

/// Largest exponent the parser accepts inside a modulus polynomial; the
/// real degree cap is enforced after reduction mod p.
const MAX_EXPONENT: u64 = 64;

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    parse_ring_spec_with_cap(text, DEFAULT_ORDER_CAP)
}

pub fn parse_ring_spec_with_cap(text: &str, cap: u64) -> Result<RingSpec> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    let spec = p.parse_spec()?;
    spec.check_cap(cap)?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next significant byte without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        let at = { self.skip_ws(); self.pos };
        match self.bump() {
            Some(b) if b == want => Ok(()),
            _ => self.error(at, format!("expected '{}'", want as char)),
        }
    }

    fn parse_int(&mut self) -> Result<u64> {
        let start = { self.skip_ws(); self.pos };
        let mut end = start;
        while end < self.text.len() && self.text[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return self.error(start, "expected an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..end]).unwrap();
        let value: u64 = digits
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })?;
        self.pos = end;
        Ok(value)
    }

    fn parse_spec(&mut self) -> Result<RingSpec> {
        let mut factors = vec![self.parse_factor()?];
        loop {
            match self.peek() {
                None => break,
                Some(b'x') => {
                    self.pos += 1;
                    factors.push(self.parse_factor()?);
                }
                Some(b) => {
                    return self.error(self.pos, format!("expected 'x' or end of input, found '{}'", b as char));
                }
            }
        }
        RingSpec::product(factors)
    }

    fn parse_factor(&mut self) -> Result<RingSpec> {
        let at = { self.skip_ws(); self.pos };
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let n = self.parse_int()?;
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    self.expect(b'x')?;
                    self.expect(b']')?;
                    self.expect(b'/')?;
                    self.expect(b'(')?;
                    let coeffs = self.parse_poly()?;
                    self.expect(b')')?;
                    RingSpec::quotient_poly(n, &coeffs)
                } else {
                    RingSpec::zn(n)
                }
            }
            Some(b'G') => {
                self.pos += 1;
                self.expect(b'F')?;
                self.expect(b'(')?;
                let q = self.parse_int()?;
                self.expect(b')')?;
                RingSpec::gf(q)
            }
            Some(b) => self.error(at, format!("expected a ring factor, found '{}'", b as char)),
            None => self.error(at, "expected a ring factor, found end of input"),
        }
    }

    /// Little-endian raw coefficients; reduction mod p and the monic check
    /// happen in the RingSpec constructor.
    fn parse_poly(&mut self) -> Result<Vec<u64>> {
        let mut coeffs = vec![0u64; 1];
        loop {
            let (coeff, power) = self.parse_term()?;
            if coeffs.len() <= power as usize {
                coeffs.resize(power as usize + 1, 0);
            }
            let slot = &mut coeffs[power as usize];
            *slot = slot.checked_add(coeff).ok_or(Error::Parse {
                pos: self.pos,
                msg: "coefficient too large".into(),
            })?;
            if self.peek() == Some(b'+') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(coeffs)
    }

    fn parse_term(&mut self) -> Result<(u64, u64)> {
        let at = { self.skip_ws(); self.pos };
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.parse_int()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                c
            }
            Some(b'x') => 1,
            _ => return self.error(at, "expected a polynomial term"),
        };
        if self.peek() != Some(b'x') {
            // Constant term.
            return Ok((coeff, 0));
        }
        self.pos += 1;
        let power = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_int()?;
            if e > MAX_EXPONENT {
                return self.error(self.pos, "exponent too large");
            }
            e
        } else {
            1
        };
        Ok((coeff, power))
    }
}
