//! Parser for ring descriptors.
//!
//! ```text
//! ring   := factor ( 'x' factor )*
//! factor := 'Z/' n  |  'F' p '[x]/(' poly ')'
//! poly   := term ( ('+' | '-') term )*
//! term   := [c ['*']] 'x' ['^' e]  |  c
//! ```
//!
//! Whitespace between tokens is ignored. Products associate to the left.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;

use super::poly::Poly;
use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Cyclic(u64),
    PolyQuotient { p: u64, modulus: Poly },
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl Descriptor {
    /// Carrier size, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        match self {
            Descriptor::Cyclic(n) => Some(*n),
            Descriptor::PolyQuotient { p, modulus } => {
                p.checked_pow(modulus.degree().unwrap_or(0) as u32)
            }
            Descriptor::Product(a, b) => a.size()?.checked_mul(b.size()?),
        }
    }
}

impl core::fmt::Display for Descriptor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "Z/{n}"),
            Descriptor::PolyQuotient { p, modulus } => write!(f, "F{p}[x]/({modulus})"),
            Descriptor::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn parse(text: &str) -> Result<Descriptor, RingError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let ring = parser.ring()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(ring)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RingError {
        RingError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), RingError> {
        for b in token.bytes() {
            if !self.eat(b) {
                return Err(self.error(&alloc::format!("expected `{token}`")));
            }
        }
        Ok(())
    }

    fn number(&mut self) -> Result<u64, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| RingError::Parse {
            position: start,
            message: String::from("number too large"),
        })
    }

    fn ring(&mut self) -> Result<Descriptor, RingError> {
        let mut acc = self.factor()?;
        while self.eat(b'x') {
            let rhs = self.factor()?;
            acc = Descriptor::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Descriptor, RingError> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                self.expect("/")?;
                let at = self.pos;
                let n = self.number()?;
                if n == 0 {
                    return Err(RingError::InvalidModulus { position: at });
                }
                Ok(Descriptor::Cyclic(n))
            }
            Some(b'F') => {
                self.pos += 1;
                let at = self.pos;
                let p = self.number()?;
                if !is_prime(p) {
                    return Err(RingError::NotPrime { p, position: at });
                }
                self.expect("[x]/(")?;
                let at = self.pos;
                let modulus = self.poly(p)?;
                self.expect(")")?;
                match modulus.degree() {
                    None | Some(0) => Err(RingError::Parse {
                        position: at,
                        message: String::from("modulus must have positive degree"),
                    }),
                    _ if !modulus.is_monic() => Err(RingError::NotMonic { position: at }),
                    _ => Ok(Descriptor::PolyQuotient { p, modulus }),
                }
            }
            _ => Err(self.error("expected `Z/<n>` or `F<p>[x]/(<poly>)`")),
        }
    }

    fn poly(&mut self, p: u64) -> Result<Poly, RingError> {
        let mut acc = Poly::zero();
        let mut negate = self.eat(b'-');
        loop {
            let term = self.term(p)?;
            let term = if negate {
                term.mul(&Poly::new(vec![p - 1], p), p)
            } else {
                term
            };
            acc = acc.add(&term, p);
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, p: u64) -> Result<Poly, RingError> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.number()?;
                if self.peek() != Some(b'x') && !self.eat(b'*') {
                    return Ok(Poly::new(vec![c % p], p));
                }
                c % p
            }
            _ => 1,
        };
        self.expect("x")?;
        let exp = if self.eat(b'^') { self.number()? } else { 1 };
        if exp > 64 {
            return Err(self.error("exponent too large"));
        }
        let mut c = vec![0; exp as usize + 1];
        c[exp as usize] = coeff;
        Ok(Poly::new(c, p))
    }
}
