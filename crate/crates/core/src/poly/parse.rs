//! Text syntax: `8*s2 - 3*s1^2`, `y3^2*y12 + y5^2*y8`, `-2*eta^6`.
//!
//! A term is an optional integer coefficient followed by `*`-joined factors
//! `name` or `name^k`; juxtaposition without `*` is not accepted. Terms are
//! joined by `+` and `-`. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{PolyError, Polynomial, Ring};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        } else {
            None
        }
    }
}

pub(super) fn parse(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = ring.zero();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return lx.err("empty polynomial"),
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                BigInt::one()
            }
            Some(b'-') => {
                lx.pos += 1;
                -BigInt::one()
            }
            Some(_) if first => BigInt::one(),
            Some(c) => return lx.err(format!("expected `+` or `-`, found `{}`", c as char)),
        };
        first = false;
        out = &out + &term(ring, &mut lx)?.scale(sign);
    }
    Ok(out)
}

fn term(ring: &Ring, lx: &mut Lexer<'_>) -> Result<Polynomial, PolyError> {
    let mut t = ring.one();
    let mut need_factor = true;
    if let Some(c) = lx.number() {
        t = t.scale(c);
        need_factor = false;
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
            need_factor = true;
        }
    }
    if !need_factor {
        return Ok(t);
    }
    loop {
        let start = lx.pos;
        let Some(name) = lx.ident() else {
            return lx.err("expected a variable name");
        };
        let v = ring.var_named(name).map_err(|_| {
            lx.pos = start;
            PolyError::UnknownVariable(name.to_string())
        })?;
        let mut e = 1u32;
        if lx.peek() == Some(b'^') {
            lx.pos += 1;
            match lx.number().and_then(|n| u32::try_from(n).ok()) {
                Some(k) => e = k,
                None => return lx.err("expected exponent after `^`"),
            }
        }
        t = &t * &v.pow(e);
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            return Ok(t);
        }
    }
}

/// Terms from the largest monomial down.
pub(super) fn write_poly(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let names = p.ring().vars().names();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mut wrote = false;
        if !abs.is_one() || m.is_one() {
            write!(f, "{abs}")?;
            wrote = true;
        }
        for (v, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "{}", names[v])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::CoeffRing;
    use super::*;

    fn sigma() -> Ring {
        Ring::with_vars(
            CoeffRing::Integer,
            [("s1", 1), ("s2", 2), ("s3", 3), ("s4", 4)],
        )
    }

    #[test]
    fn parses_and_prints() {
        let r = sigma();
        let p = r.parse("8*s2 - 3*s1^2").unwrap();
        assert_eq!(p.to_string(), "-3*s1^2 + 8*s2");
        assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        assert_eq!(r.parse("-s1*s3 + 12 * s4").unwrap().to_string(), "-s1*s3 + 12*s4");
        assert_eq!(r.parse("5").unwrap().to_string(), "5");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.parse("0").unwrap(), r.zero());
    }

    #[test]
    fn rejects_garbage() {
        let r = sigma();
        assert!(matches!(r.parse(""), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse("s1 s2"), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse("s1^"), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse("q7"), Err(PolyError::UnknownVariable(v)) if v == "q7"));
        assert!(matches!(r.parse("3*"), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn names_with_letters_after_digits() {
        let r = Ring::with_vars(CoeffRing::Modular(2), [("wp2", 2), ("wp3", 3), ("eta", 1)]);
        let p = r.parse("wp2^3*wp3 + wp3^3").unwrap();
        assert_eq!(p.to_string(), "wp2^3*wp3 + wp3^3");
    }
}
