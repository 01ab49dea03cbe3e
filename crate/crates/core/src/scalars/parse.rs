//! Recursive-descent parser for scalar expressions.
//!
//! Grammar (whitespace ignored, `−` accepted as minus):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | implicit)*
//! unary   := '-' unary | '+' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ['-'|'+'] integer | '(' ['-'|'+'] integer ')'
//! primary := integer | 'q' | '(' expr ')'
//! ```
//!
//! Juxtaposition such as `2q` or `3(q+1)` is read as multiplication.

use num_bigint::BigInt;

use super::{Laurent, QScalar};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 200;
const MAX_MONOMIAL_EXP: i64 = 1 << 12;
const MAX_SPAN: i64 = 1 << 14;
const MAX_GENERAL_EXP: i64 = 64;
const MAX_DIGITS: usize = 4096;

pub(super) fn parse_scalar(src: &str) -> Result<QScalar> {
    let mut p = Parser {
        chars: src.char_indices().collect(),
        pos: 0,
        depth: 0,
        len: src.len(),
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    depth: usize,
    len: usize,
}

impl Parser {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(b, _)| b)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.byte_pos(),
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| match c {
            '−' => '-',
            c => c,
        })
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<QScalar> {
        self.enter()?;
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    self.guard(&acc, &rhs)?;
                    acc = acc.add(&rhs);
                }
                Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    self.guard(&acc, &rhs)?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<QScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    self.guard(&acc, &rhs)?;
                    acc = acc.mul(&rhs);
                }
                Some('/') => {
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    self.guard(&acc, &rhs)?;
                    acc = acc.div(&rhs)?;
                }
                Some(c) if c == 'q' || c == '(' || c.is_ascii_digit() => {
                    let rhs = self.power()?;
                    self.guard(&acc, &rhs)?;
                    acc = acc.mul(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QScalar> {
        self.enter()?;
        let v = match self.peek() {
            Some('-') => {
                self.bump();
                self.unary()?.neg()
            }
            Some('+') => {
                self.bump();
                self.unary()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(v)
    }

    fn power(&mut self) -> Result<QScalar> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let exp = self.exponent()?;
        let limit = if base.as_pure_q_power().is_some() {
            MAX_MONOMIAL_EXP
        } else {
            MAX_GENERAL_EXP
        };
        if exp.abs() > limit {
            return Err(self.error("exponent too large"));
        }
        if exp < 0 && base.is_zero() {
            return Err(self.error("negative power of zero"));
        }
        let span = base.numerator().high() - base.numerator().low() + base.denominator().high();
        if span.saturating_mul(exp.abs()) > MAX_SPAN {
            return Err(self.error("power too large"));
        }
        base.pow(exp)
    }

    /// Rejects binary operations whose result could be a dense polynomial
    /// of huge degree.
    fn guard(&self, a: &QScalar, b: &QScalar) -> Result<()> {
        let span = |v: &QScalar| {
            i128::from(v.numerator().high()) - i128::from(v.numerator().low())
                + i128::from(v.denominator().high())
        };
        let hi = i128::from(a.numerator().high().max(b.numerator().high()));
        let lo = i128::from(a.numerator().low().min(b.numerator().low()));
        if hi - lo + span(a) + span(b) > i128::from(MAX_SPAN) {
            return Err(self.error("expression degree too large"));
        }
        Ok(())
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.bump();
        }
        let neg = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let digits = self.digits()?;
        let v: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        if paren {
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.bump();
        }
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&(_, c)| c.is_ascii_digit())
        {
            self.pos += 1;
            if self.pos - start > MAX_DIGITS {
                return Err(self.error("integer literal too long"));
            }
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect())
    }

    fn primary(&mut self) -> Result<QScalar> {
        match self.peek() {
            Some('q') => {
                self.bump();
                Ok(QScalar::q_pow(1))
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits()?;
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(QScalar::from_laurent(Laurent::constant(n)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        let x = parse_scalar("q^2 - 1").unwrap();
        assert_eq!(x.to_string(), "q^2 - 1");
        let y = parse_scalar("(q^2-1)/(q+1)").unwrap();
        assert_eq!(y.to_string(), "q - 1");
        assert_eq!(parse_scalar("2q").unwrap(), parse_scalar("2*q").unwrap());
        assert_eq!(
            parse_scalar("q^(-2)").unwrap(),
            parse_scalar("q^-2").unwrap()
        );
        assert_eq!(parse_scalar("−q").unwrap(), parse_scalar("-q").unwrap());
        assert_eq!(parse_scalar("-(q)^2").unwrap().to_string(), "-q^2");
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "q +",
            "(q",
            "1/0",
            "1/(q-q)",
            "x",
            "q^",
            "q^q",
            "0^-1",
            "(q+1)^100",
        ] {
            assert!(parse_scalar(bad).is_err(), "{bad:?} should fail");
        }
        let deep = "(".repeat(10_000);
        assert!(parse_scalar(&deep).is_err());
    }
}
