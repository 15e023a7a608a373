use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Ctx, Monomial, Polynomial, Rational};

/// Parse error with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected a term")]
    ExpectedTerm,
    #[error("expected a variable after `*`")]
    ExpectedFactor,
    #[error("expected a positive integer")]
    ExpectedPositiveInteger,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("trailing input")]
    TrailingInput,
}

/// Parse the polynomial text grammar:
///
/// ```text
/// expression  := sign? term (('+'|'-') term)*
/// term        := coefficient ('*' factor)* | factor ('*' factor)*
/// factor      := variable ('^' positive-integer)?
/// coefficient := integer ('/' positive-integer)?
/// ```
///
/// Whitespace is insignificant. The result is in canonical internal form.
pub fn parse_poly(text: &str, ctx: &Ctx) -> Result<Polynomial, ParseError> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ctx,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ctx: &'a Ctx,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.ctx);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term(negate)?;
            out = &out + &term;
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                Some(_) => return Err(self.err(ParseErrorKind::TrailingInput)),
            }
        }
    }

    fn term(&mut self, negate: bool) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                self.skip_ws();
                let denom = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.positive_integer()?;
                    d
                } else {
                    BigInt::from(1)
                };
                Rational::new(numer, denom)
            }
            Some(c) if c.is_ascii_alphabetic() => Rational::from_integer(1.into()),
            Some(c) => return Err(self.err_at(start, ParseErrorKind::UnexpectedChar(c as char))),
            None => return Err(self.err_at(start, ParseErrorKind::ExpectedTerm)),
        };
        if negate {
            coeff = -coeff;
        }
        let mut mono = Monomial::unit(self.ctx.len());
        // factors: either we already consumed a coefficient and factors are
        // '*'-separated, or the term starts directly with a factor.
        let coeff_led = self.bytes.get(start).is_some_and(u8::is_ascii_digit);
        let mut first = true;
        loop {
            self.skip_ws();
            if first && !coeff_led {
                mono = mono.mul(&self.factor()?);
                first = false;
                continue;
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
                mono = mono.mul(&self.factor()?);
                first = false;
            } else {
                break;
            }
        }
        Ok(Polynomial::from_terms(self.ctx, [(mono, coeff)]))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.err_at(start, ParseErrorKind::UnexpectedChar(c as char))),
            None => return Err(self.err_at(start, ParseErrorKind::ExpectedFactor)),
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        let var = self
            .ctx
            .position(name)
            .ok_or_else(|| self.err_at(start, ParseErrorKind::UnknownVariable(name.into())))?;
        let mut exp: u32 = 1;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.positive_integer()?;
            exp = u32::try_from(&e).map_err(|_| self.err(ParseErrorKind::ExponentTooLarge))?;
            if exp > u16::MAX as u32 {
                return Err(self.err(ParseErrorKind::ExponentTooLarge));
            }
        }
        let mut exps = vec![0u16; self.ctx.len()];
        exps[var] = exp as u16;
        Ok(Monomial::from_exponents(&exps))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err_at(start, ParseErrorKind::ExpectedPositiveInteger));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digit string"))
    }

    fn positive_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        let n = self.integer()?;
        if n.is_zero() {
            return Err(self.err_at(start, ParseErrorKind::ExpectedPositiveInteger));
        }
        Ok(n)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos,
            kind,
        }
    }

    fn err_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { pos, kind }
    }
}

#[cfg(test)]
mod tests {
    use super::super::VariableContext;
    use super::*;

    #[test]
    fn parses_spinor_style_quadrics() {
        let ctx = VariableContext::new(["x_12", "x_34", "x_13", "x_24", "x_14", "x_23"]).unwrap();
        let p = parse_poly("x_12*x_34 - x_13*x_24 + x_14*x_23", &ctx).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert!(p.terms().all(|(m, _)| m.degree() == 2));
    }

    #[test]
    fn parses_zero_and_constants() {
        let ctx = VariableContext::new(["x"]).unwrap();
        assert!(parse_poly("0", &ctx).unwrap().is_zero());
        let c = parse_poly("7/3", &ctx).unwrap();
        assert!(c.is_constant());
        assert_eq!(c.constant_term(), Rational::new(7.into(), 3.into()));
        // canonicalization: like terms collapse
        assert!(parse_poly("x - x", &ctx).unwrap().is_zero());
    }

    #[test]
    fn reports_unknown_variable_with_position() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let err = parse_poly("x + yz^2", &ctx).unwrap_err();
        assert_eq!(err.pos, 4);
        assert_eq!(err.kind, ParseErrorKind::UnknownVariable("yz".into()));
    }

    #[test]
    fn reports_syntax_errors_with_position() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        assert_eq!(parse_poly("x + ", &ctx).unwrap_err().pos, 4);
        assert_eq!(
            parse_poly("x ^ 0", &ctx).unwrap_err().kind,
            ParseErrorKind::ExpectedPositiveInteger
        );
        assert_eq!(
            parse_poly("x y", &ctx).unwrap_err().kind,
            ParseErrorKind::TrailingInput
        );
        assert_eq!(
            parse_poly("2 * * x", &ctx).unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('*')
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let a = parse_poly("  3 * x ^ 2  -  1/2 * y ", &ctx).unwrap();
        let b = parse_poly("3*x^2-1/2*y", &ctx).unwrap();
        assert_eq!(a, b);
    }
}
