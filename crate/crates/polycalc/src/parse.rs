use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::CalcError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;

/// Parse an expression over x1..xn into an exact rational function.
///
/// Grammar: integers, rationals p/q, variables x1..xn, operators + - * / ^
/// (nonnegative integer exponents), parentheses; whitespace-insensitive.
pub fn parse_expr(src: &str, n: usize) -> Result<RatFunc, CalcError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(CalcError::SyntaxError {
            pos: p.pos,
            msg: format!("unexpected trailing input `{}`", &src[p.pos..]),
        });
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, CalcError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, CalcError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let pos = self.pos;
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(CalcError::SyntaxError {
                            pos,
                            msg: "division by zero expression".into(),
                        });
                    }
                    acc = acc.div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, CalcError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, CalcError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let pos = self.pos;
            // exponent: integer literal, optionally parenthesized
            let e = self.factor()?;
            let exp = e
                .constant_value()
                .filter(|c| c.is_integer() && c.numer() >= &BigInt::from(0))
                .and_then(|c| c.numer().to_u32())
                .ok_or(CalcError::SyntaxError {
                    pos,
                    msg: "exponent must be a nonnegative integer".into(),
                })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, CalcError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(e)
                } else {
                    Err(CalcError::SyntaxError { pos: self.pos, msg: "expected `)`".into() })
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: BigInt = text.parse().unwrap();
                Ok(RatFunc::constant(self.n, BigRational::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
                let idx = name
                    .strip_prefix('x')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&k| k >= 1 && k <= self.n);
                match idx {
                    Some(k) => Ok(RatFunc::from_poly(Poly::var(self.n, k - 1))),
                    None => Err(CalcError::UnknownVariable { name, pos: start }),
                }
            }
            Some(c) => Err(CalcError::SyntaxError {
                pos: self.pos,
                msg: format!("unexpected character `{}`", c as char),
            }),
            None => Err(CalcError::SyntaxError { pos: self.pos, msg: "unexpected end of input".into() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_literal_and_commutativity() {
        assert!(parse_expr("0", 3).unwrap().is_zero());
        assert!(parse_expr("x1*x2 - x2*x1", 3).unwrap().is_zero());
    }

    #[test]
    fn rational_literals() {
        let r = parse_expr(" 3/6 ", 1).unwrap();
        assert_eq!(r.constant_value(), Some(BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn derived_example_square_over_linear() {
        // (1+x3)^2/(2 - x3): numerator x3^2+2x3+1, denominator 2-x3, hand
        // expansion; compared up to the sign normalization via eq_exact.
        let r = parse_expr("(1+x3)^2/(2 - x3)", 3).unwrap();
        let num = parse_expr("x3^2 + 2*x3 + 1", 3).unwrap();
        let den = parse_expr("2 - x3", 3).unwrap();
        assert!(r.eq_exact(&num.div(&den).unwrap()));
    }

    #[test]
    fn unknown_variable_and_syntax_errors() {
        assert!(matches!(parse_expr("x4", 3), Err(CalcError::UnknownVariable { .. })));
        assert!(matches!(parse_expr("y1", 3), Err(CalcError::UnknownVariable { .. })));
        let e = parse_expr("1 + ", 3);
        assert!(matches!(e, Err(CalcError::SyntaxError { .. })));
        assert!(matches!(parse_expr("x1^x1", 3), Err(CalcError::SyntaxError { .. })));
        assert!(matches!(parse_expr("x1^(0-2)", 3), Err(CalcError::SyntaxError { .. })));
    }

    #[test]
    fn negative_exponent_denominator_is_zero_poly() {
        assert!(matches!(parse_expr("1/(x1 - x1)", 3), Err(CalcError::SyntaxError { .. })));
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = parse_expr("(x1 + 2*x2^3)/(7 - x1*x2)", 2).unwrap();
        let printed = format!("{}", r);
        let again = parse_expr(&printed, 2).unwrap();
        assert!(r.eq_exact(&again));
    }
}
