//! Recursive-descent parser for ASCII polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Variables are `x`, `y` when there are at most two, and `x1`..`x8` otherwise
//! (`x1`.. is also accepted for one or two variables).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::monomial::ExpVec;
use super::poly::PolyQ;
use super::Q;
use crate::error::{Error, Result};

pub fn parse(text: &str, nvars: usize) -> Result<PolyQ> {
    if !(1..=super::MAX_VARS).contains(&nvars) {
        return Err(Error::Invalid(format!(
            "nvars must be in 1..=8, got {nvars}"
        )));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
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
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn expr(&mut self) -> Result<PolyQ> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyQ> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = acc * rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PolyQ> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyQ> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let k = self.integer()?;
            let k = k.to_u32().filter(|&k| k <= 10_000).ok_or(Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<PolyQ> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Q::new(num, den)
                } else {
                    Q::from_integer(num)
                };
                Ok(PolyQ::constant(self.nvars, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = self
                    .variable_index(name)
                    .ok_or_else(|| Error::UnknownVariable {
                        pos: start,
                        name: name.to_string(),
                    })?;
                Ok(PolyQ::monomial(
                    self.nvars,
                    ExpVec::var(idx),
                    Q::from_integer(1.into()),
                ))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn variable_index(&self, name: &str) -> Option<usize> {
        match name {
            "x" if self.nvars <= 2 => Some(0),
            "y" if self.nvars == 2 => Some(1),
            _ => {
                let k: usize = name.strip_prefix('x')?.parse().ok()?;
                (1..=self.nvars).contains(&k).then(|| k - 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::qi;

    #[test]
    fn simple_transcription() {
        let f = parse("x^2 - y^3", 2).unwrap();
        let expected =
            PolyQ::from_terms(2, [(ExpVec::xy(2, 0), qi(1)), (ExpVec::xy(0, 3), qi(-1))]);
        assert_eq!(f, expected);
        assert!(parse("0", 2).unwrap().is_zero());
    }

    #[test]
    fn expansion() {
        let f = parse("(x-y)*(x+y)", 2).unwrap();
        let expected =
            PolyQ::from_terms(2, [(ExpVec::xy(2, 0), qi(1)), (ExpVec::xy(0, 2), qi(-1))]);
        assert_eq!(f, expected);
    }

    #[test]
    fn rational_literals() {
        let f = parse("3/6*x - 2/1", 2).unwrap();
        assert_eq!(f.to_string(), "1/2*x - 2");
    }

    #[test]
    fn many_variables() {
        let f = parse("x1*x3 - x8^2", 8).unwrap();
        assert_eq!(f.to_string(), "x1*x3 - x8^2");
        assert_eq!(parse(&f.to_string(), 8).unwrap(), f);
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(
            parse("x + z", 2),
            Err(Error::UnknownVariable {
                pos: 4,
                name: "z".into()
            })
        );
        assert!(matches!(parse("2x", 2), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(
            parse("x^-1", 2),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("(x + y", 2),
            Err(Error::Syntax { pos: 6, .. })
        ));
        assert!(matches!(parse("x/2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", 2), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("y", 1), Err(Error::UnknownVariable { .. })));
    }

    #[test]
    fn huge_coefficients_are_exact() {
        let f = parse("123456789012345678901234567890*x", 2).unwrap();
        assert_eq!(f.to_string(), "123456789012345678901234567890*x");
    }
}
