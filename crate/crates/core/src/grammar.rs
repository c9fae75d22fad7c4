//! Text form of elements.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := [coeff '*'] basis
//! coeff    := integer | integer '/' positive-integer
//! basis    := famtoken '_' sub | 'c'
//! famtoken := e | L | I | J | G | G+ | G-
//! sub      := integer | integer '/' '2'
//! ```
//!
//! Whitespace is ignored. The literal `0` denotes the zero element. The
//! output of `Element`'s `Display` impl always parses back to the same
//! element.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebras::AlgebraSpec;
use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("index {index} not valid in this algebra (position {pos})")]
    InvalidIndex { pos: usize, index: String },
    #[error("non-integer subscript {index} outside the Neveu-Schwarz G-families (position {pos})")]
    NonIntegerSubscript { pos: usize, index: String },
}

/// Parses `text` and checks every index against `alg`.
pub fn parse_element(text: &str, alg: &AlgebraSpec) -> Result<Element, ParseError> {
    parse_element_with(text, |idx| alg.valid_index(idx))
}

/// Parses `text`, accepting an index iff `valid` returns true for it.
pub fn parse_element_with<F>(text: &str, valid: F) -> Result<Element, ParseError>
where
    F: Fn(&BasisIndex) -> bool,
{
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        chars,
        at: 0,
        end: text.len(),
    };
    let out = p.expr(&valid)?;
    if let Some((pos, c)) = p.peek_full() {
        return Err(ParseError::Syntax {
            pos,
            msg: format!("unexpected `{c}`"),
        });
    }
    Ok(out)
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.at + k).map(|&(_, c)| c)
    }

    fn peek_full(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.at += 1;
        }
        c
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr<F: Fn(&BasisIndex) -> bool>(&mut self, valid: &F) -> Result<Element, ParseError> {
        if self.peek() == Some('0') && self.peek_at(1).is_none() {
            self.bump();
            return Ok(Element::zero());
        }
        let mut out = Element::zero();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.bump();
            negate = true;
        }
        loop {
            let (c, idx) = self.term(valid)?;
            let c = if negate { -c } else { c };
            out.add_term(idx, &c);
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(out)
    }

    fn term<F: Fn(&BasisIndex) -> bool>(
        &mut self,
        valid: &F,
    ) -> Result<(Scalar, BasisIndex), ParseError> {
        let starts_numeric = matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '-' || c == '+');
        let coeff = if starts_numeric {
            let num = self.integer()?;
            let den = if self.peek() == Some('/') {
                self.bump();
                let pos = self.pos();
                let d = self.unsigned()?;
                if d == BigInt::from(0) {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: "zero denominator".into(),
                    });
                }
                d
            } else {
                BigInt::from(1)
            };
            if self.peek() != Some('*') {
                return self.syntax("expected `*` after coefficient");
            }
            self.bump();
            Scalar::from_bigints(num, den).expect("nonzero denominator")
        } else {
            Scalar::one()
        };
        let idx = self.basis(valid)?;
        Ok((coeff, idx))
    }

    fn basis<F: Fn(&BasisIndex) -> bool>(&mut self, valid: &F) -> Result<BasisIndex, ParseError> {
        let start = self.pos();
        let family = match self.bump() {
            Some('c') => {
                let idx = BasisIndex::central();
                return if valid(&idx) {
                    Ok(idx)
                } else {
                    Err(ParseError::InvalidIndex {
                        pos: start,
                        index: idx.to_string(),
                    })
                };
            }
            Some('e') => Family::E,
            Some('L') => Family::L,
            Some('I') => Family::I,
            Some('J') => Family::J,
            Some('G') => match (self.peek(), self.peek_at(1)) {
                (Some('+'), Some('_')) => {
                    self.bump();
                    Family::Gplus
                }
                (Some('-'), Some('_')) => {
                    self.bump();
                    Family::Gminus
                }
                _ => Family::G,
            },
            Some(c) => {
                self.at -= 1;
                return self.syntax(format!("unknown basis family `{c}`"));
            }
            None => return self.syntax("expected a basis element"),
        };
        if self.peek() != Some('_') {
            return self.syntax("expected `_` after family token");
        }
        self.bump();
        let n = self.integer()?;
        let degree2 = if self.peek() == Some('/') {
            self.bump();
            if self.peek() != Some('2') || self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                return self.syntax("half-integer subscripts must have denominator 2");
            }
            self.bump();
            i64::try_from(n).or_else(|_| self.syntax("subscript out of range"))?
        } else {
            let n = i64::try_from(n).or_else(|_| self.syntax("subscript out of range"))?;
            2 * n
        };
        let idx = BasisIndex::new(family, degree2);
        if degree2 % 2 != 0 {
            let is_g = matches!(family, Family::G | Family::Gplus | Family::Gminus);
            if !is_g {
                return Err(ParseError::NonIntegerSubscript {
                    pos: start,
                    index: idx.to_string(),
                });
            }
        }
        if !valid(&idx) {
            return Err(ParseError::InvalidIndex {
                pos: start,
                index: idx.to_string(),
            });
        }
        Ok(idx)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
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
        let v = self.unsigned()?;
        Ok(if neg { -v } else { v })
    }

    fn unsigned(&mut self) -> Result<BigInt, ParseError> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return self.syntax("expected digits");
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn any(_: &BasisIndex) -> bool {
        true
    }

    #[test]
    fn simple_sum() {
        let x = parse_element_with("e_0 + 2*e_3", any).unwrap();
        assert_eq!(x.coeff(&BasisIndex::int(Family::E, 0)), Scalar::one());
        assert_eq!(x.coeff(&BasisIndex::int(Family::E, 3)), Scalar::from_int(2));
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn rational_coefficient_and_difference() {
        let x = parse_element_with("L_1 - 1/2*I_0", any).unwrap();
        assert_eq!(x.to_string(), "L_1 - 1/2*I_0");
    }

    #[test]
    fn super_tokens() {
        let x = parse_element_with("G+_1/2 - G-_-3/2 + G_0 + c", any).unwrap();
        assert_eq!(x.to_string(), "G_0 + G+_1/2 - G-_-3/2 + c");
    }

    #[test]
    fn whitespace_and_leading_sign() {
        let x = parse_element_with("  - 3 * L _ -2 +L_-2 ", any).unwrap();
        assert_eq!(x.to_string(), "-2*L_-2");
        assert!(parse_element_with("0", any).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_element_with("e_1 + x_2", any) {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_element_with("L_1/2", any),
            Err(ParseError::NonIntegerSubscript { .. })
        ));
        assert!(matches!(
            parse_element_with("e_1/3", any),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element_with("2 e_1", any),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element_with("1/0*e_1", any),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element_with("e_1 +", any),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element_with("I_0", |i| i.family != Family::I),
            Err(ParseError::InvalidIndex { .. })
        ));
    }
}
