//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! var    := 'x' uint
//! coeff  := int | int '/' uint
//! ```
//!
//! Whitespace between tokens is ignored. Variables are `x1` through `xn`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Monomial, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} at byte {pos} is out of range for {nvars} variables")]
    VariableOutOfRange { pos: usize, index: u64, nvars: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(d) => format!("integer {d}"),
            Tok::X => "'x'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            b'x' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character {ch:?}"),
                });
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expected<T>(&self, what: &str) -> Result<T, ParseError> {
        self.error(format!("expected {what}, found {}", self.peek().describe()))
    }

    fn uint_u32(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.peek().clone() {
            Tok::Int(d) => {
                let v = d.parse::<u32>().or_else(|_| self.error(format!("{what} too large")))?;
                self.bump();
                Ok(v)
            }
            _ => self.expected(what),
        }
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut out = Poly::zero(self.n);
        let mut negative = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            negative = true;
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                Tok::End => return Ok(out),
                _ => return self.expected("'+', '-' or end of input"),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut mono = Monomial::one(self.n);
        let coeff = match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                let num: BigInt = digits.parse().expect("lexer yields digits");
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_pos = self.pos();
                    let den: BigInt = match self.bump().1 {
                        Tok::Int(d) => d.parse().expect("lexer yields digits"),
                        other => {
                            return Err(ParseError::Syntax {
                                pos: den_pos,
                                msg: format!("expected denominator, found {}", other.describe()),
                            })
                        }
                    };
                    if den.is_zero() {
                        return Err(ParseError::Syntax {
                            pos: den_pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    Rational::new(num, den).expect("nonzero denominator")
                } else {
                    Rational::from(num)
                }
            }
            Tok::X => {
                self.factor(&mut mono)?;
                Rational::one()
            }
            _ => return self.expected("coefficient or variable"),
        };
        while *self.peek() == Tok::Star {
            self.bump();
            self.factor(&mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn factor(&mut self, mono: &mut Monomial) -> Result<(), ParseError> {
        let var_pos = self.pos();
        if *self.peek() != Tok::X {
            return self.expected("variable");
        }
        self.bump();
        let index = match self.peek().clone() {
            Tok::Int(d) => {
                self.bump();
                d.parse::<u64>().unwrap_or(u64::MAX)
            }
            _ => return self.expected("variable index"),
        };
        if index == 0 || index > self.n as u64 {
            return Err(ParseError::VariableOutOfRange {
                pos: var_pos,
                index,
                nvars: self.n,
            });
        }
        let exp = if *self.peek() == Tok::Caret {
            self.bump();
            self.uint_u32("exponent")?
        } else {
            1
        };
        let slot = &mut mono.exponents_mut()[index as usize - 1];
        *slot = match slot.checked_add(exp) {
            Some(v) => v,
            None => {
                return Err(ParseError::Syntax {
                    pos: var_pos,
                    msg: "exponent overflow".into(),
                })
            }
        };
        Ok(())
    }
}

/// Parses `text` as a polynomial in `n` variables.
pub fn parse_poly(text: &str, n: usize) -> Result<Poly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, n };
    p.poly()
}
