//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := unary (('+' | '-') unary)*
//! unary  := '-' unary | term
//! term   := power (('*' | '/') power)*
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `/` is only accepted with a nonzero constant divisor. Identifiers resolve
//! to ring variables first, then to transcendentals of the coefficient field.

use num_bigint::BigInt;

use super::{MultiPoly, PolyError, PolyRing};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() {
                    let ch = bytes[i] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' || ch == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(PolyError::SyntaxError {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.unary()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, PolyError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.term()
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.power()?;
                    let c = d
                        .constant_value()
                        .ok_or(PolyError::NonConstantDivisor { position: at })?;
                    let inv = c.inv()?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Tok::Int(n) => {
                    let e = u32::try_from(&n).map_err(|_| PolyError::ExponentOverflow)?;
                    return base.pow(e);
                }
                _ => {
                    return Err(PolyError::SyntaxError {
                        position: at,
                        message: "exponent must be a nonnegative integer literal".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(MultiPoly::constant(
                self.ring,
                self.ring.field().from_bigint(&n),
            )),
            Tok::Ident(name) => {
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(MultiPoly::var(self.ring, i))
                } else if let Ok(c) = self.ring.field().transcendental(&name) {
                    Ok(MultiPoly::constant(self.ring, c))
                } else {
                    Err(PolyError::UnknownVariable { name, position: at })
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(PolyError::SyntaxError {
                        position: close,
                        message: "expected `)`".into(),
                    }),
                }
            }
            Tok::End => Err(PolyError::SyntaxError {
                position: at,
                message: "unexpected end of input".into(),
            }),
            other => Err(PolyError::SyntaxError {
                position: at,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }
}

/// Parses `text` as an element of `ring`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<MultiPoly, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(PolyError::SyntaxError {
            position: p.offset(),
            message: "trailing input".into(),
        });
    }
    Ok(f)
}
