//! Text form of polynomials.
//!
//! ```text
//! expression := ('+'|'-')? term (('+'|'-') term)*
//! term       := factor ('*' factor)*
//! factor     := base ('^' natural)?
//! base       := identifier | rational | 'i' | '(' expression ')'
//! rational   := integer ('/' natural)?
//! ```
//!
//! `i` is the imaginary unit and cannot name a variable. Identifiers ending in
//! `_bar` denote conjugate variables. The printer emits terms in decreasing
//! graded-lex order and its output always re-parses to the same polynomial.

use super::gaussian::GaussianRational;
use super::multipoly::{MultiPoly, VarList};
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
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
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, start)),
            b'-' => out.push((Tok::Minus, start)),
            b'*' => out.push((Tok::Star, start)),
            b'/' => out.push((Tok::Slash, start)),
            b'^' => out.push((Tok::Caret, start)),
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(PolyError::Syntax {
                    pos: start,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a VarList,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expression(&mut self) -> Result<MultiPoly, PolyError> {
        let negate_first = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Int(n) => {
                    let e: u32 = n.try_into().map_err(|_| PolyError::Syntax {
                        pos: self.toks[self.at.saturating_sub(1)].1,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    self.at = self.at.saturating_sub(1);
                    return self.error("expected a natural-number exponent");
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, PolyError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) if name == "i" => Ok(MultiPoly::constant(self.vars.clone(), GaussianRational::i())),
            Tok::Ident(name) => {
                MultiPoly::var(self.vars.clone(), &name).map_err(|_| PolyError::UnknownIdentifier { name, pos })
            }
            Tok::Int(n) => {
                let mut value = BigRational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(d) if d != BigInt::from(0) => {
                            value /= BigRational::from_integer(d);
                        }
                        Tok::Int(_) => {
                            return Err(PolyError::Syntax {
                                pos: self.toks[self.at - 1].1,
                                message: "zero denominator".into(),
                            })
                        }
                        _ => {
                            self.at -= 1;
                            return self.error("expected a natural-number denominator");
                        }
                    }
                }
                Ok(MultiPoly::constant(
                    self.vars.clone(),
                    GaussianRational::from_rational(value),
                ))
            }
            Tok::LParen => {
                let inner = self.expression()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(PolyError::Syntax {
                pos,
                message: "unexpected end of input".into(),
            }),
            t => Err(PolyError::Syntax {
                pos,
                message: format!("unexpected token {}", describe(&t)),
            }),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Ident(_) => "identifier",
        Tok::Int(_) => "integer",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parses `text` over the given variables.
pub fn parse_poly(text: &str, vars: &VarList) -> Result<MultiPoly, PolyError> {
    if let Some(v) = vars.iter().find(|v| v.as_str() == "i") {
        return Err(PolyError::ReservedName(v.clone()));
    }
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        vars,
    };
    let out = p.expression()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(out)
}

/// Identifiers occurring in `text` (excluding `i`), in order of first use.
pub fn scan_identifiers(text: &str) -> Result<Vec<String>, PolyError> {
    let mut seen = Vec::new();
    for (t, _) in tokenize(text)? {
        if let Tok::Ident(name) = t {
            if name != "i" && !seen.contains(&name) {
                seen.push(name);
            }
        }
    }
    Ok(seen)
}

/// Converts a byte offset into a 1-based (line, column) pair.
pub fn line_col(text: &str, pos: usize) -> (usize, usize) {
    let upto = &text[..pos.min(text.len())];
    let line = upto.matches('\n').count() + 1;
    let col = upto
        .rfind('\n')
        .map_or(upto.chars().count(), |nl| upto[nl + 1..].chars().count())
        + 1;
    (line, col)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative_like();
            let mag = if neg { -c } else { c.clone() };
            match (k == 0, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let mut mono = String::new();
            for (name, &e) in self.vars().iter().zip(m.exponents()) {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(name);
                if e > 1 {
                    mono.push('^');
                    mono.push_str(&e.to_string());
                }
            }
            if mono.is_empty() {
                mag.write_grammar(&mut out);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                mag.write_grammar(&mut out);
                out.push('*');
                out.push_str(&mono);
            }
        }
        f.write_str(&out)
    }
}

impl MultiPoly {
    /// Convenience: parse over a slice of names.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<MultiPoly, PolyError> {
        parse_poly(text, &super::multipoly::var_list(vars))
    }
}
