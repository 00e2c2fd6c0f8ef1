//! Text syntax for quaternions and polynomials.
//!
//! ```text
//! expr  := ['+' | '-'] term (('+' | '-') term)*
//! term  := power (['*'] power)*
//! power := atom ['^' integer]
//! atom  := rational | 'i' | 'j' | 'k' | variable | '(' expr ')'
//! ```
//!
//! Rationals are `n` or `n/d`. Variables are `x1, …, xn`; with a single
//! variable, plain `x` is accepted too. Juxtaposition multiplies, so
//! `2/3i`, `(1+i)x^2` and `kx1x2` all parse. Whitespace is ignored.

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::scalar::rat::parse_rat;
use crate::scalar::{Quat, Rat};
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Unit(char),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn tokenize(src: &str, nvars: usize) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut i: usize| {
        while i < chars.len() && chars[i].1.is_whitespace() {
            i += 1;
        }
        i
    };
    let digits = |mut i: usize| {
        let start = i;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        (start, i)
    };
    let text = |a: usize, b: usize| -> String { chars[a..b].iter().map(|c| c.1).collect() };
    loop {
        i = skip_ws(i);
        let Some(&(pos, c)) = chars.get(i) else { break };
        let tok = match c {
            '0'..='9' => {
                let (s, e) = digits(i);
                let mut lit = text(s, e);
                i = e;
                let after = skip_ws(i);
                if chars.get(after).map(|c| c.1) == Some('/') {
                    let (ds, de) = digits(skip_ws(after + 1));
                    if ds == de {
                        return err(chars[after].0, "expected a denominator after '/'");
                    }
                    lit = format!("{lit}/{}", text(ds, de));
                    i = de;
                }
                let Some(r) = parse_rat(&lit) else {
                    return err(pos, format!("zero denominator in {lit}"));
                };
                out.push((pos, Tok::Num(r)));
                continue;
            }
            'i' | 'j' | 'k' => Tok::Unit(c),
            'x' => {
                let (s, e) = digits(i + 1);
                i = e;
                let idx = if s == e {
                    if nvars != 1 {
                        return err(
                            pos,
                            format!("write x1..x{nvars} when there are {nvars} variables"),
                        );
                    }
                    0
                } else {
                    let n: usize = text(s, e).parse().map_err(|_| Error::Parse {
                        pos,
                        msg: "variable index too large".into(),
                    })?;
                    if n == 0 || n > nvars {
                        return err(pos, format!("x{n} is not one of the {nvars} variables"));
                    }
                    n - 1
                };
                out.push((pos, Tok::Var(idx)));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return err(pos, format!("unexpected character '{other}'")),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn expr(&mut self) -> Result<MPoly> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Num(_) | Tok::Unit(_) | Tok::Var(_) | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let e = u32::try_from(r.to_integer()).map_err(|_| Error::Parse {
                    pos,
                    msg: "exponent out of range".into(),
                })?;
                self.at += 1;
                Ok(base.pow(e))
            }
            _ => err(pos, "expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return err(pos, "unexpected end of input");
        };
        self.at += 1;
        let n = self.nvars;
        Ok(match tok {
            Tok::Num(r) => MPoly::constant(n, Quat::from_rat(r)),
            Tok::Unit('i') => MPoly::constant(n, Quat::i()),
            Tok::Unit('j') => MPoly::constant(n, Quat::j()),
            Tok::Unit(_) => MPoly::constant(n, Quat::k()),
            Tok::Var(v) => MPoly::var(n, v)?,
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return err(self.pos(), "expected ')'");
                }
                self.at += 1;
                inner
            }
            _ => return err(pos, "expected a number, unit, variable or '('"),
        })
    }
}

/// Parses a polynomial in `nvars` central variables.
pub fn parse_mpoly(src: &str, nvars: usize) -> Result<MPoly> {
    let toks = tokenize(src, nvars)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
        nvars,
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(out)
}

/// Parses a quaternion such as `1 - 2/3i + j - k` or `(1+i)(2-j)`.
pub fn parse_quat(src: &str) -> Result<Quat> {
    let p = parse_mpoly(src, 0)?;
    Ok(p.as_constant().expect("no variables are available"))
}

/// Parses a univariate polynomial in `x`.
pub fn parse_upoly(src: &str) -> Result<UPoly> {
    Ok(parse_mpoly(src, 1)?.to_upoly().expect("one variable"))
}
