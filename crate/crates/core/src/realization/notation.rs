//! Text form of operators: `2x^2θ∂θ∂x^3 - 1/2∂x + 1`.
//!
//! The parser also takes ASCII spellings (`t` for θ, `dt` for ∂θ, `dx` for
//! ∂x) and factors in any order; factors within a term are composed left to
//! right, so `∂x x` parses as `x∂x + 1`.

use num_traits::{One, Signed};

use super::{OpMonomial, Operator};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_compact, Rational};

fn format_monomial(m: &OpMonomial) -> String {
    let mut s = String::new();
    match m.m {
        0 => {}
        1 => s.push('x'),
        n => s.push_str(&format!("x^{n}")),
    }
    if m.e1 == 1 {
        s.push('θ');
    }
    if m.e2 == 1 {
        s.push_str("∂θ");
    }
    match m.k {
        0 => {}
        1 => s.push_str("∂x"),
        n => s.push_str(&format!("∂x^{n}")),
    }
    s
}

pub fn format_operator(op: &Operator) -> String {
    if op.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in op.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(m);
        if mono.is_empty() {
            out.push_str(&to_compact(&a));
        } else {
            if !a.is_one() {
                out.push_str(&to_compact(&a));
            }
            out.push_str(&mono);
        }
    }
    out
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() || c == '*' || c == '·' {
                self.chars.next();
            } else {
                break;
            }
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in operator {:?}", self.src))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.chars.peek().map(|&(_, c)| c) != Some('^') {
            return Ok(1);
        }
        self.chars.next();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        digits.parse().map_err(|_| self.err("bad exponent"))
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let mut text = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() || (c == '/' && !text.is_empty()) {
                text.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if text.is_empty() {
            Ok(None)
        } else {
            parse_rational(&text).map(Some)
        }
    }

    /// One factor, or `None` at a term boundary.
    fn factor(&mut self) -> Result<Option<Operator>> {
        self.skip_ws();
        let Some(&(_, c)) = self.chars.peek() else { return Ok(None) };
        let op = match c {
            '+' | '-' => return Ok(None),
            'x' => {
                self.chars.next();
                Operator::mult(self.exponent()?, 0)
            }
            'θ' | 't' => {
                self.chars.next();
                let e = self.exponent()?;
                if e >= 2 {
                    Operator::zero()
                } else {
                    Operator::mult(0, e as u8)
                }
            }
            '∂' | 'd' => {
                self.chars.next();
                match self.chars.peek().map(|&(_, c)| c) {
                    Some('θ') | Some('t') => {
                        self.chars.next();
                        let e = self.exponent()?;
                        if e >= 2 {
                            Operator::zero()
                        } else {
                            Operator::monomial(OpMonomial::new(0, 0, e as u8, 0))
                        }
                    }
                    Some('x') => {
                        self.chars.next();
                        Operator::monomial(OpMonomial::new(0, 0, 0, self.exponent()?))
                    }
                    _ if c == '∂' => Operator::monomial(OpMonomial::new(0, 0, 0, self.exponent()?)),
                    _ => return Err(self.err("expected dx or dt")),
                }
            }
            'i' => {
                self.chars.next();
                if self.chars.next().map(|(_, c)| c) != Some('d') {
                    return Err(self.err("expected id"));
                }
                Operator::identity()
            }
            '(' | ')' => return Err(self.err("parentheses are not supported")),
            _ if c.is_ascii_digit() => {
                let r = self.coefficient()?.expect("digit present");
                Operator::identity().scale(&r)
            }
            _ => return Err(self.err(&format!("unexpected {c:?}"))),
        };
        Ok(Some(op))
    }
}

pub fn parse_operator(text: &str) -> Result<Operator> {
    let mut lx = Lexer { chars: text.char_indices().peekable(), src: text };
    let mut total = Operator::zero();
    let mut any = false;
    loop {
        lx.skip_ws();
        let mut sign = Rational::one();
        match lx.chars.peek().map(|&(_, c)| c) {
            None => break,
            Some('+') => {
                lx.chars.next();
            }
            Some('-') => {
                lx.chars.next();
                sign = -sign;
            }
            _ if any => return Err(lx.err("missing + or - between terms")),
            _ => {}
        }
        let mut term: Option<Operator> = None;
        while let Some(f) = lx.factor()? {
            term = Some(match term {
                None => f,
                Some(t) => t.compose(&f),
            });
        }
        let term = term.ok_or_else(|| lx.err("empty term"))?;
        total = total.add(&term.scale(&sign));
        any = true;
    }
    if !any {
        return Err(lx.err("empty input"));
    }
    Ok(total)
}
