use crate::{GradedPoly, PolyError, Rational, VariableTable};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::sync::Arc;

/// Canonical printing: terms in descending graded-reverse-lex order, exact
/// rational coefficients, explicit `*` and `^`. `parse_poly` inverts this
/// exactly (and accepts general expressions with parentheses).
impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let table = self.table().clone();
        for (i, (m, c)) in self.sorted_terms_desc().into_iter().enumerate() {
            let neg = c < &Rational::from_integer(BigInt::from(0));
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for vi in 0..table.len() {
                let e = m.exp(vi);
                if e == 1 {
                    factors.push(table.name(vi).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", table.name(vi), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn format_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = bytes[start..i].iter().collect();
                let n = txt
                    .parse::<BigInt>()
                    .map_err(|e| PolyError::Parse(e.to_string()))?;
                out.push(Tok::Num(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(PolyError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    table: &'a Arc<VariableTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<GradedPoly, PolyError> {
        let mut neg = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                }
                Tok::Minus => {
                    neg = !neg;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    // division only by a nonzero rational constant
                    let rhs = self.factor()?;
                    let c = rhs.constant_term();
                    if rhs.num_terms() > 1 || (rhs.num_terms() == 1 && c == Rational::from_integer(BigInt::from(0))) || rhs.is_zero() || !only_constant(&rhs) {
                        return Err(PolyError::Parse(
                            "division is only defined by a constant".into(),
                        ));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GradedPoly, PolyError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| PolyError::Parse("exponent out of range".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(PolyError::Parse("expected integer exponent after ^".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GradedPoly, PolyError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(GradedPoly::constant(
                self.table,
                Rational::from_integer(n),
            )),
            Some(Tok::Ident(name)) => GradedPoly::var(self.table, &name),
            Some(Tok::Minus) => Ok(self.atom()?.neg()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(PolyError::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn only_constant(p: &GradedPoly) -> bool {
    p.terms().all(|(m, _)| m.is_one())
}

/// Parse the polynomial literal format over the given table.
pub fn parse_poly(table: &Arc<VariableTable>, input: &str) -> Result<GradedPoly, PolyError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        table,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(PolyError::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(out)
}
