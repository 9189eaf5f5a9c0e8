//! Polynomial, ideal and ordering parsers.
//!
//! Grammar: a signed sum of terms, `term = [coeff *] factor {* factor}` or a
//! bare coefficient, `factor = var [^ k]`, `coeff = int | int/int`.
//! Multiplication must be written out; parentheses are rejected.

use std::fmt;

use ginforge::numeric::Rational;
use ginforge::polyring::{OrderingSpec, Polynomial, PowerProduct};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            b'(' | b')' => {
                return err(start, "parentheses are not supported; enter the expanded form");
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return err(start, format!("unexpected character `{ch}`"));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Variable names of a ring, with the `x, y, z, w` aliases for `n <= 4`.
#[derive(Clone, Debug)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    pub fn new(names: Vec<String>) -> Result<Self, String> {
        for (k, a) in names.iter().enumerate() {
            if a.is_empty() || !a.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(format!("invalid variable name `{a}`"));
            }
            if names[..k].contains(a) {
                return Err(format!("duplicate variable name `{a}`"));
            }
        }
        Ok(VarNames { names })
    }

    pub fn default_for(n: usize) -> Self {
        VarNames {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.names.iter().position(|v| v == name) {
            return Some(i);
        }
        let n = self.names.len();
        if n <= 4 {
            if let Some(i) = ["x", "y", "z", "w"][..n].iter().position(|&v| v == name) {
                return Some(i);
            }
        }
        if let Some(k) = name.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
            if (1..=n).contains(&k) && !name[1..].starts_with('0') {
                return Some(k - 1);
            }
        }
        None
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a VarNames,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn sum(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let mut out = Polynomial::zero(n);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                None if first => return err(self.pos(), "empty polynomial"),
                None => return Ok(out),
                _ if first => false,
                _ => return err(self.pos(), "expected `+`, `-` or `*`"),
            };
            first = false;
            let (mut c, t) = self.term()?;
            if neg {
                c = -c;
            }
            out.add_term(c, t);
        }
    }

    fn term(&mut self) -> Result<(Rational, PowerProduct), ParseError> {
        let n = self.vars.len();
        let mut c = Rational::from_integer(1.into());
        let mut exps = vec![0u32; n];
        let mut need_factor = true;
        if let Some(Tok::Int(_)) = self.peek() {
            c = self.coefficient()?;
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::Ident(_)) => return err(self.pos(), "expected `*` between coefficient and variable"),
                _ => need_factor = false,
            }
        }
        if need_factor {
            loop {
                self.factor(&mut exps)?;
                match self.peek() {
                    Some(Tok::Star) => {
                        self.bump();
                    }
                    Some(Tok::Ident(_)) | Some(Tok::Int(_)) => {
                        return err(self.pos(), "expected `*` between factors")
                    }
                    _ => break,
                }
            }
        }
        Ok((c, PowerProduct::from_u32(&exps)))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let Some(Tok::Int(num)) = self.bump() else { unreachable!() };
        if let Some(Tok::Slash) = self.peek() {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(d)) if d.is_zero() => err(pos, "zero denominator"),
                Some(Tok::Int(d)) => Ok(Rational::new(num, d)),
                _ => err(pos, "expected an integer denominator"),
            }
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let pos = self.pos();
        let name = match self.bump() {
            Some(Tok::Ident(s)) => s,
            Some(Tok::Int(_)) => return err(pos, "coefficient must come first in a term"),
            _ => return err(pos, "expected a variable"),
        };
        let Some(i) = self.vars.index_of(&name) else {
            return err(pos, format!("unknown variable `{name}`"));
        };
        let mut e = 1u32;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let p = self.pos();
            match self.bump() {
                Some(Tok::Int(k)) => {
                    e = match u32::try_from(k) {
                        Ok(k) if k > 0 && k <= u32::from(u16::MAX) => k,
                        _ => return err(p, "exponent must be a positive integer below 65536"),
                    }
                }
                _ => return err(p, "expected a positive integer exponent"),
            }
        }
        exps[i] += e;
        if exps[i] > u32::from(u16::MAX) {
            return err(pos, "exponent overflow");
        }
        Ok(())
    }
}

pub fn parse_polynomial(text: &str, vars: &VarNames) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        vars,
    };
    p.sum()
}

/// Comma-separated generators. Error positions refer to the whole string.
pub fn parse_ideal(text: &str, vars: &VarNames) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        if !piece.trim().is_empty() {
            let f = parse_polynomial(piece, vars).map_err(|e| ParseError {
                pos: e.pos + offset,
                msg: e.msg,
            })?;
            out.push(f);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Ideal file: one generator per line; `#` starts a comment. Errors carry
/// the 1-based line number in the message.
pub fn parse_ideal_file(text: &str, vars: &VarNames) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let f = parse_polynomial(body, vars).map_err(|e| ParseError {
            pos: e.pos,
            msg: format!("line {}: {}", k + 1, e.msg),
        })?;
        out.push(f);
    }
    Ok(out)
}

/// `drl`, `lex`, or `matrix:[[..],..]`.
pub fn parse_ordering(text: &str, n: usize) -> Result<OrderingSpec, String> {
    match text.trim() {
        "drl" | "degrevlex" => Ok(OrderingSpec::degrevlex(n)),
        "lex" => Ok(OrderingSpec::lex(n)),
        s => {
            let Some(m) = s.strip_prefix("matrix:") else {
                return Err(format!("unknown ordering `{s}`"));
            };
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(m).map_err(|e| format!("bad ordering matrix: {e}"))?;
            if rows.first().map_or(0, Vec::len) != n {
                return Err(format!("ordering matrix must have {n} columns"));
            }
            OrderingSpec::matrix(rows).map_err(|e| e.to_string())
        }
    }
}

/// Inverse of [`parse_ordering`].
pub fn ordering_label(ord: &OrderingSpec) -> String {
    use ginforge::polyring::OrderKind;
    match ord.kind() {
        OrderKind::Lex => "lex".into(),
        OrderKind::DegRevLex => "drl".into(),
        OrderKind::Matrix(rows) => format!("matrix:{}", serde_json::to_string(rows).unwrap()),
    }
}
