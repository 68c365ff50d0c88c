//! Text form of polynomials.
//!
//! ```text
//! poly    := term (('+'|'-') term)* | '0'
//! term    := (integer '*')? factor ('*' factor)* | integer
//! factor  := var ('^' positive-integer)?
//! var     := 'x' positive-integer
//! ```
//!
//! Whitespace between tokens is ignored. Output lists terms in ascending
//! deg-lex order with coefficients in `[1, p)`, joined by `" + "`.

use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::{Polynomial, Word};
use crate::gfp::Prime;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.raw_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (w.is_empty(), c) {
                (true, _) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{w}")?,
                (false, _) => write!(f, "{c}*{w}")?,
            }
        }
        Ok(())
    }
}

/// Canonical text of `f`; `parse(&format(f), p) == f`.
pub fn format(f: &Polynomial) -> String {
    f.to_string()
}

/// Parses the polynomial grammar over GF(p).
pub fn parse(text: &str, prime: Prime) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut out = Polynomial::zero(prime);
    let mut negate = false;
    loop {
        let (word, coeff) = term(&mut cur, prime)?;
        let coeff = if negate { prime.neg(coeff) } else { coeff };
        out.add_term(word, coeff);
        match cur.peek() {
            Some('+') => negate = false,
            Some('-') => negate = true,
            None => return Ok(out),
            Some(c) => return Err(cur.error(format!("expected '+', '-' or end of input, found '{c}'"))),
        }
        cur.bump();
    }
}

fn term(cur: &mut Cursor<'_>, prime: Prime) -> Result<(Word, u32)> {
    let mut word = Word::empty();
    let mut coeff = 1;
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            coeff = cur.integer_mod(prime)?;
            if cur.peek() != Some('*') {
                return Ok((word, coeff));
            }
            cur.bump();
            factor(cur, &mut word)?;
        }
        Some('x') => factor(cur, &mut word)?,
        Some(c) => return Err(cur.error(format!("expected a term, found '{c}'"))),
        None => return Err(cur.error("expected a term, found end of input".into())),
    }
    while cur.peek() == Some('*') {
        cur.bump();
        factor(cur, &mut word)?;
    }
    Ok((word, coeff))
}

fn factor(cur: &mut Cursor<'_>, word: &mut Word) -> Result<()> {
    let var = cur.variable()?;
    let mut exp = 1;
    if cur.peek() == Some('^') {
        cur.bump();
        exp = cur.positive_integer("exponent")?;
    }
    for _ in 0..exp {
        word.push(var);
    }
    Ok(())
}

/// Character cursor that skips whitespace and reports byte offsets.
pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let mut c = Cursor { text, pos: 0 };
        c.skip_ws();
        c
    }

    fn skip_ws(&mut self) {
        while let Some(ch) = self.text[self.pos..].chars().next() {
            if !ch.is_whitespace() {
                break;
            }
            self.pos += ch.len_utf8();
        }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub(crate) fn bump(&mut self) {
        if let Some(ch) = self.peek() {
            self.pos += ch.len_utf8();
        }
        self.skip_ws();
    }

    /// Consumes `s` if the remaining input starts with it.
    pub(crate) fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            self.skip_ws();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, ch: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == ch => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{ch}', found '{c}'"))),
            None => Err(self.error(format!("expected '{ch}', found end of input"))),
        }
    }

    pub(crate) fn error(&self, message: String) -> Error {
        Error::Parse {
            pos: self.pos,
            message,
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected an integer".into()));
        }
        self.pos += len;
        let s = &self.text[start..start + len];
        self.skip_ws();
        Ok(s)
    }

    pub(crate) fn integer_mod(&mut self, prime: Prime) -> Result<u32> {
        let s = self.digits()?;
        Ok(s.bytes().fold(0u32, |acc, b| {
            prime.reduce_u64(acc as u64 * 10 + (b - b'0') as u64)
        }))
    }

    pub(crate) fn positive_integer(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let s = self.digits()?;
        match s.parse::<u32>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::Parse {
                pos: start,
                message: format!("{what} must be a positive integer, found {s}"),
            }),
        }
    }

    pub(crate) fn variable(&mut self) -> Result<u32> {
        match self.peek() {
            Some('x') => {
                self.bump();
                self.positive_integer("variable index")
            }
            Some(c) => Err(self.error(format!("expected a variable, found '{c}'"))),
            None => Err(self.error("expected a variable, found end of input".into())),
        }
    }
}
