//! Text and structured serialization of ideals.
//!
//! The line-oriented text format:
//!
//! ```text
//! vars: 3
//! gens: x1^2*x2, x2*x3
//! ```
//!
//! `^1` is omitted, the empty generator list denotes the zero ideal, and the
//! unit ideal renders its sole generator as `1`. The inline CLI syntax uses
//! `/` as a line separator and is normalized before parsing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// Structured form of an ideal: variable count plus generator exponent rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            n: i.nvars(),
            gens: i.gens().iter().map(|g| g.exps().to_vec()).collect(),
        }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(
            self.n,
            self.gens.iter().cloned().map(Monomial::new).collect(),
        )
    }
}

struct Cursor<'a> {
    text: &'a str,
    line: usize,
    col: usize,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize, col_offset: usize) -> Self {
        Cursor {
            text,
            line,
            col: col_offset,
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        self.col += 1;
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.bump();
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| self.err("integer out of range"))
    }
}

fn parse_monomial(cur: &mut Cursor<'_>, n: usize) -> Result<Monomial> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.bump();
        return Ok(Monomial::new(vec![0; n]));
    }
    let mut exps = vec![0u32; n];
    loop {
        cur.skip_ws();
        if cur.peek() != Some('x') {
            return Err(cur.err("expected a variable factor like x2 or x2^3"));
        }
        let var_line = cur.line;
        let var_col = cur.col;
        cur.bump();
        let idx = cur.integer()? as usize;
        if idx == 0 || idx > n {
            return Err(Error::UnknownVariable {
                line: var_line,
                col: var_col,
                name: format!("x{idx}"),
            });
        }
        let mut e: u64 = 1;
        if cur.peek() == Some('^') {
            cur.bump();
            let exp_line = cur.line;
            let exp_col = cur.col;
            e = cur.integer()?;
            if e == 0 {
                return Err(Error::ZeroExponentLiteral {
                    line: exp_line,
                    col: exp_col,
                });
            }
        }
        let total = (exps[idx - 1] as u64)
            .checked_add(e)
            .filter(|&t| t <= u32::MAX as u64)
            .ok_or(Error::ExponentOverflow)?;
        exps[idx - 1] = total as u32;
        cur.skip_ws();
        match cur.peek() {
            Some('*') => {
                cur.bump();
            }
            _ => break,
        }
    }
    Ok(Monomial::new(exps))
}

fn expect_key<'a>(line: &'a str, key: &str, line_no: usize) -> Result<(&'a str, usize)> {
    let trimmed = line.trim_start();
    let indent = line.len() - trimmed.len();
    if let Some(rest) = trimmed.strip_prefix(key) {
        let rest_trim = rest.trim_start();
        let offset = indent + key.len() + (rest.len() - rest_trim.len());
        if let Some(value) = rest_trim.strip_prefix(':') {
            return Ok((value, offset + 1));
        }
    }
    Err(Error::Parse {
        line: line_no,
        col: indent + 1,
        msg: format!("expected `{key}:`"),
    })
}

/// Parse the two-line ideal format. Accepts `/` in place of newlines so the
/// whole ideal fits in one shell argument.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let normalized = text.replace('/', "\n");
    let mut lines = normalized
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (vars_no, vars_line) = lines.next().ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "empty input".to_string(),
    })?;
    let (vars_value, vars_col) = expect_key(vars_line, "vars", vars_no)?;
    let mut cur = Cursor::new(vars_value, vars_no, vars_col);
    cur.skip_ws();
    let n = cur.integer()? as usize;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err("trailing input after variable count"));
    }
    if n == 0 {
        return Err(Error::Parse {
            line: vars_no,
            col: vars_col,
            msg: "vars must be at least 1".to_string(),
        });
    }

    let (gens_no, gens_line) = lines.next().ok_or(Error::Parse {
        line: vars_no,
        col: 1,
        msg: "missing `gens:` line".to_string(),
    })?;
    let (gens_value, gens_col) = expect_key(gens_line, "gens", gens_no)?;

    if let Some((extra_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra_no,
            col: 1,
            msg: "unexpected content after the gens line".to_string(),
        });
    }

    let mut gens = Vec::new();
    let mut cur = Cursor::new(gens_value, gens_no, gens_col);
    cur.skip_ws();
    if cur.peek().is_some() {
        loop {
            gens.push(parse_monomial(&mut cur, n)?);
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some(',') => {
                    cur.bump();
                    cur.skip_ws();
                    if cur.peek().is_none() {
                        return Err(cur.err("trailing comma in generator list"));
                    }
                }
                Some(_) => return Err(cur.err("expected `,` between generators")),
            }
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Render the canonical two-line text form; `parse_ideal` round-trips it.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    if gens.is_empty() {
        format!("vars: {}\ngens:\n", ideal.nvars())
    } else {
        format!("vars: {}\ngens: {}\n", ideal.nvars(), gens)
    }
}

/// One-line form with `/` separators, e.g. for instance payloads in reports.
pub fn render_ideal_inline(ideal: &MonomialIdeal) -> String {
    render_ideal(ideal).trim_end().replace('\n', " / ")
}
