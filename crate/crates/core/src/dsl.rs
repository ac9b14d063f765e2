//! Text syntax for group expressions.
//!
//! ```text
//! expr := term ("+" term)* | "0"
//! term := atom ("^" mult)?
//! atom := "Z" | "Q" | "Z(" nat ")" | "Z(" nat "^" nat ")" | "Z(" nat "^inf)"
//!       | "B(" nat ")" | "TF(" nat (";" nat ("," nat)*)? ")"
//! mult := nat | "w" | "w" nat
//! ```
//!
//! `Z(p)` abbreviates `Z(p^1)`, `w` is `ℵ0` and `w k` is `ℵk`. Whitespace is
//! ignored between tokens; `⊕` may be written for `+` and `∞` for `inf`.
//! Ranks and multiplicities are limited to [`MAX_LITERAL`].
//!
//! [`render`] produces the canonical text, which always parses back to the
//! same expression.

use std::fmt;

use thiserror::Error;

use crate::cardinal::Cardinal;
use crate::group::{Atom, GroupExpr};
use crate::primes;

pub const MAX_LITERAL: u64 = 1 << 24;

/// Syntax or validation error, positioned at the offending lexeme.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
    pub hint: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: expected {}, found {}",
            self.line, self.column, self.expected, self.found
        )?;
        if let Some(hint) = &self.hint {
            write!(f, " ({hint})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    LParen,
    RParen,
    Caret,
    Semi,
    Comma,
    Plus,
    Infinity,
    Other(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(s) | Tok::Ident(s) => format!("'{s}'"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Infinity => "'∞'".into(),
            Tok::Other(c) => format!("{c:?}"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Lexeme {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Vec<Lexeme> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                advance(&mut chars);
            }
            Tok::Num(s)
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphabetic()) {
                s.push(d);
                advance(&mut chars);
            }
            Tok::Ident(s)
        } else {
            advance(&mut chars);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '^' => Tok::Caret,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                '+' | '⊕' => Tok::Plus,
                '∞' => Tok::Infinity,
                other => Tok::Other(other),
            }
        };
        out.push(Lexeme { tok, line: start_line, column: start_col });
    }
    out.push(Lexeme { tok: Tok::Eof, line, column });
    out
}

struct Parser {
    lexemes: Vec<Lexeme>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Lexeme {
        &self.lexemes[self.pos]
    }

    fn bump(&mut self) -> Lexeme {
        let lx = self.lexemes[self.pos].clone();
        if lx.tok != Tok::Eof {
            self.pos += 1;
        }
        lx
    }

    fn error_at(lx: &Lexeme, expected: &str, hint: Option<String>) -> ParseError {
        ParseError {
            line: lx.line,
            column: lx.column,
            expected: expected.to_string(),
            found: lx.tok.describe(),
            hint,
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> PResult<()> {
        let lx = self.bump();
        if lx.tok == tok {
            Ok(())
        } else {
            Err(Self::error_at(&lx, expected, None))
        }
    }

    fn number(&mut self, expected: &str) -> PResult<(u64, Lexeme)> {
        let lx = self.bump();
        match &lx.tok {
            Tok::Num(s) => match s.parse::<u64>() {
                Ok(n) => Ok((n, lx)),
                Err(_) => Err(Self::error_at(&lx, expected, Some("number too large".into()))),
            },
            _ => Err(Self::error_at(&lx, expected, None)),
        }
    }

    fn prime(&mut self) -> PResult<u64> {
        let (p, lx) = self.number("a prime")?;
        if primes::is_prime(p) {
            Ok(p)
        } else {
            Err(Self::error_at(&lx, "a prime", Some(primes::describe_factorization(p))))
        }
    }

    fn bounded(&mut self, what: &str, max: u64) -> PResult<u64> {
        let expected = format!("{what} between 1 and {max}");
        let (n, lx) = self.number(&expected)?;
        if (1..=max).contains(&n) {
            Ok(n)
        } else {
            Err(Self::error_at(&lx, &expected, None))
        }
    }

    fn ident_is(&self, name: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == name)
    }

    fn expr(&mut self) -> PResult<GroupExpr> {
        if matches!(&self.peek().tok, Tok::Num(s) if s == "0") {
            self.bump();
            let lx = self.bump();
            if lx.tok != Tok::Eof {
                return Err(Self::error_at(&lx, "end of input after '0'", None));
            }
            return Ok(GroupExpr::zero());
        }
        let mut terms = vec![self.term()?];
        loop {
            let lx = self.bump();
            match lx.tok {
                Tok::Plus => terms.push(self.term()?),
                Tok::Eof => break,
                _ => return Err(Self::error_at(&lx, "'+' or end of input", None)),
            }
        }
        // Atoms are validated while parsing and literals are bounded, so
        // normalization cannot fail or overflow here.
        Ok(GroupExpr::normalize(terms).expect("parser produced a malformed atom"))
    }

    fn term(&mut self) -> PResult<(Atom, Cardinal)> {
        let atom = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok((atom, Cardinal::ONE));
        }
        self.bump();
        let mult = if self.ident_is("w") {
            self.bump();
            if matches!(self.peek().tok, Tok::Num(_)) {
                let (k, lx) = self.number("an aleph index")?;
                let k = u32::try_from(k)
                    .map_err(|_| Self::error_at(&lx, "an aleph index", Some("index too large".into())))?;
                Cardinal::Aleph(k)
            } else {
                Cardinal::ALEPH_0
            }
        } else if matches!(self.peek().tok, Tok::Num(_)) {
            Cardinal::Finite(self.bounded("a multiplicity", MAX_LITERAL)?)
        } else {
            let lx = self.bump();
            return Err(Self::error_at(&lx, "a multiplicity (n, w or w k)", None));
        };
        Ok((atom, mult))
    }

    fn atom(&mut self) -> PResult<Atom> {
        let lx = self.bump();
        let name = match &lx.tok {
            Tok::Ident(s) => s.as_str(),
            _ => return Err(Self::error_at(&lx, ATOM_EXPECTED, None)),
        };
        match name {
            "Z" if self.peek().tok == Tok::LParen => {
                self.bump();
                let p = self.prime()?;
                let atom = if self.peek().tok == Tok::Caret {
                    self.bump();
                    if self.ident_is("inf") || self.peek().tok == Tok::Infinity {
                        self.bump();
                        Atom::Prufer { p }
                    } else {
                        let k = self.bounded("an exponent", u64::from(u32::MAX))?;
                        Atom::Cyclic { p, k: k as u32 }
                    }
                } else {
                    Atom::Cyclic { p, k: 1 }
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(atom)
            }
            "Z" => Ok(Atom::FreeZ),
            "Q" => Ok(Atom::Rational),
            "B" => {
                self.expect(Tok::LParen, "'('")?;
                let p = self.prime()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Atom::UnboundedDsc { p })
            }
            "TF" => {
                self.expect(Tok::LParen, "'('")?;
                let rank = self.bounded("a rank", MAX_LITERAL)? as u32;
                let mut non_free = std::collections::BTreeSet::new();
                if self.peek().tok == Tok::Semi {
                    self.bump();
                    non_free.insert(self.prime()?);
                    while self.peek().tok == Tok::Comma {
                        self.bump();
                        non_free.insert(self.prime()?);
                    }
                }
                self.expect(Tok::RParen, "')' or ';'")?;
                Ok(Atom::TorsionFreeFr { rank, non_free_primes: non_free })
            }
            _ => Err(Self::error_at(&lx, ATOM_EXPECTED, None)),
        }
    }
}

const ATOM_EXPECTED: &str = "an atom (Z, Q, Z(p^k), Z(p^inf), B(p), TF(n;...))";

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    Parser { lexemes: lex(text), pos: 0 }.expr()
}

/// Canonical text of a group expression; the zero group renders as `0`.
pub fn render(g: &GroupExpr) -> String {
    g.to_string()
}
