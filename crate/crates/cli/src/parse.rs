//! Expression grammar for operators on the cone.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers: `x<i>`, `y<i>`, `dx<i>`, `dy<i>`, `E`, `Delta`, `Q`, `XX<i>`,
//! `YY<i>`, `Dop<i><j>`, `Bop<i><j>`, `Cop<i><j>`. Whitespace is ignored.

use std::fmt;

use quadric_core::Rat;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Var {
    X(usize),
    Y(usize),
    Dx(usize),
    Dy(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Gen {
    E,
    Delta,
    Q,
    XX(usize),
    YY(usize),
    Dop(usize, usize),
    Bop(usize, usize),
    Cop(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Expr {
    Var(Var),
    Gen(Gen),
    Int(Rat),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("parse error at {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax { position: usize, expected: Vec<String>, found: String },
    #[error("index error at {position}: {token} is out of range for k={k}")]
    Index { position: usize, token: String, k: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::Index { position, .. } => *position,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(String),
    Ident(String, String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "'{s}'"),
            Tok::Ident(a, b) => write!(f, "'{a}{b}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(chars[start..i].iter().collect())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let ds = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Ident(name, chars[ds..i].iter().collect())));
        } else if "+-*^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                position: i,
                expected: vec!["an operator token".into()],
                found: format!("'{c}'"),
            });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    k: usize,
}

const ATOM_START: [&str; 3] = ["an integer", "an identifier", "'('"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == &Tok::Sym('*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == &Tok::Sym('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().clone() {
            Tok::Int(s) => {
                let e = s.parse::<u32>().map_err(|_| self.err(&["an exponent below 2^32"]))?;
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(self.err(&["an integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.pos += 1;
                Ok(Expr::Int(s.parse::<Rat>().expect("digits parse as an integer")))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != &Tok::Sym(')') {
                    return Err(self.err(&["'+'", "'-'", "'*'", "'^'", "')'"]));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Ident(name, digits) => {
                let e = self.ident(at, &name, &digits)?;
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err(&ATOM_START)),
        }
    }

    fn ident(&self, at: usize, name: &str, digits: &str) -> Result<Expr, ParseError> {
        let k = self.k;
        let token = format!("{name}{digits}");
        let bad_index = || ParseError::Index { position: at, token: token.clone(), k };
        let unknown = || ParseError::Syntax {
            position: at,
            expected: vec!["an identifier".into()],
            found: format!("'{token}'"),
        };
        let single = |f: fn(usize) -> Expr| -> Result<Expr, ParseError> {
            let i: usize = digits.parse().map_err(|_| unknown())?;
            if digits.starts_with('0') || i == 0 || i > k {
                return Err(bad_index());
            }
            Ok(f(i))
        };
        let double = |f: fn(usize, usize) -> Expr, strict: bool| -> Result<Expr, ParseError> {
            let ds: Vec<usize> = digits.chars().map(|c| c as usize - '0' as usize).collect();
            if ds.len() != 2 {
                return Err(unknown());
            }
            let (i, j) = (ds[0], ds[1]);
            if i == 0 || j == 0 || i > k || j > k || (strict && i >= j) {
                return Err(bad_index());
            }
            Ok(f(i, j))
        };
        match name {
            "x" => single(|i| Expr::Var(Var::X(i))),
            "y" => single(|i| Expr::Var(Var::Y(i))),
            "dx" => single(|i| Expr::Var(Var::Dx(i))),
            "dy" => single(|i| Expr::Var(Var::Dy(i))),
            "XX" => single(|i| Expr::Gen(Gen::XX(i))),
            "YY" => single(|i| Expr::Gen(Gen::YY(i))),
            "Dop" => double(|i, j| Expr::Gen(Gen::Dop(i, j)), false),
            "Bop" => double(|i, j| Expr::Gen(Gen::Bop(i, j)), true),
            "Cop" => double(|i, j| Expr::Gen(Gen::Cop(i, j)), true),
            "E" | "Delta" | "Q" if digits.is_empty() => Ok(Expr::Gen(match name {
                "E" => Gen::E,
                "Delta" => Gen::Delta,
                _ => Gen::Q,
            })),
            _ => Err(unknown()),
        }
    }
}

pub fn parse(src: &str, k: usize) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, k };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.err(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Dx(i) => write!(f, "dx{i}"),
            Var::Dy(i) => write!(f, "dy{i}"),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E => write!(f, "E"),
            Gen::Delta => write!(f, "Delta"),
            Gen::Q => write!(f, "Q"),
            Gen::XX(i) => write!(f, "XX{i}"),
            Gen::YY(i) => write!(f, "YY{i}"),
            Gen::Dop(i, j) => write!(f, "Dop{i}{j}"),
            Gen::Bop(i, j) => write!(f, "Bop{i}{j}"),
            Gen::Cop(i, j) => write!(f, "Cop{i}{j}"),
        }
    }
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimal parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                wrap(f, a, false)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                wrap(f, b, b.prec() <= 1)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, a.prec() <= 1)?;
                write!(f, "*")?;
                wrap(f, b, b.prec() <= 2)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.prec() <= 2)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, a.prec() <= 4)?;
                write!(f, "^{e}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("x1 + y2*XX1^2 - -Delta", 2).unwrap();
        assert_eq!(e.to_string(), "x1 + y2*XX1^2 - -Delta");
        let e = parse("(x1*y1)*x2", 2).unwrap();
        assert_eq!(e.to_string(), "x1*y1*x2");
        let e = parse("x1*(y1*x2)", 2).unwrap();
        assert_eq!(e.to_string(), "x1*(y1*x2)");
        let e = parse("-(x1*y1)^3", 2).unwrap();
        assert_eq!(e, Expr::Neg(Box::new(Expr::Pow(Box::new(parse("x1*y1", 2).unwrap()), 3))));
        assert_eq!(e.to_string(), "-(x1*y1)^3");
        assert_eq!(parse("(-x1)^2", 2).unwrap().to_string(), "(-x1)^2");
        assert_eq!(parse("(x1^2)^3", 2).unwrap().to_string(), "(x1^2)^3");
    }

    #[test]
    fn errors() {
        assert_eq!(parse("x5", 2), Err(ParseError::Index { position: 0, token: "x5".into(), k: 2 }));
        assert!(matches!(parse("Bop21", 2), Err(ParseError::Index { .. })));
        let err = parse("x1 + * y1", 2).unwrap_err();
        assert_eq!(err.position(), 5);
        match err {
            ParseError::Syntax { expected, found, .. } => {
                assert_eq!(found, "'*'");
                assert!(expected.contains(&"'('".to_string()));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(x1", 2), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse("Foo1", 2), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("x1 $ y1", 2), Err(ParseError::Syntax { position: 3, .. })));
    }
}
