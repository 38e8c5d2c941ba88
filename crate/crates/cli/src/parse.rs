//! Expression language: lexer, recursive-descent parser and printer.
//!
//! Precedence from loosest to tightest: `+ −`, `* /`, unary `−`, `^`.
//! `[a, b]`, `{a, b}`, calls and parentheses are atoms.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{pos}: {msg}")]
pub struct ParseError {
    pub pos: Pos,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Num(i64),
    Ident(String),
    Call(String, Vec<Ast>),
    Neg(Box<Ast>),
    Bin(BinOp, Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    /// `[a, b]`, the graded bracket.
    Bracket(Box<Ast>, Box<Ast>),
    /// `{a, b}`, the graded anticommutator.
    Anti(Box<Ast>, Box<Ast>),
}

#[derive(Clone, Debug)]
pub struct Ast {
    pub kind: Kind,
    pub pos: Pos,
}

impl PartialEq for Ast {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind
    }
}

impl Eq for Ast {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
    Eof,
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            let n = s.parse().map_err(|_| ParseError {
                pos,
                msg: format!("integer `{s}` is too large"),
            })?;
            out.push((Tok::Num(n), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars
                .peek()
                .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
            {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^()[]{},".contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(ParseError {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected `{c}`, found {}", describe(self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.bump().1;
            let rhs = self.term()?;
            lhs = Ast {
                kind: Kind::Bin(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            let pos = self.bump().1;
            let rhs = self.unary()?;
            lhs = Ast {
                kind: Kind::Bin(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            let pos = self.bump().1;
            let inner = self.unary()?;
            return Ok(Ast {
                kind: Kind::Neg(Box::new(inner)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        let pos = self.bump().1;
        match self.bump().0 {
            Tok::Num(n) if n >= 0 && n <= u32::MAX as i64 => Ok(Ast {
                kind: Kind::Pow(Box::new(base), n as u32),
                pos,
            }),
            _ => Err(ParseError {
                pos,
                msg: "exponent must be a non-negative integer literal".into(),
            }),
        }
    }

    fn pair(&mut self, close: char) -> Result<(Ast, Ast), ParseError> {
        let a = self.expr()?;
        self.expect(',')?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let (tok, pos) = self.bump();
        let kind = match tok {
            Tok::Num(n) => Kind::Num(n),
            Tok::Ident(name) => {
                if *self.peek() == Tok::Sym('(') {
                    self.bump();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::Sym(')') {
                        args.push(self.expr()?);
                        while *self.peek() == Tok::Sym(',') {
                            self.bump();
                            args.push(self.expr()?);
                        }
                    }
                    self.expect(')')?;
                    Kind::Call(name, args)
                } else {
                    Kind::Ident(name)
                }
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                return Ok(inner);
            }
            Tok::Sym('[') => {
                let (a, b) = self.pair(']')?;
                Kind::Bracket(Box::new(a), Box::new(b))
            }
            Tok::Sym('{') => {
                let (a, b) = self.pair('}')?;
                Kind::Anti(Box::new(a), Box::new(b))
            }
            t => {
                return Err(ParseError {
                    pos,
                    msg: format!("expected an expression, found {}", describe(&t)),
                })
            }
        };
        Ok(Ast { kind, pos })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

pub fn parse(src: &str) -> Result<Ast, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

fn prec(k: &Kind) -> u8 {
    match k {
        Kind::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Kind::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
        Kind::Neg(_) => 3,
        Kind::Pow(..) => 4,
        _ => 5,
    }
}

struct Wrap<'a>(&'a Ast, u8);

impl fmt::Display for Wrap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if prec(&self.0.kind) < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Num(n) => write!(f, "{n}"),
            Kind::Ident(s) => write!(f, "{s}"),
            Kind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Kind::Neg(a) => write!(f, "-{}", Wrap(a, 3)),
            Kind::Bin(op, a, b) => {
                let (sym, p) = match op {
                    BinOp::Add => ("+", 1),
                    BinOp::Sub => ("-", 1),
                    BinOp::Mul => ("*", 2),
                    BinOp::Div => ("/", 2),
                };
                let spaced = p == 1;
                write!(f, "{}", Wrap(a, p))?;
                if spaced {
                    write!(f, " {sym} ")?;
                } else {
                    write!(f, "{sym}")?;
                }
                write!(f, "{}", Wrap(b, p + 1))
            }
            Kind::Pow(a, n) => write!(f, "{}^{n}", Wrap(a, 5)),
            Kind::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            Kind::Anti(a, b) => write!(f, "{{{a}, {b}}}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_and_calls() {
        let e = parse("[y1, x1]").unwrap();
        assert!(matches!(e.kind, Kind::Bracket(..)));
        let e = parse("O(x1, x1 - x2)").unwrap();
        match &e.kind {
            Kind::Call(n, args) => {
                assert_eq!(n, "O");
                assert!(matches!(args[1].kind, Kind::Bin(BinOp::Sub, ..)));
            }
            k => panic!("{k:?}"),
        }
        assert!(parse("Pp(e1) + 2*k1*s1*(e1 - e2)").is_ok());
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse("-x1^2 + 3*y1/2").unwrap().to_string(),
            "-x1^2 + 3*y1/2"
        );
        assert_eq!(parse("(a - b) - c").unwrap().to_string(), "a - b - c");
        assert_eq!(parse("a - (b - c)").unwrap().to_string(), "a - (b - c)");
        assert_eq!(parse("(a*b)^2").unwrap().to_string(), "(a*b)^2");
        assert_eq!(parse("{a, [b, c]}*d").unwrap().to_string(), "{a, [b, c]}*d");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x1 +\n  * y1").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 3 });
        let e = parse("[x1 y1]").unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, col: 5 });
        assert!(parse("x1 ^ y1").is_err());
        assert!(parse("x1 $").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn print_parse_is_stable() {
        for s in [
            "1 + k1*s1",
            "-1/2*x1*y2*e1",
            "O(x1, x2) - {M(x1, x2), H}",
            "(1 + k1)*x1^3",
        ] {
            let once = parse(s).unwrap().to_string();
            assert_eq!(parse(&once).unwrap().to_string(), once);
        }
    }
}
