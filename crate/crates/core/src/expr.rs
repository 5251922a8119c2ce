//! Textual ideal expressions.
//!
//! ```text
//! expr  := term ('*' term)*
//! term  := atom ('^' posint)?
//! atom  := '(' mono (',' mono)* ')'          literal; '(0)' is the zero ideal
//!        | 'intersect(' expr (',' expr)+ ')'
//!        | 'radical(' expr ')'
//!        | 'veronese(' posint ';' posint (',' posint)* ')'
//!        | 'transversal(' primelist ')'
//!        | 'localize(' expr ';' name (',' name)* ')'
//!        | '(' expr ')'
//! mono  := '1' | factor ('*' factor)*
//! factor := name ('^' posint)?
//! primelist := names ('|' names)*  |  '(' names ')' (',' '(' names ')')*
//! ```
//!
//! After `(` a name or a digit starts a literal, while `(` or a keyword
//! followed by `(` starts a nested expression.

use std::fmt;

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::localization::localize;
use crate::polymatroidal::{transversal_ideal, veronese, TransversalSpec, VeroneseParams};
use crate::ring::{Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    /// Generators as written; empty means the zero ideal.
    Literal(Vec<Monomial>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
    Intersect(Vec<IdealExpr>),
    Veronese(VeroneseParams),
    Transversal(Vec<MonomialPrime>),
    Radical(Box<IdealExpr>),
    /// Variables of the prime, named in the declared ring.
    Localize(Box<IdealExpr>, MonomialPrime),
}

const KEYWORDS: [&str; 5] = ["intersect", "radical", "veronese", "transversal", "localize"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Semi,
    Star,
    Caret,
    Bar,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        message: message.into(),
        line: pos.line,
        column: pos.column,
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                s.push(c);
                chars.next();
            }
            column += s.len();
            out.push((Tok::Name(s), pos));
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
            }
            column += s.len();
            out.push((Tok::Int(s), pos));
            continue;
        } else {
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '|' => Tok::Bar,
                other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
            }
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
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

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {tok}, found {}", self.peek())))
        }
    }

    fn posint(&mut self) -> Result<u32> {
        match self.bump() {
            (Tok::Int(s), pos) => {
                let v: u32 = s.parse().map_err(|_| syntax(pos, format!("integer `{s}` is too large")))?;
                if v == 0 {
                    Err(syntax(pos, "exponent must be a positive integer"))
                } else {
                    Ok(v)
                }
            }
            (t, pos) => Err(syntax(pos, format!("expected a positive integer, found {t}"))),
        }
    }

    fn variable(&mut self) -> Result<usize> {
        match self.bump() {
            (Tok::Name(name), pos) => self.ring.index_of(&name).ok_or(Error::UnknownVariable {
                name,
                line: pos.line,
                column: pos.column,
            }),
            (t, pos) => Err(syntax(pos, format!("expected a variable, found {t}"))),
        }
    }

    fn names(&mut self) -> Result<MonomialPrime> {
        let mut vars = vec![self.variable()?];
        while self.eat(&Tok::Comma) {
            vars.push(self.variable()?);
        }
        MonomialPrime::new(self.ring, vars)
    }

    fn expr(&mut self) -> Result<IdealExpr> {
        let mut acc = self.term()?;
        while self.eat(&Tok::Star) {
            let rhs = self.term()?;
            acc = IdealExpr::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IdealExpr> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let k = self.posint()?;
            return Ok(IdealExpr::Power(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IdealExpr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                let starts_literal = match self.peek2() {
                    Tok::Int(_) => true,
                    Tok::Name(n) => !(KEYWORDS.contains(&n.as_str()) && self.toks[self.at + 2].0 == Tok::LParen),
                    _ => false,
                };
                self.bump();
                if starts_literal {
                    self.literal()
                } else {
                    let inner = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(inner)
                }
            }
            Tok::Name(kw) if KEYWORDS.contains(&kw.as_str()) && *self.peek2() == Tok::LParen => {
                self.bump();
                self.bump();
                let e = match kw.as_str() {
                    "intersect" => {
                        let mut parts = vec![self.expr()?];
                        while self.eat(&Tok::Comma) {
                            parts.push(self.expr()?);
                        }
                        if parts.len() < 2 {
                            return Err(syntax(pos, "intersect needs at least two arguments"));
                        }
                        IdealExpr::Intersect(parts)
                    }
                    "radical" => IdealExpr::Radical(Box::new(self.expr()?)),
                    "veronese" => {
                        let d = self.posint()?;
                        self.expect(Tok::Semi)?;
                        let mut bounds = vec![self.posint()?];
                        while self.eat(&Tok::Comma) {
                            bounds.push(self.posint()?);
                        }
                        if bounds.len() != self.ring.len() {
                            return Err(syntax(
                                pos,
                                format!("veronese needs {} bounds, got {}", self.ring.len(), bounds.len()),
                            ));
                        }
                        let params = VeroneseParams::new(d, bounds).map_err(|e| syntax(pos, e.to_string()))?;
                        IdealExpr::Veronese(params)
                    }
                    "transversal" => IdealExpr::Transversal(self.primelist()?),
                    "localize" => {
                        let inner = self.expr()?;
                        self.expect(Tok::Semi)?;
                        IdealExpr::Localize(Box::new(inner), self.names()?)
                    }
                    _ => unreachable!("keyword list"),
                };
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => Err(syntax(pos, format!("expected `(` or a keyword, found {t}"))),
        }
    }

    fn primelist(&mut self) -> Result<Vec<MonomialPrime>> {
        let mut primes = Vec::new();
        if *self.peek() == Tok::LParen {
            loop {
                self.expect(Tok::LParen)?;
                primes.push(self.names()?);
                self.expect(Tok::RParen)?;
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        } else {
            primes.push(self.names()?);
            while self.eat(&Tok::Bar) {
                primes.push(self.names()?);
            }
        }
        Ok(primes)
    }

    fn literal(&mut self) -> Result<IdealExpr> {
        if let Tok::Int(s) = self.peek() {
            if s == "0" && *self.peek2() == Tok::RParen {
                self.bump();
                self.bump();
                return Ok(IdealExpr::Literal(Vec::new()));
            }
        }
        let mut gens = vec![self.mono()?];
        while self.eat(&Tok::Comma) {
            gens.push(self.mono()?);
        }
        self.expect(Tok::RParen)?;
        Ok(IdealExpr::Literal(gens))
    }

    fn mono(&mut self) -> Result<Monomial> {
        if let (Tok::Int(s), pos) = (self.peek().clone(), self.pos()) {
            self.bump();
            return if s == "1" {
                Ok(Monomial::one(self.ring))
            } else {
                Err(syntax(pos, format!("expected a monomial, found `{s}`")))
            };
        }
        let mut acc = Monomial::one(self.ring);
        loop {
            let v = self.variable()?;
            let e = if self.eat(&Tok::Caret) { self.posint()? } else { 1 };
            acc = acc.mul(&Monomial::var_power(self.ring, v, e)?)?;
            if !self.eat(&Tok::Star) {
                return Ok(acc);
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(syntax(self.pos(), format!("unexpected {t} after expression"))),
        }
    }
}

/// Parses an ideal expression over `ring`.
pub fn parse(input: &str, ring: &Ring) -> Result<IdealExpr> {
    let mut p = Parser {
        ring,
        toks: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a single monomial such as `x^2*y` or `1`.
pub fn parse_monomial(input: &str, ring: &Ring) -> Result<Monomial> {
    let mut p = Parser {
        ring,
        toks: lex(input)?,
        at: 0,
    };
    let m = p.mono()?;
    p.finish()?;
    Ok(m)
}

/// Parses a comma separated variable list such as `x1,x2,x3` into a prime.
pub fn parse_prime(input: &str, ring: &Ring) -> Result<MonomialPrime> {
    let mut p = Parser {
        ring,
        toks: lex(input)?,
        at: 0,
    };
    let q = p.names()?;
    p.finish()?;
    Ok(q)
}

/// Parses a `|` separated list of primes such as `x1,x2,x3|x1,x4`.
pub fn parse_prime_list(input: &str, ring: &Ring) -> Result<Vec<MonomialPrime>> {
    let mut p = Parser {
        ring,
        toks: lex(input)?,
        at: 0,
    };
    let qs = p.primelist()?;
    p.finish()?;
    Ok(qs)
}

/// Parses and evaluates in one step.
pub fn parse_ideal(input: &str, ring: &Ring) -> Result<MonomialIdeal> {
    eval(&parse(input, ring)?, ring)
}

/// Evaluates an expression. `localize` moves its result into the subring
/// `S(p)`, so combining it with ideals of the full ring is a ring mismatch.
pub fn eval(expr: &IdealExpr, ring: &Ring) -> Result<MonomialIdeal> {
    match expr {
        IdealExpr::Literal(gens) if gens.is_empty() => Ok(MonomialIdeal::zero(ring)),
        IdealExpr::Literal(gens) => MonomialIdeal::minimize(ring, gens.clone()),
        IdealExpr::Product(a, b) => eval(a, ring)?.product(&eval(b, ring)?),
        IdealExpr::Power(a, k) => eval(a, ring)?.power(*k),
        IdealExpr::Intersect(parts) => {
            let mut acc = eval(&parts[0], ring)?;
            for p in &parts[1..] {
                acc = acc.intersect(&eval(p, ring)?)?;
            }
            Ok(acc)
        }
        IdealExpr::Veronese(params) => veronese(params, ring),
        IdealExpr::Transversal(primes) => transversal_ideal(&TransversalSpec::new(primes.clone())?),
        IdealExpr::Radical(a) => Ok(eval(a, ring)?.radical()),
        IdealExpr::Localize(a, prime) => {
            let inner = eval(a, ring)?;
            let names: Vec<&str> = prime.vars().iter().map(|&v| prime.ring().name(v)).collect();
            let local = MonomialPrime::from_names(inner.ring(), &names)?;
            Ok(localize(&inner, &local)?.into_ideal())
        }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn prime_names(p: &MonomialPrime) -> String {
    let names: Vec<&str> = p.vars().iter().map(|&v| p.ring().name(v)).collect();
    names.join(",")
}

/// Canonical text for an expression; parsing it gives back an equal tree.
pub fn render(expr: &IdealExpr) -> String {
    match expr {
        IdealExpr::Literal(gens) if gens.is_empty() => "(0)".into(),
        IdealExpr::Literal(gens) => format!("({})", join(gens, ", ")),
        IdealExpr::Product(a, b) => {
            let left = match **a {
                IdealExpr::Product(..) => render(a),
                _ => render_term(a),
            };
            format!("{left} * {}", render_term(b))
        }
        IdealExpr::Power(a, k) => format!("{}^{k}", render_atom(a)),
        IdealExpr::Intersect(parts) => {
            let parts: Vec<String> = parts.iter().map(render).collect();
            format!("intersect({})", parts.join(", "))
        }
        IdealExpr::Veronese(params) => format!("veronese{params}"),
        IdealExpr::Transversal(primes) => {
            let parts: Vec<String> = primes.iter().map(prime_names).collect();
            format!("transversal({})", parts.join(" | "))
        }
        IdealExpr::Radical(a) => format!("radical({})", render(a)),
        IdealExpr::Localize(a, p) => format!("localize({}; {})", render(a), prime_names(p)),
    }
}

fn render_term(expr: &IdealExpr) -> String {
    match expr {
        IdealExpr::Product(..) => format!("({})", render(expr)),
        _ => render(expr),
    }
}

fn render_atom(expr: &IdealExpr) -> String {
    match expr {
        IdealExpr::Product(..) | IdealExpr::Power(..) => format!("({})", render(expr)),
        _ => render(expr),
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
