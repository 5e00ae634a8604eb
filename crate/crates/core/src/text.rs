//! Text grammars for polynomials, maps, morphisms and terms.
//!
//! Printing is the `Display` impl of each type; parsing accepts arbitrary
//! whitespace and reports the 1-based column of a syntax error.

use thiserror::Error;

use crate::category::{CategoryError, RMorphism};
use crate::map::{ExtMap, MapError, Point};
use crate::poly::{IntPoly, Monomial, PolyError, RPoly, Violation};
use crate::term::{plus, times, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("{0}")]
    Semantic(String),
}

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T, TextError> {
        Err(TextError::Syntax {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    pub fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), TextError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(d) => self.error(format!("expected '{c}', found '{d}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    pub fn expect_str(&mut self, s: &str) -> Result<(), TextError> {
        if self.eat_str(s) {
            Ok(())
        } else {
            self.error(format!("expected '{s}'"))
        }
    }

    pub fn number(&mut self) -> Result<usize, TextError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.error("number too large")
        })
    }

    pub fn finish(&mut self) -> Result<(), TextError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }

    /// Column of the next non-blank character.
    pub fn column(&mut self) -> usize {
        self.skip_ws();
        self.pos + 1
    }
}

/// `(coefficient, variables)` for each summand as written.
fn raw_poly(text: &str) -> Result<(usize, Vec<(i64, Vec<usize>)>), TextError> {
    let mut c = Cursor::new(text);
    c.expect('R')?;
    c.expect('(')?;
    let arity = c.number()?;
    c.expect(')')?;
    c.expect(':')?;
    let mut terms = Vec::new();
    loop {
        let mut coef: i64 = 1;
        let mut vars = Vec::new();
        loop {
            match c.peek() {
                Some('x') => {
                    c.pos += 1;
                    let col = c.column();
                    let i = c.number()?;
                    if i == 0 || i > arity {
                        return Err(TextError::Syntax {
                            column: col,
                            message: format!("variable x{i} is outside 1..{arity}"),
                        });
                    }
                    vars.push(i);
                }
                Some(d) if d.is_ascii_digit() => {
                    let k = c.number()?;
                    coef = coef
                        .checked_mul(k as i64)
                        .ok_or_else(|| TextError::Semantic("coefficient overflow".into()))?;
                }
                Some(d) => return c.error(format!("expected a variable or an integer, found '{d}'")),
                None => return c.error("expected a variable or an integer, found end of input"),
            }
            if !c.eat('*') {
                break;
            }
        }
        terms.push((coef, vars));
        if !c.eat('+') {
            break;
        }
    }
    c.finish()?;
    Ok((arity, terms))
}

/// Parses any integer polynomial in the polynomial grammar.
pub fn parse_intpoly(text: &str) -> Result<IntPoly, TextError> {
    let (arity, terms) = raw_poly(text)?;
    let mut p = IntPoly::zero(arity);
    for (c, vars) in terms {
        p.add_term(vars, c);
    }
    Ok(p)
}

/// Parses an element of `R(n)`, naming the violated condition for non-members.
pub fn parse_poly(text: &str) -> Result<RPoly, TextError> {
    let (arity, terms) = raw_poly(text)?;
    if let [(0, vars)] = terms.as_slice() {
        if vars.is_empty() {
            return Ok(RPoly::zero(arity));
        }
    }
    let mut monomials: Vec<Monomial> = Vec::with_capacity(terms.len());
    for (c, mut vars) in terms {
        vars.sort_unstable();
        let text = if vars.is_empty() {
            c.to_string()
        } else {
            vars.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join("*")
        };
        if vars.is_empty() {
            return Err(PolyError::NotInR(Violation::ConstantTerm(c)).into());
        }
        if vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(PolyError::NotInR(Violation::Square(text)).into());
        }
        if c != 1 {
            return Err(PolyError::NotInR(Violation::Coefficient {
                monomial: text,
                coefficient: c,
            })
            .into());
        }
        let m = Monomial::new(vars)?;
        if monomials.contains(&m) {
            return Err(PolyError::NotInR(Violation::DuplicateMonomial(text)).into());
        }
        monomials.push(m);
    }
    Ok(RPoly::new(arity, monomials)?)
}

fn point(c: &mut Cursor, target: Option<usize>) -> Result<Point, TextError> {
    match c.peek() {
        Some('e') => {
            c.pos += 1;
            Ok(Point::E)
        }
        Some(d) if d.is_ascii_digit() => {
            let col = c.column();
            let k = c.number()?;
            if k == 0 {
                return Ok(Point::Zero);
            }
            if let Some(n) = target {
                if k > n {
                    return Err(TextError::Syntax {
                        column: col,
                        message: format!("image {k} is outside 0, e, 1..{n}"),
                    });
                }
            }
            Ok(Point::At(k))
        }
        _ => c.error("expected 0, e or an index"),
    }
}

fn map_entries(c: &mut Cursor, target: Option<usize>) -> Result<Vec<(usize, usize, Point)>, TextError> {
    c.expect('{')?;
    let mut entries = Vec::new();
    if c.eat('}') {
        return Ok(entries);
    }
    loop {
        let col = c.column();
        let k = c.number()?;
        c.expect_str("->")?;
        let p = point(c, target)?;
        entries.push((col, k, p));
        if c.eat('}') {
            return Ok(entries);
        }
        c.expect(',')?;
    }
}

fn build_map(entries: Vec<(usize, usize, Point)>, source: usize, target: usize) -> Result<ExtMap, TextError> {
    let mut images = vec![None; source];
    for (col, k, p) in entries {
        if k == 0 || k > source {
            return Err(TextError::Syntax {
                column: col,
                message: format!("key {k} is outside 1..{source}"),
            });
        }
        if images[k - 1].is_some() {
            return Err(TextError::Syntax {
                column: col,
                message: format!("duplicate key {k}"),
            });
        }
        images[k - 1] = Some(p);
    }
    let images: Vec<Point> = images
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| TextError::Semantic(format!("no image given for {}", i + 1))))
        .collect::<Result<_, _>>()?;
    Ok(ExtMap::new(target, images)?)
}

/// Parses `{1->e, 2->1}` with declared source and target sizes.
pub fn parse_map(text: &str, source: usize, target: usize) -> Result<ExtMap, TextError> {
    let mut c = Cursor::new(text);
    let entries = map_entries(&mut c, Some(target))?;
    c.finish()?;
    build_map(entries, source, target)
}

/// Parses `<poly> |{map}| <poly>` and validates it.
pub fn parse_morphism(text: &str) -> Result<RMorphism, TextError> {
    let open = text
        .find("|{")
        .ok_or(TextError::Syntax {
            column: text.chars().count() + 1,
            message: "expected '|{'".into(),
        })?;
    let close = text[open..]
        .find("}|")
        .map(|i| open + i)
        .ok_or(TextError::Syntax {
            column: text[..open].chars().count() + 1,
            message: "expected '}|'".into(),
        })?;
    let shift = |e: TextError, offset: usize| match e {
        TextError::Syntax { column, message } => TextError::Syntax {
            column: column + text[..offset].chars().count(),
            message,
        },
        e => e,
    };
    let f = parse_poly(&text[..open])?;
    let g = parse_poly(&text[close + 2..]).map_err(|e| shift(e, close + 2))?;
    let map = parse_map(&text[open + 1..close + 1], f.arity(), g.arity())
        .map_err(|e| shift(e, open + 1))?;
    Ok(RMorphism::validate(&f, &map, &g)?)
}

fn term_expr(c: &mut Cursor) -> Result<Term, TextError> {
    let mut t = term_product(c)?;
    while c.eat('+') {
        t = plus(t, term_product(c)?);
    }
    Ok(t)
}

fn term_product(c: &mut Cursor) -> Result<Term, TextError> {
    let mut t = term_factor(c)?;
    while c.eat('*') {
        t = times(t, term_factor(c)?);
    }
    Ok(t)
}

fn term_factor(c: &mut Cursor) -> Result<Term, TextError> {
    match c.peek() {
        Some('(') => {
            c.pos += 1;
            let t = term_expr(c)?;
            c.expect(')')?;
            Ok(t)
        }
        Some('x') => {
            c.pos += 1;
            let i = c.number()?;
            if i == 0 {
                return c.error("variables start at x1");
            }
            Ok(Term::Var(i))
        }
        Some('0') => {
            c.pos += 1;
            Ok(Term::Zero)
        }
        Some('1') => {
            c.pos += 1;
            Ok(Term::One)
        }
        Some(d) => c.error(format!("unexpected '{d}'")),
        None => c.error("unexpected end of input"),
    }
}

/// Parses a term; `*` binds tighter than `+` and both associate to the left.
pub fn parse_term(text: &str) -> Result<Term, TextError> {
    let mut c = Cursor::new(text);
    let t = term_expr(&mut c)?;
    c.finish()?;
    Ok(t)
}
