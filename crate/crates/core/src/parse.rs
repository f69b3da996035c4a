//! Text grammars for ideals and graphs.
//!
//! Ideals: comma-separated monomials, each a `*`-separated product of factors
//! `var` or `var^exp`. Variables are either all indexed (`x1`, `x2`, ...; the
//! ambient is the largest index) or all single letters, which are numbered in
//! alphabetical order of the letters that occur (`x, y, z` becomes
//! `x1, x2, x3`).
//!
//! Graphs: `path(n)`, `cycle(n)`, `cliquesum(G, H)`, `join(G, H)` and
//! `edges(n; 1-2, 2-3, ...)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    /// 1-based column of the first character.
    column: usize,
    text: String,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Ident(text.clone()),
                column,
                text,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text.parse::<u64>().map_err(|_| Error::Parse {
                position: column,
                token: text.clone(),
                message: "integer too large".into(),
            })?;
            out.push(Token {
                tok: Tok::Int(value),
                column,
                text,
            });
        } else if "^*,;()-".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                column,
                text: c.to_string(),
            });
            i += 1;
        } else {
            return Err(Error::Parse {
                position: column,
                token: c.to_string(),
                message: "unexpected character".into(),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
        text: "<end>".into(),
    });
    Ok(out)
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    fn new(input: &str) -> Result<Cursor> {
        Ok(Cursor {
            tokens: lex(input)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, token: &Token, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: token.column,
            token: token.text.clone(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let t = self.peek().clone();
            self.error(&t, format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<u64> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => Ok(v),
            _ => self.error(&t, "expected an integer"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        let t = self.peek().clone();
        if t.tok == Tok::End {
            Ok(())
        } else {
            self.error(&t, "unexpected trailing input")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum VarRef {
    Indexed(usize),
    Letter(char),
}

struct Factor {
    var: Option<VarRef>,
    exponent: u64,
    token: Token,
}

fn parse_var(cursor: &Cursor, token: &Token) -> Result<VarRef> {
    let Tok::Ident(name) = &token.tok else {
        return cursor.error(token, "expected a variable");
    };
    let mut chars = name.chars();
    let first = chars.next().expect("identifiers are non-empty");
    let rest: String = chars.collect();
    if rest.is_empty() {
        return Ok(VarRef::Letter(first));
    }
    if first == 'x' && rest.chars().all(|c| c.is_ascii_digit()) {
        return match rest.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(VarRef::Indexed(k)),
            _ => cursor.error(token, "variable index must be at least 1"),
        };
    }
    cursor.error(
        token,
        "unknown variable; write `x<k>` or a single letter, joined by `*`",
    )
}

fn parse_factors(cursor: &mut Cursor) -> Result<Vec<Factor>> {
    let mut factors = Vec::new();
    loop {
        let token = cursor.bump();
        let factor = match token.tok {
            Tok::Int(1) => Factor {
                var: None,
                exponent: 0,
                token,
            },
            Tok::Ident(_) => {
                let var = parse_var(cursor, &token)?;
                let exponent = if cursor.eat('^') { cursor.int()? } else { 1 };
                Factor {
                    var: Some(var),
                    exponent,
                    token,
                }
            }
            _ => return cursor.error(&token, "expected a variable or `1`"),
        };
        factors.push(factor);
        if !cursor.eat('*') {
            return Ok(factors);
        }
    }
}

/// Variable names for an ideal parsed from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub names: Vec<String>,
}

fn assemble(factors: &[Factor], index_of: &dyn Fn(&VarRef) -> usize, t: usize) -> Result<Monomial> {
    let mut exps = vec![0u64; t];
    for f in factors {
        if let Some(var) = &f.var {
            let slot = &mut exps[index_of(var)];
            *slot = slot.checked_add(f.exponent).ok_or(Error::Overflow)?;
        }
    }
    Monomial::new(exps)
}

/// Maps a parsed variable to its 0-based slot.
type IndexOf = Box<dyn Fn(&VarRef) -> usize>;

/// Parses an ideal such as `x^10, y^11, z^12, x*y^4*z`.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut cursor = Cursor::new(text)?;
    let mut monomials = vec![parse_factors(&mut cursor)?];
    while cursor.eat(',') {
        monomials.push(parse_factors(&mut cursor)?);
    }
    cursor.finish()?;

    let vars: Vec<(&VarRef, &Token)> = monomials
        .iter()
        .flatten()
        .filter_map(|f| f.var.as_ref().map(|v| (v, &f.token)))
        .collect();
    let indexed = vars.iter().find(|(v, _)| matches!(v, VarRef::Indexed(_)));
    let letter = vars.iter().find(|(v, _)| matches!(v, VarRef::Letter(_)));
    if let (Some((_, a)), Some((_, b))) = (indexed, letter) {
        let later = if a.column > b.column { a } else { b };
        return cursor.error(later, "cannot mix indexed variables with single letters");
    }

    let (names, index_of): (Vec<String>, IndexOf) = if indexed.is_some() {
        let t = vars
            .iter()
            .filter_map(|(v, _)| match v {
                VarRef::Indexed(k) => Some(*k),
                VarRef::Letter(_) => None,
            })
            .max()
            .unwrap_or(1);
        (
            crate::monomial::default_names(t),
            Box::new(|v: &VarRef| match v {
                VarRef::Indexed(k) => k - 1,
                VarRef::Letter(_) => unreachable!("mixed variables rejected"),
            }),
        )
    } else {
        let letters: BTreeSet<char> = vars
            .iter()
            .filter_map(|(v, _)| match v {
                VarRef::Letter(c) => Some(*c),
                VarRef::Indexed(_) => None,
            })
            .collect();
        let letters: Vec<char> = letters.into_iter().collect();
        let names = if letters.is_empty() {
            vec!["x".to_string()]
        } else {
            letters.iter().map(|c| c.to_string()).collect()
        };
        (
            names,
            Box::new(move |v: &VarRef| match v {
                VarRef::Letter(c) => letters.binary_search(c).expect("letter collected"),
                VarRef::Indexed(_) => unreachable!("mixed variables rejected"),
            }),
        )
    };

    let t = names.len();
    let gens = monomials
        .iter()
        .map(|m| assemble(m, &*index_of, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParsedIdeal {
        ideal: MonomialIdeal::minimalize(gens)?,
        names,
    })
}

fn resolve_name(cursor: &Cursor, token: &Token, names: &[String]) -> Result<usize> {
    match names.iter().position(|n| *n == token.text) {
        Some(i) => Ok(i),
        None => cursor.error(token, "variable not in this ring"),
    }
}

/// Parses one monomial over known variable names, e.g. a reported witness.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Monomial> {
    let mut cursor = Cursor::new(text)?;
    let factors = parse_factors(&mut cursor)?;
    cursor.finish()?;
    let mut exps = vec![0u64; names.len()];
    for f in &factors {
        if f.var.is_some() {
            let i = resolve_name(&cursor, &f.token, names)?;
            exps[i] = exps[i].checked_add(f.exponent).ok_or(Error::Overflow)?;
        }
    }
    Monomial::new(exps)
}

/// Parses a comma-separated list of variables into 1-based indices.
pub fn parse_variable_set(text: &str, names: &[String]) -> Result<BTreeSet<usize>> {
    let mut cursor = Cursor::new(text)?;
    let mut out = BTreeSet::new();
    loop {
        let token = cursor.bump();
        if !matches!(token.tok, Tok::Ident(_)) {
            return cursor.error(&token, "expected a variable");
        }
        out.insert(resolve_name(&cursor, &token, names)? + 1);
        if !cursor.eat(',') {
            break;
        }
    }
    cursor.finish()?;
    Ok(out)
}

/// A parsed graph expression, kept structured so closed forms can inspect it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Path(usize),
    Cycle(usize),
    CliqueSum(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Edges(usize, Vec<(usize, usize)>),
}

impl GraphExpr {
    /// Clique sums glue vertex 1 of each operand.
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphExpr::Path(n) => Graph::path(*n),
            GraphExpr::Cycle(n) => Graph::cycle(*n),
            GraphExpr::CliqueSum(a, b) => Graph::clique_sum_1(&a.build()?, &b.build()?, 1, 1),
            GraphExpr::Join(a, b) => Graph::join(&a.build()?, &b.build()?),
            GraphExpr::Edges(n, pairs) => Graph::from_edges(*n, pairs.iter().copied()),
        }
    }
}

fn small_int(cursor: &mut Cursor) -> Result<usize> {
    let t = cursor.peek().clone();
    let v = cursor.int()?;
    usize::try_from(v).or_else(|_| cursor.error(&t, "integer too large"))
}

fn parse_graph_expr(cursor: &mut Cursor) -> Result<GraphExpr> {
    let head = cursor.bump();
    let Tok::Ident(name) = &head.tok else {
        return cursor.error(&head, "expected a graph constructor");
    };
    cursor.expect('(')?;
    let expr = match name.as_str() {
        "path" => GraphExpr::Path(small_int(cursor)?),
        "cycle" => GraphExpr::Cycle(small_int(cursor)?),
        "cliquesum" | "join" => {
            let a = parse_graph_expr(cursor)?;
            cursor.expect(',')?;
            let b = parse_graph_expr(cursor)?;
            if name == "join" {
                GraphExpr::Join(Box::new(a), Box::new(b))
            } else {
                GraphExpr::CliqueSum(Box::new(a), Box::new(b))
            }
        }
        "edges" => {
            let n = small_int(cursor)?;
            cursor.expect(';')?;
            let mut pairs = Vec::new();
            if cursor.peek().tok != Tok::Sym(')') {
                loop {
                    let a = small_int(cursor)?;
                    cursor.expect('-')?;
                    let b = small_int(cursor)?;
                    pairs.push((a, b));
                    if !cursor.eat(',') {
                        break;
                    }
                }
            }
            GraphExpr::Edges(n, pairs)
        }
        _ => {
            return cursor.error(
                &head,
                "unknown graph constructor; expected path, cycle, cliquesum, join or edges",
            )
        }
    };
    cursor.expect(')')?;
    Ok(expr)
}

/// Parses a graph such as `cliquesum(cycle(5), path(8))`.
pub fn parse_graph(text: &str) -> Result<GraphExpr> {
    let mut cursor = Cursor::new(text)?;
    let expr = parse_graph_expr(&mut cursor)?;
    cursor.finish()?;
    Ok(expr)
}
