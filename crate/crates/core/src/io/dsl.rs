//! The input language.
//!
//! ```text
//! algebra S2 {
//!     vertices 1 2 3;
//!     arrow delta: 1 -> 2;
//!     arrow epsilon: 2 -> 3;
//!     relations { delta*epsilon; }
//! }
//!
//! gbp Lambda {
//!     quiver {
//!         vertices 1 2 3;
//!         arrow alpha: 1 -> 2;
//!         arrow beta: 2 -> 3;
//!     }
//!     assign 1 = k; 2 = S2; 3 = k;
//!     relations { alpha*beta; }
//! }
//! ```
//!
//! Identifiers start with a letter or `_` and continue with letters, digits,
//! `_`, `'` and `.`; bare digit strings are accepted wherever an identifier
//! is expected, and anything else can be double-quoted. Inside a relation a
//! leading number followed by `*` is a coefficient (`3/2*a*b`), so arrows
//! with numeric names must be quoted there. Comments run from `#` or `//`
//! to the end of the line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigInt, One, Signed};

use crate::algebra::BoundPathAlgebra;
use crate::error::{Error, Result};
use crate::gbp::{GbpAlgebra, VertexAlgebra};
use crate::lincomb::{fmt_scalar, LinComb, Scalar};
use crate::quiver::{Arrow, Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    /// Tokens that would have been accepted, if the error is syntactic.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    /// Identifier, bare digits, or quoted string.
    Word {
        text: String,
        quoted: bool,
    },
    /// A fraction `n/d`.
    Ratio(String),
    Sym(&'static str),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word { text, quoted: true } => format!("string \"{text}\""),
            Tok::Word { text, .. } => format!("'{text}'"),
            Tok::Ratio(r) => format!("number {r}"),
            Tok::Sym(s) => format!("'{s}'"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn is_digits(&self) -> bool {
        matches!(self, Tok::Word { text, quoted: false } if text.chars().all(|c| c.is_ascii_digit()))
    }
}

fn err(pos: Pos, message: impl Into<String>, expected: &[&str]) -> ParseError {
    ParseError {
        line: pos.line,
        col: pos.col,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(src: &str) -> std::result::Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col);
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                bump(&mut i, &mut line, &mut col);
            }
        } else if c == '"' {
            bump(&mut i, &mut line, &mut col);
            let mut text = String::new();
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(err(pos, "unterminated string", &[])),
                    Some('"') => {
                        bump(&mut i, &mut line, &mut col);
                        break;
                    }
                    Some('\\') => {
                        bump(&mut i, &mut line, &mut col);
                        match chars.get(i) {
                            Some(&e @ ('"' | '\\')) => text.push(e),
                            _ => return Err(err(Pos { line, col }, "bad escape in string", &["'\\\"'", "'\\\\'"])),
                        }
                        bump(&mut i, &mut line, &mut col);
                    }
                    Some(&ch) => {
                        text.push(ch);
                        bump(&mut i, &mut line, &mut col);
                    }
                }
            }
            if text.is_empty() {
                return Err(err(pos, "empty string", &[]));
            }
            out.push((Tok::Word { text, quoted: true }, pos));
        } else if c.is_ascii_digit() {
            let mut text = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                text.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            if chars.get(i) == Some(&'/') && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                text.push('/');
                bump(&mut i, &mut line, &mut col);
                while i < chars.len() && chars[i].is_ascii_digit() {
                    text.push(chars[i]);
                    bump(&mut i, &mut line, &mut col);
                }
                out.push((Tok::Ratio(text), pos));
            } else {
                while i < chars.len() && is_ident_continue(chars[i]) {
                    text.push(chars[i]);
                    bump(&mut i, &mut line, &mut col);
                }
                out.push((Tok::Word { text, quoted: false }, pos));
            }
        } else if c.is_alphabetic() || c == '_' {
            let mut text = String::new();
            while i < chars.len() && is_ident_continue(chars[i]) {
                text.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            out.push((Tok::Word { text, quoted: false }, pos));
        } else {
            let sym = match c {
                '-' if chars.get(i + 1) == Some(&'>') => "->",
                '{' => "{",
                '}' => "}",
                ';' => ";",
                ':' => ":",
                '+' => "+",
                '-' => "-",
                '*' => "*",
                '=' => "=",
                _ => return Err(err(pos, format!("unexpected character '{c}'"), &[])),
            };
            for _ in 0..sym.len() {
                bump(&mut i, &mut line, &mut col);
            }
            out.push((Tok::Sym(sym), pos));
        }
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Spanned<T> {
    value: T,
    pos: Pos,
}

#[derive(Clone, Debug)]
struct RawArrow {
    id: Spanned<String>,
    source: Spanned<String>,
    target: Spanned<String>,
}

#[derive(Clone, Debug)]
struct RawTerm {
    coeff: Scalar,
    arrows: Vec<Spanned<String>>,
    pos: Pos,
}

#[derive(Clone, Debug)]
struct RawQuiver {
    vertices: Vec<Spanned<String>>,
    arrows: Vec<RawArrow>,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn advance(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(err(self.pos(), format!("unexpected {}", self.peek().describe()), expected))
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Word { text, quoted: false } if text == kw)
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        if self.is_keyword(kw) {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&[&format!("'{kw}'")])
        }
    }

    fn sym(&mut self, s: &'static str) -> PResult<()> {
        if self.peek() == &Tok::Sym(s) {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&[&format!("'{s}'")])
        }
    }

    fn ident(&mut self, what: &str) -> PResult<Spanned<String>> {
        match self.peek().clone() {
            Tok::Word { text, .. } => {
                let pos = self.advance().1;
                Ok(Spanned { value: text, pos })
            }
            _ => self.unexpected(&[what]),
        }
    }

    fn document(&mut self) -> PResult<Vec<RawItem>> {
        let mut items = Vec::new();
        loop {
            if self.peek() == &Tok::End {
                return Ok(items);
            }
            if self.is_keyword("algebra") {
                items.push(self.algebra()?);
            } else if self.is_keyword("gbp") {
                items.push(self.gbp()?);
            } else {
                return self.unexpected(&["'algebra'", "'gbp'", "end of input"]);
            }
        }
    }

    fn quiver_body(&mut self) -> PResult<RawQuiver> {
        self.keyword("vertices")?;
        let mut vertices = vec![self.ident("vertex name")?];
        while self.peek() != &Tok::Sym(";") {
            match self.peek() {
                Tok::Word { .. } => vertices.push(self.ident("vertex name")?),
                _ => return self.unexpected(&["vertex name", "';'"]),
            }
        }
        self.sym(";")?;
        let mut arrows = Vec::new();
        while self.is_keyword("arrow") {
            self.advance();
            let id = self.ident("arrow name")?;
            self.sym(":")?;
            let source = self.ident("vertex name")?;
            self.sym("->")?;
            let target = self.ident("vertex name")?;
            self.sym(";")?;
            arrows.push(RawArrow { id, source, target });
        }
        Ok(RawQuiver { vertices, arrows })
    }

    fn relations(&mut self) -> PResult<Vec<Vec<RawTerm>>> {
        let mut out = Vec::new();
        if !self.is_keyword("relations") {
            return Ok(out);
        }
        self.advance();
        self.sym("{")?;
        while self.peek() != &Tok::Sym("}") {
            out.push(self.lincomb()?);
            match self.peek() {
                Tok::Sym(";") => {
                    self.advance();
                }
                Tok::Sym("}") => {}
                _ => return self.unexpected(&["'+'", "'-'", "'*'", "';'", "'}'"]),
            }
        }
        self.sym("}")?;
        Ok(out)
    }

    fn lincomb(&mut self) -> PResult<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == &Tok::Sym("-") {
            self.advance();
            negative = true;
        } else if self.peek() == &Tok::Sym("+") {
            self.advance();
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                Tok::Sym("+") => negative = false,
                Tok::Sym("-") => negative = true,
                _ => return Ok(terms),
            }
            self.advance();
        }
    }

    fn term(&mut self) -> PResult<RawTerm> {
        let pos = self.pos();
        let coefficient = matches!(self.peek(), Tok::Ratio(_)) || self.peek().is_digits();
        let coeff = if coefficient && self.peek2() == &Tok::Sym("*") || matches!(self.peek(), Tok::Ratio(_)) {
            let (tok, tpos) = self.advance();
            let text = match tok {
                Tok::Ratio(t) | Tok::Word { text: t, .. } => t,
                _ => unreachable!("checked above"),
            };
            let c = parse_scalar(&text).ok_or_else(|| err(tpos, format!("bad coefficient {text}"), &[]))?;
            self.sym("*")?;
            c
        } else {
            Scalar::one()
        };
        let mut arrows = vec![self.ident("arrow name")?];
        while self.peek() == &Tok::Sym("*") {
            self.advance();
            arrows.push(self.ident("arrow name")?);
        }
        Ok(RawTerm { coeff, arrows, pos })
    }

    fn algebra(&mut self) -> PResult<RawItem> {
        let pos = self.pos();
        self.keyword("algebra")?;
        let name = self.ident("algebra name")?;
        self.sym("{")?;
        let quiver = self.quiver_body()?;
        let relations = self.relations()?;
        self.sym("}")?;
        Ok(RawItem::Algebra { name, quiver, relations, pos })
    }

    fn gbp(&mut self) -> PResult<RawItem> {
        let pos = self.pos();
        self.keyword("gbp")?;
        let name = self.ident("gbp name")?;
        self.sym("{")?;
        self.keyword("quiver")?;
        self.sym("{")?;
        let quiver = self.quiver_body()?;
        self.sym("}")?;
        self.keyword("assign")?;
        let mut assign = Vec::new();
        loop {
            if self.is_keyword("assign") {
                self.advance();
                continue;
            }
            let assignment = matches!(self.peek(), Tok::Word { .. }) && self.peek2() == &Tok::Sym("=");
            if !assignment {
                if assign.is_empty() {
                    return self.unexpected(&["vertex name"]);
                }
                break;
            }
            let v = self.ident("vertex name")?;
            self.sym("=")?;
            let alg = self.ident("algebra name or 'k'")?;
            self.sym(";")?;
            assign.push((v, alg));
        }
        let relations = self.relations()?;
        if self.peek() != &Tok::Sym("}") {
            return self.unexpected(&["'relations'", "'}'"]);
        }
        self.sym("}")?;
        Ok(RawItem::Gbp { name, quiver, assign, relations, pos })
    }
}

fn parse_scalar(text: &str) -> Option<Scalar> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d == BigInt::from(0) {
        return None;
    }
    Some(Scalar::new(n, d))
}

enum RawItem {
    Algebra {
        name: Spanned<String>,
        quiver: RawQuiver,
        relations: Vec<Vec<RawTerm>>,
        pos: Pos,
    },
    Gbp {
        name: Spanned<String>,
        quiver: RawQuiver,
        assign: Vec<(Spanned<String>, Spanned<String>)>,
        relations: Vec<Vec<RawTerm>>,
        pos: Pos,
    },
}

/// A named gbp block together with the algebra names it was assigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbpBlock {
    pub algebra: GbpAlgebra,
    /// Γ-vertex ↦ algebra name (`k` for the field).
    pub assign: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Algebra(String, BoundPathAlgebra),
    Gbp(String, GbpBlock),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Algebra(n, _) | Item::Gbp(n, _) => n,
        }
    }
}

/// Parsed and resolved source file, blocks in source order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    items: Vec<Item>,
}

fn resolve_quiver(raw: &RawQuiver, errors: &mut Vec<ParseError>) -> Option<Quiver> {
    let mut vs = BTreeSet::new();
    let before = errors.len();
    for v in &raw.vertices {
        if !vs.insert(v.value.clone()) {
            errors.push(err(v.pos, format!("duplicate vertex {}", v.value), &[]));
        }
    }
    let mut ids = BTreeSet::new();
    let mut arrows = Vec::new();
    for a in &raw.arrows {
        if !ids.insert(a.id.value.clone()) {
            errors.push(err(a.id.pos, format!("duplicate arrow {}", a.id.value), &[]));
        }
        for end in [&a.source, &a.target] {
            if !vs.contains(&end.value) {
                errors.push(err(end.pos, format!("unknown vertex {}", end.value), &[]));
            }
        }
        arrows.push(Arrow::new(a.id.value.clone(), a.source.value.clone(), a.target.value.clone()));
    }
    if errors.len() > before {
        return None;
    }
    Quiver::new(vs, arrows).ok()
}

fn resolve_relations(q: &Quiver, raw: &[Vec<RawTerm>], errors: &mut Vec<ParseError>) -> Vec<LinComb> {
    let mut out = Vec::new();
    for rel in raw {
        let mut lc = LinComb::zero();
        let mut ok = true;
        for t in rel {
            if let Some(bad) = t.arrows.iter().find(|a| q.arrow(&a.value).is_none()) {
                errors.push(err(bad.pos, format!("unknown arrow {}", bad.value), &[]));
                ok = false;
                continue;
            }
            let ids: Vec<&str> = t.arrows.iter().map(|a| a.value.as_str()).collect();
            match q.path(&ids) {
                Ok(p) => lc.add_term(t.coeff.clone(), p),
                Err(e) => {
                    errors.push(err(t.pos, e.to_string(), &[]));
                    ok = false;
                }
            }
        }
        if ok {
            if lc.is_zero() {
                errors.push(err(rel[0].pos, "relation cancels to zero", &[]));
            } else {
                out.push(lc);
            }
        }
    }
    out
}

/// Parses and resolves a document. Syntax errors stop at the first one;
/// resolution errors are all reported.
pub fn parse(src: &str) -> std::result::Result<Document, Vec<ParseError>> {
    let toks = lex(src).map_err(|e| vec![e])?;
    let raw = Parser { toks, at: 0 }.document().map_err(|e| vec![e])?;
    let mut errors = Vec::new();
    let mut doc = Document::default();
    let mut names = BTreeSet::new();
    for item in raw {
        match item {
            RawItem::Algebra { name, quiver, relations, pos } => {
                if !names.insert(name.value.clone()) {
                    errors.push(err(name.pos, format!("duplicate block name {}", name.value), &[]));
                }
                if name.value == "k" {
                    errors.push(err(name.pos, "the name k is reserved for the field", &[]));
                }
                let Some(q) = resolve_quiver(&quiver, &mut errors) else { continue };
                let rels = resolve_relations(&q, &relations, &mut errors);
                match BoundPathAlgebra::new(q, rels) {
                    Ok(a) => doc.items.push(Item::Algebra(name.value, a)),
                    Err(e) => errors.push(err(pos, e.to_string(), &[])),
                }
            }
            RawItem::Gbp { name, quiver, assign, relations, pos } => {
                if !names.insert(name.value.clone()) {
                    errors.push(err(name.pos, format!("duplicate block name {}", name.value), &[]));
                }
                let Some(q) = resolve_quiver(&quiver, &mut errors) else { continue };
                let mut family = BTreeMap::new();
                let mut names_of = BTreeMap::new();
                for (v, alg) in &assign {
                    if !q.has_vertex(&v.value) {
                        errors.push(err(v.pos, format!("unknown vertex {}", v.value), &[]));
                        continue;
                    }
                    let va = if alg.value == "k" {
                        VertexAlgebra::k()
                    } else {
                        match doc.algebra(&alg.value) {
                            Some(a) => VertexAlgebra::new(alg.value.clone(), a.clone()),
                            None => {
                                errors.push(err(alg.pos, format!("unknown algebra {}", alg.value), &[]));
                                continue;
                            }
                        }
                    };
                    if family.insert(v.value.clone(), va).is_some() {
                        errors.push(err(v.pos, format!("vertex {} assigned twice", v.value), &[]));
                    }
                    names_of.insert(v.value.clone(), alg.value.clone());
                }
                let rels = resolve_relations(&q, &relations, &mut errors);
                match GbpAlgebra::new(q, family, rels) {
                    Ok(g) => doc.items.push(Item::Gbp(name.value, GbpBlock { algebra: g, assign: names_of })),
                    Err(e) => errors.push(err(pos, e.to_string(), &[])),
                }
            }
        }
    }
    if errors.is_empty() {
        Ok(doc)
    } else {
        Err(errors)
    }
}

/// [`parse`] with the errors folded into [`Error::Parse`].
pub fn parse_document(src: &str) -> Result<Document> {
    parse(src).map_err(Error::Parse)
}

fn quote(id: &str, in_term: bool) -> String {
    let mut chars = id.chars();
    let first = chars.next();
    let plain_ident = first.is_some_and(|c| c.is_alphabetic() || c == '_') && id.chars().all(is_ident_continue);
    let digits = !id.is_empty() && id.chars().all(|c| c.is_ascii_digit());
    let keyword = matches!(id, "algebra" | "gbp" | "vertices" | "arrow" | "relations" | "quiver" | "assign");
    if plain_ident && !keyword || digits && !in_term {
        id.to_string()
    } else if !in_term && first.is_some_and(|c| c.is_ascii_digit()) && id.chars().all(is_ident_continue) {
        // digits followed by identifier characters lex as one word
        id.to_string()
    } else {
        format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

fn write_relation(out: &mut String, r: &LinComb) {
    for (i, (p, c)) in r.terms().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{}*", fmt_scalar(&mag)));
        }
        let ids: Vec<String> = match p {
            Path::Arrows(a) => a.iter().map(|id| quote(id, true)).collect(),
            Path::Trivial(v) => vec![quote(v, true)],
        };
        out.push_str(&ids.join("*"));
    }
}

fn write_quiver(out: &mut String, q: &Quiver, indent: &str) {
    let vs: Vec<String> = q.vertices().map(|v| quote(v, false)).collect();
    out.push_str(&format!("{indent}vertices {};\n", vs.join(" ")));
    for a in q.arrows() {
        out.push_str(&format!(
            "{indent}arrow {}: {} -> {};\n",
            quote(&a.id, false),
            quote(&a.source, false),
            quote(&a.target, false)
        ));
    }
}

fn write_relations(out: &mut String, rels: &[LinComb], indent: &str) {
    if rels.is_empty() {
        return;
    }
    out.push_str(&format!("{indent}relations {{\n"));
    for r in rels {
        out.push_str(&format!("{indent}    "));
        write_relation(out, r);
        out.push_str(";\n");
    }
    out.push_str(&format!("{indent}}}\n"));
}

impl Document {
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn push(&mut self, item: Item) {
        self.items.push(item);
    }

    pub fn algebra(&self, name: &str) -> Option<&BoundPathAlgebra> {
        self.items.iter().find_map(|i| match i {
            Item::Algebra(n, a) if n == name => Some(a),
            _ => None,
        })
    }

    pub fn gbp(&self, name: &str) -> Option<&GbpBlock> {
        self.items.iter().find_map(|i| match i {
            Item::Gbp(n, g) if n == name => Some(g),
            _ => None,
        })
    }

    pub fn algebras(&self) -> impl Iterator<Item = (&str, &BoundPathAlgebra)> + '_ {
        self.items.iter().filter_map(|i| match i {
            Item::Algebra(n, a) => Some((n.as_str(), a)),
            _ => None,
        })
    }

    pub fn gbps(&self) -> impl Iterator<Item = (&str, &GbpBlock)> + '_ {
        self.items.iter().filter_map(|i| match i {
            Item::Gbp(n, g) => Some((n.as_str(), g)),
            _ => None,
        })
    }

    /// Canonical source text: sorted vertices and arrows, canonical
    /// relations, fixed layout.
    pub fn to_source(&self) -> String {
        let mut out = String::new();
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            match item {
                Item::Algebra(name, a) => {
                    out.push_str(&format!("algebra {} {{\n", quote(name, false)));
                    write_quiver(&mut out, a.quiver(), "    ");
                    write_relations(&mut out, a.relations(), "    ");
                    out.push_str("}\n");
                }
                Item::Gbp(name, g) => {
                    out.push_str(&format!("gbp {} {{\n    quiver {{\n", quote(name, false)));
                    write_quiver(&mut out, g.algebra.gamma(), "        ");
                    out.push_str("    }\n    assign");
                    for (v, alg) in &g.assign {
                        out.push_str(&format!(" {} = {};", quote(v, false), quote(alg, false)));
                    }
                    out.push('\n');
                    write_relations(&mut out, g.algebra.relations(), "    ");
                    out.push_str("}\n");
                }
            }
        }
        out
    }
}

/// Canonical text of a single algebra block.
pub fn algebra_source(name: &str, a: &BoundPathAlgebra) -> String {
    Document { items: vec![Item::Algebra(name.to_string(), a.clone())] }.to_source()
}
