//! Line-oriented poset files and Graphviz DOT export.
//!
//! The text format has one directive per line, `#` starts a comment:
//!
//! ```text
//! # a diamond
//! elem bot
//! elem a
//! elem b
//! elem top
//! cover bot a
//! cover bot b
//! cover a top
//! cover b top
//! ```
//!
//! `cover a b` declares `a < b`; the order is the reflexive-transitive
//! closure of the declared pairs. Exports list only covering pairs (the
//! transitive reduction), so re-importing an export yields the same order.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{FinitePoset, PosetError, SplitPartition};

fn parse_err(line: usize, message: impl Into<String>) -> PosetError {
    PosetError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset, PosetError> {
    let mut elems: Vec<String> = Vec::new();
    let mut declared: HashMap<String, usize> = HashMap::new();
    let mut covers: Vec<(usize, String, String)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["elem", name] => {
                if declared.insert(name.to_string(), line).is_some() {
                    return Err(parse_err(line, format!("element `{name}` declared twice")));
                }
                elems.push(name.to_string());
            }
            ["cover", a, b] => covers.push((line, a.to_string(), b.to_string())),
            ["elem", ..] => return Err(parse_err(line, "expected `elem <name>`")),
            ["cover", ..] => return Err(parse_err(line, "expected `cover <a> <b>`")),
            [other, ..] => return Err(parse_err(line, format!("unknown directive `{other}`"))),
            [] => unreachable!(),
        }
    }
    for (line, a, b) in &covers {
        for n in [a, b] {
            if !declared.contains_key(n) {
                return Err(parse_err(*line, format!("undeclared element `{n}`")));
            }
        }
    }
    FinitePoset::from_cover_relations(elems, covers.into_iter().map(|(_, a, b)| (a, b)))
}

pub fn render_poset(p: &FinitePoset) -> String {
    let mut out = String::new();
    for name in p.names() {
        let _ = writeln!(out, "elem {name}");
    }
    for (x, y) in p.cover_pairs() {
        let _ = writeln!(out, "cover {} {}", p.name(x), p.name(y));
    }
    out
}

const DOWN_COLOR: &str = "lightblue";
const UP_COLOR: &str = "salmon";

/// Hasse diagram as a DOT digraph, edges pointing upward. When `split` is
/// given, its `D` nodes and `U` nodes are filled in two different colors.
pub fn render_dot(p: &FinitePoset, split: Option<&SplitPartition>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, name) in p.names().iter().enumerate() {
        let fill = split.and_then(|s| {
            if s.down.contains(&i) {
                Some(DOWN_COLOR)
            } else if s.up.contains(&i) {
                Some(UP_COLOR)
            } else {
                None
            }
        });
        match fill {
            Some(c) => {
                let _ = writeln!(out, "  {} [style=filled, fillcolor={c}];", quote(name));
            }
            None => {
                let _ = writeln!(out, "  {};", quote(name));
            }
        }
    }
    for (x, y) in p.cover_pairs() {
        let _ = writeln!(out, "  {} -> {};", quote(p.name(x)), quote(p.name(y)));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    Arrow,
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PosetError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '/' if chars.peek() == Some(&'/') => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '"' => {
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => match chars.next() {
                            Some(e) => s.push(e),
                            None => return Err(parse_err(line, "unterminated string")),
                        },
                        Some('"') => break,
                        Some(c) => {
                            if c == '\n' {
                                line += 1;
                            }
                            s.push(c)
                        }
                        None => return Err(parse_err(line, "unterminated string")),
                    }
                }
                toks.push((line, Tok::Id(s)));
            }
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                toks.push((line, Tok::Arrow));
            }
            '{' | '}' | '[' | ']' | ';' | '=' | ',' => toks.push((line, Tok::Sym(c))),
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::from(c);
                while let Some(&n) = chars.peek() {
                    if n.is_alphanumeric() || n == '_' || n == '.' {
                        s.push(n);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push((line, Tok::Id(s)));
            }
            other => return Err(parse_err(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// Reads back a digraph written by [`render_dot`]: nodes in order of first
/// appearance, each edge `a -> b` read as `a < b`. Attribute lists and
/// graph-level attributes are skipped.
pub fn parse_dot(text: &str) -> Result<FinitePoset, PosetError> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let last_line = toks.last().map_or(1, |t| t.0);
    let at = |pos: usize| toks.get(pos).map(|t| &t.1);
    let line_of = |pos: usize| toks.get(pos).map_or(last_line, |t| t.0);

    if at(pos) == Some(&Tok::Id("strict".into())) {
        pos += 1;
    }
    if at(pos) != Some(&Tok::Id("digraph".into())) {
        return Err(parse_err(line_of(pos), "expected `digraph`"));
    }
    pos += 1;
    if matches!(at(pos), Some(Tok::Id(_))) {
        pos += 1;
    }
    if at(pos) != Some(&Tok::Sym('{')) {
        return Err(parse_err(line_of(pos), "expected `{`"));
    }
    pos += 1;

    let mut nodes: Vec<String> = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut add_node = |n: &str, nodes: &mut Vec<String>| {
        if seen.insert(n.to_string(), ()).is_none() {
            nodes.push(n.to_string());
        }
    };

    loop {
        match at(pos) {
            None => return Err(parse_err(last_line, "missing closing `}`")),
            Some(Tok::Sym('}')) => break,
            Some(Tok::Sym(';')) => pos += 1,
            Some(Tok::Id(kw)) if ["node", "edge", "graph"].contains(&kw.as_str()) && at(pos + 1) == Some(&Tok::Sym('[')) => {
                pos = skip_attrs(&toks, pos + 1)?;
            }
            Some(Tok::Id(_)) if at(pos + 1) == Some(&Tok::Sym('=')) => pos += 3,
            Some(Tok::Id(first)) => {
                let mut chain = vec![first.clone()];
                pos += 1;
                while at(pos) == Some(&Tok::Arrow) {
                    match at(pos + 1) {
                        Some(Tok::Id(next)) => chain.push(next.clone()),
                        _ => return Err(parse_err(line_of(pos + 1), "expected node after `->`")),
                    }
                    pos += 2;
                }
                if at(pos) == Some(&Tok::Sym('[')) {
                    pos = skip_attrs(&toks, pos)?;
                }
                for n in &chain {
                    add_node(n, &mut nodes);
                }
                for w in chain.windows(2) {
                    edges.push((w[0].clone(), w[1].clone()));
                }
            }
            Some(t) => return Err(parse_err(line_of(pos), format!("unexpected token {t:?}"))),
        }
    }
    FinitePoset::from_cover_relations(nodes, edges)
}

fn skip_attrs(toks: &[(usize, Tok)], open: usize) -> Result<usize, PosetError> {
    let mut pos = open + 1;
    while let Some((_, t)) = toks.get(pos) {
        if *t == Tok::Sym(']') {
            return Ok(pos + 1);
        }
        pos += 1;
    }
    Err(parse_err(toks[open].0, "unterminated attribute list"))
}
