//! Protocol text format: nested s-expressions.
//!
//! leaf   := "(=0)" | "(=1)"
//! node   := "(" ("A" | "B") branch* child+ ")"
//! branch := "(branch" <index> <label>* ")"
//!
//! "A" nodes branch on row labels, "B" nodes on column labels. Every child
//! index gets a branch group (possibly empty); labels within a group and the
//! groups themselves are written in sorted order, so serialization is
//! canonical: parse(serialize(p)) reproduces the tree exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::{ColLabel, RowLabel};
use crate::protocols::{Assignment, Node, Protocol, Tree};

pub fn serialize_protocol(p: &Protocol) -> String {
    let mut out = String::new();
    write_tree(&p.tree, &mut out);
    out.push('\n');
    out
}

fn write_tree(t: &Tree, out: &mut String) {
    match t {
        Tree::Leaf(false) => out.push_str("(=0)"),
        Tree::Leaf(true) => out.push_str("(=1)"),
        Tree::Node(n) => {
            match &n.assignment {
                Assignment::Rows(map) => {
                    out.push_str("(A");
                    write_branches(n.children.len(), map.iter().map(|(l, &i)| (l.to_string(), i)), out);
                }
                Assignment::Cols(map) => {
                    out.push_str("(B");
                    write_branches(n.children.len(), map.iter().map(|(l, &i)| (l.to_string(), i)), out);
                }
            }
            for child in &n.children {
                out.push(' ');
                write_tree(child, out);
            }
            out.push(')');
        }
    }
}

fn write_branches(
    nchildren: usize,
    entries: impl Iterator<Item = (String, usize)>,
    out: &mut String,
) {
    let mut groups: Vec<Vec<String>> = vec![Vec::new(); nchildren];
    for (label, i) in entries {
        groups[i].push(label);
    }
    for (i, group) in groups.iter().enumerate() {
        write!(out, " (branch {}", i).unwrap();
        for label in group {
            out.push(' ');
            out.push_str(label);
        }
        out.push(')');
    }
}

pub fn parse_protocol(text: &str) -> Result<Protocol> {
    let tokens = tokenize(text);
    let mut p = Parser { tokens, pos: 0 };
    let tree = p.tree()?;
    if p.pos != p.tokens.len() {
        return Err(Error::parse(1, "trailing tokens after protocol"));
    }
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    collect_labels(&tree, &mut rows, &mut cols);
    Ok(Protocol {
        rows: rows.into_iter().collect(),
        cols: cols.into_iter().collect(),
        tree,
    })
}

fn collect_labels(t: &Tree, rows: &mut BTreeSet<RowLabel>, cols: &mut BTreeSet<ColLabel>) {
    if let Tree::Node(n) = t {
        match &n.assignment {
            Assignment::Rows(map) => rows.extend(map.keys().copied()),
            Assignment::Cols(map) => cols.extend(map.keys().copied()),
        }
        for child in &n.children {
            collect_labels(child, rows, cols);
        }
    }
}

fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
                tokens.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn peek(&self, ahead: usize) -> Option<&str> {
        self.tokens.get(self.pos + ahead).map(|s| s.as_str())
    }

    fn next(&mut self) -> Result<&str> {
        let t = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| Error::parse(1, "unexpected end of protocol"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: &str) -> Result<()> {
        let got = self.next()?;
        if got != want {
            return Err(Error::parse(1, format!("expected '{}', found '{}'", want, got)));
        }
        Ok(())
    }

    fn tree(&mut self) -> Result<Tree> {
        self.expect("(")?;
        let head = self.next()?.to_string();
        match head.as_str() {
            "=0" | "=1" => {
                self.expect(")")?;
                Ok(Tree::Leaf(head == "=1"))
            }
            "A" | "B" => self.node(head == "A"),
            other => Err(Error::parse(1, format!("unknown node head '{}'", other))),
        }
    }

    /// Branch groups, then at least two children, then ')'.
    fn node(&mut self, on_rows: bool) -> Result<Tree> {
        let mut branches: Vec<(usize, Vec<String>)> = Vec::new();
        while self.peek(0) == Some("(") && self.peek(1) == Some("branch") {
            self.expect("(")?;
            self.expect("branch")?;
            let idx: usize = self
                .next()?
                .parse()
                .map_err(|_| Error::parse(1, "branch index must be a number"))?;
            let mut labels = Vec::new();
            while self.peek(0) != Some(")") {
                labels.push(self.next()?.to_string());
            }
            self.expect(")")?;
            branches.push((idx, labels));
        }
        let mut children = Vec::new();
        while self.peek(0) == Some("(") {
            children.push(self.tree()?);
        }
        self.expect(")")?;
        if children.len() < 2 {
            return Err(Error::parse(1, "a node needs at least two children"));
        }

        let assignment = if on_rows {
            let mut map: BTreeMap<RowLabel, usize> = BTreeMap::new();
            for (idx, labels) in &branches {
                check_index(*idx, children.len())?;
                for l in labels {
                    if map.insert(l.parse()?, *idx).is_some() {
                        return Err(Error::parse(1, format!("label '{}' assigned twice", l)));
                    }
                }
            }
            Assignment::Rows(map)
        } else {
            let mut map: BTreeMap<ColLabel, usize> = BTreeMap::new();
            for (idx, labels) in &branches {
                check_index(*idx, children.len())?;
                for l in labels {
                    if map.insert(l.parse()?, *idx).is_some() {
                        return Err(Error::parse(1, format!("label '{}' assigned twice", l)));
                    }
                }
            }
            Assignment::Cols(map)
        };
        Ok(Tree::Node(Node {
            assignment,
            children,
        }))
    }
}

fn check_index(idx: usize, len: usize) -> Result<()> {
    if idx >= len {
        return Err(Error::IndexOutOfRange {
            what: "branch child",
            got: idx,
            len,
        });
    }
    Ok(())
}
