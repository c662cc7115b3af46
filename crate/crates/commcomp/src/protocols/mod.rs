//! Deterministic communication protocol trees over labeled matrices:
//! construction from vertex covers, evaluation, verification, binarization,
//! metrics, and a text format.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matrix::{ColLabel, CommMatrix, RowLabel};
use crate::solvers::ceil_log2;

mod build;
mod io;

pub use build::{build_explicit_protocol, col_naming_protocol, nfcv_set, row_naming_protocol};
pub use io::{parse_protocol, serialize_protocol};

/// Which player's input a node branches on, and where each input goes.
/// Only inputs reachable at the node need to be mapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assignment {
    Rows(BTreeMap<RowLabel, usize>),
    Cols(BTreeMap<ColLabel, usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub assignment: Assignment,
    pub children: Vec<Tree>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tree {
    Leaf(bool),
    Node(Node),
}

/// A protocol tree together with the input universes it is meant to cover.
/// Parsed protocols recover the universes from the labels that occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Protocol {
    pub rows: Vec<RowLabel>,
    pub cols: Vec<ColLabel>,
    pub tree: Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProtocolMetrics {
    /// Maximum number of nodes on a root-to-leaf path.
    pub depth: usize,
    /// Maximum total bits sent on a root-to-leaf path, charging each node
    /// ceil(log2(children)) bits; equals the depth after binarization.
    pub binary_depth: usize,
    pub leaf_count: usize,
    /// Leaves reachable by at least one (row, column) input pair.
    pub useful_leaf_count: usize,
    pub unused_leaf_count: usize,
}

/// Run the protocol on one input pair.
pub fn evaluate(p: &Protocol, row: &RowLabel, col: &ColLabel) -> Result<bool> {
    let mut t = &p.tree;
    loop {
        match t {
            Tree::Leaf(v) => return Ok(*v),
            Tree::Node(n) => {
                let idx = match &n.assignment {
                    Assignment::Rows(map) => *map
                        .get(row)
                        .ok_or_else(|| Error::UnknownLabel(row.to_string()))?,
                    Assignment::Cols(map) => *map
                        .get(col)
                        .ok_or_else(|| Error::UnknownLabel(col.to_string()))?,
                };
                t = n.children.get(idx).ok_or(Error::IndexOutOfRange {
                    what: "child",
                    got: idx,
                    len: n.children.len(),
                })?;
            }
        }
    }
}

/// Whether the protocol computes the matrix entry for every input pair.
/// The protocol's universes must match the matrix labels; a side left empty
/// by parsing (no node ever branched on it) is not checked.
pub fn verify_protocol(p: &Protocol, m: &CommMatrix) -> Result<bool> {
    if !p.rows.is_empty() {
        let got: BTreeSet<_> = p.rows.iter().collect();
        let want: BTreeSet<_> = m.rows().iter().collect();
        if got != want {
            return Err(Error::UniverseMismatch(format!(
                "{} protocol rows vs {} matrix rows",
                got.len(),
                want.len()
            )));
        }
    }
    if !p.cols.is_empty() {
        let got: BTreeSet<_> = p.cols.iter().collect();
        let want: BTreeSet<_> = m.cols().iter().collect();
        if got != want {
            return Err(Error::UniverseMismatch(format!(
                "{} protocol columns vs {} matrix columns",
                got.len(),
                want.len()
            )));
        }
    }
    for (i, row) in m.rows().iter().enumerate() {
        for (j, col) in m.cols().iter().enumerate() {
            if evaluate(p, row, col)? != m.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Depth, bit cost, and leaf reachability statistics.
pub fn metrics(p: &Protocol) -> ProtocolMetrics {
    let mut acc = ProtocolMetrics {
        depth: 0,
        binary_depth: 0,
        leaf_count: 0,
        useful_leaf_count: 0,
        unused_leaf_count: 0,
    };
    let rows: Vec<RowLabel> = p.rows.clone();
    let cols: Vec<ColLabel> = p.cols.clone();
    walk(&p.tree, rows, cols, 0, 0, &mut acc);
    acc
}

fn walk(
    t: &Tree,
    rows: Vec<RowLabel>,
    cols: Vec<ColLabel>,
    depth: usize,
    bits: usize,
    acc: &mut ProtocolMetrics,
) {
    match t {
        Tree::Leaf(_) => {
            acc.depth = acc.depth.max(depth);
            acc.binary_depth = acc.binary_depth.max(bits);
            acc.leaf_count += 1;
            if rows.is_empty() || cols.is_empty() {
                acc.unused_leaf_count += 1;
            } else {
                acc.useful_leaf_count += 1;
            }
        }
        Tree::Node(n) => {
            let w = ceil_log2(n.children.len()).max(1);
            for (i, child) in n.children.iter().enumerate() {
                let (crows, ccols) = match &n.assignment {
                    Assignment::Rows(map) => (
                        rows.iter()
                            .filter(|r| map.get(r) == Some(&i))
                            .copied()
                            .collect(),
                        cols.clone(),
                    ),
                    Assignment::Cols(map) => (
                        rows.clone(),
                        cols.iter()
                            .filter(|c| map.get(c) == Some(&i))
                            .copied()
                            .collect(),
                    ),
                };
                walk(child, crows, ccols, depth + 1, bits + w, acc);
            }
        }
    }
}

/// Replace every multiway node by a balanced run of single-bit nodes on the
/// same input, most significant bit first. Code points past the child count
/// end in 0-leaves. Binary nodes are kept as they are.
pub fn binarize(p: &Protocol) -> Protocol {
    Protocol {
        rows: p.rows.clone(),
        cols: p.cols.clone(),
        tree: bin_tree(&p.tree),
    }
}

fn bin_tree(t: &Tree) -> Tree {
    match t {
        Tree::Leaf(v) => Tree::Leaf(*v),
        Tree::Node(n) => {
            let w = ceil_log2(n.children.len()).max(1);
            expand(n, w, 0)
        }
    }
}

fn expand(n: &Node, bits_left: usize, prefix: usize) -> Tree {
    if bits_left == 0 {
        return match n.children.get(prefix) {
            Some(c) => bin_tree(c),
            None => Tree::Leaf(false),
        };
    }
    let select = |code: usize| -> Option<usize> {
        (code >> bits_left == prefix).then_some(code >> (bits_left - 1) & 1)
    };
    let assignment = match &n.assignment {
        Assignment::Rows(map) => Assignment::Rows(
            map.iter()
                .filter_map(|(l, &i)| select(i).map(|b| (*l, b)))
                .collect(),
        ),
        Assignment::Cols(map) => Assignment::Cols(
            map.iter()
                .filter_map(|(l, &i)| select(i).map(|b| (*l, b)))
                .collect(),
        ),
    };
    Tree::Node(Node {
        assignment,
        children: vec![
            expand(n, bits_left - 1, prefix << 1),
            expand(n, bits_left - 1, prefix << 1 | 1),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: usize, b: u8) -> RowLabel {
        RowLabel::Node { v, b }
    }

    fn col(v: usize) -> ColLabel {
        ColLabel::Node { v }
    }

    /// Three-leaf protocol: Alice splits {(1,0)} | {(1,1),(2,0)}, then Bob
    /// answers whether the column is node column 1.
    fn sample() -> Protocol {
        let reply = Tree::Node(Node {
            assignment: Assignment::Cols(BTreeMap::from([(col(1), 1), (col(2), 0)])),
            children: vec![Tree::Leaf(false), Tree::Leaf(true)],
        });
        Protocol {
            rows: vec![row(1, 0), row(1, 1), row(2, 0)],
            cols: vec![col(1), col(2)],
            tree: Tree::Node(Node {
                assignment: Assignment::Rows(BTreeMap::from([
                    (row(1, 0), 0),
                    (row(1, 1), 1),
                    (row(2, 0), 1),
                ])),
                children: vec![Tree::Leaf(false), reply],
            }),
        }
    }

    #[test]
    fn evaluate_walks_the_tree() {
        let p = sample();
        assert!(!evaluate(&p, &row(1, 0), &col(1)).unwrap());
        assert!(evaluate(&p, &row(1, 1), &col(1)).unwrap());
        assert!(!evaluate(&p, &row(1, 1), &col(2)).unwrap());
        assert!(evaluate(&p, &row(2, 0), &col(1)).unwrap());
        let missing = row(9, 0);
        assert!(matches!(
            evaluate(&p, &missing, &col(1)),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn metrics_counts_depths_and_leaves() {
        let p = sample();
        let m = metrics(&p);
        assert_eq!(m.depth, 2);
        assert_eq!(m.binary_depth, 2);
        assert_eq!(m.leaf_count, 3);
        assert_eq!(m.useful_leaf_count, 3);
        assert_eq!(m.unused_leaf_count, 0);
    }

    #[test]
    fn binarize_keeps_binary_trees() {
        let p = sample();
        assert_eq!(binarize(&p), p);
    }

    #[test]
    fn binarize_expands_multiway_nodes() {
        // One Alice node with 3 children; codes 0..2, code 3 dangles.
        let leaf = |v| Tree::Leaf(v);
        let p = Protocol {
            rows: vec![row(1, 0), row(1, 1), row(2, 0)],
            cols: vec![col(1)],
            tree: Tree::Node(Node {
                assignment: Assignment::Rows(BTreeMap::from([
                    (row(1, 0), 0),
                    (row(1, 1), 1),
                    (row(2, 0), 2),
                ])),
                children: vec![leaf(true), leaf(false), leaf(true)],
            }),
        };
        let b = binarize(&p);
        let m = metrics(&b);
        assert_eq!(m.depth, 2);
        assert_eq!(m.binary_depth, 2);
        assert_eq!(m.leaf_count, 4);
        assert_eq!(m.useful_leaf_count, 3);
        assert_eq!(m.unused_leaf_count, 1);
        for (r, want) in [(row(1, 0), true), (row(1, 1), false), (row(2, 0), true)] {
            assert_eq!(evaluate(&b, &r, &col(1)).unwrap(), want);
        }
        // Multiway metrics already charge the binarized bit cost.
        assert_eq!(metrics(&p).binary_depth, 2);
    }
}
