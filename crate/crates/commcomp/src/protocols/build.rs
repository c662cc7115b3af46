//! Protocol constructions: the two-phase cover protocol for gadget matrices
//! and the generic naming protocols.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graphs::{is_vertex_cover, Graph};
use crate::matrix::{ColLabel, CommMatrix, RowLabel};
use crate::protocols::{Assignment, Node, Protocol, Tree};
use crate::reduction::{build_fg, build_padded, ReductionParams};

fn check_cover(g: &Graph, c: &[usize]) -> Result<()> {
    is_vertex_cover(g, c)?;
    for &(i, j) in g.edges() {
        if !c.contains(&i) && !c.contains(&j) {
            return Err(Error::NotACover(i, j));
        }
    }
    Ok(())
}

/// The 2|E| gadget columns on which the cover rectangles of `c` take no 1:
/// for each edge {i,j} with i < j, columns (e,3),(e,4) when i is in the
/// cover, else columns (e,1),(e,2). Sorted by column order.
pub fn nfcv_set(g: &Graph, c: &[usize]) -> Result<Vec<ColLabel>> {
    check_cover(g, c)?;
    let mut out = Vec::with_capacity(2 * g.m());
    for &e in g.edges() {
        let (i, _) = e;
        let pair = if c.contains(&i) { [3u8, 4] } else { [1, 2] };
        out.extend(pair.iter().map(|&c| ColLabel::Edge { e, c }));
    }
    Ok(out)
}

/// Bob's yes/no answer node on a fixed set of columns, reading the values
/// off a representative row. Children are the 0-leaf then the 1-leaf.
fn reply_on_cols(m: &CommMatrix, rep: usize, cols: &[usize]) -> Tree {
    let map: BTreeMap<ColLabel, usize> = cols
        .iter()
        .map(|&j| (m.cols()[j], m.get(rep, j) as usize))
        .collect();
    Tree::Node(Node {
        assignment: Assignment::Cols(map),
        children: vec![Tree::Leaf(false), Tree::Leaf(true)],
    })
}

/// Alice's yes/no answer node on all rows for a fixed column.
fn reply_on_rows(m: &CommMatrix, j: usize) -> Tree {
    let map: BTreeMap<RowLabel, usize> = (0..m.nrows())
        .map(|i| (m.rows()[i], m.get(i, j) as usize))
        .collect();
    Tree::Node(Node {
        assignment: Assignment::Rows(map),
        children: vec![Tree::Leaf(false), Tree::Leaf(true)],
    })
}

fn single_or_node(assignment: Assignment, children: Vec<Tree>) -> Tree {
    debug_assert!(!children.is_empty());
    if children.len() == 1 {
        children.into_iter().next().unwrap()
    } else {
        Tree::Node(Node {
            assignment,
            children,
        })
    }
}

/// The cover-driven protocol for the gadget matrix of `g` (padded when
/// `params` is given; `params.k` selects the padding).
///
/// Bob first says whether his column is one of the `nfcv_set` columns or a
/// late pad column. If so he names it and Alice answers. Otherwise Alice
/// names which row group hers lies in: a cover vertex row (i,b), a non-cover
/// vertex pair {(i,0),(i,1)}, one of two edge-row pairs per edge chosen by
/// cover membership, or an early pad row, and Bob answers; rows with no 1
/// left of the split share one 0-leaf.
pub fn build_explicit_protocol(
    g: &Graph,
    c: &[usize],
    params: Option<&ReductionParams>,
) -> Result<Protocol> {
    check_cover(g, c)?;
    let m = match params {
        Some(p) => build_padded(g, p.k).0,
        None => build_fg(g),
    };
    let (d0, d) = match params {
        Some(p) => (p.d0, p.d),
        None => (0, 0),
    };
    let nfcv = nfcv_set(g, c)?;
    let is_right = |label: &ColLabel| -> bool {
        match *label {
            ColLabel::Pad { t } => t > d0,
            _ => nfcv.binary_search(label).is_ok(),
        }
    };
    let right_cols: Vec<usize> = (0..m.ncols()).filter(|&j| is_right(&m.cols()[j])).collect();
    let left_cols: Vec<usize> = (0..m.ncols()).filter(|&j| !is_right(&m.cols()[j])).collect();

    let in_cover: Vec<usize> = (1..=g.n()).filter(|v| c.contains(v)).collect();
    let out_of_cover: Vec<usize> = (1..=g.n()).filter(|v| !c.contains(v)).collect();

    // Left branch: Alice names the row group, Bob answers on left columns.
    let left = if left_cols.is_empty() {
        None
    } else {
        let mut map: BTreeMap<RowLabel, usize> = BTreeMap::new();
        let mut children: Vec<Tree> = Vec::new();
        let group = |rows: &[RowLabel], child: Tree, map: &mut BTreeMap<RowLabel, usize>, children: &mut Vec<Tree>| {
            for r in rows {
                map.insert(*r, children.len());
            }
            children.push(child);
        };
        let rep = |label: &RowLabel| m.row_index(label).unwrap();
        for &v in &in_cover {
            for b in 0..=1u8 {
                let r = RowLabel::Node { v, b };
                group(&[r], reply_on_cols(&m, rep(&r), &left_cols), &mut map, &mut children);
            }
        }
        for &v in &out_of_cover {
            let rows = [RowLabel::Node { v, b: 0 }, RowLabel::Node { v, b: 1 }];
            group(&rows, reply_on_cols(&m, rep(&rows[0]), &left_cols), &mut map, &mut children);
        }
        for &e in g.edges() {
            let (i, _) = e;
            let pair = if c.contains(&i) { [1u8, 2] } else { [1, 3] };
            let rows = pair.map(|r| RowLabel::Edge { e, r });
            group(&rows, reply_on_cols(&m, rep(&rows[0]), &left_cols), &mut map, &mut children);
        }
        for &e in g.edges() {
            let (i, _) = e;
            let pair = if c.contains(&i) { [3u8, 4] } else { [2, 4] };
            let rows = pair.map(|r| RowLabel::Edge { e, r });
            group(&rows, reply_on_cols(&m, rep(&rows[0]), &left_cols), &mut map, &mut children);
        }
        for t in 1..=d0 {
            let r = RowLabel::Pad { t };
            group(&[r], reply_on_cols(&m, rep(&r), &left_cols), &mut map, &mut children);
        }
        if d > d0 {
            let rows: Vec<RowLabel> = (d0 + 1..=d).map(|t| RowLabel::Pad { t }).collect();
            group(&rows, Tree::Leaf(false), &mut map, &mut children);
        }
        Some(single_or_node(Assignment::Rows(map), children))
    };

    // Right branch: Bob names the column, Alice answers.
    let right = if right_cols.is_empty() {
        None
    } else {
        let map: BTreeMap<ColLabel, usize> = right_cols
            .iter()
            .enumerate()
            .map(|(i, &j)| (m.cols()[j], i))
            .collect();
        let children: Vec<Tree> = right_cols.iter().map(|&j| reply_on_rows(&m, j)).collect();
        Some(single_or_node(Assignment::Cols(map), children))
    };

    let tree = match (left, right) {
        (Some(l), Some(r)) => {
            let map: BTreeMap<ColLabel, usize> = (0..m.ncols())
                .map(|j| (m.cols()[j], is_right(&m.cols()[j]) as usize))
                .collect();
            Tree::Node(Node {
                assignment: Assignment::Cols(map),
                children: vec![l, r],
            })
        }
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (None, None) => Tree::Leaf(false),
    };
    Ok(Protocol {
        rows: m.rows().to_vec(),
        cols: m.cols().to_vec(),
        tree,
    })
}

/// Bob names his column, Alice answers; depth ceil(log2(columns)) + 1 after
/// binarization.
pub fn col_naming_protocol(m: &CommMatrix) -> Protocol {
    let map: BTreeMap<ColLabel, usize> = m.cols().iter().enumerate().map(|(j, &l)| (l, j)).collect();
    let children: Vec<Tree> = (0..m.ncols()).map(|j| reply_on_rows(m, j)).collect();
    Protocol {
        rows: m.rows().to_vec(),
        cols: m.cols().to_vec(),
        tree: single_or_node(Assignment::Cols(map), children),
    }
}

/// Alice names her row, Bob answers.
pub fn row_naming_protocol(m: &CommMatrix) -> Protocol {
    let all_cols: Vec<usize> = (0..m.ncols()).collect();
    let map: BTreeMap<RowLabel, usize> = m.rows().iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let children: Vec<Tree> = (0..m.nrows()).map(|i| reply_on_cols(m, i, &all_cols)).collect();
    Protocol {
        rows: m.rows().to_vec(),
        cols: m.cols().to_vec(),
        tree: single_or_node(Assignment::Rows(map), children),
    }
}
