//! Gadget matrix construction, identity padding, and the vertex-cover-derived
//! 1-partition.

use crate::error::{Error, Result};
use crate::graphs::{is_vertex_cover, Graph};
use crate::matrix::{ColLabel, CommMatrix, OnePartition, Rectangle, RowLabel};

/// Per-edge 8x5 gadget bitmap for edge {i,j}, i < j, on rows
/// (i,0),(i,1),(j,0),(j,1),(e,1),(e,2),(e,3),(e,4) and columns (e,1)..(e,5).
///
/// Rows (e,1),(e,2) agree outside columns 3,4; rows (e,3),(e,4) likewise.
/// Rows (e,1),(e,3) agree outside columns 1,2; rows (e,2),(e,4) likewise.
/// The cells ((i,0),1), ((i,1),2), ((j,0),3), ((j,1),4), ((e,1),5) form a
/// fooling set.
pub const GADGET: [[u8; 5]; 8] = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [1, 0, 1, 0, 1],
    [1, 0, 0, 1, 1],
    [0, 1, 1, 0, 1],
    [0, 1, 0, 1, 1],
];

fn fg_rows(g: &Graph) -> Vec<RowLabel> {
    let nodes = (1..=g.n()).flat_map(|v| (0..=1u8).map(move |b| RowLabel::Node { v, b }));
    let edges = g
        .edges()
        .iter()
        .flat_map(|&e| (1..=4u8).map(move |r| RowLabel::Edge { e, r }));
    nodes.chain(edges).collect()
}

fn fg_cols(g: &Graph) -> Vec<ColLabel> {
    let nodes = (1..=g.n()).map(|v| ColLabel::Node { v });
    let edges = g
        .edges()
        .iter()
        .flat_map(|&e| (1..=5u8).map(move |c| ColLabel::Edge { e, c }));
    nodes.chain(edges).collect()
}

/// Gadget row labels of edge e in bitmap row order.
fn gadget_rows(e: (usize, usize)) -> [RowLabel; 8] {
    let (i, j) = e;
    [
        RowLabel::Node { v: i, b: 0 },
        RowLabel::Node { v: i, b: 1 },
        RowLabel::Node { v: j, b: 0 },
        RowLabel::Node { v: j, b: 1 },
        RowLabel::Edge { e, r: 1 },
        RowLabel::Edge { e, r: 2 },
        RowLabel::Edge { e, r: 3 },
        RowLabel::Edge { e, r: 4 },
    ]
}

/// The gadget matrix: rows ([n] x {0,1}) then (E x [4]); columns [n] then
/// (E x [5]). Node row (v,b) has a 1 at node column v; each edge contributes
/// its 8x5 gadget bitmap. Dimensions (2n + 4|E|) x (n + 5|E|); 2n + 16|E|
/// ones in total.
pub fn build_fg(g: &Graph) -> CommMatrix {
    let mut m = CommMatrix::new(fg_rows(g), fg_cols(g)).expect("labels unique by construction");
    for v in 1..=g.n() {
        let cj = m.col_index(&ColLabel::Node { v }).unwrap();
        for b in 0..=1u8 {
            let ri = m.row_index(&RowLabel::Node { v, b }).unwrap();
            m.set(ri, cj, true);
        }
    }
    for &e in g.edges() {
        let rows = gadget_rows(e);
        for (gr, row) in rows.iter().enumerate() {
            let ri = m.row_index(row).unwrap();
            for gc in 0..5 {
                if GADGET[gr][gc] == 1 {
                    let cj = m.col_index(&ColLabel::Edge { e, c: gc as u8 + 1 }).unwrap();
                    m.set(ri, cj, true);
                }
            }
        }
    }
    m
}

/// Padding parameters for threshold k: l is the least natural number with
/// n + 2|E| + k <= 2^l; d0 and d1 are the leaf deficits of the two protocol
/// subtrees; d = d0 + d1 identity rows and columns are appended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionParams {
    pub k: usize,
    pub l: u32,
    pub d0: usize,
    pub d1: usize,
    pub d: usize,
}

impl ReductionParams {
    pub fn new(g: &Graph, k: usize) -> Self {
        let total = g.n() + 2 * g.m() + k;
        let mut l = 0u32;
        while (1usize << l) < total {
            l += 1;
        }
        let d0 = (1usize << l) - total;
        let d1 = (1usize << l) - 2 * g.m();
        ReductionParams {
            k,
            l,
            d0,
            d1,
            d: d0 + d1,
        }
    }
}

/// Block-diagonal extension of the gadget matrix by the d x d identity on
/// pad labels. Dimensions (2n + 4|E| + d) x (n + 5|E| + d).
pub fn build_padded(g: &Graph, k: usize) -> (CommMatrix, ReductionParams) {
    let params = ReductionParams::new(g, k);
    let mut rows = fg_rows(g);
    let mut cols = fg_cols(g);
    rows.extend((1..=params.d).map(|t| RowLabel::Pad { t }));
    cols.extend((1..=params.d).map(|t| ColLabel::Pad { t }));
    let mut m = CommMatrix::new(rows, cols).expect("labels unique by construction");
    let fg = build_fg(g);
    for i in 0..fg.nrows() {
        for j in fg.row_bits(i).iter_ones() {
            m.set(i, j, true);
        }
    }
    for t in 1..=params.d {
        let ri = m.row_index(&RowLabel::Pad { t }).unwrap();
        let cj = m.col_index(&ColLabel::Pad { t }).unwrap();
        m.set(ri, cj, true);
    }
    (m, params)
}

/// The 5 gadget cells of edge e that form a fooling set, as index pairs into
/// m: ((i,0),(e,1)), ((i,1),(e,2)), ((j,0),(e,3)), ((j,1),(e,4)),
/// ((e,1),(e,5)).
pub fn gadget_fooling_cells(m: &CommMatrix, e: (usize, usize)) -> Result<Vec<(usize, usize)>> {
    let (i, j) = e;
    let pairs = [
        (RowLabel::Node { v: i, b: 0 }, ColLabel::Edge { e, c: 1 }),
        (RowLabel::Node { v: i, b: 1 }, ColLabel::Edge { e, c: 2 }),
        (RowLabel::Node { v: j, b: 0 }, ColLabel::Edge { e, c: 3 }),
        (RowLabel::Node { v: j, b: 1 }, ColLabel::Edge { e, c: 4 }),
        (RowLabel::Edge { e, r: 1 }, ColLabel::Edge { e, c: 5 }),
    ];
    pairs
        .iter()
        .map(|(r, c)| {
            let ri = m
                .row_index(r)
                .ok_or_else(|| Error::UnknownLabel(r.to_string()))?;
            let cj = m
                .col_index(c)
                .ok_or_else(|| Error::UnknownLabel(c.to_string()))?;
            Ok((ri, cj))
        })
        .collect()
}

/// The partition of the gadget matrix's 1-cells derived from a vertex cover:
/// per vertex outside the cover one column rectangle, per cover vertex two
/// full-row rectangles, per edge four residual rectangles. Exactly
/// n + 4|E| + |c| rectangles.
pub fn cover_partition(g: &Graph, c: &[usize]) -> Result<OnePartition> {
    if !is_vertex_cover(g, c)? {
        let &(i, j) = g
            .edges()
            .iter()
            .find(|&&(i, j)| !c.contains(&i) && !c.contains(&j))
            .expect("some edge is uncovered");
        return Err(Error::NotACover(i, j));
    }
    let m = build_fg(g);
    let ri = |l: RowLabel| m.row_index(&l).unwrap();
    let cj = |l: ColLabel| m.col_index(&l).unwrap();
    let mut rects = Vec::with_capacity(g.n() + 4 * g.m() + c.len());

    for v in 1..=g.n() {
        if c.contains(&v) {
            // Full-row rectangles: the row against every column where it is 1.
            for b in 0..=1u8 {
                let r = ri(RowLabel::Node { v, b });
                let cols: Vec<usize> = m.row_bits(r).iter_ones().collect();
                rects.push(Rectangle::new(vec![r], cols));
            }
        } else {
            rects.push(Rectangle::new(
                vec![
                    ri(RowLabel::Node { v, b: 0 }),
                    ri(RowLabel::Node { v, b: 1 }),
                ],
                vec![cj(ColLabel::Node { v })],
            ));
        }
    }

    for &e in g.edges() {
        let (i, j) = e;
        let er = |r: u8| ri(RowLabel::Edge { e, r });
        let ec = |cc: u8| cj(ColLabel::Edge { e, c: cc });
        if c.contains(&i) {
            rects.push(Rectangle::new(vec![er(1), er(2)], vec![ec(1), ec(5)]));
            rects.push(Rectangle::new(vec![er(3), er(4)], vec![ec(2), ec(5)]));
            // Node rows of j join only when j is outside the cover; otherwise
            // j's full-row rectangles already cover those cells.
            let mut s3 = vec![er(1), er(3)];
            let mut s4 = vec![er(2), er(4)];
            if !c.contains(&j) {
                s3.push(ri(RowLabel::Node { v: j, b: 0 }));
                s4.push(ri(RowLabel::Node { v: j, b: 1 }));
            }
            rects.push(Rectangle::new(s3, vec![ec(3)]));
            rects.push(Rectangle::new(s4, vec![ec(4)]));
        } else {
            rects.push(Rectangle::new(vec![er(1), er(3)], vec![ec(3), ec(5)]));
            rects.push(Rectangle::new(vec![er(2), er(4)], vec![ec(4), ec(5)]));
            rects.push(Rectangle::new(
                vec![ri(RowLabel::Node { v: i, b: 0 }), er(1), er(2)],
                vec![ec(1)],
            ));
            rects.push(Rectangle::new(
                vec![ri(RowLabel::Node { v: i, b: 1 }), er(3), er(4)],
                vec![ec(2)],
            ));
        }
    }
    Ok(OnePartition { rects })
}
