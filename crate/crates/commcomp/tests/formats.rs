//! Property tests for the three text formats: graph, matrix, and protocol.
//! Serialization is canonical, so every round trip must reproduce the value
//! exactly (and re-serialization must be byte-identical).

use std::collections::BTreeMap;

use proptest::prelude::*;

use commcomp::graphs::{parse_graph, Graph};
use commcomp::matrix::{parse_matrix, ColLabel, CommMatrix, RowLabel};
use commcomp::protocols::{parse_protocol, serialize_protocol, Assignment, Node, Protocol, Tree};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let count = pairs.len();
        prop::collection::vec(any::<bool>(), count..=count).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&keep)
                .filter_map(|(&e, &k)| k.then_some(e))
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Distinct-by-construction row label: the index is embedded in the numeric
/// payload, the kind selector only varies the shape.
fn row_label(idx: usize, kind: u8) -> RowLabel {
    match kind % 3 {
        0 => RowLabel::Node {
            v: idx + 1,
            b: (kind / 3) % 2,
        },
        1 => RowLabel::Edge {
            e: (idx + 1, idx + 2),
            r: (kind / 3) % 4 + 1,
        },
        _ => RowLabel::Pad { t: idx + 1 },
    }
}

fn col_label(idx: usize, kind: u8) -> ColLabel {
    match kind % 3 {
        0 => ColLabel::Node { v: idx + 1 },
        1 => ColLabel::Edge {
            e: (idx + 1, idx + 2),
            c: (kind / 3) % 5 + 1,
        },
        _ => ColLabel::Pad { t: idx + 1 },
    }
}

fn matrix_strategy() -> impl Strategy<Value = CommMatrix> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(any::<u8>(), r),
            prop::collection::vec(any::<u8>(), c),
            prop::collection::vec(any::<bool>(), r * c),
        )
            .prop_map(move |(rkinds, ckinds, cells)| {
                let rows: Vec<RowLabel> = rkinds
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| row_label(i, k))
                    .collect();
                let cols: Vec<ColLabel> = ckinds
                    .iter()
                    .enumerate()
                    .map(|(j, &k)| col_label(j, k))
                    .collect();
                let mut m = CommMatrix::new(rows, cols).unwrap();
                for i in 0..r {
                    for j in 0..c {
                        if cells[i * c + j] {
                            m.set(i, j, true);
                        }
                    }
                }
                m
            })
    })
}

fn tree_strategy() -> impl Strategy<Value = Tree> {
    let leaf = any::<bool>().prop_map(Tree::Leaf);
    leaf.prop_recursive(3, 32, 4, |inner| {
        (
            any::<bool>(),
            prop::collection::vec(inner, 2..=4),
            prop::collection::btree_map(0u8..12, 0usize..4, 0..6),
        )
            .prop_map(|(on_rows, children, picks)| {
                let n = children.len();
                let assignment = if on_rows {
                    let map: BTreeMap<RowLabel, usize> = picks
                        .iter()
                        .map(|(&code, &child)| (row_label(code as usize, code), child % n))
                        .collect();
                    Assignment::Rows(map)
                } else {
                    let map: BTreeMap<ColLabel, usize> = picks
                        .iter()
                        .map(|(&code, &child)| (col_label(code as usize, code), child % n))
                        .collect();
                    Assignment::Cols(map)
                };
                Tree::Node(Node {
                    assignment,
                    children,
                })
            })
    })
}

proptest! {
    #[test]
    fn graph_text_round_trips(g in graph_strategy()) {
        let back = parse_graph(&g.to_text()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.to_text(), g.to_text());
    }

    #[test]
    fn matrix_text_round_trips(m in matrix_strategy()) {
        let text = m.to_text();
        let back = parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn bit_rows_round_trip_with_synthesized_labels(
        rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 1..=9), 1..=9)
    ) {
        let width = rows[0].len();
        let strings: Vec<String> = rows
            .iter()
            .map(|r| r.iter().take(width).map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        let padded: Vec<String> = strings
            .iter()
            .map(|s| format!("{:0<width$}", s, width = width))
            .collect();
        let refs: Vec<&str> = padded.iter().map(|s| s.as_str()).collect();
        let m = CommMatrix::from_bit_rows(&refs).unwrap();
        let back = parse_matrix(&m.to_text()).unwrap();
        prop_assert_eq!(&back, &m);
    }

    #[test]
    fn row_labels_round_trip(idx in 0usize..40, kind in any::<u8>()) {
        let l = row_label(idx, kind);
        let back: RowLabel = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn col_labels_round_trip(idx in 0usize..40, kind in any::<u8>()) {
        let l = col_label(idx, kind);
        let back: ColLabel = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn protocol_text_round_trips(tree in tree_strategy()) {
        let p = Protocol { rows: Vec::new(), cols: Vec::new(), tree };
        let text = serialize_protocol(&p);
        let back = parse_protocol(&text).unwrap();
        prop_assert_eq!(&back.tree, &p.tree);
        // Canonical writer: re-serialization is byte-identical.
        prop_assert_eq!(serialize_protocol(&back), text);
        // Parsed universes are exactly the labels mentioned in the tree.
        prop_assert!(back.rows.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(back.cols.windows(2).all(|w| w[0] < w[1]));
    }
}
