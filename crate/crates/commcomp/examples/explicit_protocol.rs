//! Build the cover-driven protocol for a gadget matrix, verify it computes
//! the matrix on every input pair, inspect its metrics, and binarize it.

use commcomp::protocols::{binarize, build_explicit_protocol, metrics, verify_protocol};
use commcomp::graphs::parse_graph;
use commcomp::reduction::build_fg;

fn main() {
    let g = parse_graph("3 3\n1 2\n1 3\n2 3").unwrap();
    let cover = vec![1, 2];
    let p = build_explicit_protocol(&g, &cover, None).unwrap();
    let m = build_fg(&g);
    assert!(verify_protocol(&p, &m).unwrap());

    let mm = metrics(&p);
    println!(
        "K3 with cover {:?}: depth {} (multiway), binary depth {}, {} leaves",
        cover, mm.depth, mm.binary_depth, mm.leaf_count
    );
    // Left subtree has 2n + 4|E| + 2|C| leaves, right subtree 4|E|.
    assert_eq!(
        mm.useful_leaf_count,
        2 * g.n() + 4 * g.m() + 2 * cover.len() + 4 * g.m()
    );

    let b = binarize(&p);
    assert!(verify_protocol(&b, &m).unwrap());
    let bm = metrics(&b);
    assert_eq!(bm.depth, mm.binary_depth);
    println!(
        "binarized: depth {}, {} leaves ({} useful, {} dangling)",
        bm.depth, bm.leaf_count, bm.useful_leaf_count, bm.unused_leaf_count
    );
}
