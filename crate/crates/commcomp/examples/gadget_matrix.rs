//! Build the gadget matrix of a graph and show its structure: per-vertex
//! diagonal block, one 8x5 gadget per edge, and the counting identities
//! (2n + 4|E|) x (n + 5|E|) with 2n + 16|E| ones.

use commcomp::graphs::parse_graph;
use commcomp::reduction::build_fg;

fn main() {
    let g = parse_graph("3 2\n1 2\n2 3").unwrap();
    let m = build_fg(&g);
    assert_eq!(m.nrows(), 2 * g.n() + 4 * g.m());
    assert_eq!(m.ncols(), g.n() + 5 * g.m());
    assert_eq!(m.ones_count(), 2 * g.n() + 16 * g.m());
    println!(
        "P3 gadget matrix: {}x{}, {} ones",
        m.nrows(),
        m.ncols(),
        m.ones_count()
    );
    print!("{}", m.to_text());
}
