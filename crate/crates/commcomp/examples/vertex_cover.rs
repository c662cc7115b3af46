//! Exact minimum vertex cover on a few small graphs: parse the text format,
//! solve, and double-check the witness really covers every edge.

use commcomp::graphs::{is_vertex_cover, min_vertex_cover, parse_graph};

fn main() {
    let graphs = [
        ("K2", "2 1\n1 2"),
        ("P3", "3 2\n1 2\n2 3"),
        ("K3", "3 3\n1 2\n1 3\n2 3"),
        ("C5", "5 5\n1 2\n2 3\n3 4\n4 5\n1 5"),
        ("star K1,4", "5 4\n1 2\n1 3\n1 4\n1 5"),
    ];
    for (name, text) in graphs {
        let g = parse_graph(text).unwrap();
        let r = min_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &r.witness).unwrap());
        println!(
            "{:10} n={} |E|={}  kappa={}  cover={:?}",
            name,
            g.n(),
            g.m(),
            r.size,
            r.witness
        );
    }
}
