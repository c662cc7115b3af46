//! The reduction's counting identity: the exact 1-partition number of the
//! gadget matrix equals n + 4|E| + kappa(G), tying an NP-hard graph quantity
//! to a communication measure.

use commcomp::graphs::{min_vertex_cover, parse_graph};
use commcomp::reduction::build_fg;
use commcomp::solvers::{chi1, Budget};

fn main() {
    let graphs = [
        ("K2", "2 1\n1 2"),
        ("P3", "3 2\n1 2\n2 3"),
        ("K3", "3 3\n1 2\n1 3\n2 3"),
    ];
    for (name, text) in graphs {
        let g = parse_graph(text).unwrap();
        let kappa = min_vertex_cover(&g).size;
        let m = build_fg(&g);
        let chi = chi1(&m, Budget::unlimited()).unwrap();
        let want = g.n() + 4 * g.m() + kappa;
        assert_eq!(chi.exact(), Some(want));
        println!(
            "{:3} chi1(f_G) = {:2} = {} + 4*{} + {} (n + 4|E| + kappa)",
            name,
            want,
            g.n(),
            g.m(),
            kappa
        );
    }
}
