//! Derive a disjoint 1-rectangle partition of the gadget matrix from a vertex
//! cover and verify it. The partition has exactly n + 4|E| + |C| rectangles,
//! which upper-bounds the 1-partition number.

use commcomp::graphs::parse_graph;
use commcomp::reduction::{build_fg, cover_partition};
use commcomp::solvers::verify_partition;

fn main() {
    let g = parse_graph("3 2\n1 2\n2 3").unwrap();
    let cover = vec![2];
    let m = build_fg(&g);
    let p = cover_partition(&g, &cover).unwrap();
    assert_eq!(p.len(), g.n() + 4 * g.m() + cover.len());
    assert!(verify_partition(&m, &p).unwrap());
    println!(
        "P3 with cover {:?}: {} disjoint all-ones rectangles cover all {} ones",
        cover,
        p.len(),
        m.ones_count()
    );
    for rect in &p.rects {
        let rows: Vec<String> = rect.rows().iter().map(|&i| m.rows()[i].to_string()).collect();
        let cols: Vec<String> = rect.cols().iter().map(|&j| m.cols()[j].to_string()).collect();
        println!("  [{}] x [{}]", rows.join(" "), cols.join(" "));
    }
}
