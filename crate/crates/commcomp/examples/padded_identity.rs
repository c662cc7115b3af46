//! Identity padding moves the decision threshold to a power of two: for the
//! padded matrix f', chi1(f') = 2^{l+1} + kappa(G) - k, so kappa(G) <= k
//! exactly when chi1(f') <= 2^{l+1}.

use commcomp::graphs::{min_vertex_cover, parse_graph};
use commcomp::reduction::build_padded;
use commcomp::solvers::{chi1, Budget};

fn main() {
    let g = parse_graph("2 1\n1 2").unwrap();
    let kappa = min_vertex_cover(&g).size;
    for k in 0..=2usize {
        let (fp, p) = build_padded(&g, k);
        let chi = chi1(&fp, Budget::unlimited()).unwrap().exact().unwrap();
        let want = (1usize << (p.l + 1)) + kappa - k;
        assert_eq!(chi, want);
        println!(
            "K2, k={}: l={} d0={} d1={}  f' is {}x{}  chi1 = {} = 2^{} + {} - {}  ({})",
            k,
            p.l,
            p.d0,
            p.d1,
            fp.nrows(),
            fp.ncols(),
            chi,
            p.l + 1,
            kappa,
            k,
            if chi <= 1 << (p.l + 1) { "kappa <= k" } else { "kappa > k" }
        );
    }
}
