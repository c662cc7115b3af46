//! L(f) >= chi1(f) + chi0(f) always holds, but L(f) >= 2*chi1(f) does not:
//! search small matrices for counterexamples. The first hit is the 2x2
//! greater-than function [[1,0],[1,1]] with L = 3 < 4 = 2*chi1.

use commcomp::matrix::CommMatrix;
use commcomp::solvers::{chi0, chi1, l_exact, Budget};

fn main() {
    let mut found = 0;
    'outer: for nr in 1..=3usize {
        for nc in 1..=3usize {
            for bits in 0..1u32 << (nr * nc) {
                let rows: Vec<String> = (0..nr)
                    .map(|i| {
                        (0..nc)
                            .map(|j| if bits >> (i * nc + j) & 1 == 1 { '1' } else { '0' })
                            .collect()
                    })
                    .collect();
                let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
                let m = CommMatrix::from_bit_rows(&refs).unwrap();
                if m.is_constant() {
                    continue;
                }
                let c1 = chi1(&m, Budget::unlimited()).unwrap().exact().unwrap();
                let c0 = chi0(&m, Budget::unlimited()).unwrap().exact().unwrap();
                let l = l_exact(&m, Budget::unlimited()).unwrap().exact().unwrap();
                assert!(l >= c1 + c0);
                if l < 2 * c1 {
                    println!(
                        "L = {} < {} = 2*chi1 (chi0 = {}) for {}x{} matrix {}",
                        l,
                        2 * c1,
                        c0,
                        nr,
                        nc,
                        rows.join("/")
                    );
                    found += 1;
                    if found >= 5 {
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(found > 0, "greater-than matrices refute L >= 2*chi1");
}
