//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criterion 3 asserts, besides the decision verdicts, that the certified
//! depth sandwich closes at l+2 whenever kappa <= k. That claim is false at
//! the tight threshold kappa = k when min(n, |E|) > k: for (P3, k=1) an
//! exhaustive depth-capped search proves CC(f') = l+3, yet the only general
//! lower bound available is l+2. The sub-assertion is kept as stated and
//! fails honestly on those pairs rather than being weakened to match the
//! implementation.

mod support;

use std::time::Instant;

use commcomp::graphs::{min_vertex_cover, parse_graph, Graph};
use commcomp::matrix::CommMatrix;
use commcomp::pipeline::{decide_vc_via_cc, Verdict};
use commcomp::protocols::{binarize, build_explicit_protocol, metrics, verify_protocol};
use commcomp::reduction::{build_fg, build_padded, cover_partition, gadget_fooling_cells};
use commcomp::solvers::{cc_exact, chi1, is_fooling_set, l_exact, verify_partition, Budget};
use support::{cc_brute, chi1_brute, l_brute, vc_brute, Lcg};

fn k2() -> Graph {
    parse_graph("2 1\n1 2").unwrap()
}

fn p3() -> Graph {
    parse_graph("3 2\n1 2\n2 3").unwrap()
}

fn k3() -> Graph {
    parse_graph("3 3\n1 2\n1 3\n2 3").unwrap()
}

/// One representative per isomorphism class, n <= 4.
fn suite() -> Vec<(&'static str, Graph)> {
    let g = |t: &str| parse_graph(t).unwrap();
    vec![
        ("K1", g("1 0")),
        ("E2", g("2 0")),
        ("K2", k2()),
        ("E3", g("3 0")),
        ("e3", g("3 1\n1 2")),
        ("P3", p3()),
        ("K3", k3()),
        ("E4", g("4 0")),
        ("e4", g("4 1\n1 2")),
        ("2K2", g("4 2\n1 2\n3 4")),
        ("P3+v", g("4 2\n1 2\n2 3")),
        ("K1,3", g("4 3\n1 2\n1 3\n1 4")),
        ("P4", g("4 3\n1 2\n2 3\n3 4")),
        ("K3+v", g("4 3\n1 2\n1 3\n2 3")),
        ("paw", g("4 4\n1 2\n1 3\n2 3\n3 4")),
        ("C4", g("4 4\n1 2\n2 3\n3 4\n1 4")),
        ("diamond", g("4 5\n1 2\n1 3\n2 3\n2 4\n3 4")),
        ("K4", g("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4")),
    ]
}

#[test]
fn criterion_1_chi1_reduction_identity() {
    for (name, g, want) in [("K2", k2(), 7), ("P3", p3(), 12)] {
        let t0 = Instant::now();
        let chi = chi1(&build_fg(&g), Budget::unlimited()).unwrap();
        let kappa = min_vertex_cover(&g).size;
        let elapsed = t0.elapsed();
        let ok = chi.exact() == Some(want)
            && want == g.n() + 4 * g.m() + kappa
            && elapsed.as_secs() < 60;
        println!(
            "ACCEPTANCE 1 chi1(f_{}) = {:?} (want {}) in {:?} {}",
            name,
            chi.exact(),
            want,
            elapsed,
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok);
    }
    // Stretch target, reported but non-gating on time; the value must still
    // be right if the solver finishes.
    let t0 = Instant::now();
    let chi = chi1(&build_fg(&k3()), Budget::seconds(540.0)).unwrap();
    match chi.exact() {
        Some(v) => {
            println!("ACCEPTANCE 1 stretch chi1(f_K3) = {} in {:?}", v, t0.elapsed());
            assert_eq!(v, 17);
        }
        None => println!(
            "ACCEPTANCE 1 stretch chi1(f_K3) inconclusive [{}, {}] in {:?}",
            chi.lower,
            chi.upper,
            t0.elapsed()
        ),
    }
}

#[test]
fn criterion_2_padding_identities() {
    let cases = [(k2(), 0), (k2(), 1), (k2(), 2), (k3(), 1), (k3(), 2), (k3(), 3)];
    for (g, k) in cases {
        let t0 = Instant::now();
        let kappa = min_vertex_cover(&g).size;
        let (fp, params) = build_padded(&g, k);
        let chi = chi1(&fp, Budget::unlimited()).unwrap();
        let want = (1usize << (params.l + 1)) + kappa - k;
        let elapsed = t0.elapsed();
        let ok = chi.exact() == Some(want) && elapsed.as_secs() < 60;
        println!(
            "ACCEPTANCE 2 chi1(f') = {:?} (want 2^{} + {} - {} = {}) for n={} |E|={} k={} in {:?} {}",
            chi.exact(),
            params.l + 1,
            kappa,
            k,
            want,
            g.n(),
            g.m(),
            k,
            elapsed,
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok);
    }
}

#[test]
fn criterion_3_decision_procedure() {
    let t0 = Instant::now();
    let mut verdict_failures = Vec::new();
    let mut tight_failures = Vec::new();
    let mut exceed_failures = Vec::new();
    for (name, g) in suite() {
        let kappa = min_vertex_cover(&g).size;
        for k in 0..=g.n() {
            let r = decide_vc_via_cc(&g, k, Budget::unlimited()).unwrap();
            let want = if kappa <= k { Verdict::AtMost } else { Verdict::Exceeds };
            if r.verdict != Some(want) {
                verdict_failures.push(format!("{} k={}: verdict {:?}", name, k, r.verdict));
            }
            let l = r.params.l as usize;
            if kappa <= k && !(r.certified && r.cc_lower == l + 2) {
                tight_failures.push(format!(
                    "{} k={}: cc in [{}, {}], want certified {}",
                    name,
                    k,
                    r.cc_lower,
                    r.cc_upper,
                    l + 2
                ));
            }
            if kappa > k && r.cc_lower != l + 3 {
                exceed_failures.push(format!(
                    "{} k={}: cc_lower {} want {}",
                    name,
                    k,
                    r.cc_lower,
                    l + 3
                ));
            }
        }
    }
    let elapsed = t0.elapsed();
    let in_time = elapsed.as_secs() < 600;
    println!(
        "ACCEPTANCE 3 verdict matches kappa<=k on all n<=4 graphs x k in 0..=n {}",
        if verdict_failures.is_empty() { "PASS" } else { "FAIL" }
    );
    for f in &verdict_failures {
        println!("ACCEPTANCE 3   verdict: {}", f);
    }
    println!(
        "ACCEPTANCE 3 certified depth l+2 whenever kappa<=k {}",
        if tight_failures.is_empty() { "PASS" } else { "FAIL" }
    );
    for f in &tight_failures {
        println!("ACCEPTANCE 3   tight: {}", f);
    }
    println!(
        "ACCEPTANCE 3 lower bound l+3 whenever kappa>k {}",
        if exceed_failures.is_empty() { "PASS" } else { "FAIL" }
    );
    for f in &exceed_failures {
        println!("ACCEPTANCE 3   exceeds: {}", f);
    }
    println!(
        "ACCEPTANCE 3 suite runtime {:?} {}",
        elapsed,
        if in_time { "PASS" } else { "FAIL" }
    );
    assert!(verdict_failures.is_empty() && exceed_failures.is_empty() && in_time);
    // Known-unattainable at the tight threshold: CC(f') = l+3 when kappa = k
    // and min(n, |E|) > k (proved by exhaustive depth search on the smallest
    // such instance), so no certificate at l+2 can exist. Asserted anyway;
    // see the module comment.
    assert!(
        tight_failures.is_empty(),
        "tight-threshold certification failed on {} pairs",
        tight_failures.len()
    );
}

#[test]
fn criterion_4_explicit_protocol() {
    for (name, g, cover) in [("K2", k2(), vec![1]), ("K3", k3(), vec![1, 2])] {
        let m = build_fg(&g);
        let p = build_explicit_protocol(&g, &cover, None).unwrap();
        let verified = verify_protocol(&p, &m).unwrap();
        let mm = metrics(&p);
        let left = 2 * g.n() + 4 * g.m() + 2 * cover.len();
        let right = 4 * g.m();
        let b = binarize(&p);
        let bin_verified = verify_protocol(&b, &m).unwrap();
        let bm = metrics(&b);
        let bound = ceil_log2(g.n() + 2 * g.m() + cover.len()) + 2;
        let ok = verified
            && bin_verified
            && mm.useful_leaf_count == left + right
            && bm.depth == mm.binary_depth
            && bm.depth <= bound;
        println!(
            "ACCEPTANCE 4 {} cover {:?}: verified={} useful leaves {} (want {}+{}) binarized depth {} (bound {}) {}",
            name,
            cover,
            verified && bin_verified,
            mm.useful_leaf_count,
            left,
            right,
            bm.depth,
            bound,
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok);
    }
}

fn ceil_log2(x: usize) -> usize {
    x.next_power_of_two().trailing_zeros() as usize
}

#[test]
fn criterion_5_log_chi1_lower_bound() {
    let t0 = Instant::now();
    let mut rng = Lcg(5);
    let mut checked = 0;
    while checked < 250 {
        let m = rng.matrix(6);
        if m.is_constant() {
            continue;
        }
        checked += 1;
        let chi = chi1(&m, Budget::unlimited()).unwrap().exact().unwrap();
        let cc = cc_exact(&m, None, Budget::unlimited()).unwrap().exact().unwrap();
        assert!(
            cc >= ceil_log2(chi) + 1,
            "cc {} < ceil(log {}) + 1 on {:?}",
            cc,
            chi,
            m
        );
    }
    let elapsed = t0.elapsed();
    let ok = elapsed.as_secs() < 600;
    println!(
        "ACCEPTANCE 5 cc >= ceil(log chi1)+1 on {} random non-constant matrices up to 6x6 in {:?} {}",
        checked,
        elapsed,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
}

#[test]
fn criterion_6_oracle_equivalence() {
    // Fixed 50-matrix suite with at most 12 ones for the partition oracle.
    let mut rng = Lcg(6);
    let mut suite_n = 0;
    while suite_n < 50 {
        let m = rng.matrix(5);
        if m.ones_count() == 0 || m.ones_count() > 12 {
            continue;
        }
        suite_n += 1;
        let fast = chi1(&m, Budget::unlimited()).unwrap().exact().unwrap();
        let brute = chi1_brute(&m);
        assert_eq!(fast, brute, "chi1 mismatch on {:?}", m);
    }
    // Every matrix up to 3x3 for the depth and leaf oracles.
    let mut depth_n = 0;
    for nr in 1..=3usize {
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
                depth_n += 1;
                let cc = cc_exact(&m, None, Budget::unlimited()).unwrap().exact().unwrap();
                assert_eq!(cc, cc_brute(&m), "cc mismatch on {:?}", m);
                let l = l_exact(&m, Budget::unlimited()).unwrap().exact().unwrap();
                assert_eq!(l, l_brute(&m), "leaves mismatch on {:?}", m);
            }
        }
    }
    println!(
        "ACCEPTANCE 6 chi1 = brute on {} matrices (<=12 ones); cc and leaves = brute on all {} matrices up to 3x3 PASS",
        suite_n, depth_n
    );
}

#[test]
fn criterion_7_gadget_certification() {
    let mut fooling_n = 0;
    let mut partition_n = 0;
    for (name, g) in suite() {
        let vc = min_vertex_cover(&g);
        let (bsize, _) = vc_brute(&g);
        assert_eq!(vc.size, bsize, "vertex cover size mismatch on {}", name);
        let m = build_fg(&g);
        for &e in g.edges() {
            let cells = gadget_fooling_cells(&m, e).unwrap();
            assert!(
                is_fooling_set(&m, &cells).unwrap(),
                "gadget cells not fooling for {} edge {:?}",
                name,
                e
            );
            fooling_n += 1;
        }
        let p = cover_partition(&g, &vc.witness).unwrap();
        assert_eq!(p.len(), g.n() + 4 * g.m() + vc.size, "partition size on {}", name);
        assert!(verify_partition(&m, &p).unwrap(), "partition invalid on {}", name);
        partition_n += 1;
    }
    println!(
        "ACCEPTANCE 7 {} edge gadgets fool; {} cover partitions verify at size n+4|E|+|C| PASS",
        fooling_n, partition_n
    );
}
