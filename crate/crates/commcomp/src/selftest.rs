//! Seeded self-check: randomized cross-verification of the solvers,
//! reductions, and protocol identities. Output is deterministic for a given
//! seed, one line per property.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::Graph;
use crate::matrix::{ColLabel, CommMatrix, RowLabel};
use crate::reduction::{build_fg, gadget_fooling_cells};
use crate::solvers::{
    cc_exact, ceil_log2, chi0, chi1, is_fooling_set, l_exact, verify_partition, Budget,
};

pub struct Report {
    pub lines: Vec<String>,
    pub all_passed: bool,
}

impl Report {
    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

/// Run every property `count` times on seeded random inputs with row and
/// column counts up to `max_dim` (leaf-count checks cap the dimension at 5
/// to stay exact).
pub fn property_suite(seed: u64, count: usize, max_dim: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut all_passed = true;
    let mut record = |name: &str, outcome: Result<usize, String>, all: &mut bool| {
        match outcome {
            Ok(cases) => lines.push(format!("PROPERTY {} PASS {} cases", name, cases)),
            Err(detail) => {
                *all = false;
                lines.push(format!("PROPERTY {} FAIL {}", name, detail));
            }
        }
    };

    let r = cc_at_least_log_chi1(&mut rng, count, max_dim);
    record("cc-lower-log-chi1", r, &mut all_passed);
    let r = one_bit_protocols_have_one_rectangle(&mut rng, count, max_dim);
    record("cc-one-bit-single-rectangle", r, &mut all_passed);
    let r = leaves_at_least_chi_sum(&mut rng, count, max_dim.min(5));
    record("leaves-lower-chi-sum", r, &mut all_passed);
    let r = cc_at_most_naming(&mut rng, count, max_dim);
    record("cc-upper-row-naming", r, &mut all_passed);
    let r = chi1_identity_padding_adds(&mut rng, count, max_dim);
    record("chi1-identity-padding", r, &mut all_passed);
    let r = chi1_row_deletion_monotone(&mut rng, count, max_dim);
    record("chi1-row-deletion-monotone", r, &mut all_passed);
    let r = gadget_cells_fool(&mut rng, count);
    record("gadget-fooling-cells", r, &mut all_passed);
    let r = chi1_witness_verifies(&mut rng, count, max_dim);
    record("chi1-witness-verifies", r, &mut all_passed);

    Report { lines, all_passed }
}

fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> CommMatrix {
    let nr = rng.random_range(1..=max_dim);
    let nc = rng.random_range(1..=max_dim);
    let rows: Vec<String> = (0..nr)
        .map(|_| (0..nc).map(|_| if rng.random_bool(0.5) { '1' } else { '0' }).collect())
        .collect();
    let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
    CommMatrix::from_bit_rows(&refs).unwrap()
}

fn nonconstant_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> CommMatrix {
    loop {
        let m = random_matrix(rng, max_dim);
        if !m.is_constant() && m.nrows() * m.ncols() > 1 {
            return m;
        }
    }
}

fn describe(m: &CommMatrix) -> String {
    let rows: Vec<String> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| if m.get(i, j) { '1' } else { '0' }).collect())
        .collect();
    rows.join("/")
}

fn cc_at_least_log_chi1(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    for _ in 0..count {
        let m = nonconstant_matrix(rng, max_dim);
        let chi = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let cc = cc_exact(&m, None, Budget::unlimited()).map_err(|e| e.to_string())?;
        let (chi, cc) = (chi.exact().unwrap(), cc.exact().unwrap());
        if cc < ceil_log2(chi) + 1 {
            return Err(format!("cc {} < log bound of chi1 {} on {}", cc, chi, describe(&m)));
        }
    }
    Ok(count)
}

fn one_bit_protocols_have_one_rectangle(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    let mut hits = 0;
    for _ in 0..count {
        let m = nonconstant_matrix(rng, max_dim);
        let cc = cc_exact(&m, None, Budget::unlimited()).map_err(|e| e.to_string())?;
        if cc.exact() == Some(1) {
            hits += 1;
            let chi = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
            if chi.exact() != Some(1) {
                return Err(format!("cc 1 but chi1 {:?} on {}", chi.exact(), describe(&m)));
            }
        }
    }
    Ok(hits)
}

fn leaves_at_least_chi_sum(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    for _ in 0..count {
        let m = nonconstant_matrix(rng, max_dim);
        let c1 = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let c0 = chi0(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let l = l_exact(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let (c1, c0, l) = (c1.exact().unwrap(), c0.exact().unwrap(), l.exact().unwrap());
        if l < c1 + c0 {
            return Err(format!(
                "leaves {} < chi1 {} + chi0 {} on {}",
                l, c1, c0, describe(&m)
            ));
        }
    }
    Ok(count)
}

fn cc_at_most_naming(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    for _ in 0..count {
        let m = nonconstant_matrix(rng, max_dim);
        let cc = cc_exact(&m, None, Budget::unlimited()).map_err(|e| e.to_string())?;
        let cc = cc.exact().unwrap();
        let mut rows: Vec<&crate::bitset::Bits> = (0..m.nrows()).map(|i| m.row_bits(i)).collect();
        rows.sort_by_key(|b| b.words().to_vec());
        rows.dedup_by_key(|b| b.words().to_vec());
        let bound = ceil_log2(rows.len()) + 1;
        if cc > bound {
            return Err(format!("cc {} > naming bound {} on {}", cc, bound, describe(&m)));
        }
    }
    Ok(count)
}

fn chi1_identity_padding_adds(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    for _ in 0..count {
        let m = random_matrix(rng, max_dim);
        if m.ones_count() == 0 {
            continue;
        }
        let d = rng.random_range(1..=8);
        let mut rows: Vec<RowLabel> = m.rows().to_vec();
        let mut cols: Vec<ColLabel> = m.cols().to_vec();
        rows.extend((1..=d).map(|t| RowLabel::Pad { t: m.nrows() + t }));
        cols.extend((1..=d).map(|t| ColLabel::Pad { t: m.ncols() + t }));
        let mut padded = CommMatrix::new(rows, cols).unwrap();
        for i in 0..m.nrows() {
            for j in m.row_bits(i).iter_ones() {
                padded.set(i, j, true);
            }
        }
        for t in 0..d {
            padded.set(m.nrows() + t, m.ncols() + t, true);
        }
        let base = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let ext = chi1(&padded, Budget::unlimited()).map_err(|e| e.to_string())?;
        let (base, ext) = (base.exact().unwrap(), ext.exact().unwrap());
        if ext != base + d {
            return Err(format!(
                "chi1 {} + {} identity rows gave {} on {}",
                base, d, ext, describe(&m)
            ));
        }
    }
    Ok(count)
}

fn chi1_row_deletion_monotone(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..count {
        let m = random_matrix(rng, max_dim);
        if m.nrows() < 2 || m.ones_count() == 0 {
            continue;
        }
        let drop = rng.random_range(0..m.nrows());
        let keep: Vec<usize> = (0..m.nrows()).filter(|&i| i != drop).collect();
        let sub = m.submatrix(&keep, &(0..m.ncols()).collect::<Vec<_>>());
        if sub.ones_count() == 0 {
            continue;
        }
        cases += 1;
        let full = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        let less = chi1(&sub, Budget::unlimited()).map_err(|e| e.to_string())?;
        if less.exact().unwrap() > full.exact().unwrap() {
            return Err(format!(
                "chi1 grew from {} to {} after deleting row {} of {}",
                full.exact().unwrap(),
                less.exact().unwrap(),
                drop,
                describe(&m)
            ));
        }
    }
    Ok(cases)
}

fn gadget_cells_fool(rng: &mut ChaCha8Rng, count: usize) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..count {
        let n = rng.random_range(2..=5);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.random_bool(0.4) {
                    edges.push((i, j));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let g = Graph::new(n, edges).unwrap();
        let m = build_fg(&g);
        for &e in g.edges() {
            cases += 1;
            let cells = gadget_fooling_cells(&m, e).map_err(|e| e.to_string())?;
            let ok = is_fooling_set(&m, &cells).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("gadget cells of edge {:?} are not fooling", e));
            }
        }
    }
    Ok(cases)
}

fn chi1_witness_verifies(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_dim: usize,
) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..count {
        let m = random_matrix(rng, max_dim);
        if m.ones_count() == 0 {
            continue;
        }
        cases += 1;
        let r = chi1(&m, Budget::unlimited()).map_err(|e| e.to_string())?;
        if r.witness.rects.len() != r.exact().unwrap() {
            return Err(format!("witness size mismatch on {}", describe(&m)));
        }
        if !verify_partition(&m, &r.witness).map_err(|e| e.to_string())? {
            return Err(format!("witness failed verification on {}", describe(&m)));
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_and_is_deterministic() {
        let a = property_suite(7, 40, 5);
        let b = property_suite(7, 40, 5);
        assert!(a.all_passed, "{}", a.text());
        assert_eq!(a.text(), b.text());
        assert_eq!(a.lines.len(), 8);
        for line in &a.lines {
            assert!(line.starts_with("PROPERTY "));
            assert!(line.contains(" PASS "));
        }
    }

    #[test]
    fn different_seeds_still_pass() {
        for seed in [0, 1, 99] {
            let r = property_suite(seed, 15, 4);
            assert!(r.all_passed, "{}", r.text());
        }
    }
}
