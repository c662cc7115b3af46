//! Undirected simple graphs and an exact minimum vertex cover solver.

use crate::error::{Error, Result};

/// Undirected simple graph on vertices 1..=n with a normalized edge list.
///
/// Edges are stored as (i, j) with i < j, sorted lexicographically, no
/// duplicates. All iteration over edges is in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing edge endpoint order and checking ranges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (a, b) in edges {
            let (i, j) = check_edge(n, a, b, None)?;
            norm.push((i, j));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse(0, format!("duplicate edge {} {}", w[0].0, w[0].1)));
        }
        Ok(Graph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized pairs (i, j), i < j, lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    /// Serializes to the graph file format ("n m" header then one edge per line).
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(i, j) in &self.edges {
            s.push_str(&format!("{} {}\n", i, j));
        }
        s
    }
}

fn check_edge(n: usize, a: usize, b: usize, line: Option<usize>) -> Result<(usize, usize)> {
    let bad = |v: usize| match line {
        Some(line) => Error::parse(line, format!("vertex {} out of range 1..={}", v, n)),
        None => Error::VertexOutOfRange { v, n },
    };
    if a < 1 || a > n {
        return Err(bad(a));
    }
    if b < 1 || b > n {
        return Err(bad(b));
    }
    if a == b {
        return Err(match line {
            Some(line) => Error::parse(line, format!("self-loop at vertex {}", a)),
            None => Error::parse(0, format!("self-loop at vertex {}", a)),
        });
    }
    Ok((a.min(b), a.max(b)))
}

/// Parses the graph file format: "n m" header, then m lines "i j".
/// Blank lines and lines starting with '#' are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected \"n m\" header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(hline, "malformed header, expected \"n m\""))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(hline, "malformed header, expected \"n m\""))?;
    if it.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens after \"n m\" header"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (line, l) in lines {
        let mut it = l.split_whitespace();
        let a: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(line, "malformed edge, expected \"i j\""))?;
        let b: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(line, "malformed edge, expected \"i j\""))?;
        if it.next().is_some() {
            return Err(Error::parse(line, "trailing tokens after edge"));
        }
        let e = check_edge(n, a, b, Some(line))?;
        if !seen.insert(e) {
            return Err(Error::parse(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header promised {} edges, found {}", m, edges.len()),
        ));
    }
    edges.sort_unstable();
    Ok(Graph { n, edges })
}

/// True iff every edge has at least one endpoint in `c`.
pub fn is_vertex_cover(g: &Graph, c: &[usize]) -> Result<bool> {
    for &v in c {
        if v < 1 || v > g.n {
            return Err(Error::VertexOutOfRange { v, n: g.n });
        }
    }
    Ok(g.edges
        .iter()
        .all(|&(i, j)| c.contains(&i) || c.contains(&j)))
}

/// Exact minimum vertex cover with a deterministic witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverResult {
    pub size: usize,
    /// Lexicographically smallest optimal cover, sorted ascending.
    pub witness: Vec<usize>,
}

/// Branch and bound: pick a maximum-degree vertex v of the residual graph
/// (lowest index on ties) and branch on "v in the cover" vs "all neighbors of
/// v in the cover"; a greedy matching lower-bounds the residual cost. Among
/// optimal covers the lexicographically smallest one is returned.
pub fn min_vertex_cover(g: &Graph) -> VertexCoverResult {
    let mut best = VertexCoverResult {
        size: g.n,
        witness: (1..=g.n).collect(),
    };
    if g.edges.is_empty() {
        return VertexCoverResult {
            size: 0,
            witness: Vec::new(),
        };
    }
    let mut chosen = Vec::new();
    branch(g, &g.edges.to_vec(), &mut chosen, &mut best);
    best
}

fn matching_lower_bound(edges: &[(usize, usize)]) -> usize {
    let mut used = std::collections::BTreeSet::new();
    let mut m = 0;
    for &(i, j) in edges {
        if !used.contains(&i) && !used.contains(&j) {
            used.insert(i);
            used.insert(j);
            m += 1;
        }
    }
    m
}

fn branch(
    g: &Graph,
    residual: &[(usize, usize)],
    chosen: &mut Vec<usize>,
    best: &mut VertexCoverResult,
) {
    if residual.is_empty() {
        let mut witness = chosen.clone();
        witness.sort_unstable();
        if chosen.len() < best.size || (chosen.len() == best.size && witness < best.witness) {
            *best = VertexCoverResult {
                size: chosen.len(),
                witness,
            };
        }
        return;
    }
    // Prune only strictly worse partial solutions so ties can still improve
    // the witness lexicographically.
    if chosen.len() + matching_lower_bound(residual) > best.size {
        return;
    }
    let mut deg = vec![0usize; g.n + 1];
    for &(i, j) in residual {
        deg[i] += 1;
        deg[j] += 1;
    }
    let v = (1..=g.n).max_by_key(|&v| deg[v]).unwrap();
    let neighbors: Vec<usize> = residual
        .iter()
        .filter_map(|&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
        .collect();

    let without: Vec<(usize, usize)> = residual
        .iter()
        .copied()
        .filter(|&(i, j)| i != v && j != v)
        .collect();
    chosen.push(v);
    branch(g, &without, chosen, best);
    chosen.pop();

    let without_nbrs: Vec<(usize, usize)> = residual
        .iter()
        .copied()
        .filter(|&(i, j)| !neighbors.contains(&i) && !neighbors.contains(&j))
        .collect();
    let added = neighbors.len();
    chosen.extend(neighbors);
    branch(g, &without_nbrs, chosen, best);
    chosen.truncate(chosen.len() - added);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges = (1..n).map(|i| (i, i + 1)).chain([(1, n)]);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn parse_basic() {
        let g = parse_graph("2 1\n1 2").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(1, 2)]);
        let g = parse_graph("3 0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
        let g = parse_graph("3 3\n1 2\n2 3\n1 3").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn parse_comments_and_normalization() {
        let g = parse_graph("# triangle\n3 3\n2 1\n\n3 2\n# middle\n3 1\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("2 1\n1 3"),
            Err(Error::parse(2, "vertex 3 out of range 1..=2"))
        );
        assert_eq!(
            parse_graph("2 1\n1 1"),
            Err(Error::parse(2, "self-loop at vertex 1"))
        );
        assert_eq!(
            parse_graph("2 2\n1 2\n2 1"),
            Err(Error::parse(3, "duplicate edge 1 2"))
        );
        assert!(matches!(parse_graph("x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 3\n1 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph_text_round_trip() {
        let g = cycle(5);
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn cover_check() {
        let g = k(3);
        assert!(is_vertex_cover(&g, &[1, 2]).unwrap());
        assert!(!is_vertex_cover(&g, &[1]).unwrap());
        let empty = Graph::new(2, []).unwrap();
        assert!(is_vertex_cover(&empty, &[]).unwrap());
        assert_eq!(
            is_vertex_cover(&g, &[4]),
            Err(Error::VertexOutOfRange { v: 4, n: 3 })
        );
    }

    #[test]
    fn min_cover_small() {
        assert_eq!(min_vertex_cover(&k(2)).size, 1);
        assert_eq!(min_vertex_cover(&k(3)).size, 2);
        assert_eq!(min_vertex_cover(&k(3)).witness, vec![1, 2]);
        let c5 = cycle(5);
        let r = min_vertex_cover(&c5);
        assert_eq!(r.size, 3);
        assert_eq!(r.witness, vec![1, 2, 4]);
        let empty = Graph::new(3, []).unwrap();
        assert_eq!(min_vertex_cover(&empty).size, 0);
    }

    #[test]
    fn min_cover_matches_brute_force_up_to_n6() {
        // All graphs on up to 4 vertices plus a seeded handful on 5 and 6.
        for n in 0..=4usize {
            let all: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            for mask in 0..(1u32 << all.len()) {
                let edges: Vec<_> = all
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, edges).unwrap();
                check_against_brute(&g);
            }
        }
        for g in [cycle(5), cycle(6), k(5), k(6)] {
            check_against_brute(&g);
        }
    }

    fn check_against_brute(g: &Graph) {
        let r = min_vertex_cover(g);
        let (bsize, bwitness) = brute_min_cover(g);
        assert_eq!(r.size, bsize, "size mismatch on {:?}", g);
        assert_eq!(r.witness, bwitness, "witness mismatch on {:?}", g);
        assert!(is_vertex_cover(g, &r.witness).unwrap());
    }

    // Subsets ordered by size then lexicographically; the first cover found
    // is the lex-smallest optimum.
    fn brute_min_cover(g: &Graph) -> (usize, Vec<usize>) {
        let mut subsets: Vec<Vec<usize>> = (0..(1u32 << g.n()))
            .map(|mask| (1..=g.n()).filter(|&v| mask >> (v - 1) & 1 == 1).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        for s in subsets {
            if is_vertex_cover(g, &s).unwrap() {
                return (s.len(), s);
            }
        }
        unreachable!("the full vertex set always covers");
    }
}
