//! Labeled boolean communication matrices, rectangles, 1-partitions, and the
//! matrix file format.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::bitset::Bits;
use crate::error::{Error, Result};

/// Row label. Ordering is the canonical matrix row order: node rows by
/// (vertex, bit), then edge rows by (edge, r), then pad rows by t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowLabel {
    Node { v: usize, b: u8 },
    Edge { e: (usize, usize), r: u8 },
    Pad { t: usize },
}

/// Column label; same ordering scheme as rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColLabel {
    Node { v: usize },
    Edge { e: (usize, usize), c: u8 },
    Pad { t: usize },
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowLabel::Node { v, b } => write!(f, "v:{}:{}", v, b),
            RowLabel::Edge { e: (i, j), r } => write!(f, "e:{}-{}:{}", i, j, r),
            RowLabel::Pad { t } => write!(f, "pad:{}", t),
        }
    }
}

impl fmt::Display for ColLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ColLabel::Node { v } => write!(f, "v:{}", v),
            ColLabel::Edge { e: (i, j), c } => write!(f, "e:{}-{}:{}", i, j, c),
            ColLabel::Pad { t } => write!(f, "pad:{}", t),
        }
    }
}

fn bad_label(s: &str) -> Error {
    Error::UnknownLabel(s.to_string())
}

fn parse_edge_part(part: &str, whole: &str) -> Result<(usize, usize)> {
    let (i, j) = part.split_once('-').ok_or_else(|| bad_label(whole))?;
    let i: usize = i.parse().map_err(|_| bad_label(whole))?;
    let j: usize = j.parse().map_err(|_| bad_label(whole))?;
    if i >= j {
        return Err(bad_label(whole));
    }
    Ok((i, j))
}

impl FromStr for RowLabel {
    type Err = Error;
    /// Forms: "v:<v>:<b>", "e:<i>-<j>:<r>" (r in 1..=4), "pad:<t>".
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split(':');
        match it.next() {
            Some("v") => {
                let v = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                let b: u8 = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if b > 1 || it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(RowLabel::Node { v, b })
            }
            Some("e") => {
                let e = parse_edge_part(it.next().ok_or_else(|| bad_label(s))?, s)?;
                let r: u8 = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if !(1..=4).contains(&r) || it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(RowLabel::Edge { e, r })
            }
            Some("pad") => {
                let t = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(RowLabel::Pad { t })
            }
            _ => Err(bad_label(s)),
        }
    }
}

impl FromStr for ColLabel {
    type Err = Error;
    /// Forms: "v:<v>", "e:<i>-<j>:<c>" (c in 1..=5), "pad:<t>".
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split(':');
        match it.next() {
            Some("v") => {
                let v = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(ColLabel::Node { v })
            }
            Some("e") => {
                let e = parse_edge_part(it.next().ok_or_else(|| bad_label(s))?, s)?;
                let c: u8 = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if !(1..=5).contains(&c) || it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(ColLabel::Edge { e, c })
            }
            Some("pad") => {
                let t = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad_label(s))?;
                if it.next().is_some() {
                    return Err(bad_label(s));
                }
                Ok(ColLabel::Pad { t })
            }
            _ => Err(bad_label(s)),
        }
    }
}

/// Boolean matrix with labeled rows and columns; one bitset per row.
#[derive(Clone, PartialEq, Eq)]
pub struct CommMatrix {
    rows: Vec<RowLabel>,
    cols: Vec<ColLabel>,
    bits: Vec<Bits>,
    row_index: HashMap<RowLabel, usize>,
    col_index: HashMap<ColLabel, usize>,
}

impl CommMatrix {
    /// All-zero matrix with the given labels. Labels must be unique per side.
    pub fn new(rows: Vec<RowLabel>, cols: Vec<ColLabel>) -> Result<Self> {
        let mut row_index = HashMap::with_capacity(rows.len());
        for (i, &r) in rows.iter().enumerate() {
            if row_index.insert(r, i).is_some() {
                return Err(Error::UnknownLabel(format!("duplicate row label {}", r)));
            }
        }
        let mut col_index = HashMap::with_capacity(cols.len());
        for (j, &c) in cols.iter().enumerate() {
            if col_index.insert(c, j).is_some() {
                return Err(Error::UnknownLabel(format!("duplicate col label {}", c)));
            }
        }
        let bits = vec![Bits::new(cols.len()); rows.len()];
        Ok(CommMatrix {
            rows,
            cols,
            bits,
            row_index,
            col_index,
        })
    }

    /// Matrix from literal bit rows ("10", "01", ...) with pad labels 1..=R
    /// and 1..=C. Convenient for matrices whose labels carry no meaning.
    pub fn from_bit_rows(rows: &[&str]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |s| s.len());
        let mut m = CommMatrix::new(
            (1..=r).map(|t| RowLabel::Pad { t }).collect(),
            (1..=c).map(|t| ColLabel::Pad { t }).collect(),
        )?;
        for (i, line) in rows.iter().enumerate() {
            if line.len() != c {
                return Err(Error::parse(i + 1, "ragged bit rows"));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(Error::parse(i + 1, format!("bad bit character '{}'", ch))),
                }
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[ColLabel] {
        &self.cols
    }

    pub fn row_index(&self, l: &RowLabel) -> Option<usize> {
        self.row_index.get(l).copied()
    }

    pub fn col_index(&self, l: &ColLabel) -> Option<usize> {
        self.col_index.get(l).copied()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i].assign(j, v);
    }

    /// Bit row i as a bitset of width ncols.
    pub fn row_bits(&self, i: usize) -> &Bits {
        &self.bits[i]
    }

    pub fn ones_count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones()).sum()
    }

    /// True iff every entry has the same value (vacuously true when empty).
    pub fn is_constant(&self) -> bool {
        let ones = self.ones_count();
        ones == 0 || ones == self.nrows() * self.ncols()
    }

    pub fn complement(&self) -> CommMatrix {
        let mut m = self.clone();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                m.set(i, j, !self.get(i, j));
            }
        }
        m
    }

    /// Submatrix on the given row and column indices, keeping labels.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CommMatrix {
        let mut m = CommMatrix::new(
            rows.iter().map(|&i| self.rows[i]).collect(),
            cols.iter().map(|&j| self.cols[j]).collect(),
        )
        .expect("labels unique in parent");
        for (i2, &i) in rows.iter().enumerate() {
            for (j2, &j) in cols.iter().enumerate() {
                m.set(i2, j2, self.get(i, j));
            }
        }
        m
    }

    /// Serializes to the matrix file format: "R C" header, R bit rows, then
    /// one "#row <index> <label>" and "#col <index> <label>" line per label.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.ncols());
        for bits in &self.bits {
            for j in 0..self.ncols() {
                s.push(if bits.get(j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        for (i, l) in self.rows.iter().enumerate() {
            s.push_str(&format!("#row {} {}\n", i, l));
        }
        for (j, l) in self.cols.iter().enumerate() {
            s.push_str(&format!("#col {} {}\n", j, l));
        }
        s
    }
}

impl fmt::Debug for CommMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CommMatrix {}x{}", self.nrows(), self.ncols())?;
        for bits in &self.bits {
            for j in 0..self.ncols() {
                write!(f, "{}", if bits.get(j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parses the matrix file format. Label comments are optional; rows or
/// columns left unlabeled get pad labels by position (index + 1).
pub fn parse_matrix(text: &str) -> Result<CommMatrix> {
    let mut header: Option<(usize, usize)> = None;
    let mut bit_lines: Vec<(usize, &str)> = Vec::new();
    let mut row_labels: Vec<(usize, usize, RowLabel)> = Vec::new();
    let mut col_labels: Vec<(usize, usize, ColLabel)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("#row ") {
            let (i, lab) = parse_label_comment(rest, line)?;
            row_labels.push((line, i, lab.parse().map_err(|_| {
                Error::parse(line, format!("bad row label \"{}\"", lab))
            })?));
        } else if let Some(rest) = l.strip_prefix("#col ") {
            let (j, lab) = parse_label_comment(rest, line)?;
            col_labels.push((line, j, lab.parse().map_err(|_| {
                Error::parse(line, format!("bad col label \"{}\"", lab))
            })?));
        } else if l.starts_with('#') {
            continue;
        } else if header.is_none() {
            let mut it = l.split_whitespace();
            let r: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(line, "malformed header, expected \"R C\""))?;
            let c: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(line, "malformed header, expected \"R C\""))?;
            if it.next().is_some() {
                return Err(Error::parse(line, "trailing tokens after \"R C\" header"));
            }
            header = Some((r, c));
        } else {
            bit_lines.push((line, l));
        }
    }

    let (r, c) = header.ok_or_else(|| Error::parse(0, "missing \"R C\" header"))?;
    if bit_lines.len() != r {
        return Err(Error::parse(
            0,
            format!("header promised {} bit rows, found {}", r, bit_lines.len()),
        ));
    }

    let mut rows: Vec<Option<RowLabel>> = vec![None; r];
    for (line, i, lab) in row_labels {
        if i >= r {
            return Err(Error::parse(line, format!("row index {} out of range 0..{}", i, r)));
        }
        if rows[i].replace(lab).is_some() {
            return Err(Error::parse(line, format!("row {} labeled twice", i)));
        }
    }
    let mut cols: Vec<Option<ColLabel>> = vec![None; c];
    for (line, j, lab) in col_labels {
        if j >= c {
            return Err(Error::parse(line, format!("col index {} out of range 0..{}", j, c)));
        }
        if cols[j].replace(lab).is_some() {
            return Err(Error::parse(line, format!("col {} labeled twice", j)));
        }
    }
    let rows: Vec<RowLabel> = rows
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or(RowLabel::Pad { t: i + 1 }))
        .collect();
    let cols: Vec<ColLabel> = cols
        .into_iter()
        .enumerate()
        .map(|(j, l)| l.unwrap_or(ColLabel::Pad { t: j + 1 }))
        .collect();

    let mut m = CommMatrix::new(rows, cols)?;
    for (i, (line, l)) in bit_lines.into_iter().enumerate() {
        if l.len() != c {
            return Err(Error::parse(
                line,
                format!("bit row has {} characters, expected {}", l.len(), c),
            ));
        }
        for (j, ch) in l.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(i, j, true),
                _ => return Err(Error::parse(line, format!("bad bit character '{}'", ch))),
            }
        }
    }
    Ok(m)
}

fn parse_label_comment(rest: &str, line: usize) -> Result<(usize, &str)> {
    let mut it = rest.split_whitespace();
    let idx: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, "expected \"#row <index> <label>\""))?;
    let lab = it
        .next()
        .ok_or_else(|| Error::parse(line, "expected \"#row <index> <label>\""))?;
    if it.next().is_some() {
        return Err(Error::parse(line, "trailing tokens after label"));
    }
    Ok((idx, lab))
}

/// Product set of row indices and column indices into a specific matrix.
/// Index lists are sorted and duplicate-free; both sides are non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Rectangle {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Self {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        debug_assert!(!rows.is_empty() && !cols.is_empty());
        Rectangle { rows, cols }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .flat_map(move |&r| self.cols.iter().map(move |&c| (r, c)))
    }

    pub fn area(&self) -> usize {
        self.rows.len() * self.cols.len()
    }
}

/// A list of rectangles intended to partition the 1-cells of a matrix.
/// Validity (monochromatic, disjoint, covering) is checked by
/// `solvers::verify_partition`, not enforced here.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OnePartition {
    pub rects: Vec<Rectangle>,
}

impl OnePartition {
    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }
}
