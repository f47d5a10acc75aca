//! Partitions, skew shapes, descent sets, and hook lengths.
//!
//! Conventions used everywhere in the crate:
//!
//! * cells are 1-based, `Cell { row, col }`, matrix orientation (row 1 on
//!   top, columns growing to the right);
//! * partitions carry no trailing zeros;
//! * a descent set is a finite set of positive integers, kept sorted.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A box position in matrix coordinates, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Diagonal index `col - row`; constant along southeast moves.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Componentwise order: `self` weakly northwest of `other`.
    pub fn is_northwest_of(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    /// One step southeast.
    pub fn southeast(self) -> Cell {
        Cell::new(self.row + 1, self.col + 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    /// Parses the `row:col` syntax used on the command line.
    fn from_str(s: &str) -> Result<Self> {
        let (r, c) = s
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("cell `{s}` is not of the form row:col")))?;
        let row: usize = r
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad row in cell `{s}`")))?;
        let col: usize = c
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad column in cell `{s}`")))?;
        if row == 0 || col == 0 {
            return Err(Error::Domain(format!("cell `{s}` must be 1-based")));
        }
        Ok(Cell::new(row, col))
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// # Errors
    /// Rejects part sequences that increase anywhere or contain an interior
    /// zero.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Domain(format!(
                    "parts must be weakly decreasing, got {:?}",
                    parts
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!(
                "interior zero part in {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The `i`-th part, 1-based; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("parts are 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose across the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// All nonempty partitions with at most `max_size` cells, in a fixed
    /// order (by size, then lexicographic).
    pub fn enumerate_up_to(max_size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            let mut current = Vec::new();
            collect_partitions_of(n, n, &mut current, &mut out);
        }
        out
    }
}

fn collect_partitions_of(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        collect_partitions_of(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSkew", into = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawSkew {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl From<SkewShape> for RawSkew {
    fn from(s: SkewShape) -> RawSkew {
        RawSkew {
            outer: s.outer,
            inner: s.inner,
        }
    }
}

impl SkewShape {
    /// # Errors
    /// The inner partition must fit inside the outer one.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!(
                "inner {inner} does not fit inside outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer/()`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells of the region.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Region cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.rows() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// True when the region is edge-connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let set: HashSet<Cell> = cells.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut stack = vec![cells[0]];
        seen.insert(cells[0]);
        while let Some(c) = stack.pop() {
            let mut neighbors = vec![
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
            ];
            if c.row > 1 {
                neighbors.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                neighbors.push(Cell::new(c.row, c.col - 1));
            }
            for n in neighbors {
                if set.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// A ribbon is a nonempty connected region containing no 2x2 block.
    pub fn is_ribbon(&self) -> bool {
        if self.size() == 0 || !self.is_connected() {
            return false;
        }
        self.cells().iter().all(|c| {
            !(self.contains_cell(Cell::new(c.row, c.col + 1))
                && self.contains_cell(Cell::new(c.row + 1, c.col))
                && self.contains_cell(c.southeast()))
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A set of positive integers marking descent positions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DescentSet {
    elems: Vec<usize>,
}

impl DescentSet {
    /// # Errors
    /// Elements must be positive; duplicates are rejected.
    pub fn new(elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        if elems.first() == Some(&0) {
            return Err(Error::Domain("descent positions are 1-based".into()));
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("repeated element in {:?}", elems)));
        }
        Ok(DescentSet { elems })
    }

    pub fn empty() -> Self {
        DescentSet { elems: Vec::new() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    /// Largest element, `None` when empty.
    pub fn max_element(&self) -> Option<usize> {
        self.elems.last().copied()
    }

    /// All nonempty subsets of `{1, ..., max}`, ordered by bitmask.
    pub fn nonempty_subsets_up_to(max: usize) -> Vec<DescentSet> {
        assert!(max < usize::BITS as usize);
        (1u64..(1 << max))
            .map(|mask| DescentSet {
                elems: (1..=max).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
            })
            .collect()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for DescentSet {
    type Err = Error;

    /// Parses a comma-separated list such as `3,5`; empty input is the
    /// empty set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DescentSet::empty());
        }
        let elems = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad descent position `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        DescentSet::new(elems)
    }
}

impl Serialize for DescentSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DescentSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(d)?;
        DescentSet::new(elems).map_err(D::Error::custom)
    }
}

/// Arm plus leg plus one: `(lambda_i - j) + (lambda'_j - i) + 1`.
///
/// # Errors
/// The cell must lie inside the diagram of `lambda`.
pub fn hook_length(lambda: &Partition, cell: Cell) -> Result<usize> {
    if !lambda.contains_cell(cell) {
        return Err(Error::Domain(format!(
            "cell {cell} outside diagram of {lambda}"
        )));
    }
    let col_height = lambda.conjugate().part(cell.col);
    Ok(lambda.part(cell.row) - cell.col + col_height - cell.row + 1)
}

/// Hook lengths of all cells strictly below row 1, in row-major order.
pub fn hook_multiset_below_first_row(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for i in 2..=lambda.rows() {
        for j in 1..=lambda.part(i) {
            out.push(lambda.part(i) - j + conj.part(j) - i + 1);
        }
    }
    out
}

/// The minimal ribbon whose standard fillings have descent set `set`.
///
/// Rows read bottom-to-top have lengths `(i_1, i_2 - i_1, ..., m + 1 - i_k)`
/// for `set = {i_1 < ... < i_k}` with `m = i_k`; consecutive rows overlap in
/// exactly one column.  The empty set maps to the single cell `(1)/()`.
pub fn ribbon_from_descent_set(set: &DescentSet) -> SkewShape {
    let elems = set.elements();
    let k = elems.len();
    if k == 0 {
        return SkewShape::straight(Partition::new(vec![1]).unwrap());
    }
    let m = elems[k - 1];
    // Rightmost column of each run, bottom-to-top; the top run has length 1.
    let ends: Vec<usize> = elems.iter().enumerate().map(|(r, &i)| i - r).collect();
    let mut outer = vec![m + 1 - k];
    let mut inner = Vec::new();
    for &e in ends.iter().rev() {
        outer.push(e);
        inner.push(e - 1);
    }
    SkewShape::new(
        Partition::new(outer).expect("run ends are weakly decreasing"),
        Partition::new(inner).expect("shifted run ends are weakly decreasing"),
    )
    .expect("minimal ribbon is a valid skew shape")
}

/// First-row hook lengths minus one; strictly decreasing.
///
/// # Errors
/// Needs at least one row.
pub fn alpha_vector(lambda: &Partition) -> Result<Vec<usize>> {
    if lambda.is_empty() {
        return Err(Error::Domain("alpha vector of the empty partition".into()));
    }
    let conj = lambda.conjugate();
    Ok((1..=lambda.part(1))
        .map(|j| lambda.part(1) - j + conj.part(j) - 1)
        .collect())
}

/// Lengthens the first row by `t - 1` cells, keeping the rest.
///
/// # Errors
/// Needs `t >= 1` and a nonempty partition.
pub fn extend_first_row(lambda: &Partition, t: usize) -> Result<Partition> {
    if lambda.is_empty() {
        return Err(Error::Domain("cannot extend the empty partition".into()));
    }
    if t == 0 {
        return Err(Error::Domain("row extension needs t >= 1".into()));
    }
    let mut parts = lambda.parts().to_vec();
    parts[0] += t - 1;
    Partition::new(parts)
}
