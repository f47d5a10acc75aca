//! Weighted circle/square diagrams inside a fixed ambient partition.
//!
//! A diagram carries a set of circles and a multiset of squares.  Squares
//! are frozen; each circle may slide one step southeast, subject to the same
//! order-preserving condition that governs excited diagrams.  The weight
//! ([`sqci_weight`]) sums the ambient hook product of circles-after-sliding
//! together with the squares, over all admissible slides.
//!
//! The slicing operators split a cell set by a column or row index, and
//! pushing translates a cell set right or southeast.  Combining them,
//! [`check_slice_and_push`] compares the weight of a diagram against the
//! weight of its left slice with the right slice pushed into squares, and
//! [`check_square_relation`] verifies the two-by-two exchange identity for
//! square placements.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::shapes::{hook_length, Cell, Partition};
use crate::{Error, Result};

/// Hard cap on circles per diagram; sliding enumerates subsets per diagonal.
const MAX_CIRCLES: usize = 24;

/// A multiset of cells, kept sorted; repeats allowed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CellMultiset {
    cells: Vec<Cell>,
}

impl CellMultiset {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        CellMultiset { cells }
    }

    pub fn empty() -> Self {
        CellMultiset::default()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Multiset union.
    pub fn merge(&self, other: &CellMultiset) -> CellMultiset {
        CellMultiset::new(self.cells.iter().chain(other.cells.iter()).copied())
    }
}

/// Product of ambient hook lengths over a multiset of cells.
///
/// # Errors
/// Every cell must lie inside `lambda`.
pub fn hook_product_of(lambda: &Partition, cells: &[Cell]) -> Result<BigUint> {
    let mut out = BigUint::one();
    for &c in cells {
        out *= BigUint::from(hook_length(lambda, c)?);
    }
    Ok(out)
}

/// Circles plus squares inside an ambient partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqciDiagram {
    ambient: Partition,
    circles: Vec<Cell>,
    squares: CellMultiset,
}

impl SqciDiagram {
    /// # Errors
    /// Each circle needs its southeast neighbour inside the ambient diagram
    /// (so it has room to slide); squares must lie in the ambient diagram;
    /// circles must be distinct and not too many.
    pub fn new(ambient: Partition, circles: Vec<Cell>, squares: CellMultiset) -> Result<Self> {
        let mut circles = circles;
        circles.sort_unstable();
        if circles.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("repeated circle".into()));
        }
        if circles.len() > MAX_CIRCLES {
            return Err(Error::Budget {
                what: "circle count",
                needed: circles.len(),
                limit: MAX_CIRCLES,
            });
        }
        for &c in &circles {
            if !ambient.contains_cell(c.southeast()) {
                return Err(Error::Domain(format!(
                    "circle {c} lacks a southeast neighbour inside {ambient}"
                )));
            }
        }
        for &c in squares.cells() {
            if !ambient.contains_cell(c) {
                return Err(Error::Domain(format!(
                    "square {c} outside ambient {ambient}"
                )));
            }
        }
        Ok(SqciDiagram {
            ambient,
            circles,
            squares,
        })
    }

    pub fn ambient(&self) -> &Partition {
        &self.ambient
    }

    pub fn circles(&self) -> &[Cell] {
        &self.circles
    }

    pub fn squares(&self) -> &CellMultiset {
        &self.squares
    }
}

/// One admissible slide assignment per diagonal: cells and their images,
/// both sorted by row.
type DiagonalChoice = Vec<(Cell, Cell)>;

fn diagonal_choices(cells: &[Cell]) -> Vec<DiagonalChoice> {
    let l = cells.len();
    let mut out = Vec::new();
    'mask: for mask in 0u32..1 << l {
        let mut choice = Vec::with_capacity(l);
        let mut prev_row = 0usize;
        for (i, &c) in cells.iter().enumerate() {
            let image = if mask >> i & 1 == 1 { c.southeast() } else { c };
            // Strictly increasing image rows keep the diagonal injective
            // and ordered.
            if image.row <= prev_row {
                continue 'mask;
            }
            prev_row = image.row;
            choice.push((c, image));
        }
        out.push(choice);
    }
    out
}

fn adjacent_diagonals_compatible(a: &DiagonalChoice, b: &DiagonalChoice) -> bool {
    for &(c1, i1) in a {
        for &(c2, i2) in b {
            if c1.is_northwest_of(c2) && !i1.is_northwest_of(i2) {
                return false;
            }
            if c2.is_northwest_of(c1) && !i2.is_northwest_of(i1) {
                return false;
            }
        }
    }
    true
}

/// The weight of the diagram: sum over all admissible circle slides of the
/// hook product of slid circles together with the squares.
pub fn sqci_weight(diagram: &SqciDiagram) -> BigUint {
    let lambda = &diagram.ambient;
    let mut by_content: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
    for &c in &diagram.circles {
        by_content.entry(c.content()).or_default().push(c);
    }
    let contents: Vec<i64> = by_content.keys().copied().collect();
    let choices: Vec<Vec<DiagonalChoice>> =
        by_content.values().map(|cells| diagonal_choices(cells)).collect();

    let mut total = BigUint::zero();
    let mut chosen: Vec<&DiagonalChoice> = Vec::with_capacity(contents.len());
    descend(
        lambda,
        diagram,
        &contents,
        &choices,
        &mut chosen,
        &mut total,
    );
    total
}

fn descend(
    lambda: &Partition,
    diagram: &SqciDiagram,
    contents: &[i64],
    choices: &[Vec<DiagonalChoice>],
    chosen: &mut Vec<&'_ DiagonalChoice>,
    total: &mut BigUint,
) {
    let depth = chosen.len();
    if depth == contents.len() {
        let mut w = hook_product_of(lambda, diagram.squares.cells())
            .expect("squares validated at construction");
        for choice in chosen.iter() {
            for &(_, image) in choice.iter() {
                w *= BigUint::from(
                    hook_length(lambda, image).expect("slide targets validated at construction"),
                );
            }
        }
        *total += w;
        return;
    }
    for cand in &choices[depth] {
        let compatible = if depth > 0 && contents[depth] == contents[depth - 1] + 1 {
            adjacent_diagonals_compatible(chosen[depth - 1], cand)
        } else {
            true
        };
        if compatible {
            chosen.push(cand);
            descend(lambda, diagram, contents, choices, chosen, total);
            chosen.pop();
        }
    }
}

/// Which part of a cell set a slice keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SliceSpec {
    /// Columns `1..=k`.
    ColumnsUpTo(usize),
    /// Columns `k+1..`.
    ColumnsAfter(usize),
    /// Rows `1..=i`.
    RowsUpTo(usize),
    /// Rows `i+1..`.
    RowsAfter(usize),
}

/// Keeps the cells selected by `spec`, preserving order.
pub fn slice(cells: &[Cell], spec: SliceSpec) -> Vec<Cell> {
    cells
        .iter()
        .copied()
        .filter(|c| match spec {
            SliceSpec::ColumnsUpTo(k) => c.col <= k,
            SliceSpec::ColumnsAfter(k) => c.col > k,
            SliceSpec::RowsUpTo(i) => c.row <= i,
            SliceSpec::RowsAfter(i) => c.row > i,
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PushDirection {
    /// One column to the right.
    Right,
    /// One row down and one column to the right.
    Southeast,
}

/// Translates every cell one step in the given direction.
pub fn push(cells: &[Cell], direction: PushDirection) -> Vec<Cell> {
    cells
        .iter()
        .map(|c| match direction {
            PushDirection::Right => Cell::new(c.row, c.col + 1),
            PushDirection::Southeast => c.southeast(),
        })
        .collect()
}

/// Translates the cell set so its minimal row and column both become 1.
pub fn normalize_northwest(cells: &[Cell]) -> Vec<Cell> {
    let Some(min_row) = cells.iter().map(|c| c.row).min() else {
        return Vec::new();
    };
    let min_col = cells.iter().map(|c| c.col).min().unwrap();
    let mut out: Vec<Cell> = cells
        .iter()
        .map(|c| Cell::new(c.row - min_row + 1, c.col - min_col + 1))
        .collect();
    out.sort_unstable();
    out
}

/// If the northwest-normalized cell set is exactly a Young diagram, returns
/// its partition.
pub fn as_young_diagram(cells: &[Cell]) -> Option<Partition> {
    let normalized = normalize_northwest(cells);
    if normalized.is_empty() {
        return Some(Partition::empty());
    }
    let rows = normalized.iter().map(|c| c.row).max().unwrap();
    let mut parts = vec![0usize; rows];
    for c in &normalized {
        parts[c.row - 1] = parts[c.row - 1].max(c.col);
    }
    let candidate = Partition::new(parts).ok()?;
    let expected: Vec<Cell> = candidate.cells().collect();
    (normalized == expected).then_some(candidate)
}

/// Outcome of one slice-and-push comparison.
#[derive(Clone, Debug)]
pub struct SliceAndPushVerdict {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

/// Compares the diagram's weight against the weight of its column slice at
/// `k`, with the sliced-off circles pushed one column right into squares.
///
/// # Errors
/// The circles must normalize northwest to a nonempty Young diagram, and the
/// pushed squares must stay inside the ambient diagram.
pub fn check_slice_and_push(diagram: &SqciDiagram, k: usize) -> Result<SliceAndPushVerdict> {
    match as_young_diagram(diagram.circles()) {
        Some(mu) if !mu.is_empty() => {}
        _ => {
            return Err(Error::Domain(
                "slice-and-push needs circles forming a nonempty Young diagram up to translation"
                    .into(),
            ))
        }
    }
    let lhs = sqci_weight(diagram);
    let kept = slice(diagram.circles(), SliceSpec::ColumnsUpTo(k));
    let moved = push(
        &slice(diagram.circles(), SliceSpec::ColumnsAfter(k)),
        PushDirection::Right,
    );
    let sliced = SqciDiagram::new(
        diagram.ambient.clone(),
        kept,
        diagram.squares.merge(&CellMultiset::new(moved)),
    )?;
    let rhs = sqci_weight(&sliced);
    let holds = lhs >= rhs;
    Ok(SliceAndPushVerdict { lhs, rhs, holds })
}

/// Outcome of one square-exchange comparison.
#[derive(Clone, Debug)]
pub struct SquareRelationVerdict {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

/// Verifies the exchange identity for squares at the four corners of the
/// rectangle spanned by `rows` and `cols`: adding the two main-diagonal
/// corners to the squares (one at a time) weighs the same as adding the two
/// anti-diagonal corners.
///
/// # Errors
/// Needs `rows.0 < rows.1`, `cols.0 < cols.1`, and all four corners inside
/// the ambient diagram.
pub fn check_square_relation(
    diagram: &SqciDiagram,
    rows: (usize, usize),
    cols: (usize, usize),
) -> Result<SquareRelationVerdict> {
    if rows.0 >= rows.1 || cols.0 >= cols.1 {
        return Err(Error::Domain(
            "square relation needs two distinct rows and two distinct columns, in order".into(),
        ));
    }
    let corners = [
        Cell::new(rows.0, cols.0),
        Cell::new(rows.1, cols.1),
        Cell::new(rows.0, cols.1),
        Cell::new(rows.1, cols.0),
    ];
    let weight_with = |extra: Cell| -> Result<BigUint> {
        let with = SqciDiagram::new(
            diagram.ambient.clone(),
            diagram.circles.clone(),
            diagram.squares.merge(&CellMultiset::new([extra])),
        )?;
        Ok(sqci_weight(&with))
    };
    let lhs = weight_with(corners[0])? + weight_with(corners[1])?;
    let rhs = weight_with(corners[2])? + weight_with(corners[3])?;
    let holds = lhs == rhs;
    Ok(SquareRelationVerdict { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(spec: &[(usize, usize)]) -> Vec<Cell> {
        spec.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn diagram(ambient: &[usize], circles: &[(usize, usize)], squares: &[(usize, usize)]) -> SqciDiagram {
        SqciDiagram::new(
            p(ambient),
            cells(circles),
            CellMultiset::new(cells(squares)),
        )
        .unwrap()
    }

    #[test]
    fn worked_weight_examples() {
        // Six admissible slides of the 2x2 block.
        let d = diagram(&[5, 5, 4, 3, 2], &[(1, 1), (1, 2), (2, 1), (2, 2)], &[]);
        assert_eq!(sqci_weight(&d), BigUint::from(9120u32));

        // The order condition kills the slide of (1,1) alone.
        let d = diagram(&[4, 3], &[(1, 1), (1, 2)], &[]);
        assert_eq!(sqci_weight(&d), BigUint::from(27u32));

        // No circles: the weight is the square hook product.
        let d = diagram(&[4, 3], &[], &[(1, 1), (1, 1), (2, 2)]);
        assert_eq!(sqci_weight(&d), BigUint::from(50u32));
        let d = diagram(&[4, 3], &[], &[]);
        assert_eq!(sqci_weight(&d), BigUint::one());
    }

    #[test]
    fn construction_guards() {
        // (2,2) has no southeast neighbour inside (2,2).
        assert!(SqciDiagram::new(p(&[2, 2]), cells(&[(2, 2)]), CellMultiset::empty()).is_err());
        // Square outside the ambient shape.
        assert!(SqciDiagram::new(
            p(&[2, 2]),
            vec![],
            CellMultiset::new(cells(&[(3, 1)]))
        )
        .is_err());
        // Repeated circle.
        assert!(SqciDiagram::new(
            p(&[3, 3, 3]),
            cells(&[(1, 1), (1, 1)]),
            CellMultiset::empty()
        )
        .is_err());
    }

    #[test]
    fn slicing_operators() {
        let d = cells(&[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(slice(&d, SliceSpec::ColumnsUpTo(2)), cells(&[(1, 2), (3, 1)]));
        assert_eq!(slice(&d, SliceSpec::ColumnsAfter(2)), cells(&[(2, 3)]));
        assert_eq!(slice(&d, SliceSpec::RowsUpTo(1)), cells(&[(1, 2)]));
        assert_eq!(slice(&d, SliceSpec::RowsAfter(1)), cells(&[(2, 3), (3, 1)]));
        // The two column slices partition the set.
        for k in 0..=4 {
            let mut both = slice(&d, SliceSpec::ColumnsUpTo(k));
            both.extend(slice(&d, SliceSpec::ColumnsAfter(k)));
            both.sort_unstable();
            let mut orig = d.clone();
            orig.sort_unstable();
            assert_eq!(both, orig);
        }
    }

    #[test]
    fn pushing_and_normalizing() {
        let d = cells(&[(2, 3), (3, 4)]);
        assert_eq!(push(&d, PushDirection::Right), cells(&[(2, 4), (3, 5)]));
        assert_eq!(push(&d, PushDirection::Southeast), cells(&[(3, 4), (4, 5)]));
        assert_eq!(normalize_northwest(&d), cells(&[(1, 1), (2, 2)]));
        assert!(normalize_northwest(&[]).is_empty());

        assert_eq!(as_young_diagram(&cells(&[(2, 2), (2, 3), (3, 2)])), Some(p(&[2, 1])));
        assert_eq!(as_young_diagram(&cells(&[(1, 2), (2, 1)])), None);
    }

    #[test]
    fn slice_and_push_worked_example() {
        let d = diagram(&[5, 5, 4, 3, 2], &[(1, 1), (1, 2), (2, 1), (2, 2)], &[]);
        let v = check_slice_and_push(&d, 1).unwrap();
        assert_eq!(v.lhs, BigUint::from(9120u32));
        assert_eq!(v.rhs, BigUint::from(4560u32));
        assert!(v.holds);
    }

    #[test]
    fn slice_past_the_last_column_is_an_equality() {
        let d = diagram(&[5, 5, 4, 3, 2], &[(1, 1), (1, 2), (2, 1), (2, 2)], &[]);
        for k in [2, 3, 7] {
            let v = check_slice_and_push(&d, k).unwrap();
            assert_eq!(v.lhs, v.rhs, "k = {k}");
            assert!(v.holds);
        }
    }

    #[test]
    fn slice_and_push_two_cell_witness() {
        // Slicing at k = 1 pushes the second circle into a square one
        // column right; the inequality holds with room to spare.
        let d = diagram(&[4, 3], &[(1, 1), (1, 2)], &[]);
        let v = check_slice_and_push(&d, 1).unwrap();
        assert_eq!(v.lhs, BigUint::from(27u32));
        assert_eq!(v.rhs, BigUint::from(21u32));
        assert!(v.holds);
    }

    #[test]
    fn unpushed_slice_fails_the_inequality() {
        // Freezing the sliced-off circle in place instead of pushing it
        // overshoots the original weight: 28 > 27.  The push is essential.
        let lhs = sqci_weight(&diagram(&[4, 3], &[(1, 1), (1, 2)], &[]));
        let not_pushed = sqci_weight(&diagram(&[4, 3], &[(1, 1)], &[(1, 2)]));
        assert_eq!(lhs, BigUint::from(27u32));
        assert_eq!(not_pushed, BigUint::from(28u32));
        assert!(lhs < not_pushed);
    }

    #[test]
    fn slice_and_push_guards() {
        // Circles that are not a translated Young diagram.
        let d = diagram(&[4, 4, 3], &[(1, 2), (2, 1)], &[]);
        assert!(matches!(check_slice_and_push(&d, 1), Err(Error::Domain(_))));
        // No circles at all.
        let d = diagram(&[4, 4, 3], &[], &[]);
        assert!(matches!(check_slice_and_push(&d, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn square_relation_examples() {
        let d = diagram(&[3, 3, 3], &[], &[]);
        let v = check_square_relation(&d, (1, 2), (1, 2)).unwrap();
        assert_eq!(v.lhs, BigUint::from(8u32));
        assert_eq!(v.rhs, BigUint::from(8u32));
        assert!(v.holds);

        // With circles and a repeated square in the background.
        let d = diagram(&[5, 5, 4, 3, 2], &[(2, 2)], &[(1, 4), (1, 4)]);
        let v = check_square_relation(&d, (1, 3), (2, 4)).unwrap();
        assert!(v.holds);

        assert!(check_square_relation(&d, (2, 1), (1, 2)).is_err());
        // Corner (5,4) falls outside the ambient diagram.
        assert!(check_square_relation(&d, (4, 5), (1, 4)).is_err());
    }

    #[test]
    fn squares_factor_out_of_the_weight() {
        let ambient = [5usize, 5, 4, 3, 2];
        let circle_sets: [&[(usize, usize)]; 3] =
            [&[(1, 1), (1, 2), (2, 1), (2, 2)], &[(2, 2), (3, 1)], &[]];
        let square_sets: [&[(usize, usize)]; 3] =
            [&[(1, 5)], &[(2, 3), (2, 3)], &[(1, 1), (3, 3), (5, 1)]];
        for circles_spec in circle_sets {
            for squares_spec in square_sets {
                let bare = diagram(&ambient, circles_spec, &[]);
                let full = diagram(&ambient, circles_spec, squares_spec);
                let f = hook_product_of(&p(&ambient), &cells(squares_spec)).unwrap();
                assert_eq!(sqci_weight(&full), sqci_weight(&bare) * f);
            }
        }
    }
}
