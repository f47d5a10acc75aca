//! Excited diagrams of a skew shape and hook-product counting of standard
//! fillings.
//!
//! An excited diagram of `lambda/mu` is the image of the inner diagram under
//! repeated elementary moves: a cell may step southeast when the three cells
//! completing its 2x2 square are vacant and the target lies in `lambda`.
//! [`enumerate_excited`] generates them by closure from the seed;
//! [`satisfies_excited_definition`] checks membership directly against the
//! order-preserving bijection definition, so the two routes can be compared.
//!
//! Counting standard fillings goes through three independent routes:
//! the hook-product sum over excited diagrams ([`naruse_count`]), the plain
//! hook formula for straight shapes ([`frt_count`]), and exhaustive chain
//! counting in the lattice of partitions ([`brute_force_count`]).

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::shapes::{hook_length, Cell, Partition, SkewShape};
use crate::{Error, Result};

/// A set of cells obtained from the inner diagram by excitation moves.
///
/// Cells are kept sorted in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExcitedDiagram {
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    fn from_sorted(cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        ExcitedDiagram { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// How many cells sit in row 1.
    pub fn first_row_cells(&self) -> usize {
        self.cells.iter().filter(|c| c.row == 1).count()
    }
}

/// Seed diagram: the cells of the inner partition.
fn seed(shape: &SkewShape) -> Vec<Cell> {
    shape.inner().cells().collect()
}

fn is_movable(cell: Cell, occupied: &HashSet<Cell>, lambda: &Partition) -> bool {
    lambda.contains_cell(cell.southeast())
        && !occupied.contains(&Cell::new(cell.row + 1, cell.col))
        && !occupied.contains(&Cell::new(cell.row, cell.col + 1))
        && !occupied.contains(&cell.southeast())
}

/// All excited diagrams of `shape`, each exactly once.
///
/// The order is canonical: diagrams sorted lexicographically by their
/// row-major cell lists, which puts the seed (the inner diagram itself)
/// first, since every move replaces a cell by a later one.
pub fn enumerate_excited(shape: &SkewShape) -> Vec<ExcitedDiagram> {
    let lambda = shape.outer();
    let start = seed(shape);
    let mut seen: HashSet<Vec<Cell>> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(cells) = stack.pop() {
        let occupied: HashSet<Cell> = cells.iter().copied().collect();
        for &c in &cells {
            if !is_movable(c, &occupied, lambda) {
                continue;
            }
            let mut next: Vec<Cell> = cells
                .iter()
                .map(|&x| if x == c { c.southeast() } else { x })
                .collect();
            next.sort_unstable();
            if !seen.contains(&next) {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    let mut all: Vec<Vec<Cell>> = seen.into_iter().collect();
    all.sort_unstable();
    all.into_iter().map(ExcitedDiagram::from_sorted).collect()
}

/// Direct membership test: does `cells` admit a content-preserving bijection
/// from the inner diagram that is order-preserving on every pair of adjacent
/// diagonals?
///
/// Used to cross-check [`enumerate_excited`], which generates by local moves.
pub fn satisfies_excited_definition(cells: &[Cell], shape: &SkewShape) -> bool {
    let mu_cells: Vec<Cell> = seed(shape);
    if cells.len() != mu_cells.len() {
        return false;
    }
    let distinct: HashSet<Cell> = cells.iter().copied().collect();
    if distinct.len() != cells.len() || cells.iter().any(|&c| !shape.outer().contains_cell(c)) {
        return false;
    }
    // Within one diagonal the only candidate bijection matches cells in
    // sorted order, so build that matching per content and then check every
    // pair at content distance <= 1.
    let mut by_content: HashMap<i64, (Vec<Cell>, Vec<Cell>)> = HashMap::new();
    for &c in &mu_cells {
        by_content.entry(c.content()).or_default().0.push(c);
    }
    for &c in cells {
        by_content.entry(c.content()).or_default().1.push(c);
    }
    let mut eta: HashMap<Cell, Cell> = HashMap::new();
    for (src, dst) in by_content.values_mut() {
        if src.len() != dst.len() {
            return false;
        }
        src.sort_unstable();
        dst.sort_unstable();
        for (&a, &b) in src.iter().zip(dst.iter()) {
            eta.insert(a, b);
        }
    }
    for &a in &mu_cells {
        for &b in &mu_cells {
            if (a.content() - b.content()).abs() <= 1 && a.is_northwest_of(b) {
                if !eta[&a].is_northwest_of(eta[&b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Product of the ambient hook lengths over the diagram's cells.
///
/// # Errors
/// Every cell must lie inside `lambda`.
pub fn diagram_weight(diagram: &ExcitedDiagram, lambda: &Partition) -> Result<BigUint> {
    let mut w = BigUint::one();
    for &c in diagram.cells() {
        w *= BigUint::from(hook_length(lambda, c)?);
    }
    Ok(w)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn hook_product(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut h = BigUint::one();
    for c in lambda.cells() {
        h *= BigUint::from(lambda.part(c.row) - c.col + conj.part(c.col) - c.row + 1);
    }
    h
}

/// Number of standard fillings of `shape` via the hook-product sum over its
/// excited diagrams.
///
/// # Errors
/// Fails with an internal consistency error if the division is not exact,
/// which would mean the enumeration is wrong.
pub fn naruse_count(shape: &SkewShape) -> Result<BigUint> {
    let lambda = shape.outer();
    let mut sum = BigUint::zero();
    for d in enumerate_excited(shape) {
        sum += diagram_weight(&d, lambda)?;
    }
    let numerator = factorial(shape.size()) * sum;
    let denominator = hook_product(lambda);
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!(
            "hook-product sum for {shape} is not divisible by the hook product"
        )));
    }
    Ok(q)
}

/// Number of standard fillings of a straight shape: `n!` over the product of
/// all hook lengths.
pub fn frt_count(lambda: &Partition) -> BigUint {
    let numerator = factorial(lambda.size());
    let denominator = hook_product(lambda);
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r.is_zero());
    q
}

/// Exhaustive count of standard fillings: chains of partitions from inner to
/// outer, removing one removable corner at a time, memoized on the
/// intermediate partition.
///
/// # Errors
/// Refuses shapes with more than `budget` cells.
pub fn brute_force_count(shape: &SkewShape, budget: usize) -> Result<BigUint> {
    let n = shape.size();
    if n > budget {
        return Err(Error::Budget {
            what: "standard filling count",
            needed: n,
            limit: budget,
        });
    }
    let mut memo: HashMap<Vec<usize>, BigUint> = HashMap::new();
    Ok(chains_down(
        shape.outer().parts().to_vec(),
        shape.inner(),
        &mut memo,
    ))
}

fn chains_down(nu: Vec<usize>, inner: &Partition, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if nu.iter().sum::<usize>() == inner.size() {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(&nu) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..nu.len() {
        let is_corner = i + 1 == nu.len() || nu[i] > nu[i + 1];
        if is_corner && nu[i] > inner.part(i + 1) {
            let mut smaller = nu.clone();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += chains_down(smaller, inner, memo);
        }
    }
    memo.insert(nu, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BRUTE_FORCE_BUDGET;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn weight_multiset(s: &SkewShape) -> Vec<u64> {
        let mut w: Vec<u64> = enumerate_excited(s)
            .iter()
            .map(|d| {
                let digits = diagram_weight(d, s.outer()).unwrap().to_u64_digits();
                if digits.is_empty() {
                    0
                } else {
                    digits[0]
                }
            })
            .collect();
        w.sort_unstable();
        w
    }

    #[test]
    fn three_cubed_over_two_two() {
        let s = shape(&[3, 3, 3], &[2, 2]);
        let diagrams = enumerate_excited(&s);
        assert_eq!(diagrams.len(), 6);
        // Seed comes first and is the inner diagram.
        assert_eq!(
            diagrams[0].cells(),
            &[
                Cell::new(1, 1),
                Cell::new(1, 2),
                Cell::new(2, 1),
                Cell::new(2, 2)
            ]
        );
        assert_eq!(
            diagram_weight(&diagrams[0], s.outer()).unwrap(),
            BigUint::from(240u32)
        );
        assert_eq!(weight_multiset(&s), vec![12, 20, 40, 40, 80, 240]);
        assert_eq!(naruse_count(&s).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn fully_excited_diagram_weight() {
        let s = shape(&[3, 3, 3], &[2, 2]);
        let diagrams = enumerate_excited(&s);
        let last = diagrams.last().unwrap();
        assert_eq!(
            last.cells(),
            &[
                Cell::new(2, 2),
                Cell::new(2, 3),
                Cell::new(3, 2),
                Cell::new(3, 3)
            ]
        );
        assert_eq!(
            diagram_weight(last, s.outer()).unwrap(),
            BigUint::from(12u32)
        );
    }

    #[test]
    fn straight_shapes_have_one_diagram() {
        for outer in [vec![3usize, 2], vec![1], vec![4, 4, 3]] {
            let s = SkewShape::straight(Partition::new(outer).unwrap());
            let diagrams = enumerate_excited(&s);
            assert_eq!(diagrams.len(), 1);
            assert!(diagrams[0].cells().is_empty());
            assert_eq!(
                diagram_weight(&diagrams[0], s.outer()).unwrap(),
                BigUint::one()
            );
        }
    }

    #[test]
    fn ribbon_of_3_5_has_nine_diagrams() {
        let s = shape(&[4, 4, 3], &[3, 2]);
        assert_eq!(enumerate_excited(&s).len(), 9);
    }

    #[test]
    fn small_hook_counts() {
        assert_eq!(frt_count(&Partition::new(vec![3, 3, 3]).unwrap()), 42u32.into());
        assert_eq!(frt_count(&Partition::new(vec![6]).unwrap()), BigUint::one());
        assert_eq!(frt_count(&Partition::new(vec![2, 1]).unwrap()), 2u32.into());
        assert_eq!(frt_count(&Partition::empty()), BigUint::one());
        let hook = SkewShape::straight(Partition::new(vec![2, 1]).unwrap());
        assert_eq!(naruse_count(&hook).unwrap(), 2u32.into());
    }

    #[test]
    fn brute_force_agrees_on_worked_examples() {
        let b = |s: &SkewShape| brute_force_count(s, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
        assert_eq!(b(&shape(&[3, 3, 3], &[2, 2])), 6u32.into());
        assert_eq!(b(&shape(&[4, 4, 3], &[3, 2])), naruse_count(&shape(&[4, 4, 3], &[3, 2])).unwrap());
        assert_eq!(b(&SkewShape::straight(Partition::new(vec![1]).unwrap())), BigUint::one());
        // Empty region: the single empty chain.
        assert_eq!(b(&shape(&[2, 1], &[2, 1])), BigUint::one());
        // Disconnected region: two independent cells.
        assert_eq!(b(&shape(&[2, 1], &[1])), 2u32.into());
    }

    #[test]
    fn brute_force_budget() {
        let s = SkewShape::straight(Partition::new(vec![6, 5, 4, 3, 2, 1]).unwrap());
        match brute_force_count(&s, DEFAULT_BRUTE_FORCE_BUDGET) {
            Err(Error::Budget { needed: 21, limit: 20, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(brute_force_count(&s, 21).is_ok());
    }

    #[test]
    fn enumeration_matches_the_bijection_definition() {
        // Exhaustive cross-check on every skew shape with at most 8 cells
        // in the outer partition: generation by local moves agrees with the
        // order-preserving bijection definition.
        for outer in Partition::enumerate_up_to(8) {
            for inner in inner_partitions(&outer) {
                let s = SkewShape::new(outer.clone(), inner).unwrap();
                let enumerated: HashSet<Vec<Cell>> = enumerate_excited(&s)
                    .into_iter()
                    .map(|d| d.cells.clone())
                    .collect();
                let direct = subsets_matching_definition(&s);
                assert_eq!(enumerated, direct, "shape {s}");
            }
        }
    }

    fn inner_partitions(outer: &Partition) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            let i = prefix.len();
            if i == outer.rows() {
                continue;
            }
            let cap = outer.part(i + 1).min(if i == 0 { usize::MAX } else { prefix[i - 1] });
            for p in 1..=cap {
                let mut next = prefix.clone();
                next.push(p);
                out.push(Partition::new(next.clone()).unwrap());
                stack.push(next);
            }
        }
        out
    }

    fn subsets_matching_definition(s: &SkewShape) -> HashSet<Vec<Cell>> {
        let all: Vec<Cell> = s.outer().cells().collect();
        let k = s.inner().size();
        let mut out = HashSet::new();
        let mut chosen = Vec::new();
        subsets_rec(&all, 0, k, &mut chosen, s, &mut out);
        out
    }

    fn subsets_rec(
        all: &[Cell],
        from: usize,
        k: usize,
        chosen: &mut Vec<Cell>,
        s: &SkewShape,
        out: &mut HashSet<Vec<Cell>>,
    ) {
        if chosen.len() == k {
            if satisfies_excited_definition(chosen, s) {
                out.insert(chosen.clone());
            }
            return;
        }
        if all.len() - from < k - chosen.len() {
            return;
        }
        for i in from..all.len() {
            chosen.push(all[i]);
            subsets_rec(all, i + 1, k, chosen, s, out);
            chosen.pop();
        }
    }

    #[test]
    fn enumeration_is_closed_under_moves() {
        for (outer, inner) in [
            (vec![3usize, 3, 3], vec![2usize, 2]),
            (vec![4, 4, 3], vec![3, 2]),
            (vec![5, 4, 2], vec![2, 1]),
        ] {
            let s = shape(&outer, &inner);
            let diagrams = enumerate_excited(&s);
            let index: HashSet<Vec<Cell>> =
                diagrams.iter().map(|d| d.cells.clone()).collect();
            for d in &diagrams {
                let occupied: HashSet<Cell> = d.cells.iter().copied().collect();
                for &c in d.cells() {
                    if is_movable(c, &occupied, s.outer()) {
                        let mut next: Vec<Cell> = d
                            .cells
                            .iter()
                            .map(|&x| if x == c { c.southeast() } else { x })
                            .collect();
                        next.sort_unstable();
                        assert!(index.contains(&next), "move escaped the enumeration");
                    }
                }
            }
        }
    }

    #[test]
    fn naruse_matches_brute_force_on_a_mixed_bag() {
        for (outer, inner) in [
            (vec![5usize, 4, 3], vec![3usize, 2]),
            (vec![4, 4, 4], vec![2, 1]),
            (vec![6, 3, 1], vec![2]),
            (vec![3, 3, 2, 1], vec![1]),
            (vec![2, 2, 2, 2], vec![1, 1]),
        ] {
            let s = shape(&outer, &inner);
            assert_eq!(
                naruse_count(&s).unwrap(),
                brute_force_count(&s, DEFAULT_BRUTE_FORCE_BUDGET).unwrap(),
                "shape {s}"
            );
        }
    }
}
