//! Descent polynomials of ribbon shapes, exactly.
//!
//! For a descent set `I` with largest element `m`, the number of
//! permutations of `S_N` with descent set exactly `I` is a polynomial
//! `d(I; N)` of degree `m`.  It factors as a hook-ratio constant, a product
//! of linear terms vanishing on `I`, and an excitation factor `E(t)`: a
//! degree-`s` polynomial written in the Newton basis of the shifted
//! first-row hooks, whose coefficients `C_0, ..., C_s` are hook-product
//! sums over excited diagrams grouped by how many first-row cells remain.
//!
//! Two independent routes compute the `C_d`: grouping excited diagrams
//! ([`excitation_factor`]) and sliced circle/square weights
//! ([`coefficients_by_slicing`]).  A factorial scan over permutations
//! ([`brute_force_descent_count`]) anchors everything to the definition.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::excited::enumerate_excited;
use crate::poly::RationalPolynomial;
use crate::shapes::{
    alpha_vector, hook_length, hook_multiset_below_first_row, ribbon_from_descent_set, Cell,
    DescentSet, SkewShape,
};
use crate::sqci::{push, slice, sqci_weight, CellMultiset, PushDirection, SliceSpec, SqciDiagram};
use crate::{Error, Result};

/// A polynomial in the Newton basis of shifted first-row hooks:
/// `sum over d of coeffs[s-d] * (t + alphas[0]) ... (t + alphas[d-1])`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawNewton", into = "RawNewton")]
pub struct NewtonForm {
    alphas: Vec<usize>,
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawNewton {
    alphas: Vec<usize>,
    coeffs: Vec<String>,
}

impl TryFrom<RawNewton> for NewtonForm {
    type Error = Error;
    fn try_from(raw: RawNewton) -> Result<Self> {
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::Domain(format!("bad integer `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        NewtonForm::new(raw.alphas, coeffs)
    }
}

impl From<NewtonForm> for RawNewton {
    fn from(nf: NewtonForm) -> RawNewton {
        RawNewton {
            alphas: nf.alphas,
            coeffs: nf.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl NewtonForm {
    /// # Errors
    /// Needs one more coefficient than basis shifts, strictly decreasing
    /// shifts, and strictly positive coefficients.
    pub fn new(alphas: Vec<usize>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != alphas.len() + 1 {
            return Err(Error::Domain(format!(
                "need {} coefficients for {} shifts, got {}",
                alphas.len() + 1,
                alphas.len(),
                coeffs.len()
            )));
        }
        if alphas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain(format!(
                "shifts must strictly decrease, got {alphas:?}"
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| !c.is_positive()) {
            return Err(Error::Domain(format!(
                "coefficients must be strictly positive, got {bad}"
            )));
        }
        Ok(NewtonForm { alphas, coeffs })
    }

    /// Basis shifts `alpha_1 > alpha_2 > ... > alpha_s`.
    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    /// Coefficients `C_0, ..., C_s`; `C_{s-d}` multiplies the degree-`d`
    /// basis element.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.alphas.len()
    }

    /// Expansion into the monomial basis.
    pub fn to_polynomial(&self) -> RationalPolynomial {
        let s = self.alphas.len();
        let ratio = |c: &BigInt| BigRational::from_integer(c.clone());
        let mut basis = RationalPolynomial::one();
        let mut total = RationalPolynomial::constant(ratio(&self.coeffs[s]));
        for d in 1..=s {
            basis = basis.mul_linear(&BigRational::from_integer(BigInt::from(
                self.alphas[d - 1],
            )));
            total = total.add(&basis.scale(&ratio(&self.coeffs[s - d])));
        }
        total
    }

    pub fn eval_integer(&self, t: i64) -> BigInt {
        let s = self.alphas.len();
        let mut basis = BigInt::one();
        let mut total = self.coeffs[s].clone();
        for d in 1..=s {
            basis *= BigInt::from(t + self.alphas[d - 1] as i64);
            total += &self.coeffs[s - d] * &basis;
        }
        total
    }

    /// Renders as a sum of products of linear factors, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        let s = self.alphas.len();
        let mut out = String::new();
        for d in 0..=s {
            if d > 0 {
                out.push_str(" + ");
            }
            out.push_str(&self.coeffs[s - d].to_string());
            for &a in &self.alphas[..d] {
                out.push_str(&format!("*({var}+{a})"));
            }
        }
        out
    }
}

/// The excitation factor of a skew shape, by grouping excited diagrams
/// according to how many cells stay in the first row.
///
/// `C_{s-d}` sums, over diagrams with `d` first-row cells, the hook product
/// of the cells below row 1.
///
/// # Errors
/// With a nonempty inner shape, the outer partition's first two rows must
/// agree and the region must be connected.
pub fn excitation_factor(shape: &SkewShape) -> Result<NewtonForm> {
    let lambda = shape.outer();
    let mu = shape.inner();
    if mu.is_empty() {
        return NewtonForm::new(Vec::new(), vec![BigInt::one()]);
    }
    if lambda.part(1) != lambda.part(2) {
        return Err(Error::Domain(format!(
            "first two rows of {lambda} must agree before taking an excitation factor"
        )));
    }
    if !shape.is_connected() {
        return Err(Error::Domain(format!("{shape} is not connected")));
    }
    let s = mu.part(1);
    let alphas = alpha_vector(lambda)?[..s].to_vec();
    let mut coeffs = vec![BigInt::zero(); s + 1];
    for diagram in enumerate_excited(shape) {
        let d = diagram.first_row_cells();
        let prefix_ok = diagram
            .cells()
            .iter()
            .filter(|c| c.row == 1)
            .zip(1..)
            .all(|(c, j)| c.col == j);
        if d > s || !prefix_ok {
            return Err(Error::Inconsistency(format!(
                "excited diagram of {shape} has a non-prefix first row"
            )));
        }
        let mut below = BigInt::one();
        for &c in diagram.cells().iter().filter(|c| c.row >= 2) {
            below *= BigInt::from(hook_length(lambda, c)?);
        }
        coeffs[s - d] += below;
    }
    NewtonForm::new(alphas, coeffs).map_err(|e| {
        Error::Inconsistency(format!("excitation factor of {shape} is degenerate: {e}"))
    })
}

/// The same coefficients `C_0, ..., C_s`, via sliced circle/square weights:
/// the below-first-row circles are sliced at column `i`, the remainder is
/// pushed right into squares, and the weight is scaled by the hooks at the
/// bottoms of the columns `i+2, ..., s+1`.
///
/// # Errors
/// Needs a ribbon whose first two outer rows agree (inner may be empty).
pub fn coefficients_by_slicing(shape: &SkewShape) -> Result<Vec<BigInt>> {
    let lambda = shape.outer();
    let mu = shape.inner();
    if mu.is_empty() {
        return Ok(vec![BigInt::one()]);
    }
    if !shape.is_ribbon() || lambda.part(1) != lambda.part(2) {
        return Err(Error::Domain(format!(
            "sliced coefficients need a ribbon with equal first two rows, got {shape}"
        )));
    }
    let s = mu.part(1);
    let conj = lambda.conjugate();
    let inner_cells: Vec<Cell> = mu.cells().collect();
    let below: Vec<Cell> = slice(&inner_cells, SliceSpec::RowsAfter(1));
    let mut coeffs = vec![BigInt::zero(); s + 1];
    for i in 0..=s {
        let kept = slice(&below, SliceSpec::ColumnsUpTo(i));
        let pushed = push(
            &slice(&below, SliceSpec::ColumnsAfter(i)),
            PushDirection::Right,
        );
        let diagram = SqciDiagram::new(lambda.clone(), kept, CellMultiset::new(pushed))?;
        let mut value = BigInt::from(sqci_weight(&diagram));
        for j in 1..=s - i {
            let col = i + j + 1;
            let bottom = Cell::new(conj.part(col), col);
            value *= BigInt::from(hook_length(lambda, bottom)?);
        }
        coeffs[s - i] = value;
    }
    Ok(coeffs)
}

/// The factor of the counting polynomial carrying the integer roots: the
/// reciprocal below-first-row hook product times `prod over i in set of
/// (t + m - i)` with `m` the largest descent.
///
/// # Errors
/// `shape` must be the minimal ribbon of `set`.
pub fn trivial_part(shape: &SkewShape, set: &DescentSet) -> Result<RationalPolynomial> {
    if shape != &ribbon_from_descent_set(set) {
        return Err(Error::Domain(format!(
            "{shape} is not the minimal ribbon of {set}"
        )));
    }
    let Some(m) = set.max_element() else {
        return Ok(RationalPolynomial::one());
    };
    let mut h = BigInt::one();
    for hook in hook_multiset_below_first_row(shape.outer()) {
        h *= BigInt::from(hook);
    }
    let mut t = RationalPolynomial::constant(BigRational::new(BigInt::one(), h));
    for &i in set.elements() {
        t = t.mul_linear(&BigRational::from_integer(BigInt::from(m - i)));
    }
    Ok(t)
}

/// The polynomial `p(t)` counting standard fillings of the shape with its
/// first row extended by `t - 1` cells.
///
/// Assembled as the reciprocal below-first-row hook product, times the
/// linear factors `t + beta` over `beta` in `{0, ..., n-1}` minus the
/// first-row alpha values, times the excitation factor.
///
/// # Errors
/// The region must be connected, and with a nonempty inner shape the outer
/// partition's first two rows must agree.
pub fn extension_count_polynomial(shape: &SkewShape) -> Result<RationalPolynomial> {
    if !shape.is_connected() {
        return Err(Error::Domain(format!("{shape} is not connected")));
    }
    let lambda = shape.outer();
    let n = shape.size();
    let alpha = alpha_vector(lambda)?;
    if alpha.iter().any(|&a| a >= n) {
        return Err(Error::Inconsistency(format!(
            "first-row hook of {shape} exceeds the region size despite connectivity"
        )));
    }
    let e = excitation_factor(shape)?;
    let mut h = BigInt::one();
    for hook in hook_multiset_below_first_row(lambda) {
        h *= BigInt::from(hook);
    }
    let mut p = e
        .to_polynomial()
        .scale(&BigRational::new(BigInt::one(), h));
    for beta in 0..n {
        if !alpha.contains(&beta) {
            p = p.mul_linear(&BigRational::from_integer(BigInt::from(beta)));
        }
    }
    Ok(p)
}

/// The descent polynomial `d(set; N)`: for `N` large enough, the number of
/// permutations of `S_N` with descent set exactly `set`.  Computed as the
/// trivial part times the excitation factor of the minimal ribbon,
/// reparametrized by `t = N - m`.  The empty set gives the constant 1.
pub fn descent_polynomial(set: &DescentSet) -> RationalPolynomial {
    let Some(m) = set.max_element() else {
        return RationalPolynomial::one();
    };
    let ribbon = ribbon_from_descent_set(set);
    let e = excitation_factor(&ribbon)
        .expect("minimal ribbons are connected with equal first two rows");
    let t = trivial_part(&ribbon, set).expect("shape is the minimal ribbon of its own set");
    t.mul(&e.to_polynomial())
        .shift(&BigRational::from_integer(BigInt::from(-(m as i64))))
}

const SCAN_LIMIT: usize = 10;

static DESCENT_TABLES: OnceLock<Mutex<HashMap<usize, Arc<Vec<u64>>>>> = OnceLock::new();

fn descent_distribution(n: usize) -> Arc<Vec<u64>> {
    let tables = DESCENT_TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("descent table lock");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(scan_permutations(n)))
        .clone()
}

/// Heap's algorithm over all of `S_n`, tallying descent-set bitmasks.
fn scan_permutations(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; 1 << (n - 1)];
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    let tally = |perm: &[u8], counts: &mut Vec<u64>| {
        let mut mask = 0usize;
        for i in 0..n - 1 {
            if perm[i] > perm[i + 1] {
                mask |= 1 << i;
            }
        }
        counts[mask] += 1;
    };
    tally(&perm, &mut counts);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            tally(&perm, &mut counts);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    counts
}

/// Exact count of permutations of `S_n` with descent set exactly `set`,
/// by scanning all of `S_n` (tables are cached per `n`).
///
/// # Errors
/// Needs `1 <= n <= 10`.
pub fn brute_force_descent_count(set: &DescentSet, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("permutations need n >= 1".into()));
    }
    if n > SCAN_LIMIT {
        return Err(Error::Budget {
            what: "factorial descent scan",
            needed: n,
            limit: SCAN_LIMIT,
        });
    }
    if set.max_element().is_some_and(|m| m >= n) {
        return Ok(BigUint::zero());
    }
    let mask: usize = set.elements().iter().map(|&i| 1 << (i - 1)).sum();
    Ok(BigUint::from(descent_distribution(n)[mask]))
}

/// Outcome of the factorial-ratio monotonicity check.
#[derive(Clone, Debug)]
pub struct MonotonicityVerdict {
    /// The exact ratios `C_d / d!`.
    pub ratios: Vec<BigRational>,
    pub holds: bool,
}

/// Checks that `C_0/0! >= C_1/1! >= ... >= C_s/s!`.
pub fn check_coefficient_monotonicity(nf: &NewtonForm) -> MonotonicityVerdict {
    let mut factorial = BigInt::one();
    let ratios: Vec<BigRational> = nf
        .coefficients()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            if d > 0 {
                factorial *= BigInt::from(d);
            }
            BigRational::new(c.clone(), factorial.clone())
        })
        .collect();
    let holds = ratios.windows(2).all(|w| w[0] >= w[1]);
    MonotonicityVerdict { ratios, holds }
}

/// One conditional chain outcome; `pivot` is the column index that
/// triggered the hypothesis.
#[derive(Clone, Debug)]
pub struct ChainVerdict {
    pub pivot: usize,
    pub holds: bool,
}

/// Outcome of the column-height conditioned ratio checks.
#[derive(Clone, Debug)]
pub struct ColumnConditionVerdict {
    /// Where column `i+1` is strictly taller than column `i+2`:
    /// the tail ratios `C_{s-i}/0! >= C_{s-i+1}/1! >= ... >= C_s/i!`.
    pub descending_chains: Vec<ChainVerdict>,
    /// Where columns `i+1` and `s+1` both have height exactly 2:
    /// the head ratios `C_0/0! = C_1/1! = ... = C_{s-i}/(s-i)!`.
    pub equality_chains: Vec<ChainVerdict>,
    pub holds: bool,
}

/// Evaluates the sharpened ratio chains that hold under column-height
/// hypotheses on the outer shape.
///
/// # Errors
/// Same domain as [`excitation_factor`]; the shape must also be a ribbon.
pub fn check_column_conditioned_monotonicity(shape: &SkewShape) -> Result<ColumnConditionVerdict> {
    if !shape.is_ribbon() {
        return Err(Error::Domain(format!(
            "conditioned monotonicity is about ribbons, got {shape}"
        )));
    }
    let nf = excitation_factor(shape)?;
    let s = nf.degree();
    let conj = shape.outer().conjugate();
    let ratio = |c: &BigInt, k: usize| {
        let mut f = BigInt::one();
        for j in 2..=k {
            f *= BigInt::from(j);
        }
        BigRational::new(c.clone(), f)
    };
    let mut descending = Vec::new();
    let mut equality = Vec::new();
    for i in 0..=s {
        if conj.part(i + 1) > conj.part(i + 2) {
            let chain: Vec<BigRational> = (0..=i)
                .map(|j| ratio(&nf.coefficients()[s - i + j], j))
                .collect();
            descending.push(ChainVerdict {
                pivot: i,
                holds: chain.windows(2).all(|w| w[0] >= w[1]),
            });
        }
        if conj.part(i + 1) == 2 && conj.part(s + 1) == 2 {
            let chain: Vec<BigRational> = (0..=s - i)
                .map(|j| ratio(&nf.coefficients()[j], j))
                .collect();
            equality.push(ChainVerdict {
                pivot: i,
                holds: chain.windows(2).all(|w| w[0] == w[1]),
            });
        }
    }
    let holds = descending.iter().chain(equality.iter()).all(|c| c.holds);
    Ok(ColumnConditionVerdict {
        descending_chains: descending,
        equality_chains: equality,
        holds,
    })
}

/// Outcome of the shifted-coefficient positivity check.
#[derive(Clone, Debug)]
pub struct PositivityVerdict {
    /// Coefficients of `d(set; x + m)`, ascending.
    pub coeffs: Vec<BigRational>,
    pub holds: bool,
}

/// Checks the coefficients of `d(set; x + m)`: the constant term vanishes
/// (since `m` is always a root of the descent polynomial) and every higher
/// coefficient is strictly positive.
pub fn check_shifted_positivity(set: &DescentSet) -> PositivityVerdict {
    let Some(m) = set.max_element() else {
        return PositivityVerdict {
            coeffs: vec![BigRational::one()],
            holds: true,
        };
    };
    let shifted = descent_polynomial(set).shift(&BigRational::from_integer(BigInt::from(m)));
    let coeffs: Vec<BigRational> = (0..=m).map(|k| shifted.coefficient(k)).collect();
    let holds =
        coeffs[0].is_zero() && coeffs[1..].iter().all(|c| c.is_positive());
    PositivityVerdict { coeffs, holds }
}
