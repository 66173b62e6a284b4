//! Hook lengths, reverse plane partition generating functions and the
//! content-weighted hook-length formula.
//!
//! Content weights assign a positive rational `x_c` to every diagonal
//! `c = col - row`. The x-hook-length of a box sums `x_c` over its hook and
//! the x-weight of a tableau sums `t(i,j) x_{j-i}`; all weights equal to 1
//! recovers ordinary hook lengths and `|T|`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::tableau::NTableau;
use crate::toggle_rsk::toggle_rsk;

/// Exact rational scalar.
pub type Rational = BigRational;

/// Enumeration limits for the exponential oracles in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesCaps {
    pub max_boxes: usize,
    pub max_degree: usize,
}

impl Default for SeriesCaps {
    fn default() -> Self {
        SeriesCaps {
            max_boxes: 6,
            max_degree: 12,
        }
    }
}

impl SeriesCaps {
    fn check_boxes(&self, shape: &Partition) -> Result<()> {
        if shape.size() > self.max_boxes {
            return Err(Error::CapExceeded {
                what: "boxes",
                limit: self.max_boxes,
                actual: shape.size(),
            });
        }
        Ok(())
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::CapExceeded {
                what: "series degree",
                limit: self.max_degree,
                actual: degree,
            });
        }
        Ok(())
    }
}

/// A power series in `q` with big-integer coefficients, kept modulo
/// `q^(degree+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = TruncatedSeries::zero(degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `degree` is dropped.
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(coeffs: I, degree: usize) -> Self {
        let mut s = TruncatedSeries::zero(degree);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `1 / (1 - q^step)`.
    pub fn geometric(step: usize, degree: usize) -> Result<Self> {
        let mut s = TruncatedSeries::one(degree);
        s.mul_geometric(step)?;
        Ok(s)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Multiplies in place by `1 / (1 - q^step)`.
    pub fn mul_geometric(&mut self, step: usize) -> Result<()> {
        if step == 0 {
            return Err(Error::ZeroDenominator);
        }
        for n in step..self.coeffs.len() {
            let prev = self.coeffs[n - step].clone();
            self.coeffs[n] += prev;
        }
        Ok(())
    }

    /// Truncates both operands to the smaller degree and adds.
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let degree = self.degree().min(other.degree());
        TruncatedSeries {
            coeffs: (0..=degree)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    /// Truncates both operands to the smaller degree and multiplies.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let degree = self.degree().min(other.degree());
        let mut out = TruncatedSeries::zero(degree);
        for (a, ca) in self.coeffs.iter().enumerate().take(degree + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(degree + 1 - a) {
                out.coeffs[a + b] += ca * cb;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| match n {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{n}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(q^{})", self.degree() + 1)
    }
}

/// Positive rational weights `x_c` indexed by content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentWeights {
    weights: BTreeMap<i64, Rational>,
}

impl ContentWeights {
    pub fn new(weights: BTreeMap<i64, Rational>) -> Result<Self> {
        if let Some((&c, _)) = weights.iter().find(|(_, w)| !w.is_positive()) {
            return Err(Error::NonPositiveWeight(c));
        }
        Ok(ContentWeights { weights })
    }

    /// Weights that must cover every content of `shape`, from
    /// `1 - rows` to `cols - 1`.
    pub fn for_shape(shape: &Partition, weights: BTreeMap<i64, Rational>) -> Result<Self> {
        let w = ContentWeights::new(weights)?;
        for c in content_range(shape) {
            w.get(c)?;
        }
        Ok(w)
    }

    /// The same weight on every content of `shape`.
    pub fn uniform(shape: &Partition, value: Rational) -> Result<Self> {
        ContentWeights::new(content_range(shape).map(|c| (c, value.clone())).collect())
    }

    /// All weights equal to 1.
    pub fn ones(shape: &Partition) -> Self {
        ContentWeights {
            weights: content_range(shape).map(|c| (c, Rational::one())).collect(),
        }
    }

    pub fn get(&self, content: i64) -> Result<&Rational> {
        self.weights
            .get(&content)
            .ok_or(Error::MissingWeight(content))
    }

    pub fn weights(&self) -> &BTreeMap<i64, Rational> {
        &self.weights
    }

    /// The weights as positive integers, for series specialisation.
    pub fn as_integers(&self) -> Result<BTreeMap<i64, usize>> {
        self.weights
            .iter()
            .map(|(&c, w)| {
                if !w.is_integer() {
                    return Err(Error::NonIntegerWeight(c));
                }
                w.to_integer()
                    .to_usize()
                    .map(|v| (c, v))
                    .ok_or(Error::Overflow)
            })
            .collect()
    }
}

/// Contents occurring in `shape`; empty for the empty shape.
pub fn content_range(shape: &Partition) -> std::ops::RangeInclusive<i64> {
    if shape.is_empty() {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    (1 - shape.num_rows() as i64)..=(shape.num_cols() as i64 - 1)
}

/// `h_λ(i,j)`, the size of the hook; 0 off the shape.
pub fn hook_length(shape: &Partition, cell: Cell) -> usize {
    shape.hook_cells(cell).len()
}

/// `h_λ(i,j; x)`: the content weights summed over the hook at `cell`.
pub fn x_hook_length(shape: &Partition, cell: Cell, w: &ContentWeights) -> Result<Rational> {
    if !shape.contains(cell) {
        return Err(Error::BoxOutOfShape(cell));
    }
    shape
        .hook_cells(cell)
        .into_iter()
        .try_fold(Rational::zero(), |acc, c| Ok(acc + w.get(c.content())?))
}

/// `|T|_x = Σ t(i,j) x_{j-i}`.
pub fn weighted_weight(t: &NTableau, w: &ContentWeights) -> Result<Rational> {
    t.entries().try_fold(Rational::zero(), |acc, (cell, v)| {
        Ok(acc + w.get(cell.content())? * Rational::from_integer(BigInt::from(v)))
    })
}

/// Both sides of `|T̂|_x = Σ t(i,j) h_λ(i,j; x)`.
pub fn weight_formula_sides(t: &NTableau, w: &ContentWeights) -> Result<(Rational, Rational)> {
    let lhs = weighted_weight(&toggle_rsk(t, None)?, w)?;
    let rhs = t.entries().try_fold(Rational::zero(), |acc, (cell, v)| {
        Ok::<_, Error>(
            acc + x_hook_length(t.shape(), cell, w)? * Rational::from_integer(BigInt::from(v)),
        )
    })?;
    Ok((lhs, rhs))
}

/// Whether the toggle output's x-weight equals the hook-weighted input sum.
pub fn check_weight_formula(t: &NTableau, w: &ContentWeights) -> Result<bool> {
    let (lhs, rhs) = weight_formula_sides(t, w)?;
    Ok(lhs == rhs)
}

/// `Π_{boxes} 1 / (1 - q^{h_λ(i,j)})` through degree `degree`.
pub fn rpp_gf(shape: &Partition, degree: usize, caps: SeriesCaps) -> Result<TruncatedSeries> {
    caps.check_degree(degree)?;
    let mut s = TruncatedSeries::one(degree);
    for cell in shape.cells() {
        s.mul_geometric(hook_length(shape, cell))?;
    }
    Ok(s)
}

/// Histogram of `Σ t(i,j) box_weight(i,j)` over reverse plane partitions
/// whose weighted total is at most `degree`. Entries are placed in reading
/// order, each at least the entries above and to its left.
fn rpp_weight_histogram(shape: &Partition, box_weights: &[usize], degree: usize) -> Vec<BigInt> {
    struct Search<'a> {
        shape: &'a Partition,
        cells: Vec<Cell>,
        box_weights: &'a [usize],
        values: Vec<usize>,
        hist: Vec<u64>,
        degree: usize,
    }

    impl Search<'_> {
        fn value_at(&self, idx: usize, row: usize, col: usize) -> usize {
            // reading-order index of (row, col); only called for boxes
            // placed before idx
            let offset: usize = self.shape.parts()[..row - 1].iter().sum();
            let pos = offset + col - 1;
            debug_assert!(pos < idx);
            self.values[pos]
        }

        fn go(&mut self, idx: usize, total: usize) {
            if idx == self.cells.len() {
                self.hist[total] += 1;
                return;
            }
            let cell = self.cells[idx];
            let left = if cell.col > 1 {
                self.value_at(idx, cell.row, cell.col - 1)
            } else {
                0
            };
            let up = if cell.row > 1 {
                self.value_at(idx, cell.row - 1, cell.col)
            } else {
                0
            };
            let weight = self.box_weights[idx];
            let mut v = left.max(up);
            while total + v * weight <= self.degree {
                self.values.push(v);
                self.go(idx + 1, total + v * weight);
                self.values.pop();
                v += 1;
            }
        }
    }

    let mut search = Search {
        shape,
        cells: shape.cells().collect(),
        box_weights,
        values: Vec::with_capacity(shape.size()),
        hist: vec![0; degree + 1],
        degree,
    };
    search.go(0, 0);
    search.hist.into_iter().map(BigInt::from).collect()
}

/// `Σ_T q^{|T|}` over reverse plane partitions of `shape`, by enumeration.
pub fn rpp_gf_brute(shape: &Partition, degree: usize, caps: SeriesCaps) -> Result<TruncatedSeries> {
    caps.check_boxes(shape)?;
    caps.check_degree(degree)?;
    let ones = vec![1; shape.size()];
    Ok(TruncatedSeries::from_coeffs(
        rpp_weight_histogram(shape, &ones, degree),
        degree,
    ))
}

/// `Π 1/(1 - q^{h_λ(i,j;w)})` for positive-integer weights, i.e. the
/// product side under `z_c = q^{w_c}`.
pub fn weighted_rpp_gf(
    shape: &Partition,
    w: &ContentWeights,
    degree: usize,
    caps: SeriesCaps,
) -> Result<TruncatedSeries> {
    caps.check_degree(degree)?;
    let ints = positive_integer_weights(shape, w)?;
    let mut s = TruncatedSeries::one(degree);
    for cell in shape.cells() {
        let h: usize = shape
            .hook_cells(cell)
            .iter()
            .map(|c| ints[&c.content()])
            .sum();
        s.mul_geometric(h)?;
    }
    Ok(s)
}

/// `Σ_T q^{|T|_w}` over reverse plane partitions, by enumeration.
pub fn weighted_rpp_gf_brute(
    shape: &Partition,
    w: &ContentWeights,
    degree: usize,
    caps: SeriesCaps,
) -> Result<TruncatedSeries> {
    caps.check_boxes(shape)?;
    caps.check_degree(degree)?;
    let ints = positive_integer_weights(shape, w)?;
    let box_weights: Vec<usize> = shape.cells().map(|c| ints[&c.content()]).collect();
    Ok(TruncatedSeries::from_coeffs(
        rpp_weight_histogram(shape, &box_weights, degree),
        degree,
    ))
}

fn positive_integer_weights(shape: &Partition, w: &ContentWeights) -> Result<BTreeMap<i64, usize>> {
    for c in content_range(shape) {
        w.get(c)?;
    }
    let ints = w.as_integers()?;
    if let Some((&c, _)) = ints.iter().find(|(_, &v)| v == 0) {
        return Err(Error::NonPositiveWeight(c));
    }
    Ok(ints)
}

/// Whether both sides of the weighted RPP identity agree through `degree`
/// under the specialisation `z_c = q^{w_c}`.
pub fn weighted_rpp_gf_check(
    shape: &Partition,
    w: &ContentWeights,
    degree: usize,
    caps: SeriesCaps,
) -> Result<bool> {
    Ok(weighted_rpp_gf(shape, w, degree, caps)? == weighted_rpp_gf_brute(shape, w, degree, caps)?)
}

/// Standard Young tableaux of `shape`: box `k` of each linear extension
/// receives entry `k`.
pub fn syt_enumerate(shape: &Partition, cap: usize) -> Result<impl Iterator<Item = NTableau>> {
    let shape = shape.clone();
    let extensions = shape.linear_extensions(cap)?;
    Ok(extensions.map(move |order| {
        let mut t = NTableau::zeros(shape.clone());
        for (k, cell) in order.into_iter().enumerate() {
            t.set(cell, k as u64 + 1);
        }
        t
    }))
}

/// Boxes of a standard Young tableau indexed by entry, `positions[k-1]`
/// holding entry `k`.
fn syt_positions(t: &NTableau) -> Result<Vec<Cell>> {
    let n = t.shape().size();
    let mut positions: Vec<Option<Cell>> = vec![None; n];
    for (cell, v) in t.entries() {
        let slot = (v as usize)
            .checked_sub(1)
            .and_then(|i| positions.get_mut(i))
            .ok_or_else(|| Error::InvalidTableau(format!("entry {v} is not in 1..={n}")))?;
        if slot.replace(cell).is_some() {
            return Err(Error::InvalidTableau(format!("entry {v} repeats")));
        }
    }
    let rows_ok = t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = t.rows().windows(2).all(|pair| {
        pair[1]
            .iter()
            .zip(&pair[0])
            .all(|(below, above)| above < below)
    });
    if !rows_ok || !cols_ok {
        return Err(Error::InvalidTableau("not a standard Young tableau".into()));
    }
    Ok(positions
        .into_iter()
        .map(|c| c.expect("all entries seen"))
        .collect())
}

/// `T_x = Π_{k=1}^{n} 1 / Σ_{l=1}^{k} x_{c(n+1-l)}`, where `c(m)` is the
/// content of the box holding `m`: the partial sums add the boxes from the
/// largest entry downwards.
pub fn t_x_value(t: &NTableau, w: &ContentWeights) -> Result<Rational> {
    let positions = syt_positions(t)?;
    let mut partial = Rational::zero();
    let mut product = Rational::one();
    for cell in positions.iter().rev() {
        partial += w.get(cell.content())?;
        if partial.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        product *= &partial;
    }
    Ok(product.recip())
}

/// `(Σ_T T_x, Π 1/h_λ(i,j; x))` over standard Young tableaux of `shape`.
pub fn whlf_sides(
    shape: &Partition,
    w: &ContentWeights,
    cap: usize,
) -> Result<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    for t in syt_enumerate(shape, cap)? {
        lhs += t_x_value(&t, w)?;
    }
    let mut hooks = Rational::one();
    for cell in shape.cells() {
        hooks *= x_hook_length(shape, cell, w)?;
    }
    if hooks.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((lhs, hooks.recip()))
}

/// The content-weighted hook-length formula, in exact arithmetic.
pub fn check_whlf(shape: &Partition, w: &ContentWeights, cap: usize) -> Result<bool> {
    let (lhs, rhs) = whlf_sides(shape, w, cap)?;
    Ok(lhs == rhs)
}

/// `n! / Π h_λ(i,j)`.
pub fn syt_count_by_hooks(shape: &Partition) -> BigUint {
    let factorial: BigUint = (1..=shape.size()).map(BigUint::from).product();
    let hooks: BigUint = shape
        .cells()
        .map(|c| BigUint::from(hook_length(shape, c)))
        .product();
    factorial / hooks
}
