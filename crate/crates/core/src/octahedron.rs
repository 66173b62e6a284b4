//! The three-dimensional arrays `U_T`, `Ū_T` and `Ũ_T` that record every
//! stage of toggle RSK at once.
//!
//! `U_T` lives on the points `(i, j, k)` such that some `(i+a, j+b)` with
//! `a, b ∈ {0, 1, 2}` is a box of the shape and `0 <= k <= min(i, j) + 1`.
//! Its interior obeys
//!
//! ```text
//! u(i,j,k) = min(u(i-1,j,k-1), u(i,j-1,k-1)) + max(u(i-1,j,k), u(i,j-1,k))
//!            - u(i-1,j-1,k-1) + [k = 1] t(i,j)
//! ```
//!
//! with zeros on the levels `k = 0` and `k = min(i, j) + 1`. `Ū_T` takes
//! partial sums along `k` over the smaller domain `a, b ∈ {0, 1}`,
//! `0 <= k <= min(i, j)`, and `Ũ_T` subtracts the rectangle sums so that it
//! satisfies the tropical octahedron recurrence.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::tableau::NTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArrayKind {
    U,
    Ubar,
    Utilde,
}

impl ArrayKind {
    pub fn name(self) -> &'static str {
        match self {
            ArrayKind::U => "U",
            ArrayKind::Ubar => "Ubar",
            ArrayKind::Utilde => "Utilde",
        }
    }

    /// How far up-left of a box a point may sit, and how far above
    /// `min(i, j)` the top level reaches.
    fn reach(self) -> (i64, i64) {
        match self {
            ArrayKind::U => (2, 1),
            ArrayKind::Ubar | ArrayKind::Utilde => (1, 0),
        }
    }
}

/// A sparse pyramid-shaped array over the exact domain of its kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidArray {
    kind: ArrayKind,
    shape: Partition,
    entries: BTreeMap<(i64, i64, i64), i64>,
}

/// One `{"i","j","k","v"}` record of the JSON form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Record {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub v: i64,
}

impl Serialize for PyramidArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for record in self.records() {
            seq.serialize_element(&record)?;
        }
        seq.end()
    }
}

/// Every `(i, j)` column of the domain with its top level, row-major.
fn domain_columns(kind: ArrayKind, shape: &Partition) -> Vec<(i64, i64, i64)> {
    let (reach, lift) = kind.reach();
    let rows = shape.num_rows() as i64;
    let cols = shape.num_cols() as i64;
    let mut out = Vec::new();
    for i in (1 - reach)..=rows {
        for j in (1 - reach)..=cols {
            let near_box =
                (0..=reach).any(|a| (0..=reach).any(|b| shape.contains_signed(i + a, j + b)));
            let top = i.min(j) + lift;
            if near_box && top >= 0 {
                out.push((i, j, top));
            }
        }
    }
    out
}

fn checked(value: Option<i64>) -> Result<i64> {
    value.ok_or(Error::Overflow)
}

impl PyramidArray {
    pub fn kind(&self) -> ArrayKind {
        self.kind
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn get(&self, i: i64, j: i64, k: i64) -> Option<i64> {
        self.entries.get(&(i, j, k)).copied()
    }

    pub fn in_domain(&self, i: i64, j: i64, k: i64) -> bool {
        self.entries.contains_key(&(i, j, k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64, i64), i64)> + '_ {
        self.entries.iter().map(|(&key, &v)| (key, v))
    }

    /// Records sorted by `(k, i, j)`, level by level.
    pub fn records(&self) -> Vec<Record> {
        let mut out: Vec<Record> = self
            .entries
            .iter()
            .map(|(&(i, j, k), &v)| Record { i, j, k, v })
            .collect();
        out.sort_by_key(|r| (r.k, r.i, r.j));
        out
    }

    pub fn max_level(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, _, k)| k).max()
    }

    /// Level `k` as a map from `(i, j)` to value.
    pub fn level(&self, k: i64) -> BTreeMap<(i64, i64), i64> {
        self.entries
            .iter()
            .filter(|(&(_, _, kk), _)| kk == k)
            .map(|(&(i, j, _), &v)| ((i, j), v))
            .collect()
    }

    /// Level `k` as dense rows over its bounding box, for comparison with
    /// tabulated values.
    pub fn level_rows(&self, k: i64) -> Vec<Vec<i64>> {
        let level = self.level(k);
        let Some(i_min) = level.keys().map(|&(i, _)| i).min() else {
            return Vec::new();
        };
        let i_max = level.keys().map(|&(i, _)| i).max().unwrap_or(i_min);
        let j_min = level.keys().map(|&(_, j)| j).min().unwrap_or(0);
        let j_max = level.keys().map(|&(_, j)| j).max().unwrap_or(j_min);
        (i_min..=i_max)
            .map(|i| {
                (j_min..=j_max)
                    .filter_map(|j| level.get(&(i, j)).copied())
                    .collect()
            })
            .collect()
    }

    /// Renders every level as a grid, with all levels sharing columns so that
    /// their bottom-right corners line up.
    pub fn render_levels(&self) -> String {
        let mut out = String::new();
        let Some(k_max) = self.max_level() else {
            let _ = writeln!(out, "{} (empty)", self.kind.name());
            return out;
        };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let j_min = self.entries.keys().map(|&(_, j, _)| j).min().unwrap_or(0);
        let j_max = self.entries.keys().map(|&(_, j, _)| j).max().unwrap_or(0);
        for k in 0..=k_max {
            let level = self.level(k);
            let _ = writeln!(out, "{} k={}", self.kind.name(), k);
            let i_min = level.keys().map(|&(i, _)| i).min();
            let i_max = level.keys().map(|&(i, _)| i).max();
            if let (Some(i_min), Some(i_max)) = (i_min, i_max) {
                for i in i_min..=i_max {
                    let line: Vec<String> = (j_min..=j_max)
                        .map(|j| match level.get(&(i, j)) {
                            Some(v) => format!("{v:>width$}"),
                            None => " ".repeat(width),
                        })
                        .collect();
                    let _ = writeln!(out, "  {}", line.join(" ").trim_end());
                }
            }
        }
        out
    }

    fn expect_kind(&self, kind: ArrayKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind.name(),
                actual: self.kind.name(),
            });
        }
        Ok(())
    }

    fn at(&self, i: i64, j: i64, k: i64) -> Result<i64> {
        self.get(i, j, k).ok_or_else(|| {
            Error::DomainMismatch(format!(
                "({i},{j},{k}) is outside the {} domain",
                self.kind.name()
            ))
        })
    }
}

/// Builds `U_T`, filling by increasing `k` and then row-major `(i, j)`.
pub fn build_u(t: &NTableau) -> Result<PyramidArray> {
    let shape = t.shape().clone();
    let columns = domain_columns(ArrayKind::U, &shape);
    let mut arr = PyramidArray {
        kind: ArrayKind::U,
        shape,
        entries: BTreeMap::new(),
    };
    let k_max = columns.iter().map(|&(_, _, top)| top).max().unwrap_or(-1);
    for k in 0..=k_max {
        for &(i, j, top) in columns.iter().filter(|&&(_, _, top)| top >= k) {
            let value = if k == 0 || k == top {
                0
            } else {
                let lower = arr.at(i - 1, j, k - 1)?.min(arr.at(i, j - 1, k - 1)?);
                let upper = arr.at(i - 1, j, k)?.max(arr.at(i, j - 1, k)?);
                let source = if k == 1 {
                    i64::try_from(t.value_or_zero(i, j)).map_err(|_| Error::Overflow)?
                } else {
                    0
                };
                let v = checked(lower.checked_add(upper))?;
                let v = checked(v.checked_sub(arr.at(i - 1, j - 1, k - 1)?))?;
                checked(v.checked_add(source))?
            };
            arr.entries.insert((i, j, k), value);
        }
    }
    Ok(arr)
}

/// `ū(i,j,k) = Σ_{l<=k} u(i,j,l)` over the `Ū` domain.
pub fn build_ubar(u: &PyramidArray) -> Result<PyramidArray> {
    u.expect_kind(ArrayKind::U)?;
    let mut entries = BTreeMap::new();
    for (i, j, top) in domain_columns(ArrayKind::Ubar, &u.shape) {
        let mut acc = 0i64;
        for k in 0..=top {
            acc = checked(acc.checked_add(u.at(i, j, k)?))?;
            entries.insert((i, j, k), acc);
        }
    }
    Ok(PyramidArray {
        kind: ArrayKind::Ubar,
        shape: u.shape.clone(),
        entries,
    })
}

fn rect_or_zero(t: &NTableau, i: i64, j: i64) -> Result<i64> {
    if !t.shape().contains_signed(i, j) {
        return Ok(0);
    }
    let rect = t.rect_sum(Cell::new(i as usize, j as usize))?;
    i64::try_from(rect).map_err(|_| Error::Overflow)
}

/// `ũ(i,j,k) = ū(i,j,k) - rect_T(i,j)`, with `rect_T` zero off the shape.
pub fn build_utilde(ubar: &PyramidArray, t: &NTableau) -> Result<PyramidArray> {
    ubar.expect_kind(ArrayKind::Ubar)?;
    if &ubar.shape != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "array built on {} but tableau has shape {}",
            ubar.shape,
            t.shape()
        )));
    }
    let mut entries = BTreeMap::new();
    for (&(i, j, k), &v) in &ubar.entries {
        let shifted = checked(v.checked_sub(rect_or_zero(t, i, j)?))?;
        entries.insert((i, j, k), shifted);
    }
    Ok(PyramidArray {
        kind: ArrayKind::Utilde,
        shape: ubar.shape.clone(),
        entries,
    })
}

/// All three arrays for `t`.
pub fn build_all(t: &NTableau) -> Result<(PyramidArray, PyramidArray, PyramidArray)> {
    let u = build_u(t)?;
    let ubar = build_ubar(&u)?;
    let utilde = build_utilde(&ubar, t)?;
    Ok((u, ubar, utilde))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OctahedronRule {
    /// `ũ(i,j,0) = -rect_T(i,j)`.
    LowerBoundary,
    /// `ũ(i,j,min(i,j)) = 0`.
    UpperBoundary,
    /// The tropical octahedron recurrence at `0 < k < min(i,j)`.
    Recurrence,
    /// A point the recurrence needs is missing from the array.
    MissingPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OctahedronViolation {
    pub rule: OctahedronRule,
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub expected: i64,
    pub actual: i64,
}

/// Checks `Ũ_T` against both boundary conditions and the recurrence
///
/// ```text
/// ũ(i,j,k) = max(ũ(i-1,j,k) + ũ(i,j-1,k-1), ũ(i-1,j,k-1) + ũ(i,j-1,k)) - ũ(i-1,j-1,k-1)
/// ```
///
/// The lower boundary depends on the rectangle sums, hence the tableau.
pub fn check_octahedron(utilde: &PyramidArray, t: &NTableau) -> Result<Vec<OctahedronViolation>> {
    utilde.expect_kind(ArrayKind::Utilde)?;
    let mut violations = Vec::new();
    let mut report = |rule, (i, j, k), expected, actual| {
        if expected != actual {
            violations.push(OctahedronViolation {
                rule,
                i,
                j,
                k,
                expected,
                actual,
            });
        }
    };
    for (i, j, top) in domain_columns(ArrayKind::Utilde, t.shape()) {
        let value = |k: i64| utilde.get(i, j, k);
        match value(0) {
            Some(v) => report(
                OctahedronRule::LowerBoundary,
                (i, j, 0),
                -rect_or_zero(t, i, j)?,
                v,
            ),
            None => report(OctahedronRule::MissingPoint, (i, j, 0), 0, 1),
        }
        match value(top) {
            Some(v) => report(OctahedronRule::UpperBoundary, (i, j, top), 0, v),
            None => report(OctahedronRule::MissingPoint, (i, j, top), 0, 1),
        }
        for k in 1..top {
            let needed = [
                utilde.get(i - 1, j, k),
                utilde.get(i, j - 1, k - 1),
                utilde.get(i - 1, j, k - 1),
                utilde.get(i, j - 1, k),
                utilde.get(i - 1, j - 1, k - 1),
                value(k),
            ];
            match needed {
                [Some(n), Some(w_down), Some(n_down), Some(w), Some(nw_down), Some(actual)] => {
                    let expected = (n + w_down).max(n_down + w) - nw_down;
                    report(OctahedronRule::Recurrence, (i, j, k), expected, actual);
                }
                _ => report(OctahedronRule::MissingPoint, (i, j, k), 0, 1),
            }
        }
    }
    violations.sort();
    Ok(violations)
}

/// Reads the toggle output off `U_T`: `t̂(i,j) = u(i+m, j+m, m+1)` where
/// `(i+m, j+m)` is the border box on the diagonal through `(i, j)`.
pub fn extract_rpp(u: &PyramidArray, shape: &Partition) -> Result<NTableau> {
    u.expect_kind(ArrayKind::U)?;
    if &u.shape != shape {
        return Err(Error::DomainMismatch(format!(
            "array built on {} but shape {} requested",
            u.shape, shape
        )));
    }
    let mut out = NTableau::zeros(shape.clone());
    for cell in shape.cells() {
        let mut m = 0;
        while shape.contains(Cell::new(cell.row + m + 1, cell.col + m + 1)) {
            m += 1;
        }
        let (i, j, m) = ((cell.row + m) as i64, (cell.col + m) as i64, m as i64);
        let v = u.at(i, j, m + 1)?;
        let v = u64::try_from(v).map_err(|_| {
            Error::DomainMismatch(format!("negative entry {v} at ({i},{j},{})", m + 1))
        })?;
        out.set(cell, v);
    }
    Ok(out)
}

/// Points where `small` disagrees with `big`, over the domain of `small`.
/// `small` should be built from a restriction of the tableau behind `big`.
pub fn restriction_mismatches(small: &PyramidArray, big: &PyramidArray) -> Vec<(i64, i64, i64)> {
    small
        .entries
        .iter()
        .filter(|(key, &v)| big.entries.get(key) != Some(&v))
        .map(|(&key, _)| key)
        .collect()
}
