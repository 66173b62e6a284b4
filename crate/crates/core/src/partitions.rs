//! Partition shapes and the geometry of their boxes.
//!
//! Boxes use 1-based matrix coordinates in English notation: `(1, 1)` is the
//! upper-left box, rows grow downwards and columns grow to the right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of boxes for linear-extension enumeration.
pub const DEFAULT_LINEAR_EXTENSION_CAP: usize = 12;

/// A box `(row, col)` of a Young diagram, 1-based.
///
/// Serialized as the JSON pair `[row, col]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// Content `col - row`, the index of the diagonal through the box.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn transposed(self) -> Cell {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl TryFrom<(usize, usize)> for Cell {
    type Error = String;

    fn try_from((row, col): (usize, usize)) -> std::result::Result<Self, Self::Error> {
        if row == 0 || col == 0 {
            return Err(format!("box coordinates are 1-based, got ({row}, {col})"));
        }
        Ok(Cell { row, col })
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// Serialized as a JSON array of parts, e.g. `[3,2,1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, part) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `rows x cols` rectangle; a zero dimension gives the empty partition.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// An `n x n` matrix viewed as a square partition.
    pub fn square(n: usize) -> Self {
        Partition::rectangle(n, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of the 1-based `row`; zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of the 1-based `col`.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    /// Whether the shape is a rectangle (the empty shape counts).
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Side length when the shape is an `n x n` square.
    pub fn square_side(&self) -> Option<usize> {
        (self.is_rectangle() && self.num_rows() == self.num_cols()).then_some(self.num_rows())
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Whether the signed coordinate `(row, col)` is a box.
    pub fn contains_signed(&self, row: i64, col: i64) -> bool {
        row >= 1 && col >= 1 && (col as usize) <= self.row_len(row as usize)
    }

    /// All boxes in row-major reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Boxes whose right and lower neighbours are both absent.
    pub fn corner_boxes(&self) -> Vec<Cell> {
        self.cells()
            .filter(|c| {
                !self.contains(Cell::new(c.row + 1, c.col))
                    && !self.contains(Cell::new(c.row, c.col + 1))
            })
            .collect()
    }

    /// Boxes whose south-east diagonal neighbour is absent.
    pub fn border_boxes(&self) -> Vec<Cell> {
        self.cells()
            .filter(|c| !self.contains(Cell::new(c.row + 1, c.col + 1)))
            .collect()
    }

    /// Number of boxes strictly to the right of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> usize {
        if !self.contains(cell) {
            return 0;
        }
        self.row_len(cell.row) - cell.col
    }

    /// Number of boxes strictly below `cell` in its column.
    pub fn leg(&self, cell: Cell) -> usize {
        if !self.contains(cell) {
            return 0;
        }
        self.col_len(cell.col) - cell.row
    }

    /// The hook at `cell`: every box weakly below or weakly to the right of
    /// it. Empty when `cell` is not a box of the shape.
    pub fn hook_cells(&self, cell: Cell) -> Vec<Cell> {
        if !self.contains(cell) {
            return Vec::new();
        }
        let right = (cell.col..=self.row_len(cell.row)).map(|c| Cell::new(cell.row, c));
        let below = (cell.row + 1..=self.col_len(cell.col)).map(|r| Cell::new(r, cell.col));
        right.chain(below).collect()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.num_cols()).map(|c| self.col_len(c)).collect();
        Partition { parts }
    }

    /// Whether `cell` can be appended so the result is still a partition.
    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.num_rows() + 1
            && self.row_len(cell.row) + 1 == cell.col
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    /// The shape with the corner `cell` appended.
    pub fn with_box(&self, cell: Cell) -> Result<Partition> {
        if !self.is_addable(cell) {
            return Err(Error::NotCorner(cell));
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// The shape with the corner box `cell` deleted.
    pub fn without_box(&self, cell: Cell) -> Result<Partition> {
        if !self.corner_boxes().contains(&cell) {
            return Err(Error::NotCorner(cell));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Linear extensions of the box poset, `(i,j) <= (k,l)` iff `i <= k` and
    /// `j <= l`. Equivalently, the standard Young tableaux of this shape.
    pub fn linear_extensions(&self, cap: usize) -> Result<LinearExtensions> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "boxes for linear-extension enumeration",
                limit: cap,
                actual: n,
            });
        }
        Ok(LinearExtensions::new(self.parts.clone()))
    }

    /// Whether `order` lists every box once and each prefix is a partition.
    pub fn is_linear_extension(&self, order: &[Cell]) -> bool {
        if order.len() != self.size() {
            return false;
        }
        let mut filled = vec![0usize; self.num_rows()];
        for &cell in order {
            if !self.contains(cell) {
                return false;
            }
            let r = cell.row - 1;
            if filled[r] + 1 != cell.col || (r > 0 && filled[r - 1] < cell.col) {
                return false;
            }
            filled[r] += 1;
        }
        true
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(
            remaining: usize,
            max_part: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                go(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition with at most `n` boxes, by increasing size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

/// Backtracking iterator over the linear extensions of a box poset.
///
/// At each depth the candidates are the rows whose next box is addable.
#[derive(Debug, Clone)]
pub struct LinearExtensions {
    parts: Vec<usize>,
    filled: Vec<usize>,
    order: Vec<Cell>,
    stack: Vec<(Vec<usize>, usize)>,
    started: bool,
    total: usize,
}

impl LinearExtensions {
    fn new(parts: Vec<usize>) -> Self {
        let total = parts.iter().sum();
        LinearExtensions {
            filled: vec![0; parts.len()],
            parts,
            order: Vec::with_capacity(total),
            stack: Vec::new(),
            started: false,
            total,
        }
    }

    fn candidates(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| {
                self.filled[r] < self.parts[r] && (r == 0 || self.filled[r - 1] > self.filled[r])
            })
            .collect()
    }

    fn push_choice(&mut self, row: usize) {
        self.filled[row] += 1;
        self.order.push(Cell::new(row + 1, self.filled[row]));
    }

    fn pop_choice(&mut self) {
        if let Some(cell) = self.order.pop() {
            self.filled[cell.row - 1] -= 1;
        }
    }

    /// Descend from the current state, always taking the first candidate.
    fn descend(&mut self) {
        while self.order.len() < self.total {
            let cands = self.candidates();
            let row = cands[0];
            self.stack.push((cands, 0));
            self.push_choice(row);
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = Vec<Cell>;

    fn next(&mut self) -> Option<Vec<Cell>> {
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.order.clone());
        }
        while let Some((cands, idx)) = self.stack.pop() {
            self.pop_choice();
            if idx + 1 < cands.len() {
                let row = cands[idx + 1];
                self.stack.push((cands, idx + 1));
                self.push_choice(row);
                self.descend();
                return Some(self.order.clone());
            }
        }
        None
    }
}
