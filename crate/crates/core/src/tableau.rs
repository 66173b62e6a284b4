//! ℕ-tableaux, their sum statistics and the semistandard view used by
//! classical insertion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

pub(crate) fn checked_sum<I: IntoIterator<Item = u64>>(values: I) -> Result<u64> {
    values
        .into_iter()
        .try_fold(0u64, |acc, v| acc.checked_add(v).ok_or(Error::Overflow))
}

/// An assignment of a nonnegative integer to every box of a partition.
///
/// JSON form: `{"shape":[3,2],"rows":[[1,0,2],[0,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct NTableau {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<RawTableau> for NTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        NTableau::new(raw.shape, raw.rows)
    }
}

impl From<NTableau> for RawTableau {
    fn from(t: NTableau) -> Self {
        RawTableau {
            shape: t.shape,
            rows: t.rows,
        }
    }
}

impl NTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u64>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::InvalidTableau(format!(
                "row lengths {lens:?} do not match shape {shape}"
            )));
        }
        Ok(NTableau { shape, rows })
    }

    /// Builds a tableau from its rows, inferring the shape. Empty rows are
    /// not allowed.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens.clone()).map_err(|_| {
            Error::InvalidTableau(format!("row lengths {lens:?} are not a partition"))
        })?;
        Ok(NTableau { shape, rows })
    }

    pub fn zeros(shape: Partition) -> Self {
        let rows = shape.parts().iter().map(|&len| vec![0; len]).collect();
        NTableau { shape, rows }
    }

    pub fn empty() -> Self {
        NTableau::zeros(Partition::empty())
    }

    /// Fills `shape` in row-major order from `values`.
    pub fn from_reading_word(shape: Partition, values: &[u64]) -> Result<Self> {
        if values.len() != shape.size() {
            return Err(Error::SizeMismatch(format!(
                "{} values for a shape with {} boxes",
                values.len(),
                shape.size()
            )));
        }
        let mut rest = values;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len);
                rest = tail;
                row.to_vec()
            })
            .collect();
        Ok(NTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<u64> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn entry(&self, cell: Cell) -> Result<u64> {
        self.get(cell).ok_or(Error::BoxOutOfShape(cell))
    }

    /// Entry at a signed position, reading anything outside the shape
    /// (including nonpositive coordinates) as 0.
    pub(crate) fn value_or_zero(&self, row: i64, col: i64) -> u64 {
        if row < 1 || col < 1 {
            return 0;
        }
        self.rows
            .get(row as usize - 1)
            .and_then(|r| r.get(col as usize - 1))
            .copied()
            .unwrap_or(0)
    }

    pub(crate) fn set(&mut self, cell: Cell, value: u64) {
        self.rows[cell.row - 1][cell.col - 1] = value;
    }

    /// Entries in row-major order.
    pub fn reading_word(&self) -> Vec<u64> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entries paired with their boxes, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (Cell::new(r + 1, c + 1), v))
        })
    }

    /// Sum of all entries, written `|T|`.
    pub fn total(&self) -> Result<u64> {
        checked_sum(self.rows.iter().flatten().copied())
    }

    /// Weakly increasing along every row and every column.
    pub fn is_rpp(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| above <= below)
        });
        rows_ok && cols_ok
    }

    pub fn row_sums(&self) -> Result<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| checked_sum(r.iter().copied()))
            .collect()
    }

    pub fn col_sums(&self) -> Result<Vec<u64>> {
        (1..=self.shape.num_cols())
            .map(|c| checked_sum(self.rows.iter().filter_map(|r| r.get(c - 1).copied())))
            .collect()
    }

    /// Sum along the north-west diagonal ending at `cell`.
    pub fn diag_sum(&self, cell: Cell) -> Result<u64> {
        if !self.shape.contains(cell) {
            return Err(Error::BoxOutOfShape(cell));
        }
        checked_sum(
            (0..cell.row.min(cell.col)).map(|k| self.rows[cell.row - 1 - k][cell.col - 1 - k]),
        )
    }

    /// Sum over the upper-left `row x col` rectangle ending at `cell`.
    pub fn rect_sum(&self, cell: Cell) -> Result<u64> {
        // A partition is closed under moving up or left, so the rectangle
        // fits exactly when its far corner does.
        if !self.shape.contains(cell) {
            return Err(Error::RectangleNotInShape(cell));
        }
        checked_sum(
            self.rows[..cell.row]
                .iter()
                .flat_map(|r| r[..cell.col].iter().copied()),
        )
    }

    pub fn transpose(&self) -> NTableau {
        let shape = self.shape.conjugate();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| self.rows[c][r]).collect())
            .collect();
        NTableau { shape, rows }
    }

    /// The tableau with the corner box `cell` deleted.
    pub fn without_box(&self, cell: Cell) -> Result<NTableau> {
        let shape = self.shape.without_box(cell)?;
        let mut rows = self.rows.clone();
        rows[cell.row - 1].pop();
        if rows[cell.row - 1].is_empty() {
            rows.pop();
        }
        Ok(NTableau { shape, rows })
    }

    /// The tableau with `value` placed in the addable box `cell`.
    pub fn with_box(&self, cell: Cell, value: u64) -> Result<NTableau> {
        let shape = self.shape.with_box(cell)?;
        let mut rows = self.rows.clone();
        if cell.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row - 1].push(value);
        Ok(NTableau { shape, rows })
    }
}

/// A semistandard Young tableau with entries in `[1, max_entry]`: rows weakly
/// increase and columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ssyt {
    tableau: NTableau,
    max_entry: usize,
}

impl Ssyt {
    pub fn new(tableau: NTableau, max_entry: usize) -> Result<Self> {
        if let Some(&bad) = tableau
            .rows
            .iter()
            .flatten()
            .find(|&&v| v == 0 || v > max_entry as u64)
        {
            return Err(Error::EntryOutOfRange {
                entry: bad,
                max: max_entry,
            });
        }
        let rows_ok = tableau
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = tableau.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| above < below)
        });
        if !rows_ok || !cols_ok {
            return Err(Error::InvalidTableau(
                "rows must weakly increase and columns strictly increase".into(),
            ));
        }
        Ok(Ssyt { tableau, max_entry })
    }

    pub fn tableau(&self) -> &NTableau {
        &self.tableau
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    pub fn max_entry(&self) -> usize {
        self.max_entry
    }

    /// Multiplicity of each value `1..=max_entry`.
    pub fn type_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_entry];
        for &v in self.tableau.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u64]]) -> NTableau {
        NTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_a() -> NTableau {
        t(&[&[1, 0, 2], &[0, 2, 0], &[1, 1, 0]])
    }

    fn example_a_hat() -> NTableau {
        t(&[&[1, 2, 3], &[1, 2, 3], &[2, 4, 4]])
    }

    #[test]
    fn rpp_predicate() {
        assert!(example_a_hat().is_rpp());
        assert!(!t(&[&[1, 0], &[0, 0]]).is_rpp());
        assert!(NTableau::empty().is_rpp());
        assert!(!t(&[&[0, 1], &[0, 0]]).is_rpp());
    }

    #[test]
    fn row_and_column_sums() {
        let a = example_a();
        assert_eq!(a.row_sums().unwrap(), vec![3, 2, 2]);
        assert_eq!(a.col_sums().unwrap(), vec![2, 3, 2]);
        let z = NTableau::zeros(Partition::square(2));
        assert_eq!(z.row_sums().unwrap(), vec![0, 0]);
        assert_eq!(z.col_sums().unwrap(), vec![0, 0]);
        let single = t(&[&[5]]);
        assert_eq!(single.row_sums().unwrap(), vec![5]);
        assert_eq!(single.col_sums().unwrap(), vec![5]);
    }

    #[test]
    fn diagonal_sums() {
        let h = example_a_hat();
        assert_eq!(h.diag_sum(Cell::new(3, 3)).unwrap(), 7);
        assert_eq!(h.diag_sum(Cell::new(3, 1)).unwrap(), 2);
        assert_eq!(h.diag_sum(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(
            h.diag_sum(Cell::new(4, 1)),
            Err(Error::BoxOutOfShape(Cell::new(4, 1)))
        );
    }

    #[test]
    fn rectangle_sums() {
        let a = example_a();
        assert_eq!(a.rect_sum(Cell::new(3, 3)).unwrap(), 7);
        assert_eq!(a.rect_sum(Cell::new(1, 3)).unwrap(), 3);
        assert_eq!(a.rect_sum(Cell::new(1, 1)).unwrap(), 1);
        let hook = t(&[&[1, 2], &[3]]);
        assert_eq!(
            hook.rect_sum(Cell::new(2, 2)),
            Err(Error::RectangleNotInShape(Cell::new(2, 2)))
        );
    }

    #[test]
    fn transposition() {
        assert_eq!(t(&[&[1, 2], &[3]]).transpose(), t(&[&[1, 3], &[2]]));
        let sym = t(&[&[1, 2], &[2, 1]]);
        assert_eq!(sym.transpose(), sym);
        assert_eq!(
            example_a().transpose(),
            t(&[&[1, 0, 1], &[0, 2, 1], &[2, 0, 0]])
        );
    }

    #[test]
    fn type_vectors() {
        let p = Ssyt::new(t(&[&[1, 1, 2, 2], &[2, 3], &[3]]), 3).unwrap();
        assert_eq!(p.type_vector(), vec![2, 3, 2]);
        assert_eq!(
            p.type_vector(),
            example_a()
                .col_sums()
                .unwrap()
                .iter()
                .map(|&v| v as usize)
                .collect::<Vec<_>>()
        );
        let q = Ssyt::new(t(&[&[1, 1, 1, 3], &[2, 2], &[3]]), 3).unwrap();
        assert_eq!(q.type_vector(), vec![3, 2, 2]);
        let single = Ssyt::new(t(&[&[1]]), 2).unwrap();
        assert_eq!(single.type_vector(), vec![1, 0]);
    }

    #[test]
    fn ssyt_validation() {
        assert!(Ssyt::new(t(&[&[1, 2], &[1]]), 2).is_err());
        assert!(matches!(
            Ssyt::new(t(&[&[1, 3]]), 2),
            Err(Error::EntryOutOfRange { entry: 3, max: 2 })
        ));
        assert!(Ssyt::new(t(&[&[0]]), 2).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = t(&[&[u64::MAX, 1]]);
        assert_eq!(big.total(), Err(Error::Overflow));
        assert_eq!(big.rect_sum(Cell::new(1, 2)), Err(Error::Overflow));
    }

    #[test]
    fn json_form() {
        let a = example_a();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(
            text,
            r#"{"shape":[3,3,3],"rows":[[1,0,2],[0,2,0],[1,1,0]]}"#
        );
        assert_eq!(serde_json::from_str::<NTableau>(&text).unwrap(), a);
        assert!(serde_json::from_str::<NTableau>(r#"{"shape":[2],"rows":[[1]]}"#).is_err());
    }

    #[test]
    fn adding_and_removing_boxes() {
        let base = t(&[&[1, 2], &[3]]);
        let grown = base.with_box(Cell::new(2, 2), 9).unwrap();
        assert_eq!(grown, t(&[&[1, 2], &[3, 9]]));
        assert_eq!(grown.without_box(Cell::new(2, 2)).unwrap(), base);
        assert!(base.with_box(Cell::new(1, 4), 0).is_err());
    }
}
