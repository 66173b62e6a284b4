//! RSK as a sequence of local piecewise-linear toggles.
//!
//! A tableau is built box by box along a linear extension of its shape. Each
//! new corner box `(i, j)` toggles the diagonal through it in the running
//! reverse plane partition and then receives `max(above, left) + x`.
//!
//! ```text
//!   ⋱   ⋱
//!   ⋱  β2  α2
//!      γ2  β1  α1
//!          γ1   *
//! ```
//!
//! Every `β_k` is replaced by `max(α_{k+1}, γ_{k+1}) + min(α_k, γ_k) - β_k`,
//! reflecting it inside the interval that the neighbouring diagonals allow.

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::tableau::NTableau;

/// The three diagonals around a target box `(i, j)`.
///
/// With `m = min(i, j)`, `beta[k-1]` is the entry at `(i-k, j-k)` for
/// `1 <= k < m`, while `alpha[k-1]` at `(i-k, j-k+1)` and `gamma[k-1]` at
/// `(i-k+1, j-k)` run over `1 <= k <= m`. Positions outside the tableau
/// read as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToggleContext {
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
    pub gamma: Vec<u64>,
}

impl ToggleContext {
    pub fn read(t: &NTableau, cell: Cell) -> ToggleContext {
        let (i, j) = (cell.row as i64, cell.col as i64);
        let m = i.min(j);
        let alpha = (1..=m).map(|k| t.value_or_zero(i - k, j - k + 1)).collect();
        let gamma = (1..=m).map(|k| t.value_or_zero(i - k + 1, j - k)).collect();
        let beta = (1..m).map(|k| t.value_or_zero(i - k, j - k)).collect();
        ToggleContext { alpha, beta, gamma }
    }

    fn lower(&self, k: usize) -> u64 {
        self.alpha[k].max(self.gamma[k])
    }

    fn upper(&self, k: usize) -> u64 {
        self.alpha[k - 1].min(self.gamma[k - 1])
    }

    /// `max(α_{k+1}, γ_{k+1}) <= β_k <= min(α_k, γ_k)` for every `k`.
    pub fn is_admissible(&self) -> bool {
        (1..=self.beta.len()).all(|k| {
            let b = self.beta[k - 1];
            self.lower(k) <= b && b <= self.upper(k)
        })
    }

    /// The toggled diagonal `β'`. Requires an admissible context.
    pub fn toggled(&self) -> Vec<u64> {
        (1..=self.beta.len())
            .map(|k| toggle(self.beta[k - 1], self.lower(k), self.upper(k)))
            .collect()
    }

    /// Lower bound `max(α_1, γ_1)` for the value at the target box.
    pub fn floor(&self) -> u64 {
        self.alpha
            .first()
            .copied()
            .unwrap_or(0)
            .max(self.gamma.first().copied().unwrap_or(0))
    }
}

/// Reflects `beta` inside `[lower, upper]`: `lower + upper - beta`.
pub fn toggle(beta: u64, lower: u64, upper: u64) -> u64 {
    debug_assert!(lower <= beta && beta <= upper);
    upper - beta + lower
}

/// Rewrites the diagonal running north-west from `cell` (exclusive).
fn retoggle_diagonal(t: &mut NTableau, cell: Cell, ctx: &ToggleContext) {
    for (k, value) in ctx.toggled().into_iter().enumerate() {
        let k = k + 1;
        t.set(Cell::new(cell.row - k, cell.col - k), value);
    }
}

/// Appends `cell` without validating; the caller guarantees that `cell` is
/// addable and `t_hat` is a reverse plane partition.
fn insert_corner_unchecked(t_hat: &NTableau, cell: Cell, x: u64) -> Result<NTableau> {
    let ctx = ToggleContext::read(t_hat, cell);
    let value = ctx.floor().checked_add(x).ok_or(Error::Overflow)?;
    let mut out = t_hat.with_box(cell, value)?;
    retoggle_diagonal(&mut out, cell, &ctx);
    Ok(out)
}

/// One step of toggle RSK: add the corner box `cell` carrying `x` to the
/// reverse plane partition `t_hat`.
pub fn insert_corner(t_hat: &NTableau, cell: Cell, x: u64) -> Result<NTableau> {
    if !t_hat.shape().is_addable(cell) {
        return Err(Error::NotCorner(cell));
    }
    if !t_hat.is_rpp() {
        return Err(Error::NotRpp);
    }
    insert_corner_unchecked(t_hat, cell, x)
}

/// Inverse of [`insert_corner`]: delete the corner box `cell` and recover
/// the entry `x` that produced it.
pub fn remove_corner(t_hat: &NTableau, cell: Cell) -> Result<(NTableau, u64)> {
    if !t_hat.shape().corner_boxes().contains(&cell) {
        return Err(Error::NotCorner(cell));
    }
    if !t_hat.is_rpp() {
        return Err(Error::NotRpp);
    }
    Ok(remove_corner_unchecked(t_hat, cell))
}

fn remove_corner_unchecked(t_hat: &NTableau, cell: Cell) -> (NTableau, u64) {
    let ctx = ToggleContext::read(t_hat, cell);
    let top = t_hat.get(cell).expect("corner is in the shape");
    let x = top - ctx.floor();
    let mut out = t_hat.without_box(cell).expect("cell is a corner");
    // alpha and gamma lie on the neighbouring diagonals and are untouched
    // by the removal, so the same reflection undoes the toggle.
    retoggle_diagonal(&mut out, cell, &ctx);
    (out, x)
}

/// Toggle RSK, `T ↦ T̂`, inserting boxes along `order` or row-major reading
/// order when `order` is `None`.
pub fn toggle_rsk(t: &NTableau, order: Option<&[Cell]>) -> Result<NTableau> {
    let shape = t.shape();
    let reading: Vec<Cell>;
    let order = match order {
        Some(order) => {
            if !shape.is_linear_extension(order) {
                return Err(Error::NotLinearExtension(format!(
                    "{} boxes given for shape {}",
                    order.len(),
                    shape
                )));
            }
            order
        }
        None => {
            reading = shape.cells().collect();
            &reading
        }
    };
    order.iter().try_fold(NTableau::empty(), |acc, &cell| {
        insert_corner_unchecked(&acc, cell, t.get(cell).expect("order lies in shape"))
    })
}

/// The inverse map `T̂ ↦ T`, peeling corners in reverse reading order.
pub fn toggle_rsk_inverse(t_hat: &NTableau) -> Result<NTableau> {
    if !t_hat.is_rpp() {
        return Err(Error::NotRpp);
    }
    let shape: Partition = t_hat.shape().clone();
    let mut out = NTableau::zeros(shape.clone());
    let mut current = t_hat.clone();
    for cell in shape.cells().collect::<Vec<_>>().into_iter().rev() {
        let (rest, x) = remove_corner_unchecked(&current, cell);
        out.set(cell, x);
        current = rest;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u64]]) -> NTableau {
        NTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Closed form for the 2x2 square: `[[min(b,c), a+b], [a+c, a+max(b,c)+d]]`.
    fn square_closed_form(a: u64, b: u64, c: u64, d: u64) -> NTableau {
        t(&[&[b.min(c), a + b], &[a + c, a + b.max(c) + d]])
    }

    #[test]
    fn insert_corner_examples() {
        let base = t(&[&[1, 1], &[1]]);
        assert_eq!(
            insert_corner(&base, Cell::new(2, 2), 5).unwrap(),
            t(&[&[0, 1], &[1, 6]])
        );
        assert_eq!(
            insert_corner(&NTableau::empty(), Cell::new(1, 1), 7).unwrap(),
            t(&[&[7]])
        );
        for (a, b, c, d) in [
            (1, 0, 0, 5),
            (2, 3, 1, 4),
            (0, 0, 0, 0),
            (3, 1, 2, 0),
            (5, 2, 2, 1),
        ] {
            let hook = t(&[&[a, a + b], &[a + c]]);
            assert_eq!(
                insert_corner(&hook, Cell::new(2, 2), d).unwrap(),
                square_closed_form(a, b, c, d)
            );
        }
    }

    #[test]
    fn insert_corner_errors() {
        let base = t(&[&[1, 1], &[1]]);
        assert_eq!(
            insert_corner(&base, Cell::new(1, 1), 0),
            Err(Error::NotCorner(Cell::new(1, 1)))
        );
        assert_eq!(
            insert_corner(&base, Cell::new(3, 2), 0),
            Err(Error::NotCorner(Cell::new(3, 2)))
        );
        assert_eq!(
            insert_corner(&t(&[&[2, 1], &[1]]), Cell::new(2, 2), 0),
            Err(Error::NotRpp)
        );
    }

    #[test]
    fn remove_corner_examples() {
        assert_eq!(
            remove_corner(&t(&[&[0, 1], &[1, 6]]), Cell::new(2, 2)).unwrap(),
            (t(&[&[1, 1], &[1]]), 5)
        );
        assert_eq!(
            remove_corner(&t(&[&[7]]), Cell::new(1, 1)).unwrap(),
            (NTableau::empty(), 7)
        );
        for (a, b, c, d) in [
            (1, 0, 0, 5),
            (2, 3, 1, 4),
            (0, 0, 0, 0),
            (3, 1, 2, 0),
            (4, 0, 6, 2),
        ] {
            assert_eq!(
                remove_corner(&square_closed_form(a, b, c, d), Cell::new(2, 2)).unwrap(),
                (t(&[&[a, a + b], &[a + c]]), d)
            );
        }
        assert_eq!(
            remove_corner(&t(&[&[0, 1], &[1, 6]]), Cell::new(1, 2)),
            Err(Error::NotCorner(Cell::new(1, 2)))
        );
        assert_eq!(
            remove_corner(&t(&[&[1, 0]]), Cell::new(1, 2)),
            Err(Error::NotRpp)
        );
    }

    #[test]
    fn worked_example() {
        let a = t(&[&[1, 0, 2], &[0, 2, 0], &[1, 1, 0]]);
        let a_hat = t(&[&[1, 2, 3], &[1, 2, 3], &[2, 4, 4]]);
        assert_eq!(toggle_rsk(&a, None).unwrap(), a_hat);
        assert_eq!(toggle_rsk_inverse(&a_hat).unwrap(), a);
    }

    #[test]
    fn lines_record_partial_sums() {
        let line = t(&[&[3, 0, 2, 5, 1]]);
        assert_eq!(toggle_rsk(&line, None).unwrap(), t(&[&[3, 3, 5, 10, 11]]));
        let column = line.transpose();
        assert_eq!(
            toggle_rsk(&column, None).unwrap(),
            t(&[&[3, 3, 5, 10, 11]]).transpose()
        );
    }

    #[test]
    fn hooks_record_prefix_sums_from_the_corner() {
        let hook = t(&[&[2, 1, 4, 0], &[3], &[0], &[5]]);
        assert_eq!(
            toggle_rsk(&hook, None).unwrap(),
            t(&[&[2, 3, 7, 7], &[5], &[5], &[10]])
        );
    }

    #[test]
    fn explicit_order_must_be_a_linear_extension() {
        let a = t(&[&[1, 0], &[0, 2]]);
        let bad = [
            Cell::new(2, 1),
            Cell::new(1, 1),
            Cell::new(1, 2),
            Cell::new(2, 2),
        ];
        assert!(matches!(
            toggle_rsk(&a, Some(&bad)),
            Err(Error::NotLinearExtension(_))
        ));
        let good = [
            Cell::new(1, 1),
            Cell::new(2, 1),
            Cell::new(1, 2),
            Cell::new(2, 2),
        ];
        assert_eq!(
            toggle_rsk(&a, Some(&good)).unwrap(),
            toggle_rsk(&a, None).unwrap()
        );
        assert!(toggle_rsk(&a, Some(&good[..3])).is_err());
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(
            toggle_rsk(&NTableau::empty(), None).unwrap(),
            NTableau::empty()
        );
        let zero = NTableau::zeros(Partition::new(vec![3, 2, 2]).unwrap());
        assert_eq!(toggle_rsk(&zero, None).unwrap(), zero);
        assert_eq!(toggle_rsk_inverse(&zero).unwrap(), zero);
        assert_eq!(toggle_rsk_inverse(&t(&[&[1, 0]])), Err(Error::NotRpp));
    }

    #[test]
    fn overflow_is_reported() {
        let big = t(&[&[u64::MAX, 1]]);
        assert_eq!(toggle_rsk(&big, None), Err(Error::Overflow));
    }

    #[test]
    fn context_reads_zero_outside() {
        let ctx = ToggleContext::read(&t(&[&[1, 2], &[3]]), Cell::new(2, 2));
        assert_eq!(ctx.alpha, vec![2, 0]);
        assert_eq!(ctx.gamma, vec![3, 0]);
        assert_eq!(ctx.beta, vec![1]);
        assert!(ctx.is_admissible());
        assert_eq!(ctx.toggled(), vec![1]);
        assert_eq!(ctx.floor(), 3);
    }
}
