//! Classical RSK by row insertion, Gelfand-Tsetlin patterns, and the gluing
//! of `GT(P)` and `GT(Q)` into a weakly increasing square matrix.
//!
//! This path is an independent oracle for [`crate::toggle_rsk`]: it shares
//! nothing with the toggle implementation beyond the tableau types.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableau::{NTableau, Ssyt};

/// Two-line array of `(top, bottom)` pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biword(pub Vec<(usize, usize)>);

fn square_side(a: &NTableau) -> Result<usize> {
    a.shape()
        .square_side()
        .ok_or_else(|| Error::NotSquare(a.shape().parts().to_vec()))
}

/// Expands a square ℕ-matrix into its biword: pair `(i, j)` appears
/// `a[i][j]` times.
pub fn matrix_to_biword(a: &NTableau) -> Result<Biword> {
    square_side(a)?;
    let mut pairs = Vec::new();
    for (cell, mult) in a.entries() {
        for _ in 0..mult {
            pairs.push((cell.row, cell.col));
        }
    }
    // entries() is row-major, so the pairs are already sorted.
    debug_assert!(pairs.windows(2).all(|w| w[0] <= w[1]));
    Ok(Biword(pairs))
}

/// Row-inserts `value` into `rows`, returning the index of the row that grew.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut value: usize) -> usize {
    for (idx, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&x| x > value) {
            Some(pos) => value = std::mem::replace(&mut row[pos], value),
            None => {
                row.push(value);
                return idx;
            }
        }
    }
    rows.push(vec![value]);
    rows.len() - 1
}

fn to_ssyt(rows: Vec<Vec<usize>>, n: usize) -> Result<Ssyt> {
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v as u64).collect())
        .collect();
    Ssyt::new(NTableau::from_rows(rows)?, n)
}

/// Classical RSK: insert the bottom letters of the biword into `P`, and
/// record the top letters in `Q` at the box where each insertion ended.
pub fn rsk_insert(a: &NTableau) -> Result<(Ssyt, Ssyt)> {
    let n = square_side(a)?;
    let Biword(pairs) = matrix_to_biword(a)?;
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (top, bottom) in pairs {
        let grown = row_insert(&mut p, bottom);
        if grown == q.len() {
            q.push(Vec::new());
        }
        q[grown].push(top);
    }
    Ok((to_ssyt(p, n)?, to_ssyt(q, n)?))
}

/// A Gelfand-Tsetlin pattern `g[i][j]`, `1 <= i <= j <= n`.
///
/// Row `i` holds `g_{i,i}, ..., g_{i,n}` and must satisfy
/// `g_{i,j} >= g_{i+1,j+1} >= g_{i,j+1}`. Serialized as an array of rows,
/// row `i` having `n + 1 - i` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct GtPattern {
    rows: Vec<Vec<u64>>,
}

impl TryFrom<Vec<Vec<u64>>> for GtPattern {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self> {
        GtPattern::new(rows)
    }
}

impl From<GtPattern> for Vec<Vec<u64>> {
    fn from(g: GtPattern) -> Self {
        g.rows
    }
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != n - idx {
                return Err(Error::InvalidPattern(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    n - idx
                )));
            }
        }
        let pattern = GtPattern { rows };
        for i in 1..n {
            for j in i..n {
                let (upper, mid, right) = (
                    pattern.g(i, j),
                    pattern.g(i + 1, j + 1),
                    pattern.g(i, j + 1),
                );
                if !(upper >= mid && mid >= right) {
                    return Err(Error::InvalidPattern(format!(
                        "interlacing fails at i={i}, j={j}: {upper} >= {mid} >= {right}"
                    )));
                }
            }
        }
        Ok(pattern)
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `g_{i,j}` for `1 <= i <= j <= n`.
    pub fn g(&self, i: usize, j: usize) -> u64 {
        self.rows[i - 1][j - i]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// `GT(T)`: `g_{i,j}` counts the entries `<= n + 1 - i` in row `j - i + 1`
/// of `T`, so row `i` of the pattern is the shape of `T` after deleting the
/// `i - 1` largest letters.
pub fn gt_pattern(t: &Ssyt, n: usize) -> Result<GtPattern> {
    if let Some((_, bad)) = t.tableau().entries().find(|&(_, v)| v == 0 || v > n as u64) {
        return Err(Error::EntryOutOfRange { entry: bad, max: n });
    }
    let rows = t.tableau().rows();
    let pattern = (1..=n)
        .map(|i| {
            let bound = (n + 1 - i) as u64;
            (i..=n)
                .map(|j| {
                    rows.get(j - i)
                        .map_or(0, |row| row.iter().filter(|&&v| v <= bound).count() as u64)
                })
                .collect()
        })
        .collect();
    GtPattern::new(pattern)
}

/// Glues two patterns along their shared first row:
/// `a_{ij} = g_{i-j+1, n+1-j}` on and below the diagonal and
/// `h_{j-i+1, n+1-i}` above it.
pub fn glue(gp: &GtPattern, gq: &GtPattern) -> Result<NTableau> {
    let n = gp.n();
    if gq.n() != n {
        return Err(Error::SizeMismatch(format!(
            "patterns have {} and {} rows",
            n,
            gq.n()
        )));
    }
    if n > 0 && gp.rows[0] != gq.rows[0] {
        return Err(Error::FirstRowMismatch);
    }
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i >= j {
                        gp.g(i - j + 1, n + 1 - j)
                    } else {
                        gq.g(j - i + 1, n + 1 - i)
                    }
                })
                .collect()
        })
        .collect();
    NTableau::new(Partition::square(n), rows)
}

/// Every intermediate object of the classical pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalRsk {
    pub p: Ssyt,
    pub q: Ssyt,
    pub gt_p: GtPattern,
    pub gt_q: GtPattern,
    pub a_hat: NTableau,
}

/// `A -> (P, Q) -> (GT(P), GT(Q)) -> Â`.
pub fn classical_pipeline(a: &NTableau) -> Result<ClassicalRsk> {
    let n = square_side(a)?;
    let (p, q) = rsk_insert(a)?;
    let gt_p = gt_pattern(&p, n)?;
    let gt_q = gt_pattern(&q, n)?;
    let a_hat = glue(&gt_p, &gt_q)?;
    Ok(ClassicalRsk {
        p,
        q,
        gt_p,
        gt_q,
        a_hat,
    })
}

/// The weakly increasing matrix `Â` produced by classical RSK.
pub fn classical_hat(a: &NTableau) -> Result<NTableau> {
    Ok(classical_pipeline(a)?.a_hat)
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

    fn gt(rows: &[&[u64]]) -> GtPattern {
        GtPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn biwords() {
        assert_eq!(
            matrix_to_biword(&t(&[&[0, 1], &[0, 0]])).unwrap(),
            Biword(vec![(1, 2)])
        );
        assert_eq!(
            matrix_to_biword(&t(&[&[2, 0], &[0, 0]])).unwrap(),
            Biword(vec![(1, 1), (1, 1)])
        );
        assert_eq!(
            matrix_to_biword(&example_a()).unwrap(),
            Biword(vec![(1, 1), (1, 3), (1, 3), (2, 2), (2, 2), (3, 1), (3, 2)])
        );
        assert!(matches!(
            matrix_to_biword(&t(&[&[1, 2, 3], &[4, 5, 6]])),
            Err(Error::NotSquare(_))
        ));
    }

    #[test]
    fn insertion_on_the_worked_example() {
        let (p, q) = rsk_insert(&example_a()).unwrap();
        assert_eq!(p.tableau(), &t(&[&[1, 1, 2, 2], &[2, 3], &[3]]));
        assert_eq!(q.tableau(), &t(&[&[1, 1, 1, 3], &[2, 2], &[3]]));
    }

    #[test]
    fn insertion_edge_cases() {
        let (p, q) = rsk_insert(&NTableau::zeros(Partition::square(3))).unwrap();
        assert!(p.shape().is_empty() && q.shape().is_empty());
        let (p, q) = rsk_insert(&t(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(p.tableau(), &t(&[&[1], &[2]]));
        assert_eq!(q.tableau(), &t(&[&[1], &[2]]));
    }

    #[test]
    fn patterns_of_the_worked_example() {
        let (p, q) = rsk_insert(&example_a()).unwrap();
        assert_eq!(gt_pattern(&p, 3).unwrap(), gt(&[&[4, 2, 1], &[4, 1], &[2]]));
        assert_eq!(gt_pattern(&q, 3).unwrap(), gt(&[&[4, 2, 1], &[3, 2], &[3]]));
        let empty = Ssyt::new(NTableau::empty(), 2).unwrap();
        assert_eq!(gt_pattern(&empty, 2).unwrap(), gt(&[&[0, 0], &[0]]));
        assert!(matches!(
            gt_pattern(&p, 2),
            Err(Error::EntryOutOfRange { entry: 3, max: 2 })
        ));
    }

    #[test]
    fn pattern_validation() {
        assert!(GtPattern::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(GtPattern::new(vec![vec![2, 1], vec![3]]).is_err());
        assert!(GtPattern::new(vec![vec![2, 1]]).is_err());
        assert!(serde_json::from_str::<GtPattern>("[[4,2,1],[4,1],[2]]").is_ok());
    }

    #[test]
    fn gluing() {
        let gp = gt(&[&[4, 2, 1], &[4, 1], &[2]]);
        let gq = gt(&[&[4, 2, 1], &[3, 2], &[3]]);
        assert_eq!(
            glue(&gp, &gq).unwrap(),
            t(&[&[1, 2, 3], &[1, 2, 3], &[2, 4, 4]])
        );
        let zero = gt(&[&[0, 0], &[0]]);
        assert_eq!(
            glue(&zero, &zero).unwrap(),
            NTableau::zeros(Partition::square(2))
        );
        let sym = glue(&gq, &gq).unwrap();
        assert_eq!(sym.transpose(), sym);
        assert_eq!(
            glue(&gp, &gt(&[&[4, 2, 0], &[2, 0], &[2]])),
            Err(Error::FirstRowMismatch)
        );
        assert!(matches!(glue(&gp, &zero), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn hat_of_the_worked_example() {
        let a = example_a();
        let a_hat = t(&[&[1, 2, 3], &[1, 2, 3], &[2, 4, 4]]);
        assert_eq!(classical_hat(&a).unwrap(), a_hat);
        assert_eq!(classical_hat(&a.transpose()).unwrap(), a_hat.transpose());
        let zero = NTableau::zeros(Partition::square(4));
        assert_eq!(classical_hat(&zero).unwrap(), zero);
    }
}
