//! Brute-force Greene-Kleitman values: maximum total weight of `k`
//! pairwise box-disjoint lattice paths, compared against `Ū_T`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::octahedron::{build_u, build_ubar};
use crate::partitions::{Cell, Partition};
use crate::tableau::{checked_sum, NTableau};

/// Default cap on the number of boxes for path-family enumeration.
pub const DEFAULT_PATH_CAP: usize = 20;

/// A monotone lattice path: each step moves one box down or one box right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticePath {
    cells: Vec<Cell>,
}

impl LatticePath {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPath("a path has at least one box".into()));
        }
        for w in cells.windows(2) {
            let (a, b) = (w[0], w[1]);
            let down = b.row == a.row + 1 && b.col == a.col;
            let right = b.row == a.row && b.col == a.col + 1;
            if !down && !right {
                return Err(Error::InvalidPath(format!(
                    "step {a} -> {b} is not down or right"
                )));
            }
        }
        Ok(LatticePath { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }
}

/// `wt_T(p)`: the sum of the entries on the boxes of `p`.
pub fn path_weight(t: &NTableau, p: &LatticePath) -> Result<u64> {
    let values = p
        .cells
        .iter()
        .map(|&c| t.get(c).ok_or(Error::PathOutOfShape(c)))
        .collect::<Result<Vec<_>>>()?;
    checked_sum(values)
}

/// `k` pairwise box-disjoint paths, path `l` running from `X_l` to `Y_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn weight(&self, t: &NTableau) -> Result<u64> {
        let weights = self
            .paths
            .iter()
            .map(|p| path_weight(t, p))
            .collect::<Result<Vec<_>>>()?;
        checked_sum(weights)
    }
}

fn check_endpoints(
    shape: &Partition,
    sources: &[Cell],
    targets: &[Cell],
    cap: usize,
) -> Result<()> {
    if sources.len() != targets.len() {
        return Err(Error::SizeMismatch(format!(
            "{} sources but {} targets",
            sources.len(),
            targets.len()
        )));
    }
    if shape.size() > cap {
        return Err(Error::CapExceeded {
            what: "boxes for path enumeration",
            limit: cap,
            actual: shape.size(),
        });
    }
    if let Some(&bad) = sources.iter().chain(targets).find(|&&c| !shape.contains(c)) {
        return Err(Error::EndpointOutOfShape(bad));
    }
    Ok(())
}

/// Backtracking search over families, routing path `l` only after paths
/// `1..l` are fixed and never reusing an occupied box.
struct FamilySearch<'a, F: FnMut(&[Vec<Cell>])> {
    shape: &'a Partition,
    sources: &'a [Cell],
    targets: &'a [Cell],
    occupied: Vec<Vec<bool>>,
    paths: Vec<Vec<Cell>>,
    visit: F,
}

impl<F: FnMut(&[Vec<Cell>])> FamilySearch<'_, F> {
    fn is_free(&self, c: Cell) -> bool {
        self.shape.contains(c) && !self.occupied[c.row - 1][c.col - 1]
    }

    fn occupy(&mut self, c: Cell, flag: bool) {
        self.occupied[c.row - 1][c.col - 1] = flag;
    }

    fn start_path(&mut self, l: usize) {
        if l == self.sources.len() {
            (self.visit)(&self.paths);
            return;
        }
        let (src, dst) = (self.sources[l], self.targets[l]);
        if src.row > dst.row || src.col > dst.col || !self.is_free(src) {
            return;
        }
        self.occupy(src, true);
        self.paths.push(vec![src]);
        self.extend(l);
        self.paths.pop();
        self.occupy(src, false);
    }

    fn extend(&mut self, l: usize) {
        let here = *self.paths[l].last().expect("path is nonempty");
        let dst = self.targets[l];
        if here == dst {
            self.start_path(l + 1);
            return;
        }
        let mut steps = Vec::with_capacity(2);
        if here.row < dst.row {
            steps.push(Cell::new(here.row + 1, here.col));
        }
        if here.col < dst.col {
            steps.push(Cell::new(here.row, here.col + 1));
        }
        for next in steps {
            if self.is_free(next) {
                self.occupy(next, true);
                self.paths[l].push(next);
                self.extend(l);
                self.paths[l].pop();
                self.occupy(next, false);
            }
        }
    }
}

fn search_families<F: FnMut(&[Vec<Cell>])>(
    shape: &Partition,
    sources: &[Cell],
    targets: &[Cell],
    visit: F,
) {
    let occupied = shape.parts().iter().map(|&len| vec![false; len]).collect();
    let mut search = FamilySearch {
        shape,
        sources,
        targets,
        occupied,
        paths: Vec::new(),
        visit,
    };
    search.start_path(0);
}

/// Every noncrossing family connecting `sources` to `targets` in `shape`.
pub fn enumerate_ncpath(
    shape: &Partition,
    sources: &[Cell],
    targets: &[Cell],
    cap: usize,
) -> Result<impl Iterator<Item = PathFamily>> {
    check_endpoints(shape, sources, targets, cap)?;
    let mut families = Vec::new();
    search_families(shape, sources, targets, |paths| {
        families.push(PathFamily {
            paths: paths
                .iter()
                .map(|p| LatticePath { cells: p.clone() })
                .collect(),
        });
    });
    Ok(families.into_iter())
}

/// Endpoints `X = {(1, l)}` and `Y = {(i, j-k+l)}`, `l = 1..=k`.
pub fn gk_endpoints(cell: Cell, k: usize) -> (Vec<Cell>, Vec<Cell>) {
    let sources = (1..=k).map(|l| Cell::new(1, l)).collect();
    let targets = (1..=k)
        .map(|l| Cell::new(cell.row, cell.col + l - k))
        .collect();
    (sources, targets)
}

/// `m(i, j, k)`: the largest total weight of a noncrossing family from
/// `X = {(1, l)}` to `Y = {(i, j-k+l)}`.
pub fn gk_value(t: &NTableau, cell: Cell, k: usize, cap: usize) -> Result<u64> {
    if k == 0 || k > cell.row.min(cell.col) {
        return Err(Error::SizeMismatch(format!(
            "k = {k} must lie in [1, {}] for box {cell}",
            cell.row.min(cell.col)
        )));
    }
    let (sources, targets) = gk_endpoints(cell, k);
    check_endpoints(t.shape(), &sources, &targets, cap)?;
    let mut best: Option<u64> = None;
    let mut overflow = false;
    search_families(t.shape(), &sources, &targets, |paths| {
        let total = checked_sum(paths.iter().flatten().map(|&c| t.get(c).unwrap_or(0)));
        match total {
            Ok(w) => best = Some(best.map_or(w, |b| b.max(w))),
            Err(_) => overflow = true,
        }
    });
    if overflow {
        return Err(Error::Overflow);
    }
    best.ok_or(Error::NoFamily)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GkViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub m: u64,
    pub ubar: i64,
}

/// Compares `m(i, j, k)` with `ū(i, j, k)` for every box `(i, j)` and every
/// `1 <= k <= min(i, j)`.
pub fn verify_gk(t: &NTableau, cap: usize) -> Result<Vec<GkViolation>> {
    if t.shape().size() > cap {
        return Err(Error::CapExceeded {
            what: "boxes for path enumeration",
            limit: cap,
            actual: t.shape().size(),
        });
    }
    let ubar = build_ubar(&build_u(t)?)?;
    let mut violations = Vec::new();
    for cell in t.shape().cells() {
        for k in 1..=cell.row.min(cell.col) {
            let m = gk_value(t, cell, k, cap)?;
            let expected = ubar
                .get(cell.row as i64, cell.col as i64, k as i64)
                .expect("boxes carry every level up to min(i, j)");
            if i64::try_from(m).ok() != Some(expected) {
                violations.push(GkViolation {
                    i: cell.row,
                    j: cell.col,
                    k,
                    m,
                    ubar: expected,
                });
            }
        }
    }
    Ok(violations)
}

/// Length of a longest weakly increasing subsequence, by patience sorting.
pub fn longest_increasing_subsequence(seq: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in seq {
        let pos = tails.partition_point(|&t| t <= x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u64]]) -> NTableau {
        NTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn path(list: &[(usize, usize)]) -> LatticePath {
        LatticePath::new(cells(list)).unwrap()
    }

    fn example_a() -> NTableau {
        t(&[&[1, 0, 2], &[0, 2, 0], &[1, 1, 0]])
    }

    #[test]
    fn path_weights() {
        let a = example_a();
        assert_eq!(
            path_weight(&a, &path(&[(1, 1), (2, 1), (2, 2), (3, 2)])).unwrap(),
            4
        );
        assert_eq!(path_weight(&a, &path(&[(1, 3)])).unwrap(), 2);
        let zero = NTableau::zeros(Partition::square(3));
        assert_eq!(
            path_weight(&zero, &path(&[(1, 1), (1, 2), (2, 2)])).unwrap(),
            0
        );
        assert_eq!(
            path_weight(&a, &path(&[(3, 3), (3, 4)])),
            Err(Error::PathOutOfShape(Cell::new(3, 4)))
        );
    }

    #[test]
    fn path_validation() {
        assert!(LatticePath::new(cells(&[(1, 1), (2, 2)])).is_err());
        assert!(LatticePath::new(cells(&[(2, 1), (1, 1)])).is_err());
        assert!(LatticePath::new(Vec::new()).is_err());
    }

    #[test]
    fn family_counts() {
        let sq = Partition::square(3);
        let single = enumerate_ncpath(&sq, &cells(&[(1, 1)]), &cells(&[(3, 3)]), 20).unwrap();
        assert_eq!(single.count(), 6);

        let pairs: Vec<_> = enumerate_ncpath(
            &sq,
            &cells(&[(1, 1), (1, 2)]),
            &cells(&[(3, 2), (3, 3)]),
            20,
        )
        .unwrap()
        .collect();
        let wanted = PathFamily {
            paths: vec![
                path(&[(1, 1), (2, 1), (2, 2), (3, 2)]),
                path(&[(1, 2), (1, 3), (2, 3), (3, 3)]),
            ],
        };
        assert!(pairs.contains(&wanted));
        for family in &pairs {
            let a: Vec<_> = family.paths[0].cells().to_vec();
            assert!(family.paths[1].cells().iter().all(|c| !a.contains(c)));
        }

        let trivial = enumerate_ncpath(&sq, &cells(&[(1, 1)]), &cells(&[(1, 1)]), 20).unwrap();
        assert_eq!(trivial.count(), 1);
    }

    #[test]
    fn enumeration_errors() {
        let sq = Partition::square(3);
        assert!(matches!(
            enumerate_ncpath(&sq, &cells(&[(1, 1)]), &cells(&[(4, 1)]), 20),
            Err(Error::EndpointOutOfShape(_))
        ));
        assert!(matches!(
            enumerate_ncpath(
                &Partition::square(5),
                &cells(&[(1, 1)]),
                &cells(&[(5, 5)]),
                20
            ),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_ncpath(&sq, &cells(&[(1, 1)]), &[], 20),
            Err(Error::SizeMismatch(_))
        ));
        let none = enumerate_ncpath(&sq, &cells(&[(2, 2)]), &cells(&[(1, 1)]), 20).unwrap();
        assert_eq!(none.count(), 0);
    }

    #[test]
    fn gk_values_on_the_worked_example() {
        let a = example_a();
        assert_eq!(gk_value(&a, Cell::new(3, 3), 2, 20).unwrap(), 6);
        assert_eq!(gk_value(&a, Cell::new(3, 3), 1, 20).unwrap(), 4);
        assert_eq!(gk_value(&a, Cell::new(3, 3), 3, 20).unwrap(), 7);
        let zero = NTableau::zeros(Partition::square(3));
        assert_eq!(gk_value(&zero, Cell::new(2, 3), 2, 20).unwrap(), 0);
        assert!(gk_value(&a, Cell::new(1, 3), 2, 20).is_err());
    }

    #[test]
    fn worked_example_has_no_violations() {
        assert!(verify_gk(&example_a(), 20).unwrap().is_empty());
    }

    #[test]
    fn lis_by_patience() {
        assert_eq!(longest_increasing_subsequence(&[3, 1, 2]), 2);
        assert_eq!(longest_increasing_subsequence(&[1, 2, 3, 4]), 4);
        assert_eq!(longest_increasing_subsequence(&[4, 3, 2, 1]), 1);
        assert_eq!(longest_increasing_subsequence(&[]), 0);
    }
}
