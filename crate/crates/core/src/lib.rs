//! Robinson-Schensted-Knuth as local piecewise-linear toggles on
//! ℕ-tableaux, checked against classical row insertion, the octahedron
//! recurrence, the Greene-Kleitman path invariant and hook-length
//! generating functions.
//!
//! The toggle map sends an ℕ-tableau `T` of shape `λ` to a reverse plane
//! partition `T̂` of the same shape. On square matrices it coincides with
//! the classical correspondence `A ↦ (P, Q) ↦ (GT(P), GT(Q)) ↦ Â`.
//!
//! ```
//! use rsk_toggle::{tableau::NTableau, toggle_rsk::toggle_rsk};
//!
//! let a = NTableau::from_rows(vec![vec![1, 0, 2], vec![0, 2, 0], vec![1, 1, 0]]).unwrap();
//! let a_hat = toggle_rsk(&a, None).unwrap();
//! assert_eq!(a_hat.rows(), &[vec![1, 2, 3], vec![1, 2, 3], vec![2, 4, 4]]);
//! ```

pub mod classical_rsk;
pub mod error;
pub mod greene_kleitman;
pub mod hook_series;
pub mod octahedron;
pub mod partitions;
pub mod tableau;
pub mod toggle_rsk;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Cell, Partition};
pub use tableau::NTableau;
