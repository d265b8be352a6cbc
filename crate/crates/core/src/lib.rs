//! Bounds-safe vector intervals.
//!
//! An [`Interval`] is a pair of integer bounds that is either empty or one
//! index plus a smaller interval. Folding over that structure visits every
//! index exactly once. A [`VectorInterval`] adds the constraint that its
//! indices are valid for a particular vector, so vector folds driven by it
//! cannot index out of range. Direct element access stays checked and fails
//! with an [`OobDiagnostic`].
//!
//! ```
//! use vintv::{algorithms, VectorData};
//!
//! let merged = algorithms::merge_sorted(&VectorData::from([1., 4., 6.]), &VectorData::from([2., 5.]));
//! assert_eq!(merged.as_slice(), &[1., 2., 4., 5., 6.]);
//! ```

pub mod algorithms;
pub mod cli;
mod error;
pub mod golden;
pub mod interval;
pub mod observe;
pub mod oracles;
pub mod trace;
pub mod vector;

pub use error::{Bound, Error, ErrorKind, IntervalError, OobDiagnostic, Result};
pub use interval::{Decomposition, Direction, Interval};
pub use vector::{full_interval, make_vinterval, vfold_lr, vfold_rl, VectorData, VectorInterval};
