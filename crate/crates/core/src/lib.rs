//! Two bijections from 321-avoiding to 132-avoiding permutations, built
//! several independent ways and cross-checked exhaustively.
//!
//! * [`perm`]: one-line permutations, symmetries, pattern scans, enumeration.
//! * [`template`]: shaded-grid templates, L-corners and rcL-corners.
//! * [`rsk`]: two-row RSK tableaux, Dyck paths and the left-of-path region.
//! * [`bijection`]: Gamma and Theta by every route.
//! * [`harness`]: named exhaustive checks and statistic tables.
//! * [`cli`]: the `permbij` command line.
//!
//! ```
//! use permbij::{bijection, Permutation};
//!
//! let sigma: Permutation = "14237586".parse().unwrap();
//! assert_eq!(bijection::gamma(&sigma).unwrap().to_string(), "7 8 6 4 3 5 2 1");
//! assert_eq!(bijection::theta(&sigma).unwrap(), bijection::gamma(&sigma.irc()).unwrap());
//! ```

pub mod bijection;
pub mod cli;
pub mod error;
pub mod harness;
pub mod perm;
pub mod rsk;
pub mod template;

pub use error::{Error, Result};
pub use perm::{Pattern, Permutation};
pub use rsk::{DyckPath, TwoRowTableau};
pub use template::{CornerList, Square, Template};
