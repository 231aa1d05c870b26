//! Weighted sums of four polygonal numbers.
//!
//! Decomposes integers as `p(x1) + p(x2) + a p(x3) + b p(x4)` for the
//! coefficient schemes `(1,1,1,1)`, `(1,1,2,2)`, `(1,1,1,3)` and `(1,1,2,4)`,
//! where `p` is the polygonal number of order `m + 2`. Large `N` are handled
//! constructively through ternary quadratic forms; small `N`, exception sets
//! and counterexample families are settled by exhaustive search.

// Residue conditions read better as `n % k == 0`.
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod constructive;
pub mod oracle;
pub mod polygonal;
pub mod quadforms;

pub use constructive::{decompose, ConstructError, DecomposeOptions, Decomposition, Method};
pub use oracle::{exception_scan, representable, OracleError, ScanReport};
pub use polygonal::{Domain, Order, Scheme, SlotSpec, Witness};
