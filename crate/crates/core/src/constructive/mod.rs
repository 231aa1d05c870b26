//! Constructive decomposition of large `N`.
//!
//! For `N` at or above the scheme's bound `C m^3`, pick `b` in a real interval
//! with the right residues, set `a = 2(N - b)/m + b`, split `(a, b)` into
//! `(s, t, u, v)` with a splitting lemma, and read off
//! `N = p(s) + p(t) + c3 p(u) + c4 p(v)`. Below the bound the oracle decides.

mod identities;
mod interval;
mod select;
mod split;

pub use identities::{general_identity_sides, identity_3b4, identity_3b4_sides, identity_general};
pub use interval::{ceil_alpha, interval_contains, interval_length_check, Interval};
pub use select::{select_ab, BoundOptions, GaussPair};
pub use split::{
    congruences_hold, inequalities_hold, split, split_1111, split_1113, split_1122, split_1124,
    SplitQuad,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{self, OracleError};
use crate::polygonal::{verify_witness, Order, Scheme, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal assertion failed: {0}")]
    AssertionFailure(String),
    #[error("{0} is not representable")]
    NotRepresentable(u64),
    #[error("scheme {scheme} has no constructive guarantee for m={m}")]
    InvalidScheme { scheme: Scheme, m: u32 },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Constructive,
    Oracle,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub bounds: BoundOptions,
    /// Answer with the oracle when the scheme has no guarantee for `m`.
    pub oracle_fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub witness: Witness,
    pub method: Method,
    /// Present on the constructive path.
    pub pair: Option<GaussPair>,
}

/// Runs the constructive path only; `N` must be at or above the bound.
pub fn decompose_constructive(
    m: u32,
    n: u64,
    scheme: Scheme,
    opts: BoundOptions,
) -> Result<Decomposition, ConstructError> {
    let pair = select_ab(scheme, m, n, opts)?;
    let quad = split(scheme, pair.a, pair.b)?;
    let order = Order::new(m).expect("applicable schemes have m >= 3");
    let witness = Witness {
        slots: scheme.slots(order),
        n,
        xs: quad.as_array().map(|q| q as i64),
    };
    if !verify_witness(&witness) {
        return Err(ConstructError::AssertionFailure(format!(
            "constructed witness {witness:?} does not verify"
        )));
    }
    Ok(Decomposition {
        witness,
        method: Method::Constructive,
        pair: Some(pair),
    })
}

/// Writes `N` under `scheme` at order `m + 2`: constructively at or above the
/// bound, by exhaustive search below it.
pub fn decompose(
    m: u32,
    n: u64,
    scheme: Scheme,
    opts: DecomposeOptions,
) -> Result<Decomposition, ConstructError> {
    let order = Order::new(m)
        .ok_or_else(|| ConstructError::PreconditionViolated("m must be >= 1".into()))?;
    if !scheme.applicable(m) {
        if !opts.oracle_fallback {
            return Err(ConstructError::InvalidScheme { scheme, m });
        }
        return search(order, n, scheme);
    }
    if n as u128 >= scheme.bound(m, opts.bounds.sharp_odd_bound) {
        decompose_constructive(m, n, scheme, opts.bounds)
    } else {
        search(order, n, scheme)
    }
}

fn search(order: Order, n: u64, scheme: Scheme) -> Result<Decomposition, ConstructError> {
    match oracle::representable(&scheme.slots(order), n)? {
        Some(witness) => Ok(Decomposition {
            witness,
            method: Method::Oracle,
            pair: None,
        }),
        None => Err(ConstructError::NotRepresentable(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygonal::checked_polygonal;

    #[test]
    fn at_the_hexagonal_bound() {
        let d = decompose(4, 1792, Scheme::S1111, DecomposeOptions::default()).unwrap();
        assert_eq!(d.method, Method::Constructive);
        assert!(verify_witness(&d.witness));
        let order = Order::new(4).unwrap();
        let total: u128 = d
            .witness
            .xs
            .iter()
            .map(|&x| checked_polygonal(order, x).unwrap())
            .sum();
        assert_eq!(total, 1792);
    }

    #[test]
    fn below_bound() {
        assert_eq!(
            decompose(4, 130, Scheme::S1111, DecomposeOptions::default()),
            Err(ConstructError::NotRepresentable(130))
        );
        let d = decompose(3, 0, Scheme::S1124, DecomposeOptions::default()).unwrap();
        assert_eq!((d.method, d.witness.xs), (Method::Oracle, [0, 0, 0, 0]));
        let d = decompose(4, 131, Scheme::S1111, DecomposeOptions::default()).unwrap();
        assert_eq!(d.method, Method::Oracle);
        assert!(verify_witness(&d.witness));
    }

    #[test]
    fn scheme_guard() {
        assert!(matches!(
            decompose(6, 100_000, Scheme::S1111, DecomposeOptions::default()),
            Err(ConstructError::InvalidScheme { .. })
        ));
        let opts = DecomposeOptions {
            oracle_fallback: true,
            ..Default::default()
        };
        let d = decompose(6, 100_000, Scheme::S1111, opts).unwrap();
        assert_eq!(d.method, Method::Oracle);
        assert!(verify_witness(&d.witness));
    }
}
