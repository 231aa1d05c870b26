//! Choice of the pair `(a, b)` with `N = (m/2)(a - b) + b`.
//!
//! Each scheme walks a short, fixed list of candidates `b` in an arithmetic
//! progression starting just above `ceil(alpha)` and keeps the first one whose
//! `a` meets the splitting lemma's congruence conditions.

use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::split;
use super::ConstructError;
use crate::polygonal::Scheme;

/// The intermediate pair handed to a splitting lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussPair {
    pub a: u64,
    pub b: u64,
    pub scheme: Scheme,
    pub m: u32,
    pub n: u64,
}

impl GaussPair {
    /// Checks every invariant of the pair: the defining relation with `N`,
    /// interval membership, the weight inequalities and the lemma congruences.
    pub fn check(&self) -> bool {
        let (a, b, m, n) = (
            self.a as i128,
            self.b as i128,
            self.m as i128,
            self.n as i128,
        );
        m * (a - b) == 2 * (n - b)
            && Interval::for_scheme(self.scheme).contains(self.m, self.n, b)
            && split::inequalities_hold(self.scheme, self.a, self.b)
            && split::congruences_hold(self.scheme, self.a, self.b)
    }
}

/// Options that change which `N` count as "large enough".
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundOptions {
    /// Use `418 m^3` instead of `1628 m^3` for `(1,1,2,2)` with odd `m`.
    pub sharp_odd_bound: bool,
}

// Smallest b >= start with b = residue (mod modulus).
fn first_congruent(start: i128, residue: i128, modulus: i128) -> i128 {
    start + (residue - start).rem_euclid(modulus)
}

fn candidates(scheme: Scheme, m: u32, n: u64, alpha: i128) -> Vec<i128> {
    let (mi, ni) = (m as i128, n as i128);
    let b0 = first_congruent(alpha, ni, mi);
    let progression =
        |start: i128, step: i128, count: i128| (0..count).map(move |j| start + j * step);
    match scheme {
        Scheme::S1111 => vec![b0, b0 + mi],
        Scheme::S1122 => {
            if m % 3 != 0 || n % 3 != 0 {
                progression(b0, mi, 8).collect()
            } else {
                let c0 = first_congruent(alpha, ni, 3 * mi);
                let count = if m % 2 == 1 { 2 } else { 4 };
                progression(c0, 3 * mi, count).collect()
            }
        }
        Scheme::S1113 => {
            if m % 3 != 0 || n % 3 != 0 {
                vec![b0, b0 + mi]
            } else {
                let c0 = first_congruent(alpha, ni, 3 * mi);
                progression(c0, 3 * mi, 3).collect()
            }
        }
        Scheme::S1124 => {
            if m % 4 != 0 || n % 8 != 0 {
                vec![b0, b0 + mi]
            } else {
                vec![first_congruent(alpha, ni - 2 * mi, 8 * mi)]
            }
        }
    }
}

/// Selects `(a, b)` for `N >= bound` following the case analysis of the
/// scheme's existence argument; the smallest qualifying candidate wins.
pub fn select_ab(
    scheme: Scheme,
    m: u32,
    n: u64,
    opts: BoundOptions,
) -> Result<GaussPair, ConstructError> {
    if !scheme.applicable(m) {
        return Err(ConstructError::InvalidScheme { scheme, m });
    }
    let bound = scheme.bound(m, opts.sharp_odd_bound);
    if (n as u128) < bound {
        return Err(ConstructError::PreconditionViolated(format!(
            "N={n} is below the bound {bound} for scheme {scheme}, m={m}"
        )));
    }
    let iv = Interval::for_scheme(scheme);
    let alpha = iv.ceil_alpha(m, n);
    for b in candidates(scheme, m, n, alpha) {
        if !iv.contains(m, n, b) {
            return Err(ConstructError::AssertionFailure(format!(
                "candidate b={b} left the interval (scheme {scheme}, m={m}, N={n})"
            )));
        }
        let num = 2 * (n as i128 - b);
        if num % m as i128 != 0 {
            return Err(ConstructError::AssertionFailure(format!(
                "candidate b={b} is not congruent to N mod m"
            )));
        }
        let a = num / m as i128 + b;
        let (a, b) = (a as u64, b as u64);
        if split::congruences_hold(scheme, a, b) {
            let pair = GaussPair { a, b, scheme, m, n };
            debug_assert!(pair.check(), "{pair:?}");
            return Ok(pair);
        }
    }
    Err(ConstructError::AssertionFailure(format!(
        "no candidate b qualifies for scheme {scheme}, m={m}, N={n}"
    )))
}
