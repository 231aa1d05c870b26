//! Exact membership in the real intervals from which `b` is chosen.
//!
//! Endpoints are irrational, so every comparison is a squared integer
//! predicate. `N` is at most `u64::MAX` and `b` at most a few times
//! `sqrt(N)`, so all products fit in `i128`.

use super::ConstructError;
use crate::polygonal::Scheme;

/// The three intervals; `(1,1,2,2)` and `(1,1,1,3)` share the middle one.
///
/// * `Weight4`: `[1/2 + sqrt(6N/m - 3), 2/3 + sqrt(8N/m)]`
/// * `Weight6`: `[3/2 + sqrt(10N/m - 3), 1 + sqrt(12N/m)]`
/// * `Weight8`: `[5/2 + sqrt(14N/m - 1), 4/3 + 4 sqrt(N/m)]`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    Weight4,
    Weight6,
    Weight8,
}

impl Interval {
    pub fn for_scheme(scheme: Scheme) -> Self {
        match scheme {
            Scheme::S1111 => Interval::Weight4,
            Scheme::S1122 | Scheme::S1113 => Interval::Weight6,
            Scheme::S1124 => Interval::Weight8,
        }
    }

    /// `b >= alpha`.
    pub fn above_lower(self, m: u32, n: u64, b: i128) -> bool {
        let (m, n) = (m as i128, n as i128);
        let (d, rhs) = match self {
            Interval::Weight4 => (2 * b - 1, 24 * n - 12 * m),
            Interval::Weight6 => (2 * b - 3, 40 * n - 12 * m),
            Interval::Weight8 => (2 * b - 5, 56 * n - 4 * m),
        };
        d >= 0 && m * d * d >= rhs
    }

    /// `b <= beta`.
    pub fn below_upper(self, m: u32, n: u64, b: i128) -> bool {
        let (m, n) = (m as i128, n as i128);
        let (d, rhs) = match self {
            Interval::Weight4 => (3 * b - 2, 72 * n),
            Interval::Weight6 => (b - 1, 12 * n),
            Interval::Weight8 => (3 * b - 4, 144 * n),
        };
        d < 0 || m * d * d <= rhs
    }

    pub fn contains(self, m: u32, n: u64, b: i128) -> bool {
        self.above_lower(m, n, b) && self.below_upper(m, n, b)
    }

    /// Smallest integer `b >= 1` with `b >= alpha`.
    pub fn ceil_alpha(self, m: u32, n: u64) -> i128 {
        let (mi, ni) = (m as i128, n as i128);
        // alpha = (c + sqrt(rhs / m)) / 2
        let (c, rhs) = match self {
            Interval::Weight4 => (1, 24 * ni - 12 * mi),
            Interval::Weight6 => (3, 40 * ni - 12 * mi),
            Interval::Weight8 => (5, 56 * ni - 4 * mi),
        };
        let root = (rhs.max(0) / mi).unsigned_abs().isqrt() as i128;
        let mut b = ((root + c) / 2).max(1);
        while b > 1 && self.above_lower(m, n, b - 1) {
            b -= 1;
        }
        while !self.above_lower(m, n, b) {
            b += 1;
        }
        b
    }

    /// Largest integer `b` with `b <= beta`.
    pub fn floor_beta(self, m: u32, n: u64) -> i128 {
        let (mi, ni) = (m as i128, n as i128);
        // beta = (c + sqrt(rhs / m)) / k
        let (c, k, rhs) = match self {
            Interval::Weight4 => (2, 3, 72 * ni),
            Interval::Weight6 => (1, 1, 12 * ni),
            Interval::Weight8 => (4, 3, 144 * ni),
        };
        let root = (rhs / mi).unsigned_abs().isqrt() as i128;
        let mut b = (root + c) / k;
        while !self.below_upper(m, n, b) {
            b -= 1;
        }
        while self.below_upper(m, n, b + 1) {
            b += 1;
        }
        b
    }

    /// Whether `N` satisfies the length lemma's hypothesis for multiplier `l`.
    pub fn length_hypothesis(self, m: u32, n: u64, l: u32) -> bool {
        let (m, n, l) = (m as u128, n as u128, l as u128);
        match self {
            Interval::Weight4 => n >= 7 * l * l * m * m * m,
            Interval::Weight6 => n >= 11 * l * m * m * (l * m + 1),
            Interval::Weight8 => l * m >= 20 && n >= 3 * l * m * m * (5 * l * m + 12),
        }
    }

    /// Number of integers in the interval (zero if empty).
    pub fn integer_count(self, m: u32, n: u64) -> i128 {
        (self.floor_beta(m, n) - self.ceil_alpha(m, n) + 1).max(0)
    }
}

/// Exact test `b ∈ I` for the interval attached to `scheme`.
pub fn interval_contains(scheme: Scheme, m: u32, n: u64, b: i128) -> bool {
    Interval::for_scheme(scheme).contains(m, n, b)
}

/// `ceil(alpha)` of the scheme's interval.
pub fn ceil_alpha(scheme: Scheme, m: u32, n: u64) -> i128 {
    Interval::for_scheme(scheme).ceil_alpha(m, n)
}

/// Confirms the interval holds at least `l * m` integers when the length
/// lemma's hypothesis on `N` is met.
///
/// Returns `Ok(false)` only if the lemma's guarantee fails, which is a bug.
pub fn interval_length_check(
    scheme: Scheme,
    m: u32,
    n: u64,
    l: u32,
) -> Result<bool, ConstructError> {
    let iv = Interval::for_scheme(scheme);
    if m < 3 || !iv.length_hypothesis(m, n, l) {
        return Err(ConstructError::PreconditionViolated(format!(
            "length lemma hypothesis fails for scheme {scheme}, m={m}, N={n}, l={l}"
        )));
    }
    let count = iv.integer_count(m, n);
    let ok = count >= l as i128 * m as i128;
    if !ok {
        log::error!(
            "interval for scheme {scheme}, m={m}, N={n} holds {count} integers, expected >= {}",
            l * m
        );
    }
    Ok(ok)
}
