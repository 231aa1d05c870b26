//! The four splitting lemmas: given `(a, b)` find naturals `s, t, u, v` with
//! `a = s^2 + t^2 + c3 u^2 + c4 v^2` and `b = s + t + c3 u + c4 v`.
//!
//! Each lemma reduces to a representation `W a - b^2 = x^2 + c2 y^2 + c3 z^2`
//! by a ternary form and then recovers `(s, t, u, v)` as linear combinations of
//! `b, x, y, z`. Representations are scanned in [`reps`] order and, for each,
//! every sign pattern and admissible coordinate swap is tried until all four
//! combinations are integral.

use serde::{Deserialize, Serialize};

use super::ConstructError;
use crate::polygonal::Scheme;
use crate::quadforms::{search_order, FormDesc};

/// Output of a splitting lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitQuad {
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
}

impl SplitQuad {
    pub fn as_array(&self) -> [u64; 4] {
        [self.s, self.t, self.u, self.v]
    }

    /// `(sum c_i q_i^2, sum c_i q_i)` under the scheme's coefficients.
    pub fn moments(&self, scheme: Scheme) -> (u128, u128) {
        let c = scheme.coeffs().map(u128::from);
        self.as_array()
            .iter()
            .zip(c)
            .fold((0, 0), |(sq, lin), (&q, c)| {
                let q = q as u128;
                (sq + c * q * q, lin + c * q)
            })
    }
}

/// `b^2 < W a` and `(W - 1) a < b^2 + 2b + W`.
pub fn inequalities_hold(scheme: Scheme, a: u64, b: u64) -> bool {
    let w = scheme.weight() as u128;
    let (a, b) = (a as u128, b as u128);
    b * b < w * a && (w - 1) * a < b * b + 2 * b + w
}

/// The parity and mod-3 / mod-9 conditions each lemma requires of `(a, b)`.
pub fn congruences_hold(scheme: Scheme, a: u64, b: u64) -> bool {
    match scheme {
        Scheme::S1111 => (a % 2 == 1 && b % 2 == 1) || (a % 4 == 2 && b % 2 == 0),
        Scheme::S1122 => a % 2 == b % 2 && (a % 2 == 1 || a % 8 == 4) && (a % 3 == 0 || b % 3 != 0),
        Scheme::S1113 => a % 2 == b % 2 && (a % 9 == 3 || b % 3 != 0),
        Scheme::S1124 => {
            (a % 2 == 1 && b % 2 == 1)
                || (a % 2 == 0 && b % 4 == 2)
                || (a % 4 == 0 && b % 8 == 4)
                || (a % 16 == (b + 4) % 16 && b % 8 == 0)
        }
    }
}

fn check_pre(scheme: Scheme, a: u64, b: u64) -> Result<(), ConstructError> {
    if a == 0 || b == 0 {
        return Err(ConstructError::PreconditionViolated(
            "a and b must be positive".into(),
        ));
    }
    if !inequalities_hold(scheme, a, b) {
        return Err(ConstructError::PreconditionViolated(format!(
            "(a, b) = ({a}, {b}) violates the weight-{} inequalities",
            scheme.weight()
        )));
    }
    if !congruences_hold(scheme, a, b) {
        return Err(ConstructError::PreconditionViolated(format!(
            "(a, b) = ({a}, {b}) fails the congruence conditions for scheme {scheme}"
        )));
    }
    Ok(())
}

const IDENTITY: [usize; 3] = [0, 1, 2];

/// Scans representations of `target` by `form`; each is scaled by `scale`,
/// rearranged by every entry of `perms`, and given every sign pattern, until
/// `recover` yields four naturals reproducing `(a, b)`.
fn search<F>(
    scheme: Scheme,
    (a, b): (u64, u64),
    form: FormDesc,
    target: u128,
    scale: i128,
    perms: &[[usize; 3]],
    recover: F,
) -> Result<SplitQuad, ConstructError>
where
    F: Fn(i128, [i128; 3]) -> Option<[i128; 4]>,
{
    let bi = b as i128;
    for rep in search_order(form, target) {
        let base = [rep.x, rep.y, rep.z].map(|c| c as i128 * scale);
        for perm in perms {
            for signs in 0..8u32 {
                let xyz: [i128; 3] = std::array::from_fn(|i| {
                    let c = base[perm[i]];
                    if signs >> i & 1 == 1 {
                        -c
                    } else {
                        c
                    }
                });
                let Some(q) = recover(bi, xyz) else { continue };
                if q.iter().any(|&c| c < 0) {
                    continue;
                }
                let quad = SplitQuad {
                    s: q[0] as u64,
                    t: q[1] as u64,
                    u: q[2] as u64,
                    v: q[3] as u64,
                };
                if quad.moments(scheme) == (a as u128, b as u128) {
                    return Ok(quad);
                }
            }
        }
    }
    Err(ConstructError::AssertionFailure(format!(
        "no representation of {target} by {form} splits (a, b) = ({a}, {b})"
    )))
}

fn exact_div(num: i128, den: i128) -> Option<i128> {
    (num % den == 0).then(|| num / den)
}

/// `a = s^2 + t^2 + u^2 + v^2`, `b = s + t + u + v`.
///
/// Needs `b^2 < 4a < ...`, `3a < b^2 + 2b + 4`, and either `a, b` odd or
/// `2 || a` with `b` even.
pub fn split_1111(a: u64, b: u64) -> Result<SplitQuad, ConstructError> {
    check_pre(Scheme::S1111, a, b)?;
    let (a128, b128) = (a as u128, b as u128);
    let (target, scale) = if a % 2 == 1 {
        (4 * a128 - b128 * b128, 1)
    } else {
        let (a0, b0) = (a128 / 2, b128 / 2);
        (2 * a0 - b0 * b0, 2)
    };
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    search(
        Scheme::S1111,
        (a, b),
        FormDesc::F111,
        target,
        scale,
        &perms,
        |b, [x, y, z]| {
            Some([
                exact_div(b + x + y + z, 4)?,
                exact_div(b + x - y - z, 4)?,
                exact_div(b - x + y - z, 4)?,
                exact_div(b - x - y + z, 4)?,
            ])
        },
    )
}

/// `a = s^2 + t^2 + 2u^2 + 2v^2`, `b = s + t + 2u + 2v`.
///
/// Needs the weight-6 inequalities, `a = b (mod 2)`, `2 ∤ a` or `4 || a`,
/// and `3 | a` or `3 ∤ b`.
pub fn split_1122(a: u64, b: u64) -> Result<SplitQuad, ConstructError> {
    check_pre(Scheme::S1122, a, b)?;
    let (a128, b128) = (a as u128, b as u128);
    let (target, scale) = if b % 3 == 0 {
        ((6 * a128 - b128 * b128) / 9, 3)
    } else {
        (6 * a128 - b128 * b128, 1)
    };
    let perms = [IDENTITY, [0, 2, 1]];
    search(
        Scheme::S1122,
        (a, b),
        FormDesc::F122,
        target,
        scale,
        &perms,
        |b, [x, y, z]| {
            Some([
                exact_div(b + x + 2 * y + 2 * z, 6)?,
                exact_div(b - x - 2 * y + 2 * z, 6)?,
                exact_div(b - x + y - z, 6)?,
                exact_div(b + x - y - z, 6)?,
            ])
        },
    )
}

/// `a = s^2 + t^2 + u^2 + 3v^2`, `b = s + t + u + 3v`.
///
/// Needs the weight-6 inequalities, `a = b (mod 2)`, and `a = 3 (mod 9)` or `3 ∤ b`.
pub fn split_1113(a: u64, b: u64) -> Result<SplitQuad, ConstructError> {
    check_pre(Scheme::S1113, a, b)?;
    let target = 6 * a as u128 - b as u128 * b as u128;
    let perms = [IDENTITY, [1, 0, 2]];
    search(
        Scheme::S1113,
        (a, b),
        FormDesc::F113,
        target,
        1,
        &perms,
        |b, [x, y, z]| {
            Some([
                exact_div(b + x + y + 3 * z, 6)?,
                exact_div(b + x + y - 3 * z, 6)?,
                exact_div(b + x - 2 * y, 6)?,
                exact_div(b - x, 6)?,
            ])
        },
    )
}

/// `a = s^2 + t^2 + 2u^2 + 4v^2`, `b = s + t + 2u + 4v`.
///
/// Needs the weight-8 inequalities and one of: `2 ∤ ab`; `2 | a` and `2 || b`;
/// `4 | a` and `4 || b`, or `a = b + 4 (mod 16)` and `8 | b`.
pub fn split_1124(a: u64, b: u64) -> Result<SplitQuad, ConstructError> {
    check_pre(Scheme::S1124, a, b)?;
    let (a128, b128) = (a as u128, b as u128);
    let (target, scale) = if b % 2 == 1 {
        (8 * a128 - b128 * b128, 1)
    } else if b % 4 == 2 {
        let (a0, b0) = (a128 / 2, b128 / 2);
        (4 * a0 - b0 * b0, 2)
    } else {
        let (a0, b0) = (a128 / 4, b128 / 4);
        (2 * a0 - b0 * b0, 4)
    };
    search(
        Scheme::S1124,
        (a, b),
        FormDesc::F124,
        target,
        scale,
        &[IDENTITY],
        |b, [x, y, z]| {
            let u = exact_div(b + x - 2 * y, 8)?;
            let v = exact_div(b - x, 8)?;
            Some([u + exact_div(y + z, 2)?, u + exact_div(y - z, 2)?, u, v])
        },
    )
}

/// Dispatches to the scheme's splitting lemma.
pub fn split(scheme: Scheme, a: u64, b: u64) -> Result<SplitQuad, ConstructError> {
    match scheme {
        Scheme::S1111 => split_1111(a, b),
        Scheme::S1122 => split_1122(a, b),
        Scheme::S1113 => split_1113(a, b),
        Scheme::S1124 => split_1124(a, b),
    }
}
