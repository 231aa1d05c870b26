//! Ground truth by exhaustive search.
//!
//! Whole-range scans fold the value sets of the four slots into a sumset
//! bitset; single queries use a slot-(1,2) sumset and walk slots 3 and 4.

mod bitset;
mod family;

pub use bitset::BitSet;
pub use family::{family_audit, family_member, FamilyStatus, FamilyVerdict, Theorem};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polygonal::{indexed_values, is_polygonal, verify_witness, SlotSpec, Witness};

/// Largest limit accepted by scans and single queries.
pub const MAX_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("limit {limit} exceeds the maximum {max}")]
    LimitTooLarge { limit: u64, max: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

fn guard(limit: u64) -> Result<(), OracleError> {
    if limit > MAX_LIMIT {
        Err(OracleError::LimitTooLarge {
            limit,
            max: MAX_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Euler's totient by trial division.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for positive n");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// `coeff * p(x) <= limit` as `(weighted value, index)` in index order.
fn weighted_values(slot: &SlotSpec, limit: u64) -> Vec<(u64, i64)> {
    let c = slot.coeff as u64;
    indexed_values(slot.m, limit / c, slot.domain)
        .into_iter()
        .map(|(v, x)| (v * c, x))
        .collect()
}

fn distinct_weighted(slot: &SlotSpec, limit: u64) -> Vec<usize> {
    let mut v: Vec<usize> = weighted_values(slot, limit)
        .into_iter()
        .map(|(v, _)| v as usize)
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `acc + values` restricted to `0..acc.len()`, split across `workers` threads.
fn fold(acc: &BitSet, values: &[usize], workers: usize) -> BitSet {
    let workers = workers.clamp(1, values.len().max(1));
    if workers == 1 {
        let mut out = BitSet::new(acc.len());
        for &v in values {
            out.or_shifted(acc, v);
        }
        return out;
    }
    let chunk = values.len().div_ceil(workers);
    let partials: Vec<BitSet> = std::thread::scope(|scope| {
        let handles: Vec<_> = values
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut out = BitSet::new(acc.len());
                    for &v in part {
                        out.or_shifted(acc, v);
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut out = BitSet::new(acc.len());
    for p in &partials {
        out.or_assign(p);
    }
    out
}

/// Bitset of every `sum_i coeff_i p(x_i) <= limit` over the given slots.
pub fn sumset(slots: &[SlotSpec], limit: u64, workers: usize) -> BitSet {
    let len = limit as usize + 1;
    let mut acc = BitSet::new(len);
    acc.set(0);
    for slot in slots {
        acc = fold(&acc, &distinct_weighted(slot, limit), workers);
    }
    acc
}

/// Integers up to a limit with no representation by four slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub slots: [SlotSpec; 4],
    pub limit: u64,
    pub exceptions: Vec<u64>,
    pub largest_exception: Option<u64>,
}

/// Exact exception set `{ n <= limit : no witness }`.
pub fn exception_scan(slots: &[SlotSpec; 4], limit: u64) -> Result<ScanReport, OracleError> {
    exception_scan_with_workers(slots, limit, 1)
}

/// As [`exception_scan`], folding each slot across `workers` threads.
/// The result does not depend on `workers`.
pub fn exception_scan_with_workers(
    slots: &[SlotSpec; 4],
    limit: u64,
    workers: usize,
) -> Result<ScanReport, OracleError> {
    guard(limit)?;
    let hits = sumset(slots, limit, workers);
    let exceptions: Vec<u64> = hits.zeros().map(|n| n as u64).collect();
    Ok(ScanReport {
        slots: *slots,
        limit,
        largest_exception: exceptions.last().copied(),
        exceptions,
    })
}

/// Largest exception up to `limit`, or `None` if there is none.
pub fn threshold(slots: &[SlotSpec; 4], limit: u64) -> Result<Option<u64>, OracleError> {
    Ok(exception_scan(slots, limit)?.largest_exception)
}

/// A witness for `n`, or `None` if `n` has no representation.
///
/// Builds the sumset of slots 1 and 2 up to `n`, walks slot-3 and slot-4
/// indices in their natural order and stops at the first complement found
/// in the sumset. The returned witness is the first in that order.
pub fn representable(slots: &[SlotSpec; 4], n: u64) -> Result<Option<Witness>, OracleError> {
    guard(n)?;
    let pair = sumset(&slots[..2], n, 1);
    let third = weighted_values(&slots[2], n);
    let fourth = weighted_values(&slots[3], n);
    for &(v3, x3) in &third {
        for &(v4, x4) in &fourth {
            let Some(rest) = n.checked_sub(v3).and_then(|r| r.checked_sub(v4)) else {
                continue;
            };
            if !pair.get(rest as usize) {
                continue;
            }
            let (x1, x2) = split_pair(slots, rest).expect("sumset membership implies a pair");
            let w = Witness {
                slots: *slots,
                n,
                xs: [x1, x2, x3, x4],
            };
            debug_assert!(verify_witness(&w));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn split_pair(slots: &[SlotSpec; 4], rest: u64) -> Option<(i64, i64)> {
    let c2 = slots[1].coeff as u64;
    weighted_values(&slots[0], rest)
        .into_iter()
        .find_map(|(v1, x1)| {
            let r = rest - v1;
            if r % c2 != 0 {
                return None;
            }
            is_polygonal(slots[1].m, r / c2, slots[1].domain).map(|x2| (x1, x2))
        })
}
