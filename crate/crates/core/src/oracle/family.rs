//! Audits of the explicit families offered as non-representable.
//!
//! * `T11ii`, `m = 4l`: `4 l^2 (4^{k phi(2l+1)} - 1) / (2l + 1)` against four
//!   polygonal numbers of order `m + 4`.
//! * `T12ii`, `m = 2l` with `l` odd: `(l - 1)^2 (4^{k phi(l)} - 1) / l` against
//!   `p(x1) + p(x2) + 2p(x3) + 2p(x4)` at order `m + 2`.
//!
//! The audit reports what the search finds, whether or not it agrees.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use super::{euler_phi, representable, OracleError, MAX_LIMIT};
use crate::polygonal::{Order, Scheme, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "1.1ii")]
    T11ii,
    #[serde(rename = "1.2ii")]
    T12ii,
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "1.1ii" | "t11ii" => Ok(Theorem::T11ii),
            "1.2ii" | "t12ii" => Ok(Theorem::T12ii),
            _ => Err(format!("unknown family `{s}` (expected 1.1ii or 1.2ii)")),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T11ii => "1.1ii",
            Theorem::T12ii => "1.2ii",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyStatus {
    NonRepresentable,
    Representable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub theorem: Theorem,
    pub m: u32,
    pub k: u32,
    #[serde(serialize_with = "decimal")]
    pub member: BigUint,
    pub status: FamilyStatus,
    pub witness: Option<Witness>,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Exact family member for parameter `k >= 1`.
pub fn family_member(theorem: Theorem, m: u32, k: u32) -> Result<BigUint, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidParameters("k must be positive".into()));
    }
    let (square, modulus) = match theorem {
        Theorem::T11ii => {
            if m == 0 || m % 4 != 0 {
                return Err(OracleError::InvalidParameters(format!(
                    "family 1.1ii needs 4 | m, got m={m}"
                )));
            }
            let l = (m / 4) as u64;
            (4 * l * l, 2 * l + 1)
        }
        Theorem::T12ii => {
            if m < 3 || m % 4 != 2 {
                return Err(OracleError::InvalidParameters(format!(
                    "family 1.2ii needs m = 2 (mod 4) and m >= 3, got m={m}"
                )));
            }
            let l = (m / 2) as u64;
            ((l - 1) * (l - 1), l)
        }
    };
    let exponent = k as u64 * euler_phi(modulus);
    let power = BigUint::from(4u32).pow(exponent as u32);
    let numerator = power - 1u32;
    debug_assert!((&numerator % modulus).to_u64() == Some(0));
    Ok(BigUint::from(square) * (numerator / modulus))
}

/// Decides representability of the family member by exhaustive search.
pub fn family_audit(theorem: Theorem, m: u32, k: u32) -> Result<FamilyVerdict, OracleError> {
    let member = family_member(theorem, m, k)?;
    let n = member
        .to_u64()
        .filter(|&n| n <= MAX_LIMIT)
        .ok_or(OracleError::LimitTooLarge {
            limit: member.to_u64().unwrap_or(u64::MAX),
            max: MAX_LIMIT,
        })?;
    let slots = match theorem {
        Theorem::T11ii => Scheme::S1111.slots(Order::new(m + 2).expect("m >= 4")),
        Theorem::T12ii => Scheme::S1122.slots(Order::new(m).expect("m >= 6")),
    };
    let witness = representable(&slots, n)?;
    let status = if witness.is_some() {
        FamilyStatus::Representable
    } else {
        FamilyStatus::NonRepresentable
    };
    Ok(FamilyVerdict {
        theorem,
        m,
        k,
        member,
        status,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members() {
        assert_eq!(
            family_member(Theorem::T11ii, 4, 1).unwrap(),
            BigUint::from(20u32)
        );
        assert_eq!(
            family_member(Theorem::T11ii, 4, 2).unwrap(),
            BigUint::from(340u32)
        );
        assert_eq!(
            family_member(Theorem::T11ii, 8, 1).unwrap(),
            BigUint::from(816u32)
        );
        assert_eq!(
            family_member(Theorem::T12ii, 6, 1).unwrap(),
            BigUint::from(20u32)
        );
        assert!(family_member(Theorem::T11ii, 6, 1).is_err());
        assert!(family_member(Theorem::T12ii, 2, 1).is_err());
        assert!(family_member(Theorem::T12ii, 8, 1).is_err());
        assert!(family_member(Theorem::T11ii, 4, 0).is_err());
    }

    #[test]
    fn large_members_are_exact() {
        // 4 * (4^(2*40) - 1) / 3 with phi(3) = 2
        let expect = (BigUint::from(4u32).pow(80) - 1u32) / 3u32 * 4u32;
        assert_eq!(family_member(Theorem::T11ii, 4, 40).unwrap(), expect);
        assert!(matches!(
            family_audit(Theorem::T11ii, 4, 40),
            Err(OracleError::LimitTooLarge { .. })
        ));
    }

    #[test]
    fn divisibility() {
        for l in 1..8u32 {
            for k in 1..4 {
                let v = family_member(Theorem::T11ii, 4 * l, k).unwrap();
                assert_eq!(&v % 4u32, BigUint::from(0u32));
                assert_eq!(&v % (l * l), BigUint::from(0u32));
            }
        }
    }

    #[test]
    fn audits() {
        let v = family_audit(Theorem::T11ii, 4, 1).unwrap();
        assert_eq!(v.status, FamilyStatus::NonRepresentable);
        let v = family_audit(Theorem::T12ii, 6, 1).unwrap();
        assert_eq!(v.status, FamilyStatus::Representable);
    }
}
