//! Polygonal numbers, coefficient schemes and witnesses.
//!
//! The polygonal number of order `m + 2` at index `x` is
//! `(m x^2 - (m - 2) x) / 2`. Evaluated at any integer index this is a
//! generalized polygonal number; it is nonnegative for every `x`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// The parameter `m` of the polygonal numbers of order `m + 2`.
///
/// `m = 1` gives triangular numbers, `m = 2` squares, `m = 4` hexagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u32", try_from = "u32")]
pub struct Order(u32);

impl Order {
    pub fn new(m: u32) -> Option<Self> {
        (m >= 1).then_some(Order(m))
    }

    #[inline]
    pub fn m(self) -> u32 {
        self.0
    }

    /// Number of sides of the polygon, `m + 2`.
    pub fn sides(self) -> u64 {
        self.0 as u64 + 2
    }
}

impl From<Order> for u32 {
    fn from(o: Order) -> u32 {
        o.0
    }
}

impl TryFrom<u32> for Order {
    type Error = String;

    fn try_from(m: u32) -> Result<Self, Self::Error> {
        Order::new(m).ok_or_else(|| format!("order parameter m must be >= 1, got {m}"))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index range of a summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    /// Indices `0, 1, 2, ...`.
    Natural,
    /// All integer indices (generalized polygonal numbers).
    Integer,
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "natural" | "n" | "nat" => Ok(Domain::Natural),
            "integer" | "z" | "int" => Ok(Domain::Integer),
            other => Err(format!(
                "unknown domain `{other}` (expected natural or integer)"
            )),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Natural => "natural",
            Domain::Integer => "integer",
        })
    }
}

/// The four supported coefficient quadruples `(1, 1, a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    #[serde(rename = "1,1,1,1")]
    S1111,
    #[serde(rename = "1,1,2,2")]
    S1122,
    #[serde(rename = "1,1,1,3")]
    S1113,
    #[serde(rename = "1,1,2,4")]
    S1124,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::S1111, Scheme::S1122, Scheme::S1113, Scheme::S1124];

    pub fn coeffs(self) -> [u32; 4] {
        match self {
            Scheme::S1111 => [1, 1, 1, 1],
            Scheme::S1122 => [1, 1, 2, 2],
            Scheme::S1113 => [1, 1, 1, 3],
            Scheme::S1124 => [1, 1, 2, 4],
        }
    }

    /// Sum of the coefficients.
    pub fn weight(self) -> u32 {
        self.coeffs().iter().sum()
    }

    /// `C` in the guarantee "every `N >= C m^3` is represented".
    pub fn bound_coeff(self) -> u32 {
        match self {
            Scheme::S1111 => 28,
            Scheme::S1122 => 1628,
            Scheme::S1113 => 924,
            Scheme::S1124 => 1056,
        }
    }

    /// Improved coefficient available for odd `m`; only `(1,1,2,2)` has one.
    pub fn sharp_odd_bound_coeff(self) -> Option<u32> {
        match self {
            Scheme::S1122 => Some(418),
            _ => None,
        }
    }

    /// Whether the constructive guarantee covers this `m`.
    pub fn applicable(self, m: u32) -> bool {
        if m < 3 {
            return false;
        }
        match self {
            Scheme::S1111 => m % 4 == 0,
            Scheme::S1122 => m % 2 == 1 || m % 4 == 0,
            Scheme::S1113 | Scheme::S1124 => true,
        }
    }

    /// `bound_coeff * m^3`, or the sharp odd coefficient when requested and valid.
    pub fn bound(self, m: u32, sharp_odd: bool) -> u128 {
        let coeff = match self.sharp_odd_bound_coeff() {
            Some(c) if sharp_odd && m % 2 == 1 => c,
            _ => self.bound_coeff(),
        };
        let m = m as u128;
        coeff as u128 * m * m * m
    }

    /// The four natural-index slots of this scheme at order `m + 2`.
    pub fn slots(self, order: Order) -> [SlotSpec; 4] {
        self.coeffs()
            .map(|c| SlotSpec::new(order, c, Domain::Natural))
    }

    pub fn from_coeffs(coeffs: &[u32]) -> Option<Self> {
        Scheme::ALL.into_iter().find(|s| s.coeffs()[..] == *coeffs)
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("invalid scheme `{s}`: {e}"))?;
        Scheme::from_coeffs(&coeffs).ok_or_else(|| {
            format!("unsupported scheme `{s}` (expected one of 1,1,1,1 1,1,2,2 1,1,1,3 1,1,2,4)")
        })
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coeffs();
        write!(f, "{a},{b},{c},{d}")
    }
}

/// One weighted summand `coeff * p_{m+2}(x)` with `x` ranging over `domain`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotSpec {
    pub m: Order,
    pub coeff: u32,
    pub domain: Domain,
}

impl SlotSpec {
    pub fn new(m: Order, coeff: u32, domain: Domain) -> Self {
        SlotSpec { m, coeff, domain }
    }
}

impl FromStr for SlotSpec {
    type Err = String;

    /// Parses `m,coeff,domain`, e.g. `4,1,natural`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [m, c, d] = parts[..] else {
            return Err(format!("invalid slot `{s}` (expected m,coeff,domain)"));
        };
        let m: u32 = m
            .parse()
            .map_err(|e| format!("invalid slot order `{m}`: {e}"))?;
        let m = Order::try_from(m)?;
        let coeff: u32 = c
            .parse()
            .map_err(|e| format!("invalid slot coefficient `{c}`: {e}"))?;
        if coeff == 0 {
            return Err("slot coefficient must be positive".into());
        }
        Ok(SlotSpec::new(m, coeff, d.parse()?))
    }
}

/// An index quadruple certifying `n = sum coeff_i * p_{m_i + 2}(xs_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub slots: [SlotSpec; 4],
    pub n: u64,
    pub xs: [i64; 4],
}

impl Witness {
    /// Polygonal values of the four indices, without coefficients.
    pub fn values(&self) -> [u128; 4] {
        std::array::from_fn(|i| {
            checked_polygonal(self.slots[i].m, self.xs[i]).expect("witness index out of range")
        })
    }
}

/// Exact polygonal number `(m x^2 - (m - 2) x) / 2` in arbitrary precision.
pub fn polygonal_number(m: Order, x: &BigInt) -> BigInt {
    let m = BigInt::from(m.m());
    let two = BigInt::from(2);
    (&m * x * x - (&m - &two) * x) / two
}

/// Polygonal number in 128-bit arithmetic; `None` only if the value exceeds `u128`.
#[inline]
pub fn checked_polygonal(m: Order, x: i64) -> Option<u128> {
    // m * x(x-1)/2 + x, where x(x-1)/2 >= |x| for x < 0.
    let x = x as i128;
    let tri = (x * (x - 1) / 2) as u128;
    let scaled = tri.checked_mul(m.m() as u128)?;
    if x >= 0 {
        scaled.checked_add(x as u128)
    } else {
        Some(scaled - x.unsigned_abs())
    }
}

/// Index `x` in `domain` with `p_{m+2}(x) = n`, preferring the nonnegative one.
pub fn is_polygonal(m: Order, n: u64, domain: Domain) -> Option<i64> {
    // Roots of m x^2 - (m-2) x - 2n = 0 are ((m-2) +- s) / 2m with s^2 = (m-2)^2 + 8mn.
    let mm = m.m() as i128;
    let disc = (mm - 2) * (mm - 2) + 8 * mm * n as i128;
    let s = isqrt_u128(disc as u128) as i128;
    if s * s != disc {
        return None;
    }
    let den = 2 * mm;
    let roots =
        [(mm - 2) + s, (mm - 2) - s].map(|num| (num % den == 0).then(|| (num / den) as i64));
    let mut found = roots.into_iter().flatten();
    match domain {
        Domain::Natural => found.find(|&x| x >= 0),
        Domain::Integer => {
            let all: Vec<i64> = found.collect();
            all.iter()
                .copied()
                .find(|&x| x >= 0)
                .or(all.first().copied())
        }
    }
}

fn isqrt_u128(n: u128) -> u128 {
    n.isqrt()
}

/// Indices of `domain` in the order `0, 1, -1, 2, -2, ...` (natural: `0, 1, 2, ...`),
/// paired with their values, stopping once every remaining value exceeds `limit`.
pub fn indexed_values(m: Order, limit: u64, domain: Domain) -> Vec<(u64, i64)> {
    let limit = limit as u128;
    let mut out = Vec::new();
    let mut pos_open = true;
    let mut neg_open = domain == Domain::Integer;
    let mut x: i64 = 0;
    match checked_polygonal(m, 0) {
        Some(v) if v <= limit => out.push((v as u64, 0)),
        _ => return out,
    }
    while pos_open || neg_open {
        x += 1;
        if pos_open {
            match checked_polygonal(m, x) {
                Some(v) if v <= limit => out.push((v as u64, x)),
                _ => pos_open = false,
            }
        }
        if neg_open {
            match checked_polygonal(m, -x) {
                Some(v) if v <= limit => out.push((v as u64, -x)),
                _ => neg_open = false,
            }
        }
    }
    out
}

/// Sorted, duplicate-free values `p_{m+2}(x) <= limit` for `x` in `domain`.
pub fn enumerate_polygonal(m: Order, limit: u64, domain: Domain) -> Vec<u64> {
    let mut values: Vec<u64> = indexed_values(m, limit, domain)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    values.sort_unstable();
    values.dedup();
    values
}

/// Checks the witness sums to `n` exactly and respects each slot's domain.
pub fn verify_witness(w: &Witness) -> bool {
    let mut total: u128 = 0;
    for (slot, &x) in w.slots.iter().zip(&w.xs) {
        if slot.domain == Domain::Natural && x < 0 {
            return false;
        }
        let Some(term) =
            checked_polygonal(slot.m, x).and_then(|v| v.checked_mul(slot.coeff as u128))
        else {
            return false;
        };
        let Some(t) = total.checked_add(term) else {
            return false;
        };
        total = t;
    }
    total == w.n as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ord(m: u32) -> Order {
        Order::new(m).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(checked_polygonal(ord(7), 0), Some(0));
        assert_eq!(checked_polygonal(ord(6), 2), Some(8));
        assert_eq!(checked_polygonal(ord(4), -1), Some(3));
        for m in 1..20 {
            assert_eq!(checked_polygonal(ord(m), 1), Some(1));
            assert_eq!(checked_polygonal(ord(m), 2), Some(m as u128 + 2));
            assert_eq!(checked_polygonal(ord(m), 3), Some(3 * m as u128 + 3));
        }
        assert_eq!(polygonal_number(ord(4), &BigInt::from(-1)), BigInt::from(3));
    }

    #[test]
    fn named_orders() {
        for x in 0..50i64 {
            let xu = x as u128;
            assert_eq!(checked_polygonal(ord(2), x), Some(xu * xu));
            assert_eq!(
                checked_polygonal(ord(3), x),
                Some(xu * (3 * xu).saturating_sub(1) / 2)
            );
            assert_eq!(checked_polygonal(ord(1), x), Some(xu * (xu + 1) / 2));
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(checked_polygonal(ord(u32::MAX), i64::MAX), None);
        let big = polygonal_number(ord(u32::MAX), &BigInt::from(i64::MAX));
        assert!(big > BigInt::from(u128::MAX));
    }

    #[test]
    fn inverse_lookup() {
        assert_eq!(is_polygonal(ord(4), 6, Domain::Natural), Some(2));
        assert_eq!(is_polygonal(ord(9), 1, Domain::Natural), Some(1));
        assert_eq!(is_polygonal(ord(4), 5, Domain::Natural), None);
        assert_eq!(is_polygonal(ord(4), 3, Domain::Natural), None);
        assert_eq!(is_polygonal(ord(4), 3, Domain::Integer), Some(-1));
        assert_eq!(is_polygonal(ord(1), 0, Domain::Integer), Some(0));
        for m in 1..10 {
            assert_eq!(is_polygonal(ord(m), 0, Domain::Natural), Some(0));
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_polygonal(ord(4), 16, Domain::Natural),
            vec![0, 1, 6, 15]
        );
        assert_eq!(
            enumerate_polygonal(ord(4), 16, Domain::Integer),
            vec![0, 1, 3, 6, 10, 15]
        );
        assert_eq!(enumerate_polygonal(ord(1), 0, Domain::Natural), vec![0]);
        let order: Vec<i64> = indexed_values(ord(4), 16, Domain::Integer)
            .iter()
            .map(|p| p.1)
            .collect();
        assert_eq!(order, vec![0, 1, -1, 2, -2, 3]);
    }

    #[test]
    fn generalized_hexagonal_are_triangular() {
        let limit = 100_000;
        assert_eq!(
            enumerate_polygonal(ord(4), limit, Domain::Integer),
            enumerate_polygonal(ord(1), limit, Domain::Natural)
        );
    }

    #[test]
    fn first_difference() {
        for m in 1..30u32 {
            for x in 0..=1000i64 {
                let d = checked_polygonal(ord(m), x + 1).unwrap()
                    - checked_polygonal(ord(m), x).unwrap();
                assert_eq!(d, m as u128 * x as u128 + 1);
            }
        }
    }

    #[test]
    fn witnesses() {
        let hex = SlotSpec::new(ord(4), 1, Domain::Natural);
        let w = Witness {
            slots: [hex; 4],
            n: 0,
            xs: [0; 4],
        };
        assert!(verify_witness(&w));
        let o1 = SlotSpec::new(ord(6), 1, Domain::Natural);
        let o2 = SlotSpec::new(ord(6), 2, Domain::Natural);
        let w = Witness {
            slots: [o1, o1, o2, o2],
            n: 20,
            xs: [2, 2, 1, 1],
        };
        assert!(verify_witness(&w));
        let w = Witness {
            slots: [hex; 4],
            n: 5,
            xs: [1; 4],
        };
        assert!(!verify_witness(&w));
        // Negative index is fine in an integer slot, rejected in a natural one.
        let gen = SlotSpec::new(ord(4), 1, Domain::Integer);
        assert!(verify_witness(&Witness {
            slots: [gen, hex, hex, hex],
            n: 3,
            xs: [-1, 0, 0, 0]
        }));
        assert!(!verify_witness(&Witness {
            slots: [hex; 4],
            n: 3,
            xs: [-1, 0, 0, 0]
        }));
    }

    #[test]
    fn scheme_table() {
        let w: Vec<u32> = Scheme::ALL.iter().map(|s| s.weight()).collect();
        assert_eq!(w, vec![4, 6, 6, 8]);
        assert_eq!("1,1,2,2".parse::<Scheme>(), Ok(Scheme::S1122));
        assert!("2,2,1,1".parse::<Scheme>().is_err());
        assert!(Scheme::S1111.applicable(8) && !Scheme::S1111.applicable(6));
        assert!(Scheme::S1122.applicable(5) && !Scheme::S1122.applicable(6));
        assert!(!Scheme::S1124.applicable(2));
        assert_eq!(Scheme::S1122.bound(3, true), 418 * 27);
        assert_eq!(Scheme::S1122.bound(4, true), 1628 * 64);
        assert_eq!(
            "9,2,integer".parse::<SlotSpec>().unwrap().domain,
            Domain::Integer
        );
    }

    proptest! {
        #[test]
        fn checked_matches_bigint(m in 1u32..10_000, x in -1_000_000_000i64..1_000_000_000) {
            let exact = polygonal_number(ord(m), &BigInt::from(x));
            prop_assert_eq!(BigInt::from(checked_polygonal(ord(m), x).unwrap()), exact);
        }

        #[test]
        fn inverse_roundtrip(m in 1u32..500, x in -100_000i64..100_000) {
            let v = checked_polygonal(ord(m), x).unwrap() as u64;
            let found = is_polygonal(ord(m), v, Domain::Integer).unwrap();
            prop_assert_eq!(checked_polygonal(ord(m), found).unwrap() as u64, v);
            if x >= 0 {
                prop_assert_eq!(is_polygonal(ord(m), v, Domain::Natural), Some(x));
            }
        }
    }
}
