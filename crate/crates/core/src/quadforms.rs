//! The diagonal ternary forms `x^2 + c2 y^2 + c3 z^2` behind the splitting
//! lemmas, their exceptional sets, and the divisor-sum formula for `r_4`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the four diagonal ternary forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormDesc {
    #[serde(rename = "1,1,1")]
    F111,
    #[serde(rename = "1,1,3")]
    F113,
    #[serde(rename = "1,2,2")]
    F122,
    #[serde(rename = "1,2,4")]
    F124,
}

impl FormDesc {
    pub const ALL: [FormDesc; 4] = [
        FormDesc::F111,
        FormDesc::F113,
        FormDesc::F122,
        FormDesc::F124,
    ];

    pub fn diag(self) -> [u32; 3] {
        match self {
            FormDesc::F111 => [1, 1, 1],
            FormDesc::F113 => [1, 1, 3],
            FormDesc::F122 => [1, 2, 2],
            FormDesc::F124 => [1, 2, 4],
        }
    }

    /// Value of the form, exactly.
    pub fn eval(self, r: Rep3) -> i128 {
        let [a, b, c] = self.diag().map(i128::from);
        let (x, y, z) = (r.x as i128, r.y as i128, r.z as i128);
        a * x * x + b * y * y + c * z * z
    }
}

impl FromStr for FormDesc {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let diag = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("invalid form `{s}`: {e}"))?;
        FormDesc::ALL
            .into_iter()
            .find(|f| f.diag()[..] == diag[..])
            .ok_or_else(|| format!("unsupported form `{s}` (expected 1,1,1 1,1,3 1,2,2 or 1,2,4)"))
    }
}

impl fmt::Display for FormDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.diag();
        write!(f, "{a},{b},{c}")
    }
}

/// A representation `(x, y, z)` of some integer by a [`FormDesc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rep3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Rep3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Rep3 { x, y, z }
    }
}

/// `floor(sqrt(n))`.
#[inline]
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

// Quadratic residues mod 64, one bit per residue.
const SQUARES_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut i = 0;
    while i < 64 {
        mask |= 1 << ((i * i) % 64);
        i += 1;
    }
    mask
};

/// `Some(r)` with `r * r == n` if `n` is a perfect square.
#[inline]
pub fn exact_sqrt(n: u128) -> Option<u128> {
    if SQUARES_MOD_64 >> (n as u64 & 63) & 1 == 0 {
        return None;
    }
    let r = if n <= u64::MAX as u128 {
        (n as u64).isqrt() as u128
    } else {
        n.isqrt()
    };
    (r * r == n).then_some(r)
}

/// Whether `n` lies in the integers the form cannot represent:
/// `4^k(8l+7)` for `(1,1,1)` and `(1,2,2)`, `9^k(9l+6)` for `(1,1,3)`,
/// `4^k(16l+14)` for `(1,2,4)`.
pub fn excluded(form: FormDesc, n: u128) -> bool {
    if n == 0 {
        return false;
    }
    match form {
        FormDesc::F111 | FormDesc::F122 => strip(n, 4) % 8 == 7,
        FormDesc::F113 => strip(n, 9) % 9 == 6,
        FormDesc::F124 => strip(n, 4) % 16 == 14,
    }
}

fn strip(mut n: u128, p: u128) -> u128 {
    while n % p == 0 {
        n /= p;
    }
    n
}

/// Nonnegative representations of `n` in lexicographic `(z, y, x)` order.
///
/// Lazy: the constructive path usually stops at the first item.
pub fn reps(form: FormDesc, n: u128) -> Reps {
    let [_, c2, c3] = form.diag();
    Reps {
        n,
        c2: c2 as u128,
        c3: c3 as u128,
        z: 0,
        y: 0,
        z_rem: Some(n),
    }
}

/// Iterator returned by [`reps`].
#[derive(Debug, Clone)]
pub struct Reps {
    n: u128,
    c2: u128,
    c3: u128,
    z: u128,
    y: u128,
    // n - c3 z^2 for the current z, or None when exhausted.
    z_rem: Option<u128>,
}

impl Iterator for Reps {
    type Item = Rep3;

    fn next(&mut self) -> Option<Rep3> {
        loop {
            let zr = self.z_rem?;
            let ys = self.c2 * self.y * self.y;
            if ys > zr {
                self.z += 1;
                self.y = 0;
                self.z_rem = self.n.checked_sub(self.c3 * self.z * self.z);
                continue;
            }
            let y = self.y;
            self.y += 1;
            if let Some(x) = exact_sqrt(zr - ys) {
                return Some(Rep3::new(x as i64, y as i64, self.z as i64));
            }
        }
    }
}

// Below this the exhaustive order is already fast.
const QUICK_FROM: u128 = 1 << 24;
const QUICK_Z_LIMIT: u64 = 20_000;

/// Representations of `n` in the order the library searches them: for
/// `n >= 2^24`, a bounded run of [`prime_reps`] first, then every
/// representation in lexicographic order (so some may repeat).
pub fn search_order(form: FormDesc, n: u128) -> impl Iterator<Item = Rep3> {
    let quick = (n >= QUICK_FROM).then(|| prime_reps(form, n, QUICK_Z_LIMIT));
    quick.into_iter().flatten().chain(reps(form, n))
}

/// The first representation in [`search_order`], or `None` when `n` is in the
/// form's exceptional set. For `n < 2^24` it is the lexicographically smallest
/// in `(z, y, x)`.
pub fn represent(form: FormDesc, n: u128) -> Option<Rep3> {
    if excluded(form, n) {
        return None;
    }
    search_order(form, n).next()
}

/// All nonnegative representations of `n`, lexicographic in `(z, y, x)`.
pub fn enumerate_reps(form: FormDesc, n: u128) -> Vec<Rep3> {
    reps(form, n).collect()
}

/// Representations of `n` that reduce to a prime.
///
/// For each `z < z_limit`, when `n - c3 z^2 = 2^e q^2 p` with `p` prime and
/// `q` built from small odd primes, solves
/// `x^2 + c2 y^2 = p` by Cornacchia's algorithm and lifts the solution back
/// through the powers of two and `q`. Each step costs a primality test, so this finds
/// representations of huge `n` quickly, but it skips remainders of any other
/// shape and is not exhaustive.
pub fn prime_reps(form: FormDesc, n: u128, z_limit: u64) -> impl Iterator<Item = Rep3> {
    let [_, c2, c3] = form.diag().map(u128::from);
    (0..z_limit as u128)
        .map_while(move |z| n.checked_sub(c3 * z * z).map(|r| (z, r)))
        .filter_map(move |(z, r)| {
            let r = u64::try_from(r).ok()?;
            let (x, y) = binary_rep(c2 as u64, r)?;
            Some((x as i64, y as i64, z as i64))
        })
        .flat_map(move |(x, y, z)| {
            // With c2 = 1 the two squares are interchangeable.
            let swapped = (c2 == 1 && x != y).then_some(Rep3::new(y, x, z));
            std::iter::once(Rep3::new(x, y, z)).chain(swapped)
        })
}

// x^2 + d y^2 = r for d in {1, 2} when r is a power of two times a prime,
// up to square factors from a few small primes.
fn binary_rep(d: u64, r: u64) -> Option<(u64, u64)> {
    if r == 0 {
        return Some((0, 0));
    }
    let e = r.trailing_zeros();
    let mut p = r >> e;
    let mut scale = 1;
    for q in [3u64, 5, 7, 11, 13] {
        while p % (q * q) == 0 {
            p /= q * q;
            scale *= q;
        }
    }
    let mut rep = if p == 1 {
        (1, 0)
    } else {
        let splits = match d {
            1 => p % 4 == 1,
            _ => p % 8 == 1 || p % 8 == 3,
        };
        if !splits || !num_prime::nt_funcs::is_prime64(p) {
            return None;
        }
        cornacchia(d, p)?
    };
    for _ in 0..e {
        // 2(x^2 + y^2) = (x+y)^2 + (x-y)^2 and 2(x^2 + 2y^2) = (2y)^2 + 2x^2.
        rep = if d == 1 {
            (rep.0 + rep.1, rep.0.abs_diff(rep.1))
        } else {
            (2 * rep.1, rep.0)
        };
    }
    rep = (rep.0 * scale, rep.1 * scale);
    debug_assert_eq!(
        rep.0 as u128 * rep.0 as u128 + d as u128 * rep.1 as u128 * rep.1 as u128,
        r as u128
    );
    Some(rep)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue of the odd prime `p`.
fn sqrt_mod(a: u64, p: u64) -> u64 {
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("p is an odd prime");
    let (mut m, mut c, mut t, mut r) = (
        s,
        pow_mod(z, q, p),
        pow_mod(a, q, p),
        pow_mod(a, q.div_ceil(2), p),
    );
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

// x^2 + d y^2 = p for a prime p where -d is a quadratic residue.
fn cornacchia(d: u64, p: u64) -> Option<(u64, u64)> {
    let root = sqrt_mod(p - d % p, p);
    let bound = (p as u128).isqrt() as u64;
    for r0 in [root, p - root] {
        let (mut a, mut b) = (p, r0);
        while b > bound {
            (a, b) = (b, a % b);
        }
        let rest = p - b * b;
        if rest % d == 0 {
            if let Some(y) = exact_sqrt((rest / d) as u128) {
                return Some((b, y as u64));
            }
        }
    }
    None
}

/// `8 * sum of the divisors of n not divisible by 4`.
pub fn r4_formula(n: u64) -> u64 {
    assert!(n >= 1, "r4 is defined for positive n");
    let mut sum = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            let e = n / d;
            if d % 4 != 0 {
                sum += d;
            }
            if e != d && e % 4 != 0 {
                sum += e;
            }
        }
        d += 1;
    }
    8 * sum
}

/// Counts signed `(w, x, y, z)` with `w^2 + x^2 + y^2 + z^2 = n` by exhaustive search.
pub fn r4_bruteforce(n: u64) -> u64 {
    assert!(n >= 1, "r4 is defined for positive n");
    // Each nonnegative solution stands for 2^(number of nonzero entries) signed ones.
    let sign = |v: u64| if v == 0 { 1 } else { 2 };
    let mut count = 0;
    let mut w = 0;
    while w * w <= n {
        let mut x = 0;
        while w * w + x * x <= n {
            let mut y = 0;
            while w * w + x * x + y * y <= n {
                let rest = n - w * w - x * x - y * y;
                let mut z = 0;
                while z * z < rest {
                    z += 1;
                }
                if z * z == rest {
                    count += sign(w) * sign(x) * sign(y) * sign(z);
                }
                y += 1;
            }
            x += 1;
        }
        w += 1;
    }
    count
}
