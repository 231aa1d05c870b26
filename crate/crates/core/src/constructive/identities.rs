//! Two polynomial identities behind the weighted splittings, evaluated exactly.

use num_bigint::BigInt;

/// Both sides of
/// `(a+b)(c+d)(w^2 + ab x^2 + cd y^2 + abcd z^2)
///   = ac(w+bx+dy+bdz)^2 + ad(w+bx-cy-bcz)^2 + bc(w-ax+dy-adz)^2 + bd(w-ax-cy+acz)^2`.
pub fn general_identity_sides(coef: [i64; 4], vars: [i64; 4]) -> (BigInt, BigInt) {
    let [a, b, c, d] = coef.map(BigInt::from);
    let [w, x, y, z] = vars.map(BigInt::from);
    let sq = |v: BigInt| &v * &v;

    let lhs = (&a + &b)
        * (&c + &d)
        * (sq(w.clone())
            + &a * &b * sq(x.clone())
            + &c * &d * sq(y.clone())
            + &a * &b * &c * &d * sq(z.clone()));
    let rhs = &a * &c * sq(&w + &b * &x + &d * &y + &b * &d * &z)
        + &a * &d * sq(&w + &b * &x - &c * &y - &b * &c * &z)
        + &b * &c * sq(&w - &a * &x + &d * &y - &a * &d * &z)
        + &b * &d * sq(&w - &a * &x - &c * &y + &a * &c * &z);
    (lhs, rhs)
}

#[allow(clippy::too_many_arguments)]
pub fn identity_general(a: i64, b: i64, c: i64, d: i64, w: i64, x: i64, y: i64, z: i64) -> bool {
    let (lhs, rhs) = general_identity_sides([a, b, c, d], [w, x, y, z]);
    lhs == rhs
}

/// Both sides of
/// `(3b+4)(w^2 + 2x^2 + (b+1)y^2 + 2b z^2)
///   = (w+2x+(b+1)y+2bz)^2 + 2(w-(b+1)y+bz)^2 + (b+1)(w-2x+y)^2 + 2b(w+x-2z)^2`.
pub fn identity_3b4_sides(b: i64, vars: [i64; 4]) -> (BigInt, BigInt) {
    let b = BigInt::from(b);
    let [w, x, y, z] = vars.map(BigInt::from);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let b1 = &b + &one;
    let sq = |v: BigInt| &v * &v;

    let lhs = (BigInt::from(3) * &b + BigInt::from(4))
        * (sq(w.clone()) + &two * sq(x.clone()) + &b1 * sq(y.clone()) + &two * &b * sq(z.clone()));
    let rhs = sq(&w + &two * &x + &b1 * &y + &two * &b * &z)
        + &two * sq(&w - &b1 * &y + &b * &z)
        + &b1 * sq(&w - &two * &x + &y)
        + &two * &b * sq(&w + &x - &two * &z);
    (lhs, rhs)
}

pub fn identity_3b4(b: i64, w: i64, x: i64, y: i64, z: i64) -> bool {
    let (lhs, rhs) = identity_3b4_sides(b, [w, x, y, z]);
    lhs == rhs
}
