//! Small structure builders shared by the unit tests.

use crate::near_ring::{validate_near_ring, FiniteNearRing};

pub(crate) fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let add = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    (add, mul)
}

pub(crate) fn zn(n: usize) -> FiniteNearRing {
    let (add, mul) = zn_tables(n);
    validate_near_ring(n, add, mul).expect("Z_n is a near-ring")
}

/// M(Z2): the four self-maps of Z2 under pointwise addition and composition.
/// Element index encodes the value table: `f(0)*2 + f(1)`, so 0 is the zero
/// map, 1 the identity, 2 the shift x -> x+1, 3 the constant 1.
pub(crate) fn mz2_tables() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let val = |f: usize, x: usize| if x == 0 { f >> 1 } else { f & 1 };
    let enc = |v0: usize, v1: usize| v0 * 2 + v1;
    let add = (0..4)
        .map(|f| {
            (0..4)
                .map(|g| enc((val(f, 0) + val(g, 0)) % 2, (val(f, 1) + val(g, 1)) % 2))
                .collect()
        })
        .collect();
    let mul = (0..4)
        .map(|f| {
            (0..4)
                .map(|g| enc(val(f, val(g, 0)), val(f, val(g, 1))))
                .collect()
        })
        .collect();
    (add, mul)
}

pub(crate) fn mz2() -> FiniteNearRing {
    let (add, mul) = mz2_tables();
    validate_near_ring(4, add, mul).expect("M(Z2) is a near-ring")
}

/// Z[i]/(n) with element index `a*n + b` for the residue a + bi.
pub(crate) fn gauss_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let order = n * n;
    let enc = |a: i64, b: i64| {
        let m = n as i64;
        (a.rem_euclid(m) * m + b.rem_euclid(m)) as usize
    };
    let parts = |x: usize| ((x / n) as i64, (x % n) as i64);
    let add = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let ((a, b), (c, d)) = (parts(x), parts(y));
                    enc(a + c, b + d)
                })
                .collect()
        })
        .collect();
    let mul = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let ((a, b), (c, d)) = (parts(x), parts(y));
                    enc(a * c - b * d, a * d + b * c)
                })
                .collect()
        })
        .collect();
    (add, mul)
}

pub(crate) fn gauss(n: usize) -> FiniteNearRing {
    let (add, mul) = gauss_tables(n);
    validate_near_ring(n * n, add, mul).expect("Z[i]/(n) is a near-ring")
}
