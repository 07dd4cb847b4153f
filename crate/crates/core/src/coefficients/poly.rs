//! Dense univariate polynomials over a scalar field, coefficients low to
//! high. A polynomial is canonical when it has no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Scalars {
    type S: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::S;
    fn one(&self) -> Self::S;
    fn is_zero(&self, a: &Self::S) -> bool;
    fn add(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn sub(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn mul(&self, a: &Self::S, b: &Self::S) -> Self::S;
    /// Inverse of a nonzero scalar.
    fn inv(&self, a: &Self::S) -> Self::S;
    fn from_bigint(&self, n: &BigInt) -> Self::S;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Rationals;

impl Scalars for Rationals {
    type S = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
}

/// Prime field `F_p`; `p` fits in 32 bits so products fit in `u64`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField(pub u64);

impl Scalars for PrimeField {
    type S = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        pow_mod(*a, self.0 - 2, self.0)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.0)).to_u64().unwrap()
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn trim<F: Scalars>(f: &F, mut a: Vec<F::S>) -> Vec<F::S> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

pub(crate) fn add<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub(crate) fn sub<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub(crate) fn mul<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub(crate) fn scale<F: Scalars>(f: &F, a: &[F::S], s: &F::S) -> Vec<F::S> {
    trim(f, a.iter().map(|c| f.mul(c, s)).collect())
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> (Vec<F::S>, Vec<F::S>) {
    let lead_inv = f.inv(b.last().expect("division by the zero polynomial"));
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), trim(f, r));
    }
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if f.is_zero(top) {
            continue;
        }
        let c = f.mul(top, &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = f.sub(&r[k + j], &f.mul(&c, bj));
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    (trim(f, q), trim(f, r))
}

pub(crate) fn rem<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    divrem(f, a, b).1
}

pub(crate) fn monic<F: Scalars>(f: &F, a: &[F::S]) -> Vec<F::S> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(f, a, &f.inv(lead)),
    }
}

pub(crate) fn gcd<F: Scalars>(f: &F, a: &[F::S], b: &[F::S]) -> Vec<F::S> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    monic(f, &x)
}

/// Inverse of `a` modulo `m`, or `None` if they are not coprime.
pub(crate) fn inv_mod<F: Scalars>(f: &F, a: &[F::S], m: &[F::S]) -> Option<Vec<F::S>> {
    // Invariant: s_i * a = r_i (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = rem(f, a, m);
    let mut s0: Vec<F::S> = Vec::new();
    let mut s1 = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(&r0[0]);
    Some(rem(f, &scale(f, &s0, &c), m))
}

pub(crate) fn mul_mod<F: Scalars>(f: &F, a: &[F::S], b: &[F::S], m: &[F::S]) -> Vec<F::S> {
    rem(f, &mul(f, a, b), m)
}

/// `a^e mod m` with the exponent given as a big integer.
pub(crate) fn pow_mod_poly<F: Scalars>(f: &F, a: &[F::S], e: &BigInt, m: &[F::S]) -> Vec<F::S> {
    assert!(!e.is_negative());
    let mut acc = rem(f, &[f.one()], m);
    let base = rem(f, a, m);
    for bit in (0..e.bits()).rev() {
        acc = mul_mod(f, &acc, &acc, m);
        if e.bit(bit) {
            acc = mul_mod(f, &acc, &base, m);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_polynomial_over_f5() {
        let f = PrimeField(5);
        // v^2 + 2 is irreducible over F_5
        let m = vec![2, 0, 1];
        let a = vec![3, 4];
        let inv = inv_mod(&f, &a, &m).unwrap();
        assert_eq!(mul_mod(&f, &a, &inv, &m), vec![1]);
    }

    #[test]
    fn gcd_over_rationals() {
        let q = Rationals;
        let r = |n: i64| BigRational::from_integer(n.into());
        // (v-1)(v+2) and (v-1)(v-3)
        let a = vec![r(-2), r(1), r(1)];
        let b = vec![r(3), r(-4), r(1)];
        assert_eq!(gcd(&q, &a, &b), vec![r(-1), r(1)]);
    }

    #[test]
    fn divrem_reconstructs() {
        let f = PrimeField(7);
        let a = vec![1, 2, 3, 4, 5, 6];
        let b = vec![3, 0, 2];
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
        assert!(r.len() < b.len());
    }
}
