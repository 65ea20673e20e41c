//! Coefficient rings: the prime field F_p and the integers.

use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Exact coefficient arithmetic. Ring elements carry no context, so the ring
/// value itself is passed to every operation.
pub trait CoeffRing: Clone + PartialEq + Eq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for Z.
    fn characteristic(&self) -> u64;
    /// Representative in the symmetric range for F_p, the value itself for Z.
    fn to_bigint(&self, a: &Self::Elem) -> BigInt;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// F_p for an odd prime p below 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !is_odd_prime(p) || p >= (1 << 31) {
            return Err(AlgebraError::NotAnOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(&a, self.p - 2))
        }
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn signed(&self, a: u64) -> i64 {
        let a = (a % self.p) as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }
}

impl CoeffRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a % self.p == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn to_bigint(&self, a: &u64) -> BigInt {
        BigInt::from(self.signed(*a))
    }
}

/// Arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn to_bigint(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest power of `p` dividing `m` (`m > 0`).
pub fn p_primary_part(p: u64, m: u64) -> u64 {
    let mut q = 1;
    let mut r = m;
    while r > 0 && r % p == 0 {
        q *= p;
        r /= p;
    }
    q
}

/// Base-p digits, least significant first.
pub fn base_p_digits(p: u64, mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m > 0 {
        out.push(m % p);
        m /= p;
    }
    out
}

/// C(n, k) mod p by Lucas' theorem.
pub fn binomial_mod_p(field: &PrimeField, n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let p = field.p();
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = field.mul(&acc, &small_binomial_mod(field, nd, kd));
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial_mod(field: &PrimeField, n: u64, k: u64) -> u64 {
    // n < p, so every factor in the denominator is invertible
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = field.mul(&num, &((n - i) % field.p()));
        den = field.mul(&den, &((i + 1) % field.p()));
    }
    field.mul(&num, &field.inv(den).expect("k < p"))
}

/// Exact C(n, k) as a big integer.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Multinomial coefficient m! / (parts! * (m - sum parts)!) mod p, as a product
/// of Lucas binomials.
pub fn multinomial_mod_p(field: &PrimeField, m: u64, parts: &[u64]) -> u64 {
    let mut remaining = m;
    let mut acc = 1u64;
    for &e in parts {
        if e > remaining {
            return 0;
        }
        acc = field.mul(&acc, &binomial_mod_p(field, remaining, e));
        remaining -= e;
    }
    acc
}
