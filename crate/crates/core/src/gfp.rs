//! Arithmetic in the prime field GF(p).
//!
//! [`Prime`] carries the modulus and exposes raw residue arithmetic on `u32`
//! for the hot loops of the echelon engine. [`FieldElement`] is the checked,
//! self-describing value type used at API boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported characteristic. Products of two residues fit in `u64`.
pub const MAX_PRIME: u64 = 1 << 16;

/// Rows of Pascal's triangle are built directly up to this `n`; larger
/// arguments go through Lucas' digit decomposition.
const PASCAL_LIMIT: u64 = 512;

/// A prime modulus `2 <= p <= 2^16`, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) {
            return if p < 2 {
                Err(Error::NotPrime(p))
            } else {
                Err(Error::PrimeOutOfRange(p))
            };
        }
        let mut q = 2;
        while q * q <= p {
            if p.is_multiple_of(q) {
                return Err(Error::NotPrime(p));
            }
            q += 1;
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, n: i64) -> u32 {
        n.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn reduce_u64(self, n: u64) -> u32 {
        (n % self.0 as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.0) {
            return Err(Error::DivisionByZero(self.0));
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }

    pub fn element(self, n: i64) -> FieldElement {
        FieldElement {
            residue: self.reduce(n),
            prime: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// `n! mod p`; zero as soon as `n >= p`.
    pub fn factorial_mod(self, n: u64) -> FieldElement {
        if n >= self.0 as u64 {
            return self.zero();
        }
        let r = (2..=n).fold(1 % self.0, |acc, k| self.mul(acc, k as u32));
        FieldElement {
            residue: r,
            prime: self,
        }
    }

    /// `C(n, k) mod p` (zero when `k > n`).
    pub fn binomial_mod(self, n: u64, k: u64) -> FieldElement {
        FieldElement {
            residue: self.binomial_residue(n, k),
            prime: self,
        }
    }

    fn binomial_residue(self, n: u64, k: u64) -> u32 {
        if k > n {
            return 0;
        }
        if n <= PASCAL_LIMIT {
            return self.pascal_row(n as usize)[k as usize];
        }
        // Lucas: C(n, k) = prod C(n_i, k_i) over base-p digits.
        let p = self.0 as u64;
        let (mut n, mut k) = (n, k);
        let mut acc = 1 % self.0;
        while n > 0 || k > 0 {
            let (ni, ki) = (n % p, k % p);
            if ki > ni {
                return 0;
            }
            acc = self.mul(acc, self.small_binomial(ni, ki));
            n /= p;
            k /= p;
        }
        acc
    }

    /// Binomial with `k <= n < p`, where no factorial vanishes.
    fn small_binomial(self, n: u64, k: u64) -> u32 {
        if n <= PASCAL_LIMIT {
            return self.pascal_row(n as usize)[k as usize];
        }
        let num = self.factorial_mod(n).residue;
        let den = self.mul(
            self.factorial_mod(k).residue,
            self.factorial_mod(n - k).residue,
        );
        self.mul(num, self.inv(den).expect("k!(n-k)! is a unit for n < p"))
    }

    /// Row `n` of Pascal's triangle reduced mod p.
    pub fn pascal_row(self, n: usize) -> Vec<u32> {
        let mut row = vec![0u32; n + 1];
        row[0] = 1 % self.0;
        for i in 1..=n {
            for j in (1..=i).rev() {
                row[j] = self.add(row[j], row[j - 1]);
            }
        }
        row
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

/// An element of GF(p). The residue is always fully reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    residue: u32,
    prime: Prime,
}

impl FieldElement {
    pub fn new(residue: i64, prime: Prime) -> Self {
        prime.element(residue)
    }

    #[inline]
    pub fn residue(self) -> u32 {
        self.residue
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn same_prime(self, other: FieldElement) -> Result<Prime> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch {
                left: self.prime.0,
                right: other.prime.0,
            });
        }
        Ok(self.prime)
    }

    pub fn try_add(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.same_prime(other)?;
        Ok(FieldElement {
            residue: p.add(self.residue, other.residue),
            prime: p,
        })
    }

    pub fn try_sub(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.same_prime(other)?;
        Ok(FieldElement {
            residue: p.sub(self.residue, other.residue),
            prime: p,
        })
    }

    pub fn try_mul(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.same_prime(other)?;
        Ok(FieldElement {
            residue: p.mul(self.residue, other.residue),
            prime: p,
        })
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement {
            residue: self.prime.inv(self.residue)?,
            prime: self.prime,
        })
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        FieldElement {
            residue: self.prime.pow(self.residue, exp),
            prime: self.prime,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

// Operator forms panic on mismatched primes; use the `try_*` methods when the
// operands come from different sources.
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        self.try_add(rhs).expect("prime mismatch")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("prime mismatch")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("prime mismatch")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement {
            residue: self.prime.neg(self.residue),
            prime: self.prime,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: i64, p: u64) -> FieldElement {
        Prime::new(p).unwrap().element(n)
    }

    const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

    #[test]
    fn rejects_composites_and_range() {
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(65537), Err(Error::PrimeOutOfRange(65537)));
        assert!(Prime::new(65521).is_ok());
    }

    #[test]
    fn add_examples() {
        assert_eq!((el(2, 3) + el(2, 3)).residue(), 1);
        assert_eq!((el(0, 5) + el(4, 5)).residue(), 4);
        assert_eq!((el(1, 2) + el(1, 2)).residue(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!((el(2, 5) * el(3, 5)).residue(), 1);
        assert_eq!((el(2, 3) * el(2, 3)).residue(), 1);
        assert_eq!((el(0, 7) * el(6, 7)).residue(), 0);
    }

    #[test]
    fn mismatched_primes() {
        let err = el(1, 3).try_add(el(1, 5)).unwrap_err();
        assert_eq!(err, Error::PrimeMismatch { left: 3, right: 5 });
        assert!(el(1, 3).try_mul(el(1, 5)).is_err());
    }

    #[test]
    fn inv_examples() {
        assert_eq!(el(2, 3).inv().unwrap().residue(), 2);
        assert_eq!(el(3, 5).inv().unwrap().residue(), 2);
        assert_eq!(el(1, 7).inv().unwrap().residue(), 1);
        assert_eq!(el(0, 7).inv(), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn factorial_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(p5.factorial_mod(4).residue(), 4);
        assert_eq!(Prime::new(3).unwrap().factorial_mod(3).residue(), 0);
        assert_eq!(Prime::new(7).unwrap().factorial_mod(0).residue(), 1);
    }

    #[test]
    fn binomial_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(p5.binomial_mod(4, 2).residue(), 1);
        assert_eq!(Prime::new(3).unwrap().binomial_mod(2, 1).residue(), 2);
        assert_eq!(p5.binomial_mod(5, 2).residue(), 0);
        assert_eq!(p5.binomial_mod(2, 5).residue(), 0);
    }

    #[test]
    fn wilson_and_sign_pattern() {
        for &p in &SMALL_PRIMES {
            let prime = Prime::new(p).unwrap();
            assert_eq!(prime.factorial_mod(p - 1).residue() as u64, p - 1);
            for i in 0..p {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                assert_eq!(prime.binomial_mod(p - 1, i), prime.element(sign), "p={p} i={i}");
            }
        }
    }

    #[test]
    fn lucas_matches_pascal() {
        let p = Prime::new(7).unwrap();
        let row = p.pascal_row(1000);
        for k in [0u64, 1, 7, 49, 343, 500, 999, 1000] {
            assert_eq!(p.binomial_mod(1000, k).residue(), row[k as usize]);
        }
        // n >= p beyond the Pascal limit with a large prime
        let q = Prime::new(65521).unwrap();
        let exact: u64 = (600u64 * 599 * 598) / 6;
        assert_eq!(q.binomial_mod(600, 3).residue() as u64, exact % 65521);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u64, 3, 5, 7] {
            let prime = Prime::new(p).unwrap();
            let all: Vec<FieldElement> = (0..p as i64).map(|n| prime.element(n)).collect();
            for &a in &all {
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), prime.one());
                }
                for &b in &all {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for &c in &all {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }
}
