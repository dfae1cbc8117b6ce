use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Exact rational number: arbitrary-precision, always in lowest terms with a
/// positive denominator (`num_rational` maintains both invariants).
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Exact binomial coefficient; 0 for k < 0 or k > n (n >= 0).
/// For n < 0 uses the standard extension binom(n,k) = (-1)^k binom(k-n-1, k).
pub fn binomial_exact(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    } else {
        let b = binomial_exact(k - n - 1, k);
        if k % 2 == 0 {
            b
        } else {
            -b
        }
    }
}

pub fn factorial_exact(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Prime factorization of a positive integer by trial division. The integers
/// seen here are coefficient denominators, which stay small.
pub fn prime_factors(n: &BigUint) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut n = n.clone();
    let one = BigUint::one();
    if n <= one {
        return out;
    }
    let mut p = 2u64;
    while &BigUint::from(p) * BigUint::from(p) <= n {
        while (&n % BigUint::from(p)).is_zero() {
            out.insert(p);
            n /= BigUint::from(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > one {
        // remaining factor is prime; it fits in u64 for every input we produce
        out.insert(n.to_u64().expect("denominator prime exceeds u64"));
    }
    out
}

/// Primes dividing the denominator of a single rational.
pub fn denominator_primes_of(value: &Rational) -> BTreeSet<u64> {
    prime_factors(&value.denom().abs().to_biguint().expect("positive denom"))
}
