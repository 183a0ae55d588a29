//! Exact integer and rational arithmetic plus the combinatorial primitives
//! used throughout the crate.
//!
//! `Integer` and `Rational` are the `num` big-number types; rationals are
//! always kept in lowest terms with a positive denominator, so structural
//! equality is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Generalized binomial coefficient `m(m-1)...(m-r+1) / r!`.
///
/// Defined for every integer `m`; zero when `r < 0`.
pub fn binomial(m: i64, r: i64) -> Integer {
    if r < 0 {
        return Integer::zero();
    }
    // For 0 <= m < r one of the falling factors is zero.
    if m >= 0 && r > m {
        return Integer::zero();
    }
    let r = if m >= 0 && r > m - r { m - r } else { r };
    let mut acc = Integer::one();
    for i in 0..r {
        // acc holds m(m-1)...(m-i+1)/i!, an integer at every step.
        acc *= Integer::from(m - i);
        acc /= Integer::from(i + 1);
    }
    acc
}

/// Big-integer version of [`binomial`] for upper arguments outside `i64`.
pub fn binomial_big(m: &Integer, r: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 0..r {
        acc *= m - Integer::from(i);
        acc /= Integer::from(i + 1);
    }
    acc
}

pub fn factorial(j: u64) -> Integer {
    (1..=j).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// Rising factorial `(a)_j = a(a+1)...(a+j-1)`.
pub fn pochhammer(a: &Rational, j: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..j {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Rising factorial for an integer base.
pub fn pochhammer_int(a: i64, j: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 0..j as i64 {
        acc *= Integer::from(a + i);
    }
    acc
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn integer_rational(value: Integer) -> Rational {
    Rational::from_integer(value)
}
