//! Exact scalars: arbitrary-precision rationals, half-integers stored as
//! doubled integers, multi-indices, and the reciprocal-factorial convention
//! that truncates gamma-series to finite sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::Error;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Format as `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` with q > 0 after normalization.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `1/n!` for n >= 0 and exactly zero for negative n.
///
/// The zero convention for negative integer arguments is what makes every
/// gamma-series in this crate a finite sum.
pub fn reciprocal_factorial(n: i64) -> Rat {
    if n < 0 {
        Rat::zero()
    } else {
        Rat::new(BigInt::one(), factorial(n as u64))
    }
}

/// Half-integer stored as its doubled value, so diagram arithmetic stays exact.
///
/// Diagram entries are all integers or all half-odd-integers, never mixed;
/// parity is queryable via [`HalfInt::is_integer`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_int(n: i64) -> Self {
        HalfInt {
            twice: n.checked_mul(2).expect("half-integer overflow"),
        }
    }

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, or an error when this is a half-odd integer.
    pub fn as_int(self) -> Result<i64, Error> {
        if self.is_integer() {
            Ok(self.twice / 2)
        } else {
            Err(Error::Parse(format!("{self} is not an integer")))
        }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(BigInt::from(self.twice), BigInt::from(2))
    }

    /// Parse `n` or `p/2`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(Error::Parse(format!("half-integer {s:?} must have denominator 2")));
            }
            let n: i64 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad half-integer {s:?}")))?;
            if n % 2 == 0 {
                return Err(Error::Parse(format!("{s:?} is not in lowest terms")));
            }
            Ok(HalfInt::from_twice(n))
        } else {
            let n: i64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad half-integer {s:?}")))?;
            Ok(HalfInt::from_int(n))
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

/// A fixed-length integer exponent/shift vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<i64>);

impl MultiIndex {
    pub fn zeros(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn dot(&self, other: &MultiIndex) -> i64 {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, other: &[Rat]) -> Rat {
        assert_eq!(self.len(), other.len());
        let mut acc = Rat::zero();
        for (a, b) in self.0.iter().zip(other) {
            acc += b * rat_int(*a);
        }
        acc
    }

    pub fn scaled(&self, c: i64) -> MultiIndex {
        MultiIndex(self.0.iter().map(|x| x * c).collect())
    }

    /// Positive and negative parts, `self = plus - minus` componentwise.
    pub fn split_signs(&self) -> (MultiIndex, MultiIndex) {
        let plus = MultiIndex(self.0.iter().map(|&x| x.max(0)).collect());
        let minus = MultiIndex(self.0.iter().map(|&x| (-x).max(0)).collect());
        (plus, minus)
    }

    /// `1/v!` with the negative-component zero convention, over all components.
    pub fn reciprocal_factorial(&self) -> Rat {
        let mut acc = Rat::one();
        for &x in &self.0 {
            if x < 0 {
                return Rat::zero();
            }
            acc /= Rat::from_integer(factorial(x as u64));
        }
        acc
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), rhs.len());
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiIndex {
    type Output = MultiIndex;
    fn sub(self, rhs: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), rhs.len());
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&MultiIndex> for MultiIndex {
    fn add_assign(&mut self, rhs: &MultiIndex) {
        assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Mul<i64> for &MultiIndex {
    type Output = MultiIndex;
    fn mul(self, c: i64) -> MultiIndex {
        self.scaled(c)
    }
}
