//! Exact integer and rational arithmetic, plus the negative continued
//! fraction expansion used to count tight structures on solid tori.
//!
//! Every fractional quantity in the crate (slopes, `tb`, `rot`, `sl`) is a
//! [`Rational`]. There is no floating point anywhere.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision integer used for every count, coordinate and exponent.
pub type Int = BigInt;

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms with `den > 0`.
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Self, Error> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn num(&self) -> &Int {
        self.0.numer()
    }

    pub fn den(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<Int> {
        self.is_integer().then(|| self.num().clone())
    }

    /// `self / rhs`, or `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        (!rhs.is_zero()).then(|| Rational(&self.0 / &rhs.0))
    }

    /// `⌊self⌋`.
    pub fn floor(&self) -> Int {
        self.num().div_floor(self.den())
    }

    /// `self * k` for an integer `k`.
    pub fn scale(&self, k: &Int) -> Rational {
        Rational(&self.0 * BigRational::from_integer(k.clone()))
    }

    /// `self * k` when it is an integer.
    pub fn scaled_integer(&self, k: &Int) -> Option<Int> {
        let (q, rem) = k.div_rem(self.den());
        rem.is_zero().then(|| self.num() * q)
    }

    /// `self - other` when it is an integer. Both sides are reduced, so this
    /// needs equal denominators.
    pub fn integer_difference(&self, other: &Rational) -> Option<Int> {
        if self.den() != other.den() {
            return None;
        }
        let (q, rem) = (self.num() - other.num()).div_rem(self.den());
        rem.is_zero().then_some(q)
    }

    /// `self + k`; no reduction needed since `gcd(n + kd, d) = gcd(n, d)`.
    pub fn add_int(&self, k: &Int) -> Rational {
        Rational(BigRational::new_raw(self.num() + k * self.den(), self.den().clone()))
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Self {
        Rational::from_int(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Integers print bare (`-2`), everything else as `num/den`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d`; also tolerates a Unicode minus sign.
    fn from_str(s: &str) -> Result<Self, Error> {
        let cleaned: alloc::string::String = s.trim().replace('\u{2212}', "-");
        let parse = |t: &str| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| Error::Parse(alloc::format!("not a rational number: {s:?}")))
        };
        match cleaned.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_int(parse(&cleaned)?)),
        }
    }
}

/// Negative continued fraction `r0 - 1/(r1 - 1/(... - 1/rk))` with every
/// coefficient at most `-2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegContinuedFraction {
    coeffs: Vec<Int>,
}

impl NegContinuedFraction {
    /// Wraps a coefficient list, checking the `<= -2` normal form.
    pub fn from_coeffs(coeffs: Vec<Int>) -> Result<Self, Error> {
        let bound = Int::from(-2);
        if coeffs.is_empty() || coeffs.iter().any(|c| *c > bound) {
            return Err(Error::InvalidInput(
                "continued fraction coefficients must be nonempty and all <= -2".into(),
            ));
        }
        Ok(NegContinuedFraction { coeffs })
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }
}

/// Expands `-p/q` for coprime `p > q > 0`.
///
/// Each step takes `r = -ceil(p/q)` and continues with `(q, r*q + p)` negated,
/// i.e. `(q, ceil(p/q)*q - p)`, until the remainder vanishes.
pub fn neg_cf(p: impl Into<Int>, q: impl Into<Int>) -> Result<NegContinuedFraction, Error> {
    let (mut p, mut q) = (p.into(), q.into());
    if !(q.is_positive() && q < p) || !p.gcd(&q).is_one() {
        return Err(Error::InvalidInput(alloc::format!(
            "continued fraction of -p/q needs coprime p > q > 0, got p={p}, q={q}"
        )));
    }
    let mut coeffs = Vec::new();
    loop {
        let ceil = p.div_ceil(&q);
        let rem = &ceil * &q - &p;
        coeffs.push(-ceil);
        if rem.is_zero() {
            break;
        }
        p = core::mem::replace(&mut q, rem);
    }
    Ok(NegContinuedFraction { coeffs })
}

/// Evaluates the continued fraction from the innermost coefficient outward.
pub fn eval_cf(cf: &NegContinuedFraction) -> Rational {
    let mut coeffs = cf.coeffs.iter().rev();
    let last = coeffs.next().expect("continued fraction is nonempty");
    let mut acc = Rational::from_int(last.clone());
    for c in coeffs {
        // acc <= -2 < 0 throughout, so the reciprocal exists
        let recip = Rational::from_int(1).checked_div(&acc).expect("nonzero tail");
        acc = Rational::from_int(c.clone()) - recip;
    }
    acc
}
