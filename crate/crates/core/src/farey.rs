//! Farey-tessellation slope calculus: edge tests, the truncation slope `-c`,
//! the neighbour `-p''/q''` of `-p/q` closest to `-1`, and the shifted
//! Euclidean decompositions used when enumerating rotation numbers.

use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rational};
use crate::error::Error;
use crate::topology::LensSpace;

/// A dividing or knot slope: a reduced rational or the meridional `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Slope, Error> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::InvalidInput("0/0 is not a slope".into()));
            }
            return Ok(Slope::Infinity);
        }
        Rational::new(num, den).map(Slope::Finite)
    }

    /// Numerator and non-negative denominator; `Infinity` is `(1, 0)`.
    pub fn as_pair(&self) -> (Int, Int) {
        match self {
            Slope::Finite(r) => (r.num().clone(), r.den().clone()),
            Slope::Infinity => (Int::one(), Int::zero()),
        }
    }
}

impl From<Rational> for Slope {
    fn from(r: Rational) -> Self {
        Slope::Finite(r)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::Infinity => f.write_str("1/0"),
        }
    }
}

/// `|a d - b c| = 1` for `s1 = a/b`, `s2 = c/d`.
pub fn is_farey_edge(s1: &Slope, s2: &Slope) -> bool {
    let (a, b) = s1.as_pair();
    let (c, d) = s2.as_pair();
    (a * d - b * c).abs().is_one()
}

/// The landmarks of `(-p/q, 0)` that split the rotation-number cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFrame {
    /// `-c = ⌊-p/q⌋ + 1`.
    pub c: Int,
    pub p_pp: Int,
    pub q_pp: Int,
    /// `q p'' - p q''`; always `±1`.
    pub det: Int,
}

impl CaseFrame {
    pub fn new(lens: &LensSpace) -> Result<CaseFrame, Error> {
        let c = truncation_c(lens)?;
        let (p_pp, q_pp) = neighbor_pp(lens)?;
        let det = lens.q() * &p_pp - lens.p() * &q_pp;
        Ok(CaseFrame { c, p_pp, q_pp, det })
    }

    /// `-p''/q''`.
    pub fn neighbor_slope(&self) -> Rational {
        Rational::new(-&self.p_pp, self.q_pp.clone()).expect("q'' >= 1")
    }
}

fn require_lens(lens: &LensSpace) -> Result<(), Error> {
    if lens.is_s3_compat() {
        Err(Error::UnsupportedInCompat)
    } else {
        Ok(())
    }
}

/// `c > 0` with `-c = ⌊-p/q⌋ + 1`.
pub fn truncation_c(lens: &LensSpace) -> Result<Int, Error> {
    require_lens(lens)?;
    let floor = (-lens.p()).div_floor(lens.q());
    Ok(-(floor + 1u32))
}

/// The Farey neighbour `-p''/q''` of `-p/q` that is closest to `-1`.
///
/// Neighbours lying in `(-p/q, -1]` all satisfy `q p'' - p q'' = -1`; among
/// them the one with the smallest denominator is the farthest from `-p/q`.
/// So `q''` is the least positive residue of `p^{-1} (mod q)`.
pub fn neighbor_pp(lens: &LensSpace) -> Result<(Int, Int), Error> {
    require_lens(lens)?;
    let (p, q) = (lens.p(), lens.q());
    let q_pp = if q.is_one() {
        Int::one()
    } else {
        let inv = p.extended_gcd(q).x.mod_floor(q);
        if inv.is_zero() { q.clone() } else { inv }
    };
    let p_pp = (p * &q_pp - 1) / q;
    Ok((p_pp, q_pp))
}

/// `dividend = divisor * n + e` with `1 <= e <= divisor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: Int,
    pub e: Int,
}

impl Decomposition {
    /// `e = divisor`: the division was exact and `n` was shifted down by one.
    pub fn is_degenerate(&self, divisor: &Int) -> bool {
        &self.e == divisor
    }
}

pub fn euclid_decompose(dividend: &Int, divisor: &Int) -> Result<Decomposition, Error> {
    if !divisor.is_positive() {
        return Err(Error::InvalidInput(alloc::format!("divisor must be >= 1, got {divisor}")));
    }
    if !dividend.is_positive() {
        return Err(Error::InvalidInput(alloc::format!("dividend must be >= 1, got {dividend}")));
    }
    let (n, e) = (dividend - 1u32).div_rem(divisor);
    Ok(Decomposition { n, e: e + 1 })
}
