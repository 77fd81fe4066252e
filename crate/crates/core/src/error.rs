use alloc::string::String;
use core::fmt;

use crate::arith::Int;
use crate::legendrian::SlopeCase;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroDenominator,
    /// Lens-space parameters rejected; the message names the violated condition.
    InvalidLensSpace(String),
    InvalidKnot { a: Int, b: Int },
    InvalidInput(String),
    Parse(String),
    /// The mirror universally tight structure does not exist when `q = p - 1`.
    StructureUnavailable { p: Int, q: Int },
    /// The `S^3` compatibility space only supports positive torus knots.
    UnsupportedInCompat,
    /// The rotation-number enumeration for this case has no admissible values.
    EmptyRotationRange { case: SlopeCase, n: Int, count: Int },
    /// More peaks than [`crate::legendrian::MAX_PEAKS`] would be produced.
    TooManyPeaks(Int),
    /// `r * tb` or `r * rot` is not an integer for a knot of order `r`.
    OffLattice,
    MismatchedLensSpace,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::InvalidLensSpace(msg) => f.write_str(msg),
            Error::InvalidKnot { a, b } => {
                write!(f, "gcd(a,b) must be 1 for a torus knot, got ({a}, {b})")
            }
            Error::InvalidInput(msg) | Error::Parse(msg) => f.write_str(msg),
            Error::StructureUnavailable { p, q } => write!(
                f,
                "L({p},{q}) carries a single universally tight structure; only the plus sign exists"
            ),
            Error::UnsupportedInCompat => {
                f.write_str("the (1,0) compatibility space supports only knots with a, b >= 0")
            }
            Error::EmptyRotationRange { case, n, count } => write!(
                f,
                "degenerate decomposition in case {case:?}: n = {n} leaves {count} admissible f-values; \
                 the rotation range is empty (try the closed-form mode)"
            ),
            Error::TooManyPeaks(n) => write!(f, "refusing to enumerate {n} peak rotation numbers"),
            Error::OffLattice => f.write_str("r*tb and r*rot must be integers"),
            Error::MismatchedLensSpace => f.write_str("classes live in different contact manifolds"),
        }
    }
}

impl core::error::Error for Error {}
