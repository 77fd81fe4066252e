//! Counts of tight contact structures: on a solid torus with two dividing
//! curves of slope `-p/q`, and the universally tight ones on `L(p,q)`.

use num_traits::{One, Signed};

use crate::arith::{neg_cf, Int};
use crate::error::Error;
use crate::topology::LensSpace;

/// `|(r_0 + 1) ... (r_{k-1} + 1) r_k|` over `-p/q = [r_0, ..., r_k]`.
pub fn count_tight_solid_torus(p: impl Into<Int>, q: impl Into<Int>) -> Result<Int, Error> {
    let cf = neg_cf(p.into(), q.into())?;
    let (last, init) = cf.coeffs().split_last().expect("continued fractions are nonempty");
    let prod = init.iter().fold(Int::one(), |acc, r| acc * (r + 1));
    Ok((prod * last).abs())
}

pub fn count_ut_lens(lens: &LensSpace) -> u8 {
    if lens.is_q_p_minus_one() { 1 } else { 2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Same product, with the continued fraction expanded on machine integers.
    fn oracle(mut p: i64, mut q: i64) -> i64 {
        let mut coeffs = std::vec::Vec::new();
        while q != 0 {
            let r = (p + q - 1) / q;
            coeffs.push(-r);
            (p, q) = (q, r * q - p);
        }
        let n = coeffs.len();
        coeffs.iter().enumerate().map(|(i, &r)| if i + 1 == n { r } else { r + 1 }).product::<i64>().abs()
    }

    #[test]
    fn examples() {
        assert_eq!(count_tight_solid_torus(5, 2).unwrap(), Int::from(4));
        assert_eq!(count_tight_solid_torus(2, 1).unwrap(), Int::from(2));
        assert_eq!(count_tight_solid_torus(3, 2).unwrap(), Int::from(2));
        assert!(count_tight_solid_torus(4, 2).is_err());
    }

    #[test]
    fn ut_examples() {
        assert_eq!(count_ut_lens(&LensSpace::new(5, 2).unwrap()), 2);
        assert_eq!(count_ut_lens(&LensSpace::new(3, 2).unwrap()), 1);
        assert_eq!(count_ut_lens(&LensSpace::new(2, 1).unwrap()), 1);
    }

    #[test]
    fn agrees_with_oracle() {
        for p in 2..=50i64 {
            assert_eq!(count_tight_solid_torus(p, 1).unwrap(), Int::from(p));
            for q in 1..p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let got = count_tight_solid_torus(p, q).unwrap();
                assert!(got >= Int::one());
                assert_eq!(got, Int::from(oracle(p, q)), "({p},{q})");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn product_is_order_independent(p in 2i64..5000, q in 1i64..5000) {
                prop_assume!(q < p && num_integer::gcd(p, q) == 1);
                let cf = neg_cf(p, q).unwrap();
                let (last, init) = cf.coeffs().split_last().unwrap();
                let rev = init.iter().rev().fold(last.clone(), |acc, r| acc * (r + 1));
                prop_assert_eq!(rev.abs(), count_tight_solid_torus(p, q).unwrap());
            }
        }
    }
}
