//! Exact arithmetic: rationals, polynomials, rational functions, series and
//! matrices over the rational function field.

mod fmatrix;
mod gcd;
mod mpoly;
mod parse;
mod ratfun;
mod series;

pub use fmatrix::{det_bareiss, FMatrix};
pub use gcd::{cyclotomic_coeffs, gcd, gcd_many};
pub use mpoly::{MPoly, Monomial, UV};
pub use parse::{parse_mpoly, parse_ratfun};
pub use ratfun::{factor_binomials, BinomialFactorization, RatFun};
pub use series::{series_expand, SeriesBox};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = num_rational::BigRational;

/// Small helpers for building and printing [`BigRat`] values.
pub mod rat {
    use super::BigRat;
    use num_bigint::BigInt;
    use num_traits::{One, Signed, ToPrimitive};

    pub fn int(n: i64) -> BigRat {
        BigRat::from_integer(BigInt::from(n))
    }

    pub fn frac(n: i64, d: i64) -> BigRat {
        BigRat::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn pow(x: &BigRat, e: u32) -> BigRat {
        let mut acc = BigRat::one();
        for _ in 0..e {
            acc *= x;
        }
        acc
    }

    pub fn fmt(x: &BigRat) -> String {
        if x.is_integer() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(x: &BigRat) -> Option<i64> {
        if x.is_integer() {
            x.numer().to_i64()
        } else {
            None
        }
    }

    pub fn is_nonneg_integer(x: &BigRat) -> bool {
        x.is_integer() && !x.is_negative()
    }
}
