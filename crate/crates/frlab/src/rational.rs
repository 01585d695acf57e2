//! Exact rational arithmetic for variance and bound computations.
//!
//! Popularity means are half-integers and variances quarter-integers, so
//! everything that feeds an exact assertion is kept in `BigRational`; floats
//! appear only in the Zipf-weighted evaluations.

use num::BigInt;

pub type Rational = num::BigRational;

/// `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `3`, `27/4`, ... without a float detour.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_integers_and_fractions() {
        assert_eq!(render(&int(3)), "3");
        assert_eq!(render(&ratio(27, 4)), "27/4");
        assert_eq!(render(&ratio(-6, 4)), "-3/2");
    }
}
