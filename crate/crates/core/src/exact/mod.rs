//! Exact arithmetic: rationals, ℚ(√q), dense polynomials, rational functions
//! and truncated power series in one formal variable `t`.

mod poly;
mod quad;
mod ratfunc;
mod series;

pub use poly::Poly;
pub use quad::{fmt_rational, quad_arith, QuadCoeff, QuadOp};
pub use ratfunc::RationalFunction;
pub use series::{series_of, TruncatedSeries};

pub(crate) use quad::{is_prime, rational_pow, rational_to_f64};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics when `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    }
}
