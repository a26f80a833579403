use num_traits::One;

use crate::error::{invalid, Result};
use crate::exact::{rat, rational_pow, Poly, Rational};
use crate::local_field::LocalQuadData;

fn q_rat(q: u32) -> Rational {
    rat(q as i64, 1)
}

fn base(local: &LocalQuadData, exponent: u32) -> Rational {
    let q = local.q();
    let qi = num_bigint::BigInt::from(q);
    let denom = (&qi + 1) * (qi.pow(4) - 1);
    local.symbol().local_density(q) * Rational::new(qi.pow(exponent), denom)
}

/// `V₁^{l,m} = (1 − symbol/q) q^(4m+3l+1) / ((q+1)(q⁴−1))`.
pub fn volume_v1(local: &LocalQuadData, l: u32, m: u32) -> Rational {
    base(local, 4 * m + 3 * l + 1)
}

/// `V₂^{l,m}`, the same with exponent `4m+3l+2`; only for `m > 0`.
pub fn volume_v2(local: &LocalQuadData, l: u32, m: u32) -> Result<Rational> {
    if m == 0 {
        return Err(invalid("V2 needs m > 0"));
    }
    Ok(base(local, 4 * m + 3 * l + 2))
}

/// `vol K^#(p) = 1/((q²−1)(q⁴−1))`.
pub fn vol_k_sharp(q: u32) -> Rational {
    let qq = q_rat(q);
    ((rational_pow(&qq, 2) - Rational::one()) * (rational_pow(&qq, 4) - Rational::one())).recip()
}

/// `(q−1)²(1+2q+2q²+2q³+q⁴) − (q²−1)(q⁴−1)` as a polynomial in `q` with rational coefficients.
///
/// The coefficient field tag is irrelevant since every coefficient is rational.
pub fn count_identity_defect() -> Poly {
    let p = |c: &[i64]| Poly::from_rationals(2, &c.iter().map(|&n| rat(n, 1)).collect::<Vec<_>>());
    let qm1 = p(&[-1, 1]);
    let lhs = &(&qm1 * &qm1) * &p(&[1, 2, 2, 2, 1]);
    let rhs = &p(&[-1, 0, 1]) * &p(&[-1, 0, 0, 0, 1]);
    &lhs - &rhs
}
