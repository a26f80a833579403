//! Spherical Bessel values `B(h(l,0))` from Sugano's generating function
//! `Σ B(h(l,0)) y^l = H(y)/Q(y)`.

use crate::error::Result;
use crate::exact::{series_of, Poly, QuadCoeff, RationalFunction, TruncatedSeries};
use crate::local_field::{LocalQuadData, SplittingSymbol};
use crate::satake::{check_compatible, SatakeParams};

/// Numerator `H`, denominator `Q` and the constants `A₂, A₄, A₅`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuganoPolys {
    pub h: Poly,
    pub q_poly: Poly,
    pub a2: QuadCoeff,
    pub a4: QuadCoeff,
    pub a5: QuadCoeff,
}

pub fn sugano_polys(local: &LocalQuadData, sat: &SatakeParams) -> Result<SuganoPolys> {
    check_compatible(local, sat)?;
    Ok(sugano_polys_unchecked(local, sat))
}

pub(crate) fn sugano_polys_unchecked(local: &LocalQuadData, sat: &SatakeParams) -> SuganoPolys {
    let q = local.q();
    let q_m2 = QuadCoeff::q_half_pow(q, -4);
    let lam = |r: Option<&crate::exact::Rational>| QuadCoeff::from_rational(r.cloned().expect("Λ value"), q);
    let a2 = q_m2.scale(local.lambda_pi_f());
    let (a4, a5) = match local.symbol() {
        SplittingSymbol::Inert => (q_m2.clone(), QuadCoeff::zero(q)),
        SplittingSymbol::Ramified => (QuadCoeff::zero(q), &q_m2 * &lam(local.lambda_pi_l())),
        SplittingSymbol::Split => (
            -&q_m2,
            &q_m2 * &(&lam(local.lambda_pi_l()) + &lam(local.lambda_pi_f_over_pi_l())),
        ),
    };
    let h = Poly::new(q, vec![QuadCoeff::one(q), -a5.clone(), -(&a2 * &a4)]);
    let q32 = QuadCoeff::q_half_pow(q, -3);
    let q_poly = sat
        .gamma()
        .iter()
        .map(|g| Poly::one_minus(q32.scale(g)))
        .product();
    SuganoPolys { h, q_poly, a2, a4, a5 }
}

/// `B(h(0,0)), …, B(h(n,0))`.
pub fn bessel_values(sp: &SuganoPolys, n: usize) -> Result<TruncatedSeries> {
    series_of(&RationalFunction::new(sp.h.clone(), sp.q_poly.clone())?, n)
}
