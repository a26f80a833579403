//! Direct coset sum against the closed form for one split scenario at q = 3.

use gsp4_zeta::exact::{rat, series_of};
use gsp4_zeta::local_field::LocalQuadData;
use gsp4_zeta::local_integral::{check_local_identity, z_closed_form, z_closed_form_factored, z_series_direct, ScenarioData};
use gsp4_zeta::satake::{SatakeParams, SteinbergData};

fn main() -> gsp4_zeta::Result<()> {
    let sat = SatakeParams::new(rat(1, 2), rat(3, 1), rat(-2, 5))?;
    let omega_pi = sat.omega_pi().clone();
    let local = LocalQuadData::split(3, rat(2, 1), omega_pi / rat(2, 1))?;
    let sc = ScenarioData::new(local, sat, SteinbergData::new(rat(-1, 1))?)?;
    println!("{sc}");
    println!("Z = {}", z_closed_form_factored(&sc)?);

    let direct = z_series_direct(&sc, 8)?;
    let closed = series_of(&z_closed_form(&sc)?, 8)?;
    for k in 0..=8 {
        println!("t^{k}: {}  |  {}", direct.total.coeff(k), closed.coeff(k));
    }
    println!("m > 0 weights: {} terms, all zero: {}", direct.m_positive_weights.len(), direct.m_positive.is_zero());

    let chk = check_local_identity(&sc, 25)?;
    println!("agree through t^25: {}", chk.passed());
    Ok(())
}
