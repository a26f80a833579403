//! Whittaker W values and the Mellin transform identity.

use gsp4_zeta::arch::{mellin_whittaker, whittaker_w, WhittakerQuery};
use num_complex::Complex64;

fn main() -> gsp4_zeta::Result<()> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    for (kappa, mu, x) in [(c(0.5, 0.0), c(0.0, 0.0), 1.0), (c(6.0, 0.0), c(5.5, 0.0), 0.01), (c(-1.0, 0.5), c(0.0, 0.6), 3.0)] {
        let w = whittaker_w(&WhittakerQuery::new(kappa, mu, x)?)?;
        println!("W[{kappa}, {mu}]({x}) = {w:.15e}");
    }
    for sigma in [1.0, 2.5] {
        let m = mellin_whittaker(c(1.0, 0.0), c(0.0, 0.5), c(sigma, 0.0))?;
        println!("sigma={sigma}: numeric {:.14e} closed {:.14e} rel {:.1e}", m.numeric, m.closed, m.discrepancy());
    }
    Ok(())
}
