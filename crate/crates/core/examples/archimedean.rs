//! The archimedean integral by iterated quadrature against its Gamma closed form.

use std::time::Instant;

use gsp4_zeta::arch::{z_inf_closed, z_inf_quadrature};
use gsp4_zeta::driver::default_arch_grid;

fn main() -> gsp4_zeta::Result<()> {
    for sc in default_arch_grid() {
        let start = Instant::now();
        let closed = z_inf_closed(&sc)?;
        let numeric = z_inf_quadrature(&sc)?;
        println!(
            "l={:>2} D={:>2} ir={:<10} s={:<10} closed {:>24.14e} rel {:.1e} ({:.2?})",
            sc.l,
            sc.d,
            sc.ir.to_string(),
            sc.s.to_string(),
            closed,
            (numeric - closed).norm() / closed.norm(),
            start.elapsed()
        );
    }
    Ok(())
}
