//! Unit index and coset volumes, with the index recounted in a finite quotient.

use gsp4_zeta::cosets::{volume_v1, volume_v2};
use gsp4_zeta::exact::{fmt_rational, rat};
use gsp4_zeta::local_field::{unit_index, unit_index_oracle, LocalQuadData};

fn main() -> gsp4_zeta::Result<()> {
    let cases = [
        (LocalQuadData::inert(3, rat(1, 1))?, (1, 0, 1)),
        (LocalQuadData::split(3, rat(1, 1), rat(1, 1))?, (2, 0, 1)),
        (LocalQuadData::ramified(3, rat(1, 1))?, (1, 1, 1)),
    ];
    for (local, (a, b, c)) in &cases {
        for m in 0..=3 {
            println!(
                "{:>8} m={m}: formula {:>3}  count {:>3}",
                local.symbol(),
                fmt_rational(&unit_index(local, m)),
                unit_index_oracle(*a, *b, *c, 3, m)?
            );
        }
    }
    let local = &cases[0].0;
    for (l, m) in [(0, 1), (2, 1), (1, 3)] {
        let v1 = volume_v1(local, l, m);
        let v2 = volume_v2(local, l, m)?;
        println!("l={l} m={m}: V1 = {}  V2 = {}  V1 - V2/q = {}", fmt_rational(&v1), fmt_rational(&v2), fmt_rational(&(&v1 - &v2 / rat(3, 1))));
    }
    Ok(())
}
