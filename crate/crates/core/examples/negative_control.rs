//! Perturb one parameter on the direct side and report where the series split apart.

use gsp4_zeta::exact::rat;
use gsp4_zeta::local_field::SplittingSymbol;
use gsp4_zeta::local_integral::{compare_sides, random_scenario, Corruption};
use gsp4_zeta::rng::seeded;

fn main() -> gsp4_zeta::Result<()> {
    let mut rng = seeded(5);
    let good = random_scenario(&mut rng, 5, SplittingSymbol::Split)?;
    println!("{good}");
    let targets = [
        Corruption::LambdaPiL,
        Corruption::LambdaPiFOverPiL,
        Corruption::Gamma(0),
        Corruption::Gamma(3),
        Corruption::Omega,
    ];
    for target in targets {
        let bad = good.corrupted(target, &rat(-3, 2))?;
        match compare_sides(&bad, &good, 25)?.mismatch {
            Some((k, d, c)) => println!("{target:>12}: t^{k} direct {d} closed {c}"),
            None => println!("{target:>12}: undetected"),
        }
    }
    Ok(())
}
