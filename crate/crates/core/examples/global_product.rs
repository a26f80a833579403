//! Truncated global zeta integral and the special value ratio from a scenario file.

use gsp4_zeta::global::{global_z, special_value_ratio};
use gsp4_zeta::input::parse_input;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/global.json").into());
    let file = parse_input(&std::fs::read_to_string(&path)?)?;
    let gi = file.global_input.ok_or("no global_input")?;
    for pmax in [5, 11, 23, 47] {
        for s in &file.global_s {
            let z = global_z(&gi, *s, pmax)?;
            println!("pmax={pmax:>2} s={s}: Z = {:.12e}  euler = {:.12e}  tail <= {:.1e}", z.value, z.euler.value, z.euler.tail_bound);
        }
    }
    let sv = special_value_ratio(&gi, 47)?;
    println!("L(l/2-1)/(pi^(5l-8) norms) = {:.12e}", sv.ratio);
    println!("{}", sv.note);
    Ok(())
}
