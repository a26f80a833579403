//! Bruhat representatives of G/K^#(p) checked by brute force in Sp4(F_p).

use gsp4_zeta::cosets::{bruhat_count, bruhat_family, coset_audit, count_identity_defect, FAMILY_WEYL};

fn main() -> gsp4_zeta::Result<()> {
    let p: u8 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    for f in 1..=8 {
        println!("family {f} ({}): {} representatives", FAMILY_WEYL[f - 1], bruhat_family(p, f).len());
    }
    let a = coset_audit(p)?;
    println!(
        "|G| = {}, |K#| = {}, cosets = {} (formula {}), transversal: {}",
        a.group_order,
        a.subgroup_order,
        a.cosets,
        bruhat_count(u64::from(p)),
        a.passed()
    );
    println!("count identity defect: {}", count_identity_defect());
    Ok(())
}
