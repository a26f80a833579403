//! Exact random substitutions into the coset identities, and the support table.

use gsp4_zeta::cosets::{classifier_table, verify_matrix_identity, BesselDatum, Identity};

fn main() -> gsp4_zeta::Result<()> {
    for id in Identity::ALL {
        let rep = verify_matrix_identity(id, 50, 1)?;
        println!("{id:>10}: {} trials, {} redraws, pass {}", rep.trials, rep.redraws, rep.passed());
    }

    let datum = BesselDatum::new(1, 1, 1)?;
    for m in 0..3 {
        let row: Vec<String> = classifier_table(&datum, 3, m)
            .iter()
            .map(|r| format!("{}:{}/{}", r.family, r.in_support, r.total))
            .collect();
        println!("p=3 m={m}  {}", row.join("  "));
    }
    Ok(())
}
