//! Which coset families meet the support of `W^#`.

use std::fmt;

use serde::Serialize;

use super::datum::BesselDatum;

/// The eight representative families `diag(1,u,1,u⁻¹)·X·w`, numbered by their Weyl element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::I,
        Family::II,
        Family::III,
        Family::IV,
        Family::V,
        Family::VI,
        Family::VII,
        Family::VIII,
    ];

    /// 1-based position.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn weyl_word(self) -> &'static str {
        super::finite::FAMILY_WEYL[self as usize]
    }

    /// Whether the family carries the parameter `w`.
    pub fn has_w(self) -> bool {
        matches!(self, Family::II | Family::IV | Family::VI | Family::VIII)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];
        f.write_str(names[*self as usize])
    }
}

/// Class of `β = ϖ^m α + uw` in `o_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BetaClass {
    Unit,
    InP,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Support {
    InSupport,
    NotInSupport,
}

/// The case table: i always; ii iff `β` is a unit; vi iff `β ∈ P`, which
/// cannot happen at `m = 0`; every other family never.
pub fn support_classify(family: Family, m: u32, beta: BetaClass) -> Support {
    let yes = match family {
        Family::I => true,
        Family::II => beta == BetaClass::Unit,
        Family::VI => m > 0 && beta == BetaClass::InP,
        Family::III | Family::IV | Family::V | Family::VII | Family::VIII => false,
    };
    if yes {
        Support::InSupport
    } else {
        Support::NotInSupport
    }
}

/// Classifies `β = ϖ^m α + uw` for residues `u ≠ 0`, `w` mod `p`, with `ϖ = p`.
///
/// In the integral basis `{1, ξ₀}` one has `β = (ϖ^m b/c + uw) + (ϖ^m/c)ξ₀`;
/// `β ∈ P = p·o_L` iff both coordinates vanish mod `p`, and `β` is a unit iff
/// its norm `x² − bxy + acy²` is prime to `p`.
pub fn beta_class(datum: &BesselDatum, p: u64, m: u32, u: u64, w: u64) -> BetaClass {
    let pi = p as i128;
    let c_inv = (1..pi).find(|k| (datum.c as i128 * k).rem_euclid(pi) == 1).expect("c is a unit");
    let pm = if m == 0 { 1 } else { 0 };
    let uw = (u as i128 * w as i128).rem_euclid(pi);
    let x = (pm * datum.b as i128 * c_inv + uw).rem_euclid(pi);
    let y = (pm * c_inv).rem_euclid(pi);
    let norm = x * x - datum.b as i128 * x * y + datum.a as i128 * datum.c as i128 * y * y;
    if x == 0 && y == 0 {
        BetaClass::InP
    } else if norm.rem_euclid(pi) != 0 {
        BetaClass::Unit
    } else {
        BetaClass::Other
    }
}

/// One row of the classifier table over all residues `(u, w)`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifierRow {
    pub family: Family,
    pub m: u32,
    pub in_support: usize,
    pub total: usize,
}

/// Tabulates [`support_classify`] with [`beta_class`] over `u ∈ (ℤ/p)^×`, `w ∈ ℤ/p`.
pub fn classifier_table(datum: &BesselDatum, p: u64, m: u32) -> Vec<ClassifierRow> {
    Family::ALL
        .iter()
        .map(|&family| {
            let ws: Vec<u64> = if family.has_w() { (0..p).collect() } else { vec![0] };
            let mut in_support = 0;
            let mut total = 0;
            for u in 1..p {
                for &w in &ws {
                    total += 1;
                    let beta = beta_class(datum, p, m, u, w);
                    if support_classify(family, m, beta) == Support::InSupport {
                        in_support += 1;
                    }
                }
            }
            ClassifierRow { family, m, in_support, total }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        for m in 0..3 {
            assert_eq!(support_classify(Family::III, m, BetaClass::Unit), Support::NotInSupport);
        }
        assert_eq!(support_classify(Family::VI, 0, BetaClass::InP), Support::NotInSupport);
        assert_eq!(support_classify(Family::VI, 1, BetaClass::InP), Support::InSupport);
        assert_eq!(support_classify(Family::II, 1, BetaClass::Unit), Support::InSupport);
    }

    #[test]
    fn beta_never_in_p_at_m0() {
        let bd = BesselDatum::new(1, 1, 1).unwrap();
        for p in [2, 3, 5] {
            for u in 1..p {
                for w in 0..p {
                    assert_ne!(beta_class(&bd, p, 0, u, w), BetaClass::InP);
                }
            }
        }
    }

    #[test]
    fn beta_unit_iff_w_unit_for_positive_m() {
        let bd = BesselDatum::new(2, 1, 1).unwrap();
        for p in [3u64, 5, 7] {
            for u in 1..p {
                for w in 0..p {
                    let unit = beta_class(&bd, p, 2, u, w) == BetaClass::Unit;
                    assert_eq!(unit, w != 0);
                }
            }
        }
    }
}
