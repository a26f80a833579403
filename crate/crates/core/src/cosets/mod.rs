//! Double coset geometry: the Bessel datum, Bruhat representatives of
//! `K^H/K^#(p)` checked against `Sp₄(𝔽_p)`, the matrix identities behind the
//! support classification, the classifier, and the coset volumes.

mod datum;
mod etale;
mod finite;
mod identities;
mod support;
mod volumes;

pub use datum::BesselDatum;
pub use etale::{Etale, EtaleMatrix};
pub use finite::{
    bruhat_count, bruhat_family, bruhat_reps, coset_audit, enumerate_sp4, k_sharp_elements, CosetAudit, FqSp4,
    FAMILY_WEYL,
};
pub use identities::{sides, verify_matrix_identity, Draw, Identity, IdentityReport, IdentityWitness};
pub use support::{beta_class, classifier_table, support_classify, BetaClass, ClassifierRow, Family, Support};
pub use volumes::{count_identity_defect, vol_k_sharp, volume_v1, volume_v2};
