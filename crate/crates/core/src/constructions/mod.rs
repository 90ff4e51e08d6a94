//! Concrete reals and the classical constructions: square roots, `e`, the
//! Liouville constant, the diagonal real avoiding a sequence, and suprema of
//! finite families.

mod diagonal;
mod series;
mod sqrt;
mod sup;

pub use diagonal::{diagonalize, DiagCertificate, Diagonal};
pub use series::{
    e_const, liouville, liouville_check, liouville_check_capped, liouville_from,
    liouville_partial_sum, LiouvilleReport, LIOUVILLE_CAP,
};
pub use sqrt::sqrt_pos;
pub use sup::{completeness_sift, sup_finite};
