//! End-to-end verification pipelines reproducing the projection theorems,
//! each emitting a machine-readable certificate.

mod certificate;
mod g10;
mod g7;
mod g8;
mod g9;
pub(crate) mod lagrangian;
mod signs;
mod support;

pub use certificate::{Certificate, StageRecord};
pub use g10::{verify_g10_general, verify_g10_special};
pub use g7::verify_g7;
pub use g8::verify_g8;
pub use g9::verify_g9;

/// All five verifications in the fixed order g7, g8, g9, g10-special,
/// g10-general.
pub fn verify_all() -> Vec<Certificate> {
    vec![
        verify_g7(),
        verify_g8(),
        verify_g9(),
        verify_g10_special(),
        verify_g10_general(),
    ]
}

/// Lookup by the identifiers the command line uses.
pub fn verify_by_name(name: &str) -> Option<Certificate> {
    match name {
        "g7" => Some(verify_g7()),
        "g8" => Some(verify_g8()),
        "g9" => Some(verify_g9()),
        "g10-special" => Some(verify_g10_special()),
        "g10-general" => Some(verify_g10_general()),
        _ => None,
    }
}

pub const THEOREM_NAMES: [&str; 5] = ["g7", "g8", "g9", "g10-special", "g10-general"];
