//! Built-in catalogue of identities between q-series expressions and the
//! machinery to check them to a finite order.

mod catalogue;
mod file;
mod verify;

pub use file::{load_records, parse_records, FileError};
pub use verify::{
    verify_all, verify_identity, verify_record, Mismatch, RegistryError, VerificationReport,
    VerifyStatus,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::{int, Rat};

/// Provenance of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Established by the derivations the catalogue follows.
    Proved,
    /// A known result taken from earlier literature.
    Quoted,
    /// Observed numerically, no proof available.
    Unproved,
    /// Loaded from a user-supplied identity file.
    External,
}

impl Status {
    pub fn tag(&self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Quoted => "quoted-prior-result",
            Status::Unproved => "stated-without-proof",
            Status::External => "external",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub const DEFAULT_ORDER: i64 = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub description: String,
    pub default_order: Rat,
    pub status: Status,
}

/// The built-in catalogue in its fixed order.
pub fn registry_list() -> Vec<IdentityRecord> {
    catalogue::CATALOGUE
        .iter()
        .map(|&(name, status, description, lhs, rhs)| IdentityRecord {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            description: description.to_string(),
            default_order: int(DEFAULT_ORDER),
            status,
        })
        .collect()
}

pub fn find(name: &str) -> Option<IdentityRecord> {
    registry_list().into_iter().find(|r| r.name == name)
}
