//! Outcome of a single verified identity.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The identity being checked, in words or formula.
    pub anchor: String,
    pub passed: bool,
    /// Empty on success; otherwise the offending value.
    pub residue: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check { id: id.into(), anchor: anchor.into(), passed: true, residue: String::new() }
    }

    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, residue: impl Into<String>) -> Self {
        Check { id: id.into(), anchor: anchor.into(), passed: false, residue: residue.into() }
    }

    /// Passes iff `ok`; the residue is only rendered on failure.
    pub fn expect<R: Display>(id: impl Into<String>, anchor: impl Into<String>, ok: bool, residue: impl FnOnce() -> R) -> Self {
        if ok {
            Check::pass(id, anchor)
        } else {
            Check::fail(id, anchor, residue().to_string())
        }
    }

    /// Passes iff every residue is zero; reports the first nonzero one.
    pub fn all_zero<'a, I>(id: impl Into<String>, anchor: impl Into<String>, residues: I) -> Self
    where
        I: IntoIterator<Item = &'a crate::Poly>,
    {
        let bad = residues.into_iter().find(|p| !p.is_zero());
        match bad {
            None => Check::pass(id, anchor),
            Some(p) => Check::fail(id, anchor, p.to_string()),
        }
    }

    pub fn from_result<T, E: Display>(id: impl Into<String>, anchor: impl Into<String>, r: &std::result::Result<T, E>) -> Self {
        match r {
            Ok(_) => Check::pass(id, anchor),
            Err(e) => Check::fail(id, anchor, e.to_string()),
        }
    }
}
