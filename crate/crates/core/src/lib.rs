//! Covering-group invariants of links in thickened surfaces.

pub mod cli;
pub mod fox;
pub mod invariants;
pub mod laurent;
pub mod opgroup;
pub mod symplectic;
