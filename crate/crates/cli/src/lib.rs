//! Shared output machinery for the brauerlab binary.

pub mod envelope;
