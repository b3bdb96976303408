// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: parameter tables, pulse-program simulation and
//! gate verification.
//!
//! Exit statuses are 0 on success, 1 when no solution exists, 2 for invalid
//! input and 3 when population reaches the guard band.

pub mod error;
pub mod numfmt;
pub mod program;
pub mod simulate;
pub mod table;
pub mod verify;

pub use error::{CliError, CliResult};
