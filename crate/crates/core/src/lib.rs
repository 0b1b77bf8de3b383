//! Garside-theoretic computations for finite Coxeter groups and their
//! positive braid monoids.

pub mod braid;
pub mod cli;
pub mod conjcat;
pub mod coxeter;
pub mod error;
pub mod format;
pub mod periodic;
pub mod ribbon;
pub mod verify;

pub use braid::{Artin, Braid};
pub use coxeter::{CoxeterSystem, Element, Side, Subset, Twisted};
pub use error::{Error, Result};
