//! Abelian closures of infinite words at finite scale.
//!
//! Generators for rotation, morphic, Arnoux-Rauzy and interleaved words,
//! exact arithmetic on the torus, abelian membership up to a length bound,
//! and the forbidden-factor subshift fixtures.

pub mod closure;
pub mod error;
pub mod exactnum;
pub mod subshift;
pub mod words;
pub mod generators;
pub mod spec;
pub mod verify;

pub use error::{Error, Result};
