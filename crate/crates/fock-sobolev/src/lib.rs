#![cfg_attr(not(test), no_std)]

//! Core numerics for Toeplitz and Hankel operator computations on the
//! Fock-Sobolev spaces `F^{2,m}(C)` in the monomial basis.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`): exact
//! rational complex arithmetic, arbitrary-precision decimal floats, the
//! reproducing kernel and weighted monomial integrals, symbol classes
//! (kernel combinations, monomial series, mixed polynomials), truncated
//! operator matrices with tracked truncation error, the combinatorial
//! identity layer, and the zero-semi-commutator decision procedure.
//!
//! IO, JSON schemas and the command-line front end live in the companion
//! `fock-sobolev-cli` crate.

extern crate alloc;

pub mod checker;
pub mod factorial;
pub mod identities;
pub mod kernel;
pub mod operators;
pub mod params;
pub mod rng;
pub mod scalar;
pub mod symbols;
pub mod verify;

pub use params::{FockParams, NumericContext, ParamError};
pub use scalar::{BigComplex, BigFloat, ExactComplex, Scalar};

use alloc::string::String;

/// Errors shared by the truncated computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TruncationError {
    /// The requested truncation degree cannot dominate the series tails.
    /// Carries a human-readable description of the violated bound.
    TooSmall(String),
}

impl core::fmt::Display for TruncationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TruncationError::TooSmall(msg) => write!(f, "truncation too small: {msg}"),
        }
    }
}
