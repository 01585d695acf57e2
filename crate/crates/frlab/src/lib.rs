//! Fractional repetition (FR) codes with access-balancing labelings.
//!
//! The crate builds FR codes from uniform regular set systems, evaluates and
//! optimizes block labelings under the access-variance (MinVar) and
//! access-minsum (MaxMinSum) objectives, solves the equivalent minimum
//! product-sum vertex-labeling problem on line graphs, searches for
//! supermagic labelings, and simulates the full DRESS storage pipeline
//! (systematic MDS outer code over GF(256), placement, repair by transfer,
//! reconstruction, and labeled access workloads).
//!
//! The `frlab` binary exposes every subsystem behind one CLI; `frlab verify`
//! replays the built-in reproduction suite.

// Divisibility and parity tests read better spelled out in formula code.
#![allow(clippy::manual_is_multiple_of)]

pub mod dress;
pub mod error;
pub mod frcode;
pub mod gf256;
pub mod labeling;
pub mod magic;
pub mod minps;
pub mod rational;
pub mod setsystem;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
