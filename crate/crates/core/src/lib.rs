//! Finite left braces: arithmetic, ideals, the cycle and matrix families,
//! group-theoretic analysis, bounds on witness dimensions and the
//! associated set-theoretic solutions of the Yang-Baxter equation.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bounds;
pub mod brace;
pub mod constructions;
pub mod error;
pub mod group;
pub mod ybe;

pub use brace::{Brace, Carrier, Element};
pub use error::{Error, Result};
