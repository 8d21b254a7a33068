//! Admissible monomial bases for the polynomial algebra over F₂ as a module
//! over the Steenrod algebra, with the surrounding machinery: weight strata,
//! Kameko maps, general linear group invariants, the lambda algebra and the
//! chain-level Singer transfer.

pub mod cache;
pub mod cli;
pub mod dual;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod gl;
pub mod hit;
pub mod kameko;
pub mod lambda;
pub mod poly;
pub mod sum;

pub use error::{Error, Result};
