//! Exact S¹-equivariant spin-c quantization from fixed-point data.
//!
//! The character of `Q(M)` is computed two ways: as an exact Laurent
//! polynomial from the localization sum ([`kostant::character_rational`]),
//! and weight by weight from partition counts ([`kostant::multiplicity`]).

pub mod catalogue;
pub mod charring;
pub mod cutting;
pub mod fpdata;
pub mod kostant;
pub mod sphere;

mod json;

pub use json::ParseError;
