//! Thompson-like groups built from cloning systems.
//!
//! A cloning system is a family of groups G_n with homomorphisms
//! ρ_n: G_n → 𝔖_n and cloning maps κ_n^k: G_n → G_{n+1}. Elements of the
//! associated Thompson-like group are tree diagrams (T_-, g, T_+) up to
//! expansion. This crate provides the tree-diagram arithmetic, the shipped
//! instances (Thompson's F and V, the braided Thompson groups BV and BF, and
//! direct powers of Z) and their orderings.

pub mod braid;
pub mod cloning;
pub mod direct_powers;
pub mod error;
pub mod expr;
pub mod free;
pub mod harness;
pub mod instances;
pub mod permutation;
pub mod pure_braid;
mod syntax;
pub mod tree;
pub mod wzt;

pub use error::{Result, WztError};
