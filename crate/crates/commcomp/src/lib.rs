//! Exact tools for deterministic two-party communication complexity, built
//! around a reduction from vertex cover instances to 0/1 communication
//! matrices whose one-partition number encodes the cover question.
//!
//! The crate provides:
//! - graph parsing and exact minimum vertex cover ([`graphs`]),
//! - labeled 0/1 matrices with a text format ([`matrix`]),
//! - the gadget construction, identity padding, and certified
//!   one-partitions from covers ([`reduction`]),
//! - exact solvers for the one- and zero-partition numbers, protocol
//!   depth, and protocol leaf count ([`solvers`]).

pub mod bitset;
pub mod error;
pub mod graphs;
pub mod matrix;
pub mod pipeline;
pub mod protocols;
pub mod reduction;
pub mod selftest;
pub mod solvers;

pub use error::{Error, Result};
