//! Zero-error message counting for permutation channels.
//!
//! A permutation channel delivers `n` carriers after applying an unknown element
//! of a permutation group `G` to their positions. This crate counts how many
//! messages survive such a channel perfectly under three encodings (classical
//! strings, quantum states, and quantum states with an entangled ancilla),
//! builds the quantum message basis for cyclic groups, and certifies it by
//! exhaustive simulation.
//!
//! Permutations act on the left: `tau.compose(&sigma)` applies `sigma` first,
//! and `σ·x` places symbol `x[i]` at position `σ(i)`.

pub mod channel_sim;
pub mod counting;
pub mod encoding;
pub mod error;
pub mod perm_core;
pub mod rep_theory;

pub use error::{Error, Result};
