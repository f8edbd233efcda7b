//! Parikh factor spectra of binary words.
//!
//! For a word `w` over `{a, b}` the factor spectrum sends each Parikh vector
//! `(i, j)` to the number of distinct factors of `w` with `i` letters `a` and
//! `j` letters `b`. This crate computes spectra (by brute force and through a
//! suffix automaton), classifies words (balanced, Lyndon, trapezoidal,
//! Christoffel, ...), and provides executable checks of the symmetry
//! properties of Christoffel words: the palindromic-cut bijection, the
//! two-position cut attractor and the lattice-path description of the support.
//!
//! The [`verify`] module runs those checks exhaustively over bounded word
//! spaces; the `factorsym` binary exposes everything on the command line.

pub mod attractor;
pub mod bijection;
pub mod classify;
mod error;
pub mod geometry;
pub mod spectrum;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{Letter, ParikhVector, Word};
