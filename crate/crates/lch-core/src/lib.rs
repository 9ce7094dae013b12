//! Legendrian contact homology toolkit over F₂.
//!
//! The crate is organized around [`dga::DgaPresentation`], a finitely
//! presented free noncommutative differential graded algebra over the
//! two-element field. On top of that sit:
//!
//! * [`grading`] — the combinatorial grading calculus for Reeb chords:
//!   capping-path gradings, connecting-chord indices, and the degree
//!   shifts of the dipping construction near a Weinstein handle.
//! * [`homology`] — per-degree homology of the word-graded pieces,
//!   augmentation search, and linearized homology.
//! * [`hochschild`] — Hochschild homology via a reduced bar complex and
//!   an independent two-term small complex; the two are cross-checked.
//! * [`front`] — plat-style front diagrams of Legendrian links in the
//!   1-jet space of the line, compiled to their Chekanov–Eliashberg DGA
//!   by rigid disk enumeration.
//! * [`dynamics`] — closed-form Reeb and Liouville flows in a model
//!   Weinstein handle, the boundary flow-time equation, and the
//!   attaching maps with numerical contact-form pullback checks.
//!
//! All values are immutable after construction and every operation is
//! pure, so shared read-only use across threads is safe. With the
//! default `parallel` feature the degree-indexed and sample-indexed
//! loops run on rayon; disabling it gives a sequential build with the
//! same results.

pub mod dga;
pub mod dynamics;
pub mod front;
pub mod grading;
pub mod hochschild;
pub mod homology;

mod gf2;
mod par;

pub use dga::{DgaError, DgaPresentation, Generator, Polynomial, PushoutError, Word};
pub use homology::{BettiTable, DegreeWindow, Exactness};
