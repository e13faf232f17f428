//! Separability of fully and partially defined n-person game forms.
//!
//! A game form `g: X_1 × … × X_n → A` is separable (assignable) when each
//! player's strategies can be labelled with outcomes so that every defined
//! profile carries the label of at least one of its strategies.

pub mod analysis;
pub mod assign;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod form;
pub mod generate;
pub mod hardness;
pub mod io;
pub mod normalize;
pub mod satenc;

pub use assign::{assign_wtt, verify, AssignmentCertificate};
pub use error::{Error, Result};
pub use form::{Alphabet, Assignment, GameForm, Hyperplane, Line, Outcome, STAR};
pub use normalize::{normalize, NormalizationLog, Removal, RemovalReason};
