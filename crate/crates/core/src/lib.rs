//! Exact genus bounds for space curves satisfying flag conditions.

pub mod castelnuovo;
pub mod cli;
pub mod error;
pub mod euclid;
pub mod exact_arith;
pub mod hilbert;
pub mod hypotheses;
pub mod lemma;
pub mod oracle;
pub mod recurrence;

pub use error::{Error, Result};
pub use exact_arith::{Interval, Rational};
