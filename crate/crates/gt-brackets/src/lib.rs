//! Brackets and cobrackets on cyclic words induced by Fox pairings and
//! quasi-derivations.
//!
//! Everything here is generic in the pairing and the quasi-derivation.
//! Cyclic operations take an element of `|A|`, evaluate on its stored
//! representative and project back; independence of the representative is
//! checked by the test suite rather than assumed.

pub mod bracket;
pub mod cobracket;
pub mod cyclic_square;
pub mod error;
mod words;

pub use bracket::{bracket_cyclic, bracket_of_lifts, bracket_sweedler, double_bracket, double_bracket_letters};
pub use cobracket::{cobracket_cyclic, cobracket_of_lift, cobracket_sweedler, dq_map, projected_dq};
pub use cyclic_square::CyclicTensorSquare;
pub use error::{BracketError, Result};
