//! Fox calculus on the truncated free Hopf algebra.
//!
//! All objects are stored as their values on generators and evaluated with
//! the closed forms that the Leibniz rules force on words:
//!
//! * left derivative: `∂(w_1…w_k) = w_1…w_{k-1} ∂(w_k)`
//! * right derivative: `∂(w_1…w_k) = ∂(w_1) w_2…w_k`
//! * pairing: `ρ(a_1…a_m, b_1…b_n) = a_1…a_{m-1} ρ(a_m, b_1) b_2…b_n`
//!
//! Quasi-derivations follow `q(ab) = q(a)b + a q(b) - σ(a, b)`.

pub mod codec;
pub mod derivative;
pub mod error;
pub mod exact;
pub mod pairing;
pub mod qder;

pub use derivative::{fox_eval, FoxDerivative, Side};
pub use error::{FoxError, Result};
pub use exact::{inner_as_exact, make_exact_pairing, make_exact_qder, make_inner_pairing, solve_two_sided_derivatives};
pub use pairing::{pairing_eval, transpose_pairing, FoxPairing, Provenance};
pub use qder::{qder_eval, transpose_fox, transpose_qder, QuasiDerivation};
