//! The graded Goldman-Turaev Lie bialgebra of `Σ_{g,n+1}`.
//!
//! The bracket comes from the intersection pairing `ρ_G` and the cobracket
//! from the framed quasi-derivation `q^f ∈ Qder(-ρ_G)`. Besides the presets
//! this crate carries the checks that tie them to their expected
//! properties: the double bracket table on generators, an independent
//! formula for the left-projected `d_{q^f}`, exhaustive verification of the
//! bialgebra axioms at low degree, the Bernoulli element `φ(ω)` and the
//! effect of conjugation on a Fox pairing.

pub mod bernoulli;
pub mod bialgebra;
pub mod conjugation;
pub mod error;
pub mod kappa;
pub mod presets;
pub mod surface;

pub use bernoulli::{bernoulli_numbers, bernoulli_phi, phi_coefficients, BernoulliPhi};
pub use bialgebra::{verify_bialgebra, verify_bialgebra_with, BialgebraReport, CheckReport, Status};
pub use conjugation::{check_group_like, conjugation_defect, ConjugationDefect};
pub use error::{Result, SurfaceError};
pub use kappa::{cyclic_left, kappa_reference, kappa_table, mu_r_oracle, KappaTable};
pub use presets::{make_q_framing, make_rho_g};
pub use surface::{surface_alphabet, Framing, SurfaceContext};
