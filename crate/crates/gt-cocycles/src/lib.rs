//! Relative Chevalley–Eilenberg data attached to Fox pairings and
//! quasi-derivations.
//!
//! The Lie algebra is `L ⊕ L` for the free Lie algebra `L` inside the
//! tensor algebra `A`, relative to the diagonal, with `A` as a module under
//! `(x ⊕ y)·a = xa - ay`. A pair `(q, ρ)` with
//! `q(ab) = q(a)b + a q(b) + ρ(a, b)` gives the cochain
//! `ω_q ⊕ c_ρ` with `ω_q = q` on `L` and
//! `c_ρ(v, w) = ρ(v_1, w_2) - ρ(w_1, v_2)`.

pub mod cocycle;
pub mod error;
pub mod extension;
pub mod lie_sum;
pub mod morphism;

pub use cocycle::{c_rho, check_qder_of_negated, check_relative_closed, check_relative_closed_to, e_functor, ClosedReport, RelativeCocycle};
pub use error::{CocycleError, Result};
pub use extension::{extension_bracket, ExtensionElement};
pub use lie_sum::{sum_basis, LiePair, SumKey, Summand};
pub use morphism::{check_fox_morphism, AlgebraMap, MediatedFox, MorphismReport};
