//! Exact arithmetic in the degree-truncated free tensor algebra on weighted
//! generators.
//!
//! Every element carries a [`Context`]: the generator [`Alphabet`] and the
//! truncation bound `N` on weighted degree. Binary operations insist on
//! identical contexts. Generators are primitive, which makes the tensor
//! algebra the enveloping algebra of the free Lie algebra, with
//! `Δ(g) = g ⊗ 1 + 1 ⊗ g`, `S(g) = -g`, `ε(g) = 0`.

pub mod alphabet;
pub mod codec;
pub mod cyclic;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod square;
pub mod tensor;

pub use alphabet::{Alphabet, Context, Letter, Word};
pub use cyclic::{cyclic_project, CyclicElement};
pub use error::{AlgebraError, Result};
pub use lie::{
    commutator, free_lie_dimension, is_primitive, lie_bracket, lyndon_basis, lyndon_coordinates, lyndon_words,
    standard_bracketing, LieElement, LieExpr, LyndonElement,
};
pub use linalg::{EchelonBasis, SparseVec};
pub use rational::{frac, parse_rational, rat, Rational};
pub use square::TensorSquareElement;
pub use tensor::TensorElement;
