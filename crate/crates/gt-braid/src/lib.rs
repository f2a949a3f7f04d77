//! Finitely presented graded Lie algebras and the Drinfeld–Kohno family.
//!
//! [`LieQuotient`] computes a presentation degree by degree and gives
//! normal forms. On top of it sit the framed and genus `g` Drinfeld–Kohno
//! algebras with their operadic compositions, the presentations of the
//! kernels of string deletion, and the check of the map `φ` onto the
//! extension `(L ⊕ L) ×_G UL`.

pub mod dk;
pub mod error;
pub mod hom;
pub mod phi;
pub mod presentation;
pub mod quotient;

pub use dk::{
    derived_quotient, dims_csv, dims_table, dk_algebra, dk_compose, framing_coefficient, h_bar_presentation, h_presentation, k_presentation,
    kernel_dims, string_delete, string_split, Composition, DimRow, DkAlgebra, DkFamily, KernelDegree, T_DEGREE,
};
pub use error::{BraidError, Result};
pub use hom::{check_homomorphism, check_homomorphism_in, HomCheck, LieHomomorphism};
pub use phi::{goldman_extension_algebra, phi_setup, verify_phi, verify_phi_with, GoldmanExtension, PhiDegree, PhiReport, PhiSetup};
pub use presentation::{br, letters_of, linear, substitute, sum_of, GeneratorSchema, GradedPresentation, PresentationSchema};
pub use quotient::{component, normal_form, BasisElement, Definition, DegreeComponent, Key, LieQuotient, QuotientElement};
