//! Exact construction and spectral certification of continuous families of
//! nilmanifolds that are isospectral on functions but not on 1-forms.
//!
//! The pipeline: build strictly nonsingular nilpotent metric Lie algebras by
//! central extension of a two-step algebra along a closed nondegenerate
//! two-form, exponentiate extended derivations into one-parameter automorphism
//! families with exact quasi-trigonometric entries, compute the Hodge
//! Laplacian on character-twisted invariant 1-forms, and certify — in exact
//! arithmetic — which characteristic-polynomial coefficients move with the
//! deformation parameter while the function-spectrum side stays fixed.

pub mod algebra;
pub mod bundled;
pub mod deformation;
pub mod extension;
pub mod forms;
pub mod laplacian;
pub mod lattice;
pub mod linalg;
pub mod symbolic;

pub use linalg::Mat;
pub use symbolic::{CoordPoly, GaussRational, PiPoly, Rational, TrigKey, TrigKind, TrigPoly};
