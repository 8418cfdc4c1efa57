//! Lower bounds for the fundamental Dirichlet eigenvalue λ₁ of planar membranes
//! contained in wedges and reflex angles, cross-verified by a finite-element
//! eigensolver.
//!
//! The crate has three layers:
//!
//! * closed-form machinery: real-order Bessel functions and their zeros
//!   ([`special`]), shape/pose geometry with slit support ([`geometry`]), and
//!   the weighted moment integrals ([`moments`]) that normalize the bounds;
//! * the bounds themselves ([`bounds`]): Faber–Krahn, the wedge bound for
//!   domains in an angle of aperture ≤ π, and the reflex-angle bound for cut
//!   and indented membranes, plus the boundary-moment inequality they rest on;
//! * independent verification ([`eigensolver`]): a piecewise-linear FEM
//!   estimate of λ₁ with Richardson extrapolation and a certified
//!   Rayleigh-quotient upper bound, so every lower bound can be bracketed.
//!
//! [`origin_search`] maximizes a bound over the wedge pose (the bound value
//! depends on where the wedge vertex is placed and how it is oriented).
//!
//! Data-parallel inner loops (Monte Carlo quadrature, triangle fan-out, seed
//! evaluation, refinement ladders) run on rayon when the default `parallel`
//! feature is enabled and fall back to sequential execution otherwise; results
//! are bit-identical either way ([`exec`]).

pub mod bounds;
pub(crate) mod dd;
pub mod error;
pub mod exec;
pub mod eigensolver;
pub mod geometry;
pub mod moments;
pub mod origin_search;
pub mod special;

pub use error::{Error, Result};
