//! Finite-dimensional magnetic Weyl calculus.
//!
//! This crate realizes twisted convolution algebras, magnetic phase
//! cocycles, Schrödinger-type representations and phase-space
//! quantization as concrete linear algebra on finite grids, together
//! with the rotation-algebra / Harper-Hamiltonian example on `Z²` and
//! its Hofstadter band sweep.
//!
//! Two computational backends share one set of formulas:
//!
//! * **exact-group** grids model the finite abelian group
//!   `Z_{M_1} × … × Z_{M_d}`; all algebraic identities (associativity,
//!   homomorphism and covariance properties, Weyl-system relations)
//!   hold there to rounding error,
//! * **truncated-box** grids sample `ℝ^d` on a uniform box; magnetic
//!   fluxes, circulations and Moyal products live there, with
//!   quadrature- and truncation-limited tolerances.
//!
//! The module layout follows the mathematics: [`grid`] is the
//! computational substrate, [`cohomology`] handles phase-valued
//! cochains and coboundaries, [`magnetic`] produces flux and
//! circulation phases from field data, [`crossed`] builds the twisted
//! algebra and its representations, [`weyl`] the phase-space calculus,
//! [`lattice`] the `Z²` rotation algebra and band structure, and
//! [`spectral`] the shared dense Hermitian eigensolver.

extern crate blas_src;

pub mod checks;
pub mod cohomology;
pub mod crossed;
pub mod grid;
pub mod lattice;
pub mod magnetic;
pub mod spectral;
pub mod weyl;

mod error;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Shorthand for `C64::new`.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
