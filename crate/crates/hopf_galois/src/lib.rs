//! Exact computations with restricted Lie algebras in characteristic p:
//! reduced enveloping algebras, the Hopf-Galois / central-simplicity
//! decision, and the transformed Hopf algebra of equivariant endomorphisms
//! with its triangular structure and quantum Lie algebra of generators.
//!
//! Everything is computed over F_p with exact arithmetic; all verification
//! is exact equality. Start from a [`lie::RestrictedLie`] (hand-built or a
//! [`fixtures`] entry), construct the reduced enveloping algebra, and feed
//! the adjoint action into [`galois`] and [`endo`].
//!
//! Runnable walkthroughs live in the crate's `examples/` directory; the
//! `hopf-galois` binary exposes the same pipeline as a small CLI.

pub mod algebra;
pub mod closed_form;
pub mod endo;
pub mod fixtures;
pub mod fp;
pub mod galois;
pub mod hopf;
pub mod input;
pub mod lie;
pub mod qlie;
pub mod report;

pub use algebra::{Algebra, AlgebraElement, FrobeniusFormData};
pub use endo::{EndoHopf, EndoTransform};
pub use fp::{Fp, FpMatrix, FpScalar, FpVector, SpanBasis};
pub use galois::GaloisContext;
pub use hopf::{HopfData, ModuleAlgebraAction, QTElement};
pub use lie::{LinearForm, ReducedEnveloping, RestrictedLie};
