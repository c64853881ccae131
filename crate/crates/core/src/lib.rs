//! Exact spectral analysis of boolean functions under the `{I,H,N}^n`
//! transform set.
//!
//! The crate decides the generalised bent criteria (bent, bent₄, ℤ₄-bent,
//! I-bent, I-bent₄ and their "completely" variants, LC-bent) exactly, in the
//! ring `ℤ[ω]`, `ω = e^{2πi/8}`. Quadratic functions are also handled as graph
//! states: local complementation, GF(2) rank criteria, canonical forms,
//! isomorph-free generation of connected graphs and LC-orbit classification.
//!
//! Module map:
//!
//! * [`boolfun`] – ANF / truth-table representation and elementary algebra.
//! * [`cyclo`] – exact arithmetic in `ℤ[ω]` and `ℤ[√2]`.
//! * [`transform`] – tensor-product kernels, spectra, flatness, autocorrelation.
//! * [`graph`] – graph states, LC, ranks, canonical labelling, orbits.
//! * [`lcspectral`] – the spectral derivation of a single LC step.
//! * [`criteria`] – the bent hierarchy and exhaustive family censuses.
//! * [`codes`] – additive GF(4) / ℤ₄ code views of graph states.
//! * [`expected`] – published reference values shared by tests and the CLI.
//! * [`exec`] – sequential / rayon execution switch.

pub mod boolfun;
pub mod codes;
pub mod criteria;
pub mod cyclo;
mod error;
pub mod exec;
pub mod expected;
pub mod graph;
pub mod lcspectral;
pub mod transform;

pub use boolfun::{BooleanFunction, Monomial, VarSet, Z4Function};
pub use cyclo::{CyclotomicInt, RootTwoInt};
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::GraphState;
pub use transform::{Kernel, KernelKind, SpectralVector, TransformSpec};
