//! Exact computation of Euler characteristics of the local systems
//! `S^k V ⊗ S^l Λ²V` on the moduli spaces `M_{1,1}` and `M_2`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, sparse multivariate polynomials, rational
//!   functions, truncated bivariate series and matrices over the fraction field.
//! * [`cyclo`]: the cyclotomic field `Q(ζ_120)`.
//! * [`groups`]: the Kleinian groups, their one-dimensional characters and
//!   the double covers `Γ(ρ)`.
//! * [`mckay`]: McKay graphs and the representation-ring substitution that
//!   produces the invariant series of a stratum.
//! * [`molien`]: an independent element-by-element average used as an oracle.
//! * [`strata`]: the seven strata of `M_2`, the generating functions `f_1`,
//!   `f_2` and the table of Euler characteristics.
//! * [`covariants`]: transvectants and the covariants of binary sextics.
//! * [`equivariant`]: symmetric functions and the `S_n`-equivariant Euler
//!   characteristics of `M_{2,n}`.

pub mod cli;
pub mod covariants;
pub mod cyclo;
pub mod equivariant;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod groups;
pub mod mckay;
pub mod molien;
pub mod strata;

pub use error::{Error, Result};
