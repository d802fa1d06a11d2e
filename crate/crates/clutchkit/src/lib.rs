//! clutchkit — numerical verification of quaternionic bundle constructions.
//!
//! The crate evaluates the explicit maps, group actions and transition
//! cocycles that appear in clutching presentations of 7-, 8- and 10-sphere
//! geometry (Hopf-type quadratic maps, Gromoll-Meyer transition data,
//! octonionic clutching of sphere bundles) and measures, over seeded random
//! samples, the pointwise identities those constructions rest on: cocycle
//! and equivariance laws, isometry of actions, involution and factorization
//! identities, membership closure of constraint manifolds.
//!
//! Every measurement is a *defect*: the maximum deviation of an identity
//! over a sample batch. Sample streams are sequential and seeded, so defect
//! values are reproducible bit-for-bit at any parallelism level; the fold
//! itself parallelizes behind the `parallel` feature (on by default).

pub mod algebra;
pub mod batch;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod maps;
pub mod seed;
pub mod star;
pub mod tol;

pub use error::{Error, Result};
