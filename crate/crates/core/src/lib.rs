//! Exact tautological integrals on symmetric products of curves.
//!
//! The crate computes Chern and Segre numbers of tautological bundles on
//! `C^[n]` by torus localization on the projective line, extracts the
//! universal coefficients of their generating series, and checks a family of
//! closed forms and functional equations against that ground truth.

pub mod algebra;
pub mod cli;
pub mod closedforms;
pub mod error;
pub mod localization;
pub mod tautseries;
