//! Classification of smooth plane quartic curves over binary finite fields.
//!
//! The crate is organised around the pipeline that reconstructs the census of
//! k-isomorphism classes for k = GF(2^n), n <= 4:
//!
//! - [`gf2`]: the field tower F_2 ⊆ k ⊆ k_d with bit-packed arithmetic,
//!   relative traces, Artin–Schreier sets, Hilbert 90, and the special
//!   elements (r, u, s, t, v, w, ζ) every rational normal model is built from.
//! - [`plane`]: the projective plane over tower levels, the group
//!   Γ = PGL(3, F_2) with its conjugacy structure, and line correspondences.
//! - [`quartic`]: ternary quartics, Wall models, smoothness, bitangents,
//!   point counts, L-polynomials and Newton-polygon strata.
//! - [`descent`]: the twisted Γ-action on quadratic forms, cocycles,
//!   descent-set enumeration and generic Burnside/orbit machinery.
//! - [`families`]: the thirteen rational normal-model families with their
//!   acting groups, automorphism tables and class counts, plus reduction of
//!   arbitrary smooth quartics to a normal model.
//! - [`census`]: closed-formula evaluators, strata tables, mass formulas and
//!   the verification engine comparing all of it to enumeration.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI and parallel drivers live in
//! the companion crate.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod census;
pub mod descent;
pub mod families;
pub mod forms;
pub mod gf2;
pub mod plane;
pub mod quartic;
