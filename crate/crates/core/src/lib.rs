//! Classification of valence-two Killing tensors on the Euclidean plane under
//! the proper Euclidean group SE(2).
//!
//! A Killing two-tensor on E² is fixed by six parameters `α1..α6` (see
//! [`KTParams`]). The group acts on this parameter space; this crate
//!
//! * partitions the parameter space into orbit-dimension strata ([`stratum`]),
//! * labels each orbit by a complete vector of invariants ([`leaf_label`]) and
//!   decides SE(2)-equivalence ([`equivalent`]),
//! * computes the moving frame carrying a tensor to its canonical form
//!   ([`moving_frame`], [`canonical_form`]),
//! * runs the orthogonal-separation pipeline for polynomial potentials
//!   ([`compatible`], [`first_integral_potential`], [`separate`]),
//! * and generates the coordinate-web curves of a tensor ([`web_curves`]).
//!
//! Parameters may be given as `f64` or as exact rationals. Classification
//! predicates are decided exactly whenever the exact representation is present.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod algebra;
mod error;
mod math;

pub mod action;
pub mod frames;
pub mod group;
pub mod leaf;
pub mod params;
pub mod poly;
pub mod scalar;
pub mod separability;
pub mod stratify;
pub mod web;

pub use action::{induced_action, induced_action_exact, pushforward_check, pushforward_check_params};
pub use error::{Error, Result};
pub use frames::{canonical_form, canonical_form_with, moving_frame, moving_frame_with, Chart, FrameResult};
pub use group::{group_apply_point, group_compose, group_inverse, ExactMotion, GroupElement};
pub use leaf::{equivalent, leaf_label, LeafLabel};
pub use params::{kt_components, kt_eigenvalues, KTParams, Point2, SymMat2};
pub use poly::Poly2;
pub use scalar::{parse_rational, Rational};
pub use separability::{
    compatible, first_integral_potential, separate, separate_with, SeparationReport,
};
pub use stratify::{deltas, stratum, stratum_with, web_type, Deltas, Stratum, StratumLabel, Tolerances, WebType};
pub use web::{web_curves, Region, WebPlot};
