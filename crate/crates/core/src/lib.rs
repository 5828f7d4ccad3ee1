//! Numerical geometry of planar and spherical interception curves.
//!
//! An interception curve is traced by a point moving at unit speed while
//! constrained to the ray (planar case) or great circle (spherical case)
//! through a target that runs along a straight barrier or an equator at the
//! same speed. This crate computes both curves, checks their geometric
//! identities numerically, relates the planar gap limit to the lemniscate
//! constant B² = Γ(3/4)⁴/(2π), and compares against Bouguer's classical
//! pursuit curve.
//!
//! The numerical kernel (adaptive Gauss-Kronrod quadrature, AGM, Lanczos
//! gamma, adaptive Runge-Kutta, Richardson extrapolation) lives in the flat
//! modules; the geometry sits on top in `planar`, `spherical`, `projections`
//! and `lemmas`; `verification` packages every identity as a named check
//! with its tolerance.

// Guards are written `!(x > 0.0)` on purpose: the negation rejects NaN,
// which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod agm;
pub mod constants;
pub mod error;
pub mod extrapolate;
pub mod gamma;
pub mod ode;
pub mod quad;
pub mod rng;
pub mod vec3;

pub mod planar;
pub mod projections;
pub mod spherical;

pub mod lemmas;
pub mod verification;

pub use constants::{lemniscate_constants, LemniscateConstants};
pub use error::{Error, Result};
pub use extrapolate::{extrapolate_limit, Extrapolated};
pub use quad::{integrate, integrate_to_inf, QuadratureResult};
pub use vec3::Vec3;

pub use planar::interception::{PlanarCurveState, TriangleElementsPlanar};
pub use planar::pursuit::PursuitState;
pub use spherical::interception::SphericalTriangleElements;
pub use spherical::point::{GreatCircle, SphericalPoint};
