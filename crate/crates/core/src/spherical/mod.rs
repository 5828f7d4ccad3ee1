//! Geometry on the unit sphere: points, great circles, spherical
//! trigonometry and the Gudermannian interception curve.

pub mod interception;
pub mod point;
pub mod trig;
