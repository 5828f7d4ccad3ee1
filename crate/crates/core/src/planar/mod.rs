//! Planar interception and pursuit curves.

pub mod interception;
pub mod pursuit;
