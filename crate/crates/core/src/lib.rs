//! Flat pairs of pants with one cone point.
//!
//! A flat pair of pants with a single cone point is determined up to
//! isometry by six numbers: the boundary lengths `l` together with either
//! the distances `r` from the cone point to each boundary component, or
//! the distances `a` between pairs of boundary components. This crate
//! validates both parameter systems, converts between them, builds the
//! planar development (a triangle with a rectangle on each side), measures
//! cone angles, checks the declared distances against a sampled-graph
//! approximation of the surface metric, explores the parameter set and its
//! walls, and does Gauss-Bonnet bookkeeping for surfaces glued from pants.

#![allow(clippy::needless_range_loop)]

pub mod development;
pub mod error;
pub mod flat_metric;
pub mod geometry;
pub mod json;
pub mod pants_params;
pub mod surface_assembly;
pub mod svg;
pub mod teich_space;

pub use development::{ConeLocation, ConePoint, Development};
pub use error::{Error, Result};
pub use flat_metric::{structure_distance, MetricGraph};
pub use pants_params::{
    DegeneracyReport, DistanceParams, LengthRadiusParams, SingularityLocation, Tolerance, Validity,
    Violation,
};
pub use svg::emit_svg;
pub use teich_space::{Membership, Stratum, TeichPoint};
