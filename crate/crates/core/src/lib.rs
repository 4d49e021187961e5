//! Exact rational constructions showing that lines admit no weak epsilon-nets
//! for convex sets in three and more dimensions.
//!
//! [`ruling`] builds planar witness polygons around a family of skew lines on a
//! paraboloid, [`game`] plays the stabbing game against an adversary,
//! [`planar`] and [`cube`] treat the ray-triple and cube-diagonal gadgets, and
//! [`higher`] lifts everything to `R^d`. All arithmetic is over [`Scalar`].

pub mod cube;
pub mod game;
pub mod geometry;
pub mod higher;
pub mod planar;
pub mod report;
pub mod rng;
pub mod ruling;
pub mod scalar;

pub use scalar::{Extended, Scalar};
