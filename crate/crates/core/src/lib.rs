//! Exact decision procedure for planar diagrams of a spatial quadrangle and
//! its shadow.
//!
//! Two quadrangles in a plane, perspective from a point `O`, depict a plane
//! quadrangle in space together with its shadow cast from a light at `O`
//! exactly when their diagonal triangles are also perspective from `O`.
//! [`checker::decide_depiction`] applies that test with rational arithmetic
//! and [`lift`] builds an explicit spatial witness for every correct diagram.

pub mod checker;
pub mod cli;
pub mod error;
pub mod generators;
pub mod io;
pub mod kernel;
pub mod lift;
pub mod perspectivity;
pub mod quadrangle;
pub mod svg;

pub use error::{GeomError, Result};
