//! Geometric model of tube categories.
//!
//! Indecomposable objects of the rank-`n` tube correspond to admissible
//! oriented arcs in an annulus with `n` marked points on its outer
//! boundary; extension dimensions become minimal signed crossing numbers
//! of arcs. This crate implements the arc arithmetic, three independent
//! routes to the crossing numbers, the arc quiver with its translate, and
//! an exact linear-algebra oracle over nilpotent quiver representations
//! used to validate everything else.

pub mod arcs;
pub mod checks;
mod error;
pub mod geom;
pub mod intersect;
pub mod linalg;
pub mod oracle;
pub mod quiver;
pub mod tube;

pub use arcs::{AnnulusArc, ShiftPower, StripArc};
pub use error::{Error, Rank, Result};
pub use intersect::{CrossingPoint, CrossingReport, DoubledArcPair};
pub use tube::{IndecModule, SimpleLabel};
