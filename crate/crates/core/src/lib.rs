//! Rational equivariant cohomology of Hamiltonian circle actions on
//! four-manifolds and of complexity one torus actions, computed from
//! decorated graphs and x-rays with exact arithmetic.
//!
//! Everything is expressed through restriction to the fixed set: a global
//! class is a tuple of classes on the fixed components, and the image of the
//! restriction map is cut out by constancy, surface-matching and
//! localization conditions.

pub mod class;
mod error;
pub mod fixtures;
pub mod graph;
pub mod laurent;
pub mod linalg;
mod rational;
pub mod report;
pub mod s1;
pub mod series;
pub mod surface;
pub mod torus;
pub mod xray;

pub use class::{Catalogue, ComponentClass, ComponentKind, DegreeLayout, EquivariantClass};
pub use error::{Error, Result};
pub use graph::{
    abbv_zero_check, extremal_self_intersections, parse_graph, validate_graph, DecoratedGraph,
    FatVertex, GraphEdge, IsolatedVertex, Position,
};
pub use laurent::{laurent_mul, Laurent, LaurentQ, LaurentSurface};
pub use rational::Rational;
pub use report::{ValidationReport, Violation};
pub use series::{series_coefficient, PoincareSeries};
pub use surface::{cup_surface, integrate_surface, Coefficient, SurfaceClass};
pub use torus::check_membership_t;
pub use xray::{
    check_membership_xray, image_basis_xray, parse_xray, validate_xray, SkeletonPiece,
    TorusFixedComponent, XRay,
};
