//! Circle actions on four-manifolds: Poincaré series, Euler classes,
//! localization, the membership test for the image of restriction to the
//! fixed set, and graded bases of that image.

mod basis;
mod euler;
mod localize;
mod membership;
mod series;

pub use basis::{image_basis, image_basis_with_cutoff, image_constraints, GradedBasis, DEFAULT_MAX_DEGREE};
pub use euler::{
    euler_class, inverse_euler, line_bundle_euler, line_bundle_euler_inverse, point_euler,
    point_euler_inverse, EquivariantEuler,
};
pub use localize::{abbv_constraint_deg2, localization_sum, localize, DegreeFunctional};
pub(crate) use localize::inverse_eulers;
pub use membership::{check_membership, MembershipDecision, MembershipViolation, ViolationKind};
pub use series::{
    betti_contribution, equivariant_series, poincare_fixed, poincare_m, relation_counts,
    SeriesKind,
};

use crate::class::{Catalogue, EquivariantClass};
use crate::error::{Error, Result};
use crate::graph::DecoratedGraph;

/// Shared entry check: the class must be a circle class addressing exactly
/// the graph's components.
pub(crate) fn check_circle_class(g: &DecoratedGraph, alpha: &EquivariantClass) -> Result<Catalogue> {
    if alpha.rank() != 1 {
        return Err(Error::DomainMismatch(format!(
            "circle class expected, got {} equivariant variables",
            alpha.rank()
        )));
    }
    let catalogue = g.catalogue();
    alpha.check_addressing(&catalogue)?;
    Ok(catalogue)
}
