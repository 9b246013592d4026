use serde::{Deserialize, Serialize};

use crate::class::ComponentKind;
use crate::error::{Error, Result};
use crate::graph::{DecoratedGraph, Position};
use crate::series::PoincareSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// The manifold itself.
    M,
    /// Its fixed set.
    Fixed,
}

/// Contribution of one fixed component to `dim H^0 … dim H^4` of the
/// manifold (Morse–Bott with the momentum map).
pub fn betti_contribution(kind: ComponentKind, position: Position) -> Result<[u64; 5]> {
    let row = match (kind, position) {
        (ComponentKind::Surface { genus }, Position::Min) => [1, 2 * genus as u64, 1, 0, 0],
        (ComponentKind::Surface { genus }, Position::Max) => [0, 0, 1, 2 * genus as u64, 1],
        (ComponentKind::Surface { .. }, Position::Interior) => {
            return Err(Error::Input("a fixed surface must be extremal".into()))
        }
        (ComponentKind::Point, Position::Min) => [1, 0, 0, 0, 0],
        (ComponentKind::Point, Position::Interior) => [0, 0, 1, 0, 0],
        (ComponentKind::Point, Position::Max) => [0, 0, 0, 0, 1],
    };
    Ok(row)
}

/// Ordinary Poincaré polynomial of the manifold, summed over components.
pub fn poincare_m(g: &DecoratedGraph) -> Result<PoincareSeries> {
    let mut num = vec![0i64; 5];
    for c in g.components() {
        let row = betti_contribution(c.kind(), g.position(c.y()))?;
        for (n, r) in num.iter_mut().zip(row) {
            *n += r as i64;
        }
    }
    Ok(PoincareSeries::polynomial(num))
}

/// Ordinary Poincaré polynomial of the fixed set.
pub fn poincare_fixed(g: &DecoratedGraph) -> PoincareSeries {
    let mut num = vec![0i64; 3];
    for c in g.components() {
        match c.kind() {
            ComponentKind::Point => num[0] += 1,
            ComponentKind::Surface { genus } => {
                num[0] += 1;
                num[1] += 2 * genus as i64;
                num[2] += 1;
            }
        }
    }
    PoincareSeries::polynomial(num)
}

pub fn equivariant_series(g: &DecoratedGraph, which: SeriesKind) -> Result<PoincareSeries> {
    let p = match which {
        SeriesKind::M => poincare_m(g)?,
        SeriesKind::Fixed => poincare_fixed(g),
    };
    Ok(p.divided_by_one_minus_t2(1))
}

/// Number of relations cutting the image out of the fixed-set cohomology in
/// degrees 0, 1 and 2; no relations occur above degree 2.
pub fn relation_counts(g: &DecoratedGraph) -> Result<(u64, u64, u64)> {
    let r0 = g.component_count() as u64 - 1;
    let r1 = if g.surfaces.len() == 2 { 2 * g.genus() as u64 } else { 0 };
    let r2: u64 = 1;
    let diff = equivariant_series(g, SeriesKind::Fixed)?.sub(&equivariant_series(g, SeriesKind::M)?);
    let expected = PoincareSeries::polynomial(vec![r0 as i64, r1 as i64, r2 as i64]);
    if !diff.same_series(&expected) {
        return Err(Error::Internal(format!(
            "fixed-set and manifold series differ by {diff}, not by {expected}"
        )));
    }
    Ok((r0, r1, r2))
}
