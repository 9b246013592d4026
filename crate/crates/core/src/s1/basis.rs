use crate::class::{DegreeLayout, EquivariantClass, Part};
use crate::error::{Error, Result};
use crate::graph::{DecoratedGraph, Position};
use crate::linalg;
use crate::rational::Rational;

use super::abbv_constraint_deg2;

pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// A basis of one graded piece, as rows of coordinates over a slot layout
/// in reduced echelon form.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub layout: DegreeLayout,
    pub rows: Vec<Vec<Rational>>,
}

impl GradedBasis {
    pub fn from_constraints(layout: DegreeLayout, constraints: &[Vec<Rational>]) -> Self {
        let rows = linalg::nullspace(constraints, layout.len());
        GradedBasis { layout, rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn classes(&self) -> Vec<EquivariantClass> {
        self.rows.iter().map(|r| self.layout.class_from(r)).collect()
    }

    /// Whether the degree-k part of `alpha` lies in the span.
    pub fn contains(&self, alpha: &EquivariantClass) -> bool {
        let v = self.layout.coords(alpha);
        linalg::in_row_space(&self.rows, &v, self.layout.len())
    }
}

/// The linear conditions cutting the degree-k image out of the fixed-set
/// space, one row per condition.
pub fn image_constraints(g: &DecoratedGraph, k: u32) -> Result<(DegreeLayout, Vec<Vec<Rational>>)> {
    let catalogue = g.catalogue();
    let layout = DegreeLayout::new(&catalogue, 1, k);
    let n = layout.len();
    let mut rows = Vec::new();
    match k {
        0 => {
            for i in 1..n {
                let mut row = vec![Rational::zero(); n];
                row[0] = Rational::one();
                row[i] = -Rational::one();
                rows.push(row);
            }
        }
        1 => {
            if let (Some(min), Some(max)) = (g.surface_at(Position::Min), g.surface_at(Position::Max)) {
                let m = g.identification_matrix();
                let dim = 2 * g.genus() as usize;
                let slot = |id: &str, i: usize| layout.index_of(id, &Part::H1(i), &[0]).expect("slot");
                for (i, m_row) in m.iter().enumerate().take(dim) {
                    let mut row = vec![Rational::zero(); n];
                    row[slot(&max.id, i)] = Rational::one();
                    for (j, mij) in m_row.iter().enumerate() {
                        row[slot(&min.id, j)] -= mij;
                    }
                    rows.push(row);
                }
            }
        }
        2 => rows.push(abbv_constraint_deg2(g)?.coefficients),
        _ => {}
    }
    Ok((layout, rows))
}

/// A basis of the degree-k part of the image, in canonical echelon form.
pub fn image_basis(g: &DecoratedGraph, k: u32) -> Result<GradedBasis> {
    image_basis_with_cutoff(g, k, DEFAULT_MAX_DEGREE)
}

pub fn image_basis_with_cutoff(g: &DecoratedGraph, k: u32, max_degree: u32) -> Result<GradedBasis> {
    if k > max_degree {
        return Err(Error::CutoffExceeded {
            degree: k,
            cutoff: max_degree,
        });
    }
    let (layout, rows) = image_constraints(g, k)?;
    Ok(GradedBasis::from_constraints(layout, &rows))
}
