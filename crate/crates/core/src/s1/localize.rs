use std::collections::BTreeMap;

use crate::class::{ComponentClass, DegreeLayout, EquivariantClass};
use crate::error::{Error, Result};
use crate::graph::DecoratedGraph;
use crate::laurent::LaurentQ;
use crate::rational::Rational;

use super::{check_circle_class, inverse_euler};

/// `Σ_F π^F_*(α|_F · e(ν_F)⁻¹)` for arbitrary inverse Euler data. Points
/// contribute their product directly, surfaces the `[Σ]`-coefficient.
pub fn localization_sum(
    alpha: &EquivariantClass,
    inverses: &BTreeMap<String, ComponentClass>,
) -> Result<LaurentQ> {
    let mut total = LaurentQ::zero(alpha.rank(), ());
    for (id, inv) in inverses {
        let a = alpha
            .get(id)
            .ok_or_else(|| Error::Addressing(format!("component `{id}` has no class")))?;
        let term = match (a, inv) {
            (ComponentClass::Point(x), ComponentClass::Point(y)) => x.try_mul(y)?,
            (ComponentClass::Surface(x), ComponentClass::Surface(y)) => x.try_mul(y)?.integrate(),
            _ => {
                return Err(Error::DomainMismatch(format!(
                    "component `{id}`: class and Euler data have different kinds"
                )))
            }
        };
        total = total.try_add(&term)?;
    }
    Ok(total)
}

pub(crate) fn inverse_eulers(g: &DecoratedGraph) -> Result<BTreeMap<String, ComponentClass>> {
    g.components()
        .map(|c| Ok((c.id().to_string(), inverse_euler(g, c.id())?)))
        .collect()
}

/// The localization of a circle class: a Laurent polynomial in `u`, which is
/// a genuine polynomial exactly when the class satisfies the localization
/// condition.
pub fn localize(g: &DecoratedGraph, alpha: &EquivariantClass) -> Result<LaurentQ> {
    check_circle_class(g, alpha)?;
    localization_sum(alpha, &inverse_eulers(g)?)
}

/// A linear functional on the degree-k slots of the fixed-set cohomology.
#[derive(Clone, Debug)]
pub struct DegreeFunctional {
    pub layout: DegreeLayout,
    pub coefficients: Vec<Rational>,
}

impl DegreeFunctional {
    pub fn evaluate(&self, alpha: &EquivariantClass) -> Rational {
        self.layout
            .coords(alpha)
            .iter()
            .zip(&self.coefficients)
            .map(|(x, c)| x * c)
            .sum()
    }

    /// Nonzero terms as `(slot label, coefficient)`.
    pub fn terms(&self) -> Vec<(String, Rational)> {
        self.layout
            .slots()
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (self.layout.label(s), c.clone()))
            .collect()
    }
}

/// The degree-2 localization condition as a functional: the `u⁻¹`
/// coefficient of the localization of each unit tuple.
pub fn abbv_constraint_deg2(g: &DecoratedGraph) -> Result<DegreeFunctional> {
    let layout = DegreeLayout::new(&g.catalogue(), 1, 2);
    let inverses = inverse_eulers(g)?;
    let coefficients = (0..layout.len())
        .map(|i| Ok(localization_sum(&layout.unit(i), &inverses)?.coefficient(&[-1])))
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeFunctional {
        layout,
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::Part;
    use crate::fixtures;
    use crate::graph::Position;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn constant_localizes_to_zero() {
        for (name, g) in fixtures::all_graphs() {
            let one = EquivariantClass::constant(&g.catalogue(), 1, &Rational::one());
            assert!(localize(&g, &one).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn u_at_a_single_vertex() {
        let g = fixtures::g1();
        let layout = DegreeLayout::new(&g.catalogue(), 1, 2);
        let i = layout.index_of("A", &Part::Point, &[1]).unwrap();
        let loc = localize(&g, &layout.unit(i)).unwrap();
        assert_eq!(loc, LaurentQ::univariate(-1, q(1, 2)));
    }

    #[test]
    fn equal_tops_cancel_on_g2() {
        let g = fixtures::g2(0, 1.into(), 1.into());
        let layout = DegreeLayout::new(&g.catalogue(), 1, 2);
        let mut v = vec![Rational::zero(); layout.len()];
        v[layout.index_of("Smin", &Part::H2, &[0]).unwrap()] = Rational::one();
        v[layout.index_of("Smax", &Part::H2, &[0]).unwrap()] = Rational::one();
        assert!(localize(&g, &layout.class_from(&v)).unwrap().is_zero());
    }

    fn functional(g: &DecoratedGraph) -> BTreeMap<String, Rational> {
        abbv_constraint_deg2(g).unwrap().terms().into_iter().collect()
    }

    #[test]
    fn functional_examples() {
        let f = functional(&fixtures::g2(0, 1.into(), 1.into()));
        assert_eq!(f.len(), 2);
        assert_eq!(f["Smax.[S]"], q(1, 1));
        assert_eq!(f["Smin.[S]"], q(-1, 1));

        let f = functional(&fixtures::g1());
        assert_eq!(f["A*u"], q(1, 2));
        assert_eq!(f["B*u"], q(-1, 1));
        assert_eq!(f["C*u"], q(1, 2));

        let f = functional(&fixtures::g3());
        assert_eq!(f["p*u"], q(1, 1));
        assert_eq!(f["L.[S]"], q(1, 1));
        assert_eq!(f["L.1*u"], q(-1, 1));
    }

    /// With surface extrema and interior points only, the functional is the
    /// classical relation `Σ −c_p e_p + (a_max − b_max e_max) − (a_min + b_min e_min)`.
    #[test]
    fn matches_classical_relation_with_surface_extrema() {
        for g in [
            fixtures::g2(1, 2.into(), 4.into()),
            fixtures::g4(0, 2.into(), q(1, 2)),
            fixtures::g4(2, 3.into(), q(1, 3)),
        ] {
            let f = abbv_constraint_deg2(&g).unwrap();
            let (e_min, e_max) = crate::graph::extremal_self_intersections(&g).unwrap();
            let mut expected = BTreeMap::new();
            for p in g.interior_points() {
                expected.insert(format!("{}*u", p.id), -p.inverse_weight_magnitude());
            }
            let min = g.surface_at(Position::Min).unwrap();
            let max = g.surface_at(Position::Max).unwrap();
            expected.insert(format!("{}.[S]", max.id), Rational::one());
            expected.insert(format!("{}.1*u", max.id), -e_max.clone());
            expected.insert(format!("{}.[S]", min.id), -Rational::one());
            expected.insert(format!("{}.1*u", min.id), -e_min.clone());
            expected.retain(|_, v| !v.is_zero());
            let got: BTreeMap<String, Rational> = f.terms().into_iter().collect();
            assert_eq!(got, expected);
        }
    }
}
