//! Torus actions on four-manifolds in which a codimension-one subtorus `K`
//! acts trivially, and the per-piece conditions shared with x-rays.
//!
//! The character `λ` spans the annihilator of `Lie(K)`. Extending `λ` to a
//! unimodular basis gives coordinates `v` with `λ·u = v₁`, so divisibility by
//! `λ·u` becomes "every term has positive `v₁` degree" and all Euler data is
//! univariate in `v₁`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::class::{ComponentClass, EquivariantClass};
use crate::error::{Error, Result};
use crate::graph::{DecoratedGraph, Position};
use crate::laurent::{Exponent, LaurentQ};
use crate::rational::Rational;
use crate::s1::{self, MembershipDecision, MembershipViolation, ViolationKind};

pub fn is_primitive(lambda: &[i64]) -> bool {
    lambda.iter().fold(0i64, |g, x| g.gcd(x)) == 1
}

fn check_character(lambda: &[i64]) -> Result<()> {
    if lambda.is_empty() || !is_primitive(lambda) {
        return Err(Error::Input(format!("character {lambda:?} is not primitive")));
    }
    Ok(())
}

/// An integer matrix `U` with `det U = ±1` and `λ·U = e₁`, built from
/// integer column operations. Substituting `u = U v` turns `λ·u` into `v₁`.
pub fn unimodular_completion(lambda: &[i64]) -> Result<Vec<Vec<i64>>> {
    check_character(lambda)?;
    let n = lambda.len();
    let mut row = lambda.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| row[j] != 0).collect();
        if nonzero.len() == 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&j| row[j].abs()).expect("nonzero entry");
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = row[j] / row[p];
            row[j] -= q * row[p];
            for r in u.iter_mut() {
                r[j] -= q * r[p];
            }
        }
    }
    let p = (0..n).find(|&j| row[j] != 0).expect("nonzero entry");
    row.swap(0, p);
    for r in u.iter_mut() {
        r.swap(0, p);
    }
    if row[0] < 0 {
        for r in u.iter_mut() {
            r[0] = -r[0];
        }
    }
    Ok(u)
}

/// Identifies one linear condition on a class: which kind of condition, a
/// label for the pair or slot involved, and a monomial in the adapted
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct DefectKey {
    pub kind: ViolationKind,
    pub label: String,
    pub exponent: Exponent,
}

/// The membership conditions of one piece of the one-skeleton.
#[derive(Clone, Debug)]
pub(crate) struct PieceConditions {
    pub context: Option<String>,
    change: Vec<Vec<i64>>,
    members: Vec<String>,
    /// `(min, max, M)` for two fixed surfaces of positive genus.
    surfaces: Option<(String, String, Vec<Vec<Rational>>)>,
    /// Inverse Euler classes in the adapted coordinates.
    inverses: Option<BTreeMap<String, ComponentClass>>,
}

impl PieceConditions {
    /// A four-dimensional piece with its induced circle graph.
    pub fn from_graph(g: &DecoratedGraph, lambda: &[i64], members: Vec<String>) -> Result<Self> {
        let change = unimodular_completion(lambda)?;
        let rank = lambda.len();
        let surfaces = match (g.surface_at(Position::Min), g.surface_at(Position::Max)) {
            (Some(lo), Some(hi)) if g.genus() > 0 => {
                Some((lo.id.clone(), hi.id.clone(), g.identification_matrix()))
            }
            _ => None,
        };
        let inverses = s1::inverse_eulers(g)?
            .into_iter()
            .map(|(id, c)| (id, c.with_vars(rank)))
            .collect();
        Ok(PieceConditions {
            context: None,
            change,
            members,
            surfaces,
            inverses: Some(inverses),
        })
    }

    /// A two-sphere joining two isolated points: divisibility only.
    pub fn sphere(lambda: &[i64], members: Vec<String>) -> Result<Self> {
        Ok(PieceConditions {
            context: None,
            change: unimodular_completion(lambda)?,
            members,
            surfaces: None,
            inverses: None,
        })
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        self.context = Some(context.into());
        self
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    /// Every nonzero linear defect of a class. The class must assign a
    /// class to every member; other components are ignored. The map is
    /// linear in the class, so the keys index constraint rows.
    pub fn defects(&self, alpha: &EquivariantClass) -> Result<BTreeMap<DefectKey, Rational>> {
        let local = alpha.restricted(&self.members)?.substitute_linear(&self.change)?;
        let mut out = BTreeMap::new();
        let mut record = |kind, label: &str, p: &LaurentQ, keep: &dyn Fn(&[i32]) -> bool| {
            for (e, c) in p.terms() {
                if keep(e) {
                    out.insert(
                        DefectKey {
                            kind,
                            label: label.to_string(),
                            exponent: e.clone(),
                        },
                        c.clone(),
                    );
                }
            }
        };
        let unit_free = |e: &[i32]| e[0] == 0;

        let first = &self.members[0];
        let base = local.get(first).expect("restricted").h0_part();
        for m in &self.members[1..] {
            let d = local.get(m).expect("restricted").h0_part().try_sub(&base)?;
            record(ViolationKind::Degree0Constancy, &format!("{m}-{first}"), &d, &unit_free);
        }

        if let Some((lo, hi, matrix)) = &self.surfaces {
            let lo_parts = local.get(lo).expect("restricted").h1_parts();
            let hi_parts = local.get(hi).expect("restricted").h1_parts();
            for (i, row) in matrix.iter().enumerate() {
                let mut d = hi_parts[i].clone();
                for (j, mij) in row.iter().enumerate() {
                    d = d.try_sub(&lo_parts[j].scaled(mij))?;
                }
                record(
                    ViolationKind::Degree1SurfaceMatch,
                    &format!("{hi}-{lo}.h1[{i}]"),
                    &d,
                    &unit_free,
                );
            }
        }

        if let Some(inverses) = &self.inverses {
            let loc = s1::localization_sum(&local, inverses)?;
            record(ViolationKind::LocalizationPole, "", &loc, &|e: &[i32]| e[0] < 0);
        }
        Ok(out)
    }

    /// Violations of a possibly inhomogeneous class, decided degreewise.
    pub fn violations(&self, alpha: &EquivariantClass) -> Result<Vec<MembershipViolation>> {
        let restricted = alpha.restricted(&self.members)?;
        let prefix = self
            .context
            .as_ref()
            .map(|c| format!("{c}: "))
            .unwrap_or_default();
        let mut out = Vec::new();
        for k in 0..=restricted.max_degree().unwrap_or(0) {
            let part = restricted.homogeneous(k);
            if part.is_zero() {
                continue;
            }
            let defects = self.defects(&part)?;
            let mut labels: BTreeMap<(ViolationKind, &str), usize> = BTreeMap::new();
            for key in defects.keys() {
                *labels.entry((key.kind, key.label.as_str())).or_default() += 1;
            }
            for (kind, label) in labels.into_keys() {
                let detail = match kind {
                    ViolationKind::Degree0Constancy => {
                        let (m, f) = label.split_once('-').unwrap_or((label, ""));
                        format!("{prefix}degree-{k} parts at `{m}` and `{f}` differ by a class not divisible by λ·u")
                    }
                    ViolationKind::Degree1SurfaceMatch => format!(
                        "{prefix}degree-{k} H^1 parts {label} differ by a class not divisible by λ·u"
                    ),
                    _ => format!("{prefix}degree-{k} part localizes with negative powers of λ·u"),
                };
                out.push(MembershipViolation { kind, detail });
                if kind == ViolationKind::LocalizationPole && k == 2 {
                    out.push(MembershipViolation {
                        kind: ViolationKind::AbbvDegree2,
                        detail: format!("{prefix}degree-2 localization relation fails"),
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Membership for a torus of rank `lambda.len()` acting on the manifold of
/// `g` through the character `λ`, with classes in `H*(F) ⊗ ℚ[u₁…u_r]`.
pub fn check_membership_t(
    g: &DecoratedGraph,
    lambda: &[i64],
    alpha: &EquivariantClass,
) -> Result<MembershipDecision> {
    check_character(lambda)?;
    if alpha.rank() != lambda.len() {
        return Err(Error::DomainMismatch(format!(
            "class has {} equivariant variables, the character has {}",
            alpha.rank(),
            lambda.len()
        )));
    }
    let catalogue = g.catalogue();
    alpha.check_addressing(&catalogue)?;
    let piece = PieceConditions::from_graph(g, lambda, catalogue.keys().cloned().collect())?;
    Ok(MembershipDecision::new(piece.violations(alpha)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{DegreeLayout, Part};
    use crate::fixtures;
    use crate::s1::check_membership;
    use proptest::prelude::*;

    fn det(m: &[Vec<i64>]) -> Rational {
        let mut a: Vec<Vec<Rational>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        let n = a.len();
        let mut d = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                d = -d;
            }
            d = &d * &a[c][c];
            for r in c + 1..n {
                let f = &a[r][c] / &a[c][c];
                for j in c..n {
                    let v = &a[c][j] * &f;
                    a[r][j] -= &v;
                }
            }
        }
        d
    }

    proptest! {
        #[test]
        fn completion_is_unimodular(lambda in proptest::collection::vec(-30i64..30, 1..5)) {
            prop_assume!(is_primitive(&lambda));
            let u = unimodular_completion(&lambda).unwrap();
            let n = lambda.len();
            for j in 0..n {
                let entry: i64 = (0..n).map(|i| lambda[i] * u[i][j]).sum();
                prop_assert_eq!(entry, i64::from(j == 0));
            }
            prop_assert_eq!(det(&u).abs(), Rational::one());
        }
    }

    #[test]
    fn non_primitive_characters_rejected() {
        assert!(unimodular_completion(&[2, 0]).is_err());
        assert!(unimodular_completion(&[0, 0]).is_err());
        assert!(unimodular_completion(&[]).is_err());
        let g = fixtures::g1();
        let c = EquivariantClass::constant(&g.catalogue(), 2, &Rational::one());
        assert!(check_membership_t(&g, &[2, 4], &c).is_err());
    }

    #[test]
    fn constants_are_members() {
        for (_, g) in fixtures::all_graphs() {
            let c = EquivariantClass::constant(&g.catalogue(), 2, &Rational::from(3));
            assert!(check_membership_t(&g, &[1, 0], &c).unwrap().is_member());
            assert!(check_membership_t(&g, &[2, -3], &c).unwrap().is_member());
        }
    }

    #[test]
    fn difference_u2_is_not_divisible_by_u1() {
        let g = fixtures::g1();
        let layout = DegreeLayout::new(&g.catalogue(), 2, 2);
        let alpha = layout.unit(layout.index_of("A", &Part::Point, &[0, 1]).unwrap());
        let d = check_membership_t(&g, &[1, 0], &alpha).unwrap();
        assert!(d.has(ViolationKind::Degree0Constancy));
        // u₂ everywhere is the pullback of a class from the trivially acting factor
        let everywhere = EquivariantClass::constant(&g.catalogue(), 2, &Rational::one())
            .times_monomial(&[0, 1]);
        assert!(check_membership_t(&g, &[1, 0], &everywhere).unwrap().is_member());
    }

    #[test]
    fn localization_in_the_character_direction() {
        // G2(0): a_max = a_min is needed; with λ = (1, 1), multiples of u₂
        // from the trivially acting direction also enter
        let g = fixtures::g2(0, 1.into(), 1.into());
        let layout = DegreeLayout::new(&g.catalogue(), 2, 2);
        let top = |id: &str| layout.unit(layout.index_of(id, &Part::H2, &[0, 0]).unwrap());
        let equal = top("Smin").try_add(&top("Smax")).unwrap();
        assert!(check_membership_t(&g, &[1, 1], &equal).unwrap().is_member());
        let d = check_membership_t(&g, &[1, 1], &top("Smin")).unwrap();
        assert!(d.has(ViolationKind::AbbvDegree2));
        assert!(d.has(ViolationKind::LocalizationPole));
    }

    fn random_circle_class(layouts: &[DegreeLayout], coeffs: &[i64]) -> EquivariantClass {
        let mut it = coeffs.iter().cycle();
        let mut total: Option<EquivariantClass> = None;
        for layout in layouts {
            let v: Vec<Rational> = (0..layout.len()).map(|_| Rational::from(*it.next().unwrap())).collect();
            let c = layout.class_from(&v);
            total = Some(match total {
                None => c,
                Some(t) => t.try_add(&c).unwrap(),
            });
        }
        total.unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn rank_one_agrees_with_circle_check(
            which in 0usize..9,
            coeffs in proptest::collection::vec(-2i64..=2, 1..24),
            top in 0u32..5,
        ) {
            let (_, g) = fixtures::all_graphs().swap_remove(which);
            let layouts: Vec<DegreeLayout> =
                (0..=top).map(|k| DegreeLayout::new(&g.catalogue(), 1, k)).collect();
            let alpha = random_circle_class(&layouts, &coeffs);
            let s1 = check_membership(&g, &alpha).unwrap();
            let t = check_membership_t(&g, &[1], &alpha).unwrap();
            prop_assert_eq!(s1.is_member(), t.is_member());
            prop_assert_eq!(s1.kinds(), t.kinds());
        }
    }

    #[test]
    fn defects_are_linear() {
        let g = fixtures::g4(1, 2.into(), Rational::new(1, 2));
        let piece = PieceConditions::from_graph(&g, &[1, 2], g.catalogue().keys().cloned().collect()).unwrap();
        let layout = DegreeLayout::new(&g.catalogue(), 2, 2);
        let a = layout.unit(0);
        let b = layout.unit(layout.len() - 1);
        let da = piece.defects(&a).unwrap();
        let db = piece.defects(&b).unwrap();
        let dab = piece.defects(&a.try_add(&b).unwrap()).unwrap();
        let mut sum = da.clone();
        for (k, v) in db {
            let e = sum.entry(k).or_insert_with(Rational::zero);
            *e += &v;
        }
        sum.retain(|_, v| !v.is_zero());
        assert_eq!(sum, dab);
    }
}
