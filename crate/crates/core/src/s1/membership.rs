use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class::{DegreeLayout, EquivariantClass, Part};
use crate::error::Result;
use crate::graph::{DecoratedGraph, Position};
use crate::laurent::LaurentQ;
use crate::rational::Rational;

use super::localize::{abbv_constraint_deg2, inverse_eulers, localization_sum};
use super::check_circle_class;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Degree0Constancy,
    Degree1SurfaceMatch,
    AbbvDegree2,
    LocalizationPole,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::Degree0Constancy => "degree0-constancy",
            ViolationKind::Degree1SurfaceMatch => "degree1-surface-match",
            ViolationKind::AbbvDegree2 => "abbv-degree2",
            ViolationKind::LocalizationPole => "localization-pole",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MembershipViolation {
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
enum Verdict {
    Member,
    NotMember,
}

/// Outcome of a membership test; a member has no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MembershipDecision {
    violations: Vec<MembershipViolation>,
}

impl MembershipDecision {
    pub fn new(mut violations: Vec<MembershipViolation>) -> Self {
        violations.sort();
        violations.dedup();
        MembershipDecision { violations }
    }

    pub fn is_member(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[MembershipViolation] {
        &self.violations
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    /// The set of violated kinds, ignoring details.
    pub fn kinds(&self) -> Vec<ViolationKind> {
        let mut k: Vec<_> = self.violations.iter().map(|v| v.kind).collect();
        k.dedup();
        k
    }
}

impl Serialize for MembershipDecision {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            verdict: Verdict,
            violations: &'a [MembershipViolation],
        }
        Doc {
            verdict: if self.is_member() { Verdict::Member } else { Verdict::NotMember },
            violations: &self.violations,
        }
        .serialize(s)
    }
}

impl fmt::Display for MembershipDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_member() {
            return f.write_str("member");
        }
        f.write_str("not-member")?;
        for v in &self.violations {
            write!(f, "\n  [{}] {}", v.kind.as_str(), v.detail)?;
        }
        Ok(())
    }
}

pub(crate) fn pole_detail(k: u32, loc: &LaurentQ) -> String {
    format!("degree-{k} part localizes to {loc}, which has negative powers")
}

/// Decide whether a circle class on the fixed set is the restriction of a
/// global equivariant class: equal degree-0 parts, matching degree-1 parts
/// on the two surfaces, the degree-2 localization relation, and (as a cross
/// check) polynomial localization of every homogeneous part.
pub fn check_membership(g: &DecoratedGraph, alpha: &EquivariantClass) -> Result<MembershipDecision> {
    let catalogue = check_circle_class(g, alpha)?;
    let mut violations = Vec::new();

    // (0) constant degree-0 part
    let layout0 = DegreeLayout::new(&catalogue, 1, 0);
    let values = layout0.coords(alpha);
    if values.windows(2).any(|w| w[0] != w[1]) {
        let listed: Vec<String> = layout0
            .slots()
            .iter()
            .zip(&values)
            .map(|(s, v)| format!("{}={v}", s.component))
            .collect();
        violations.push(MembershipViolation {
            kind: ViolationKind::Degree0Constancy,
            detail: format!("degree-0 parts differ: {}", listed.join(", ")),
        });
    }

    // (1) degree-1 parts agree on the surfaces under the identification
    if let (Some(min), Some(max)) = (g.surface_at(Position::Min), g.surface_at(Position::Max)) {
        let n = 2 * g.genus() as usize;
        if n > 0 {
            let layout1 = DegreeLayout::new(&catalogue, 1, 1);
            let coords = layout1.coords(alpha);
            let part = |id: &str| -> Vec<Rational> {
                (0..n)
                    .map(|i| coords[layout1.index_of(id, &Part::H1(i), &[0]).expect("slot")].clone())
                    .collect()
            };
            let lo = part(&min.id);
            let hi = part(&max.id);
            let mapped = crate::linalg::mat_vec(&g.identification_matrix(), &lo);
            if mapped != hi {
                violations.push(MembershipViolation {
                    kind: ViolationKind::Degree1SurfaceMatch,
                    detail: format!(
                        "H^1 part on `{}` is {:?}, the identified part from `{}` is {:?}",
                        max.id,
                        hi.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        min.id,
                        mapped.iter().map(ToString::to_string).collect::<Vec<_>>()
                    ),
                });
            }
        }
    }

    // (2) degree-2 localization relation
    let functional = abbv_constraint_deg2(g)?;
    let value = functional.evaluate(alpha);
    if !value.is_zero() {
        violations.push(MembershipViolation {
            kind: ViolationKind::AbbvDegree2,
            detail: format!("degree-2 localization relation evaluates to {value}, expected 0"),
        });
    }

    // localization of each homogeneous part is a polynomial
    let inverses = inverse_eulers(g)?;
    for k in 0..=alpha.max_degree().unwrap_or(0) {
        let part = alpha.homogeneous(k);
        if part.is_zero() {
            continue;
        }
        let loc = localization_sum(&part, &inverses)?;
        if !loc.is_polynomial() {
            violations.push(MembershipViolation {
                kind: ViolationKind::LocalizationPole,
                detail: pole_detail(k, &loc),
            });
        }
    }
    Ok(MembershipDecision::new(violations))
}
